#include "rgr/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rgr {

namespace {

int local_id(const std::vector<int>& verts, int parent_vertex) {
    auto it = std::lower_bound(verts.begin(), verts.end(), parent_vertex);
    return static_cast<int>(it - verts.begin());
}

Piece induced_piece(const Digraph& d, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    Piece p;
    p.d = d.induced(verts);
    p.to_parent = verts;
    return p;
}

std::set<int> reach_across_set(const Digraph& d, int w, const std::vector<int>& far) {
    std::set<int> out;
    for (int x : far)
        if (x != w && d.arc(w, x)) out.insert(x);
    return out;
}

}  // namespace

SplitOutcome split_nonspecial(const Digraph& d, const BridgeInfo& b) {
    SplitOutcome s;
    s.u = b.u;
    s.v = b.v;
    s.special = false;
    std::vector<int> vu = b.side_u;
    vu.push_back(b.v);
    std::vector<int> vv = b.side_v;
    vv.push_back(b.u);
    s.piece_u = induced_piece(d, vu);
    s.piece_v = induced_piece(d, vv);
    return s;
}

std::optional<SplitOutcome> split_special(const Digraph& d, const BridgeInfo& b, std::string* why) {
    ReachClasses rc = plausible_reachability(d, b);
    if (!rc.ok) {
        if (why) *why = "special bridge without plausible reachability: " + rc.why;
        return std::nullopt;
    }
    SplitOutcome s;
    s.u = b.u;
    s.v = b.v;
    s.special = true;

    // Leaves of piece_u hang off v; out-leaf exists iff the u-side has a
    // witness pair, in-leaf iff the v-side has one.
    auto build = [&](int u, int v, const std::vector<int>& su, const std::vector<int>& sv,
                     const ReachClasses::Side& here, const ReachClasses::Side& far_side_w, bool& out_flag,
                     bool& in_flag) {
        std::vector<int> verts = su;
        verts.push_back(v);
        std::sort(verts.begin(), verts.end());
        int base = static_cast<int>(verts.size());
        int extra = (here.has_witness ? 1 : 0) + (far_side_w.has_witness ? 1 : 0);
        Digraph pd(base + extra);
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = 0; j < verts.size(); ++j)
                if (i != j && d.arc(verts[i], verts[j])) pd.add_arc((int)i, (int)j);
        int lv = local_id(verts, v);
        int z = -1, zp = -1;
        if (here.has_witness) {
            // Out-leaf z: reached exactly by v and the full-class vertices.
            z = base;
            out_flag = true;
            pd.add_arc(z, lv);
            pd.add_arc(lv, z);
            for (int w : su)
                if (reach_across_set(d, w, sv) == here.full) pd.add_arc(local_id(verts, w), z);
        }
        if (far_side_w.has_witness) {
            // In-leaf z': reaches v and the mid reach class of the far side.
            zp = base + (z >= 0 ? 1 : 0);
            in_flag = true;
            pd.add_arc(lv, zp);
            pd.add_arc(zp, lv);
            for (int w : far_side_w.mid) pd.add_arc(zp, local_id(verts, w));
            if (z >= 0) pd.add_arc(zp, z);
        }
        Piece p;
        p.d = pd;
        p.to_parent = verts;
        for (int i = 0; i < extra; ++i) p.to_parent.push_back(-1);
        return p;
    };
    s.piece_u = build(b.u, b.v, b.side_u, b.side_v, rc.from_u, rc.from_v, s.u_out_leaf, s.u_in_leaf);
    s.piece_v = build(b.v, b.u, b.side_v, b.side_u, rc.from_v, rc.from_u, s.v_out_leaf, s.v_in_leaf);
    return s;
}

PendantRemoval remove_redundant_pendant(const Digraph& d, int v, int w, Variant var) {
    PendantRemoval r;
    SolidGraph g = SolidGraph::of(d);
    if (g.degree(v) != 1 || g.degree(w) != 1 || g.adj[v][0] != g.adj[w][0])
        throw std::invalid_argument("remove_redundant_pendant: not a pendant pair");
    if (d.arc(v, w) || d.arc(w, v))
        throw std::invalid_argument("remove_redundant_pendant: arc between the pendant pair");
    int u = g.adj[v][0];
    if (var.adjacent_noarc_fatal()) {
        r.certified_no = true;
        r.reason = "pendant pair with no arc between them is fatal for this variant";
        return r;
    }
    for (int x = 0; x < d.n(); ++x) {
        if (x == v || x == w) continue;
        if (d.arc(v, x) != d.arc(w, x) || d.arc(x, v) != d.arc(x, w)) {
            r.certified_no = true;
            r.reason = "pendant twins " + std::to_string(v) + "," + std::to_string(w) +
                       " must share a label but differ on vertex " + std::to_string(x);
            return r;
        }
    }
    std::vector<int> verts;
    for (int x = 0; x < d.n(); ++x)
        if (x != v) verts.push_back(x);
    Piece p = induced_piece(d, verts);
    r.reduced = p.d;
    r.to_parent = p.to_parent;
    r.u = u;
    r.removed = v;
    r.kept = w;
    return r;
}

namespace {

// v-side of a special bridge already in leaf normal form: v plus at most two
// degree-1 neighbors of v.
bool side_normal_form(const SolidGraph& g, int v, const std::vector<int>& side) {
    if (side.size() > 3) return false;
    for (int x : side) {
        if (x == v) continue;
        if (g.degree(x) != 1 || g.adj[x][0] != v) return false;
    }
    return true;
}

bool side_is_tree(const Digraph& d, const std::vector<int>& side) {
    Digraph sub = d.induced(side);
    return SolidGraph::of(sub).is_tree();
}

struct Op {
    enum class Kind { None, No, PendantRemove, SplitNonSpecial, SplitSpecial } kind = Kind::None;
    std::string reason;
    PendantRemoval pr;
    SplitOutcome so;
};

Op next_op(const Digraph& d, Variant var, SplitMode mode) {
    Op op;
    SolidGraph g = SolidGraph::of(d);
    // Every arc needs a dense path; the splitting lemmas presuppose it, and a
    // violating arc can never be realized. Budget exhaustion skips the gate.
    for (auto& [u, v] : d.arcs()) {
        auto dp = dense_path_exists(d, u, v, {}, 200000);
        if (dp == DensePath::No) {
            op.kind = Op::Kind::No;
            op.reason = "arc (" + std::to_string(u) + "," + std::to_string(v) +
                        ") admits no dense path";
            return op;
        }
    }
    // Pendant twins with no arc between them.
    for (int u = 0; u < d.n(); ++u) {
        const auto& nb = g.adj[u];
        for (size_t i = 0; i < nb.size(); ++i) {
            if (g.degree(nb[i]) != 1) continue;
            for (size_t j = i + 1; j < nb.size(); ++j) {
                if (g.degree(nb[j]) != 1) continue;
                if (d.arc(nb[i], nb[j]) || d.arc(nb[j], nb[i])) continue;
                op.pr = remove_redundant_pendant(d, nb[i], nb[j], var);
                if (op.pr.certified_no) {
                    op.kind = Op::Kind::No;
                    op.reason = op.pr.reason;
                } else {
                    op.kind = Op::Kind::PendantRemove;
                }
                return op;
            }
        }
    }
    auto bs = bridges(g);
    for (auto& b : bs) classify_bridge(d, b);
    if (!var.allows_special_edges()) {
        for (auto& b : bs)
            if (b.kind == BridgeKind::Special) {
                op.kind = Op::Kind::No;
                op.reason = "special solid edge {" + std::to_string(b.u) + "," + std::to_string(b.v) +
                            "} is fatal for this variant";
                return op;
            }
    } else if (mode == SplitMode::Full) {
        // Special bridges first; they can certify NO early. Only split when a
        // side is a tree not yet in leaf normal form, which guarantees progress.
        for (auto& b : bs) {
            if (b.kind != BridgeKind::Special) continue;
            std::string why;
            bool tree_u = side_is_tree(d, b.side_u), tree_v = side_is_tree(d, b.side_v);
            bool useful = (tree_u && !side_normal_form(g, b.u, b.side_u)) ||
                          (tree_v && !side_normal_form(g, b.v, b.side_v));
            if (!useful) {
                // Still validate plausibility; a failure certifies NO.
                ReachClasses rc = plausible_reachability(d, b);
                if (!rc.ok) {
                    op.kind = Op::Kind::No;
                    op.reason = "special bridge {" + std::to_string(b.u) + "," + std::to_string(b.v) +
                                "}: " + rc.why;
                    return op;
                }
                continue;
            }
            auto so = split_special(d, b, &why);
            if (!so) {
                op.kind = Op::Kind::No;
                op.reason = why;
                return op;
            }
            // Guard: both pieces must shrink, otherwise skip (termination).
            if (so->piece_u.d.n() >= d.n() || so->piece_v.d.n() >= d.n()) continue;
            op.kind = Op::Kind::SplitSpecial;
            op.so = *so;
            return op;
        }
    }
    // Non-special bridges, innermost first (max of the smaller side).
    const BridgeInfo* best = nullptr;
    size_t best_size = 0;
    for (auto& b : bs) {
        if (b.kind != BridgeKind::NonSpecial) continue;
        size_t small = std::min(b.side_u.size(), b.side_v.size());
        if (small < 2) continue;  // pendant bridges stay
        if (!best || small > best_size) {
            best = &b;
            best_size = small;
        }
    }
    if (best) {
        op.kind = Op::Kind::SplitNonSpecial;
        op.so = split_nonspecial(d, *best);
    }
    return op;
}

void compose_map(Piece& child, const std::vector<int>& parent_map) {
    for (int& x : child.to_parent)
        if (x >= 0) x = parent_map[x];
}

}  // namespace

ExhaustOutcome exhaust_splits(const Digraph& d, Variant var, SplitMode mode) {
    ExhaustOutcome out;
    // Connected components are independent unless a dashed arc crosses them.
    SolidGraph g = SolidGraph::of(d);
    auto comps = g.components();
    if (comps.size() > 1) {
        std::vector<int> comp_of(d.n());
        for (size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
        for (auto& [u, v] : d.arcs())
            if (comp_of[u] != comp_of[v]) {
                out.certified_no = true;
                out.reason = "dashed arc (" + std::to_string(u) + "," + std::to_string(v) +
                             ") between different solid components";
                return out;
            }
        for (auto& comp : comps) {
            Piece p = induced_piece(d, comp);
            auto sub = exhaust_splits(p.d, var, mode);
            if (sub.certified_no) return sub;
            for (auto& q : sub.pieces) {
                compose_map(q, p.to_parent);
                out.pieces.push_back(std::move(q));
            }
        }
        return out;
    }
    Op op = next_op(d, var, mode);
    switch (op.kind) {
        case Op::Kind::No:
            out.certified_no = true;
            out.reason = op.reason;
            return out;
        case Op::Kind::None: {
            Piece p;
            p.d = d;
            p.to_parent.resize(d.n());
            for (int i = 0; i < d.n(); ++i) p.to_parent[i] = i;
            out.pieces.push_back(std::move(p));
            return out;
        }
        case Op::Kind::PendantRemove: {
            auto sub = exhaust_splits(op.pr.reduced, var, mode);
            if (sub.certified_no) return sub;
            for (auto& q : sub.pieces) {
                compose_map(q, op.pr.to_parent);
                out.pieces.push_back(std::move(q));
            }
            return out;
        }
        default: {
            for (Piece* piece : {&op.so.piece_u, &op.so.piece_v}) {
                auto sub = exhaust_splits(piece->d, var, mode);
                if (sub.certified_no) return sub;
                for (auto& q : sub.pieces) {
                    compose_map(q, piece->to_parent);
                    out.pieces.push_back(std::move(q));
                }
            }
            return out;
        }
    }
}

std::optional<std::pair<Labeling, Labeling>> align_two_labelings(
    const Labeling& a, const Labeling& b, const std::vector<std::pair<int, int>>& anchors) {
    // Anchor value sequences must have equal length and matching per-slot ranks.
    std::set<Label> av_set, bv_set;
    for (auto& [u, v] : anchors) {
        const auto &la = a.labels(u, v), &lb = b.labels(u, v);
        if (la.size() != lb.size() || la.empty()) return std::nullopt;
        av_set.insert(la.begin(), la.end());
        bv_set.insert(lb.begin(), lb.end());
    }
    std::vector<Label> av(av_set.begin(), av_set.end()), bv(bv_set.begin(), bv_set.end());
    if (av.size() != bv.size()) return std::nullopt;
    auto rank = [](const std::vector<Label>& vals, Label x) {
        return std::lower_bound(vals.begin(), vals.end(), x) - vals.begin();
    };
    for (auto& [u, v] : anchors) {
        const auto &la = a.labels(u, v), &lb = b.labels(u, v);
        for (size_t i = 0; i < la.size(); ++i)
            if (rank(av, la[i]) != rank(bv, lb[i])) return std::nullopt;
    }
    const int k = static_cast<int>(av.size());
    // Zone z holds values strictly between anchor z-1 and anchor z.
    auto zone_of = [&](const std::vector<Label>& vals, Label x) {
        return static_cast<int>(std::upper_bound(vals.begin(), vals.end(), x) - vals.begin());
    };
    std::vector<std::vector<Label>> za(k + 1), zb(k + 1);
    for (Label x : a.all_values())
        if (!av_set.count(x)) za[zone_of(av, x)].push_back(x);
    for (Label x : b.all_values())
        if (!bv_set.count(x)) zb[zone_of(bv, x)].push_back(x);
    std::map<Label, Label> ma, mb;
    Label base = 0;
    std::vector<Label> anchor_pos(k);
    for (int z = 0; z <= k; ++z) {
        for (size_t t = 0; t < za[z].size(); ++t) ma[za[z][t]] = base + 2 * (Label)t + 1;
        for (size_t t = 0; t < zb[z].size(); ++t) mb[zb[z][t]] = base + 2 * (Label)t + 2;
        base += 2 * (Label)std::max(za[z].size(), zb[z].size()) + 2;
        if (z < k) {
            anchor_pos[z] = ++base;
            ma[av[z]] = anchor_pos[z];
            mb[bv[z]] = anchor_pos[z];
            ++base;
        }
    }
    std::vector<std::pair<Label, Label>> va(ma.begin(), ma.end()), vb(mb.begin(), mb.end());
    return std::make_pair(remap_labels(a, va), remap_labels(b, vb));
}

namespace {

Labeling piece_labeling_to_parent(const Labeling& lab, const std::vector<int>& to_parent,
                                  bool directed) {
    Labeling out(directed);
    for (auto& [k, ls] : lab.entries()) {
        int pu = to_parent[k.first], pv = to_parent[k.second];
        if (pu < 0 || pv < 0) continue;  // attached leaf edge, dropped
        out.set(pu, pv, ls);
    }
    return out;
}

// Shift every label <= alpha (or >= beta) on the given side's edges by delta.
void shift_side(Labeling& lab, const std::set<int>& side, std::pair<int, int> anchor, Label pivot,
                bool below, Label delta) {
    for (auto& [k, ls] : lab.entries()) {
        if (k == anchor) continue;
        if (!side.count(k.first) || !side.count(k.second)) continue;
        for (auto& t : ls)
            if (below ? (t <= pivot) : (t >= pivot)) t += delta;
    }
}

// Merge two aligned piece witnesses of a split back into a parent labeling.
std::optional<Labeling> merge_split_witness(const Digraph& parent, const SplitOutcome& so,
                                            const Labeling& wu, const Labeling& wv, Variant var) {
    Labeling pu = piece_labeling_to_parent(wu, so.piece_u.to_parent, false);
    Labeling pv = piece_labeling_to_parent(wv, so.piece_v.to_parent, false);
    std::pair<int, int> anchor = Labeling::key(false, so.u, so.v);
    auto aligned = align_two_labelings(pu, pv, {anchor});
    if (!aligned) return std::nullopt;
    auto [a, b] = *aligned;
    if (so.special) {
        // Double the scale so the +-1 shifts of the splitting lemma cannot
        // collide or reach zero.
        auto dbl = [](const Labeling& l) {
            std::vector<std::pair<Label, Label>> vm;
            for (Label v : l.all_values()) vm.emplace_back(v, 2 * v + 2);
            return remap_labels(l, vm);
        };
        a = dbl(a);
        b = dbl(b);
        const auto& el = a.labels(so.u, so.v);
        if (el.size() != 2) return std::nullopt;
        Label alpha = el[0], beta = el[1];
        std::set<int> su(so.piece_u.to_parent.begin(), so.piece_u.to_parent.end());
        su.erase(so.v);
        su.erase(-1);
        std::set<int> sv(so.piece_v.to_parent.begin(), so.piece_v.to_parent.end());
        sv.erase(so.u);
        sv.erase(-1);
        auto has_label_at = [&](const Labeling& l, int at, Label t) {
            for (auto& [k, ls] : l.entries()) {
                if (k == anchor) continue;
                if (k.first != at && k.second != at) continue;
                if (std::binary_search(ls.begin(), ls.end(), t)) return true;
            }
            return false;
        };
        if (!so.u_out_leaf && has_label_at(a, so.u, alpha)) shift_side(a, su, anchor, alpha, true, -1);
        if (!so.u_in_leaf && has_label_at(a, so.u, beta)) shift_side(a, su, anchor, beta, false, +1);
        if (!so.v_out_leaf && has_label_at(b, so.v, alpha)) shift_side(b, sv, anchor, alpha, true, -1);
        if (!so.v_in_leaf && has_label_at(b, so.v, beta)) shift_side(b, sv, anchor, beta, false, +1);
    }
    Labeling merged(false);
    for (auto& [k, ls] : a.entries()) merged.set(k.first, k.second, ls);
    for (auto& [k, ls] : b.entries()) {
        if (merged.has_entry(k.first, k.second) && !(merged.labels(k.first, k.second) == ls) &&
            k != anchor)
            return std::nullopt;
        if (!merged.has_entry(k.first, k.second)) merged.set(k.first, k.second, ls);
    }
    return compress_labels(merged);
}

}  // namespace

RealizeResult solve_by_splitting(const Digraph& d, Variant var, SplitMode mode, const LeafSolver& leaf) {
    SolidGraph g = SolidGraph::of(d);
    auto comps = g.components();
    if (comps.size() > 1) {
        std::vector<int> comp_of(d.n());
        for (size_t c = 0; c < comps.size(); ++c)
            for (int v : comps[c]) comp_of[v] = static_cast<int>(c);
        for (auto& [u, v] : d.arcs())
            if (comp_of[u] != comp_of[v])
                return RealizeResult::no_result("split", "dashed arc between solid components");
        Labeling combined(var.directed());
        std::string method = "split";
        for (auto& comp : comps) {
            Piece p = induced_piece(d, comp);
            auto sub = solve_by_splitting(p.d, var, mode, leaf);
            if (!sub.yes()) return sub;
            Labeling mapped = piece_labeling_to_parent(*sub.witness, p.to_parent, var.directed());
            for (auto& [k, ls] : mapped.entries()) combined.set(k.first, k.second, ls);
        }
        return RealizeResult::yes_result(combined, method);
    }
    Op op = next_op(d, var, mode);
    switch (op.kind) {
        case Op::Kind::No:
            return RealizeResult::no_result("split", op.reason);
        case Op::Kind::None:
            return leaf(d, var);
        case Op::Kind::PendantRemove: {
            auto sub = solve_by_splitting(op.pr.reduced, var, mode, leaf);
            if (!sub.yes()) return sub;
            Labeling w = piece_labeling_to_parent(*sub.witness, op.pr.to_parent, false);
            w.set(op.pr.u, op.pr.removed, w.labels(op.pr.u, op.pr.kept));
            return RealizeResult::yes_result(w, sub.method);
        }
        default: {
            auto ru = solve_by_splitting(op.so.piece_u.d, var, mode, leaf);
            if (!ru.yes()) return ru;
            auto rv = solve_by_splitting(op.so.piece_v.d, var, mode, leaf);
            if (!rv.yes()) return rv;
            auto merged = merge_split_witness(d, op.so, *ru.witness, *rv.witness, var);
            if (!merged)
                throw internal_error("split merge failed to align piece witnesses");
            return RealizeResult::yes_result(*merged, "split");
        }
    }
}

Labeling make_frugal(const Digraph& d, const Labeling& lab, Variant var) {
    TemporalGraph tg(d.n(), lab);
    if (!check_realization(d, tg, var).ok)
        throw std::invalid_argument("make_frugal: input labeling does not realize D");
    Labeling cur = lab;
    bool changed = true;
    while (changed) {
        changed = false;
        // Greedy single-label removals.
        for (auto& [k, ls] : cur.entries()) {
            for (size_t i = ls.size(); i-- > 0;) {
                Labeling cand = cur;
                auto& cl = cand.entries()[k];
                cl.erase(cl.begin() + i);
                if (check_realization(d, TemporalGraph(d.n(), cand), var).ok) {
                    cur = cand;
                    changed = true;
                    break;
                }
            }
            if (changed) break;
        }
        if (changed) continue;
        // Midpoint squeeze: a double-labeled non-special bridge collapses to one label.
        SolidGraph g = SolidGraph::of(d);
        auto bs = bridges(g);
        for (auto& b : bs) {
            classify_bridge(d, b);
            if (b.kind != BridgeKind::NonSpecial) continue;
            const auto& ls = cur.labels(b.u, b.v);
            if (ls.size() != 2) continue;
            std::vector<std::pair<Label, Label>> vm;
            for (Label v : cur.all_values()) vm.emplace_back(v, 2 * v);
            Labeling cand = remap_labels(cur, vm);
            cand.set(b.u, b.v, {ls[0] + ls[1]});  // midpoint on the doubled scale
            if (check_realization(d, TemporalGraph(d.n(), cand), var).ok) {
                cur = cand;
                changed = true;
                break;
            }
        }
    }
    return compress_labels(cur);
}

}  // namespace rgr
