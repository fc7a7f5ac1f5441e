#include "rgr/fes.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include "rgr/exact.hpp"

namespace rgr {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const std::vector<int>& v, int x) {
    return std::binary_search(v.begin(), v.end(), x);
}

}  // namespace

int fes_number(const Digraph& d) {
    SolidGraph g = SolidGraph::of(d);
    int comps = static_cast<int>(g.components().size());
    return static_cast<int>(g.edges.size()) - g.n + comps;
}

FesDecomposition compute_decomposition(const Digraph& d) {
    SolidGraph g = SolidGraph::of(d);
    if (!g.connected()) throw std::invalid_argument("compute_decomposition: solid graph disconnected");
    FesDecomposition dec;
    // Minimum feedback edge set: complement of a BFS spanning tree.
    std::vector<char> reached(g.n, 0);
    std::set<std::pair<int, int>> tree_edges;
    {
        std::vector<int> queue{0};
        reached[0] = 1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (int w : g.adj[u])
                if (!reached[w]) {
                    reached[w] = 1;
                    tree_edges.insert({std::min(u, w), std::max(u, w)});
                    queue.push_back(w);
                }
        }
    }
    for (auto& e : g.edges)
        if (!tree_edges.count(e)) dec.feedback.push_back(e);
    std::vector<int> X;
    for (auto& [u, v] : dec.feedback) {
        X.push_back(u);
        X.push_back(v);
    }
    dec.X = sorted_unique(X);

    // 2-core by degree-1 peeling.
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<char> peeled(g.n, 0);
    std::vector<int> stack;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] <= 1) stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (peeled[v] || deg[v] > 1) continue;
        peeled[v] = 1;
        for (int w : g.adj[v])
            if (!peeled[w] && --deg[w] == 1) stack.push_back(w);
    }
    for (int v = 0; v < g.n; ++v)
        if (!peeled[v]) dec.core.push_back(v);
    if (dec.core.empty()) return dec;  // tree instance; handled by dispatch

    // Pendant trees: nearest core vertex owns each non-core vertex.
    std::vector<int> owner(g.n, -1);
    for (int v : dec.core) owner[v] = v;
    std::vector<int> frontier = dec.core;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier)
            for (int w : g.adj[u])
                if (owner[w] == -1) {
                    owner[w] = owner[u];
                    next.push_back(w);
                }
        frontier = std::move(next);
    }
    for (int v = 0; v < g.n; ++v)
        if (!contains(dec.core, v)) dec.pendant[owner[v]].push_back(v);

    std::set<std::pair<int, int>> fset(dec.feedback.begin(), dec.feedback.end());
    auto tree_core_deg = [&](int v) {
        int c = 0;
        for (int w : g.adj[v])
            if (contains(dec.core, w) && !fset.count({std::min(v, w), std::max(v, w)})) ++c;
        return c;
    };
    std::vector<int> y3;
    for (int v : dec.core)
        if (tree_core_deg(v) >= 3) y3.push_back(v);
    std::vector<int> xy3 = dec.X;
    xy3.insert(xy3.end(), y3.begin(), y3.end());
    xy3 = sorted_unique(xy3);
    std::vector<int> y2;
    for (int v : xy3)
        for (int w : g.adj[v])
            if (contains(dec.core, w) && !contains(xy3, w)) y2.push_back(w);
    std::vector<int> xs = xy3;
    y2 = sorted_unique(y2);
    xs.insert(xs.end(), y2.begin(), y2.end());
    dec.Xstar = sorted_unique(xs);
    if (dec.Xstar.empty()) dec.Xstar = {dec.core.front()};
    size_t fsz = std::max<size_t>(1, dec.feedback.size());
    if (dec.Xstar.size() > 16 * fsz + 6)
        throw internal_error("X* exceeds its derived O(fes) bound");
    return dec;
}

namespace {

// Connectors of W: maximal degree-2 chains of G[V*] between W vertices.
std::vector<Connector> connectors_of(const SolidGraph& g, const std::vector<int>& core,
                                     const std::map<int, std::vector<int>>& pendant,
                                     const std::vector<int>& W) {
    std::vector<Connector> out;
    std::set<std::pair<int, int>> visited;
    auto core_neighbors = [&](int v) {
        std::vector<int> r;
        for (int w : g.adj[v])
            if (contains(core, w)) r.push_back(w);
        return r;
    };
    for (int a : W) {
        if (!contains(core, a)) continue;
        for (int first : core_neighbors(a)) {
            if (contains(W, first)) continue;
            if (visited.count({a, first})) continue;
            std::vector<int> path{a, first};
            int prev = a, cur = first;
            while (!contains(W, cur)) {
                auto nb = core_neighbors(cur);
                if (nb.size() != 2)
                    throw internal_error("connector interior vertex without core degree 2");
                int nxt = nb[0] == prev ? nb[1] : nb[0];
                prev = cur;
                cur = nxt;
                path.push_back(cur);
            }
            visited.insert({a, first});
            visited.insert({cur, prev});
            Connector c;
            c.path = path;
            std::vector<int> ext(path.begin(), path.end());
            for (size_t i = 1; i + 1 < path.size(); ++i) {
                auto it = pendant.find(path[i]);
                if (it != pendant.end()) ext.insert(ext.end(), it->second.begin(), it->second.end());
            }
            c.extension = sorted_unique(ext);
            out.push_back(std::move(c));
        }
    }
    return out;
}

struct PendantView {
    int v;
    std::vector<int> order;  // bridge vertices in topological order
    std::map<int, int> out_leaf, in_leaf;
    std::map<int, std::vector<int>> ambiguous;
};

std::optional<PendantView> pendant_view(const Digraph& d, const SolidGraph& g, int v,
                                        const std::vector<int>& tree, std::string* why) {
    PendantView pv;
    pv.v = v;
    std::vector<int> bvs;
    for (int w : g.adj[v])
        if (std::find(tree.begin(), tree.end(), w) != tree.end()) bvs.push_back(w);
    if (bvs.empty()) return pv;
    auto order = star_leaf_tournament(d, bvs);
    if (!order) {
        if (why) *why = "pendant bridge vertices of " + std::to_string(v) + " are not a complete DAG";
        return std::nullopt;
    }
    pv.order = *order;
    for (int b : pv.order) {
        for (int leaf : g.adj[b]) {
            if (leaf == v) continue;
            bool out_arcs = false, in_arcs = false;
            for (int x = 0; x < d.n(); ++x) {
                if (x == b || x == leaf) continue;
                if (d.arc(leaf, x)) out_arcs = true;
                if (d.arc(x, leaf)) in_arcs = true;
            }
            if (in_arcs && !out_arcs)
                pv.out_leaf[b] = leaf;
            else if (out_arcs && !in_arcs)
                pv.in_leaf[b] = leaf;
            else
                pv.ambiguous[b].push_back(leaf);
        }
    }
    return pv;
}

struct Intervals {
    int prefix_end = 0;
    int suffix_begin = 0;
};

// Prefix reaching u / silent middle / suffix reached from u along the bridge
// order; nullopt when the pattern is broken (certified no).
std::optional<Intervals> interval_pattern(const Digraph& d, const PendantView& pv, int u) {
    int k = static_cast<int>(pv.order.size());
    Intervals iv;
    iv.suffix_begin = k + 1;
    int state = 0;
    for (int i = 1; i <= k; ++i) {
        int b = pv.order[i - 1];
        bool fwd = d.arc(b, u), back = d.arc(u, b);
        if (fwd && back) return std::nullopt;
        int cls = fwd ? 0 : back ? 2 : 1;
        if (cls < state) return std::nullopt;
        state = cls;
        if (cls == 0) iv.prefix_end = i;
        if (cls == 2 && iv.suffix_begin == k + 1) iv.suffix_begin = i;
    }
    return iv;
}

struct SurroundInfo {
    std::map<std::pair<int, int>, std::vector<int>> surrounding;  // external edge -> indices
    std::set<std::pair<int, int>> blocked;
};

std::optional<SurroundInfo> surround_info(const Digraph& d, const SolidGraph& g,
                                          const std::vector<int>& core, const PendantView& pv,
                                          std::string* why) {
    SurroundInfo si;
    int v = pv.v;
    int k = static_cast<int>(pv.order.size());
    for (int u : g.adj[v]) {
        if (!contains(core, u)) continue;
        auto key = std::make_pair(std::min(u, v), std::max(u, v));
        auto iv = interval_pattern(d, pv, u);
        if (!iv) {
            if (why)
                *why = "pendant tree of " + std::to_string(v) +
                       " breaks the prefix/middle/suffix pattern towards " + std::to_string(u);
            return std::nullopt;
        }
        int middle = iv->suffix_begin - iv->prefix_end - 1;
        if (middle >= 2) {
            si.blocked.insert(key);
            continue;
        }
        int pick = -1;
        for (int i = 1; i <= k; ++i)
            if (iv->prefix_end >= i - 1 && iv->suffix_begin <= i + 1) {
                pick = i;
                break;
            }
        if (pick == -1) pick = k;
        std::vector<int> sur;
        for (int j = std::max(1, pick - 2); j <= std::min(k, pick + 2); ++j) sur.push_back(j);
        si.surrounding[key] = sur;
    }
    return si;
}

}  // namespace

ShrinkResult shrink_pendant_trees(const Digraph& d, Variant var) {
    ShrinkResult res;
    std::vector<int> alive(d.n());
    std::iota(alive.begin(), alive.end(), 0);

    auto original = [&](int local) { return alive[local]; };

    bool changed = true;
    Digraph cur = d;
    while (changed) {
        changed = false;
        SolidGraph g = SolidGraph::of(cur);
        if (!g.connected()) throw std::invalid_argument("shrink: disconnected instance");
        FesDecomposition dec = compute_decomposition(cur);
        if (dec.core.empty()) break;

        // Adjacent bridges that are both bundled and separated certify a no.
        auto bs = bridges(g);
        std::set<std::pair<int, int>> bridge_set;
        for (auto& b : bs) bridge_set.insert({b.u, b.v});
        for (auto& b : bs) {
            for (int c : {b.u, b.v}) {
                int x = c == b.u ? b.v : b.u;
                for (int y : g.adj[c]) {
                    if (y == x) continue;
                    if (!bridge_set.count({std::min(c, y), std::max(c, y)})) continue;
                    if (x > y) continue;
                    if (bundled(cur, c, x, y) && separated(cur, c, x, y, var)) {
                        res.certified_no = true;
                        res.reason = "bridges at " + std::to_string(original(c)) +
                                     " are both bundled and separated";
                        return res;
                    }
                }
            }
        }

        for (auto& [v, tree] : dec.pendant) {
            std::string why;
            auto pv = pendant_view(cur, g, v, tree, &why);
            if (!pv) {
                res.certified_no = true;
                res.reason = why;
                return res;
            }
            if (pv->order.empty()) continue;
            // Prefix/middle/suffix pattern must hold towards every outside vertex.
            {
                std::set<int> inside(tree.begin(), tree.end());
                inside.insert(v);
                for (int u = 0; u < cur.n(); ++u) {
                    if (inside.count(u)) continue;
                    if (!interval_pattern(cur, *pv, u)) {
                        res.certified_no = true;
                        res.reason = "pendant tree of " + std::to_string(original(v)) +
                                     " breaks the prefix/middle/suffix pattern towards " +
                                     std::to_string(original(u));
                        return res;
                    }
                }
            }
            auto si = surround_info(cur, g, dec.core, *pv, &why);
            if (!si) {
                res.certified_no = true;
                res.reason = why;
                return res;
            }
            int k = static_cast<int>(pv->order.size());
            std::vector<char> marked(k + 2, 0);
            for (auto& [e, sur] : si->surrounding)
                for (int j : sur) marked[j] = 1;
            for (auto& e : si->blocked) {
                auto iv = interval_pattern(cur, *pv, e.first == v ? e.second : e.first);
                if (iv) {
                    if (iv->prefix_end + 1 <= k) marked[iv->prefix_end + 1] = 1;
                    if (iv->suffix_begin - 1 >= 1) marked[iv->suffix_begin - 1] = 1;
                }
            }
            std::set<int> tree_set(tree.begin(), tree.end());
            tree_set.insert(v);
            // Intermediate-identical sanity check on free windows.
            for (int i = 1; i + 1 <= k; ++i) {
                if (marked[i] || marked[i + 1]) continue;
                int bi = pv->order[i - 1], bj = pv->order[i];
                for (int x = 0; x < cur.n(); ++x) {
                    if (tree_set.count(x)) continue;
                    bool ok = cur.arc(x, bi) == cur.arc(x, bj) && cur.arc(bi, x) == cur.arc(bj, x);
                    if (ok && pv->out_leaf.count(bj))
                        ok = cur.arc(x, bj) == cur.arc(x, pv->out_leaf.at(bj));
                    if (ok && pv->in_leaf.count(bi))
                        ok = cur.arc(bi, x) == cur.arc(pv->in_leaf.at(bi), x);
                    if (!ok) {
                        res.certified_no = true;
                        res.reason = "pendant tree of " + std::to_string(original(v)) +
                                     " has inconsistent outside reachability in a free window";
                        return res;
                    }
                }
            }
            // Removal rule: index i whose +-5 window is free of surrounding,
            // blocking and unclassifiable leaves.
            for (int i = 6; i <= k - 5 && !changed; ++i) {
                bool clean = true;
                for (int j = i - 5; j <= i + 5 && clean; ++j) {
                    if (marked[j]) clean = false;
                    if (pv->ambiguous.count(pv->order[j - 1])) clean = false;
                }
                if (!clean) continue;
                std::vector<int> tv(tree_set.begin(), tree_set.end());
                Digraph dtv = cur.induced(tv);
                if (!SolidGraph::of(dtv).is_tree()) continue;
                auto tr = solve_tree(dtv, var);
                if (tr.no()) {
                    res.certified_no = true;
                    res.reason = "pendant tree of " + std::to_string(original(v)) +
                                 " is not realizable on its own";
                    return res;
                }
                auto edge_special = [&](int idx) {
                    int bu = std::min(v, pv->order[idx - 1]), bv2 = std::max(v, pv->order[idx - 1]);
                    for (auto& b : bs)
                        if (b.u == bu && b.v == bv2) {
                            BridgeInfo c = b;
                            return classify_bridge(cur, c) == BridgeKind::Special;
                        }
                    return false;
                };
                int six = edge_special(i - 3) ? i - 3 : i - 4;
                int tix = edge_special(i + 3) ? i + 3 : i + 4;
                ShrinkResult::Removal ev;
                ev.v = original(v);
                for (int t : tv) ev.tree_vertices.push_back(original(t));
                std::sort(ev.tree_vertices.begin(), ev.tree_vertices.end());
                ev.anchors = {
                    Labeling::key(false, original(v), original(pv->order[six - 1])),
                    Labeling::key(false, original(v), original(pv->order[tix - 1]))};
                for (int j = six + 1; j < tix; ++j) {
                    int b = pv->order[j - 1];
                    ev.inner.push_back(original(b));
                    if (pv->out_leaf.count(b)) ev.inner.push_back(original(pv->out_leaf.at(b)));
                    if (pv->in_leaf.count(b)) ev.inner.push_back(original(pv->in_leaf.at(b)));
                }
                std::sort(ev.inner.begin(), ev.inner.end());
                std::set<int> removed{pv->order[i - 1]};
                if (pv->out_leaf.count(pv->order[i - 1])) removed.insert(pv->out_leaf.at(pv->order[i - 1]));
                if (pv->in_leaf.count(pv->order[i - 1])) removed.insert(pv->in_leaf.at(pv->order[i - 1]));
                std::vector<int> kept_local;
                for (int x = 0; x < cur.n(); ++x)
                    if (!removed.count(x)) kept_local.push_back(x);
                cur = cur.induced(kept_local);
                std::vector<int> new_alive;
                for (int x : kept_local) new_alive.push_back(alive[x]);
                alive = new_alive;
                res.removals.push_back(std::move(ev));
                changed = true;
            }
            if (changed) break;
        }
        if (!changed) {
            for (auto& [v, tree] : dec.pendant) {
                auto pv = pendant_view(cur, g, v, tree, nullptr);
                if (!pv || pv->order.empty()) continue;
                auto si = surround_info(cur, g, dec.core, *pv, nullptr);
                if (!si) continue;
                for (auto& e : si->blocked)
                    res.blocked_edges.push_back(Labeling::key(false, original(e.first), original(e.second)));
            }
        }
    }
    res.shrunk = cur;
    res.to_parent = alive;
    return res;
}

// ---------------------------------------------------------------------------
// W* computation.

namespace {

bool dense_forward(const Digraph& d, const std::vector<int>& path) {
    for (size_t i = 0; i < path.size(); ++i)
        for (size_t j = i + 1; j < path.size(); ++j)
            if (!d.arc(path[i], path[j])) return false;
    return true;
}

bool is_inout(const Digraph& d, const std::vector<int>& path) {
    size_t L = path.size();
    return L >= 3 && d.arc(path[0], path[2]) && d.arc(path[L - 3], path[L - 1]);
}

bool is_dense_inout(const Digraph& d, const std::vector<int>& path) {
    return is_inout(d, path) && dense_forward(d, path);
}

bool plain_nice(const Digraph& d, const std::vector<int>& path) {
    int a = path.front(), b = path.back();
    for (int q : path) {
        if (d.arc(q, a) && d.arc(q, b)) return false;
        if (d.arc(a, q) && d.arc(b, q)) return false;
    }
    return true;
}

}  // namespace

WstarResult compute_wstar(const Digraph& d, Variant var) {
    WstarResult out;
    out.dec = compute_decomposition(d);
    SolidGraph g = SolidGraph::of(d);
    if (out.dec.core.empty()) {
        out.dec.Wstar = out.dec.Xstar;
        return out;
    }
    std::vector<int> W = out.dec.Xstar;
    size_t xstar_connectors = connectors_of(g, out.dec.core, out.dec.pendant, W).size();

    // Robust pass: clip both ends; an (in,out)-orientation may need the first
    // backward-arc pair as an extra cut.
    bool grown = true;
    while (grown) {
        grown = false;
        for (auto& P : connectors_of(g, out.dec.core, out.dec.pendant, W)) {
            if (P.trivial()) continue;
            const auto& p = P.path;
            size_t L = p.size();
            std::vector<int> add{p[1], p[2], p[L - 3], p[L - 2]};
            for (const auto& q :
                 {p, std::vector<int>(p.rbegin(), p.rend())}) {
                if (!is_inout(d, q)) continue;
                for (size_t i = 3; i + 1 < q.size(); ++i)
                    if (d.arc(q[i], q[0])) {
                        add.push_back(q[i - 1]);
                        add.push_back(q[i]);
                        break;
                    }
            }
            std::vector<int> before = W;
            W.insert(W.end(), add.begin(), add.end());
            W = sorted_unique(W);
            if (W != before) {
                grown = true;
                break;
            }
        }
    }
    // Robust extensions must be realizable when tree-solid.
    for (auto& P : connectors_of(g, out.dec.core, out.dec.pendant, W)) {
        if (P.trivial()) continue;
        Digraph sub = d.induced(P.extension);
        if (!SolidGraph::of(sub).is_tree()) continue;
        auto r = solve_tree(sub, var);
        if (r.no()) {
            out.certified_no = true;
            out.reason = "robust connector extension is not realizable";
            return out;
        }
    }
    // Nice pass.
    grown = true;
    while (grown) {
        grown = false;
        for (auto& P : connectors_of(g, out.dec.core, out.dec.pendant, W)) {
            if (P.trivial()) continue;
            const auto& p = P.path;
            size_t L = p.size();
            bool dense_io =
                is_dense_inout(d, p) || is_dense_inout(d, std::vector<int>(p.rbegin(), p.rend()));
            std::vector<int> add;
            if (dense_io) {
                add = {p[1], p[2], p[L - 3], p[L - 2]};
            } else if (plain_nice(d, p)) {
                continue;
            } else {
                int a = p.front(), b = p.back();
                for (size_t i = 1; i + 1 < p.size() && add.empty(); ++i) {
                    int q = p[i];
                    if (d.arc(a, q) && d.arc(b, q))
                        add = {p[i - 1], p[i]};
                    else if (d.arc(q, a) && d.arc(q, b))
                        add = {p[i], p[i + 1]};
                }
                if (add.empty()) throw internal_error("connector not nice, no splitting vertex");
            }
            std::vector<int> before = W;
            W.insert(W.end(), add.begin(), add.end());
            W = sorted_unique(W);
            if (W != before) {
                grown = true;
                break;
            }
        }
    }
    // Absorb trivial connectors.
    grown = true;
    while (grown) {
        grown = false;
        for (auto& P : connectors_of(g, out.dec.core, out.dec.pendant, W))
            if (P.trivial()) {
                for (size_t i = 1; i + 1 < P.path.size(); ++i) W.push_back(P.path[i]);
                W = sorted_unique(W);
                grown = true;
                break;
            }
    }
    out.dec.Wstar = W;
    out.dec.connectors = connectors_of(g, out.dec.core, out.dec.pendant, W);
    if (W.size() > out.dec.Xstar.size() + 40 * std::max<size_t>(1, xstar_connectors) + 8)
        throw internal_error("W* exceeds its derived O(fes) bound");
    return out;
}

EntranceResult entrance_edge(const Digraph& d, const Connector& p, int v_in, int v_out,
                             bool arc_leaves_connector) {
    EntranceResult res;
    int a = p.a(), b = p.b();
    bool dense_fwd = is_dense_inout(d, p.path);
    bool dense_bwd = is_dense_inout(d, std::vector<int>(p.path.rbegin(), p.path.rend()));
    auto edge_of = [&](int c) {
        return c == a ? Labeling::key(false, a, p.a1()) : Labeling::key(false, b, p.b1());
    };
    if (!dense_fwd && !dense_bwd) {
        int c = -1;
        for (int cand : {a, b}) {
            bool hit = arc_leaves_connector ? d.arc(v_in, cand) : d.arc(cand, v_in);
            if (hit) {
                if (c != -1) throw internal_error("nice connector with two entrance candidates");
                c = cand;
            }
        }
        if (c == -1) {
            res.certified_no = true;
            return res;
        }
        res.edge = edge_of(c);
        return res;
    }
    int in_end = dense_fwd ? a : b, out_end = dense_fwd ? b : a;
    if (arc_leaves_connector) {
        bool via_in = d.arc(in_end, v_out), via_out = d.arc(out_end, v_out);
        if (!via_in && !via_out) {
            res.certified_no = true;
            return res;
        }
        res.edge = edge_of(via_in && via_out ? out_end : (via_in ? in_end : out_end));
        return res;
    }
    bool via_in = d.arc(v_out, in_end), via_out = d.arc(v_out, out_end);
    if (!via_in && !via_out) {
        res.certified_no = true;
        return res;
    }
    res.edge = edge_of(via_in && via_out ? in_end : (via_in ? in_end : out_end));
    return res;
}

// ---------------------------------------------------------------------------
// Connector labelings.

namespace {

struct ConnectorSets {
    bool certified_no = false;
    std::string reason;
    std::set<int> lt[2], gt[2], le[2], ge[2];  // V^<, V^>, V^<=, V^>= per end
};

ConnectorSets connector_sets(const Digraph& d, const Connector& p) {
    ConnectorSets cs;
    int ends[2] = {p.a(), p.b()};
    int nexts[2] = {p.a1(), p.b1()};
    std::set<int> ext_set(p.extension.begin(), p.extension.end());
    std::vector<int> interior;
    for (int v : p.extension)
        if (v != ends[0] && v != ends[1]) interior.push_back(v);
    for (int side = 0; side < 2; ++side)
        for (int v : interior) {
            if (d.arc(v, ends[side])) cs.lt[side].insert(v);
            if (d.arc(ends[side], v)) cs.gt[side].insert(v);
        }
    auto edge_side = [&](std::pair<int, int> e) {
        for (int side = 0; side < 2; ++side)
            if (e == Labeling::key(false, ends[side], nexts[side])) return side;
        return -1;
    };
    std::map<std::pair<int, bool>, std::array<std::set<int>, 2>> by_out;
    for (int v_out = 0; v_out < d.n(); ++v_out) {
        if (ext_set.count(v_out) && v_out != ends[0] && v_out != ends[1]) continue;
        for (int v_in : interior) {
            if (v_in == v_out) continue;
            for (bool leaving : {true, false}) {
                bool has = leaving ? d.arc(v_in, v_out) : d.arc(v_out, v_in);
                if (!has) continue;
                auto er = entrance_edge(d, p, v_in, v_out, leaving);
                if (er.certified_no) {
                    cs.certified_no = true;
                    cs.reason = "connector arc cannot use either boundary edge";
                    return cs;
                }
                int side = edge_side(er.edge);
                if (side < 0) throw internal_error("entrance edge is not a boundary edge");
                by_out[{v_out, leaving}][side].insert(v_in);
            }
        }
    }
    for (auto& [key, arr] : by_out)
        for (int side = 0; side < 2; ++side) {
            const auto& M = arr[side];
            if (M.empty()) continue;
            auto& target = key.second ? cs.le[side] : cs.ge[side];
            if (target.empty() || M.size() < target.size()) target = M;
        }
    for (int side = 0; side < 2; ++side) {
        if (cs.le[side].empty()) cs.le[side] = cs.lt[side];
        if (cs.ge[side].empty()) cs.ge[side] = cs.gt[side];
    }
    auto subset = [](const std::set<int>& x, const std::set<int>& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    for (int side = 0; side < 2; ++side) {
        if (!subset(cs.le[side], cs.lt[side]) || !subset(cs.ge[side], cs.gt[side])) {
            cs.certified_no = true;
            cs.reason = "reach-class containment violated at a connector end";
            return cs;
        }
        for (auto* s : {&cs.lt[side], &cs.gt[side], &cs.le[side], &cs.ge[side]})
            if (!s->count(nexts[side])) {
                cs.certified_no = true;
                cs.reason = "boundary neighbour missing from a reach class";
                return cs;
            }
        std::set<int> inter;
        std::set_intersection(cs.lt[side].begin(), cs.lt[side].end(), cs.gt[side].begin(),
                              cs.gt[side].end(), std::inserter(inter, inter.begin()));
        if (inter != std::set<int>{nexts[side]}) {
            cs.certified_no = true;
            cs.reason = "in/out reach classes overlap beyond the boundary neighbour";
            return cs;
        }
    }
    for (auto& [key, arr] : by_out)
        for (int side = 0; side < 2; ++side) {
            const auto& M = arr[side];
            if (M.empty()) continue;
            bool ok = key.second ? (M == cs.lt[side] || M == cs.le[side])
                                 : (M == cs.gt[side] || M == cs.ge[side]);
            if (!ok) {
                cs.certified_no = true;
                cs.reason = "three distinct reach classes through one boundary edge";
                return cs;
            }
        }
    return cs;
}

}  // namespace

ConnectorLabelings connector_label_sets(const Digraph& d, const Connector& p, Variant var,
                                        const std::vector<Label>& pin_a,
                                        const std::vector<Label>& pin_b) {
    ConnectorLabelings out;
    if (pin_a.empty() || pin_b.empty() || pin_a.size() > 2 || pin_b.size() > 2) {
        out.reason = "boundary edges carry one or two labels in every realization";
        return out;
    }
    ConnectorSets cs = connector_sets(d, p);
    if (cs.certified_no) {
        out.certified_no = true;
        out.reason = cs.reason;
        return out;
    }
    int ends[2] = {p.a(), p.b()};
    int nexts[2] = {p.a1(), p.b1()};
    const auto& ext = p.extension;
    int base = static_cast<int>(ext.size());
    auto local = [&](int v) {
        return static_cast<int>(std::lower_bound(ext.begin(), ext.end(), v) - ext.begin());
    };
    const int kVle = 0, kVge = 1, kFle = 2, kFge = 3;
    auto aux = [&](int side, int kind) { return base + 4 * side + kind; };
    Digraph master(base + 8);
    for (int i = 0; i < base; ++i)
        for (int j = 0; j < base; ++j)
            if (i != j && d.arc(ext[i], ext[j])) master.add_arc(i, j);
    bool dense_io = is_dense_inout(d, p.path) ||
                    is_dense_inout(d, std::vector<int>(p.path.rbegin(), p.path.rend()));
    int side_in = is_dense_inout(d, p.path) ? 0 : 1;
    int side_out = 1 - side_in;
    if (dense_io) {
        master.add_arc(aux(side_in, kFle), local(ends[side_out]));
        master.add_arc(local(ends[side_in]), aux(side_out, kFge));
        master.add_arc(aux(side_in, kFle), aux(side_out, kFge));
    }
    for (int side = 0; side < 2; ++side) {
        int c = local(ends[side]), c1 = local(nexts[side]);
        for (int kind : {kVle, kVge}) {
            master.add_arc(aux(side, kind), c);
            master.add_arc(c, aux(side, kind));
        }
        for (int kind : {kFle, kFge}) {
            master.add_arc(aux(side, kind), c1);
            master.add_arc(c1, aux(side, kind));
        }
        master.add_arc(aux(side, kFle), aux(side, kFge));
        master.add_arc(aux(side, kVle), aux(side, kVge));
        master.add_arc(c1, aux(side, kVge));
        master.add_arc(c, aux(side, kFge));
        master.add_arc(aux(side, kVle), c1);
        master.add_arc(aux(side, kFle), c);
        for (int v : cs.lt[side]) master.add_arc(local(v), aux(side, kFge));
        for (int v : cs.gt[side]) master.add_arc(aux(side, kFle), local(v));
        for (int v : cs.le[side]) {
            master.add_arc(local(v), aux(side, kFle));
            master.add_arc(local(v), aux(side, kFge));
            master.add_arc(local(v), aux(side, kVge));
        }
        for (int v : cs.ge[side]) {
            master.add_arc(aux(side, kFle), local(v));
            master.add_arc(aux(side, kFge), local(v));
            master.add_arc(aux(side, kVle), local(v));
        }
    }
    struct PotArc {
        std::pair<int, int> from, to;  // (side, kind) with kind -1 for the end vertex
    };
    std::vector<PotArc> pot_arcs = {
        {{side_in, kVle}, {side_out, -1}},
        {{side_in, -1}, {side_out, kVge}},
        {{side_in, kVle}, {side_out, kVge}},
    };
    std::vector<Labeling> found;
    for (int qmask = 0; qmask < 16; ++qmask) {
        auto q_has = [&](int side, int kind) {
            return (qmask >> (2 * side + (kind == kVge ? 1 : 0)) & 1) != 0;
        };
        for (int amask = 0; amask < 8; ++amask) {
            if (amask != 0 && !dense_io) continue;
            bool consistent = true;
            for (int t = 0; t < 3 && consistent; ++t) {
                if (!(amask >> t & 1)) continue;
                auto present = [&](std::pair<int, int> r) {
                    return r.second == -1 || q_has(r.first, r.second);
                };
                if (!present(pot_arcs[t].from) || !present(pot_arcs[t].to)) consistent = false;
            }
            if (!consistent) continue;
            std::vector<int> verts;
            for (int i = 0; i < base; ++i) verts.push_back(i);
            for (int side = 0; side < 2; ++side) {
                if (q_has(side, kVle)) {
                    verts.push_back(aux(side, kVle));
                    verts.push_back(aux(side, kFge));
                }
                if (q_has(side, kVge)) {
                    verts.push_back(aux(side, kVge));
                    verts.push_back(aux(side, kFle));
                }
            }
            std::sort(verts.begin(), verts.end());
            Digraph gamma = master.induced(verts);
            auto gamma_id = [&](int master_id) {
                return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), master_id) -
                                        verts.begin());
            };
            for (int t = 0; t < 3; ++t) {
                if (!(amask >> t & 1)) continue;
                auto resolve = [&](std::pair<int, int> r) {
                    return r.second == -1 ? local(ends[r.first]) : aux(r.first, r.second);
                };
                gamma.add_arc(gamma_id(resolve(pot_arcs[t].from)), gamma_id(resolve(pot_arcs[t].to)));
            }
            if (!SolidGraph::of(gamma).is_tree()) continue;
            Prelabels pins;
            pins.pins.push_back({{gamma_id(local(ends[0])), gamma_id(local(nexts[0]))}, pin_a});
            pins.pins.push_back({{gamma_id(local(ends[1])), gamma_id(local(nexts[1]))}, pin_b});
            RealizeResult r;
            try {
                r = solve_tree(gamma, var, &pins);
            } catch (const std::invalid_argument&) {
                continue;  // pin spacing too tight for this auxiliary instance
            }
            if (!r.yes()) continue;
            Labeling lp(false);
            for (auto& [k, ls] : r.witness->entries()) {
                if (verts[k.first] >= base || verts[k.second] >= base) continue;
                lp.set(ext[verts[k.first]], ext[verts[k.second]], ls);
            }
            bool dup = false;
            for (auto& w : found)
                if (w == lp) dup = true;
            if (!dup) found.push_back(std::move(lp));
        }
    }
    out.labelings = std::move(found);
    return out;
}

// ---------------------------------------------------------------------------
// The enumeration core.

namespace {

struct FesCore {
    const Digraph& d;
    Variant var;
    const FesOptions& opt;
    std::vector<std::pair<int, int>> estar;
    std::vector<int> cap, min_card;
    std::vector<Connector> connectors;
    std::vector<std::vector<std::pair<int, int>>> star_chains;
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> bundled_pairs, separated_pairs;
    Label grid_step = 2;
    uint64_t nodes = 0;

    // Insertion-canonical level list; per-edge sets of level ids.
    std::vector<int> level_order;
    int next_level_id = 0;
    std::vector<std::vector<int>> assigned;
    std::optional<Labeling> result;
    std::map<std::tuple<int, std::vector<Label>, std::vector<Label>>, ConnectorLabelings> lp_cache;
    bool certified_no_flag = false;
    std::string certified_no_reason;

    FesCore(const Digraph& dd, Variant v, const FesOptions& o) : d(dd), var(v), opt(o) {}

    Labeling materialize(size_t upto) const {
        std::vector<Label> rank(next_level_id, 0);
        for (size_t i = 0; i < level_order.size(); ++i)
            rank[level_order[i]] = static_cast<Label>(i + 1) * grid_step;
        Labeling lab(false);
        for (size_t e = 0; e < upto; ++e) {
            if (assigned[e].empty()) continue;
            std::vector<Label> ls;
            for (int id : assigned[e]) ls.push_back(rank[id]);
            lab.set(estar[e].first, estar[e].second, ls);
        }
        return lab;
    }

    bool violates_constraints(size_t upto) const {
        Labeling lab = materialize(upto);
        auto labels_of = [&](std::pair<int, int> e) -> const std::vector<Label>* {
            for (size_t i = 0; i < upto; ++i)
                if (estar[i] == e) return !assigned[i].empty() || min_card[i] >= 0
                                              ? &lab.labels(e.first, e.second)
                                              : nullptr;
            return nullptr;
        };
        auto assigned_yet = [&](std::pair<int, int> e) {
            for (size_t i = 0; i < upto; ++i)
                if (estar[i] == e) return true;
            return false;
        };
        for (auto& [e, f] : bundled_pairs) {
            if (!assigned_yet(e) || !assigned_yet(f)) continue;
            const auto &le = lab.labels(e.first, e.second), &lf = lab.labels(f.first, f.second);
            bool share = false;
            for (Label x : le)
                if (std::binary_search(lf.begin(), lf.end(), x)) share = true;
            if (!share) return true;
        }
        for (auto& [e, f] : separated_pairs) {
            if (!assigned_yet(e) || !assigned_yet(f)) continue;
            const auto &le = lab.labels(e.first, e.second), &lf = lab.labels(f.first, f.second);
            for (Label x : le)
                if (std::binary_search(lf.begin(), lf.end(), x)) return true;
        }
        for (auto& chain : star_chains)
            for (size_t i = 0; i + 1 < chain.size(); ++i) {
                if (!assigned_yet(chain[i]) || !assigned_yet(chain[i + 1])) continue;
                const auto& le = lab.labels(chain[i].first, chain[i].second);
                const auto& lf = lab.labels(chain[i + 1].first, chain[i + 1].second);
                if (le.empty() || lf.empty()) continue;
                if (le.back() > lf.front()) return true;
                if (!(le.front() < lf.back())) return true;
            }
        if (!reach_within(TemporalGraph(d.n(), lab), var.effective_semantics(), d)) return true;
        (void)labels_of;
        return false;
    }

    bool try_complete(const Labeling& lab) {
        std::vector<std::vector<Labeling>> lps;
        for (size_t ci = 0; ci < connectors.size(); ++ci) {
            const Connector& P = connectors[ci];
            std::vector<Label> pa = lab.labels(P.a(), P.a1());
            std::vector<Label> pb = lab.labels(P.b(), P.b1());
            auto key = std::make_tuple(static_cast<int>(ci), pa, pb);
            auto it = lp_cache.find(key);
            if (it == lp_cache.end()) {
                it = lp_cache.emplace(key, connector_label_sets(d, P, var, pa, pb)).first;
                if (it->second.certified_no) {
                    certified_no_flag = true;
                    certified_no_reason = it->second.reason;
                }
            }
            if (it->second.certified_no) return false;
            if (it->second.labelings.empty()) return false;
            lps.push_back(it->second.labelings);
        }
        std::vector<size_t> idx(lps.size(), 0);
        while (true) {
            Labeling full = lab;
            for (size_t ci = 0; ci < lps.size(); ++ci)
                for (auto& [k, ls] : lps[ci][idx[ci]].entries()) full.set(k.first, k.second, ls);
            if (check_realization(d, TemporalGraph(d.n(), full), var).ok) {
                result = compress_labels(full);
                return true;
            }
            size_t pos = 0;
            while (pos < idx.size() && ++idx[pos] == lps[pos].size()) idx[pos++] = 0;
            if (pos == idx.size()) break;
        }
        return false;
    }

    bool dfs(size_t e) {
        ++nodes;
        if (e == estar.size()) return try_complete(materialize(e));
        std::function<bool(int, int)> choose = [&](int k, int min_slot) -> bool {
            if (k == 0) {
                if (static_cast<int>(level_order.size()) > opt.max_grid_levels) return false;
                if (violates_constraints(e + 1)) return false;
                return dfs(e + 1);
            }
            for (int slot = min_slot; slot <= static_cast<int>(level_order.size()); ++slot) {
                if (slot < static_cast<int>(level_order.size())) {
                    assigned[e].push_back(level_order[slot]);
                    if (choose(k - 1, slot + 1)) return true;
                    assigned[e].pop_back();
                    if (certified_no_flag) return false;
                }
                int id = next_level_id++;
                level_order.insert(level_order.begin() + slot, id);
                assigned[e].push_back(id);
                if (choose(k - 1, slot + 1)) return true;
                assigned[e].pop_back();
                level_order.erase(level_order.begin() + slot);
                --next_level_id;
                if (certified_no_flag) return false;
            }
            return false;
        };
        for (int k = min_card[e]; k <= cap[e]; ++k) {
            assigned[e].clear();
            if (choose(k, 0)) return true;
            if (certified_no_flag) return false;
        }
        assigned[e].clear();
        return false;
    }
};

RealizeResult fes_core_solve(const Digraph& d, Variant var, const FesOptions& opt) {
    ShrinkResult sh = shrink_pendant_trees(d, var);
    if (sh.certified_no) return RealizeResult::no_result("fes", sh.reason);
    const Digraph& core_d = sh.shrunk;

    RealizeResult res;
    if (SolidGraph::of(core_d).is_tree()) {
        auto r = solve_tree(core_d, var);
        if (!r.yes()) return r;
        Labeling renamed(false);
        for (auto& [k, ls] : r.witness->entries())
            renamed.set(sh.to_parent[k.first], sh.to_parent[k.second], ls);
        res = RealizeResult::yes_result(renamed, "fes-tree");
    } else {
        WstarResult ws = compute_wstar(core_d, var);
        if (ws.certified_no) return RealizeResult::no_result("fes", ws.reason);
        const FesDecomposition& dec = ws.dec;

        FesCore core(core_d, var, opt);
        core.connectors = dec.connectors;
        SolidGraph g = SolidGraph::of(core_d);
        std::set<int> wset(dec.Wstar.begin(), dec.Wstar.end());
        std::set<int> estar_vertices = wset;
        for (int w : dec.Wstar) {
            auto it = dec.pendant.find(w);
            if (it != dec.pendant.end())
                for (int x : it->second) estar_vertices.insert(x);
        }
        // Vertices owned by connector interiors stay out of E*.
        std::set<int> connector_owned;
        for (auto& P : core.connectors)
            for (size_t i = 1; i + 1 < P.path.size(); ++i) {
                connector_owned.insert(P.path[i]);
                auto it = dec.pendant.find(P.path[i]);
                if (it != dec.pendant.end())
                    for (int x : it->second) connector_owned.insert(x);
            }
        std::set<std::pair<int, int>> estar_pool;
        for (auto& [u, v] : g.edges) {
            bool touches = estar_vertices.count(u) || estar_vertices.count(v);
            bool internal = connector_owned.count(u) && connector_owned.count(v);
            // Boundary edges have exactly one endpoint in W*.
            if (touches && !internal) estar_pool.insert({u, v});
        }
        // Assign constraining core edges first, then pendant-tree edges per
        // star in topological order; the chain constraints then prune early.
        std::set<int> pendant_vertices;
        for (auto& [r, tree] : dec.pendant)
            for (int x : tree) pendant_vertices.insert(x);
        for (auto& e : estar_pool)
            if (!pendant_vertices.count(e.first) && !pendant_vertices.count(e.second))
                core.estar.push_back(e);
        for (int w : dec.Wstar) {
            auto it = dec.pendant.find(w);
            if (it == dec.pendant.end()) continue;
            auto pv = pendant_view(core_d, g, w, it->second, nullptr);
            if (!pv) continue;
            for (int b : pv->order) {
                auto be = Labeling::key(false, w, b);
                if (estar_pool.count(be)) core.estar.push_back(be);
                for (int leaf : g.adj[b]) {
                    if (leaf == w) continue;
                    auto le = Labeling::key(false, b, leaf);
                    if (estar_pool.count(le)) core.estar.push_back(le);
                }
            }
        }
        for (auto& e : estar_pool)
            if (std::find(core.estar.begin(), core.estar.end(), e) == core.estar.end())
                core.estar.push_back(e);
        int sum_deg = 0;
        for (int x : dec.Xstar) {
            for (int w : g.adj[x])
                if (contains(dec.core, w)) ++sum_deg;
        }
        int spec_cap = static_cast<int>(dec.Xstar.size()) +
                       4 * static_cast<int>(core.connectors.size()) + 2 * sum_deg;
        std::set<std::pair<int, int>> blocked(sh.blocked_edges.begin(), sh.blocked_edges.end());
        // blocked edges recorded in parent ids; translate back to core ids
        std::map<int, int> parent_to_core;
        for (size_t i = 0; i < sh.to_parent.size(); ++i) parent_to_core[sh.to_parent[i]] = (int)i;
        std::set<std::pair<int, int>> blocked_core;
        for (auto& e : blocked) {
            auto iu = parent_to_core.find(e.first), iv = parent_to_core.find(e.second);
            if (iu != parent_to_core.end() && iv != parent_to_core.end())
                blocked_core.insert(Labeling::key(false, iu->second, iv->second));
        }
        auto bs = bridges(g);
        std::map<std::pair<int, int>, BridgeKind> bridge_kind;
        for (auto& b : bs) {
            classify_bridge(core_d, b);
            bridge_kind[{b.u, b.v}] = b.kind;
        }
        std::set<std::pair<int, int>> boundary;
        for (auto& P : core.connectors) {
            boundary.insert(Labeling::key(false, P.a(), P.a1()));
            boundary.insert(Labeling::key(false, P.b(), P.b1()));
        }
        for (auto& e : core.estar) {
            int c, m;
            if (blocked_core.count(e)) {
                c = m = 0;
            } else if (bridge_kind.count(e)) {
                c = m = bridge_kind[e] == BridgeKind::Special ? 2 : 1;
            } else {
                c = std::min(minimal_label_bound(core_d, var, e.first, e.second), spec_cap);
                m = boundary.count(e) ? 1 : 0;
            }
            core.cap.push_back(c);
            core.min_card.push_back(m);
        }
        long long total_levels = 0;
        for (int c : core.cap) total_levels += c;
        if (total_levels > opt.max_grid_levels)
            return RealizeResult::unknown_result("fes", "grid-budget-exceeded");
        core.grid_step = 2LL * (core_d.n() + 8);  // room for the auxiliary tree instances

        for (auto& [v, tree] : dec.pendant) {
            if (!wset.count(v)) continue;
            auto pv = pendant_view(core_d, g, v, tree, nullptr);
            if (!pv || pv->order.size() < 2) continue;
            std::vector<std::pair<int, int>> chain;
            for (int b : pv->order) chain.push_back(Labeling::key(false, v, b));
            core.star_chains.push_back(chain);
        }
        std::set<std::pair<int, int>> estar_set(core.estar.begin(), core.estar.end());
        for (auto& b1 : bs)
            for (auto& b2 : bs) {
                auto e1 = std::make_pair(b1.u, b1.v), e2 = std::make_pair(b2.u, b2.v);
                if (e1 >= e2) continue;
                if (!estar_set.count(e1) || !estar_set.count(e2)) continue;
                int c = -1, x = -1, y = -1;
                for (int pp : {b1.u, b1.v})
                    for (int q : {b2.u, b2.v})
                        if (pp == q) {
                            c = pp;
                            x = b1.u == pp ? b1.v : b1.u;
                            y = b2.u == pp ? b2.v : b2.u;
                        }
                if (c < 0) continue;
                bool bun = bundled(core_d, c, x, y);
                bool sep = separated(core_d, c, x, y, var);
                if (bun && sep)
                    return RealizeResult::no_result("fes",
                                                    "adjacent bridges both bundled and separated");
                if (bun) core.bundled_pairs.push_back({e1, e2});
                if (sep) core.separated_pairs.push_back({e1, e2});
            }

        core.assigned.resize(core.estar.size());
        bool found = core.dfs(0);
        if (core.certified_no_flag) {
            res = RealizeResult::no_result("fes", core.certified_no_reason);
        } else if (!found) {
            res = RealizeResult::no_result("fes", "label enumeration exhausted");
        } else {
            Labeling w(false);
            for (auto& [k, ls] : core.result->entries())
                w.set(sh.to_parent[k.first], sh.to_parent[k.second], ls);
            res = RealizeResult::yes_result(w, "fes");
        }
        res.nodes_explored = core.nodes;
    }
    if (res.yes() && !sh.removals.empty()) {
        // Replay removals innermost-last; everything is in the piece's own ids.
        for (auto it = sh.removals.rbegin(); it != sh.removals.rend(); ++it) {
            const auto& ev = *it;
            Digraph dtv = d.induced(ev.tree_vertices);
            auto tr = solve_tree(dtv, var);
            if (!tr.yes()) throw internal_error("pendant tree unrealizable during replay");
            Labeling tree_w(false);
            for (auto& [k, ls] : tr.witness->entries())
                tree_w.set(ev.tree_vertices[k.first], ev.tree_vertices[k.second], ls);
            auto aligned = align_two_labelings(*res.witness, tree_w, ev.anchors);
            if (!aligned) throw internal_error("pendant removal replay failed to align");
            auto& [wbig, wtree] = *aligned;
            std::set<int> inner(ev.inner.begin(), ev.inner.end());
            Labeling merged(false);
            for (auto& [k, ls] : wbig.entries())
                if (!inner.count(k.first) && !inner.count(k.second)) merged.set(k.first, k.second, ls);
            for (auto& [k, ls] : wtree.entries())
                if (inner.count(k.first) || inner.count(k.second)) merged.set(k.first, k.second, ls);
            res.witness = compress_labels(merged);
        }
    }
    if (res.yes()) {
        auto chk = check_realization(d, TemporalGraph(d.n(), *res.witness), var);
        if (!chk.ok) throw internal_error("fes core witness failed: " + chk.mismatch);
    }
    return res;
}

}  // namespace

RealizeResult fes_solve(const Digraph& d, Variant var, const FesOptions& opt) {
    if (var.directed()) throw std::invalid_argument("fes_solve: undirected variants only");
    auto leaf = [&opt](const Digraph& piece, Variant v) -> RealizeResult {
        if (SolidGraph::of(piece).is_tree()) return solve_tree(piece, v);
        return fes_core_solve(piece, v, opt);
    };
    auto res = solve_by_splitting(d, var, SplitMode::Full, leaf);
    if (res.yes()) {
        auto chk = check_realization(d, TemporalGraph(d.n(), *res.witness), var);
        if (!chk.ok) throw internal_error("fes witness failed certification: " + chk.mismatch);
        res.method = "fes";
    }
    return res;
}

}  // namespace rgr
