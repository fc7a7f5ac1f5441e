#include "rgr/solid.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace rgr {

SolidGraph SolidGraph::of(const Digraph& d) {
    SolidGraph g;
    g.n = d.n();
    g.adj.assign(g.n, {});
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (d.solid(u, v)) {
                g.edges.emplace_back(u, v);
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
            }
    return g;
}

bool SolidGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> SolidGraph::components() const {
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        std::vector<int> cur;
        std::queue<int> q;
        q.push(s);
        comp[s] = static_cast<int>(out.size());
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            cur.push_back(u);
            for (int w : adj[u])
                if (comp[w] == -1) {
                    comp[w] = comp[s];
                    q.push(w);
                }
        }
        std::sort(cur.begin(), cur.end());
        out.push_back(std::move(cur));
    }
    return out;
}

bool SolidGraph::is_tree() const {
    return static_cast<int>(edges.size()) == n - 1 && connected();
}

std::vector<std::pair<int, int>> dashed_arcs(const Digraph& d) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < d.n(); ++u)
        for (int v = 0; v < d.n(); ++v)
            if (u != v && d.arc(u, v) && !d.arc(v, u)) out.emplace_back(u, v);
    return out;
}

namespace {

// Iterative lowpoint DFS.
std::vector<std::pair<int, int>> bridge_edges(const SolidGraph& g) {
    int n = g.n;
    std::vector<int> low(n, -1), num(n, -1), parent(n, -1);
    std::vector<std::pair<int, int>> out;
    int counter = 0;
    std::function<void(int)> dfs = [&](int root) {
        std::vector<std::pair<int, size_t>> stack{{root, 0}};
        num[root] = low[root] = counter++;
        while (!stack.empty()) {
            auto& [u, i] = stack.back();
            if (i < g.adj[u].size()) {
                int v = g.adj[u][i++];
                if (num[v] == -1) {
                    parent[v] = u;
                    num[v] = low[v] = counter++;
                    stack.emplace_back(v, 0);
                } else if (v != parent[u]) {
                    low[u] = std::min(low[u], num[v]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().first;
                    low[p] = std::min(low[p], low[u]);
                    if (low[u] > num[p]) out.emplace_back(std::min(p, u), std::max(p, u));
                }
            }
        }
    };
    for (int s = 0; s < n; ++s)
        if (num[s] == -1) dfs(s);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> side_of(const SolidGraph& g, int start, int bu, int bv) {
    std::vector<char> seen(g.n, 0);
    std::queue<int> q;
    q.push(start);
    seen[start] = 1;
    std::vector<int> out;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        out.push_back(u);
        for (int w : g.adj[u]) {
            if ((u == bu && w == bv) || (u == bv && w == bu)) continue;
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<int> reach_across(const Digraph& d, int w, const std::vector<int>& far_side) {
    std::set<int> out;
    for (int x : far_side)
        if (x != w && d.arc(w, x)) out.insert(x);
    return out;
}

}  // namespace

std::vector<BridgeInfo> bridges(const SolidGraph& g) {
    std::vector<BridgeInfo> out;
    for (auto& [u, v] : bridge_edges(g)) {
        BridgeInfo b;
        b.u = u;
        b.v = v;
        b.side_u = side_of(g, u, u, v);
        b.side_v = side_of(g, v, u, v);
        out.push_back(std::move(b));
    }
    return out;
}

BridgeKind classify_bridge(const Digraph& d, BridgeInfo& b) {
    // Special iff exists a in side_u, x in side_v with D_av = D_ux = 1, D_ax = 0
    // (or symmetrically with u and v exchanged).
    auto witness = [&](int u, int v, const std::vector<int>& su, const std::vector<int>& sv) {
        for (int a : su) {
            if (!d.arc(a, v)) continue;
            for (int x : sv)
                if (d.arc(u, x) && !d.arc(a, x)) return true;
        }
        return false;
    };
    b.kind = (witness(b.u, b.v, b.side_u, b.side_v) || witness(b.v, b.u, b.side_v, b.side_u))
                 ? BridgeKind::Special
                 : BridgeKind::NonSpecial;
    return b.kind;
}

ReachClasses plausible_reachability(const Digraph& d, const BridgeInfo& b) {
    ReachClasses rc;
    auto one_side = [&](int u, int v, const std::vector<int>& su, const std::vector<int>& sv,
                        ReachClasses::Side& side) -> bool {
        side.full = reach_across(d, u, sv);
        // Witness pair on this side: a in su, x in sv with D_av=D_ux=1, D_ax=0.
        std::vector<int> witnesses;
        for (int a : su) {
            if (!d.arc(a, v)) continue;
            bool w = false;
            for (int x : sv)
                if (d.arc(u, x) && !d.arc(a, x)) {
                    w = true;
                    break;
                }
            if (w) witnesses.push_back(a);
        }
        side.has_witness = !witnesses.empty();
        if (side.has_witness) {
            side.mid = reach_across(d, witnesses.front(), sv);
            for (int a : witnesses)
                if (reach_across(d, a, sv) != side.mid) {
                    rc.why = "witness vertices disagree on their reach class";
                    return false;
                }
            if (side.mid.empty() || side.mid == side.full ||
                !std::includes(side.full.begin(), side.full.end(), side.mid.begin(), side.mid.end())) {
                rc.why = "witness class not strictly between empty and full";
                return false;
            }
            for (int w : su) {
                auto r = reach_across(d, w, sv);
                if (!r.empty() && r != side.mid && r != side.full) {
                    rc.why = "vertex " + std::to_string(w) + " has an out-of-pattern reach class";
                    return false;
                }
            }
        } else {
            for (int w : su) {
                auto r = reach_across(d, w, sv);
                if (!r.empty() && r != side.full) {
                    rc.why = "vertex " + std::to_string(w) + " breaks the two-class form";
                    return false;
                }
            }
        }
        return true;
    };
    rc.ok = one_side(b.u, b.v, b.side_u, b.side_v, rc.from_u) &&
            one_side(b.v, b.u, b.side_v, b.side_u, rc.from_v);
    return rc;
}

namespace {

// Component of `keep` in G - {edge}, as a sorted vector.
std::vector<int> component_without_edge(const Digraph& d, int keep, int eu, int ev) {
    SolidGraph g = SolidGraph::of(d);
    return side_of(g, keep, eu, ev);
}

}  // namespace

bool bundled(const Digraph& d, int c, int u, int v) {
    if (!d.arc(u, v) && !d.arc(v, u)) return true;
    // Specialness of {u,c} or {v,c} within D[V_u + V_v + {c}].
    auto vu = component_without_edge(d, u, u, c);
    auto vv = component_without_edge(d, v, v, c);
    std::vector<int> verts = vu;
    verts.insert(verts.end(), vv.begin(), vv.end());
    verts.push_back(c);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    Digraph sub = d.induced(verts);
    auto local = [&](int x) {
        return static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin());
    };
    SolidGraph sg = SolidGraph::of(sub);
    for (int w : {u, v}) {
        BridgeInfo b;
        b.u = std::min(local(w), local(c));
        b.v = std::max(local(w), local(c));
        if (!sg.has_edge(b.u, b.v)) continue;
        b.side_u = side_of(sg, b.u, b.u, b.v);
        b.side_v = side_of(sg, b.v, b.u, b.v);
        // {w,c} is a bridge of the restricted solid graph by construction.
        if (classify_bridge(sub, b) == BridgeKind::Special) return true;
    }
    return false;
}

bool separated(const Digraph& d, int c, int u, int v, Variant var) {
    if (var.adjacent_noarc_fatal()) return true;  // proper / happy / non-strict
    bool arc_between = d.arc(u, v) || d.arc(v, u);
    if (var.label_class == LabelClass::Simple && var.semantics == Semantics::Strict && arc_between)
        return true;
    SolidGraph g = SolidGraph::of(d);
    auto bridge_kind = [&](int x) {
        BridgeInfo b;
        b.u = std::min(x, c);
        b.v = std::max(x, c);
        b.side_u = side_of(g, b.u, b.u, b.v);
        b.side_v = side_of(g, b.v, b.u, b.v);
        return classify_bridge(d, b);
    };
    if (arc_between && bridge_kind(u) == BridgeKind::NonSpecial &&
        bridge_kind(v) == BridgeKind::NonSpecial)
        return true;
    // Bridge neighbors of c, i.e. w with {c,w} a bridge.
    std::vector<int> bridge_nbrs;
    for (int w : g.adj[c]) {
        // {c,w} is a bridge iff c and w are disconnected after removing it.
        auto side = side_of(g, w, std::min(c, w), std::max(c, w));
        if (std::find(side.begin(), side.end(), c) == side.end()) bridge_nbrs.push_back(w);
    }
    // Two intermediate bridge neighbors forming a directed 3-path.
    for (int w1 : bridge_nbrs) {
        if (w1 == u || w1 == v) continue;
        for (int w2 : bridge_nbrs) {
            if (w2 == u || w2 == v || w2 == w1) continue;
            if ((d.arc(u, w1) && d.arc(w1, w2) && d.arc(w2, v)) ||
                (d.arc(v, w1) && d.arc(w1, w2) && d.arc(w2, u)))
                return true;
        }
    }
    // One intermediate bridge neighbor with a specialness side condition.
    for (int w : bridge_nbrs) {
        if (w == u || w == v) continue;
        bool path_uv = d.arc(u, w) && d.arc(w, v);
        bool path_vu = d.arc(v, w) && d.arc(w, u);
        if (!path_uv && !path_vu) continue;
        if (bridge_kind(u) == BridgeKind::NonSpecial || bridge_kind(w) == BridgeKind::Special ||
            bridge_kind(v) == BridgeKind::NonSpecial)
            return true;
    }
    return false;
}

DensePath dense_path_exists(const Digraph& d, int u, int v, const std::vector<int>& forbidden,
                            long long budget) {
    SolidGraph g = SolidGraph::of(d);
    std::vector<char> blocked(d.n(), 0);
    for (int f : forbidden) blocked[f] = 1;
    if (blocked[u] || blocked[v]) return DensePath::No;
    std::vector<int> path{u};
    std::vector<char> used(d.n(), 0);
    used[u] = 1;
    long long nodes = 0;
    bool over_budget = false;
    std::function<bool(int)> dfs = [&](int cur) -> bool {
        if (++nodes > budget) {
            over_budget = true;
            return false;
        }
        if (cur == v) return true;
        for (int w : g.adj[cur]) {
            if (used[w] || blocked[w]) continue;
            bool dense = true;
            for (int p : path)
                if (!d.arc(p, w)) {
                    dense = false;
                    break;
                }
            if (!dense) continue;
            used[w] = 1;
            path.push_back(w);
            if (dfs(w)) return true;
            path.pop_back();
            used[w] = 0;
            if (over_budget) return false;
        }
        return false;
    };
    if (dfs(u)) return DensePath::Yes;
    return over_budget ? DensePath::Budget : DensePath::No;
}

std::optional<std::vector<int>> star_leaf_tournament(const Digraph& d, const std::vector<int>& leaves) {
    const int k = static_cast<int>(leaves.size());
    // Exactly one arc per pair, acyclic: sort by out-degree within the set.
    std::vector<int> outdeg(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            bool ij = d.arc(leaves[i], leaves[j]), ji = d.arc(leaves[j], leaves[i]);
            if (i < j && (ij == ji)) return std::nullopt;  // missing or bidirectional pair
            if (ij) ++outdeg[i];
        }
    std::vector<int> order(k);
    for (int i = 0; i < k; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return outdeg[a] > outdeg[b]; });
    // Acyclic tournament iff out-degrees are exactly k-1, k-2, ..., 0.
    for (int i = 0; i < k; ++i)
        if (outdeg[order[i]] != k - 1 - i) return std::nullopt;
    std::vector<int> result(k);
    for (int i = 0; i < k; ++i) result[i] = leaves[order[i]];
    return result;
}

namespace {

bool triangulated(const Digraph& d, int u, int v) {
    for (int w = 0; w < d.n(); ++w)
        if (w != u && w != v && d.arc(u, w) && d.arc(w, v)) return true;
    return false;
}

// Enumerate induced directed cycles of length 3..max_len (minimal start vertex
// canonical); calls sink(cycle) for each.
void induced_cycles(const Digraph& d, int max_len, const std::function<void(const std::vector<int>&)>& sink) {
    const int n = d.n();
    std::vector<int> path;
    std::vector<char> used(n, 0);
    std::function<void(int, int)> extend = [&](int start, int cur) {
        if (static_cast<int>(path.size()) >= 3 && d.arc(cur, start)) {
            // Induced: the only arcs among path vertices are the cycle arcs.
            bool induced = true;
            int L = static_cast<int>(path.size());
            for (int i = 0; i < L && induced; ++i)
                for (int j = 0; j < L && induced; ++j) {
                    if (i == j) continue;
                    bool cyc = (j == (i + 1) % L);
                    if (d.arc(path[i], path[j]) != cyc) induced = false;
                }
            if (induced) sink(path);
        }
        if (static_cast<int>(path.size()) == max_len) return;
        for (int w = start + 1; w < n; ++w) {
            if (used[w] || !d.arc(cur, w)) continue;
            used[w] = 1;
            path.push_back(w);
            extend(start, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < n; ++s) {
        path = {s};
        used.assign(n, 0);
        used[s] = 1;
        extend(s, s);
    }
}

}  // namespace

std::vector<DirectedFact> directed_prune_checks(const Digraph& d, Variant var, int max_cycle_len) {
    std::vector<DirectedFact> facts;
    if (!var.directed() || var.allows_special_edges()) return facts;  // only nontrivial directed variants
    for (int u = 0; u < d.n(); ++u)
        for (int v = 0; v < d.n(); ++v)
            if (u != v && d.arc(u, v) && !triangulated(d, u, v)) {
                DirectedFact f;
                f.kind = DirectedFact::Kind::ArcMustBeLabeled;
                f.arc = {u, v};
                f.text = "arc (" + std::to_string(u) + "," + std::to_string(v) +
                         ") is not triangulated: labeled in every realization";
                facts.push_back(std::move(f));
            }
    bool certified_no = false;
    induced_cycles(d, max_cycle_len, [&](const std::vector<int>& cyc) {
        DirectedFact f;
        f.kind = DirectedFact::Kind::CycleHasUnlabeledArc;
        f.cycle = cyc;
        f.text = "induced directed cycle of length " + std::to_string(cyc.size()) +
                 ": at least one arc unlabeled in every realization";
        facts.push_back(f);
        bool all_nontri = true;
        int L = static_cast<int>(cyc.size());
        for (int i = 0; i < L; ++i)
            if (triangulated(d, cyc[i], cyc[(i + 1) % L])) {
                all_nontri = false;
                break;
            }
        if (all_nontri && !certified_no) {
            certified_no = true;
            DirectedFact g;
            g.kind = DirectedFact::Kind::CertifiedNo;
            g.cycle = cyc;
            g.text = "induced directed cycle of non-triangulated arcs: not realizable";
            facts.push_back(std::move(g));
        }
    });
    return facts;
}

}  // namespace rgr
