#include "rgr/exact.hpp"

#include <algorithm>
#include <limits>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <unordered_map>

#include "rgr/solid.hpp"

namespace rgr {

namespace {

std::optional<std::vector<int>> topological_order(const Digraph& d) {
    int n = d.n();
    std::vector<int> indeg(n, 0), order;
    for (auto& [u, v] : d.arcs()) ++indeg[v];
    std::queue<int> q;
    for (int v = 0; v < n; ++v)
        if (!indeg[v]) q.push(v);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int v : d.out_neighbors(u))
            if (--indeg[v] == 0) q.push(v);
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool transitive(const Digraph& d) {
    for (auto& [u, v] : d.arcs())
        for (int w : d.out_neighbors(v))
            if (w != u && !d.arc(u, w)) return false;
    return true;
}

}  // namespace

std::optional<RealizeResult> trivial_directed(const Digraph& d, Variant var) {
    if (!var.directed()) throw std::invalid_argument("trivial_directed: directed variants only");
    if ((var.label_class == LabelClass::Any || var.label_class == LabelClass::Simple) &&
        var.semantics == Semantics::Strict) {
        Labeling lab(true);
        for (auto& [u, v] : d.arcs()) lab.set(u, v, {1});
        auto chk = check_realization(d, TemporalGraph(d.n(), lab), var);
        if (!chk.ok) throw internal_error("all-ones directed witness failed: " + chk.mismatch);
        return RealizeResult::yes_result(lab, "directed-trivial-allones");
    }
    if (auto topo = topological_order(d)) {
        // Sinks to sources; the i-th vertex labels its out-arcs inside its own
        // block, so labels strictly decrease along every directed path.
        Labeling lab(true);
        long long n = std::max(1, d.n());
        for (int i = 0; i < d.n(); ++i) {
            int v = (*topo)[d.n() - 1 - i];
            long long base = static_cast<long long>(i + 1) * n;
            int k = 0;
            for (int w : d.out_neighbors(v)) lab.set(v, w, {base + (++k)});
        }
        auto chk = check_realization(d, TemporalGraph(d.n(), lab), var);
        if (!chk.ok) throw internal_error("DAG block witness failed: " + chk.mismatch);
        return RealizeResult::yes_result(lab, "directed-trivial-dag");
    }
    if (transitive(d)) {
        Labeling lab(true);
        Label next = 1;
        for (auto& [u, v] : d.arcs()) lab.set(u, v, {next++});
        auto chk = check_realization(d, TemporalGraph(d.n(), lab), var);
        if (!chk.ok) throw internal_error("transitive bijection witness failed: " + chk.mismatch);
        return RealizeResult::yes_result(lab, "directed-trivial-transitive");
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Snapshot dynamic program. States are the exactly-realized arc subsets of A
// reachable by appending snapshots; the lifetime dimension collapses because
// useless snapshots can always be dropped.

namespace {

struct DpInstance {
    const Digraph& d;
    Variant var;
    int n;
    std::vector<std::pair<int, int>> arcs;         // indexed arcs of A
    std::vector<std::vector<int>> arc_idx;         // [u][v] -> index or -1
    std::vector<std::pair<int, int>> edges;        // snapshot-usable: solid edges or arcs
    bool directed;

    explicit DpInstance(const Digraph& dd, Variant v) : d(dd), var(v), n(dd.n()) {
        directed = var.directed();
        arcs = d.arcs();
        arc_idx.assign(n, std::vector<int>(n, -1));
        for (size_t i = 0; i < arcs.size(); ++i) arc_idx[arcs[i].first][arcs[i].second] = (int)i;
        if (directed) {
            edges = arcs;
        } else {
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (d.solid(u, v)) edges.emplace_back(u, v);
        }
    }
};

using Mask = uint32_t;

// Arcs newly realizable by appending snapshot S on top of exact reach B.
// Returns false if a pair outside A gets realized.
bool snapshot_new_arcs(const DpInstance& in, Mask B, uint32_t S, Mask& added) {
    const int n = in.n;
    // predecessor vertex-masks under B
    std::vector<uint32_t> pred(n, 0);
    for (size_t i = 0; i < in.arcs.size(); ++i)
        if (B >> i & 1u) pred[in.arcs[i].second] |= 1u << in.arcs[i].first;
    added = 0;
    auto emit = [&](int u, int v) {
        if (u == v) return true;
        int idx = in.arc_idx[u][v];
        if (idx < 0) return false;
        added |= Mask(1) << idx;
        return true;
    };
    bool strict_step = in.var.effective_semantics() == Semantics::Strict || in.var.proper_labels();
    if (strict_step) {
        for (size_t e = 0; e < in.edges.size(); ++e) {
            if (!(S >> e & 1u)) continue;
            auto [w, v] = in.edges[e];
            uint32_t src = pred[w] | (1u << w);
            for (int u = 0; u < n; ++u)
                if (src >> u & 1u && !emit(u, v)) return false;
            if (!in.directed) {
                uint32_t src2 = pred[v] | (1u << v);
                for (int u = 0; u < n; ++u)
                    if (src2 >> u & 1u && !emit(u, w)) return false;
            }
        }
        return true;
    }
    if (!in.directed) {
        // Non-strict: whole snapshot components mix.
        std::vector<int> comp(n, -1);
        int nc = 0;
        std::vector<std::vector<int>> adj(n);
        for (size_t e = 0; e < in.edges.size(); ++e)
            if (S >> e & 1u) {
                adj[in.edges[e].first].push_back(in.edges[e].second);
                adj[in.edges[e].second].push_back(in.edges[e].first);
            }
        for (int s = 0; s < n; ++s) {
            if (comp[s] != -1 || adj[s].empty()) continue;
            std::vector<int> stack{s};
            comp[s] = nc;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : adj[x])
                    if (comp[w] == -1) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
            }
            ++nc;
        }
        std::vector<uint32_t> comp_members(nc, 0);
        for (int v = 0; v < n; ++v)
            if (comp[v] >= 0) comp_members[comp[v]] |= 1u << v;
        for (int v = 0; v < n; ++v) {
            if (comp[v] < 0) continue;
            // sources that reach v: other snapshot-component members and their
            // B-predecessors
            uint32_t others = comp_members[comp[v]] & ~(1u << v);
            uint32_t s2 = 0;
            for (int w = 0; w < n; ++w)
                if (others >> w & 1u) s2 |= pred[w] | (1u << w);
            for (int u = 0; u < n; ++u)
                if (s2 >> u & 1u && u != v && !emit(u, v)) return false;
        }
        return true;
    }
    // Directed non-strict: transitive closure within the snapshot.
    std::vector<uint32_t> step(n, 0);
    for (size_t e = 0; e < in.edges.size(); ++e)
        if (S >> e & 1u) step[in.edges[e].first] |= 1u << in.edges[e].second;
    std::vector<uint32_t> closure = step;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int u = 0; u < n; ++u) {
            uint32_t cur = closure[u];
            uint32_t nxt = cur;
            for (int w = 0; w < n; ++w)
                if (cur >> w & 1u) nxt |= closure[w];
            if (nxt != cur) {
                closure[u] = nxt;
                grew = true;
            }
        }
    }
    for (int w = 0; w < n; ++w) {
        if (!closure[w]) continue;
        uint32_t src = pred[w] | (1u << w);
        for (int v = 0; v < n; ++v) {
            if (!(closure[w] >> v & 1u)) continue;
            for (int u = 0; u < n; ++u)
                if (src >> u & 1u && u != v && !emit(u, v)) return false;
        }
    }
    return true;
}

bool snapshot_class_ok(const DpInstance& in, uint32_t S) {
    if (!in.var.proper_labels()) return true;
    if (!in.directed) {
        // matching
        uint32_t seen = 0;
        for (size_t e = 0; e < in.edges.size(); ++e) {
            if (!(S >> e & 1u)) continue;
            uint32_t m = (1u << in.edges[e].first) | (1u << in.edges[e].second);
            if (seen & m) return false;
            seen |= m;
        }
    } else {
        // no two consecutive arcs
        uint32_t heads = 0, tails = 0;
        for (size_t e = 0; e < in.edges.size(); ++e) {
            if (!(S >> e & 1u)) continue;
            tails |= 1u << in.edges[e].first;
            heads |= 1u << in.edges[e].second;
        }
        if (heads & tails) {
            // allow u->v, v->u pairs: check real 2-paths
            for (size_t e = 0; e < in.edges.size(); ++e) {
                if (!(S >> e & 1u)) continue;
                for (size_t f = 0; f < in.edges.size(); ++f) {
                    if (!(S >> f & 1u) || e == f) continue;
                    if (in.edges[e].second == in.edges[f].first &&
                        in.edges[e].first != in.edges[f].second)
                        return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

RealizeResult dp_solve(const Digraph& d, Variant var, const DpOptions& opt) {
    DpInstance in(d, var);
    const int m = static_cast<int>(in.edges.size());
    const int na = static_cast<int>(in.arcs.size());
    bool simple = var.simple_labels();
    int budget = simple ? opt.arc_budget_simple : opt.arc_budget;
    if (na > budget || na > 28 || m > 22)
        return RealizeResult::unknown_result("dp", "arc-budget-exceeded");
    const Mask full = na == 0 ? 0 : (na >= 32 ? ~Mask(0) : (Mask(1) << na) - 1);

    // Snapshot validity precomputation (proper classes restrict snapshots).
    std::vector<uint32_t> snapshots;
    for (uint32_t S = 1; S < (1u << m); ++S)
        if (snapshot_class_ok(in, S)) snapshots.push_back(S);

    using State = uint64_t;  // reach mask | (remaining-edge mask << 32) for simple
    auto state_of = [&](Mask B, uint32_t E) { return State(B) | (State(E) << 32); };
    uint32_t all_edges = m == 0 ? 0 : (1u << m) - 1;
    State start = state_of(0, simple ? all_edges : all_edges /*unused when !simple*/);
    std::unordered_map<State, std::pair<State, uint32_t>> parent;
    parent[start] = {start, 0};
    std::queue<State> q;
    q.push(start);
    uint64_t explored = 0;
    std::optional<State> goal;
    if (full == 0) goal = start;
    while (!q.empty() && !goal) {
        State cur = q.front();
        q.pop();
        ++explored;
        Mask B = Mask(cur & 0xffffffffu);
        uint32_t avail = simple ? uint32_t(cur >> 32) : all_edges;
        for (uint32_t S : snapshots) {
            if ((S & avail) != S) continue;
            Mask added;
            if (!snapshot_new_arcs(in, B, S, added)) continue;
            Mask nb = B | added;
            if (nb == B) continue;
            State nxt = state_of(nb, simple ? (avail & ~S) : all_edges);
            if (parent.count(nxt)) continue;
            parent[nxt] = {cur, S};
            if (nb == full) {
                goal = nxt;
                break;
            }
            q.push(nxt);
        }
    }
    if (!goal) {
        RealizeResult r = RealizeResult::no_result("dp");
        r.nodes_explored = explored;
        return r;
    }
    // Traceback: snapshots in reverse order become time steps 1..k.
    std::vector<uint32_t> steps;
    for (State s = *goal; s != start; s = parent[s].first) steps.push_back(parent[s].second);
    std::reverse(steps.begin(), steps.end());
    Labeling lab(in.directed);
    for (size_t t = 0; t < steps.size(); ++t)
        for (int e = 0; e < m; ++e)
            if (steps[t] >> e & 1u) lab.add(in.edges[e].first, in.edges[e].second, (Label)t + 1);
    auto chk = check_realization(d, TemporalGraph(d.n(), lab), var);
    if (!chk.ok) throw internal_error("dp traceback witness failed: " + chk.mismatch);
    RealizeResult r = RealizeResult::yes_result(lab, "dp");
    r.nodes_explored = explored;
    return r;
}

// ---------------------------------------------------------------------------
// Oracle: canonical order-pattern enumeration with pruning.

int minimal_label_bound(const Digraph& d, Variant var, int u, int v) {
    if (var.simple_labels()) return 1;
    auto preds_not = [&](int x, int skip) {
        int c = 0;
        for (int w = 0; w < d.n(); ++w)
            if (w != x && w != skip && d.arc(w, x)) ++c;
        return c;
    };
    if (var.directed()) return 1 + preds_not(u, v);
    // Undirected: edges outside solid triangles obey the two/one-label lemma.
    bool in_triangle = false;
    for (int w = 0; w < d.n() && !in_triangle; ++w)
        if (w != u && w != v && d.solid(u, w) && d.solid(v, w)) in_triangle = true;
    if (!in_triangle) return var.allows_special_edges() ? 2 : 1;
    int trav = 2 + preds_not(u, v) + preds_not(v, u);
    return trav;
}

namespace {

struct OracleSearch {
    const Digraph& d;
    Variant var;
    int n;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> cap, min_card;
    std::vector<std::vector<std::vector<int>>> dense_paths;  // per arc: vertex paths
    std::vector<std::pair<int, int>> arc_list;
    Label lambda;
    uint64_t nodes = 0;

    // level_values[i] = distinct label slot; per-edge sets reference levels by id.
    std::vector<int> level_order;  // level ids, ascending label order
    int next_level_id = 0;
    std::vector<std::vector<int>> assigned;  // per edge: level ids (ascending)
    std::optional<Labeling> found;
    int total_budget = 0;          // iterative-deepening bound on total labels
    int total_assigned = 0;
    std::vector<int> suffix_min;   // sum of min_card over edges e..end

    OracleSearch(const Digraph& dd, Variant v, int beta, Label lam) : d(dd), var(v), n(dd.n()), lambda(lam) {
        if (var.directed()) {
            edges = d.arcs();
        } else {
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    if (d.solid(a, b)) edges.emplace_back(a, b);
        }
        SolidGraph g = SolidGraph::of(d);
        std::set<std::pair<int, int>> bridge_set;
        if (!var.directed())
            for (auto& b : bridges(g)) bridge_set.insert({b.u, b.v});
        for (auto& [u, v] : edges) {
            int derived = minimal_label_bound(d, var, u, v);
            cap.push_back(std::min(beta, derived));
            int mc = 0;
            if (!var.directed() && bridge_set.count({u, v})) mc = 1;
            if (var.directed()) {
                bool tri = false;
                for (int w = 0; w < n && !tri; ++w)
                    if (w != u && w != v && d.arc(u, w) && d.arc(w, v)) tri = true;
                if (!tri) mc = 1;
            }
            min_card.push_back(mc);
        }
        arc_list = d.arcs();
        dense_paths.resize(arc_list.size());
        for (size_t i = 0; i < arc_list.size(); ++i) collect_dense_paths(arc_list[i], dense_paths[i]);
    }

    void collect_dense_paths(std::pair<int, int> a, std::vector<std::vector<int>>& out) {
        std::vector<int> path{a.first};
        std::vector<char> used(n, 0);
        used[a.first] = 1;
        std::function<void(int)> dfs = [&](int cur) {
            if (cur == a.second) {
                out.push_back(path);
                return;
            }
            for (int w = 0; w < n; ++w) {
                bool edge_ok = var.directed() ? d.arc(cur, w) : d.solid(cur, w);
                if (used[w] || !edge_ok) continue;
                bool dense = true;
                for (int p : path)
                    if (!d.arc(p, w)) {
                        dense = false;
                        break;
                    }
                if (!dense) continue;
                used[w] = 1;
                path.push_back(w);
                dfs(w);
                path.pop_back();
                used[w] = 0;
            }
        };
        dfs(a.first);
    }

    Labeling materialize(size_t upto) const {
        std::vector<int> rank(next_level_id, 0);
        for (size_t i = 0; i < level_order.size(); ++i) rank[level_order[i]] = static_cast<int>(i) + 1;
        Labeling lab(var.directed());
        for (size_t e = 0; e < upto; ++e) {
            std::vector<Label> ls;
            for (int id : assigned[e]) ls.push_back(rank[id]);
            lab.set(edges[e].first, edges[e].second, ls);
        }
        return lab;
    }

    // Reachability upper bound: edges with index >= upto can be crossed at any
    // time. Arrival = (last exact label, trailing epsilon steps), lexicographic.
    Digraph relaxed_reach(const Labeling& lab, size_t upto) const {
        const int kEpsCap = n + 1;
        Digraph out(n);
        struct Arr {
            Label t;
            int eps;
            bool operator<(const Arr& o) const { return t < o.t || (t == o.t && eps < o.eps); }
        };
        const Arr kInf{std::numeric_limits<Label>::max(), 0};
        bool strict = var.effective_semantics() == Semantics::Strict;
        for (int s = 0; s < n; ++s) {
            std::vector<Arr> arr(n, kInf);
            arr[s] = {0, 0};
            bool grew = true;
            while (grew) {
                grew = false;
                auto relax = [&](int v, Arr a) {
                    if (a < arr[v]) {
                        arr[v] = a;
                        grew = true;
                    }
                };
                auto cross = [&](int a, int b, size_t e) {
                    if (!(arr[a] < kInf)) return;
                    Arr cur = arr[a];
                    if (e >= upto) {
                        int ne = std::min(cur.eps + (strict ? 1 : 0), kEpsCap);
                        relax(b, {cur.t, ne});
                        return;
                    }
                    for (Label v : lab.labels(edges[e].first, edges[e].second)) {
                        bool usable = strict ? (v > cur.t)
                                             : (v > cur.t || (v == cur.t && cur.eps == 0));
                        if (usable) {
                            relax(b, {v, 0});
                            break;  // labels ascend; the first usable is earliest
                        }
                    }
                };
                for (size_t e = 0; e < edges.size(); ++e) {
                    cross(edges[e].first, edges[e].second, e);
                    if (!var.directed()) cross(edges[e].second, edges[e].first, e);
                }
            }
            for (int v = 0; v < n; ++v)
                if (v != s && arr[v] < kInf) out.add_arc(s, v);
        }
        return out;
    }

    // Earliest relaxed arrival when walking one fixed dense path; edges with
    // index >= upto count as available at any real time (epsilon steps).
    bool path_relax_traversable(const std::vector<int>& path, const Labeling& lab, size_t upto,
                                const std::map<std::pair<int, int>, size_t>& eidx) const {
        bool strict = var.effective_semantics() == Semantics::Strict;
        Label t = 0;
        int eps = 0;
        for (size_t j = 0; j + 1 < path.size(); ++j) {
            int a = path[j], b = path[j + 1];
            auto key = var.directed() ? std::make_pair(a, b)
                                      : std::make_pair(std::min(a, b), std::max(a, b));
            size_t e = eidx.at(key);
            if (e >= upto) {
                if (strict) ++eps;
                continue;
            }
            bool crossed = false;
            for (Label v : lab.labels(key.first, key.second)) {
                bool usable = strict ? (v > t) : (v > t || (v == t && eps == 0));
                if (usable) {
                    t = v;
                    eps = 0;
                    crossed = true;
                    break;
                }
            }
            if (!crossed) return false;
        }
        return true;
    }

    bool prune(size_t upto) {
        Labeling lab = materialize(upto);
        Digraph r = reachability(TemporalGraph(n, lab), var.effective_semantics());
        for (auto& [u, v] : r.arcs())
            if (!d.arc(u, v)) return true;
        // Every required arc must keep at least one dense path traversable in
        // the relaxation where unassigned edges are available at any time;
        // any concrete completion is dominated by that relaxation.
        std::map<std::pair<int, int>, size_t> eidx;
        for (size_t e = 0; e < edges.size(); ++e) eidx[edges[e]] = e;
        for (size_t i = 0; i < arc_list.size(); ++i) {
            if (dense_paths[i].empty()) return true;  // unrealizable arc
            bool live = false;
            for (auto& path : dense_paths[i])
                if (path_relax_traversable(path, lab, upto, eidx)) {
                    live = true;
                    break;
                }
            if (!live) return true;
        }
        return false;
    }

    bool proper_conflict(size_t e) const {
        if (!var.proper_labels()) return false;
        auto [u, v] = edges[e];
        for (size_t f = 0; f < e; ++f) {
            auto [a, b] = edges[f];
            bool adjacent;
            if (!var.directed())
                adjacent = (a == u || a == v || b == u || b == v);
            else
                adjacent = (b == u && a != v) || (v == a && u != b);  // consecutive arcs
            if (!adjacent) continue;
            for (int x : assigned[e])
                for (int y : assigned[f])
                    if (x == y) return true;
        }
        return false;
    }

    bool dfs(size_t e) {
        {
            // Leaving every remaining edge unlabeled may already be a witness.
            Labeling lab = materialize(e);
            if (check_realization(d, TemporalGraph(n, lab), var).ok) {
                found = lab;
                return true;
            }
        }
        if (e == edges.size()) return false;
        if (total_assigned + suffix_min[e] > total_budget) return false;
        // Candidate label sets of size k as sorted token sequences; tokens are
        // existing levels (position p uses level_order[p]) or gap insertions.
        int K = static_cast<int>(level_order.size());
        std::function<bool(int, int)> choose = [&](int k, int min_slot) -> bool {
            if (k == 0) {
                ++nodes;
                if (static_cast<int>(level_order.size()) > lambda) return false;
                if (proper_conflict(e)) return false;
                if (prune(e + 1)) return false;
                return dfs(e + 1);
            }
            for (int slot = min_slot; slot <= static_cast<int>(level_order.size()); ++slot) {
                if (slot < static_cast<int>(level_order.size())) {
                    // reuse the existing level at `slot`
                    assigned[e].push_back(level_order[slot]);
                    if (choose(k - 1, slot + 1)) return true;
                    assigned[e].pop_back();
                }
                // insert a new level just before position `slot`
                int id = next_level_id++;
                level_order.insert(level_order.begin() + slot, id);
                assigned[e].push_back(id);
                if (choose(k - 1, slot + 1)) return true;
                assigned[e].pop_back();
                level_order.erase(level_order.begin() + slot);
                --next_level_id;
            }
            return false;
        };
        int kmax = std::min(cap[e], total_budget - total_assigned -
                                        (e + 1 < edges.size() ? suffix_min[e + 1] : 0));
        for (int k = min_card[e]; k <= kmax; ++k) {
            assigned[e].clear();
            total_assigned += k;
            bool hit = choose(k, 0);
            total_assigned -= k;
            if (hit) return true;
            }
        assigned[e].clear();
        return false;
    }
};

}  // namespace

RealizeResult oracle_solve(const Digraph& d, Variant var, int beta, Label lambda) {
    if (var.directed() && (var.label_class == LabelClass::Any || var.label_class == LabelClass::Simple) &&
        var.semantics == Semantics::Strict) {
        // Trivial yes; keep the oracle total.
        auto t = trivial_directed(d, var);
        if (t) {
            t->method = "oracle";
            return *t;
        }
    }
    OracleSearch s(d, var, beta, lambda);
    s.assigned.resize(s.edges.size());
    s.suffix_min.assign(s.edges.size() + 1, 0);
    for (size_t e = s.edges.size(); e-- > 0;) s.suffix_min[e] = s.suffix_min[e + 1] + s.min_card[e];
    bool certifiable = true;
    long long total_needed = 0;
    int cap_sum = 0;
    for (size_t e = 0; e < s.edges.size(); ++e) {
        int derived = minimal_label_bound(d, var, s.edges[e].first, s.edges[e].second);
        if (derived > beta) certifiable = false;
        total_needed += derived;
        cap_sum += s.cap[e];
    }
    if (total_needed > lambda) certifiable = false;
    // Iterative deepening on the total label count: small witnesses surface
    // fast, the final iteration is the exhaustive pass.
    for (int budget = s.suffix_min[0]; budget <= cap_sum; ++budget) {
        s.total_budget = budget;
        if (s.dfs(0)) {
            auto res = RealizeResult::yes_result(*s.found, "oracle");
            res.nodes_explored = s.nodes;
            return res;
        }
    }
    RealizeResult res = certifiable
                            ? RealizeResult::no_result("oracle")
                            : RealizeResult::unknown_result("oracle", "bounds not provably sufficient");
    res.nodes_explored = s.nodes;
    return res;
}

}  // namespace rgr
