#include "rgr/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rgr {

namespace {

// Vertex sequence of the unique tree path from u to v.
std::vector<int> tree_path(const SolidGraph& g, int u, int v) {
    std::vector<int> parent(g.n, -2);
    std::vector<int> stack{u};
    parent[u] = -1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == v) break;
        for (int w : g.adj[x])
            if (parent[w] == -2) {
                parent[w] = x;
                stack.push_back(w);
            }
    }
    std::vector<int> path;
    for (int x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

struct TreeContext {
    SolidGraph g;
    std::map<std::pair<int, int>, bool> special;  // per edge, u < v
    bool is_special(int u, int v) const {
        if (u > v) std::swap(u, v);
        return special.at({u, v});
    }
};

TreeContext make_context(const Digraph& d) {
    TreeContext c;
    c.g = SolidGraph::of(d);
    auto bs = bridges(c.g);
    for (auto& b : bs) {
        classify_bridge(d, b);
        c.special[{b.u, b.v}] = b.kind == BridgeKind::Special;
    }
    return c;
}

bool path_minimal_nonarc(const Digraph& d, const std::vector<int>& path) {
    int p = static_cast<int>(path.size()) - 1;
    for (int i = 0; i <= p; ++i)
        for (int j = i + 1; j <= p; ++j) {
            if (i == 0 && j == p) continue;
            if (!d.arc(path[i], path[j])) return false;
        }
    return true;
}

}  // namespace

TreePrecheck tree_prechecks(const Digraph& d, Variant var) {
    TreeContext c = make_context(d);
    if (!c.g.is_tree()) throw std::invalid_argument("tree_prechecks: solid graph is not a tree");
    auto name = [](int u, int v) { return "{" + std::to_string(u) + "," + std::to_string(v) + "}"; };
    if (!var.allows_special_edges()) {
        for (auto& [e, sp] : c.special)
            if (sp)
                return {false, "special solid edge " + name(e.first, e.second) +
                                   " is fatal for this variant"};
    }
    // Adjacent pairs.
    for (int mid = 0; mid < c.g.n; ++mid) {
        const auto& nb = c.g.adj[mid];
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                int u = nb[i], v = nb[j];
                if (d.arc(u, v) || d.arc(v, u)) continue;
                if (var.adjacent_noarc_fatal())
                    return {false, "adjacent edges at " + std::to_string(mid) + " towards " +
                                       std::to_string(u) + " and " + std::to_string(v) +
                                       " with no arc between them"};
                if (c.is_special(u, mid) || c.is_special(v, mid))
                    return {false, "adjacent edges at " + std::to_string(mid) +
                                       " must share a single label but one is special"};
            }
    }
    // Every arc needs its path interior closed.
    for (auto& [u, v] : d.arcs()) {
        auto path = tree_path(c.g, u, v);
        for (size_t i = 1; i + 1 < path.size(); ++i) {
            if (!d.arc(u, path[i]))
                return {false, "arc (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") lacks interior arc to " + std::to_string(path[i])};
            if (!d.arc(path[i], v))
                return {false, "arc (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") lacks interior arc from " + std::to_string(path[i])};
        }
    }
    // Minimal non-arcs of length >= 3: non-special ends, special interior.
    for (int u = 0; u < d.n(); ++u)
        for (int v = 0; v < d.n(); ++v) {
            if (u == v || d.arc(u, v)) continue;
            auto path = tree_path(c.g, u, v);
            int p = static_cast<int>(path.size()) - 1;
            if (p < 3 || !path_minimal_nonarc(d, path)) continue;
            if (c.is_special(path[0], path[1]) || c.is_special(path[p - 1], path[p]))
                return {false, "minimal non-arc (" + std::to_string(u) + "," + std::to_string(v) +
                                   ") with a special end edge"};
            for (int i = 1; i + 1 < p; ++i)
                if (!c.is_special(path[i], path[i + 1]))
                    return {false, "minimal non-arc (" + std::to_string(u) + "," +
                                       std::to_string(v) + ") with a non-special interior edge"};
        }
    return {};
}

TreeLP build_tree_lp(const Digraph& d, const Prelabels* pins) {
    TreeContext c = make_context(d);
    TreeLP t;
    t.edges = c.g.edges;
    std::map<std::pair<int, int>, int> eidx;
    for (size_t i = 0; i < t.edges.size(); ++i) eidx[t.edges[i]] = static_cast<int>(i);
    t.special.resize(t.edges.size());
    for (size_t i = 0; i < t.edges.size(); ++i) t.special[i] = c.is_special(t.edges[i].first, t.edges[i].second);
    t.lp = LinearProgram(2 * static_cast<int>(t.edges.size()));
    auto E = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        return eidx.at({u, v});
    };
    using Rel = LinearProgram::Rel;
    // Edge arities.
    for (size_t i = 0; i < t.edges.size(); ++i) {
        int e = static_cast<int>(i);
        if (t.special[i])
            t.lp.add_row({{t.var_high(e), 1}, {t.var_low(e), -1}}, Rel::Ge, 1);
        else
            t.lp.add_row({{t.var_high(e), 1}, {t.var_low(e), -1}}, Rel::Eq, 0);
    }
    // Adjacent pairs.
    for (int mid = 0; mid < c.g.n; ++mid) {
        const auto& nb = c.g.adj[mid];
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = 0; j < nb.size(); ++j) {
                if (i == j) continue;
                int u = nb[i], v = nb[j];
                int e = E(u, mid), f = E(mid, v);
                if (d.arc(u, v)) {
                    t.lp.add_row({{t.var_high(f), 1}, {t.var_low(e), -1}}, Rel::Ge, 1);
                    t.lp.add_row({{t.var_low(f), 1}, {t.var_high(e), -1}}, Rel::Ge, 0);
                } else if (i < j && !d.arc(v, u)) {
                    t.lp.add_row({{t.var_low(e), 1}, {t.var_low(f), -1}}, Rel::Eq, 0);
                }
            }
    }
    // Minimal non-arcs of length >= 3: tight chains.
    for (int u = 0; u < d.n(); ++u)
        for (int v = 0; v < d.n(); ++v) {
            if (u == v || d.arc(u, v)) continue;
            auto path = tree_path(c.g, u, v);
            int p = static_cast<int>(path.size()) - 1;
            if (p < 3 || !path_minimal_nonarc(d, path)) continue;
            for (int i = 0; i + 1 < p; ++i) {
                int e = E(path[i], path[i + 1]), f = E(path[i + 1], path[i + 2]);
                t.lp.add_row({{t.var_high(e), 1}, {t.var_low(f), -1}}, Rel::Eq, 0);
            }
        }
    // Maximal arcs: a positive gap inside every run between consecutive
    // non-special edges.
    std::vector<std::pair<int, int>> arcs = d.arcs();
    std::map<std::pair<int, int>, std::vector<int>> paths;
    for (auto& a : arcs) paths[a] = tree_path(c.g, a.first, a.second);
    auto contains_subpath = [&](const std::vector<int>& big, const std::vector<int>& small) {
        auto it = std::find(big.begin(), big.end(), small.front());
        if (it == big.end() || big.end() - it < static_cast<long>(small.size())) return false;
        return std::equal(small.begin(), small.end(), it);
    };
    for (auto& a : arcs) {
        bool maximal = true;
        for (auto& b : arcs)
            if (a != b && paths[b].size() > paths[a].size() && contains_subpath(paths[b], paths[a])) {
                maximal = false;
                break;
            }
        if (!maximal) continue;
        const auto& path = paths[a];
        int p = static_cast<int>(path.size()) - 1;
        std::vector<int> nonspecial_at;
        for (int i = 0; i < p; ++i)
            if (!c.is_special(path[i], path[i + 1])) nonspecial_at.push_back(i);
        for (size_t s = 0; s + 1 < nonspecial_at.size(); ++s) {
            std::vector<std::pair<int, Rational>> terms;
            for (int i = nonspecial_at[s]; i < nonspecial_at[s + 1]; ++i) {
                terms.push_back({t.var_low(E(path[i + 1], path[i + 2])), 1});
                terms.push_back({t.var_high(E(path[i], path[i + 1])), -1});
            }
            t.lp.add_row(std::move(terms), Rel::Ge, 1);
        }
    }
    // Pins as equality rows.
    if (pins) {
        for (auto& [edge, vals] : pins->pins) {
            if (vals.empty() || vals.size() > 2)
                throw std::invalid_argument("prelabel must carry one or two values");
            int e = E(edge.first, edge.second);
            t.lp.add_row({{t.var_low(e), 1}}, Rel::Eq, Rational(vals.front()));
            t.lp.add_row({{t.var_high(e), 1}}, Rel::Eq, Rational(vals.back()));
        }
    }
    return t;
}

Labeling integerize(const TreeLP& t, const std::vector<Rational>& x, const Prelabels* pins) {
    std::set<Rational> values;
    for (size_t e = 0; e < t.edges.size(); ++e) {
        values.insert(x[t.var_low(e)]);
        values.insert(x[t.var_high(e)]);
    }
    std::set<Rational> pinned;
    if (pins)
        for (auto& [edge, vals] : pins->pins)
            for (Label v : vals) pinned.insert(Rational(v));
    std::map<Rational, Label> to_int;
    std::vector<Rational> sorted(values.begin(), values.end());
    // Runs of unpinned values between pins get consecutive integers packed
    // just above the lower pin; the spacing rule guarantees room.
    size_t i = 0;
    Label lower = 0;
    while (i < sorted.size()) {
        if (pinned.count(sorted[i])) {
            to_int[sorted[i]] = static_cast<Label>(boost::multiprecision::numerator(sorted[i]).convert_to<long long>());
            lower = to_int[sorted[i]];
            ++i;
            continue;
        }
        size_t j = i;
        while (j < sorted.size() && !pinned.count(sorted[j])) ++j;
        Label upper = -1;
        if (j < sorted.size())
            upper = static_cast<Label>(boost::multiprecision::numerator(sorted[j]).convert_to<long long>());
        Label count = static_cast<Label>(j - i);
        Label start;
        if (upper >= 0) {
            start = upper - count;  // pack just below the upper pin
            if (start <= lower) throw internal_error("integerize: pin gap too small");
        } else {
            start = lower + 1;
        }
        for (size_t k = i; k < j; ++k) to_int[sorted[k]] = start + static_cast<Label>(k - i);
        lower = start + count - 1;
        i = j;
    }
    Labeling lab(false);
    for (size_t e = 0; e < t.edges.size(); ++e) {
        Label lo = to_int[x[t.var_low(e)]], hi = to_int[x[t.var_high(e)]];
        if (lo == hi)
            lab.set(t.edges[e].first, t.edges[e].second, {lo});
        else
            lab.set(t.edges[e].first, t.edges[e].second, {lo, hi});
    }
    return lab;
}

namespace {

// Star labeling of a simplified tree instance piece.
RealizeResult star_solve(const Digraph& d, Variant var) {
    const int n = d.n();
    TreeContext c = make_context(d);
    if (!c.g.is_tree()) throw internal_error("star_solve: piece is not tree-solid");
    Labeling lab(false);
    if (n <= 1) return RealizeResult::yes_result(lab, "tree-star");
    if (n == 2) {
        lab.set(0, 1, {1});
        return RealizeResult::yes_result(lab, "tree-star");
    }
    auto precheck = tree_prechecks(d, var);
    if (!precheck.ok) return RealizeResult::no_result("tree-star", precheck.why);

    std::vector<int> internals;
    for (int v = 0; v < n; ++v)
        if (c.g.degree(v) >= 2) internals.push_back(v);
    // Topological neighbor orders; missing tournament certifies a no-instance.
    std::map<int, std::vector<int>> order;
    for (int u : internals) {
        auto t = star_leaf_tournament(d, c.g.adj[u]);
        if (!t)
            return RealizeResult::no_result("tree-star", "star at " + std::to_string(u) +
                                                             " has no complete-DAG leaf order");
        order[u] = *t;
    }
    // Subtree beyond v when coming from u.
    auto side = [&](int u, int v) {
        std::vector<int> out, stack{v};
        std::vector<char> seen(n, 0);
        seen[u] = seen[v] = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            out.push_back(x);
            for (int w : c.g.adj[x])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        return out;
    };
    // Per-star labelings (local integer labels).
    std::map<int, std::map<std::pair<int, int>, std::vector<Label>>> star_lab;
    for (int u : internals) {
        const auto& ord = order[u];
        int k = static_cast<int>(ord.size());
        std::vector<std::vector<int>> sides(k);
        for (int i = 0; i < k; ++i) sides[i] = side(u, ord[i]);
        auto dbl = [&](int i) { return c.is_special(u, ord[i]); };
        std::vector<std::vector<Label>> lbl(k);
        lbl[0] = dbl(0) ? std::vector<Label>{1, 2} : std::vector<Label>{1};
        for (int i = 1; i < k; ++i) {
            Label a = lbl[i - 1].back();
            bool share = false;
            if (dbl(i - 1) && !dbl(i)) {
                bool next_double = (i + 1 < k) && dbl(i + 1);
                for (int w : sides[i - 1]) {
                    if (!d.arc(w, u)) continue;
                    if (!d.arc(w, ord[i])) {
                        share = true;
                        break;
                    }
                    if (next_double) {
                        for (int y : sides[i + 1])
                            if (d.arc(u, y) && !d.arc(w, y)) {
                                share = true;
                                break;
                            }
                        if (share) break;
                    }
                }
                lbl[i] = {share ? a : a + 1};
            } else if (dbl(i - 1) && dbl(i)) {
                for (int w : sides[i - 1]) {
                    if (!d.arc(w, u)) continue;
                    for (int y : sides[i])
                        if (d.arc(u, y) && !d.arc(w, y)) {
                            share = true;
                            break;
                        }
                    if (share) break;
                }
                lbl[i] = share ? std::vector<Label>{a, a + 1} : std::vector<Label>{a + 1, a + 2};
            } else if (!dbl(i - 1) && !dbl(i)) {
                lbl[i] = {a + 1};
            } else {
                for (int w : sides[i])
                    if (d.arc(u, w) && !d.arc(ord[i - 1], w)) {
                        share = true;
                        break;
                    }
                lbl[i] = share ? std::vector<Label>{a, a + 1} : std::vector<Label>{a + 1, a + 2};
            }
        }
        for (int i = 0; i < k; ++i)
            star_lab[u][Labeling::key(false, u, ord[i])] = lbl[i];
    }
    // Merge stars in DFS preorder from the smallest internal vertex, shifting
    // each new star so the labels on the shared edge coincide.
    std::map<std::pair<int, int>, std::vector<Label>> merged;
    std::vector<char> star_done(n, 0);
    std::function<void(int)> merge_star = [&](int u) {
        star_done[u] = 1;
        Label shift = 0;
        bool have_shift = false;
        for (auto& [e, ls] : star_lab[u]) {
            auto it = merged.find(e);
            if (it != merged.end()) {
                shift = it->second.front() - ls.front();
                have_shift = true;
                break;
            }
        }
        (void)have_shift;
        for (auto& [e, ls] : star_lab[u]) {
            std::vector<Label> shifted;
            for (Label t : ls) shifted.push_back(t + shift);
            auto it = merged.find(e);
            if (it == merged.end()) merged[e] = shifted;
        }
        for (int w : c.g.adj[u])
            if (c.g.degree(w) >= 2 && !star_done[w]) merge_star(w);
    };
    merge_star(internals.front());
    Label min_label = 0;
    for (auto& [e, ls] : merged) min_label = std::min(min_label, ls.front() - 1);
    Labeling out(false);
    for (auto& [e, ls] : merged) {
        std::vector<Label> pos;
        for (Label t : ls) pos.push_back(t - min_label);
        out.set(e.first, e.second, pos);
    }
    // Generate-and-test: the theorem outputs the labeling only if it realizes D.
    if (!check_realization(d, TemporalGraph(n, out), var).ok)
        return RealizeResult::no_result("tree-star", "star labeling does not realize the piece");
    return RealizeResult::yes_result(out, "tree-star");
}

}  // namespace

RealizeResult solve_tree_combinatorial(const Digraph& d, Variant var) {
    if (!var.allows_special_edges())
        throw std::invalid_argument("solve_tree_combinatorial handles the strict any-label variant only");
    if (SolidGraph::of(d).is_tree()) {
        auto pre = tree_prechecks(d, var);
        if (!pre.ok) return RealizeResult::no_result("tree-combinatorial", pre.why);
    }
    auto res = solve_by_splitting(d, var, SplitMode::TreeOnly, star_solve);
    if (res.yes()) {
        // Generate-and-test: the assembled labeling either realizes D or no
        // labeling does.
        if (!check_realization(d, TemporalGraph(d.n(), *res.witness), var).ok)
            return RealizeResult::no_result("tree-combinatorial",
                                            "assembled labeling does not realize the instance");
        res.method = "tree-combinatorial";
    }
    return res;
}

RealizeResult solve_tree(const Digraph& d, Variant var, const Prelabels* pins) {
    if (var.directed()) throw std::invalid_argument("solve_tree: undirected variants only");
    SolidGraph g = SolidGraph::of(d);
    if (!g.is_tree()) throw std::invalid_argument("solve_tree: solid graph is not a tree");
    if (d.n() <= 1) return RealizeResult::yes_result(Labeling(false), "tree");
    auto pre = tree_prechecks(d, var);
    if (!pre.ok) return RealizeResult::no_result("tree", pre.why);
    if (pins) {
        // Spacing rule: pinned values at least 2n, pairwise 2n apart.
        std::set<Label> vals;
        for (auto& [e, ls] : pins->pins) vals.insert(ls.begin(), ls.end());
        Label prev = 0;
        for (Label v : vals) {
            if (v - prev < 2 * d.n())
                throw std::invalid_argument("prelabel values must be spaced by at least 2n");
            prev = v;
        }
    }
    RealizeResult res;
    if (var.allows_special_edges() && !pins) {
        res = solve_tree_combinatorial(d, var);
    } else {
        TreeLP t = build_tree_lp(d, pins);
        auto x = t.lp.solve();
        if (!x) return RealizeResult::no_result("tree-lp", "feasibility LP infeasible");
        Labeling lab = integerize(t, *x, pins);
        res = RealizeResult::yes_result(lab, "tree-lp");
    }
    if (res.yes()) {
        auto chk = check_realization(d, TemporalGraph(d.n(), *res.witness), var);
        if (!chk.ok) throw internal_error("tree witness failed certification: " + chk.mismatch);
    }
    return res;
}

}  // namespace rgr
