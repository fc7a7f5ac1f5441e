#include "rgr/temporal.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

namespace rgr {

namespace {

constexpr Label kInf = std::numeric_limits<Label>::max();

// Undirected snapshot closure: vertices with arrival <= t walk freely inside
// their component of the snapshot graph.
void sweep_nonstrict_undirected(const std::vector<std::pair<int, int>>& snap, std::vector<Label>& arr,
                                Label t, int n) {
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto& [u, v] : snap) parent[find(u)] = find(v);
    std::vector<Label> best(n, kInf);
    for (auto& [u, v] : snap) {
        int r = find(u);
        best[r] = std::min(best[r], std::min(arr[u], arr[v]));
    }
    for (auto& [u, v] : snap) {
        int r = find(u);
        if (best[r] <= t) {
            arr[u] = std::min(arr[u], t);
            arr[v] = std::min(arr[v], t);
        }
    }
}

void sweep_nonstrict_directed(const std::vector<std::pair<int, int>>& snap, std::vector<Label>& arr,
                              Label t, int n) {
    std::vector<std::vector<int>> out(n);
    for (auto& [u, v] : snap) out[u].push_back(v);
    std::queue<int> q;
    std::vector<char> reached(n, 0);
    for (auto& [u, v] : snap)
        if (arr[u] <= t && !reached[u]) {
            reached[u] = 1;
            q.push(u);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : out[u]) {
            if (arr[v] > t) arr[v] = t;
            if (!reached[v]) {
                reached[v] = 1;
                q.push(v);
            }
        }
    }
}

}  // namespace

Digraph reachability(const TemporalGraph& tg, Semantics sem) {
    const int n = tg.n;
    // Events grouped and ordered by time step.
    std::map<Label, std::vector<std::pair<int, int>>> events;
    for (auto& [k, ls] : tg.lab.entries()) {
        if (k.first < 0 || k.first >= n || k.second < 0 || k.second >= n)
            throw std::invalid_argument("reachability: labeling endpoint out of range");
        for (Label t : ls) events[t].emplace_back(k.first, k.second);
    }
    Digraph reach(n);
    for (int s = 0; s < n; ++s) {
        std::vector<Label> arr(n, kInf);
        arr[s] = 0;
        for (auto& [t, snap] : events) {
            if (sem == Semantics::Strict) {
                // One edge per time step; collect then apply to avoid chains.
                std::vector<std::pair<int, Label>> upd;
                for (auto& [u, v] : snap) {
                    if (arr[u] < t) upd.emplace_back(v, t);
                    if (!tg.directed && arr[v] < t) upd.emplace_back(u, t);
                }
                for (auto& [v, tv] : upd) arr[v] = std::min(arr[v], tv);
            } else if (tg.directed) {
                sweep_nonstrict_directed(snap, arr, t, n);
            } else {
                sweep_nonstrict_undirected(snap, arr, t, n);
            }
        }
        for (int v = 0; v < n; ++v)
            if (v != s && arr[v] != kInf) reach.add_arc(s, v);
    }
    return reach;
}

bool reach_within(const TemporalGraph& tg, Semantics sem, const Digraph& allowed) {
    const int n = tg.n;
    std::map<Label, std::vector<std::pair<int, int>>> events;
    for (auto& [k, ls] : tg.lab.entries())
        for (Label t : ls) events[t].emplace_back(k.first, k.second);
    for (int s = 0; s < n; ++s) {
        std::vector<Label> arr(n, kInf);
        arr[s] = 0;
        for (auto& [t, snap] : events) {
            if (sem == Semantics::Strict) {
                std::vector<std::pair<int, Label>> upd;
                for (auto& [u, v] : snap) {
                    if (arr[u] < t) upd.emplace_back(v, t);
                    if (!tg.directed && arr[v] < t) upd.emplace_back(u, t);
                }
                for (auto& [v, tv] : upd) arr[v] = std::min(arr[v], tv);
            } else if (tg.directed) {
                sweep_nonstrict_directed(snap, arr, t, n);
            } else {
                sweep_nonstrict_undirected(snap, arr, t, n);
            }
        }
        for (int v = 0; v < n; ++v)
            if (v != s && arr[v] != kInf && !allowed.arc(s, v)) return false;
    }
    return true;
}

ClassCheck validate_label_class(const TemporalGraph& tg, LabelClass cls) {
    auto edge_name = [](std::pair<int, int> k) {
        return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")";
    };
    if (cls == LabelClass::Simple || cls == LabelClass::Happy) {
        for (auto& [k, ls] : tg.lab.entries())
            if (ls.size() > 1)
                return {false, "simple violated: edge " + edge_name(k) + " has " +
                                   std::to_string(ls.size()) + " labels"};
    }
    if (cls == LabelClass::Proper || cls == LabelClass::Happy) {
        if (!tg.directed) {
            // No two distinct edges sharing an endpoint share a label value.
            std::map<std::pair<int, Label>, std::pair<int, int>> seen;
            for (auto& [k, ls] : tg.lab.entries()) {
                for (Label t : ls) {
                    for (int endp : {k.first, k.second}) {
                        auto it = seen.find({endp, t});
                        if (it != seen.end() && it->second != k)
                            return {false, "proper violated: edges " + edge_name(it->second) + " and " +
                                               edge_name(k) + " share label " + std::to_string(t) +
                                               " at vertex " + std::to_string(endp)};
                    }
                    seen[{k.first, t}] = k;
                    seen[{k.second, t}] = k;
                }
            }
        } else {
            // Directed proper: no two consecutive arcs (u,v),(v,w), u != w,
            // share a label; arcs sharing only a tail or only a head may.
            std::map<std::pair<int, Label>, std::vector<std::pair<int, int>>> by_head;
            for (auto& [k, ls] : tg.lab.entries())
                for (Label t : ls) by_head[{k.second, t}].push_back(k);
            for (auto& [k, ls] : tg.lab.entries()) {
                for (Label t : ls) {
                    auto it = by_head.find({k.first, t});
                    if (it == by_head.end()) continue;
                    for (auto& pred : it->second)
                        if (pred.first != k.second)
                            return {false, "proper violated: arcs " + edge_name(pred) + " and " +
                                               edge_name(k) + " form a path sharing label " +
                                               std::to_string(t)};
                }
            }
        }
    }
    return {};
}

CheckResult check_realization(const Digraph& d, const TemporalGraph& tg, Variant var) {
    if (tg.n != d.n())
        throw std::invalid_argument("check_realization: vertex count mismatch (" +
                                    std::to_string(tg.n) + " vs " + std::to_string(d.n()) + ")");
    if (tg.directed != var.directed())
        return {false, "temporal graph orientation does not match variant"};
    for (auto& [k, ls] : tg.lab.entries()) {
        if (!tg.directed) {
            if (!d.solid(k.first, k.second))
                return {false, "labeled edge {" + std::to_string(k.first) + "," +
                                   std::to_string(k.second) + "} is not a solid edge of D"};
        } else if (!d.arc(k.first, k.second)) {
            return {false, "labeled arc (" + std::to_string(k.first) + "," +
                               std::to_string(k.second) + ") is not an arc of D"};
        }
    }
    auto cc = validate_label_class(tg, var.label_class);
    if (!cc.ok) return {false, cc.violation};
    Digraph r = reachability(tg, var.effective_semantics());
    if (r != d) {
        auto diff = d.arc_difference(r);
        auto& a = diff.front();
        std::string msg = r.arc(a.first, a.second)
                              ? "arc (" + std::to_string(a.first) + "," + std::to_string(a.second) +
                                    ") realized but absent from D"
                              : "arc (" + std::to_string(a.first) + "," + std::to_string(a.second) +
                                    ") of D not realized";
        return {false, msg};
    }
    return {};
}

Labeling compress_labels(const Labeling& lab) {
    auto vals = lab.all_values();
    std::map<Label, Label> remap;
    Label next = 1;
    for (Label v : vals) remap[v] = next++;
    Labeling out(lab.directed());
    for (auto& [k, ls] : lab.entries()) {
        std::vector<Label> nl;
        nl.reserve(ls.size());
        for (Label t : ls) nl.push_back(remap[t]);
        out.set(k.first, k.second, nl);
    }
    return out;
}

Labeling remap_labels(const Labeling& lab, const std::vector<std::pair<Label, Label>>& value_map) {
    std::map<Label, Label> m(value_map.begin(), value_map.end());
    Label prev = std::numeric_limits<Label>::min();
    for (auto& [from, to] : m) {
        if (to <= prev) throw std::invalid_argument("remap_labels: map not strictly increasing");
        prev = to;
    }
    Labeling out(lab.directed());
    for (auto& [k, ls] : lab.entries()) {
        std::vector<Label> nl;
        for (Label t : ls) {
            auto it = m.find(t);
            if (it == m.end()) throw std::invalid_argument("remap_labels: unmapped value");
            nl.push_back(it->second);
        }
        out.set(k.first, k.second, nl);
    }
    return out;
}

}  // namespace rgr
