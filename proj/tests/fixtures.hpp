#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <vector>

#include "rgr/digraph.hpp"
#include "rgr/labeling.hpp"
#include "rgr/temporal.hpp"
#include "rgr/variant.hpp"

namespace fx {

using namespace rgr;

inline void add_solid(Digraph& d, int u, int v) {
    d.add_arc(u, v);
    d.add_arc(v, u);
}

// Solid path 0-1-2, no dashed arcs.
inline Digraph I1() {
    Digraph d(3);
    add_solid(d, 0, 1);
    add_solid(d, 1, 2);
    return d;
}

// I1 plus the dashed arc (0,2).
inline Digraph I2() {
    Digraph d = I1();
    d.add_arc(0, 2);
    return d;
}

// Solid path a(0)-u(1)-v(2)-b(3) with dashed arcs (a,v) and (u,b); the edge
// {u,v} is the minimal special bridge example.
inline Digraph I3() {
    Digraph d(4);
    add_solid(d, 0, 1);
    add_solid(d, 1, 2);
    add_solid(d, 2, 3);
    d.add_arc(0, 2);
    d.add_arc(1, 3);
    return d;
}

inline Digraph path_graph(int n) {
    Digraph d(n);
    for (int i = 0; i + 1 < n; ++i) add_solid(d, i, i + 1);
    return d;
}

inline Digraph cycle_graph(int n) {
    Digraph d(n);
    for (int i = 0; i < n; ++i) add_solid(d, i, (i + 1) % n);
    return d;
}

inline Digraph directed_cycle(int n) {
    Digraph d(n);
    for (int i = 0; i < n; ++i) d.add_arc(i, (i + 1) % n);
    return d;
}

// Random temporal graph on <= n vertices with up to m undirected edges and
// labels inside [1, lmax].
inline TemporalGraph random_temporal(std::mt19937_64& rng, int n, int m, int lmax) {
    TemporalGraph tg(n, false);
    std::uniform_int_distribution<int> vx(0, n - 1), lab(1, lmax), cnt(1, 2);
    for (int e = 0; e < m; ++e) {
        int u = vx(rng), v = vx(rng);
        if (u == v) continue;
        std::vector<Label> ls;
        int k = cnt(rng);
        for (int i = 0; i < k; ++i) ls.push_back(lab(rng));
        tg.lab.set(u, v, ls);
    }
    return tg;
}

// Exhaustive temporal-walk enumerator; every edge may be reused up to n times.
inline Digraph walk_reachability(const TemporalGraph& tg, Semantics sem) {
    const int n = tg.n;
    Digraph out(n);
    struct TimeEdge {
        int u, v;
        Label t;
    };
    std::vector<TimeEdge> tes;
    for (auto& [k, ls] : tg.lab.entries())
        for (Label t : ls) {
            tes.push_back({k.first, k.second, t});
            if (!tg.directed) tes.push_back({k.second, k.first, t});
        }
    for (int s = 0; s < n; ++s) {
        std::vector<char> seen(n, 0);
        std::vector<int> uses(tes.size(), 0);
        // The extensions possible from a walk depend only on (position, last
        // label); expanded states are skipped to keep the DFS finite-fast.
        std::set<std::pair<int, Label>> expanded;
        std::function<void(int, Label)> walk = [&](int at, Label last) {
            seen[at] = 1;
            if (!expanded.insert({at, last}).second) return;
            for (size_t i = 0; i < tes.size(); ++i) {
                if (tes[i].u != at || uses[i] >= n) continue;
                bool ok = sem == Semantics::Strict ? tes[i].t > last : tes[i].t >= last;
                if (!ok) continue;
                ++uses[i];
                walk(tes[i].v, tes[i].t);
                --uses[i];
            }
        };
        walk(s, 0);
        for (int v = 0; v < n; ++v)
            if (v != s && seen[v]) out.add_arc(s, v);
    }
    return out;
}

// All labeled trees on n vertices via Pruefer sequences, deduplicated by
// degree-sorted canonical adjacency; returns edge lists.
std::vector<std::vector<std::pair<int, int>>> inline all_trees(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (n == 1) {
        out.push_back({});
        return out;
    }
    if (n == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    std::vector<int> seq(n - 2, 0);
    std::set<std::vector<std::pair<int, int>>> seen;
    while (true) {
        // decode Pruefer
        std::vector<int> deg(n, 1);
        for (int x : seq) ++deg[x];
        std::vector<std::pair<int, int>> edges;
        std::vector<int> degc = deg;
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degc[v] == 1) leaves.insert(v);
        for (int x : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            if (--degc[x] == 1) leaves.insert(x);
        }
        int a = *leaves.begin(), b = *std::next(leaves.begin());
        edges.emplace_back(std::min(a, b), std::max(a, b));
        std::sort(edges.begin(), edges.end());
        if (!seen.count(edges)) {
            seen.insert(edges);
            out.push_back(edges);
        }
        // next sequence
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

}  // namespace fx
