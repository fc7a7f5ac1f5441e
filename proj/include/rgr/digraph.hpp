#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rgr {

// Simple directed graph on vertices 0..n-1, adjacency-matrix backed.
// No self-loops, no parallel arcs.
class Digraph {
public:
    Digraph() = default;
    explicit Digraph(int n) : n_(n), adj_(static_cast<size_t>(n) * n, 0) {
        if (n < 0) throw std::invalid_argument("Digraph: negative vertex count");
    }

    int n() const { return n_; }
    int arc_count() const { return arcs_; }

    bool arc(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return false;
        return adj_[idx(u, v)] != 0;
    }

    void add_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Digraph: self-loop rejected");
        if (!adj_[idx(u, v)]) {
            adj_[idx(u, v)] = 1;
            ++arcs_;
        }
    }

    void remove_arc(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) return;
        if (adj_[idx(u, v)]) {
            adj_[idx(u, v)] = 0;
            --arcs_;
        }
    }

    bool solid(int u, int v) const { return u != v && arc(u, v) && arc(v, u); }

    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<size_t>(arcs_));
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v && adj_[idx(u, v)]) out.emplace_back(u, v);
        return out;
    }

    std::vector<int> out_neighbors(int u) const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v)
            if (v != u && adj_[idx(u, v)]) out.push_back(v);
        return out;
    }

    std::vector<int> in_neighbors(int v) const {
        std::vector<int> out;
        for (int u = 0; u < n_; ++u)
            if (u != v && adj_[idx(u, v)]) out.push_back(u);
        return out;
    }

    // Subgraph induced by verts; vertex i of the result is verts[i].
    Digraph induced(const std::vector<int>& verts) const {
        Digraph d(static_cast<int>(verts.size()));
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = 0; j < verts.size(); ++j)
                if (i != j && arc(verts[i], verts[j])) d.add_arc(static_cast<int>(i), static_cast<int>(j));
        return d;
    }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
    bool operator!=(const Digraph& o) const { return !(*this == o); }

    // First arc present in exactly one of the two graphs, if any.
    std::vector<std::pair<int, int>> arc_difference(const Digraph& o) const {
        std::vector<std::pair<int, int>> diff;
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v && adj_[idx(u, v)] != o.adj_[idx(u, v)]) diff.emplace_back(u, v);
        return diff;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Digraph: vertex " + std::to_string(v) + " out of range");
    }
    size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

    int n_ = 0;
    int arcs_ = 0;
    std::vector<uint8_t> adj_;
};

}  // namespace rgr
