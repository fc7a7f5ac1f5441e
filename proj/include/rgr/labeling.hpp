#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rgr {

using Label = long long;

// Partial map from solid edges (undirected mode, keys canonicalized u<v) or
// arcs (directed mode) to strictly sorted sets of positive time labels.
// Empty label sets are valid entries; they mark edges of the underlying
// graph that are present but never active.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(bool directed) : directed_(directed) {}

    bool directed() const { return directed_; }

    static std::pair<int, int> key(bool directed, int u, int v) {
        if (u == v) throw std::invalid_argument("Labeling: self-loop key");
        if (!directed && u > v) std::swap(u, v);
        return {u, v};
    }
    std::pair<int, int> key(int u, int v) const { return key(directed_, u, v); }

    void set(int u, int v, std::vector<Label> labels) {
        std::sort(labels.begin(), labels.end());
        labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
        for (Label t : labels)
            if (t < 1) throw std::invalid_argument("Labeling: labels must be positive");
        entries_[key(u, v)] = std::move(labels);
    }

    void add(int u, int v, Label t) {
        if (t < 1) throw std::invalid_argument("Labeling: labels must be positive");
        auto& ls = entries_[key(u, v)];
        auto it = std::lower_bound(ls.begin(), ls.end(), t);
        if (it == ls.end() || *it != t) ls.insert(it, t);
    }

    void erase_entry(int u, int v) { entries_.erase(key(u, v)); }

    bool has_entry(int u, int v) const { return entries_.count(key(u, v)) != 0; }

    // Labels of an edge; empty if the edge is not keyed.
    const std::vector<Label>& labels(int u, int v) const {
        static const std::vector<Label> none;
        auto it = entries_.find(key(u, v));
        return it == entries_.end() ? none : it->second;
    }

    const std::map<std::pair<int, int>, std::vector<Label>>& entries() const { return entries_; }
    std::map<std::pair<int, int>, std::vector<Label>>& entries() { return entries_; }

    size_t edge_count() const { return entries_.size(); }

    Label max_label() const {
        Label m = 0;
        for (auto& [k, ls] : entries_)
            if (!ls.empty()) m = std::max(m, ls.back());
        return m;
    }

    std::vector<Label> all_values() const {
        std::vector<Label> vals;
        for (auto& [k, ls] : entries_) vals.insert(vals.end(), ls.begin(), ls.end());
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        return vals;
    }

    bool operator==(const Labeling& o) const {
        return directed_ == o.directed_ && entries_ == o.entries_;
    }

private:
    bool directed_ = false;
    std::map<std::pair<int, int>, std::vector<Label>> entries_;
};

// A temporal graph: labeling plus vertex count and orientation mode. The
// underlying topology is the set of keyed edges.
struct TemporalGraph {
    int n = 0;
    bool directed = false;
    Labeling lab;

    TemporalGraph() = default;
    TemporalGraph(int n_, bool directed_) : n(n_), directed(directed_), lab(directed_) {}
    TemporalGraph(int n_, Labeling l) : n(n_), directed(l.directed()), lab(std::move(l)) {}
};

}  // namespace rgr
