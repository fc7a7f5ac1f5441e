#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rgr/decompose.hpp"
#include "rgr/digraph.hpp"
#include "rgr/solid.hpp"
#include "rgr/temporal.hpp"
#include "rgr/tree.hpp"

namespace rgr {

// W-connector: path in G[V*] between anchor vertices with internal vertices
// outside the anchor set; the extension adds the internals' pendant trees.
struct Connector {
    std::vector<int> path;
    std::vector<int> extension;  // V(C), sorted
    int a() const { return path.front(); }
    int b() const { return path.back(); }
    int a1() const { return path[1]; }                      // a'
    int b1() const { return path[path.size() - 2]; }        // b'
    bool trivial() const { return path.size() <= 4; }       // length <= 3
};

struct FesDecomposition {
    std::vector<std::pair<int, int>> feedback;  // F: complement of a spanning tree
    std::vector<int> X;                          // endpoints of F
    std::vector<int> core;                       // 2-core V*
    std::vector<int> Xstar;                      // X + Y2 + Y3
    std::vector<int> Wstar;                      // set by compute_wstar
    std::vector<Connector> connectors;           // X*-connectors (or W*-connectors)
    std::map<int, std::vector<int>> pendant;     // core vertex -> its pendant tree (excl. root)
};

// F, X, V*, X* and the X*-connectors; requires a connected solid graph.
FesDecomposition compute_decomposition(const Digraph& d);

struct ShrinkResult {
    bool certified_no = false;
    std::string reason;
    Digraph shrunk;
    std::vector<int> to_parent;
    // Removal replay data, innermost-last: each event re-inserts a bridge
    // vertex of a pendant tree by merging a tree realization back in.
    struct Removal {
        Digraph before;                 // instance the removal applied to
        std::vector<int> tree_vertices;  // V(T_v) in `before` ids
        int v;                           // pendant-tree root
        std::vector<std::pair<int, int>> anchors;  // e_s, e_t in `before` ids
        std::vector<int> inner;          // vertices whose incident edges come from the tree witness
        std::vector<int> kept_to_before;  // map of the reduced instance's ids
    };
    std::vector<Removal> removals;
    // Edges of G[V*] that can never receive a label (blocked by a pendant tree).
    std::vector<std::pair<int, int>> blocked_edges;
};

// Pendant-tree sanity checks and the window removal rule.
ShrinkResult shrink_pendant_trees(const Digraph& d, Variant var);

struct WstarResult {
    bool certified_no = false;
    std::string reason;
    FesDecomposition dec;  // with Wstar and W*-connectors filled in
};

WstarResult compute_wstar(const Digraph& d, Variant var);

// The unique boundary edge every dense path realizing the arc must use.
struct EntranceResult {
    bool certified_no = false;
    std::pair<int, int> edge{-1, -1};  // {c, c'}
};

EntranceResult entrance_edge(const Digraph& d, const Connector& p, int v_in, int v_out,
                             bool arc_leaves_connector);

struct ConnectorLabelings {
    bool certified_no = false;
    std::string reason;
    std::vector<Labeling> labelings;  // candidate labelings of E(C)
};

// The L_P sets of the connector-labelings lemma for given boundary pins.
ConnectorLabelings connector_label_sets(const Digraph& d, const Connector& p, Variant var,
                                        const std::vector<Label>& pin_a,
                                        const std::vector<Label>& pin_b);

struct FesOptions {
    int max_grid_levels = 64;
    int threads = 1;
};

// FPT solve for undirected variants, parameterized by the feedback edge set
// number of the solid graph.
RealizeResult fes_solve(const Digraph& d, Variant var, const FesOptions& opt = {});

// Feedback edge set number of the solid graph.
int fes_number(const Digraph& d);

}  // namespace rgr
