#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rgr/digraph.hpp"
#include "rgr/solid.hpp"
#include "rgr/temporal.hpp"

namespace rgr {

struct Piece {
    Digraph d;
    std::vector<int> to_parent;  // piece vertex -> parent vertex; -1 for attached leaves
};

struct SplitOutcome {
    int u = -1, v = -1;  // bridge endpoints in parent ids
    bool special = false;
    Piece piece_u, piece_v;  // piece_u holds G_u plus v (plus leaves at v), etc.
    bool u_out_leaf = false, u_in_leaf = false;  // leaves attached inside piece_u
    bool v_out_leaf = false, v_in_leaf = false;
};

// Splitting at a non-special bridge: the two induced subinstances.
SplitOutcome split_nonspecial(const Digraph& d, const BridgeInfo& b);

// Splitting at a special bridge (AnyStrict only); nullopt when plausible
// reachability fails, which certifies a no-instance.
std::optional<SplitOutcome> split_special(const Digraph& d, const BridgeInfo& b, std::string* why = nullptr);

struct PendantRemoval {
    bool certified_no = false;
    std::string reason;
    Digraph reduced;          // D minus v (valid when !certified_no)
    std::vector<int> to_parent;
    int u = -1, removed = -1, kept = -1;  // witness extension: lab{u,removed} := lab{u,kept}
};

// Removal of a redundant pendant twin; v and w pendant on u, no arc between them.
PendantRemoval remove_redundant_pendant(const Digraph& d, int v, int w, Variant var);

enum class SplitMode { TreeOnly, Full };

struct ExhaustOutcome {
    bool certified_no = false;
    std::string reason;
    std::vector<Piece> pieces;  // irreducible leaf instances, mapped to the root instance
};

// Applies the splitting operations to a fixpoint. TreeOnly skips special
// splits (tree pipeline); Full also splits special bridges with a
// non-normal-form tree side.
ExhaustOutcome exhaust_splits(const Digraph& d, Variant var, SplitMode mode = SplitMode::Full);

using LeafSolver = std::function<RealizeResult(const Digraph&, Variant)>;

// Recursive split-and-merge driver; leaf instances go to `leaf`. A Yes result
// carries a witness assembled from the piece witnesses.
RealizeResult solve_by_splitting(const Digraph& d, Variant var, SplitMode mode, const LeafSolver& leaf);

// Order-preserving remap of two labelings so that they agree on the anchor
// edges and use disjoint values elsewhere. Fails when anchor arities or the
// anchor order patterns differ.
std::optional<std::pair<Labeling, Labeling>> align_two_labelings(
    const Labeling& a, const Labeling& b, const std::vector<std::pair<int, int>>& anchors);

// Greedy label removal to minimality plus the midpoint squeeze on
// double-labeled non-special bridges; result still realizes d.
Labeling make_frugal(const Digraph& d, const Labeling& lab, Variant var);

}  // namespace rgr
