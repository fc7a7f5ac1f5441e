#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rgr/digraph.hpp"
#include "rgr/variant.hpp"

namespace rgr {

// Undirected graph of solid edges of D: {u,v} with D_uv = D_vu = 1.
struct SolidGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted
    std::vector<std::vector<int>> adj;

    static SolidGraph of(const Digraph& d);

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    std::vector<std::vector<int>> components() const;
    bool connected() const { return components().size() <= 1; }
    bool is_tree() const;
};

// One-directional arcs of D.
std::vector<std::pair<int, int>> dashed_arcs(const Digraph& d);

enum class BridgeKind { Unset, Special, NonSpecial };

struct BridgeInfo {
    int u = -1, v = -1;
    std::vector<int> side_u, side_v;  // vertex sets of the components after deletion
    BridgeKind kind = BridgeKind::Unset;
};

// All bridges of G with side partitions, via lowpoint DFS plus per-bridge BFS.
std::vector<BridgeInfo> bridges(const SolidGraph& g);

// Special iff some dashed pair violates one-label transitivity across the bridge.
BridgeKind classify_bridge(const Digraph& d, BridgeInfo& b);

// Reach classes across a special bridge; ok=false certifies a no-instance.
struct ReachClasses {
    struct Side {
        bool has_witness = false;        // a witnessing pair exists on this side
        std::set<int> full;              // R across from the bridge endpoint itself
        std::set<int> mid;               // common witness class (three-class form only)
    };
    bool ok = false;
    std::string why;
    Side from_u, from_v;  // from_u: reach of V(G_u) vertices into V(G_v)
};

ReachClasses plausible_reachability(const Digraph& d, const BridgeInfo& b);

// Bundled/separated relations for adjacent bridges {u,c},{v,c} of G.
bool bundled(const Digraph& d, int c, int u, int v);
bool separated(const Digraph& d, int c, int u, int v, Variant var);

enum class DensePath { Yes, No, Budget };

// Path from u to v in G avoiding `forbidden` whose every ordered vertex pair
// (earlier, later) is an arc of D. Exponential in general; budget-guarded.
DensePath dense_path_exists(const Digraph& d, int u, int v, const std::vector<int>& forbidden,
                            long long budget = 2'000'000);

// Unique topological order of D[leaves] when it is an acyclic tournament.
std::optional<std::vector<int>> star_leaf_tournament(const Digraph& d, const std::vector<int>& leaves);

struct DirectedFact {
    enum class Kind { CycleHasUnlabeledArc, ArcMustBeLabeled, CertifiedNo } kind;
    std::vector<int> cycle;        // for cycle facts
    std::pair<int, int> arc{-1, -1};  // for arc facts
    std::string text;
};

// Necessary-condition facts for directed proper/happy/non-strict variants.
// Induced-cycle search is bounded to cycles of length <= max_cycle_len.
std::vector<DirectedFact> directed_prune_checks(const Digraph& d, Variant var, int max_cycle_len = 6);

}  // namespace rgr
