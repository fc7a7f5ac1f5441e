#pragma once

#include <optional>

#include "rgr/decompose.hpp"
#include "rgr/digraph.hpp"
#include "rgr/lp.hpp"
#include "rgr/temporal.hpp"

namespace rgr {

struct TreePrecheck {
    bool ok = true;
    std::string why;
};

// Necessary conditions for tree-solid instances, variant-aware.
TreePrecheck tree_prechecks(const Digraph& d, Variant var);

// Pinned labels on edges; values must be multiples of an integer >= 2n,
// pairwise 2n apart (the pre-labeled tree corollary's spacing rule).
struct Prelabels {
    std::vector<std::pair<std::pair<int, int>, std::vector<Label>>> pins;
};

// The tree feasibility LP: per edge a low/high variable pair, constraint rows
// from the edge arities, adjacent pairs, minimal non-arcs and maximal arcs.
struct TreeLP {
    std::vector<std::pair<int, int>> edges;  // u < v
    std::vector<bool> special;
    LinearProgram lp{0};
    int var_low(int e) const { return 2 * e; }
    int var_high(int e) const { return 2 * e + 1; }
};

TreeLP build_tree_lp(const Digraph& d, const Prelabels* pins);

// Rational solution -> integer labeling preserving order and pinned values.
Labeling integerize(const TreeLP& t, const std::vector<Rational>& x, const Prelabels* pins);

// Combinatorial star-labeling algorithm for AnyStrict tree instances.
RealizeResult solve_tree_combinatorial(const Digraph& d, Variant var);

// Full dispatch: prechecks, then combinatorial or LP route per variant,
// result certified before a Yes is returned.
RealizeResult solve_tree(const Digraph& d, Variant var, const Prelabels* pins = nullptr);

}  // namespace rgr
