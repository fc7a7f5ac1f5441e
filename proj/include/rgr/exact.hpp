#pragma once

#include <optional>

#include "rgr/digraph.hpp"
#include "rgr/temporal.hpp"

namespace rgr {

// Trivial directed constructions: strict any/simple (all-ones labeling),
// DAGs (decreasing block labels), transitive graphs (arbitrary bijection).
// nullopt when no trivial case applies.
std::optional<RealizeResult> trivial_directed(const Digraph& d, Variant var);

struct DpOptions {
    int arc_budget = 22;
    int arc_budget_simple = 18;  // the simple variants carry an extra edge-set dimension
};

// Exact decision for all variants via the snapshot dynamic program over arc
// subsets; witness reconstructed by traceback and certified.
RealizeResult dp_solve(const Digraph& d, Variant var, const DpOptions& opt = {});

// Bounded brute-force labeling enumeration over canonical label patterns.
// Yes answers carry certified witnesses. No is only reported when
// (beta, lambda) provably cover every minimal realization of the instance;
// otherwise Unknown.
RealizeResult oracle_solve(const Digraph& d, Variant var, int beta, Label lambda);

// Per-edge upper bound on labels in minimal realizations: the traverser-count
// bound, sharpened by the no-triangle and label-class bounds.
int minimal_label_bound(const Digraph& d, Variant var, int u, int v);

}  // namespace rgr
