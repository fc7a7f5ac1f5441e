#pragma once

#include <optional>
#include <string>

#include "rgr/digraph.hpp"
#include "rgr/labeling.hpp"
#include "rgr/variant.hpp"

namespace rgr {

// Raised when a solver's self-certification fails; indicates a bug, never
// a property of the input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Reachability graph of a temporal graph: arc (u,v), u != v, iff a temporal
// path from u to v exists under the given semantics. Polynomial time via
// per-source earliest-arrival sweeps over time-sorted edge events.
Digraph reachability(const TemporalGraph& tg, Semantics sem);

struct ClassCheck {
    bool ok = true;
    std::string violation;  // first violation, empty when ok
};

ClassCheck validate_label_class(const TemporalGraph& tg, LabelClass cls);

struct CheckResult {
    bool ok = true;
    std::string mismatch;  // first mismatch or violation, empty when ok
};

// True iff tg labels only solid edges (or arcs) of D, satisfies the variant's
// label class, and its reachability graph equals D exactly.
CheckResult check_realization(const Digraph& d, const TemporalGraph& tg, Variant var);

// True iff every arc realized by tg under sem is an arc of `allowed`;
// aborts at the first excess arc.
bool reach_within(const TemporalGraph& tg, Semantics sem, const Digraph& allowed);

// Order-preserving remap of all label values onto 1..K.
Labeling compress_labels(const Labeling& lab);

// Order-preserving remap applied to every label (monotone strictly increasing map).
Labeling remap_labels(const Labeling& lab, const std::vector<std::pair<Label, Label>>& value_map);

struct RealizeResult {
    enum class Verdict { Yes, No, Unknown };
    Verdict verdict = Verdict::Unknown;
    std::optional<Labeling> witness;  // present iff Yes
    std::string method;
    std::string note;  // reason for No / Unknown when informative
    uint64_t nodes_explored = 0;

    bool yes() const { return verdict == Verdict::Yes; }
    bool no() const { return verdict == Verdict::No; }
    static RealizeResult yes_result(Labeling w, std::string m) {
        RealizeResult r;
        r.verdict = Verdict::Yes;
        r.witness = std::move(w);
        r.method = std::move(m);
        return r;
    }
    static RealizeResult no_result(std::string m, std::string why = "") {
        RealizeResult r;
        r.verdict = Verdict::No;
        r.method = std::move(m);
        r.note = std::move(why);
        return r;
    }
    static RealizeResult unknown_result(std::string m, std::string why) {
        RealizeResult r;
        r.verdict = Verdict::Unknown;
        r.method = std::move(m);
        r.note = std::move(why);
        return r;
    }
};

}  // namespace rgr
