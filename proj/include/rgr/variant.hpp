#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace rgr {

enum class Direction { Undirected, Directed };
enum class LabelClass { Any, Simple, Proper, Happy };
enum class Semantics { Strict, NonStrict };

// Problem variant selector. Proper and Happy make strict and non-strict
// reachability coincide; such variants are stored with Strict semantics.
struct Variant {
    Direction direction = Direction::Undirected;
    LabelClass label_class = LabelClass::Any;
    Semantics semantics = Semantics::Strict;

    static Variant make(Direction d, LabelClass c, Semantics s) {
        Variant v{d, c, s};
        if (c == LabelClass::Proper || c == LabelClass::Happy) v.semantics = Semantics::Strict;
        return v;
    }

    bool directed() const { return direction == Direction::Directed; }

    // Semantics used when computing reachability graphs.
    Semantics effective_semantics() const { return semantics; }

    // Only AnyStrict instances may contain special solid edges in a yes-instance.
    bool allows_special_edges() const {
        return label_class == LabelClass::Any && semantics == Semantics::Strict;
    }

    // Adjacent solid edges {u,c},{c,v} with no arc between u and v force a
    // shared single label; fatal for proper, happy and all non-strict variants.
    bool adjacent_noarc_fatal() const {
        return label_class == LabelClass::Proper || label_class == LabelClass::Happy ||
               semantics == Semantics::NonStrict;
    }

    bool simple_labels() const {
        return label_class == LabelClass::Simple || label_class == LabelClass::Happy;
    }
    bool proper_labels() const {
        return label_class == LabelClass::Proper || label_class == LabelClass::Happy;
    }

    bool operator==(const Variant& o) const {
        return direction == o.direction && label_class == o.label_class && semantics == o.semantics;
    }

    std::string name() const {
        std::string s = directed() ? "d-" : "u-";
        switch (label_class) {
            case LabelClass::Any: s += "any"; break;
            case LabelClass::Simple: s += "simple"; break;
            case LabelClass::Proper: return s + "proper";
            case LabelClass::Happy: return s + "happy";
        }
        s += semantics == Semantics::Strict ? "-strict" : "-nonstrict";
        return s;
    }

    // The six canonical variants of one direction.
    static std::array<Variant, 6> all(Direction d) {
        return {make(d, LabelClass::Any, Semantics::Strict),
                make(d, LabelClass::Any, Semantics::NonStrict),
                make(d, LabelClass::Simple, Semantics::Strict),
                make(d, LabelClass::Simple, Semantics::NonStrict),
                make(d, LabelClass::Proper, Semantics::Strict),
                make(d, LabelClass::Happy, Semantics::Strict)};
    }

    // Parses names like "any-strict", "simple-non-strict", "proper", "happy".
    static LabelClass parse_class_sem(const std::string& s, Semantics& sem);
};

inline LabelClass Variant::parse_class_sem(const std::string& s, Semantics& sem) {
    sem = Semantics::Strict;
    if (s == "proper") return LabelClass::Proper;
    if (s == "happy") return LabelClass::Happy;
    auto dash = s.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("bad variant name: " + s);
    std::string cls = s.substr(0, dash), rest = s.substr(dash + 1);
    if (rest == "strict")
        sem = Semantics::Strict;
    else if (rest == "non-strict" || rest == "nonstrict")
        sem = Semantics::NonStrict;
    else
        throw std::invalid_argument("bad variant semantics: " + s);
    if (cls == "any") return LabelClass::Any;
    if (cls == "simple") return LabelClass::Simple;
    throw std::invalid_argument("bad variant class: " + s);
}

}  // namespace rgr
