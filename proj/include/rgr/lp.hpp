#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

namespace rgr {

using Rational = boost::multiprecision::cpp_rational;

// Feasibility-only LP over nonnegative variables, exact rational arithmetic.
// Rows are sum(coeff_i * x_i) REL rhs with REL in {<=, =, >=}.
class LinearProgram {
public:
    enum class Rel { Le, Eq, Ge };

    explicit LinearProgram(int num_vars) : nvars_(num_vars) {}

    int num_vars() const { return nvars_; }
    size_t num_rows() const { return rows_.size(); }

    // Sparse row: (variable index, coefficient) pairs.
    void add_row(std::vector<std::pair<int, Rational>> terms, Rel rel, Rational rhs);

    // Phase-1 simplex with Bland's rule; returns a feasible point or nullopt.
    std::optional<std::vector<Rational>> solve() const;

private:
    struct Row {
        std::vector<std::pair<int, Rational>> terms;
        Rel rel;
        Rational rhs;
    };
    int nvars_;
    std::vector<Row> rows_;
};

}  // namespace rgr
