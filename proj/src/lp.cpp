#include "rgr/lp.hpp"

#include <stdexcept>

namespace rgr {

void LinearProgram::add_row(std::vector<std::pair<int, Rational>> terms, Rel rel, Rational rhs) {
    for (auto& [i, c] : terms)
        if (i < 0 || i >= nvars_) throw std::out_of_range("LinearProgram: bad variable index");
    rows_.push_back({std::move(terms), rel, std::move(rhs)});
}

// Standard phase-1: equalize rows with slacks, flip signs so rhs >= 0, add an
// artificial variable per row, minimize their sum. Dense tableau; Bland's rule
// guarantees termination.
std::optional<std::vector<Rational>> LinearProgram::solve() const {
    const int m = static_cast<int>(rows_.size());
    if (m == 0) return std::vector<Rational>(nvars_, Rational(0));
    int nslack = 0;
    for (auto& r : rows_)
        if (r.rel != Rel::Eq) ++nslack;
    const int ncols = nvars_ + nslack + m;  // structural, slack, artificial
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(ncols, Rational(0)));
    std::vector<Rational> b(m, Rational(0));
    int slack_at = nvars_;
    for (int i = 0; i < m; ++i) {
        const Row& r = rows_[i];
        Rational sgn = 1;
        if (r.rhs < 0) sgn = -1;  // normalize rhs nonnegative
        for (auto& [j, c] : r.terms) a[i][j] += sgn * c;
        b[i] = sgn * r.rhs;
        if (r.rel == Rel::Le)
            a[i][slack_at++] = sgn;  // +slack
        else if (r.rel == Rel::Ge)
            a[i][slack_at++] = -sgn;  // -surplus
        a[i][nvars_ + nslack + i] = 1;
    }
    // Objective: minimize sum of artificials. Reduced costs row z.
    std::vector<Rational> z(ncols, Rational(0));
    Rational obj = 0;
    std::vector<int> basis(m);
    for (int i = 0; i < m; ++i) {
        basis[i] = nvars_ + nslack + i;
        for (int j = 0; j < ncols; ++j) z[j] -= a[i][j];
        obj -= b[i];
    }
    for (int i = 0; i < m; ++i) z[nvars_ + nslack + i] = 0;

    auto pivot = [&](int pr, int pc) {
        Rational piv = a[pr][pc];
        for (int j = 0; j < ncols; ++j) a[pr][j] /= piv;
        b[pr] /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == pr || a[i][pc] == 0) continue;
            Rational f = a[i][pc];
            for (int j = 0; j < ncols; ++j) a[i][j] -= f * a[pr][j];
            b[i] -= f * b[pr];
        }
        if (z[pc] != 0) {
            Rational f = z[pc];
            for (int j = 0; j < ncols; ++j) z[j] -= f * a[pr][j];
            obj -= f * b[pr];
        }
        basis[pr] = pc;
    };

    while (true) {
        int pc = -1;
        for (int j = 0; j < ncols; ++j)
            if (z[j] < 0) {
                pc = j;  // Bland: smallest index with negative reduced cost
                break;
            }
        if (pc == -1) break;
        int pr = -1;
        for (int i = 0; i < m; ++i) {
            if (a[i][pc] <= 0) continue;
            if (pr == -1) {
                pr = i;
                continue;
            }
            Rational cur = b[i] / a[i][pc], best = b[pr] / a[pr][pc];
            if (cur < best || (cur == best && basis[i] < basis[pr])) pr = i;
        }
        if (pr == -1) throw std::logic_error("phase-1 LP unbounded");  // cannot happen
        pivot(pr, pc);
    }
    if (obj != 0) return std::nullopt;  // infeasible
    std::vector<Rational> x(nvars_, Rational(0));
    for (int i = 0; i < m; ++i)
        if (basis[i] < nvars_) x[basis[i]] = b[i];
    return x;
}

}  // namespace rgr
