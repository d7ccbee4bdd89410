#pragma once

#include "qmz/qseries.hpp"
#include "qmz/word.hpp"

#include <map>
#include <string>
#include <vector>

namespace qmz {

using RationalMatrix = std::vector<std::vector<Rational>>;

struct RegMatrix {
    unsigned level = 1;
    unsigned m = 0;
    RationalMatrix entries;  // N^{m+1} x N^{m+1}
};

// Coefficient matrix of the reduction system. Unknowns X(b_0, ..., b_m) are
// ordered lexicographically with b_0 most significant.
RegMatrix reg_matrix(unsigned level, unsigned m);
// N*I + sum_r E^{(m,r)} from the E-rule; `inclusive` reads the upper bound as <=.
RegMatrix reg_matrix_printed(unsigned level, unsigned m, bool inclusive);

// Fraction-free (Bareiss) determinant.
Rational determinant(const RationalMatrix& a);
// N^{N^{m+1}} (m+1) prod_{j=2}^{m} j^{N^{m-j}(N-1)}
Integer reg_matrix_det_formula(unsigned level, unsigned m);
RationalMatrix inverse(const RationalMatrix& a);
// Cached inverse of reg_matrix(level, m).
const RationalMatrix& reg_matrix_inverse(unsigned level, unsigned m);

// A qMZ generator: the bracket [w] (beta = 0; w empty or s_1 > 1) or g_beta(w).
struct QmzGenerator {
    unsigned beta = 0;
    Word word;
    auto operator<=>(const QmzGenerator&) const = default;
    unsigned weight() const { return qmz::weight(word) + (beta ? 1 : 0); }
    std::string to_string() const;
};

// Polynomial in t_N with coefficients in the span of qMZ generators.
struct QmzPolynomial {
    unsigned level = 1;
    std::map<unsigned, std::map<QmzGenerator, CycloNum>> terms;  // tpow -> combination

    QmzPolynomial() = default;
    explicit QmzPolynomial(unsigned level_) : level(level_) {}
    void add(unsigned tpow, const QmzGenerator& g, const CycloNum& c);
    QmzPolynomial& operator+=(const QmzPolynomial& o);
    QmzPolynomial& operator-=(const QmzPolynomial& o);
    QmzPolynomial& operator*=(const CycloNum& c);
    // this += c * o
    void add_scaled(const QmzPolynomial& o, const CycloNum& c);
    QmzPolynomial times_t(unsigned k = 1) const;
    bool operator==(const QmzPolynomial& o) const = default;
    bool is_zero() const { return terms.empty(); }
    unsigned max_tpow() const { return terms.empty() ? 0 : terms.rbegin()->first; }
    std::string to_string(bool bars = false) const;
};

QmzPolynomial reduce_to_qmz(const Word& w, unsigned level);
QmzPolynomial reduce_to_qmz(const MdfIndex& idx);
QmzPolynomial reduce_to_qmz(const FormalSum& x);

// t_N -> t_series, [w] -> MDF, g_beta(w) -> g_beta series.
QSeries eval_qmz(const QmzPolynomial& p, unsigned order);

} // namespace qmz
