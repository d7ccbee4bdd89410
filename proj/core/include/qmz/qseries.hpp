#pragma once

#include "qmz/cyclo.hpp"
#include "qmz/word.hpp"

#include <string>
#include <vector>

namespace qmz {

// Truncated power series sum_{n=0}^{order} c_n q^n over Q(eta_N).
class QSeries {
public:
    QSeries() : QSeries(1, 0) {}
    QSeries(unsigned level, unsigned order);
    static QSeries constant(unsigned level, unsigned order, const CycloNum& c);
    static QSeries one(unsigned level, unsigned order) { return constant(level, order, CycloNum(level, 1)); }

    unsigned level() const { return level_; }
    unsigned order() const { return order_; }
    const std::vector<CycloNum>& coeffs() const { return c_; }
    const CycloNum& operator[](std::size_t n) const { return c_.at(n); }
    CycloNum& coeff(std::size_t n) { return c_.at(n); }
    bool is_zero() const;
    QSeries truncated(unsigned order) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    QSeries& operator*=(const QSeries& o);
    QSeries& operator*=(const CycloNum& c);
    QSeries& operator*=(const Rational& r);
    QSeries operator-() const;
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    friend QSeries operator*(QSeries a, const CycloNum& c) { return a *= c; }
    friend QSeries operator*(const CycloNum& c, QSeries a) { return a *= c; }
    friend QSeries operator*(QSeries a, const Rational& r) { return a *= r; }
    // Equal level and order and coefficients.
    friend bool operator==(const QSeries& a, const QSeries& b);
    friend bool operator!=(const QSeries& a, const QSeries& b) { return !(a == b); }

    std::string to_string() const;

private:
    void adopt_min_order(const QSeries& o);
    unsigned level_;
    unsigned order_;
    std::vector<CycloNum> c_;
};

// Coefficientwise enumeration of u_1 v_1 + ... + u_d v_d = n, u_1 > ... > u_d > 0.
QSeries mdf_divisor_sum(const MdfIndex& idx, unsigned order);
// Nested sum of normalized polylogarithms tLi_{s_j}(eta^{a_j} q^{n_j}).
QSeries mdf_polylog(const MdfIndex& idx, unsigned order);
// Same nested sum, each factor built from the Eulerian polynomial form.
QSeries mdf_eulerian(const MdfIndex& idx, unsigned order);

// tLi_s(c q^m) as a truncated series; m <= 0 is allowed only for s = 1.
QSeries tli_series(unsigned s, const CycloNum& c, long m, unsigned order);

// g_beta(s; alpha) from the two shifted-argument formulas with boundary sums.
// An index of depth 0 gives g_beta(empty).
QSeries g_beta(unsigned beta, const MdfIndex& idx, unsigned order);
// Oracle form [1,s;0,alpha] - [1,s;beta,alpha].
QSeries g_beta_difference(unsigned beta, const MdfIndex& idx, unsigned order);

QSeries t_series(unsigned level, unsigned order);
QSeries q_derive(const QSeries& f);

} // namespace qmz
