#pragma once

#include "qmz/word.hpp"

#include <complex>
#include <vector>

namespace qmz {

struct NumericValue {
    long double value = 0;
    long double error = 0;  // bound on |true value - value|
};

struct ComplexNumericValue {
    std::complex<long double> value;
    long double error = 0;
};

// Binary digits from QMZ_PRECISION, default 53. Above 64 the engine runs in MPFR.
unsigned default_precision();

// zeta_N(s; alpha), the sum over k_1 > ... > k_d > 0 with k_j = alpha_j mod N.
NumericValue zeta_numeric(const std::vector<unsigned>& s, const std::vector<unsigned>& alpha, unsigned level,
                          unsigned long cutoff, unsigned precision = default_precision());

// L_N(s; a) = sum over k_1 > ... > k_d > 0 of prod eta^{a_j k_j} / k_j^{s_j}.
ComplexNumericValue mpv_numeric(const std::vector<unsigned>& s, const std::vector<unsigned>& a, unsigned level,
                                unsigned long cutoff, unsigned precision = default_precision());

enum class GammaBranch {
    limit,    // first shift iff d = 0 or beta <= alpha_1: the q -> 1 limit of g_beta
    printed,  // first shift iff d = 0 or beta < alpha_1
};

// Gamma_beta(s; alpha); beta = 0 gives 0.
NumericValue gamma_numeric(unsigned beta, const std::vector<unsigned>& s, const std::vector<unsigned>& alpha,
                           unsigned level, unsigned long cutoff, unsigned precision = default_precision(),
                           GammaBranch branch = GammaBranch::limit);

// Real part of [s;alpha](x) at x = q eta^{-1}, 0 < q < 1, summed until q^n < 1e-30.
long double mdf_numeric(const MdfIndex& idx, long double q);

struct LimitCheck {
    std::vector<long double> samples;  // (1-q)^k [s;alpha](q eta^{-1}), q = 1 - 2^{-j}, j = 4..12
    long double extrapolated = 0;
    long double reference = 0;  // zeta_numeric
    long double difference = 0;
};

LimitCheck zk_limit_check(const MdfIndex& idx);

} // namespace qmz
