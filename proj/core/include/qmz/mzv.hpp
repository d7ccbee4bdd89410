#pragma once

#include "qmz/numeric.hpp"
#include "qmz/regularize.hpp"

#include <complex>
#include <map>
#include <string>
#include <vector>

namespace qmz {

enum class SymbolKind { zeta, gamma };

// zeta_N(s; alpha) (s_1 > 1, or empty for the constant 1) or Gamma_beta(s; alpha).
struct MzvSymbol {
    SymbolKind kind = SymbolKind::zeta;
    unsigned beta = 0;
    std::vector<unsigned> s;
    std::vector<unsigned> alpha;
    unsigned level = 1;

    static MzvSymbol zeta(const Word& w, unsigned level);
    static MzvSymbol gamma(unsigned beta, const Word& w, unsigned level);

    unsigned weight() const;
    unsigned depth() const { return static_cast<unsigned>(s.size()); }
    bool is_one() const { return kind == SymbolKind::zeta && s.empty(); }
    std::string to_string(bool bars = false) const;
};

// Ordered by (kind, weight, depth, s, alpha, beta, level).
bool operator<(const MzvSymbol& a, const MzvSymbol& b);
bool operator==(const MzvSymbol& a, const MzvSymbol& b);

// Sorted product of symbols; empty is 1.
using Monomial = std::vector<MzvSymbol>;

// Polynomial in T; coeffs[r] is the T^r coefficient.
struct TPolynomial {
    unsigned level = 1;
    std::vector<std::map<Monomial, CycloNum>> coeffs;

    TPolynomial() = default;
    explicit TPolynomial(unsigned level_) : level(level_) {}
    static TPolynomial constant(unsigned level, const CycloNum& c);
    static TPolynomial symbol(const MzvSymbol& x, const CycloNum& c);

    void add(unsigned r, Monomial m, const CycloNum& c);
    TPolynomial& operator+=(const TPolynomial& o);
    TPolynomial& operator-=(const TPolynomial& o);
    TPolynomial& operator*=(const CycloNum& c);
    friend TPolynomial operator*(const TPolynomial& a, const TPolynomial& b);
    friend TPolynomial operator+(TPolynomial a, const TPolynomial& b) { return a += b; }
    friend TPolynomial operator-(TPolynomial a, const TPolynomial& b) { return a -= b; }
    friend TPolynomial operator*(TPolynomial a, const CycloNum& c) { return a *= c; }
    friend bool operator==(const TPolynomial& a, const TPolynomial& b);
    TPolynomial times_T(unsigned k = 1) const;

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    // T^r coefficient as a linear form; 1 becomes the symbol zeta(empty).
    std::map<MzvSymbol, CycloNum> linear_part(unsigned r) const;
    std::string to_string(bool bars = false) const;

private:
    void trim();
};

// Z_w on qMZ_N[t_N]: [w] of weight w -> zeta, g_beta(s) with |s| = w-1 -> Gamma_beta,
// lower weights -> 0, t_N -> T.
TPolynomial z_project(const QmzPolynomial& x, unsigned w);
// FormalSum input must already be free of leading-1 words.
TPolynomial z_project(const FormalSum& x, unsigned w);

// *-regularized zeta_N(s; alpha) as a polynomial in T.
TPolynomial zstar_regularized(const std::vector<unsigned>& s, const std::vector<unsigned>& alpha, unsigned level);
TPolynomial zstar_regularized(const Word& w, unsigned level);

NumericValue symbol_numeric(const MzvSymbol& x, unsigned long cutoff, unsigned precision = default_precision());

struct ComplexEstimate {
    std::complex<long double> value;
    long double error = 0;
};

// Value at the given T; symbol values from symbol_numeric.
ComplexEstimate tpolynomial_numeric(const TPolynomial& p, long double T, unsigned long cutoff);

} // namespace qmz
