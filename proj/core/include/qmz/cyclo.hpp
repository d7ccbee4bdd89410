#pragma once

#include "qmz/rational.hpp"

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace qmz {

// Polynomial with rational coefficients, ascending degree, trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Rational> coeffs);

    const std::vector<Rational>& coefficients() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

    // Exact division; throws DomainError if the remainder is nonzero.
    IntPolynomial divide_exact(const IntPolynomial& d) const;
    std::string to_string() const;

private:
    void trim();
    std::vector<Rational> c_;
};

IntPolynomial cyclotomic_polynomial(unsigned N);
unsigned euler_phi(unsigned N);

namespace detail { struct Field; }

// Element of Q(eta_N) in the power basis 1, eta, ..., eta^{phi(N)-1}, reduced mod Phi_N.
class CycloNum {
public:
    CycloNum();  // zero at level 1
    explicit CycloNum(unsigned level);
    CycloNum(unsigned level, const Rational& r);
    CycloNum(unsigned level, long r) : CycloNum(level, Rational(r)) {}

    // eta^k for any integer k.
    static CycloNum eta_power(unsigned level, long k);
    static CycloNum from_coords(unsigned level, std::vector<Rational> coords);

    unsigned level() const;
    const std::vector<Rational>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    // Constant coordinate; only meaningful when is_rational().
    Rational rational_part() const { return c_.empty() ? Rational(0) : c_[0]; }

    CycloNum& operator+=(const CycloNum& o);
    CycloNum& operator-=(const CycloNum& o);
    CycloNum& operator*=(const CycloNum& o);
    CycloNum& operator*=(const Rational& r);
    CycloNum& operator/=(const CycloNum& o);
    CycloNum operator-() const;
    CycloNum inverse() const;

    // this += a * b without temporaries for the rational case.
    void add_product(const CycloNum& a, const CycloNum& b);

    friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
    friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
    friend CycloNum operator*(CycloNum a, const CycloNum& b) { return a *= b; }
    friend CycloNum operator*(CycloNum a, const Rational& r) { return a *= r; }
    friend CycloNum operator*(const Rational& r, CycloNum a) { return a *= r; }
    friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
    friend bool operator==(const CycloNum& a, const CycloNum& b);
    friend bool operator!=(const CycloNum& a, const CycloNum& b) { return !(a == b); }

    std::string to_string() const;

private:
    CycloNum(const detail::Field* f, std::vector<Rational> c) : f_(f), c_(std::move(c)) {}
    void check_level(const CycloNum& o) const;
    const detail::Field* f_;
    std::vector<Rational> c_;
    friend CycloNum cyc_normalize(unsigned, const std::vector<Rational>&);
    friend CycloNum galois_conjugate(const CycloNum&, long);
};

CycloNum cyc_normalize(unsigned level, const std::vector<Rational>& raw);
std::complex<long double> cyc_embed(const CycloNum& x);
// Decimal strings of real and imaginary parts, correctly computed to `precision` bits.
std::pair<std::string, std::string> cyc_embed_mp(const CycloNum& x, unsigned precision);
// Embedding evaluated in `precision` bits and rounded to long double.
std::complex<long double> cyc_embed(const CycloNum& x, unsigned precision);
CycloNum galois_conjugate(const CycloNum& x, long k);

} // namespace qmz
