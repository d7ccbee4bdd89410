#include "qmz/cyclo.hpp"

#include "qmz/error.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace qmz {

IntPolynomial::IntPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            r[i + j] += a.c_[i] * b.c_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& d) const
{
    if (d.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<Rational> rem = c_;
    if (degree() < d.degree())
        return is_zero() ? IntPolynomial() : throw DomainError("inexact polynomial division");
    std::vector<Rational> q(c_.size() - d.c_.size() + 1);
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        Rational f = rem[i + d.degree()] / d.c_.back();
        q[i] = f;
        if (f != 0)
            for (std::size_t j = 0; j < d.c_.size(); ++j)
                rem[i + j] -= f * d.c_[j];
    }
    for (const auto& r : rem)
        if (r != 0)
            throw DomainError("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const
{
    if (c_.empty())
        return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[i];
        if (c == 0)
            continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = a == 1 && i > 0;
        if (!unit)
            out += qmz::to_string(a);
        if (i > 0)
            out += std::string(unit ? "" : "*") + "x" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out;
}

unsigned euler_phi(unsigned N)
{
    if (N == 0)
        throw DomainError("level must be >= 1");
    unsigned r = N, n = N;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            r -= r / p;
        }
    if (n > 1)
        r -= r / n;
    return r;
}

namespace detail {

struct Field {
    unsigned N = 1;
    unsigned phi = 1;
    IntPolynomial Phi;
    std::vector<std::vector<Rational>> pow;  // coords of eta^k, 0 <= k < N
};

} // namespace detail

namespace {

std::mutex g_field_mutex;
std::map<unsigned, std::unique_ptr<detail::Field>> g_fields;
std::map<unsigned, IntPolynomial> g_cyclotomic;

IntPolynomial cyclotomic_locked(unsigned N)
{
    auto it = g_cyclotomic.find(N);
    if (it != g_cyclotomic.end())
        return it->second;
    std::vector<Rational> xn(N + 1);
    xn[0] = -1;
    xn[N] = 1;
    IntPolynomial p(std::move(xn));
    for (unsigned d = 1; d < N; ++d)
        if (N % d == 0)
            p = p.divide_exact(cyclotomic_locked(d));
    g_cyclotomic.emplace(N, p);
    return p;
}

const detail::Field* field(unsigned N)
{
    if (N == 0)
        throw DomainError("level must be >= 1");
    std::lock_guard lock(g_field_mutex);
    auto it = g_fields.find(N);
    if (it != g_fields.end())
        return it->second.get();
    auto f = std::make_unique<detail::Field>();
    f->N = N;
    f->Phi = cyclotomic_locked(N);
    f->phi = static_cast<unsigned>(f->Phi.degree());
    // x^phi = -sum_{i<phi} Phi_i x^i (Phi is monic)
    std::vector<Rational> cur(f->phi);
    cur[0] = 1;
    for (unsigned k = 0; k < N; ++k) {
        f->pow.push_back(cur);
        std::vector<Rational> next(f->phi);
        for (unsigned i = 0; i + 1 < f->phi; ++i)
            next[i + 1] = cur[i];
        const Rational& top = cur[f->phi - 1];
        if (top != 0)
            for (unsigned i = 0; i < f->phi; ++i)
                next[i] -= top * f->Phi[i];
        cur = std::move(next);
    }
    const detail::Field* out = f.get();
    g_fields.emplace(N, std::move(f));
    return out;
}

// Reduce a raw coordinate vector (any length) in place to phi coords.
std::vector<Rational> reduce(const detail::Field* f, const std::vector<Rational>& raw)
{
    std::vector<Rational> c(f->phi);
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0)
            continue;
        if (k < f->phi) {
            c[k] += raw[k];
            continue;
        }
        const auto& p = f->pow[k % f->N];
        for (unsigned i = 0; i < f->phi; ++i)
            if (p[i] != 0)
                c[i] += raw[k] * p[i];
    }
    return c;
}

} // namespace

IntPolynomial cyclotomic_polynomial(unsigned N)
{
    if (N == 0)
        throw DomainError("cyclotomic_polynomial: N must be >= 1");
    std::lock_guard lock(g_field_mutex);
    return cyclotomic_locked(N);
}

CycloNum::CycloNum() : CycloNum(1) {}

CycloNum::CycloNum(unsigned level) : f_(field(level)), c_(f_->phi) {}

CycloNum::CycloNum(unsigned level, const Rational& r) : CycloNum(level) { c_[0] = r; }

CycloNum CycloNum::eta_power(unsigned level, long k)
{
    const detail::Field* f = field(level);
    long N = static_cast<long>(f->N);
    long r = ((k % N) + N) % N;
    return CycloNum(f, f->pow[r]);
}

CycloNum CycloNum::from_coords(unsigned level, std::vector<Rational> coords)
{
    const detail::Field* f = field(level);
    if (coords.size() != f->phi)
        throw DomainError("CycloNum: expected " + std::to_string(f->phi) + " coordinates at level "
                          + std::to_string(level));
    return CycloNum(f, std::move(coords));
}

unsigned CycloNum::level() const { return f_->N; }

bool CycloNum::is_zero() const
{
    for (const auto& x : c_)
        if (x != 0)
            return false;
    return true;
}

bool CycloNum::is_rational() const
{
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0)
            return false;
    return true;
}

void CycloNum::check_level(const CycloNum& o) const
{
    if (f_ != o.f_)
        throw DomainError("mixed-level cyclotomic arithmetic (" + std::to_string(f_->N) + " vs "
                          + std::to_string(o.f_->N) + ")");
}

CycloNum& CycloNum::operator+=(const CycloNum& o)
{
    check_level(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] += o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o)
{
    check_level(o);
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] -= o.c_[i];
    return *this;
}

CycloNum& CycloNum::operator*=(const Rational& r)
{
    for (auto& x : c_)
        x *= r;
    return *this;
}

CycloNum& CycloNum::operator*=(const CycloNum& o)
{
    check_level(o);
    const unsigned phi = f_->phi;
    if (phi == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    std::vector<Rational> raw(2 * phi - 1);
    for (unsigned i = 0; i < phi; ++i) {
        if (c_[i] == 0)
            continue;
        for (unsigned j = 0; j < phi; ++j)
            if (o.c_[j] != 0)
                raw[i + j] += c_[i] * o.c_[j];
    }
    c_ = reduce(f_, raw);
    return *this;
}

void CycloNum::add_product(const CycloNum& a, const CycloNum& b)
{
    check_level(a);
    check_level(b);
    if (f_->phi == 1) {
        c_[0] += a.c_[0] * b.c_[0];
        return;
    }
    *this += a * b;
}

CycloNum CycloNum::operator-() const
{
    CycloNum r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

CycloNum CycloNum::inverse() const
{
    if (is_zero())
        throw DomainError("inverse of zero in Q(eta)");
    const unsigned phi = f_->phi;
    if (phi == 1)
        return CycloNum(f_, {Rational(1) / c_[0]});
    // Solve (this * y) = 1: column i of A holds coords of this * eta^i.
    std::vector<std::vector<Rational>> A(phi, std::vector<Rational>(phi + 1));
    for (unsigned i = 0; i < phi; ++i) {
        CycloNum col = *this * CycloNum(f_, f_->pow[i]);
        for (unsigned r = 0; r < phi; ++r)
            A[r][i] = col.c_[r];
    }
    A[0][phi] = 1;
    for (unsigned col = 0; col < phi; ++col) {
        unsigned piv = col;
        while (A[piv][col] == 0)
            ++piv;
        std::swap(A[piv], A[col]);
        for (unsigned r = 0; r < phi; ++r) {
            if (r == col || A[r][col] == 0)
                continue;
            Rational f = A[r][col] / A[col][col];
            for (unsigned k = col; k <= phi; ++k)
                A[r][k] -= f * A[col][k];
        }
    }
    std::vector<Rational> y(phi);
    for (unsigned r = 0; r < phi; ++r)
        y[r] = A[r][phi] / A[r][r];
    return CycloNum(f_, std::move(y));
}

CycloNum& CycloNum::operator/=(const CycloNum& o) { return *this *= o.inverse(); }

bool operator==(const CycloNum& a, const CycloNum& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

std::string CycloNum::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Rational& c = c_[i];
        if (c == 0)
            continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        bool unit = a == 1 && i > 0;
        if (!unit)
            out += qmz::to_string(a);
        if (i > 0)
            out += std::string(unit ? "" : "*") + "e" + (i > 1 ? "^" + std::to_string(i) : "");
    }
    return out.empty() ? "0" : out;
}

CycloNum cyc_normalize(unsigned level, const std::vector<Rational>& raw)
{
    const detail::Field* f = field(level);
    return CycloNum(f, reduce(f, raw));
}

std::complex<long double> cyc_embed(const CycloNum& x)
{
    const long double two_pi = 6.283185307179586476925286766559L;
    const unsigned N = x.level();
    long double re = 0, im = 0;
    for (std::size_t k = 0; k < x.coords().size(); ++k) {
        if (x.coords()[k] == 0)
            continue;
        long double c = x.coords()[k].get_d();
        long double ang = two_pi * static_cast<long double>(k) / static_cast<long double>(N);
        re += c * std::cos(ang);
        im += c * std::sin(ang);
    }
    return {re, im};
}

namespace {

using boost::multiprecision::mpfr_float;

std::pair<mpfr_float, mpfr_float> embed_mpfr(const CycloNum& x, unsigned precision)
{
    unsigned digits10 = static_cast<unsigned>(precision * 0.30103) + 5;
    mpfr_float::default_precision(digits10);
    mpfr_float re = 0, im = 0;
    mpfr_float pi = boost::math::constants::pi<mpfr_float>();
    for (std::size_t k = 0; k < x.coords().size(); ++k) {
        const Rational& q = x.coords()[k];
        if (q == 0)
            continue;
        mpfr_float c = mpfr_float(q.get_num().get_str()) / mpfr_float(q.get_den().get_str());
        mpfr_float ang = 2 * pi * mpfr_float(static_cast<unsigned long>(k)) / mpfr_float(x.level());
        re += c * cos(ang);
        im += c * sin(ang);
    }
    return {re, im};
}

} // namespace

std::pair<std::string, std::string> cyc_embed_mp(const CycloNum& x, unsigned precision)
{
    if (precision < 53)
        throw DomainError("cyc_embed: precision must be >= 53 bits");
    auto [re, im] = embed_mpfr(x, precision);
    std::streamsize d = static_cast<std::streamsize>(precision * 0.30103) + 2;
    return {re.str(d), im.str(d)};
}

std::complex<long double> cyc_embed(const CycloNum& x, unsigned precision)
{
    if (precision < 53)
        throw DomainError("cyc_embed: precision must be >= 53 bits");
    if (precision <= 53)
        return cyc_embed(x);
    auto [re, im] = embed_mpfr(x, precision);
    return {re.convert_to<long double>(), im.convert_to<long double>()};
}

CycloNum galois_conjugate(const CycloNum& x, long k)
{
    const long N = x.level();
    long kk = ((k % N) + N) % N;
    if (std::gcd(kk, N) != 1)
        throw DomainError("galois_conjugate: k must be coprime to N");
    std::vector<Rational> raw(N);
    for (std::size_t i = 0; i < x.coords().size(); ++i)
        raw[(static_cast<long>(i) * kk) % N] += x.coords()[i];
    return cyc_normalize(static_cast<unsigned>(N), raw);
}

} // namespace qmz
