#include "qmz/coeffs.hpp"

#include "qmz/error.hpp"
#include "qmz/numbers.hpp"

#include <map>
#include <mutex>

namespace qmz {

namespace {

unsigned residue(long a, unsigned N)
{
    long n = static_cast<long>(N);
    return static_cast<unsigned>(((a % n) + n) % n);
}

// Coefficients b_0..b_m of 1/(a_0 + a_1 x + ...), a_0 invertible.
std::vector<CycloNum> invert_series(const std::vector<CycloNum>& a, unsigned m)
{
    std::vector<CycloNum> b;
    b.reserve(m + 1);
    CycloNum inv0 = a[0].inverse();
    b.push_back(inv0);
    for (unsigned n = 1; n <= m; ++n) {
        CycloNum s(a[0].level());
        for (unsigned k = 1; k <= n && k < a.size(); ++k)
            s.add_product(a[k], b[n - k]);
        b.push_back(-(s * inv0));
    }
    return b;
}

std::vector<CycloNum> compute_omega(unsigned N, unsigned alpha, unsigned n_max)
{
    std::vector<CycloNum> out;
    if (alpha == 0) {
        // x/(e^x - 1) = 1 / sum_k x^k/(k+1)!, omega_n = n! [x^{n+1}]
        std::vector<CycloNum> a;
        for (unsigned k = 0; k <= n_max + 1; ++k)
            a.emplace_back(N, Rational(1) / Rational(factorial(k + 1)));
        auto b = invert_series(a, n_max + 1);
        for (unsigned n = 0; n <= n_max; ++n)
            out.push_back(b[n + 1] * Rational(factorial(n)));
        return out;
    }
    // eta^alpha e^x - 1 = (eta^alpha - 1) + eta^alpha sum_{k>=1} x^k/k!
    CycloNum c = CycloNum::eta_power(N, alpha);
    std::vector<CycloNum> a;
    a.push_back(c - CycloNum(N, 1));
    for (unsigned k = 1; k <= n_max; ++k)
        a.push_back(c * (Rational(1) / Rational(factorial(k))));
    auto b = invert_series(a, n_max);
    for (unsigned n = 0; n <= n_max; ++n)
        out.push_back(b[n] * Rational(factorial(n)));
    return out;
}

std::mutex g_omega_mutex;
std::map<std::pair<unsigned, unsigned>, std::vector<CycloNum>> g_omega;

const std::vector<CycloNum>& omega_cached(unsigned N, unsigned alpha, unsigned n_max)
{
    std::lock_guard lock(g_omega_mutex);
    auto& v = g_omega[{N, alpha}];
    if (v.size() <= n_max)
        v = compute_omega(N, alpha, std::max(n_max, 2 * static_cast<unsigned>(v.size()) + 8));
    return v;
}

} // namespace

OmegaTable omega(unsigned level, long alpha, unsigned n_max)
{
    unsigned a = residue(alpha, level);
    std::vector<CycloNum> vals;
    {
        const auto& v = omega_cached(level, a, n_max);
        std::lock_guard lock(g_omega_mutex);
        vals.assign(v.begin(), v.begin() + n_max + 1);
    }
    return OmegaTable{level, a, std::move(vals)};
}

CycloNum omega_value(unsigned level, long alpha, unsigned n)
{
    unsigned a = residue(alpha, level);
    const auto& v = omega_cached(level, a, n);
    std::lock_guard lock(g_omega_mutex);
    return v[n];
}

CycloNum omega_closed_form(unsigned level, long alpha, unsigned n)
{
    unsigned a = residue(alpha, level);
    auto uncovered = [&] {
        return DomainError("omega_closed_form: no closed form for N=" + std::to_string(level)
                           + ", alpha=" + std::to_string(a));
    };
    if (level == 2) {
        if (a != 1)
            throw uncovered();
        Integer p = (Integer(1) << (n + 1)) - 1;
        return CycloNum(2, Rational(p) * bernoulli(n + 1) / Rational(n + 1));
    }
    if (level == 3) {
        if (a == 0)
            throw uncovered();
        CycloNum eta = CycloNum::eta_power(3, 1);
        if (n == 0) {
            CycloNum w = (CycloNum::eta_power(3, 2) - CycloNum(3, 1)) * Rational(1, 3);
            return a == 1 ? w : galois_conjugate(w, 2);
        }
        if (n % 2 == 1) {
            unsigned m = (n + 1) / 2;
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), 3, 2 * m);
            return CycloNum(3, Rational(p - 1) * bernoulli(2 * m) / Rational(4 * m));
        }
        unsigned m = n / 2;
        Rational s = 0;
        for (unsigned j = 0; j <= 2 * m; ++j) {
            Integer p3;
            mpz_ui_pow_ui(p3.get_mpz_t(), 3, 2 * m - j);
            Integer p2 = (Integer(1) << (j + 1)) - 1;
            s += Rational(p3 * p2 * binomial(2 * m + 1, 2 * m - j)) * bernoulli(2 * m - j);
        }
        CycloNum sqrt_m3 = CycloNum(3, 1) + eta * Rational(2);
        CycloNum w = sqrt_m3 * (-s / Rational(6 * (2 * m + 1)));
        return a == 1 ? w : -w;
    }
    if (level == 4) {
        if (a == 0)
            throw uncovered();
        if (a == 2) {
            CycloNum w = omega_closed_form(2, 1, n);
            return CycloNum(4, w.rational_part());
        }
        CycloNum i = CycloNum::eta_power(4, 1);
        CycloNum w(4);
        if (n == 0)
            w = (CycloNum(4, -1) - i) * Rational(1, 2);
        else if (n % 2 == 1) {
            Integer p = (Integer(1) << (n + 1)) - 1;
            Integer t = Integer(1) << n;
            w = CycloNum(4, Rational(t * p) * bernoulli(n + 1) / Rational(n + 1));
        } else
            w = i * (-euler_number(n) / Rational(2));
        return a == 1 ? w : galois_conjugate(w, 3);
    }
    throw uncovered();
}

CycloNum lambda(unsigned level, unsigned j, unsigned a, unsigned b, long alpha)
{
    if (j < 1 || a < 1 || b < 1 || j > a)
        throw DomainError("lambda: requires 1 <= j <= a and b >= 1");
    unsigned n = a + b - j - 1;
    Rational c = Rational(binomial(n, a - j)) / Rational(factorial(n));
    if ((b - 1) % 2)
        c = -c;
    return omega_value(level, alpha, n) * c;
}

} // namespace qmz
