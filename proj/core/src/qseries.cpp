#include "qmz/qseries.hpp"

#include "qmz/error.hpp"
#include "qmz/numbers.hpp"

#include <algorithm>
#include <functional>

namespace qmz {

QSeries::QSeries(unsigned level, unsigned order)
    : level_(level), order_(order), c_(order + 1, CycloNum(level))
{
}

QSeries QSeries::constant(unsigned level, unsigned order, const CycloNum& c)
{
    QSeries r(level, order);
    r.c_[0] = c;
    return r;
}

bool QSeries::is_zero() const
{
    return std::all_of(c_.begin(), c_.end(), [](const CycloNum& x) { return x.is_zero(); });
}

QSeries QSeries::truncated(unsigned order) const
{
    if (order > order_)
        throw DomainError("cannot extend a truncated series");
    QSeries r = *this;
    r.order_ = order;
    r.c_.resize(order + 1);
    return r;
}

void QSeries::adopt_min_order(const QSeries& o)
{
    if (o.level_ != level_)
        throw DomainError("mixed-level series arithmetic");
    if (o.order_ < order_) {
        order_ = o.order_;
        c_.resize(order_ + 1);
    }
}

QSeries& QSeries::operator+=(const QSeries& o)
{
    adopt_min_order(o);
    for (unsigned n = 0; n <= order_; ++n)
        c_[n] += o.c_[n];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o)
{
    adopt_min_order(o);
    for (unsigned n = 0; n <= order_; ++n)
        c_[n] -= o.c_[n];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b)
{
    if (a.level_ != b.level_)
        throw DomainError("mixed-level series arithmetic");
    unsigned M = std::min(a.order_, b.order_);
    QSeries r(a.level_, M);
    for (unsigned i = 0; i <= M; ++i) {
        if (a.c_[i].is_zero())
            continue;
        for (unsigned j = 0; i + j <= M; ++j)
            if (!b.c_[j].is_zero())
                r.c_[i + j].add_product(a.c_[i], b.c_[j]);
    }
    return r;
}

QSeries& QSeries::operator*=(const QSeries& o) { return *this = *this * o; }

QSeries& QSeries::operator*=(const CycloNum& c)
{
    for (auto& x : c_)
        x *= c;
    return *this;
}

QSeries& QSeries::operator*=(const Rational& r)
{
    for (auto& x : c_)
        x *= r;
    return *this;
}

QSeries QSeries::operator-() const
{
    QSeries r = *this;
    for (auto& x : r.c_)
        x = -x;
    return r;
}

bool operator==(const QSeries& a, const QSeries& b)
{
    return a.level_ == b.level_ && a.order_ == b.order_ && a.c_ == b.c_;
}

std::string QSeries::to_string() const
{
    std::string out;
    for (unsigned n = 0; n <= order_; ++n) {
        const CycloNum& c = c_[n];
        if (c.is_zero())
            continue;
        std::string mono = n == 0 ? "" : n == 1 ? "q" : "q^" + std::to_string(n);
        if (c.is_rational()) {
            Rational r = c.rational_part();
            bool neg = r < 0;
            Rational a = neg ? Rational(-r) : r;
            out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            if (a != 1 || n == 0)
                out += qmz::to_string(a) + (n ? "*" : "");
        } else {
            out += out.empty() ? "" : " + ";
            out += "(" + c.to_string() + ")" + (n ? "*" : "");
        }
        out += mono;
    }
    if (out.empty())
        out = "0";
    return out + " + O(q^" + std::to_string(order_ + 1) + ")";
}

namespace {

void check_index(const MdfIndex& idx)
{
    if (idx.s.size() != idx.alpha.size())
        throw DomainError("index arity mismatch");
    for (auto s : idx.s)
        if (s == 0)
            throw DomainError("index entries must be >= 1");
    for (auto a : idx.alpha)
        if (a >= idx.level)
            throw DomainError("index colors must lie in 0..N-1");
}

// acc += a * b, skipping zero coefficients of the sparse factor a.
void add_product(QSeries& acc, const QSeries& a, const QSeries& b)
{
    unsigned M = acc.order();
    for (unsigned i = 0; i <= M && i <= a.order(); ++i) {
        if (a[i].is_zero())
            continue;
        for (unsigned j = 0; i + j <= M && j <= b.order(); ++j)
            if (!b[j].is_zero())
                acc.coeff(i + j).add_product(a[i], b[j]);
    }
}

using Factor = std::function<QSeries(unsigned j, unsigned u)>;

// H[u] = sum over u > n_j > ... > n_d > 0 of prod_{i >= j} factor(i, n_i), for u = 0..order+1.
std::vector<QSeries> inner_sums(const MdfIndex& idx, unsigned j, unsigned order, const Factor& factor)
{
    unsigned N = idx.level;
    std::vector<QSeries> prev(order + 2, QSeries::one(N, order));
    for (unsigned i = idx.depth(); i >= j && i >= 1; --i) {
        std::vector<QSeries> cur(order + 2, QSeries(N, order));
        for (unsigned u = 1; u <= order; ++u) {
            cur[u + 1] = cur[u];
            add_product(cur[u + 1], factor(i - 1, u), prev[u]);
        }
        prev = std::move(cur);
    }
    return prev;
}

QSeries nested(const MdfIndex& idx, unsigned order, const Factor& factor)
{
    check_index(idx);
    if (idx.depth() == 0)
        return QSeries::one(idx.level, order);
    return inner_sums(idx, 1, order, factor)[order + 1];
}

} // namespace

QSeries tli_series(unsigned s, const CycloNum& c, long m, unsigned order)
{
    unsigned N = c.level();
    if (s == 0)
        throw DomainError("tLi index must be >= 1");
    if (m <= 0 && s != 1)
        throw DomainError("tLi_s at a non-positive q-exponent needs s = 1");
    if (m == 0) {
        CycloNum one(N, 1);
        if (c == one)
            throw DomainError("tLi_1 pole at argument 1");
        return QSeries::constant(N, order, c / (one - c));
    }
    if (m < 0) {
        QSeries r = -tli_series(1, c.inverse(), -m, order);
        r.coeff(0) -= CycloNum(N, 1);
        return r;
    }
    QSeries r(N, order);
    Rational inv_fact = Rational(1) / Rational(factorial(s - 1));
    CycloNum cp = c;
    for (unsigned long v = 1; v * m <= order; ++v, cp *= c) {
        Integer vp;
        mpz_ui_pow_ui(vp.get_mpz_t(), v, s - 1);
        r.coeff(v * m) = cp * (Rational(vp) * inv_fact);
    }
    return r;
}

QSeries mdf_divisor_sum(const MdfIndex& idx, unsigned order)
{
    check_index(idx);
    unsigned N = idx.level, d = idx.depth();
    if (d == 0)
        return QSeries::one(N, order);
    // bucket[n][e]: integer weight of eta^e in sigma(n)
    std::vector<std::vector<Integer>> bucket(order + 1, std::vector<Integer>(N));
    std::function<void(unsigned, unsigned, unsigned, unsigned, const Integer&)> rec =
        [&](unsigned j, unsigned prev_u, unsigned total, unsigned e, const Integer& w) {
            if (j == d) {
                bucket[total][e] += w;
                return;
            }
            unsigned rest = d - j - 1;  // levels after this one
            for (unsigned u = rest + 1; u < prev_u; ++u) {
                unsigned min_rest = rest * (rest + 1) / 2;
                for (unsigned v = 1; total + u * v + min_rest <= order; ++v) {
                    Integer vp;
                    mpz_ui_pow_ui(vp.get_mpz_t(), v, idx.s[j] - 1);
                    rec(j + 1, u, total + u * v, (e + idx.alpha[j] * v) % N, w * vp);
                }
            }
        };
    rec(0, order + 1, 0, 0, Integer(1));
    Rational denom = 1;
    for (auto s : idx.s)
        denom *= Rational(factorial(s - 1));
    std::vector<CycloNum> etas;
    for (unsigned e = 0; e < N; ++e)
        etas.push_back(CycloNum::eta_power(N, e));
    QSeries r(N, order);
    for (unsigned n = 1; n <= order; ++n) {
        CycloNum c(N);
        for (unsigned e = 0; e < N; ++e)
            if (bucket[n][e] != 0)
                c += etas[e] * Rational(bucket[n][e]);
        r.coeff(n) = c * (Rational(1) / denom);
    }
    return r;
}

QSeries mdf_polylog(const MdfIndex& idx, unsigned order)
{
    unsigned N = idx.level;
    return nested(idx, order, [&](unsigned j, unsigned u) {
        return tli_series(idx.s[j], CycloNum::eta_power(N, idx.alpha[j]), u, order);
    });
}

QSeries mdf_eulerian(const MdfIndex& idx, unsigned order)
{
    unsigned N = idx.level;
    std::vector<std::vector<Integer>> eul;
    for (auto s : idx.s)
        eul.push_back(s == 1 ? std::vector<Integer>{Integer(1)} : eulerian_coefficients(s - 1));
    return nested(idx, order, [&](unsigned j, unsigned u) {
        unsigned s = idx.s[j];
        CycloNum x = CycloNum::eta_power(N, idx.alpha[j]);
        Rational inv_fact = Rational(1) / Rational(factorial(s - 1));
        // x P_{s-1}(x) / (s-1)! with x = eta^a q^u
        QSeries f(N, order);
        CycloNum xp = x;
        for (std::size_t k = 0; k < eul[j].size() && (k + 1) * u <= order; ++k, xp *= x)
            f.coeff((k + 1) * u) = xp * (Rational(eul[j][k]) * inv_fact);
        // divide by (1 - x)^s
        for (unsigned t = 0; t < s; ++t)
            for (unsigned n = u; n <= order; ++n)
                if (!f[n - u].is_zero())
                    f.coeff(n).add_product(x, f[n - u]);
        return f;
    });
}

QSeries g_beta(unsigned beta, const MdfIndex& idx, unsigned order)
{
    check_index(idx);
    unsigned N = idx.level, d = idx.depth();
    if (beta == 0 || beta >= N)
        throw DomainError("g_beta needs 1 <= beta < N");
    CycloNum one(N, 1), eb = CycloNum::eta_power(N, beta);
    bool first_case = d == 0 || beta < idx.alpha[0] % N;
    long shift = first_case ? long(beta) : long(beta) - long(N);

    // J[n1]: innermost-complete sum with fixed n1 (J[0] = 1 for the empty index).
    std::vector<QSeries> J(order + 1, QSeries(N, order));
    if (d == 0) {
        J[0] = QSeries::one(N, order);
    } else {
        auto H2 = inner_sums(idx, 2, order, [&](unsigned j, unsigned u) {
            return tli_series(idx.s[j], CycloNum::eta_power(N, idx.alpha[j]), u, order);
        });
        CycloNum e1 = CycloNum::eta_power(N, idx.alpha[0]);
        for (unsigned n1 = 1; n1 <= order; ++n1)
            J[n1] = tli_series(idx.s[0], e1, n1, order) * H2[n1];
    }

    QSeries r(N, order);
    QSeries prefix(N, order);  // sum of J[n1] over n1 < n
    unsigned n_max = order + N + 1;
    for (unsigned n = 1; n <= n_max; ++n) {
        if (n - 1 <= order)
            prefix += J[n - 1];
        if (prefix.is_zero())
            continue;
        QSeries diff = tli_series(1, one, n, order) - tli_series(1, eb, long(n) + shift, order);
        add_product(r, diff, prefix);
    }
    for (unsigned n1 = 0; n1 <= order; ++n1) {
        if (J[n1].is_zero())
            continue;
        if (first_case) {
            for (unsigned l = 1; l <= beta; ++l)
                r -= tli_series(1, eb, long(n1) + l, order) * J[n1];
        } else {
            for (unsigned l = beta + 1; l <= N; ++l)
                r += tli_series(1, eb, long(n1) - long(N) + l, order) * J[n1];
        }
    }
    return r;
}

QSeries g_beta_difference(unsigned beta, const MdfIndex& idx, unsigned order)
{
    unsigned N = idx.level;
    if (beta == 0 || beta >= N)
        throw DomainError("g_beta needs 1 <= beta < N");
    std::vector<unsigned> s{1}, a0{0}, ab{beta};
    s.insert(s.end(), idx.s.begin(), idx.s.end());
    a0.insert(a0.end(), idx.alpha.begin(), idx.alpha.end());
    ab.insert(ab.end(), idx.alpha.begin(), idx.alpha.end());
    return mdf_divisor_sum(MdfIndex(s, a0, N), order) - mdf_divisor_sum(MdfIndex(s, ab, N), order);
}

QSeries t_series(unsigned level, unsigned order)
{
    QSeries r(level, order);
    for (unsigned a = 0; a < level; ++a)
        r += mdf_divisor_sum(MdfIndex({1}, {a}, level), order);
    return r;
}

QSeries q_derive(const QSeries& f)
{
    QSeries r = f;
    for (unsigned n = 0; n <= f.order(); ++n)
        r.coeff(n) *= Rational(n);
    return r;
}

} // namespace qmz
