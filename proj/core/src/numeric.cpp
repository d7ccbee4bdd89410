#include "qmz/numeric.hpp"

#include "qmz/error.hpp"
#include "qmz/numbers.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace qmz {

unsigned default_precision()
{
    const char* e = std::getenv("QMZ_PRECISION");
    if (!e || !*e)
        return 53;
    char* end = nullptr;
    unsigned long p = std::strtoul(e, &end, 10);
    if (*end || p < 24 || p > 100000)
        throw DomainError(std::string("QMZ_PRECISION must be a bit count in [24, 100000], got '") + e + "'");
    return static_cast<unsigned>(p);
}

namespace {

using boost::multiprecision::mpfr_float;

template <class T>
struct Cx {
    T re = 0, im = 0;
    Cx() = default;
    Cx(T r, T i = 0) : re(std::move(r)), im(std::move(i)) {}
    Cx operator*(const Cx& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
    Cx operator*(const T& x) const { return {re * x, im * x}; }
    Cx operator+(const Cx& o) const { return {re + o.re, im + o.im}; }
    Cx operator-(const Cx& o) const { return {re - o.re, im - o.im}; }
    std::complex<long double> to_ld() const;
};

template <>
std::complex<long double> Cx<long double>::to_ld() const { return {re, im}; }
template <>
std::complex<long double> Cx<mpfr_float>::to_ld() const
{
    return {re.convert_to<long double>(), im.convert_to<long double>()};
}

// Neumaier compensated accumulator.
template <class T>
struct Acc {
    T sum = 0, comp = 0;
    void add(const T& x)
    {
        T t = sum + x;
        using std::abs;
        if (abs(sum) >= abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    T value() const { return sum + comp; }
};

template <class T>
struct CAcc {
    Acc<T> re, im;
    void add(const Cx<T>& x)
    {
        re.add(x.re);
        im.add(x.im);
    }
    Cx<T> value() const { return {re.value(), im.value()}; }
};

template <class T>
T pi_v()
{
    if constexpr (std::is_same_v<T, long double>)
        return boost::math::constants::pi<long double>();
    else
        return boost::math::constants::pi<mpfr_float>();
}

template <class T>
std::vector<Cx<T>> roots_of_unity(unsigned N)
{
    std::vector<Cx<T>> r;
    T two_pi = 2 * pi_v<T>();
    for (unsigned e = 0; e < N; ++e) {
        using std::cos;
        using std::sin;
        T ang = two_pi * T(e) / T(N);
        r.push_back({cos(ang), sin(ang)});
    }
    r[0] = {T(1), T(0)};
    return r;
}

template <class T>
T inv_pow(unsigned long k, unsigned s)
{
    T x = T(1) / T(k), r = 1;
    for (unsigned i = 0; i < s; ++i)
        r *= x;
    return r;
}

// One summation layer: either restricted to k = color mod N (zeta type)
// or weighted by eta^{color k} (polylog type).
struct Layer {
    unsigned s;
    unsigned color;
    bool phase;
};

template <class T>
struct Prefix {
    std::vector<Cx<T>> arr;     // arr[k] = sum over the layers with first index < k
    std::vector<Cx<T>> finals;  // finals[i] = value at K+1 of the prefix of layers i..end
};

template <class T>
Prefix<T> inner_prefix(const std::vector<Layer>& layers, unsigned N, unsigned long K,
                       const std::vector<Cx<T>>& roots)
{
    Prefix<T> p;
    p.arr.assign(K + 2, Cx<T>(T(1)));
    p.finals.assign(layers.size() + 1, Cx<T>(T(1)));
    for (std::size_t j = layers.size(); j-- > 0;) {
        const Layer& L = layers[j];
        std::vector<Cx<T>> cur(K + 2, Cx<T>(T(0)));
        CAcc<T> acc;
        for (unsigned long k = 1; k <= K; ++k) {
            bool live = L.phase || k % N == L.color % N;
            if (live) {
                Cx<T> t = p.arr[k] * inv_pow<T>(k, L.s);
                if (L.phase)
                    t = t * roots[(static_cast<unsigned long>(L.color) * k) % N];
                acc.add(t);
            }
            cur[k + 1] = acc.value();
        }
        p.arr = std::move(cur);
        p.finals[j] = p.arr[K + 1];
    }
    return p;
}

// (1 + ln x)^r weighted integral: int_L^inf e^{-(s-1)u} (1+u)^r du, L = ln K.
long double log_power_tail(long double K, unsigned s, unsigned r)
{
    long double L = std::log(K), a = s - 1.0L, sum = 0, fall = 1;
    for (unsigned i = 0; i <= r; ++i) {
        sum += fall * std::pow(1 + L, static_cast<long double>(r - i)) / std::pow(a, static_cast<long double>(i + 1));
        fall *= r - i;
    }
    return sum * std::exp(-a * L);
}

long double zeta_bound(unsigned s)
{
    // sum_{n>=1} n^{-s} <= 1 + 1/(s-1)
    return 1.0L + 1.0L / (s - 1.0L);
}

// Crude bound for the absolute inner sums: (1 + ln K)^r prod zeta(s_j >= 2).
long double inner_bound(const std::vector<unsigned>& s, std::size_t from, long double K, unsigned& ones)
{
    long double b = 1;
    ones = 0;
    for (std::size_t j = from; j < s.size(); ++j) {
        if (s[j] == 1) {
            ++ones;
            b *= 1 + std::log(K);
        } else
            b *= zeta_bound(s[j]);
    }
    return b;
}

void check_lengths(const std::vector<unsigned>& s, const std::vector<unsigned>& a, unsigned level)
{
    if (level == 0)
        throw DomainError("level must be >= 1");
    if (s.size() != a.size())
        throw DomainError("index arity mismatch");
    for (auto x : s)
        if (x == 0)
            throw DomainError("index entries must be >= 1");
}

void check_cutoff(unsigned long K)
{
    if (K < 16)
        throw DomainError("cutoff must be >= 16");
}

template <class T>
Cx<T> zeta_sum(const std::vector<unsigned>& s, const std::vector<unsigned>& alpha, unsigned N, unsigned long K,
               Cx<T>& i1, Cx<T>& i2)
{
    std::vector<Layer> layers;
    for (std::size_t j = 0; j < s.size(); ++j)
        layers.push_back({s[j], alpha[j] % N, false});
    auto roots = roots_of_unity<T>(N);
    auto p = inner_prefix<T>(layers, N, K, roots);
    i1 = p.finals.size() > 1 ? p.finals[1] : Cx<T>(T(1));
    i2 = p.finals.size() > 2 ? p.finals[2] : Cx<T>(T(1));
    return p.finals[0];
}

template <class T>
Cx<T> mpv_sum(const std::vector<unsigned>& s, const std::vector<unsigned>& a, unsigned N, unsigned long K, Cx<T>& i1,
              Cx<T>& i2, Cx<T>& last_inner)
{
    std::vector<Layer> layers;
    for (std::size_t j = 0; j < s.size(); ++j)
        layers.push_back({s[j], a[j] % N, true});
    auto roots = roots_of_unity<T>(N);
    std::vector<Layer> inner(layers.begin() + 1, layers.end());
    auto p = inner_prefix<T>(inner, N, K, roots);
    CAcc<T> acc;
    for (unsigned long k = 1; k <= K; ++k)
        acc.add(p.arr[k] * roots[(static_cast<unsigned long>(layers[0].color) * k) % N] * inv_pow<T>(k, s[0]));
    i1 = p.finals[0];
    i2 = p.finals.size() > 1 ? p.finals[1] : Cx<T>(T(1));
    last_inner = p.arr[K + 1];
    return acc.value();
}

template <class T>
T gamma_sum(unsigned beta, long shift, const std::vector<unsigned>& s, const std::vector<unsigned>& alpha, unsigned N,
            unsigned long K, T& p1, T& p2)
{
    std::vector<Layer> layers;
    for (std::size_t j = 0; j < s.size(); ++j)
        layers.push_back({s[j], alpha[j] % N, false});
    auto roots = roots_of_unity<T>(N);
    auto p = inner_prefix<T>(layers, N, K, roots);
    Acc<T> acc;
    if (s.empty())
        acc.add(-T(1) / T(beta));
    for (unsigned long n0 = N; n0 <= K; n0 += N) {
        const Cx<T>& in = p.arr[n0];
        if (in.re == 0)
            continue;
        T f = T(1) / T(n0) - T(1) / T(static_cast<long>(n0) + shift);
        acc.add(f * in.re);
    }
    p1 = p.finals[0].re;
    p2 = p.finals.size() > 1 ? p.finals[1].re : T(1);
    return acc.value();
}

struct MpfrScope {
    explicit MpfrScope(unsigned bits)
    {
        old = mpfr_float::default_precision();
        mpfr_float::default_precision(static_cast<unsigned>(bits * 0.30103) + 2);
    }
    ~MpfrScope() { mpfr_float::default_precision(old); }
    unsigned old;
};

long double rounding_slack(long double value, unsigned depth, unsigned precision)
{
    long double eps = precision > 64 ? std::ldexp(1.0L, -63) : std::numeric_limits<long double>::epsilon();
    return 64 * eps * (1 + std::fabs(value)) * (depth + 1);
}

} // namespace

NumericValue zeta_numeric(const std::vector<unsigned>& s, const std::vector<unsigned>& alpha, unsigned level,
                          unsigned long cutoff, unsigned precision)
{
    check_lengths(s, alpha, level);
    check_cutoff(cutoff);
    if (s.empty())
        return {1, 0};
    if (s[0] < 2)
        throw DomainError("zeta_numeric: divergent index (s_1 = 1)");
    const unsigned N = level;
    const long double K = cutoff;
    long double partial, I1, I2;
    if (precision > 64) {
        MpfrScope scope(precision);
        Cx<mpfr_float> a, b;
        auto v = zeta_sum<mpfr_float>(s, alpha, N, cutoff, a, b);
        partial = v.re.convert_to<long double>();
        I1 = a.re.convert_to<long double>();
        I2 = b.re.convert_to<long double>();
    } else {
        Cx<long double> a, b;
        partial = zeta_sum<long double>(s, alpha, N, cutoff, a, b).re;
        I1 = a.re;
        I2 = b.re;
    }
    // first k > K in the outer residue class, midpoint rule
    unsigned long first = cutoff + 1;
    while (first % N != alpha[0] % N)
        ++first;
    long double x0 = first - N / 2.0L, s1 = s[0];
    long double est = I1 * std::pow(x0, 1 - s1) / ((s1 - 1) * N);
    if (s.size() > 1 && s[1] == 1)
        est += I2 * std::pow(x0, 1 - s1) / ((s1 - 1) * (s1 - 1) * N * N);
    unsigned ones = 0;
    long double inner = inner_bound(s, 1, K, ones);
    long double tail = log_power_tail(K, s[0], ones) * inner / std::pow(1 + std::log(K), ones);
    long double value = partial + est;
    return {value, tail + rounding_slack(value, s.size(), precision)};
}

ComplexNumericValue mpv_numeric(const std::vector<unsigned>& s, const std::vector<unsigned>& a, unsigned level,
                                unsigned long cutoff, unsigned precision)
{
    check_lengths(s, a, level);
    check_cutoff(cutoff);
    if (s.empty())
        return {{1, 0}, 0};
    const unsigned N = level;
    bool oscillating = a[0] % N != 0;
    if (!oscillating && s[0] == 1)
        throw DomainError("mpv_numeric: divergent index (s_1 = 1 with eta^{a_1} = 1)");
    std::complex<long double> partial, I1, I2, last;
    if (precision > 64) {
        MpfrScope scope(precision);
        Cx<mpfr_float> x, y, z;
        auto v = mpv_sum<mpfr_float>(s, a, N, cutoff, x, y, z);
        partial = v.to_ld();
        I1 = x.to_ld();
        I2 = y.to_ld();
        last = z.to_ld();
    } else {
        Cx<long double> x, y, z;
        auto v = mpv_sum<long double>(s, a, N, cutoff, x, y, z);
        partial = v.to_ld();
        I1 = x.to_ld();
        I2 = y.to_ld();
        last = z.to_ld();
    }
    const long double K = cutoff, s1 = s[0];
    unsigned ones = 0;
    long double inner = inner_bound(s, 1, K, ones);
    std::complex<long double> est;
    long double bound;
    if (oscillating) {
        // Abel summation: sum_{k>K} w^k g(k) ~ w^{K+1} g(K+1) / (1 - w)
        long double ang = 2 * boost::math::constants::pi<long double>() * (a[0] % N) / N;
        std::complex<long double> w(std::cos(ang), std::sin(ang));
        std::complex<long double> wk = std::pow(w, static_cast<long double>((cutoff + 1) % N));
        est = wk * last * std::pow(K + 1, -s1) / (1.0L - w);
        bound = 4 / std::abs(1.0L - w) * std::pow(K, -s1) * inner;
    } else {
        long double x0 = K + 0.5L;
        est = I1 * std::pow(x0, 1 - s1) / (s1 - 1);
        if (s.size() > 1 && s[1] == 1 && a[1] % N == 0)
            est += I2 * std::pow(x0, 1 - s1) / ((s1 - 1) * (s1 - 1));
        bound = log_power_tail(K, s[0], ones) * inner / std::pow(1 + std::log(K), ones);
    }
    std::complex<long double> value = partial + est;
    return {value, bound + rounding_slack(std::abs(value), s.size(), precision)};
}

NumericValue gamma_numeric(unsigned beta, const std::vector<unsigned>& s, const std::vector<unsigned>& alpha,
                           unsigned level, unsigned long cutoff, unsigned precision, GammaBranch branch)
{
    check_lengths(s, alpha, level);
    check_cutoff(cutoff);
    const unsigned N = level;
    if (beta % N == 0)
        return {0, 0};
    if (beta >= N)
        throw DomainError("gamma_numeric needs 0 <= beta < N");
    unsigned a1 = s.empty() ? 0 : alpha[0] % N;
    bool first_case = s.empty() || beta < a1 || (branch == GammaBranch::limit && beta == a1);
    long shift = first_case ? long(beta) : long(beta) - long(N);
    long double partial, P1, P2;
    if (precision > 64) {
        MpfrScope scope(precision);
        mpfr_float a, b;
        partial = gamma_sum<mpfr_float>(beta, shift, s, alpha, N, cutoff, a, b).convert_to<long double>();
        P1 = a.convert_to<long double>();
        P2 = b.convert_to<long double>();
    } else {
        partial = gamma_sum<long double>(beta, shift, s, alpha, N, cutoff, P1, P2);
    }
    // tail sum_{n0 > K, N | n0} shift / n0^2 * P(n0)
    unsigned long first = (cutoff / N + 1) * N;
    long double x0 = first - N / 2.0L, K = cutoff;
    long double est = shift * P1 / (x0 * N);
    if (!s.empty() && s[0] == 1)
        est += shift * P2 / (x0 * N * N);
    unsigned ones = 0;
    long double inner = inner_bound(s, 0, K, ones);
    long double bound = 2 * std::fabs(static_cast<long double>(shift)) * log_power_tail(K, 2, ones) * inner /
                        std::pow(1 + std::log(K), ones);
    long double value = partial + est;
    return {value, bound + rounding_slack(value, s.size(), precision)};
}

namespace {

// [s;alpha](x) at x = q eta^{-1}, nested over n_1 > ... > n_d, n_max terms.
long double mdf_at(const MdfIndex& idx, long double q, unsigned long n_max)
{
    const unsigned N = idx.level, d = idx.depth();
    std::vector<std::vector<Integer>> eul;
    std::vector<long double> fact;
    for (auto s : idx.s) {
        eul.push_back(s == 1 ? std::vector<Integer>{Integer(1)} : eulerian_coefficients(s - 1));
        fact.push_back(factorial(s - 1).get_d());
    }
    auto roots = roots_of_unity<long double>(N);
    auto tli = [&](unsigned j, unsigned long n) {
        // z = eta^{alpha_j - n} q^n
        long e = (static_cast<long>(idx.alpha[j]) - static_cast<long>(n % N)) % long(N);
        if (e < 0)
            e += N;
        std::complex<long double> z = roots[e].to_ld() * std::pow(q, static_cast<long double>(n));
        std::complex<long double> p = 0, zp = 1;
        for (const auto& c : eul[j]) {
            p += static_cast<long double>(c.get_d()) * zp;
            zp *= z;
        }
        return z * p / (fact[j] * std::pow(1.0L - z, static_cast<long double>(idx.s[j])));
    };
    std::vector<std::complex<long double>> prev(n_max + 2, 1.0L);
    for (unsigned j = d; j-- > 0;) {
        std::vector<std::complex<long double>> cur(n_max + 2, 0.0L);
        std::complex<long double> acc = 0;
        for (unsigned long n = 1; n <= n_max; ++n) {
            acc += tli(j, n) * prev[n];
            cur[n + 1] = acc;
        }
        prev = std::move(cur);
    }
    return prev[n_max + 1].real();
}

} // namespace

long double mdf_numeric(const MdfIndex& idx, long double q)
{
    if (!(q > 0 && q < 1))
        throw DomainError("mdf_numeric needs 0 < q < 1");
    unsigned long n_max = static_cast<unsigned long>(70.0L / (1 - q)) + 16;
    return mdf_at(idx, q, n_max);
}

LimitCheck zk_limit_check(const MdfIndex& idx)
{
    if (idx.depth() == 0 || idx.s[0] < 2)
        throw DomainError("zk_limit_check needs s_1 >= 2");
    const unsigned k = idx.weight();
    LimitCheck out;
    for (int j = 4; j <= 12; ++j) {
        long double h = std::ldexp(1.0L, -j), q = 1 - h;
        out.samples.push_back(std::pow(h, static_cast<long double>(k)) * mdf_numeric(idx, q));
    }
    // Richardson table in h with ratio 2
    std::vector<std::vector<long double>> R(out.samples.size());
    for (std::size_t i = 0; i < out.samples.size(); ++i) {
        R[i].push_back(out.samples[i]);
        for (std::size_t m = 1; m <= i; ++m) {
            long double f = std::ldexp(1.0L, static_cast<int>(m));
            R[i].push_back((f * R[i][m - 1] - R[i - 1][m - 1]) / (f - 1));
        }
    }
    out.extrapolated = R.back().back();
    out.reference = zeta_numeric(idx.s, idx.alpha, idx.level, 1000000).value;
    out.difference = std::fabs(out.extrapolated - out.reference);
    return out;
}

} // namespace qmz
