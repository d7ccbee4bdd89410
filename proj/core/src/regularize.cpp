#include "qmz/regularize.hpp"

#include "qmz/error.hpp"
#include "qmz/stuffle.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <tuple>

namespace qmz {

namespace {

std::size_t ipow(std::size_t b, unsigned e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

std::vector<unsigned> decode(std::size_t idx, unsigned N, unsigned len)
{
    std::vector<unsigned> b(len);
    for (unsigned i = len; i-- > 0;) {
        b[i] = idx % N;
        idx /= N;
    }
    return b;
}

std::size_t encode(const std::vector<unsigned>& b, unsigned N)
{
    std::size_t r = 0;
    for (auto x : b)
        r = r * N + x;
    return r;
}

RationalMatrix zero_matrix(std::size_t n) { return RationalMatrix(n, std::vector<Rational>(n)); }

} // namespace

RegMatrix reg_matrix(unsigned level, unsigned m)
{
    if (level == 0)
        throw DomainError("level must be >= 1");
    std::size_t n = ipow(level, m + 1);
    RegMatrix M{level, m, zero_matrix(n)};
    for (std::size_t r = 0; r < n; ++r) {
        auto b = decode(r, level, m + 1);
        M.entries[r][r] += level;
        for (unsigned l = 1; l <= m; ++l)
            for (unsigned g = 0; g < level; ++g) {
                std::vector<unsigned> c(b.begin() + 1, b.begin() + 1 + l);
                c.push_back(g);
                c.insert(c.end(), b.begin() + 1 + l, b.end());
                M.entries[r][encode(c, level)] += 1;
            }
    }
    return M;
}

RegMatrix reg_matrix_printed(unsigned level, unsigned m, bool inclusive)
{
    if (level == 0)
        throw DomainError("level must be >= 1");
    long N = level;
    long n = static_cast<long>(ipow(level, m + 1)), Nm = static_cast<long>(ipow(level, m));
    RegMatrix M{level, m, zero_matrix(n)};
    for (long i = 0; i < n; ++i) {
        M.entries[i][i] += N;
        long ib = i % Nm;
        for (unsigned r = 0; r < m; ++r) {
            long Nr = static_cast<long>(ipow(level, r));
            for (long j = 0; j < n; ++j) {
                long diff = j - ib * N;
                bool in_range = inclusive ? diff <= Nr * (N - 1) : diff < Nr * (N - 1);
                if (diff >= 0 && diff % Nr == 0 && in_range)
                    M.entries[i][j] += 1;
            }
        }
    }
    return M;
}

Rational determinant(const RationalMatrix& a)
{
    std::size_t n = a.size();
    if (n == 0)
        return 1;
    // clear denominators row by row
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(n));
    Rational scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n)
            throw DomainError("determinant of a non-square matrix");
        Integer l = 1;
        for (const auto& x : a[i])
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
        scale *= Rational(l);
        for (std::size_t j = 0; j < n; ++j)
            m[i][j] = a[i][j].get_num() * (l / a[i][j].get_den());
    }
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    Rational det(m[n - 1][n - 1] * sign);
    return det / scale;
}

Integer reg_matrix_det_formula(unsigned level, unsigned m)
{
    Integer r, t;
    mpz_ui_pow_ui(r.get_mpz_t(), level, ipow(level, m + 1));
    r *= m + 1;
    for (unsigned j = 2; j <= m; ++j) {
        mpz_ui_pow_ui(t.get_mpz_t(), j, ipow(level, m - j) * (level - 1));
        r *= t;
    }
    return r;
}

RationalMatrix inverse(const RationalMatrix& a)
{
    std::size_t n = a.size();
    RationalMatrix m = a, inv = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0)
            ++p;
        if (p == n)
            throw DomainError("matrix is singular");
        std::swap(m[k], m[p]);
        std::swap(inv[k], inv[p]);
        Rational piv = m[k][k];
        for (std::size_t j = 0; j < n; ++j) {
            m[k][j] /= piv;
            inv[k][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0)
                continue;
            Rational f = m[i][k];
            for (std::size_t j = 0; j < n; ++j) {
                if (m[k][j] != 0)
                    m[i][j] -= f * m[k][j];
                if (inv[k][j] != 0)
                    inv[i][j] -= f * inv[k][j];
            }
        }
    }
    return inv;
}

const RationalMatrix& reg_matrix_inverse(unsigned level, unsigned m)
{
    static std::mutex mu;
    static std::map<std::pair<unsigned, unsigned>, RationalMatrix> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({level, m});
        if (it != cache.end())
            return it->second;
    }
    RationalMatrix inv = inverse(reg_matrix(level, m).entries);
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(level, m), std::move(inv)).first->second;
}

std::string QmzGenerator::to_string() const
{
    return beta ? "g" + std::to_string(beta) + word_to_string(word) : word_to_string(word);
}

void QmzPolynomial::add(unsigned tpow, const QmzGenerator& g, const CycloNum& c)
{
    if (c.level() != level)
        throw DomainError("mixed-level qMZ polynomial");
    if (c.is_zero())
        return;
    auto& row = terms[tpow];
    auto it = row.find(g);
    if (it == row.end())
        row.emplace(g, c);
    else {
        it->second += c;
        if (it->second.is_zero())
            row.erase(it);
    }
    if (row.empty())
        terms.erase(tpow);
}

QmzPolynomial& QmzPolynomial::operator+=(const QmzPolynomial& o)
{
    for (const auto& [r, row] : o.terms)
        for (const auto& [g, c] : row)
            add(r, g, c);
    return *this;
}

QmzPolynomial& QmzPolynomial::operator-=(const QmzPolynomial& o)
{
    for (const auto& [r, row] : o.terms)
        for (const auto& [g, c] : row)
            add(r, g, -c);
    return *this;
}

void QmzPolynomial::add_scaled(const QmzPolynomial& o, const CycloNum& c)
{
    if (c.is_zero())
        return;
    for (const auto& [r, row] : o.terms)
        for (const auto& [g, x] : row)
            add(r, g, x * c);
}

QmzPolynomial& QmzPolynomial::operator*=(const CycloNum& c)
{
    if (c.is_zero()) {
        terms.clear();
        return *this;
    }
    for (auto& [r, row] : terms)
        for (auto& [g, x] : row)
            x *= c;
    return *this;
}

QmzPolynomial QmzPolynomial::times_t(unsigned k) const
{
    QmzPolynomial p(level);
    for (const auto& [r, row] : terms)
        p.terms[r + k] = row;
    return p;
}

std::string QmzPolynomial::to_string(bool bars) const
{
    std::string out;
    for (const auto& [r, row] : terms) {
        for (const auto& [g, c] : row) {
            std::string gs = g.beta ? "g" + std::to_string(g.beta) + "(" +
                                          (bars ? word_to_bar_string(g.word) : word_to_string(g.word)) + ")"
                                    : (bars ? word_to_bar_string(g.word) : word_to_string(g.word));
            if (r)
                gs = (r == 1 ? std::string("t") : "t^" + std::to_string(r)) + "*" + gs;
            bool simple = c.is_rational();
            Rational q = simple ? c.rational_part() : Rational(0);
            if (!out.empty())
                out += simple && q < 0 ? " - " : " + ";
            else if (simple && q < 0)
                out += "-";
            if (simple) {
                if (abs(q) != 1)
                    out += qmz::to_string(Rational(abs(q))) + "*";
            } else
                out += "(" + c.to_string() + ")*";
            out += gs;
        }
    }
    return out.empty() ? "0" : out;
}

namespace {

std::mutex reduce_mutex;
std::map<std::pair<unsigned, Word>, QmzPolynomial> reduce_cache;

bool cached(unsigned N, const Word& w, QmzPolynomial& out)
{
    std::lock_guard<std::mutex> lock(reduce_mutex);
    auto it = reduce_cache.find({N, w});
    if (it == reduce_cache.end())
        return false;
    out = it->second;
    return true;
}

QmzPolynomial reduce_word(const Word& w, unsigned N);

// Solves the whole family 1^k v with all colorings of the leading ones.
void solve_family(unsigned k, const Word& v, unsigned N)
{
    unsigned m = k - 1;
    std::size_t D = k + v.size();
    std::size_t n = ipow(N, m + 1), nb = ipow(N, m);
    CycloNum one(N, 1);
    // b(b0, b') = A(b') + sum_{g >= 1} g_g(w(b')) - N g_{b0}(w(b')); the part
    // independent of b0 is applied once per b'.
    std::vector<QmzPolynomial> common(nb, QmzPolynomial(N));
    std::vector<Word> wps(nb);
    for (std::size_t bi = 0; bi < nb; ++bi) {
        Word wp;
        for (auto x : decode(bi, N, m))
            wp.push_back({1, x});
        wp.insert(wp.end(), v.begin(), v.end());
        QmzPolynomial A = reduce_word(wp, N).times_t();
        for (unsigned g = 0; g < N; ++g)
            for (const auto& [x, c] : stuffle(Word{{1, g}}, wp, N).terms) {
                if (x.size() == D && leading_ones(x) >= k)
                    continue;
                A.add_scaled(reduce_word(x, N), -c);
            }
        for (unsigned g = 1; g < N; ++g)
            A.add(0, QmzGenerator{g, wp}, one);
        common[bi] = std::move(A);
        wps[bi] = std::move(wp);
    }
    const RationalMatrix& inv = reg_matrix_inverse(N, m);
    std::vector<QmzPolynomial> x(n, QmzPolynomial(N));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t bi = 0; bi < nb; ++bi) {
            Rational c = 0;
            for (unsigned b0 = 0; b0 < N; ++b0)
                c += inv[i][b0 * nb + bi];
            if (c != 0)
                x[i].add_scaled(common[bi], CycloNum(N, c));
            for (unsigned b0 = 1; b0 < N; ++b0) {
                const Rational& e = inv[i][b0 * nb + bi];
                if (e != 0)
                    x[i].add(0, QmzGenerator{b0, wps[bi]}, CycloNum(N, -e * N));
            }
        }
    }
    std::lock_guard<std::mutex> lock(reduce_mutex);
    for (std::size_t i = 0; i < n; ++i) {
        Word w;
        for (auto c : decode(i, N, m + 1))
            w.push_back({1, c});
        w.insert(w.end(), v.begin(), v.end());
        reduce_cache.emplace(std::make_pair(N, w), std::move(x[i]));
    }
}

QmzPolynomial reduce_word(const Word& w, unsigned N)
{
    for (const auto& l : w)
        if (l.a >= N || l.s == 0)
            throw DomainError("invalid letter in word " + word_to_string(w));
    QmzPolynomial out(N);
    if (w.empty() || w[0].s > 1) {
        out.add(0, QmzGenerator{0, w}, CycloNum(N, 1));
        return out;
    }
    if (cached(N, w, out))
        return out;
    unsigned k = leading_ones(w);
    solve_family(k, Word(w.begin() + k, w.end()), N);
    cached(N, w, out);
    return out;
}

} // namespace

QmzPolynomial reduce_to_qmz(const Word& w, unsigned level) { return reduce_word(w, level); }

QmzPolynomial reduce_to_qmz(const MdfIndex& idx) { return reduce_word(idx.word(), idx.level); }

QmzPolynomial reduce_to_qmz(const FormalSum& x)
{
    if (x.Tpow)
        throw DomainError("reduce_to_qmz: input carries T factors");
    QmzPolynomial p(x.level);
    for (const auto& [w, c] : x.terms) {
        p.add_scaled(reduce_word(w, x.level), c);
    }
    return x.tpow ? p.times_t(x.tpow) : p;
}

namespace {

QSeries generator_series(const QmzGenerator& g, unsigned N, unsigned order)
{
    if (!g.beta)
        return eval_word(g.word, N, order);
    static std::mutex mu;
    static std::map<std::tuple<unsigned, unsigned, unsigned, Word>, QSeries> cache;
    auto key = std::make_tuple(N, order, g.beta, g.word);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }
    QSeries s = g_beta(g.beta, MdfIndex(g.word, N), order);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, s);
    return s;
}

} // namespace

QSeries eval_qmz(const QmzPolynomial& p, unsigned order)
{
    unsigned N = p.level;
    QSeries r(N, order), t = t_series(N, order), tp = QSeries::one(N, order);
    unsigned cur = 0;
    for (const auto& [k, row] : p.terms) {
        while (cur < k) {
            tp *= t;
            ++cur;
        }
        QSeries part(N, order);
        for (const auto& [g, c] : row) {
            part += generator_series(g, N, order) * c;
        }
        r += tp * part;
    }
    return r;
}

} // namespace qmz
