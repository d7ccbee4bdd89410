#include "qmz/mzv.hpp"

#include "qmz/error.hpp"
#include "qmz/stuffle.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace qmz {

MzvSymbol MzvSymbol::zeta(const Word& w, unsigned level)
{
    MzvSymbol x;
    x.level = level;
    for (const auto& l : w) {
        x.s.push_back(l.s);
        x.alpha.push_back(l.a % level);
    }
    if (!x.s.empty() && x.s[0] < 2)
        throw DomainError("zeta symbol needs s_1 > 1: " + word_to_string(w));
    return x;
}

MzvSymbol MzvSymbol::gamma(unsigned beta, const Word& w, unsigned level)
{
    if (beta == 0 || beta >= level)
        throw DomainError("gamma symbol needs 1 <= beta < N");
    MzvSymbol x = zeta({}, level);
    x.kind = SymbolKind::gamma;
    x.beta = beta;
    for (const auto& l : w) {
        x.s.push_back(l.s);
        x.alpha.push_back(l.a % level);
    }
    return x;
}

unsigned MzvSymbol::weight() const
{
    unsigned r = kind == SymbolKind::gamma ? 1 : 0;
    for (auto x : s)
        r += x;
    return r;
}

std::string MzvSymbol::to_string(bool bars) const
{
    Word w;
    for (std::size_t i = 0; i < s.size(); ++i)
        w.push_back({s[i], alpha[i]});
    std::string body = bars ? word_to_bar_string(w) : word_to_string(w);
    if (kind == SymbolKind::gamma)
        return "G" + std::to_string(beta) + (s.empty() ? "" : body);
    return s.empty() ? "1" : "z" + body;
}

namespace {
using SymbolKey = std::tuple<SymbolKind, unsigned, unsigned, const std::vector<unsigned>&,
                             const std::vector<unsigned>&, unsigned, unsigned>;

SymbolKey key(const MzvSymbol& x)
{
    return SymbolKey(x.kind, x.weight(), x.depth(), x.s, x.alpha, x.beta, x.level);
}
} // namespace

bool operator<(const MzvSymbol& a, const MzvSymbol& b) { return key(a) < key(b); }
bool operator==(const MzvSymbol& a, const MzvSymbol& b) { return key(a) == key(b); }

TPolynomial TPolynomial::constant(unsigned level, const CycloNum& c)
{
    TPolynomial p(level);
    p.add(0, {}, c);
    return p;
}

TPolynomial TPolynomial::symbol(const MzvSymbol& x, const CycloNum& c)
{
    TPolynomial p(x.level);
    p.add(0, x.is_one() ? Monomial{} : Monomial{x}, c);
    return p;
}

void TPolynomial::trim()
{
    while (!coeffs.empty() && coeffs.back().empty())
        coeffs.pop_back();
}

void TPolynomial::add(unsigned r, Monomial m, const CycloNum& c)
{
    if (c.level() != level)
        throw DomainError("mixed-level T-polynomial");
    if (c.is_zero())
        return;
    m.erase(std::remove_if(m.begin(), m.end(), [](const MzvSymbol& x) { return x.is_one(); }), m.end());
    std::sort(m.begin(), m.end());
    if (coeffs.size() <= r)
        coeffs.resize(r + 1);
    auto& row = coeffs[r];
    auto it = row.find(m);
    if (it == row.end())
        row.emplace(std::move(m), c);
    else {
        it->second += c;
        if (it->second.is_zero())
            row.erase(it);
    }
    trim();
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& o)
{
    for (std::size_t r = 0; r < o.coeffs.size(); ++r)
        for (const auto& [m, c] : o.coeffs[r])
            add(r, m, c);
    return *this;
}

TPolynomial& TPolynomial::operator-=(const TPolynomial& o)
{
    for (std::size_t r = 0; r < o.coeffs.size(); ++r)
        for (const auto& [m, c] : o.coeffs[r])
            add(r, m, -c);
    return *this;
}

TPolynomial& TPolynomial::operator*=(const CycloNum& c)
{
    if (c.is_zero()) {
        coeffs.clear();
        return *this;
    }
    for (auto& row : coeffs)
        for (auto& [m, x] : row)
            x *= c;
    return *this;
}

TPolynomial operator*(const TPolynomial& a, const TPolynomial& b)
{
    if (a.level != b.level)
        throw DomainError("mixed-level T-polynomial");
    TPolynomial p(a.level);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        for (const auto& [ma, ca] : a.coeffs[i])
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                for (const auto& [mb, cb] : b.coeffs[j]) {
                    Monomial m = ma;
                    m.insert(m.end(), mb.begin(), mb.end());
                    p.add(i + j, std::move(m), ca * cb);
                }
    return p;
}

bool operator==(const TPolynomial& a, const TPolynomial& b) { return a.level == b.level && a.coeffs == b.coeffs; }

TPolynomial TPolynomial::times_T(unsigned k) const
{
    TPolynomial p = *this;
    if (!p.coeffs.empty())
        p.coeffs.insert(p.coeffs.begin(), k, {});
    return p;
}

std::map<MzvSymbol, CycloNum> TPolynomial::linear_part(unsigned r) const
{
    std::map<MzvSymbol, CycloNum> out;
    if (r >= coeffs.size())
        return out;
    for (const auto& [m, c] : coeffs[r]) {
        if (m.size() > 1)
            throw DomainError("T-coefficient is not linear in the symbols");
        MzvSymbol x = m.empty() ? MzvSymbol::zeta({}, level) : m[0];
        out.emplace(x, c);
    }
    return out;
}

std::string TPolynomial::to_string(bool bars) const
{
    std::string out;
    for (std::size_t r = coeffs.size(); r-- > 0;) {
        for (const auto& [m, c] : coeffs[r]) {
            std::string mono;
            for (const auto& x : m)
                mono += (mono.empty() ? "" : "*") + x.to_string(bars);
            if (r)
                mono = (r == 1 ? std::string("T") : "T^" + std::to_string(r)) + (mono.empty() ? "" : "*" + mono);
            bool simple = c.is_rational();
            Rational q = simple ? c.rational_part() : Rational(0);
            if (!out.empty())
                out += simple && q < 0 ? " - " : " + ";
            else if (simple && q < 0)
                out += "-";
            std::string cs = simple ? qmz::to_string(Rational(abs(q))) : "(" + c.to_string() + ")";
            if (mono.empty())
                out += cs;
            else
                out += (simple && abs(q) == 1 ? "" : cs + "*") + mono;
        }
    }
    return out.empty() ? "0" : out;
}

TPolynomial z_project(const QmzPolynomial& x, unsigned w)
{
    TPolynomial p(x.level);
    for (const auto& [r, row] : x.terms)
        for (const auto& [g, c] : row) {
            unsigned wt = r + g.weight();
            if (wt > w)
                throw DomainError("z_project: term " + g.to_string() + " exceeds weight " + std::to_string(w));
            if (wt < w)
                continue;
            if (g.beta)
                p.add(r, {MzvSymbol::gamma(g.beta, g.word, x.level)}, c);
            else if (g.word.empty())
                p.add(r, {}, c);
            else if (g.word[0].s < 2)
                throw DomainError("z_project: unreduced word " + word_to_string(g.word) + ", apply reduce_to_qmz first");
            else
                p.add(r, {MzvSymbol::zeta(g.word, x.level)}, c);
        }
    return p;
}

TPolynomial z_project(const FormalSum& x, unsigned w)
{
    if (x.Tpow)
        throw DomainError("z_project: input carries T factors");
    QmzPolynomial q(x.level);
    for (const auto& [word, c] : x.terms) {
        if (!word.empty() && word[0].s < 2)
            throw DomainError("z_project: unreduced word " + word_to_string(word) + ", apply reduce_to_qmz first");
        q.add(x.tpow, QmzGenerator{0, word}, c);
    }
    return z_project(q, w);
}

namespace {

std::mutex zstar_mutex;
std::map<std::pair<unsigned, Word>, TPolynomial> zstar_cache;

TPolynomial zstar_word(const Word& w, unsigned N);

TPolynomial gamma_poly(unsigned beta, const Word& w, unsigned N, const CycloNum& c)
{
    if (beta == 0)
        return TPolynomial(N);
    return TPolynomial::symbol(MzvSymbol::gamma(beta, w, N), c);
}

std::size_t ipow(std::size_t b, unsigned e)
{
    std::size_t r = 1;
    while (e--)
        r *= b;
    return r;
}

Word ones_word(std::size_t code, unsigned N, unsigned len)
{
    Word w(len);
    for (unsigned i = len; i-- > 0;) {
        w[i] = {1, static_cast<unsigned>(code % N)};
        code /= N;
    }
    return w;
}

// zeta*(1; beta) = (T + sum_g Gamma_g) / N - Gamma_beta
TPolynomial zstar_one(unsigned beta, unsigned N)
{
    CycloNum invN(N, Rational(1, N));
    TPolynomial p(N);
    p.add(1, {}, invN);
    for (unsigned g = 1; g < N; ++g)
        p += gamma_poly(g, {}, N, invN);
    p -= gamma_poly(beta, {}, N, CycloNum(N, 1));
    return p;
}

void solve_family(unsigned k, const Word& v, unsigned N)
{
    unsigned m = k - 1;
    std::size_t n = ipow(N, m + 1), nb = ipow(N, m), D = k + v.size();
    CycloNum one(N, 1);
    std::vector<TPolynomial> b(n, TPolynomial(N));
    for (std::size_t bi = 0; bi < nb; ++bi) {
        Word wp = ones_word(bi, N, m);
        wp.insert(wp.end(), v.begin(), v.end());
        unsigned top = weight(wp) + 1;
        TPolynomial A = zstar_word(wp, N).times_T();
        for (unsigned g = 0; g < N; ++g)
            for (const auto& [x, c] : stuffle(Word{{1, g}}, wp, N).terms) {
                if (weight(x) != top || (x.size() == D && leading_ones(x) >= k))
                    continue;
                A -= zstar_word(x, N) * c;
            }
        for (unsigned g = 1; g < N; ++g)
            A += gamma_poly(g, wp, N, one);
        for (unsigned b0 = 0; b0 < N; ++b0)
            b[b0 * nb + bi] = A - gamma_poly(b0, wp, N, CycloNum(N, long(N)));
    }
    const RationalMatrix& inv = reg_matrix_inverse(N, m);
    std::lock_guard<std::mutex> lock(zstar_mutex);
    for (std::size_t i = 0; i < n; ++i) {
        TPolynomial y(N);
        for (std::size_t j = 0; j < n; ++j)
            if (inv[i][j] != 0)
                y += b[j] * CycloNum(N, inv[i][j]);
        Word w = ones_word(i, N, m + 1);
        w.insert(w.end(), v.begin(), v.end());
        zstar_cache.emplace(std::make_pair(N, w), std::move(y));
    }
}

TPolynomial zstar_word(const Word& w, unsigned N)
{
    if (w.empty())
        return TPolynomial::constant(N, CycloNum(N, 1));
    if (w[0].s > 1)
        return TPolynomial::symbol(MzvSymbol::zeta(w, N), CycloNum(N, 1));
    {
        std::lock_guard<std::mutex> lock(zstar_mutex);
        auto it = zstar_cache.find({N, w});
        if (it != zstar_cache.end())
            return it->second;
    }
    unsigned k = leading_ones(w);
    TPolynomial r(N);
    if (k == 1) {
        unsigned beta = w[0].a;
        Word v(w.begin() + 1, w.end());
        r = zstar_one(beta, N) * zstar_word(v, N);
        CycloNum mone(N, -1);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].a == beta) {
                Word x = v;
                x[j].s += 1;
                r += zstar_word(x, N) * mone;
            }
            Word x(v.begin(), v.begin() + j + 1);
            x.push_back({1, beta});
            x.insert(x.end(), v.begin() + j + 1, v.end());
            r += zstar_word(x, N) * mone;
        }
    } else {
        solve_family(k, Word(w.begin() + k, w.end()), N);
        std::lock_guard<std::mutex> lock(zstar_mutex);
        return zstar_cache.at({N, w});
    }
    std::lock_guard<std::mutex> lock(zstar_mutex);
    zstar_cache.emplace(std::make_pair(N, w), r);
    return r;
}

} // namespace

TPolynomial zstar_regularized(const Word& w, unsigned level)
{
    for (const auto& l : w)
        if (l.s == 0 || l.a >= level)
            throw DomainError("invalid letter in word " + word_to_string(w));
    return zstar_word(w, level);
}

TPolynomial zstar_regularized(const std::vector<unsigned>& s, const std::vector<unsigned>& alpha, unsigned level)
{
    return zstar_regularized(MdfIndex(s, alpha, level).word(), level);
}

NumericValue symbol_numeric(const MzvSymbol& x, unsigned long cutoff, unsigned precision)
{
    static std::mutex mu;
    static std::map<std::tuple<MzvSymbol, unsigned long, unsigned>, NumericValue> cache;
    auto k = std::make_tuple(x, cutoff, precision);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(k);
        if (it != cache.end())
            return it->second;
    }
    NumericValue v;
    if (x.is_one())
        v = {1, 0};
    else if (x.kind == SymbolKind::zeta)
        v = zeta_numeric(x.s, x.alpha, x.level, cutoff, precision);
    else
        v = gamma_numeric(x.beta, x.s, x.alpha, x.level, cutoff, precision);
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(k, v);
    return v;
}

ComplexEstimate tpolynomial_numeric(const TPolynomial& p, long double T, unsigned long cutoff)
{
    ComplexEstimate out;
    long double Tr = 1;
    for (std::size_t r = 0; r < p.coeffs.size(); ++r, Tr *= T) {
        for (const auto& [m, c] : p.coeffs[r]) {
            long double val = 1, rel = 0;
            for (const auto& x : m) {
                NumericValue v = symbol_numeric(x, cutoff);
                val *= v.value;
                rel += v.error / std::max(std::fabs(v.value), 1e-300L);
            }
            std::complex<long double> cc = cyc_embed(c);
            out.value += cc * val * Tr;
            out.error += std::abs(cc) * std::fabs(val * Tr) * rel;
        }
    }
    return out;
}

} // namespace qmz
