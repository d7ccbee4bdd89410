#include "qmz/numbers.hpp"

#include "qmz/error.hpp"

#include <cctype>
#include <mutex>

namespace qmz {

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r)
{
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            t += c;
    auto valid_int = [](const std::string& s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size())
            return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i])))
                return false;
        return true;
    };
    auto slash = t.find('/');
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den))
        throw DomainError("malformed rational '" + text + "'");
    if (num[0] == '+')
        num.erase(0, 1);
    if (den[0] == '+')
        den.erase(0, 1);
    Rational r{Integer(num), Integer(den)};
    if (r.get_den() == 0)
        throw DomainError("zero denominator in '" + text + "'");
    r.canonicalize();
    return r;
}

Integer binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

namespace {

std::mutex g_seq_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};
std::vector<Rational> g_euler{Rational(1)};

} // namespace

Rational bernoulli(unsigned n)
{
    std::lock_guard lock(g_seq_mutex);
    // sum_{k=0}^{m} C(m+1,k) B_k = 0
    while (g_bernoulli.size() <= n) {
        unsigned m = static_cast<unsigned>(g_bernoulli.size());
        Rational s = 0;
        for (unsigned k = 0; k < m; ++k)
            s += Rational(binomial(m + 1, k)) * g_bernoulli[k];
        g_bernoulli.push_back(-s / Rational(m + 1));
    }
    return g_bernoulli[n];
}

Rational euler_number(unsigned n)
{
    std::lock_guard lock(g_seq_mutex);
    // cosh(x) * sech(x) = 1, with cosh = sum x^{2j}/(2j)!
    while (g_euler.size() <= n) {
        unsigned m = static_cast<unsigned>(g_euler.size());
        if (m % 2 == 1) {
            g_euler.push_back(0);
            continue;
        }
        Rational s = 0;
        for (unsigned j = 0; j + 2 <= m; j += 2)
            s += Rational(binomial(m, j)) * g_euler[j];
        g_euler.push_back(-s);
    }
    return g_euler[n];
}

std::vector<Integer> eulerian_coefficients(unsigned k)
{
    if (k == 0)
        throw DomainError("eulerian_coefficients: k must be >= 1");
    std::vector<Integer> a(k);
    for (unsigned n = 0; n < k; ++n) {
        Integer s = 0;
        for (unsigned i = 0; i <= n; ++i) {
            Integer p;
            mpz_ui_pow_ui(p.get_mpz_t(), n + 1 - i, k);
            Integer term = binomial(k + 1, i) * p;
            if (i % 2)
                s -= term;
            else
                s += term;
        }
        a[n] = s;
    }
    return a;
}

} // namespace qmz
