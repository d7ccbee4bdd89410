// One PASS/FAIL line per acceptance criterion. Printed forms are transcribed
// literally; where a printed form fails, diagnostic lines show what holds instead.

#include "oracle.hpp"
#include "qmz/coeffs.hpp"
#include "qmz/mzv.hpp"
#include "qmz/numbers.hpp"
#include "qmz/numeric.hpp"
#include "qmz/qseries.hpp"
#include "qmz/regularize.hpp"
#include "qmz/relations.hpp"
#include "qmz/stuffle.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace qmz;

namespace {

int failures = 0;

struct Criterion {
    int id;
    std::string title;
    double limit_s;  // 0: no runtime limit
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool ok = true;
    std::vector<std::string> notes;

    Criterion(int i, std::string t, double limit) : id(i), title(std::move(t)), limit_s(limit) {}

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
    void finish()
    {
        double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (limit_s > 0 && t >= limit_s) {
            ok = false;
            notes.push_back("runtime limit exceeded");
        }
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.2f s", t);
        std::cout << (ok ? "PASS " : "FAIL ") << id << ": " << title << " (" << buf << ")\n";
        for (const auto& n : notes)
            std::cout << "        " << n << '\n';
        std::cout.flush();
        failures += !ok;
    }
};

std::string num(long double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3Lg", x);
    return buf;
}

// Linear combination builder: sum c * [word].
struct Lin {
    unsigned N;
    FormalSum f;
    explicit Lin(unsigned n) : N(n), f(n) {}
    Lin& add(const CycloNum& c, std::vector<std::pair<unsigned, unsigned>> letters)
    {
        Word w;
        for (auto [s, a] : letters)
            w.push_back({s, a});
        f.add(w, c);
        return *this;
    }
    Lin& add(const Rational& c, std::vector<std::pair<unsigned, unsigned>> letters)
    {
        return add(CycloNum(N, c), std::move(letters));
    }
};

std::vector<Word> words(unsigned N, unsigned max_weight, unsigned max_depth)
{
    std::vector<Word> out;
    Word w;
    std::function<void(unsigned)> rec = [&](unsigned left) {
        if (!w.empty())
            out.push_back(w);
        if (w.size() == max_depth)
            return;
        for (unsigned s = 1; s <= left; ++s)
            for (unsigned a = 0; a < N; ++a) {
                w.push_back({s, a});
                rec(left - s);
                w.pop_back();
            }
    };
    rec(max_weight);
    return out;
}

QSeries ints(unsigned N, const std::vector<long>& c)
{
    QSeries f(N, static_cast<unsigned>(c.size()) - 1);
    for (std::size_t n = 0; n < c.size(); ++n)
        f.coeff(n) = CycloNum(N, c[n]);
    return f;
}

mpz_class ipow(unsigned b, unsigned e)
{
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), b, e);
    return p;
}

void criterion_1()
{
    Criterion c{1, "printed MDF coefficients at level 2", 1.0};
    QSeries a = mdf_polylog(MdfIndex({2}, {1}, 2), 8);
    c.expect(a == ints(2, {0, -1, 1, -4, 5, -6, 4, -8, 13}), "[2;1]@2 = -q+q^2-4q^3+5q^4-6q^5+4q^6-8q^7+13q^8");
    QSeries b = mdf_polylog(MdfIndex({2, 1}, {0, 1}, 2), 7);
    c.expect(b == ints(2, {0, 0, 0, -1, 0, -4, 1, -9}), "[2,1;0,1]@2 = -q^3-4q^5+q^6-9q^7");
    c.note("[2;1]@2 = " + a.to_string());
    c.finish();
}

void criterion_2()
{
    Criterion c{2, "divisor-sum, polylog and Eulerian constructions agree (weight <= 5, depth <= 3, N <= 4, order 25)",
                120.0};
    std::size_t count = 0;
    for (unsigned N = 1; N <= 4; ++N)
        for (const auto& w : words(N, 5, 3)) {
            MdfIndex idx(w, N);
            QSeries x = mdf_divisor_sum(idx, 25);
            bool same = x == mdf_polylog(idx, 25) && x == mdf_eulerian(idx, 25);
            c.expect(same, word_to_string(w) + "@" + std::to_string(N));
            ++count;
        }
    c.note(std::to_string(count) + " indices");
    c.finish();
}

void criterion_3()
{
    Criterion c{3, "printed product examples hold as q-series identities to order 30", 60.0};
    const unsigned M = 30;
    struct Example {
        std::string name;
        unsigned N;
        Word a, b;
        FormalSum rhs;
    };
    std::vector<Example> ex;
    const Rational h(1, 2), q(1, 4);
    {  // level 2, bars are color 1
        const unsigned N = 2;
        ex.push_back({"[1]*[1bar]", N, {{1, 0}}, {{1, 1}},
                      Lin(N).add(1, {{1, 0}, {1, 1}}).add(1, {{1, 1}, {1, 0}}).add(-h, {{1, 0}}).add(-h, {{1, 1}}).f});
        ex.push_back({"[2bar]*[1bar]", N, {{2, 1}}, {{1, 1}},
                      Lin(N).add(1, {{2, 0}, {1, 1}}).add(1, {{1, 0}, {2, 1}}).add(-h, {{2, 1}}).add(1, {{3, 1}}).f});
        ex.push_back({"[2]*[1bar]", N, {{2, 0}}, {{1, 1}},
                      Lin(N)
                          .add(1, {{2, 0}, {1, 1}})
                          .add(1, {{1, 1}, {2, 0}})
                          .add(q, {{1, 0}})
                          .add(-2 * q, {{2, 0}})
                          .add(-q, {{1, 1}})
                          .f});
        ex.push_back({"[2]*[2bar]", N, {{2, 0}}, {{2, 1}},
                      Lin(N).add(1, {{2, 0}, {2, 1}}).add(1, {{2, 1}, {2, 0}}).add(-q, {{2, 0}}).add(-q, {{2, 1}}).f});
    }
    {  // level 3, sqrt(-3) = eta - eta^2
        const unsigned N = 3;
        CycloNum r = CycloNum::eta_power(3, 1) - CycloNum::eta_power(3, 2);
        auto R = [&](Rational k) { return r * k; };
        ex.push_back({"[1;1]*[1;2]", N, {{1, 1}}, {{1, 2}},
                      Lin(N)
                          .add(1, {{1, 1}, {1, 2}})
                          .add(1, {{1, 2}, {1, 1}})
                          .add(R(Rational(1, 6)), {{1, 2}})
                          .add(R(Rational(-1, 6)), {{1, 1}})
                          .f});
        ex.push_back({"[1;1]*[2;0]", N, {{1, 1}}, {{2, 0}},
                      Lin(N)
                          .add(1, {{2, 0}, {1, 1}})
                          .add(1, {{1, 1}, {2, 0}})
                          .add(h, {{1, 1}})
                          .add(-h, {{1, 0}})
                          .add(R(Rational(-1, 6)), {{2, 0}})
                          .f});
        ex.push_back({"[2;1]*[1;2]", N, {{2, 1}}, {{1, 2}},
                      Lin(N)
                          .add(1, {{2, 1}, {1, 2}})
                          .add(1, {{1, 2}, {2, 1}})
                          .add(h, {{1, 2}})
                          .add(-h, {{1, 1}})
                          .add(R(Rational(-1, 6)), {{2, 1}})
                          .f});
        ex.push_back({"[2;1]*[2;2]", N, {{2, 1}}, {{2, 2}},
                      Lin(N)
                          .add(1, {{2, 1}, {2, 2}})
                          .add(1, {{2, 2}, {2, 1}})
                          .add(h, {{2, 1}})
                          .add(h, {{2, 2}})
                          .add(R(Rational(1, 9)), {{1, 2}})
                          .add(R(Rational(-1, 9)), {{1, 1}})
                          .f});
        ex.push_back({"[3;1]*[2;2]", N, {{3, 1}}, {{2, 2}},
                      Lin(N)
                          .add(1, {{3, 1}, {2, 2}})
                          .add(1, {{2, 2}, {3, 1}})
                          .add(h, {{3, 1}})
                          .add(R(Rational(-1, 9)), {{2, 1}})
                          .add(R(Rational(-1, 18)), {{2, 2}})
                          .f});
    }
    {  // level 4, sqrt(-1) = eta
        const unsigned N = 4;
        CycloNum i = CycloNum::eta_power(4, 1);
        ex.push_back({"[1;1]*[1;2]", N, {{1, 1}}, {{1, 2}},
                      Lin(N)
                          .add(1, {{1, 1}, {1, 2}})
                          .add(1, {{1, 2}, {1, 1}})
                          .add(i * h, {{1, 1}})
                          .add(i * -h, {{1, 2}})
                          .f});
        ex.push_back({"[1;1]*[1;3]", N, {{1, 1}}, {{1, 3}},
                      Lin(N).add(1, {{1, 1}, {1, 3}}).add(1, {{1, 3}, {1, 1}}).add(-h, {{1, 1}}).add(-h, {{1, 3}}).f});
        ex.push_back({"[1;1]*[2;0]", N, {{1, 1}}, {{2, 0}},
                      Lin(N)
                          .add(1, {{2, 0}, {1, 1}})
                          .add(1, {{1, 1}, {2, 0}})
                          .add(h, {{1, 0}})
                          .add(-h, {{1, 1}})
                          .add(i * h, {{2, 0}})
                          .f});
        ex.push_back({"[1;1]*[2;2]", N, {{1, 1}}, {{2, 2}},
                      Lin(N)
                          .add(1, {{1, 1}, {2, 2}})
                          .add(1, {{2, 2}, {1, 1}})
                          .add(h, {{1, 2}})
                          .add(-h, {{1, 1}})
                          .add(i * -h, {{2, 2}})
                          .f});
        ex.push_back({"[1;1]*[2;3]", N, {{1, 1}}, {{2, 3}},
                      Lin(N)
                          .add(1, {{1, 1}, {2, 3}})
                          .add(1, {{2, 3}, {1, 1}})
                          .add(q, {{1, 3}})
                          .add(-q, {{1, 1}})
                          .add(-2 * q, {{2, 3}})
                          .f});
        // "[1,2]" and "[2, 2]" read as [1;2] and [2;2]
        ex.push_back({"[3;1]*[2;2]", N, {{3, 1}}, {{2, 2}},
                      Lin(N)
                          .add(1, {{3, 1}, {2, 2}})
                          .add(1, {{2, 2}, {3, 1}})
                          .add(h, {{1, 1}})
                          .add(-h, {{3, 1}})
                          .add(-h, {{1, 2}})
                          .add(i * h, {{2, 1}})
                          .add(i * q, {{2, 2}})
                          .f});
    }
    int held = 0, expansion_ok = 0;
    for (const auto& e : ex) {
        QSeries lhs = eval_word(e.a, e.N, M) * eval_word(e.b, e.N, M);
        QSeries rhs = eval_to_qseries(e.rhs, M);
        bool ok = lhs == rhs;
        held += ok;
        std::string where;
        if (!ok)
            for (unsigned n = 0; n <= M; ++n)
                if (!(lhs[n] == rhs[n])) {
                    where = " (first difference at q^" + std::to_string(n) + ")";
                    break;
                }
        c.expect(ok, "N=" + std::to_string(e.N) + " " + e.name + " as printed" + where);
        FormalSum st = stuffle(e.a, e.b, e.N);
        bool st_ok = eval_to_qseries(st, M) == lhs;
        expansion_ok += st_ok;
        if (!ok)
            c.note("    stuffle gives " + e.name + " = " + st.to_string(e.N == 2));
    }
    c.note(std::to_string(held) + " of " + std::to_string(ex.size()) + " printed forms hold; the stuffle expansion holds for " +
           std::to_string(expansion_ok) + " of " + std::to_string(ex.size()));
    c.finish();
}

void criterion_4()
{
    Criterion c{4, "eval(w * v) = eval(w) eval(v), order 25", 0};
    const unsigned M = 25;
    auto ws = words(2, 4, 4);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i; j < ws.size(); ++j) {
            bool ok = eval_to_qseries(stuffle(ws[i], ws[j], 2), M) == eval_word(ws[i], 2, M) * eval_word(ws[j], 2, M);
            c.expect(ok, word_to_string(ws[i]) + " * " + word_to_string(ws[j]) + " at N=2");
            ++pairs;
        }
    std::mt19937 rng(2024);
    for (unsigned N : {3u, 4u}) {
        auto pool = words(N, 4, 4);
        for (int k = 0; k < 100; ++k) {
            const Word& a = pool[rng() % pool.size()];
            const Word& b = pool[rng() % pool.size()];
            bool ok = eval_to_qseries(stuffle(a, b, N), M) == eval_word(a, N, M) * eval_word(b, N, M);
            c.expect(ok, word_to_string(a) + " * " + word_to_string(b) + " at N=" + std::to_string(N));
            ++pairs;
        }
    }
    c.note(std::to_string(pairs) + " pairs");
    c.finish();
}

void criterion_5()
{
    Criterion c{5, "omega closed forms and color sums", 5.0};
    auto B = oracle::bernoulli;
    for (unsigned n = 0; n <= 10; ++n)
        c.expect(omega_value(2, 1, n) == CycloNum(2, Rational(ipow(2, n + 1) - 1) * B(n + 1) / Rational(n + 1)),
                 "N=2 n=" + std::to_string(n));
    CycloNum eta3 = CycloNum::eta_power(3, 1);
    CycloNum r3 = eta3 - eta3 * eta3;
    c.expect(omega_value(3, 1, 0) == (eta3 * eta3 - CycloNum(3, 1)) * Rational(1, 3), "N=3 n=0");
    for (unsigned m = 1; 2 * m <= 10; ++m) {
        CycloNum odd(3, Rational(ipow(3, 2 * m) - 1) * B(2 * m) / Rational(4 * m));
        c.expect(omega_value(3, 1, 2 * m - 1) == odd && omega_value(3, 2, 2 * m - 1) == odd,
                 "N=3 n=" + std::to_string(2 * m - 1));
        Rational s = 0;
        for (unsigned j = 0; j <= 2 * m; ++j)
            s += Rational(ipow(3, 2 * m - j) * (ipow(2, j + 1) - 1) * oracle::binom(2 * m + 1, 2 * m - j)) *
                 B(2 * m - j);
        CycloNum even = r3 * (-s / Rational(6 * (2 * m + 1)));
        c.expect(omega_value(3, 1, 2 * m) == even && omega_value(3, 2, 2 * m) == -even,
                 "N=3 n=" + std::to_string(2 * m));
    }
    CycloNum i = CycloNum::eta_power(4, 1);
    for (unsigned n = 0; n <= 10; ++n) {
        CycloNum w(4);
        if (n == 0)
            w = (CycloNum(4, -1) - i) * Rational(1, 2);
        else if (n % 2)
            w = CycloNum(4, Rational(ipow(2, n) * (ipow(2, n + 1) - 1)) * B(n + 1) / Rational(n + 1));
        else
            w = i * (-oracle::euler_number(n) / Rational(2));
        c.expect(omega_value(4, 1, n) == w, "N=4 alpha=1 n=" + std::to_string(n));
        c.expect(omega_value(4, 3, n) == galois_conjugate(w, -1), "N=4 alpha=3 n=" + std::to_string(n));
        c.expect(omega_value(4, 2, n) == CycloNum(4, omega_value(2, 1, n).rational_part()),
                 "N=4 alpha=2 n=" + std::to_string(n));
    }
    for (unsigned N = 1; N <= 6; ++N)
        for (unsigned n = 0; n <= 10; ++n) {
            CycloNum s(N);
            for (unsigned a = 1; a < N; ++a)
                s += omega_value(N, a, n);
            c.expect(s == CycloNum(N, Rational(ipow(N, n + 1) - 1) * B(n + 1) / Rational(n + 1)),
                     "color sum N=" + std::to_string(N) + " n=" + std::to_string(n));
        }
    c.finish();
}

void criterion_6()
{
    Criterion c{6, "regularization matrices M(N,m)", 120.0};
    RegMatrix r = reg_matrix(2, 1);
    c.expect(r.entries == RationalMatrix{{3, 1, 0, 0}, {0, 2, 1, 1}, {1, 1, 2, 0}, {0, 0, 1, 3}}, "M(2,1) entries");
    c.expect(determinant(r.entries) == 32, "det M(2,1) = 32");
    RationalMatrix inv = inverse(r.entries);
    for (auto& row : inv)
        for (auto& x : row)
            x *= 16;
    c.expect(inv == RationalMatrix{{5, -3, 1, 1}, {1, 9, -3, -3}, {-3, -3, 9, 1}, {1, 1, -3, 5}}, "16 M(2,1)^-1");
    for (unsigned N = 1; N <= 4; ++N)
        for (unsigned m = 0; m <= 3; ++m) {
            Rational d = determinant(reg_matrix(N, m).entries);
            Integer f = reg_matrix_det_formula(N, m);
            c.expect(d == Rational(f), "det M(" + std::to_string(N) + "," + std::to_string(m) + ") = " + to_string(d) +
                                           " vs formula " + to_string(f));
        }
    c.finish();
}

void criterion_7()
{
    Criterion c{7, "derivation: round trip and printed D-expansions", 0};
    const unsigned M = 25;
    std::size_t count = 0;
    for (unsigned N = 1; N <= 3; ++N)
        for (const auto& w : words(N, 4, 3)) {
            bool ok = eval_to_qseries(derive_formal(MdfIndex(w, N)), M) == q_derive(eval_word(w, N, M));
            c.expect(ok, "round trip " + word_to_string(w) + "@" + std::to_string(N));
            ++count;
        }
    c.note("round trip on " + std::to_string(count) + " indices");

    auto check = [&](const std::string& name, const FormalSum& printed, const FormalSum& actual) {
        bool ok = printed == actual;
        c.expect(ok, name + " as printed");
        if (!ok) {
            FormalSum diff = printed;
            diff -= actual;
            c.note("    printed - actual = " + diff.to_string());
        }
        return ok;
    };
    for (unsigned N = 2; N <= 4; ++N) {
        std::string at = " at N=" + std::to_string(N);
        CycloNum w0 = omega_value(N, 1, 0), w1 = omega_value(N, 1, 1), w2 = omega_value(N, 1, 2);
        FormalSum d11 = derive_formal(MdfIndex({1}, {1}, N));
        FormalSum l1 = stuffle({{2, 0}}, {{1, 1}}, N);
        l1 += Lin(N).add(1, {{2, 1}}).add(-1, {{2, 1}, {1, 1}}).add(-1, {{2, 1}, {1, 0}}).add(-1, {{1, 1}, {2, 0}}).f;
        check("D[1;1] first line" + at, l1, d11);
        FormalSum l2 = Lin(N)
                           .add(1, {{2, 0}, {1, 1}})
                           .add(-1, {{2, 1}, {1, 1}})
                           .add(-1, {{2, 1}, {1, 0}})
                           .add(1, {{2, 1}})
                           .add(-w0, {{2, 0}})
                           .add(w1, {{1, 0}})
                           .add(-w1, {{1, 1}})
                           .f;
        if (!check("D[1;1] second line" + at, l2, d11)) {
            FormalSum fixed = l2;
            fixed.add({{2, 0}}, w0 + omega_value(N, -1, 0));
            c.note(std::string("    with omega_{0;-1} in place of -omega_{0;1} the line ") +
                   (fixed == d11 ? "holds" : "still fails"));
        }
        FormalSum d21 = derive_formal(MdfIndex({2}, {1}, N));
        FormalSum m1 = stuffle({{2, 0}}, {{2, 1}}, N);
        m1 += Lin(N)
                  .add(2, {{3, 1}})
                  .add(-1, {{2, 1}, {2, 0}})
                  .add(-2, {{3, 1}, {1, 0}})
                  .add(-1, {{2, 1}, {2, 1}})
                  .add(-2, {{3, 1}, {1, 1}})
                  .f;
        check("D[2;1] first line" + at, m1, d21);
        FormalSum m2 = Lin(N)
                           .add(1, {{2, 0}, {2, 1}})
                           .add(-1, {{2, 1}, {2, 1}})
                           .add(-2, {{3, 1}, {1, 0}})
                           .add(-2, {{3, 1}, {1, 1}})
                           .add(2, {{3, 1}})
                           .add(-w1, {{2, 0}})
                           .add(-w1, {{2, 1}})
                           .add(w2, {{1, 0}})
                           .add(-w2, {{1, 1}})
                           .f;
        check("D[2;1] second line" + at, m2, d21);
    }
    const Rational q(1, 4);
    FormalSum o1 = Lin(2)
                       .add(1, {{2, 0}, {1, 1}})
                       .add(-1, {{2, 1}, {1, 0}})
                       .add(-1, {{2, 1}, {1, 1}})
                       .add(1, {{2, 1}})
                       .add(q, {{1, 0}})
                       .add(-q, {{1, 1}})
                       .add(-2 * q, {{2, 0}})
                       .f;
    check("D[1bar] at N=2", o1, derive_formal(MdfIndex({1}, {1}, 2)));
    FormalSum o2 = Lin(2)
                       .add(2, {{3, 1}})
                       .add(-2, {{3, 1}, {1, 1}})
                       .add(-1, {{2, 1}, {2, 1}})
                       .add(-2, {{3, 1}, {1, 0}})
                       .add(1, {{2, 0}, {2, 1}})
                       .add(-q, {{2, 0}})
                       .add(-q, {{2, 1}})
                       .f;
    check("D[2bar] at N=2", o2, derive_formal(MdfIndex({2}, {1}, 2)));
    c.finish();
}

using Terms = std::map<MzvSymbol, Rational>;

MzvSymbol Z(std::vector<std::pair<unsigned, unsigned>> letters, unsigned N)
{
    Word w;
    for (auto [s, a] : letters)
        w.push_back({s, a});
    return MzvSymbol::zeta(w, N);
}

void criterion_8()
{
    Criterion c{8, "relation mining at level 2, weights 3 and 4", 300.0};
    const unsigned long cutoff = 100000;
    auto r3 = emit_relations(2, 3, 3, cutoff);
    auto r4 = emit_relations(2, 4, 4, cutoff);
    for (const auto* rs : {&r3, &r4})
        for (const auto& r : *rs)
            c.expect(r.certified && r.residual < 1e-3L, "certify " + r.to_string() + " (residual " + num(r.residual) + ")");
    c.note(std::to_string(r3.size()) + " relations at weight 3, " + std::to_string(r4.size()) + " at weight 4");
    auto target = [&](const std::string& name, const std::vector<RelationRecord>& rs, const Terms& t) {
        c.expect(relation_in_span(rs, t), name + " is produced");
        RelationRecord rec;
        rec.level = 2;
        rec.terms = t;
        Verification v = verify_relation(rec, 1e-3L, cutoff);
        c.expect(v.pass, name + " residual " + num(v.residual));
        c.note(name + ": residual " + num(v.residual));
    };
    target("zeta(2,1bar) = zeta(2bar,1) + zeta(2bar,1bar)", r3,
           Terms{{Z({{2, 0}, {1, 1}}, 2), 1}, {Z({{2, 1}, {1, 0}}, 2), -1}, {Z({{2, 1}, {1, 1}}, 2), -1}});
    target("zeta(2,2bar) = 2 zeta(3bar,1bar) + zeta(2bar,2bar) + 2 zeta(3bar,1)", r4,
           Terms{{Z({{2, 0}, {2, 1}}, 2), 1},
                 {Z({{3, 1}, {1, 1}}, 2), -2},
                 {Z({{2, 1}, {2, 1}}, 2), -1},
                 {Z({{3, 1}, {1, 0}}, 2), -2}});
    target("2 zeta(2,1,1;0,1,1) - 2 zeta(2,1,1;1,0,1) = zeta(2,2;1,1) - zeta(2,2;0,1)", r4,
           Terms{{Z({{2, 0}, {1, 1}, {1, 1}}, 2), 2},
                 {Z({{2, 1}, {1, 0}, {1, 1}}, 2), -2},
                 {Z({{2, 1}, {2, 1}}, 2), -1},
                 {Z({{2, 0}, {2, 1}}, 2), 1}});
    c.finish();
}

void criterion_9()
{
    Criterion c{9, "alternating Euler sum relations", 0};
    const unsigned long K = 1000000;
    // zeta with bars: the level-2 multiple polylog with a_j = 1 on barred entries
    auto L = [&](std::vector<unsigned> s, std::vector<unsigned> a) { return mpv_numeric(s, a, 2, K).value.real(); };
    long double r1 = 3 * L({2, 1}, {1, 0}) - (L({2, 1}, {0, 0}) + L({2, 1}, {0, 1}) + L({2, 1}, {1, 1}));
    long double r2 = 2 * L({3, 1}, {0, 0}) - (2 * L({3, 1}, {1, 0}) + L({2, 2}, {1, 0}) - L({2, 2}, {1, 1}));
    c.expect(std::fabs(r1) < 1e-4L, "3 zeta(2bar,1) = zeta(2,1) + zeta(2,1bar) + zeta(2bar,1bar)");
    c.expect(std::fabs(r2) < 1e-4L, "2 zeta(3,1) = 2 zeta(3bar,1) + zeta(2bar,2) - zeta(2bar,2bar)");
    c.note("residuals " + num(std::fabs(r1)) + ", " + num(std::fabs(r2)));
    c.finish();
}

void criterion_10()
{
    Criterion c{10, "regularized values at level 2", 0};
    const unsigned N = 2;
    auto G = [&](std::vector<std::pair<unsigned, unsigned>> letters) {
        Word w;
        for (auto [s, a] : letters)
            w.push_back({s, a});
        return MzvSymbol::gamma(1, w, N);
    };
    auto P = [&](const MzvSymbol& x, Rational k) { return TPolynomial::symbol(x, CycloNum(N, k)); };
    TPolynomial T = TPolynomial::constant(N, CycloNum(N, 1)).times_T();
    TPolynomial half_T_G = T * CycloNum(N, Rational(1, 2)) + P(G({}), Rational(1, 2));
    c.expect(zstar_regularized({1}, {0}, N) == half_T_G, "zeta*(1;0) = (T + G1)/2");
    NumericValue g1 = gamma_numeric(1, {}, {}, N, 1000000);
    c.expect(std::fabs(g1.value + std::log(2.0L)) < 1e-8L, "G1 = -ln 2 within 1e-8");
    c.note("G1 + ln 2 = " + num(g1.value + std::log(2.0L)));

    // 16 zeta*(1,1;a,b) from the final display
    TPolynomial T2 = T * T, GT = P(G({}), 1) * T;
    auto row = [&](long t2, long gt, long g10, long g11, long z0, long z1) {
        return T2 * CycloNum(N, t2) + GT * CycloNum(N, gt) + P(G({{1, 0}}), g10) + P(G({{1, 1}}), g11) +
               P(Z({{2, 0}}, N), z0) + P(Z({{2, 1}}, N), z1);
    };
    std::vector<std::pair<std::pair<unsigned, unsigned>, TPolynomial>> rows{
        {{0, 0}, row(2, 4, 4, -4, -6, 2)},
        {{0, 1}, row(2, -4, 4, 12, 2, -6)},
        {{1, 0}, row(2, 4, -12, -4, -6, 2)},
        {{1, 1}, row(2, -4, 4, -4, 2, -6)},
    };
    for (const auto& [ab, expect16] : rows) {
        TPolynomial got = zstar_regularized({1, 1}, {ab.first, ab.second}, N) * CycloNum(N, 16);
        c.expect(got == expect16, "16 zeta*(1,1;" + std::to_string(ab.first) + "," + std::to_string(ab.second) +
                                      ") = " + expect16.to_string(true) + ", got " + got.to_string(true));
    }
    long double g10 = gamma_numeric(1, {1}, {0}, N, 1000000).value;
    long double g11 = gamma_numeric(1, {1}, {1}, N, 1000000).value;
    long double pi = std::acos(-1.0L);
    long double rel = g1.value * g1.value + 2 * g11 - 2 * g10 - pi * pi / 6;
    c.expect(std::fabs(rel) < 1e-6L, "G1^2 + 2 G1(1;1) - 2 G1(1;0) = zeta(2)");
    c.note("G1^2 + 2 G1(1;1) - 2 G1(1;0) - zeta(2) = " + num(rel));
    c.finish();
}

void criterion_11()
{
    Criterion c{11, "q -> 1 limits reproduce zeta values", 0};
    struct Case {
        std::string name;
        MdfIndex idx;
    };
    for (const auto& k : {Case{"zeta(2)", MdfIndex({2}, {0}, 1)}, Case{"zeta(3)", MdfIndex({3}, {0}, 1)},
                          Case{"zeta_2(2;1)", MdfIndex({2}, {1}, 2)}}) {
        LimitCheck r = zk_limit_check(k.idx);
        c.expect(std::fabs(r.extrapolated - r.reference) < 1e-2L, k.name);
        c.note(k.name + ": extrapolated " + num(r.extrapolated) + ", difference " + num(r.difference));
    }
    c.finish();
}

void criterion_12()
{
    Criterion c{12, "exact Vandermonde: det(V)^2 = +N^N for N = 2 mod 4, -N^N otherwise", 0};
    for (unsigned N = 2; N <= 6; ++N) {
        std::vector<std::vector<CycloNum>> a(N, std::vector<CycloNum>(N));
        for (unsigned i = 1; i <= N; ++i)
            for (unsigned g = 1; g <= N; ++g)
                a[i - 1][g - 1] = CycloNum::eta_power(N, -static_cast<long>(i * g));  // h = 1/eta
        CycloNum det(N, 1);
        for (unsigned col = 0; col < N; ++col) {
            unsigned p = col;
            while (a[p][col].is_zero())
                ++p;
            if (p != col) {
                std::swap(a[p], a[col]);
                det = -det;
            }
            det *= a[col][col];
            CycloNum inv = a[col][col].inverse();
            for (unsigned r = col + 1; r < N; ++r) {
                CycloNum f = a[r][col] * inv;
                for (unsigned k = col; k < N; ++k)
                    a[r][k] -= f * a[col][k];
            }
        }
        CycloNum sq = det * det;
        Rational nn(ipow(N, N));
        Rational printed = N % 4 == 2 ? nn : Rational(-nn);
        bool ok = sq == CycloNum(N, printed);
        c.expect(ok, "N=" + std::to_string(N) + ": det^2 = " + sq.to_string() + ", rule gives " + to_string(printed));
        if (!ok) {
            unsigned e = N * (N - 1) / 2 + N - 1;
            c.note("    (-1)^{C(N,2)} det^2 = (-1)^{N-1} N^N gives " + to_string(e % 2 ? Rational(-nn) : nn) +
                   (sq == CycloNum(N, e % 2 ? Rational(-nn) : nn) ? ", which holds" : ", which also fails"));
        }
    }
    c.finish();
}

void criterion_13()
{
    Criterion c{13, "averaging identity zeta_N = N^-d sum_a eta^{-a.alpha} L_N(s; a)", 0};
    const unsigned long K = 100000;
    long double worst = 0;
    for (unsigned N = 2; N <= 4; ++N) {
        std::map<std::vector<unsigned>, std::complex<long double>> mpv;
        auto L = [&](const std::vector<unsigned>& s, const std::vector<unsigned>& a) {
            std::vector<unsigned> key = s;
            key.insert(key.end(), a.begin(), a.end());
            auto it = mpv.find(key);
            if (it == mpv.end())
                it = mpv.emplace(key, mpv_numeric(s, a, N, K).value).first;
            return it->second;
        };
        auto root = [&](long k) { return cyc_embed(CycloNum::eta_power(N, k)); };
        for (unsigned al = 0; al < N; ++al) {
            std::complex<long double> sum = 0;
            for (unsigned a = 1; a <= N; ++a)
                sum += root(-static_cast<long>(a * al)) * L({2}, {a % N});
            long double res = std::abs(sum / static_cast<long double>(N) - zeta_numeric({2}, {al}, N, K).value);
            worst = std::max(worst, res);
            c.expect(res < 1e-5L, "(2;" + std::to_string(al) + ") at N=" + std::to_string(N));
        }
        for (unsigned a1 = 0; a1 < N; ++a1)
            for (unsigned a2 = 0; a2 < N; ++a2) {
                std::complex<long double> sum = 0;
                for (unsigned x = 1; x <= N; ++x)
                    for (unsigned y = 1; y <= N; ++y)
                        sum += root(-static_cast<long>(x * a1 + y * a2)) * L({2, 1}, {x % N, y % N});
                long double res = std::abs(sum / static_cast<long double>(N * N) -
                                           zeta_numeric({2, 1}, {a1, a2}, N, K).value);
                worst = std::max(worst, res);
                c.expect(res < 1e-5L, "(2,1;" + std::to_string(a1) + "," + std::to_string(a2) + ") at N=" +
                                          std::to_string(N));
            }
    }
    c.note("largest residual " + num(worst));
    c.finish();
}

} // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    criterion_13();
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : std::string("all criteria passed")) << '\n';
    return failures ? 1 : 0;
}
