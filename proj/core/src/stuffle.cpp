#include "qmz/stuffle.hpp"

#include "qmz/coeffs.hpp"
#include "qmz/error.hpp"

#include <map>
#include <mutex>
#include <tuple>

namespace qmz {

FormalSum diamond(const Letter& a, const Letter& b, unsigned level)
{
    if (a.a >= level || b.a >= level)
        throw DomainError("letter color out of range for level");
    FormalSum r(level);
    long d = long(a.a) - long(b.a);
    for (unsigned j = 1; j <= a.s; ++j)
        r.add({{j, a.a}}, lambda(level, j, a.s, b.s, d));
    for (unsigned j = 1; j <= b.s; ++j)
        r.add({{j, b.a}}, lambda(level, j, b.s, a.s, -d));
    if (a.a == b.a)
        r.add({{a.s + b.s, a.a}}, CycloNum(level, 1));
    return r;
}

namespace {

std::mutex stuffle_mutex;
std::map<std::tuple<unsigned, Word, Word>, LinComb> stuffle_cache;

// Prepends letter x to every word of src, scaled by c, into dst.
void prepend(FormalSum& dst, const Letter& x, const LinComb& src, const CycloNum& c)
{
    for (const auto& [w, k] : src) {
        Word nw;
        nw.reserve(w.size() + 1);
        nw.push_back(x);
        nw.insert(nw.end(), w.begin(), w.end());
        dst.add(nw, k * c);
    }
}

LinComb stuffle_words(const Word& w, const Word& v, unsigned level)
{
    if (w.empty())
        return {{v, CycloNum(level, 1)}};
    if (v.empty())
        return {{w, CycloNum(level, 1)}};
    // canonical order for the cache, the product being commutative
    if (v < w)
        return stuffle_words(v, w, level);
    auto key = std::make_tuple(level, w, v);
    {
        std::lock_guard<std::mutex> lock(stuffle_mutex);
        auto it = stuffle_cache.find(key);
        if (it != stuffle_cache.end())
            return it->second;
    }
    Word wt(w.begin() + 1, w.end()), vt(v.begin() + 1, v.end());
    CycloNum one(level, 1);
    FormalSum r(level);
    prepend(r, w[0], stuffle_words(wt, v, level), one);
    prepend(r, v[0], stuffle_words(w, vt, level), one);
    LinComb tail = stuffle_words(wt, vt, level);
    for (const auto& [x, c] : diamond(w[0], v[0], level).terms)
        prepend(r, x[0], tail, c);
    std::lock_guard<std::mutex> lock(stuffle_mutex);
    stuffle_cache.emplace(key, r.terms);
    return r.terms;
}

} // namespace

FormalSum stuffle(const Word& w, const Word& v, unsigned level)
{
    FormalSum r(level);
    for (const auto& [x, c] : stuffle_words(w, v, level))
        r.add(x, c);
    return r;
}

FormalSum stuffle(const FormalSum& w, const FormalSum& v)
{
    if (w.level != v.level)
        throw DomainError("stuffle of formal sums at different levels");
    FormalSum r(w.level);
    r.tpow = w.tpow + v.tpow;
    r.Tpow = w.Tpow + v.Tpow;
    for (const auto& [a, ca] : w.terms)
        for (const auto& [b, cb] : v.terms) {
            CycloNum c = ca * cb;
            for (const auto& [x, k] : stuffle_words(a, b, w.level))
                r.add(x, k * c);
        }
    return r;
}

namespace {
std::mutex eval_mutex;
std::map<std::tuple<unsigned, unsigned, Word>, QSeries> eval_cache;
} // namespace

QSeries eval_word(const Word& w, unsigned level, unsigned order)
{
    auto key = std::make_tuple(level, order, w);
    {
        std::lock_guard<std::mutex> lock(eval_mutex);
        auto it = eval_cache.find(key);
        if (it != eval_cache.end())
            return it->second;
    }
    QSeries s = mdf_polylog(MdfIndex(w, level), order);
    std::lock_guard<std::mutex> lock(eval_mutex);
    eval_cache.emplace(key, s);
    return s;
}

QSeries eval_to_qseries(const FormalSum& x, unsigned order)
{
    if (x.tpow || x.Tpow)
        throw DomainError("eval_to_qseries: input carries t_N or T factors");
    QSeries r(x.level, order);
    for (const auto& [w, c] : x.terms)
        r += eval_word(w, x.level, order) * c;
    return r;
}

} // namespace qmz
