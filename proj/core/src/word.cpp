#include "qmz/word.hpp"

#include "qmz/error.hpp"

namespace qmz {

unsigned weight(const Word& w)
{
    unsigned r = 0;
    for (const auto& l : w)
        r += l.s;
    return r;
}

unsigned leading_ones(const Word& w)
{
    unsigned m = 0;
    while (m < w.size() && w[m].s == 1)
        ++m;
    return m;
}

MdfIndex::MdfIndex(std::vector<unsigned> s_, std::vector<unsigned> alpha_, unsigned level_)
    : s(std::move(s_)), alpha(std::move(alpha_)), level(level_)
{
    if (level == 0)
        throw DomainError("level must be >= 1");
    if (s.size() != alpha.size())
        throw DomainError("index arity mismatch");
    for (auto& a : alpha)
        a %= level;
    for (auto x : s)
        if (x == 0)
            throw DomainError("index entries must be >= 1");
}

MdfIndex::MdfIndex(const Word& w, unsigned level_) : level(level_)
{
    for (const auto& l : w) {
        s.push_back(l.s);
        alpha.push_back(l.a % level);
    }
}

unsigned MdfIndex::weight() const
{
    unsigned r = 0;
    for (auto x : s)
        r += x;
    return r;
}

Word MdfIndex::word() const
{
    Word w;
    for (std::size_t i = 0; i < s.size(); ++i)
        w.push_back({s[i], alpha[i] % level});
    return w;
}

std::string word_to_string(const Word& w)
{
    std::string a, b;
    for (std::size_t i = 0; i < w.size(); ++i) {
        a += (i ? "," : "") + std::to_string(w[i].s);
        b += (i ? "," : "") + std::to_string(w[i].a);
    }
    return w.empty() ? "[]" : "[" + a + ";" + b + "]";
}

std::string word_to_bar_string(const Word& w)
{
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        out += (i ? "," : "") + std::to_string(w[i].s);
        if (w[i].a % 2)
            out += "̄";
    }
    return out + "]";
}

FormalSum FormalSum::word(const Word& w, unsigned level, const CycloNum& c)
{
    FormalSum f(level);
    f.add(w, c);
    return f;
}

FormalSum FormalSum::word(const Word& w, unsigned level) { return word(w, level, CycloNum(level, 1)); }

void FormalSum::add(const Word& w, const CycloNum& c)
{
    if (c.level() != level)
        throw DomainError("mixed-level formal sum");
    for (const auto& l : w)
        if (l.a >= level || l.s == 0)
            throw DomainError("invalid letter in word " + word_to_string(w));
    auto it = terms.find(w);
    if (it == terms.end()) {
        if (!c.is_zero())
            terms.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        terms.erase(it);
}

void FormalSum::prune()
{
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second.is_zero() ? terms.erase(it) : std::next(it);
}

FormalSum& FormalSum::operator+=(const FormalSum& o)
{
    if (o.level != level || o.tpow != tpow || o.Tpow != Tpow)
        throw DomainError("adding formal sums with different level or grading tags");
    for (const auto& [w, c] : o.terms)
        add(w, c);
    return *this;
}

FormalSum& FormalSum::operator-=(const FormalSum& o)
{
    if (o.level != level || o.tpow != tpow || o.Tpow != Tpow)
        throw DomainError("subtracting formal sums with different level or grading tags");
    for (const auto& [w, c] : o.terms)
        add(w, -c);
    return *this;
}

FormalSum& FormalSum::operator*=(const CycloNum& c)
{
    for (auto& [w, x] : terms)
        x *= c;
    prune();
    return *this;
}

bool FormalSum::operator==(const FormalSum& o) const
{
    return level == o.level && tpow == o.tpow && Tpow == o.Tpow && terms == o.terms;
}

std::string FormalSum::to_string(bool bars) const
{
    std::string out;
    for (const auto& [w, c] : terms) {
        std::string cs = c.to_string();
        bool simple = c.is_rational();
        std::string ws = bars ? word_to_bar_string(w) : word_to_string(w);
        if (!out.empty())
            out += simple && c.rational_part() < 0 ? " - " : " + ";
        else if (simple && c.rational_part() < 0)
            out += "-";
        if (simple) {
            Rational a = abs(c.rational_part());
            if (a != 1)
                out += qmz::to_string(a) + "*";
        } else
            out += "(" + cs + ")*";
        out += ws;
    }
    if (out.empty())
        out = "0";
    if (tpow)
        out = "t^" + std::to_string(tpow) + "*(" + out + ")";
    if (Tpow)
        out = "T^" + std::to_string(Tpow) + "*(" + out + ")";
    return out;
}

} // namespace qmz
