#pragma once

#include "qmz/cyclo.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qmz {

// Letter z_{s;a}.
struct Letter {
    unsigned s = 1;
    unsigned a = 0;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;

unsigned weight(const Word& w);
unsigned leading_ones(const Word& w);

// Colored index (s; alpha) at level N.
struct MdfIndex {
    std::vector<unsigned> s;
    std::vector<unsigned> alpha;
    unsigned level = 1;

    MdfIndex() = default;
    MdfIndex(std::vector<unsigned> s_, std::vector<unsigned> alpha_, unsigned level_);
    MdfIndex(const Word& w, unsigned level_);

    unsigned depth() const { return static_cast<unsigned>(s.size()); }
    unsigned weight() const;
    Word word() const;
    bool operator==(const MdfIndex&) const = default;
};

// Plain bracket text "[s1,...;a1,...]".
std::string word_to_string(const Word& w);
// N = 2 bar notation: "[2,1̄]" (combining macron over odd-colored entries).
std::string word_to_bar_string(const Word& w);

using LinComb = std::map<Word, CycloNum>;

// Element of Q(eta_N)<A>, optionally tagged with t_N and T exponents.
struct FormalSum {
    unsigned level = 1;
    unsigned tpow = 0;
    unsigned Tpow = 0;
    LinComb terms;

    FormalSum() = default;
    explicit FormalSum(unsigned level_) : level(level_) {}
    static FormalSum word(const Word& w, unsigned level, const CycloNum& c);
    static FormalSum word(const Word& w, unsigned level);
    static FormalSum word(const MdfIndex& idx) { return word(idx.word(), idx.level); }

    void add(const Word& w, const CycloNum& c);
    void prune();
    FormalSum& operator+=(const FormalSum& o);
    FormalSum& operator-=(const FormalSum& o);
    FormalSum& operator*=(const CycloNum& c);
    friend FormalSum operator+(FormalSum a, const FormalSum& b) { return a += b; }
    friend FormalSum operator-(FormalSum a, const FormalSum& b) { return a -= b; }
    friend FormalSum operator*(FormalSum a, const CycloNum& c) { return a *= c; }
    friend FormalSum operator*(const CycloNum& c, FormalSum a) { return a *= c; }
    bool operator==(const FormalSum& o) const;

    std::string to_string(bool bars = false) const;
};

} // namespace qmz
