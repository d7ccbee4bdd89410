#pragma once

#include "qmz/qseries.hpp"
#include "qmz/word.hpp"

namespace qmz {

// z_{a;alpha} <> z_{b;beta}
FormalSum diamond(const Letter& a, const Letter& b, unsigned level);

FormalSum stuffle(const Word& w, const Word& v, unsigned level);
// Bilinear; grading tags add.
FormalSum stuffle(const FormalSum& w, const FormalSum& v);

// Bracket map to q-series. Throws if t_N or T tags are present.
QSeries eval_to_qseries(const FormalSum& x, unsigned order);
QSeries eval_word(const Word& w, unsigned level, unsigned order);

// Right side of the explicit formula for D[s;alpha], products expanded.
FormalSum derive_formal(const MdfIndex& idx);
// derive_formal applied termwise.
FormalSum derive_formal(const FormalSum& x);

} // namespace qmz
