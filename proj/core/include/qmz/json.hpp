#pragma once

#include "qmz/mzv.hpp"
#include "qmz/qseries.hpp"
#include "qmz/regularize.hpp"
#include "qmz/relations.hpp"
#include "qmz/word.hpp"

#include <nlohmann/json.hpp>

namespace qmz {

using json = nlohmann::ordered_json;

// CycloNum: array of power-basis coordinates as "p/q" strings.
json to_json(const CycloNum& c);
CycloNum cyclo_from_json(const json& j, unsigned level);

json to_json(const Word& w);
Word word_from_json(const json& j);

json to_json(const MdfIndex& idx);
json to_json(const QSeries& f);
QSeries qseries_from_json(const json& j);
json to_json(const FormalSum& f);
FormalSum formal_sum_from_json(const json& j);
json to_json(const QmzPolynomial& p);
json to_json(const MzvSymbol& x);
json to_json(const TPolynomial& p);
json to_json(const RegMatrix& m);
json to_json(const RationalMatrix& m);
json to_json(const RelationRecord& r);
RelationRecord relation_from_json(const json& j);

} // namespace qmz
