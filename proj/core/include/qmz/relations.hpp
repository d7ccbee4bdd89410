#pragma once

#include "qmz/mzv.hpp"

#include <map>
#include <string>
#include <vector>

namespace qmz {

struct RelationRecord {
    unsigned level = 1;
    unsigned weight = 0;
    std::map<MzvSymbol, Rational> terms;  // sum coeff * symbol = 0
    std::string provenance;
    long double residual = 0;
    long double bound = 0;  // accumulated numeric error bound
    bool certified = false;

    std::string to_string(bool bars = false) const;
};

struct Verification {
    long double residual = 0;
    long double bound = 0;
    bool pass = false;
};

// |sum coeff * value|, passing iff residual < tol. `bound` is the accumulated tail bound, reported only.
Verification verify_relation(const RelationRecord& r, long double tol, unsigned long cutoff = 100000);

// Z_w images of D u (|u| = w-2) and x * D u (|x| + |u| = w-2) with depth(x) + depth(u) <= depth_max,
// one relation per T-degree, reduced to an independent set and certified.
std::vector<RelationRecord> emit_relations(unsigned level, unsigned w, unsigned depth_max,
                                           unsigned long cutoff = 100000, long double tol = 1e-3L);

// Whether `target` lies in the rational span of the relations.
bool relation_in_span(const std::vector<RelationRecord>& rels, const std::map<MzvSymbol, Rational>& target);

} // namespace qmz
