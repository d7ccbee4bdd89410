#pragma once

#include "qmz/cyclo.hpp"

#include <vector>

namespace qmz {

struct OmegaTable {
    unsigned level = 1;
    unsigned alpha = 0;
    std::vector<CycloNum> values;  // values[n] = omega^N_{n;alpha}
};

OmegaTable omega(unsigned level, long alpha, unsigned n_max);
// Single entry through the memoized table.
CycloNum omega_value(unsigned level, long alpha, unsigned n);

// Closed formulas for N = 2 (alpha = 1), N = 3 (alpha = 1, 2), N = 4 (alpha = 1, 2, 3).
CycloNum omega_closed_form(unsigned level, long alpha, unsigned n);

// lambda^{j;N}_{a,b;alpha}
CycloNum lambda(unsigned level, unsigned j, unsigned a, unsigned b, long alpha);

} // namespace qmz
