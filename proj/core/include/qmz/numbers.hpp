#pragma once

#include "qmz/rational.hpp"

#include <vector>

namespace qmz {

// B_n with B_1 = -1/2.
Rational bernoulli(unsigned n);

// sech x = sum E_n x^n / n!.
Rational euler_number(unsigned n);

// [A_{k,0}, ..., A_{k,k-1}], coefficients of the k-th Eulerian polynomial.
std::vector<Integer> eulerian_coefficients(unsigned k);

} // namespace qmz
