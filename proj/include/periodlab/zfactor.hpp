#pragma once

#include "periodlab/poly.hpp"

#include <gmpxx.h>

#include <vector>

namespace periodlab {

// Irreducible factorization of a monic squarefree polynomial over Q,
// by small-prime modular factorization, Hensel lifting and subset
// recombination. Factors are returned monic, sorted, with product
// equal to the input.
//
// Throws if the input is not monic, not squarefree, or exceeds the
// degree cap.
std::vector<PolyQ> factor_monic_squarefree(const PolyQ& f, int degree_cap = 64);

// True iff f is monic, squarefree and irreducible over Q.
bool is_irreducible_over_q(const PolyQ& f, int degree_cap = 64);

} // namespace periodlab
