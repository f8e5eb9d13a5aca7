#pragma once

#include <vector>

#include "z2top/complex.hpp"
#include "z2top/gf2.hpp"

namespace z2top {

/// Matrix of the boundary operator C_q -> C_{q-1} over the filtration-order
/// bases: rows index (q-1)-simplices, columns index q-simplices.
GF2Matrix boundary_matrix(const FilteredComplex& k, int q);

/// Betti numbers straight from boundary-matrix ranks:
/// b_q = |K^(q)| - rank d_q - rank d_{q+1}. Independent of any contraction;
/// this is the cross-check oracle for the incremental construction.
std::vector<int> betti_by_rank(const FilteredComplex& k);

}  // namespace z2top
