#pragma once

#include <vector>

#include "z2top/cohomology.hpp"

namespace z2top {

/// The explicit cochain mapping E3 applied to the fourth power of a
/// 2-cochain: a 5-cochain whose value on an ascending 5-simplex
/// <v0,...,v5> is the mod 2 sum of five products of four evaluations of c
/// on fixed triangular faces. It enters the relation
/// delta(E3 c^4) = (c cup c) cup_2 (c cup c) + (c cup_1 c) cup (c cup_1 c)
/// on cocycles of complexes without 6-simplices.
Chain e3(const Chain& c, const FilteredComplex& k);

/// Outcome of evaluating the Adem secondary operation Psi_2 on a class in
/// ker(Sq^2) of H^2: the witness cocycle w, its class in H^5, the image
/// basis of Sq^2 : H^3 -> H^5, and the coset representative of [w] modulo
/// that image. The operation's value is zero exactly when the coset
/// representative is zero.
struct Psi2Result {
  CohomologyClass input;                     // dim 2
  Chain w_cochain;                           // dim 5, a cocycle
  CohomologyClass w_class;                   // dim 5
  std::vector<CohomologyClass> image_basis;  // im Sq^2 H^3, dim 5
  GF2Vector coset_rep;
  bool is_zero = true;
};

/// Builds the witness cocycle for Psi_2: with c = g*(a*),
///   delta_b = c cup c, b = phi*(delta_b), delta_eta = c cup_1 c,
///   w = E3(c) + b cup_1 b + b cup_2 delta_b + c cup delta_eta.
/// Requires a* in ker(Sq^2 : H^2 -> H^4); checks delta(b) = c cup c and
/// that w is a cocycle, throwing math_error with diagnostics otherwise.
/// Only the q = 2 operation is available: classes of any other dimension
/// are rejected (no explicit E_{3q-3} formula exists for q > 2 here).
Chain psi2_cocycle(const ATModel& model, const CohomologyClass& cls);

/// Full evaluation: the witness class reduced modulo im(Sq^2 : H^3 -> H^5).
Psi2Result psi2(const ATModel& model, const CohomologyClass& cls);

}  // namespace z2top
