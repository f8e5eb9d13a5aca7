#pragma once

#include <string>
#include <vector>

#include "z2top/at_model.hpp"
#include "z2top/gf2.hpp"

namespace z2top {

/// A mod 2 cohomology class in generator-dual coordinates: coordinate j
/// refers to the dual of the model's j-th dim-q generator.
struct CohomologyClass {
  int dim = 0;
  GF2Vector coords;

  bool zero() const { return !coords.any(); }
  friend bool operator==(const CohomologyClass&, const CohomologyClass&) = default;
};

/// The zero class of H^q.
CohomologyClass zero_class(const ATModel& model, int q);
/// The dual of one generator.
CohomologyClass dual_of(const ATModel& model, const Simplex& generator);
/// Sum of generator duals.
CohomologyClass class_of_duals(const ATModel& model,
                               const std::vector<Simplex>& generators);
CohomologyClass operator+(CohomologyClass a, const CohomologyClass& b);

/// Names a class as semicolon-separated generator vertex lists,
/// e.g. "1,2,3;1,5,6"; the zero class prints as "0".
std::string class_name(const ATModel& model, const CohomologyClass& cls);
/// Parses the naming format above ("" and "0" mean the zero class of dim q).
CohomologyClass parse_class(const ATModel& model, const std::string& text,
                            int q);

/// Cochain lift of a class: g*(a*) = a* . f, the cochain whose value on a
/// simplex is a*(f(sigma)). Always a cocycle.
Chain g_star(const ATModel& model, const CohomologyClass& cls);

/// Class of a cocycle: (f*(c))(gamma) = c(g(gamma)). Checks that c is a
/// cocycle (throws math_error otherwise); coboundaries map to zero.
CohomologyClass f_star(const ATModel& model, const Chain& cocycle);

/// Dual homotopy: (phi*(c))(sigma) = c(phi(sigma)), one dimension lower.
Chain phi_star(const ATModel& model, const Chain& cochain);

/// Cup product at cochain level: (c . c')(v0..v_{i+j}) =
/// c(v0..v_i) * c'(v_i..v_{i+j}) over ascending vertices of each
/// (i+j)-simplex of K.
Chain cup(const Chain& c, const Chain& cp, const FilteredComplex& k);

/// Steenrod's cup-n product of a p-cochain and a q-cochain: a
/// (p+q-n)-cochain summing, over all 0 <= i_0 < ... < i_n <= p+q-n, the
/// products of c on the union of even blocks and c' on the union of odd
/// blocks of the vertex interval decomposition. Terms whose block unions
/// miss the operand degrees vanish. cup_n with n = 0 is the cup product.
Chain cup_n(const Chain& c, const Chain& cp, int n, const FilteredComplex& k);

/// One nonzero structure constant of the cohomology ring:
/// (a* cup b*) evaluated on gamma is 1.
struct RingEntry {
  Simplex a, b, gamma;
  friend bool operator==(const RingEntry&, const RingEntry&) = default;
};

/// All nonzero structure constants (a*, b*, gamma), computed as
/// cup(g*(a*), g*(b*)) evaluated on g(gamma) over all generator pairs and
/// all gamma of the product dimension. Deterministic filtration order.
std::vector<RingEntry> cohomology_ring(const ATModel& model);

/// Steenrod square at cochain level: Sq^i c = c cup_{q-i} c for a q-cochain;
/// the zero (q+i)-cochain when i > q.
Chain sq_cochain(const Chain& c, int i, const FilteredComplex& k);

/// Matrix of Sq^i : H^q -> H^{q+i} over the generator bases
/// (rows = betti(q+i), cols = betti(q)).
GF2Matrix sq_matrix(const ATModel& model, int i, int q);

/// Basis of ker(Sq^i : H^q -> H^{q+i}), classes of dimension q.
std::vector<CohomologyClass> sq_kernel_basis(const ATModel& model, int i, int q);
/// Basis of im(Sq^i : H^q -> H^{q+i}) from the independent matrix columns,
/// classes of dimension q+i.
std::vector<CohomologyClass> sq_image_basis(const ATModel& model, int i, int q);

}  // namespace z2top
