#pragma once

#include <map>
#include <utility>
#include <vector>

#include "z2top/at_model.hpp"
#include "z2top/complex.hpp"

namespace z2top {

/// An explicit chain contraction (f, g, phi) from the chain complex of
/// `source` onto a smaller target. The target is a cell basis: a genuine
/// subquotient simplicial complex for reductions, or a homology generator
/// basis with zero differential when derived from an ATModel.
///
/// Maps are stored sparsely; a missing entry means zero. Every constructor
/// in this module verifies the result before returning it.
struct Contraction {
  FilteredComplex source;
  std::vector<Simplex> target_cells;
  /// True when the target carries the zero differential (homology basis);
  /// false when target_cells form a simplicial complex with the usual
  /// boundary.
  bool target_zero_differential = false;

  std::map<Simplex, Chain> f;    // source simplex -> chain on target cells
  std::map<Simplex, Chain> g;    // target cell -> chain on source
  std::map<Simplex, Chain> phi;  // source simplex -> source chain, dim + 1

  Chain apply_f(const Simplex& s) const;
  Chain apply_f(const Chain& a) const;
  Chain apply_g(const Simplex& s) const;
  Chain apply_g(const Chain& a) const;
  Chain apply_phi(const Simplex& s) const;
  Chain apply_phi(const Chain& a) const;

  /// Boundary of a target cell under the target differential.
  Chain target_boundary(const Simplex& s) const;

  /// Rebuilds the target as a FilteredComplex (target cells in their stored
  /// order). Only valid when target_zero_differential is false.
  FilteredComplex target_complex() const;

  static Contraction identity(const FilteredComplex& k);
  /// Views an ATModel as a contraction onto its generator basis.
  static Contraction from_model(const ATModel& model);
};

/// The seven contraction identities, generalized to two complexes:
/// f and g are chain maps, fg = 1 on the target,
/// 1 + gf = d.phi + phi.d on the source, and f.phi = 0, phi.g = 0,
/// phi.phi = 0. Violations come back as data.
std::vector<ContractionViolation> verify(const Contraction& c);

/// Repeatedly removes a (maximal simplex, free facet) pair, composing the
/// per-step contractions, until no free face remains. The pair choice is
/// deterministic: the first maximal simplex in filtration order owning a
/// free facet, with its first free facet. Returns the thinned complex and a
/// verified contraction onto it.
std::pair<FilteredComplex, Contraction> collapse_thinning(
    const FilteredComplex& k);

/// The algebraic edge-contraction guard: link(a) ∩ link(b) = link(ab).
bool edge_contractible(const FilteredComplex& k, const Simplex& edge);

/// Contracts edge <a,b> to the fresh vertex label c, building f from the
/// vertex map and g, phi from the case analysis over links (the empty
/// simplex counts as a member of every link). The result is verified; a
/// failure aborts with the violating simplex.
std::pair<FilteredComplex, Contraction> edge_contract(const FilteredComplex& k,
                                                      const Simplex& edge,
                                                      int new_label);

/// The standard contraction of a full simplex onto its first vertex:
/// f collapses vertices to v0, phi adjoins v0 to simplices missing it.
Contraction cone_contraction(const Simplex& sigma);

/// Composite contraction: f = f2.f1, g = g1.g2, phi = phi1 + g1.phi2.f1.
/// Verified before returning.
Contraction compose(const Contraction& first, const Contraction& second);

}  // namespace z2top
