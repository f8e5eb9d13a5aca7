#pragma once

#include <map>
#include <string>
#include <vector>

#include "z2top/complex.hpp"
#include "z2top/gf2.hpp"

namespace z2top {

/// Which generator to eliminate when a simplex destroys a cycle. The
/// incremental step leaves this free; "largest" (the youngest surviving
/// generator in filtration order) is the default.
enum class TauStrategy { Largest, Smallest };

TauStrategy tau_strategy_from_string(const std::string& name);
std::string to_string(TauStrategy s);

/// One failed contraction identity, reported by the verifiers.
struct ContractionViolation {
  std::string identity;  // "f-chain-map", "homotopy", "fg", "f-phi", "phi-g", "phi-phi", "g-chain-map"
  Simplex at;
  std::string detail;
  std::string to_string() const;
};

/// A chain contraction (f, g, phi) from the chain complex of a filtered
/// simplicial complex to its homology, built incrementally simplex by
/// simplex. Stores the per-simplex images under f and phi (zero images are
/// not stored) and the surviving generator set; g is derived on demand as
/// g(gamma) = gamma + phi(boundary(gamma)).
///
/// Immutable after construction; queries are pure and safe to run in
/// parallel.
class ATModel {
 public:
  /// Runs the incremental construction over the filtration. For each simplex
  /// sigma, u = f(boundary(sigma)) decides: u = 0 means sigma creates a cycle
  /// and becomes a generator (f(sigma) = sigma); otherwise sigma destroys the
  /// cycle of a chosen generator tau in u, and every already-processed x with
  /// tau in f(x) is updated by f(x) += u, phi(x) += sigma + phi(boundary(sigma)).
  explicit ATModel(FilteredComplex complex,
                   TauStrategy strategy = TauStrategy::Largest);

  /// Reassembles a model from dumped parts without validating the
  /// contraction identities (verify_contraction does that).
  static ATModel from_parts(FilteredComplex complex,
                            std::map<Simplex, Chain> f,
                            std::map<Simplex, Chain> phi,
                            std::vector<Simplex> generators);

  const FilteredComplex& complex() const { return complex_; }
  TauStrategy strategy() const { return strategy_; }

  Chain f(const Simplex& s) const;
  Chain f(const Chain& a) const;
  Chain phi(const Simplex& s) const;
  Chain phi(const Chain& a) const;

  /// Surviving generators in filtration order.
  const std::vector<Simplex>& generators() const { return generators_; }
  std::vector<Simplex> generators_of_dim(int q) const;
  bool is_generator(const Simplex& s) const;

  /// Betti number: the count of generators of dimension q.
  int betti(int q) const;

  /// Representative cycle of a generator: gamma + phi(boundary(gamma)).
  Chain g(const Simplex& generator) const;
  /// Linear extension of g to a chain supported on generators.
  Chain g(const Chain& generator_chain) const;

  /// Class of a cycle in generator coordinates: f(a). Zero exactly when the
  /// cycle bounds. Throws math_error (carrying the boundary) on non-cycles.
  Chain homology_class(const Chain& cycle) const;
  /// Coordinates of homology_class over generators_of_dim(cycle.dim()).
  GF2Vector class_coordinates(const Chain& cycle) const;

  /// For a bounding cycle a (f(a) = 0) returns b = phi(a) with
  /// boundary(b) = a, checked before returning. Throws math_error when a is
  /// not a cycle or does not bound.
  Chain boundary_witness(const Chain& cycle) const;

  /// Nonzero f entries in filtration order (zero images omitted).
  std::vector<std::pair<Simplex, Chain>> f_entries() const;
  /// Nonzero phi entries in filtration order.
  std::vector<std::pair<Simplex, Chain>> phi_entries() const;

 private:
  ATModel() = default;
  void build();

  FilteredComplex complex_;
  TauStrategy strategy_ = TauStrategy::Largest;
  std::vector<Chain> f_;    // by filtration index
  std::vector<Chain> phi_;  // by filtration index
  std::vector<Simplex> generators_;
  std::map<Simplex, std::size_t> generator_pos_;  // position within its dimension
};

/// Checks all seven contraction identities of (f, g, phi) against the
/// homology target (zero differential): f(boundary(sigma)) = 0,
/// sigma + g(f(sigma)) = boundary(phi(sigma)) + phi(boundary(sigma)),
/// f(g(gamma)) = gamma, f(phi(sigma)) = 0, phi(g(gamma)) = 0,
/// phi(phi(sigma)) = 0, boundary(g(gamma)) = 0.
/// Violations are returned as data, never thrown.
std::vector<ContractionViolation> verify_contraction(const ATModel& model);

/// Matrices of the homomorphism induced on homology by a vertex map, one per
/// dimension 0..source.complex().dim(). Column j of the q-matrix expresses
/// f_target(vm(g_source(gamma_j))) over the target's dim-q generators.
std::vector<GF2Matrix> induced_homology_map(const VertexMap& vm,
                                            const ATModel& source,
                                            const ATModel& target);

}  // namespace z2top
