#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "z2top/chain.hpp"
#include "z2top/simplex.hpp"

namespace z2top {

/// A finite simplicial complex together with a filtration: a total order on
/// its simplices in which every face precedes every simplex containing it
/// (prefix-closure). The empty complex is legal.
class FilteredComplex {
 public:
  FilteredComplex() = default;

  /// Closure of a set of (possibly overlapping) maximal simplices, ordered
  /// by dimension then lexicographically.
  static FilteredComplex close(const std::vector<Simplex>& maximal);

  /// Adopts a caller-supplied full order. Rejects duplicates and any order
  /// violating prefix-closure, naming the first offending simplex.
  static FilteredComplex from_filtration(std::vector<Simplex> order);

  std::size_t size() const { return simplices_.size(); }
  bool empty() const { return simplices_.empty(); }
  /// Dimension of the complex; -1 when empty.
  int dim() const { return dim_; }

  const std::vector<Simplex>& simplices() const { return simplices_; }
  const Simplex& simplex(std::size_t i) const { return simplices_[i]; }

  bool contains(const Simplex& s) const;
  /// Filtration position of `s`; throws input_error if absent.
  std::size_t index_of(const Simplex& s) const;
  std::optional<std::size_t> find(const Simplex& s) const;

  /// All q-simplices in filtration order.
  std::vector<Simplex> simplices_of_dim(int q) const;
  std::size_t count_of_dim(int q) const;

  /// Coboundary of a q-cochain: the (q+1)-simplices of this complex having
  /// an odd number of facets in the cochain's support.
  Chain coboundary(const Chain& cochain) const;

  /// Star: every simplex of the complex having some member of B as a face.
  std::set<Simplex> star(const std::set<Simplex>& b) const;
  /// Closure: every face of every member of B.
  std::set<Simplex> closure(const std::set<Simplex>& b) const;
  /// Link: closure(star(B)) minus star(closure(B)).
  std::set<Simplex> link(const std::set<Simplex>& b) const;

  friend bool operator==(const FilteredComplex&, const FilteredComplex&) = default;

 private:
  void check_member(const std::set<Simplex>& b) const;

  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
  int dim_ = -1;
};

/// A vertex relabeling between complexes; vertices without an explicit entry
/// map to themselves. Construction checks the simplicial condition: the image
/// vertex set of every source simplex spans a simplex of the target.
class VertexMap {
 public:
  VertexMap(std::map<int, int> mapping, FilteredComplex source,
            FilteredComplex target);

  int operator()(int v) const;
  const FilteredComplex& source() const { return source_; }
  const FilteredComplex& target() const { return target_; }

  /// Induced chain map on one simplex: the image simplex when the vertex
  /// images are distinct, the zero chain otherwise.
  Chain apply(const Simplex& s) const;
  /// GF(2)-linear extension to chains.
  Chain apply(const Chain& a) const;

 private:
  std::map<int, int> mapping_;
  FilteredComplex source_;
  FilteredComplex target_;
};

}  // namespace z2top
