#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "z2top/simplex.hpp"

namespace z2top {

/// A GF(2) formal sum of same-dimension simplices, stored as its support set.
/// Addition is symmetric difference; the zero chain has empty support.
///
/// The same carrier serves as a cochain: a cochain evaluates on a chain as
/// the parity of the support intersection (see `evaluate`). A zero chain is
/// dimension-polymorphic: adding it to anything is a no-op, and all empty
/// chains compare equal regardless of their nominal dimension.
class Chain {
 public:
  explicit Chain(int dim = 0) : dim_(dim) {}
  Chain(int dim, std::vector<Simplex> support);

  static Chain single(Simplex s);

  int dim() const { return dim_; }
  bool zero() const { return support_.empty(); }
  std::size_t size() const { return support_.size(); }
  /// Sorted, duplicate-free member list.
  const std::vector<Simplex>& support() const { return support_; }

  bool contains(const Simplex& s) const;

  /// GF(2) sum; toggles membership of every member of `rhs`.
  Chain& operator+=(const Chain& rhs);
  Chain& operator+=(const Simplex& s);
  friend Chain operator+(Chain lhs, const Chain& rhs) {
    lhs += rhs;
    return lhs;
  }

  friend bool operator==(const Chain& a, const Chain& b) {
    if (a.support_.empty() && b.support_.empty()) return true;
    return a.dim_ == b.dim_ && a.support_ == b.support_;
  }

  std::string to_string() const;  // "<1,2> + <2,3>" or "0"

 private:
  int dim_;
  std::vector<Simplex> support_;
};

std::ostream& operator<<(std::ostream& os, const Chain& c);

/// Boundary of one simplex: the GF(2) sum of all its facets
/// (zero for a vertex).
Chain boundary(const Simplex& s);
/// Linear extension of the boundary operator to chains.
Chain boundary(const Chain& a);

/// Evaluation of a cochain on a chain over GF(2): parity of the
/// support intersection. Symmetric in its arguments.
bool evaluate(const Chain& cochain, const Chain& chain);

}  // namespace z2top
