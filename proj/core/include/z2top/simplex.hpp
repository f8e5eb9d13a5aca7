#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace z2top {

/// An abstract simplex: a strictly increasing tuple of non-negative integer
/// vertex labels. A q-simplex has q+1 vertices; labels need not be contiguous.
class Simplex {
 public:
  /// Builds a simplex from labels in any order. Rejects empty input,
  /// negative labels and duplicates (naming the offending label).
  explicit Simplex(std::vector<int> labels);
  Simplex(std::initializer_list<int> labels);

  int dim() const { return static_cast<int>(verts_.size()) - 1; }
  const std::vector<int>& vertices() const { return verts_; }

  bool has_vertex(int v) const;
  /// True if `other`'s vertex set is contained in this one's.
  bool has_face(const Simplex& other) const;

  /// The facet obtained by omitting the i-th vertex. Requires dim() >= 1.
  Simplex facet_omitting(int i) const;
  /// All dim()+1 facets, in omitted-vertex order. Empty for vertices.
  std::vector<Simplex> facets() const;
  /// Every nonempty face, including the simplex itself.
  std::vector<Simplex> all_faces() const;

  /// Vertex slice [from, to] as a simplex (ascending already).
  Simplex slice(int from, int to) const;

  std::string to_string() const;  // "<1,2,3>"
  /// Comma-separated labels without brackets, e.g. "1,2,3".
  std::string label_list() const;

  auto operator<=>(const Simplex&) const = default;

 private:
  struct unchecked_tag {};
  Simplex(std::vector<int> sorted, unchecked_tag) : verts_(std::move(sorted)) {}

  std::vector<int> verts_;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);

/// Orders simplices by dimension first, lexicographically within a dimension.
/// This is the library's default filtration order.
struct DimLexLess {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a < b;
  }
};

}  // namespace z2top
