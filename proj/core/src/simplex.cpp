#include "z2top/simplex.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "z2top/errors.hpp"

namespace z2top {

Simplex::Simplex(std::vector<int> labels) : verts_(std::move(labels)) {
  if (verts_.empty()) throw input_error("simplex needs at least one vertex");
  std::sort(verts_.begin(), verts_.end());
  if (verts_.front() < 0)
    throw input_error("negative vertex label " + std::to_string(verts_.front()));
  auto dup = std::adjacent_find(verts_.begin(), verts_.end());
  if (dup != verts_.end())
    throw input_error("duplicate vertex label " + std::to_string(*dup));
}

Simplex::Simplex(std::initializer_list<int> labels)
    : Simplex(std::vector<int>(labels)) {}

bool Simplex::has_vertex(int v) const {
  return std::binary_search(verts_.begin(), verts_.end(), v);
}

bool Simplex::has_face(const Simplex& other) const {
  return std::includes(verts_.begin(), verts_.end(), other.verts_.begin(),
                       other.verts_.end());
}

Simplex Simplex::facet_omitting(int i) const {
  std::vector<int> v;
  v.reserve(verts_.size() - 1);
  for (int j = 0; j < static_cast<int>(verts_.size()); ++j)
    if (j != i) v.push_back(verts_[j]);
  return Simplex(std::move(v), unchecked_tag{});
}

std::vector<Simplex> Simplex::facets() const {
  std::vector<Simplex> out;
  if (dim() == 0) return out;
  out.reserve(verts_.size());
  for (int i = 0; i < static_cast<int>(verts_.size()); ++i)
    out.push_back(facet_omitting(i));
  return out;
}

std::vector<Simplex> Simplex::all_faces() const {
  // Every nonempty vertex subset, enumerated by bitmask. Simplices stay
  // small (tuples, not complexes), so 2^(q+1) is fine here.
  std::vector<Simplex> out;
  const auto n = verts_.size();
  out.reserve((std::size_t{1} << n) - 1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<int> v;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (std::size_t{1} << j)) v.push_back(verts_[j]);
    out.push_back(Simplex(std::move(v), unchecked_tag{}));
  }
  return out;
}

Simplex Simplex::slice(int from, int to) const {
  return Simplex(std::vector<int>(verts_.begin() + from, verts_.begin() + to + 1),
                 unchecked_tag{});
}

std::string Simplex::to_string() const { return "<" + label_list() + ">"; }

std::string Simplex::label_list() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (i) os << ',';
    os << verts_[i];
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
  return os << s.to_string();
}

}  // namespace z2top
