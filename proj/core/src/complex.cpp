#include "z2top/complex.hpp"

#include <algorithm>

#include "z2top/errors.hpp"

namespace z2top {

FilteredComplex FilteredComplex::close(const std::vector<Simplex>& maximal) {
  std::set<Simplex> all;
  for (const auto& m : maximal) {
    auto fs = m.all_faces();
    all.insert(fs.begin(), fs.end());
  }
  std::vector<Simplex> order(all.begin(), all.end());
  std::sort(order.begin(), order.end(), DimLexLess{});
  return from_filtration(std::move(order));
}

FilteredComplex FilteredComplex::from_filtration(std::vector<Simplex> order) {
  FilteredComplex k;
  k.simplices_ = std::move(order);
  for (std::size_t i = 0; i < k.simplices_.size(); ++i) {
    const auto& s = k.simplices_[i];
    auto [it, fresh] = k.index_.emplace(s, i);
    if (!fresh)
      throw input_error("duplicate simplex " + s.to_string() + " in filtration");
    k.dim_ = std::max(k.dim_, s.dim());
  }
  // prefix-closure: every facet must already be present
  for (std::size_t i = 0; i < k.simplices_.size(); ++i) {
    const auto& s = k.simplices_[i];
    for (const auto& f : s.facets()) {
      auto it = k.index_.find(f);
      if (it == k.index_.end() || it->second >= i)
        throw input_error("filtration violates prefix-closure at " +
                          s.to_string() + " (missing or late face " +
                          f.to_string() + ")");
    }
  }
  return k;
}

bool FilteredComplex::contains(const Simplex& s) const {
  return index_.count(s) > 0;
}

std::size_t FilteredComplex::index_of(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end())
    throw input_error("simplex " + s.to_string() + " not in complex");
  return it->second;
}

std::optional<std::size_t> FilteredComplex::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> FilteredComplex::simplices_of_dim(int q) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (s.dim() == q) out.push_back(s);
  return out;
}

std::size_t FilteredComplex::count_of_dim(int q) const {
  std::size_t n = 0;
  for (const auto& s : simplices_)
    if (s.dim() == q) ++n;
  return n;
}

Chain FilteredComplex::coboundary(const Chain& cochain) const {
  const int q = cochain.dim();
  Chain out(q + 1);
  for (const auto& s : simplices_) {
    if (s.dim() != q + 1) continue;
    int hits = 0;
    for (const auto& f : s.facets())
      if (cochain.contains(f)) ++hits;
    if (hits % 2 == 1) out += s;
  }
  return out;
}

void FilteredComplex::check_member(const std::set<Simplex>& b) const {
  for (const auto& s : b)
    if (!contains(s))
      throw input_error("simplex " + s.to_string() + " not in complex");
}

std::set<Simplex> FilteredComplex::star(const std::set<Simplex>& b) const {
  check_member(b);
  std::set<Simplex> out;
  for (const auto& s : simplices_)
    for (const auto& t : b)
      if (s.has_face(t)) {
        out.insert(s);
        break;
      }
  return out;
}

std::set<Simplex> FilteredComplex::closure(const std::set<Simplex>& b) const {
  check_member(b);
  std::set<Simplex> out;
  for (const auto& s : b) {
    auto fs = s.all_faces();
    out.insert(fs.begin(), fs.end());
  }
  return out;
}

std::set<Simplex> FilteredComplex::link(const std::set<Simplex>& b) const {
  auto inner = closure(star(b));
  auto outer = star(closure(b));
  std::set<Simplex> out;
  for (const auto& s : inner)
    if (!outer.count(s)) out.insert(s);
  return out;
}

VertexMap::VertexMap(std::map<int, int> mapping, FilteredComplex source,
                     FilteredComplex target)
    : mapping_(std::move(mapping)),
      source_(std::move(source)),
      target_(std::move(target)) {
  for (const auto& s : source_.simplices()) {
    std::set<int> image;
    for (int v : s.vertices()) image.insert((*this)(v));
    Simplex img(std::vector<int>(image.begin(), image.end()));
    if (!target_.contains(img))
      throw input_error("vertex map image " + img.to_string() + " of " +
                        s.to_string() + " is not a simplex of the target");
  }
}

int VertexMap::operator()(int v) const {
  auto it = mapping_.find(v);
  return it == mapping_.end() ? v : it->second;
}

Chain VertexMap::apply(const Simplex& s) const {
  std::set<int> image;
  for (int v : s.vertices()) image.insert((*this)(v));
  if (static_cast<int>(image.size()) != s.dim() + 1)
    return Chain(s.dim());  // collapsed simplex maps to zero
  return Chain::single(Simplex(std::vector<int>(image.begin(), image.end())));
}

Chain VertexMap::apply(const Chain& a) const {
  Chain out(a.dim());
  for (const auto& s : a.support()) out += apply(s);
  return out;
}

}  // namespace z2top
