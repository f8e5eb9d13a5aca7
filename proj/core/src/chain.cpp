#include "z2top/chain.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "z2top/errors.hpp"

namespace z2top {

Chain::Chain(int dim, std::vector<Simplex> support) : dim_(dim) {
  for (auto& s : support) *this += s;
}

Chain Chain::single(Simplex s) {
  Chain c(s.dim());
  c.support_.push_back(std::move(s));
  return c;
}

bool Chain::contains(const Simplex& s) const {
  return std::binary_search(support_.begin(), support_.end(), s);
}

Chain& Chain::operator+=(const Chain& rhs) {
  if (rhs.support_.empty()) return *this;
  if (support_.empty()) {
    *this = rhs;
    return *this;
  }
  if (dim_ != rhs.dim_)
    throw input_error("chain dimension mismatch: " + std::to_string(dim_) +
                      " vs " + std::to_string(rhs.dim_));
  // merge as symmetric difference of two sorted lists
  std::vector<Simplex> out;
  out.reserve(support_.size() + rhs.support_.size());
  auto a = support_.begin(), ae = support_.end();
  auto b = rhs.support_.begin(), be = rhs.support_.end();
  while (a != ae && b != be) {
    if (*a < *b)
      out.push_back(*a++);
    else if (*b < *a)
      out.push_back(*b++);
    else {
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, ae);
  out.insert(out.end(), b, be);
  support_ = std::move(out);
  return *this;
}

Chain& Chain::operator+=(const Simplex& s) {
  if (support_.empty()) {
    dim_ = s.dim();
    support_.push_back(s);
    return *this;
  }
  if (s.dim() != dim_)
    throw input_error("cannot add a " + std::to_string(s.dim()) +
                      "-simplex to a chain of dimension " + std::to_string(dim_));
  auto it = std::lower_bound(support_.begin(), support_.end(), s);
  if (it != support_.end() && *it == s)
    support_.erase(it);
  else
    support_.insert(it, s);
  return *this;
}

std::string Chain::to_string() const {
  if (support_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (i) os << " + ";
    os << support_[i].to_string();
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Chain& c) {
  return os << c.to_string();
}

Chain boundary(const Simplex& s) {
  Chain out(s.dim() - 1);
  if (s.dim() == 0) return Chain(0);
  for (auto& f : s.facets()) out += f;
  return out;
}

Chain boundary(const Chain& a) {
  Chain out(a.dim() - 1);
  for (const auto& s : a.support()) out += boundary(s);
  if (out.zero()) return Chain(a.dim() > 0 ? a.dim() - 1 : 0);
  return out;
}

bool evaluate(const Chain& cochain, const Chain& chain) {
  // parity of the sorted-support intersection
  const auto& a = cochain.support();
  const auto& b = chain.support();
  std::size_t hits = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else {
      ++hits;
      ++i;
      ++j;
    }
  }
  return hits % 2 == 1;
}

}  // namespace z2top
