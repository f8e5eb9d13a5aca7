#include "z2top/random_complex.hpp"

#include <algorithm>
#include <numeric>

namespace z2top {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  return next() % bound;
}

FilteredComplex random_complex(SplitMix64& rng, const RandomComplexOptions& opt) {
  const int nv = 1 + static_cast<int>(rng.below(opt.max_vertices));
  const int nmax = 1 + static_cast<int>(rng.below(opt.max_maximal));
  std::vector<Simplex> maximal;
  for (int i = 0; i < nmax; ++i) {
    const int arity = 1 + static_cast<int>(rng.below(std::min(nv, opt.max_arity)));
    std::vector<int> pool(nv);
    std::iota(pool.begin(), pool.end(), 1);
    // partial Fisher-Yates draw of `arity` labels
    std::vector<int> verts;
    for (int j = 0; j < arity; ++j) {
      const auto pick = j + rng.below(pool.size() - j);
      std::swap(pool[j], pool[pick]);
      verts.push_back(pool[j]);
    }
    maximal.push_back(Simplex(std::move(verts)));
  }
  return FilteredComplex::close(maximal);
}

}  // namespace z2top
