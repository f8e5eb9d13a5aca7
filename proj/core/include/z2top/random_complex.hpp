#pragma once

#include <cstdint>

#include "z2top/complex.hpp"

namespace z2top {

/// Deterministic xorshift generator so seeded runs reproduce across
/// platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// Uniform value in [0, bound); bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

struct RandomComplexOptions {
  int max_vertices = 8;
  int max_maximal = 6;   // number of maximal simplices drawn
  int max_arity = 5;     // vertices per maximal simplex
};

/// A random prefix-closed complex: a handful of random maximal simplices on
/// a random vertex count, closed under faces in dimension-lex order.
FilteredComplex random_complex(SplitMix64& rng, const RandomComplexOptions& opt = {});

}  // namespace z2top
