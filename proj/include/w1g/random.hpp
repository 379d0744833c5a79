#pragma once

#include "w1g/bimodule.hpp"
#include "w1g/cochain.hpp"

#include <cstdint>
#include <random>

namespace w1g {

/// Deterministic sampler. Ranges are derived from raw mt19937_64 output, so
/// a seed gives the same samples on every platform.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t range(std::int64_t lo, std::int64_t hi);
  Monomial monomial(int genus, int radius);
  /// Small non-zero rational p/q with |p| <= 5, 1 <= q <= 4.
  Rational coefficient();
  LaurentElement laurent(int genus, int radius, int max_terms);
  Tensor2Element tensor(int genus, int radius, int max_terms);
  Wedge2Element wedge(int genus, int radius, int max_terms);
  HomFunctional hom(int genus);
  /// A non-zero single-point indicator k = c [Z = point] with point != 0 in
  /// the box of the given radius; never additive off the origin.
  FiniteKMap indicator(int genus, int radius);

 private:
  std::mt19937_64 rng_;
};

}  // namespace w1g
