#pragma once

#include "w1g/exec.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace w1g {

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when none
  friend bool operator==(const PropertyResult&, const PropertyResult&) = default;
};

struct AxiomsReport {
  std::uint64_t seed = 0;
  int exhaustive_radius = 0;
  int samples = 0;
  std::vector<PropertyResult> properties;
  bool passed() const {
    for (const auto& p : properties)
      if (p.failures != 0 || p.checked == 0) return false;
    return true;
  }
  friend bool operator==(const AxiomsReport&, const AxiomsReport&) = default;
};

/// Poisson algebra laws: exhaustive on genus-1 monomial triples with exponents in
/// [-exhaustive_radius, exhaustive_radius], plus `samples` random genus-2 triples
/// of elements.
std::vector<PropertyResult> poisson_properties(int exhaustive_radius, int samples, std::uint64_t seed);

/// Module laws for both squares, s/p intertwining, decomposition and d, on
/// `samples` random instances per property (genus 1..3).
std::vector<PropertyResult> bimodule_properties(int samples, std::uint64_t seed);

AxiomsReport verify_axioms(int exhaustive_radius, int samples, std::uint64_t seed);

}  // namespace w1g
