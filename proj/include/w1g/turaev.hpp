#pragma once

#include "w1g/bimodule.hpp"
#include "w1g/exec.hpp"

#include <cstdint>
#include <optional>

namespace w1g {

/// gamma = x_1 x_2^{-1}.
Monomial turaev_gamma(int genus);
/// The wedge x_1 ^ x_2^{-1}, as a canonical pair.
PairKey turaev_target(int genus);

/// Coefficient of x_1 ^ x_2^{-1} in gamma . (u ^ v). Requires genus >= 2.
Rational gamma_coefficient(const Monomial& u, const Monomial& v, int genus);

struct TuraevReport {
  int genus = 0;
  int radius = 0;
  std::uint64_t pairs_checked = 0;
  std::uint64_t nonzero = 0;
  bool all_zero = false;
  std::optional<PairKey> first_nonzero;
  Monomial gamma;
  PairKey target;
  /// Coefficient of the target in p^p of the Turaev cobracket at gamma.
  Rational turaev_value = 1;
  /// No coboundary of a window element reaches the Turaev value at gamma.
  bool nontrivial_in_window = false;
  friend bool operator==(const TuraevReport&, const TuraevReport&) = default;
};

/// Evaluates gamma_coefficient over every canonical pair u > v with exponents
/// in [-radius, radius]. parallel: closed-form OpenMP kernel; serial: the
/// reference through act_wedge and coefficient extraction.
TuraevReport nontriviality_scan(int genus, int radius, Exec exec = Exec::parallel);

}  // namespace w1g
