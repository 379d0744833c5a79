#pragma once

#include "w1g/errors.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace w1g {

inline constexpr int kMaxGenus = 8;

/// A Laurent monomial x_1^{a_1} y_1^{b_1} ... x_g^{a_g} y_g^{b_g}, stored as its
/// exponent vector (a_1, b_1, ..., a_g, b_g) in Z^{2g}. The zero vector is the
/// unit monomial. Ordering is lexicographic on the exponent vector (genus first,
/// which only matters when comparing across genera).
class Monomial {
 public:
  using Exponent = std::int32_t;

  Monomial() = default;
  /// Unit monomial of the given genus.
  explicit Monomial(int genus);
  /// Exponent list (a_1, b_1, ..., a_g, b_g); length must be even and positive.
  Monomial(std::initializer_list<Exponent> exponents);
  static Monomial from_exponents(std::span<const Exponent> exponents);

  static Monomial unit(int genus) { return Monomial(genus); }
  /// x_i, 1-based.
  static Monomial x(int genus, int i);
  /// y_i, 1-based.
  static Monomial y(int genus, int i);

  int genus() const { return genus_; }
  int size() const { return 2 * genus_; }
  Exponent operator[](int i) const { return exps_[static_cast<std::size_t>(i)]; }
  std::span<const Exponent> exponents() const {
    return {exps_.data(), static_cast<std::size_t>(size())};
  }

  bool is_unit() const;
  /// max_i |e_i|
  Exponent sup_norm() const;
  Monomial inverse() const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) { return lhs *= rhs; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&, const Monomial&) = default;

  /// Exponent vector as "(a1,b1,...)".
  std::string str() const;

 private:
  int genus_ = 0;
  // Unused tail stays zero so defaulted comparisons agree with lexicographic
  // order on the first 2g entries.
  std::array<Exponent, 2 * kMaxGenus> exps_{};
};

void require_same_genus(int a, int b, const char* what);

/// i(u, v) = sum_j (a_j b'_j - a'_j b_j).
std::int64_t intersection_form(const Monomial& u, const Monomial& v);

/// Group law of the exponent lattice (component-wise sum).
inline Monomial monomial_mul(const Monomial& u, const Monomial& v) { return u * v; }

/// All monomials with sup-norm <= radius, in lexicographic order.
std::vector<Monomial> box_monomials(int genus, int radius);

/// Position of m in box_monomials(genus, radius); m must lie in the box.
std::size_t box_index(const Monomial& m, int radius);
inline std::size_t box_size(int genus, int radius) {
  std::size_t n = 1;
  for (int i = 0; i < 2 * genus; ++i) n *= static_cast<std::size_t>(2 * radius + 1);
  return n;
}

/// Standard generators x_1, y_1, ..., x_g, y_g in that order.
std::vector<Monomial> generator_monomials(int genus);

}  // namespace w1g

template <>
struct std::hash<w1g::Monomial> {
  std::size_t operator()(const w1g::Monomial& m) const noexcept {
    std::size_t h = static_cast<std::size_t>(m.genus());
    for (auto e : m.exponents())
      h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(static_cast<std::uint32_t>(e));
    return h;
  }
};
