#pragma once

#include "w1g/bimodule.hpp"
#include "w1g/exec.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace w1g {

/// A homomorphism k: Z^{2g} -> Q given by its values on the standard basis.
class HomFunctional {
 public:
  explicit HomFunctional(std::vector<Rational> basis_values);
  static HomFunctional zero(int genus) { return HomFunctional(std::vector<Rational>(2 * genus)); }
  /// Dual basis vector e_i^* (0-based coordinate index).
  static HomFunctional coordinate(int genus, int index);

  int genus() const { return static_cast<int>(basis_values_.size() / 2); }
  const std::vector<Rational>& basis_values() const { return basis_values_; }
  Rational operator()(const Monomial& m) const;
  bool is_zero() const;

  friend bool operator==(const HomFunctional&, const HomFunctional&) = default;

 private:
  std::vector<Rational> basis_values_;
};

/// An arbitrary map k: Z^{2g} -> Q with finite support (zero elsewhere).
class FiniteKMap {
 public:
  explicit FiniteKMap(int genus) : genus_(genus) { (void)Monomial(genus); }
  /// Single-point indicator, the smallest non-additive map.
  static FiniteKMap indicator(const Monomial& point, const Rational& value = 1);
  /// Restriction of a homomorphism to the box of the given radius.
  static FiniteKMap restrict(const HomFunctional& k, int radius);

  int genus() const { return genus_; }
  const std::map<Monomial, Rational>& values() const { return values_; }
  FiniteKMap& set(const Monomial& m, const Rational& v);
  Rational operator()(const Monomial& m) const;

  friend bool operator==(const FiniteKMap&, const FiniteKMap&) = default;

 private:
  int genus_;
  std::map<Monomial, Rational> values_;
};

/// A 1-cochain known on the window ||Z||_inf <= domain_radius. Values outside the
/// window are unknown, so reading them is an error rather than an implicit zero.
template <class V>
class Cochain {
 public:
  using Value = V;
  static constexpr Flavor flavor = V::flavor;

  Cochain(int genus, int domain_radius) : genus_(genus), radius_(domain_radius), zero_(genus) {
    if (domain_radius < 0) throw WindowError("negative domain radius");
  }

  int genus() const { return genus_; }
  int domain_radius() const { return radius_; }
  bool in_window(const Monomial& z) const {
    return z.genus() == genus_ && z.sup_norm() <= radius_;
  }
  /// Stored non-zero values, sorted by Z.
  const std::map<Monomial, V>& entries() const { return values_; }

  const V& at(const Monomial& z) const {
    require_same_genus(genus_, z.genus(), "cochain evaluation");
    if (z.sup_norm() > radius_)
      throw WindowError("cochain evaluated at " + z.str() + " outside domain radius " +
                        std::to_string(radius_));
    auto it = values_.find(z);
    return it == values_.end() ? zero_ : it->second;
  }

  Cochain& set(const Monomial& z, V value) {
    require_same_genus(genus_, value.genus(), "cochain value");
    (void)at(z);
    if (value.is_zero())
      values_.erase(z);
    else
      values_.insert_or_assign(z, std::move(value));
    return *this;
  }

  Cochain& operator+=(const Cochain& o) { return combine(o, Rational(1)); }
  Cochain& operator-=(const Cochain& o) { return combine(o, Rational(-1)); }
  Cochain& operator*=(const Rational& c) {
    if (c == 0) values_.clear();
    for (auto& [z, v] : values_) v *= c;
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Rational& c, Cochain a) { return a *= c; }
  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.genus_ == b.genus_ && a.radius_ == b.radius_ && a.values_ == b.values_;
  }

 private:
  Cochain& combine(const Cochain& o, const Rational& c) {
    require_same_genus(genus_, o.genus_, "cochain arithmetic");
    if (radius_ != o.radius_) throw WindowError("cochain windows differ");
    for (const auto& [z, v] : o.values_) {
      V sum = at(z);
      sum += c * v;
      set(z, std::move(sum));
    }
    return *this;
  }

  int genus_;
  int radius_;
  V zero_;
  std::map<Monomial, V> values_;
};

using TensorCochain = Cochain<Tensor2Element>;
using WedgeCochain = Cochain<Wedge2Element>;
/// Flavor-erased cochain for serialization and the CLI.
using AnyCochain = std::variant<TensorCochain, WedgeCochain>;

using KMap = std::variant<HomFunctional, FiniteKMap>;
Rational evaluate(const KMap& k, const Monomial& m);
int genus_of(const KMap& k);

/// Delta_k(Z) = k(Z) Z ^ 1 on the window.
WedgeCochain make_delta_k(const KMap& k, int domain_radius);
/// Delta_k^l(Z) = k(Z) Z (x) 1.
TensorCochain make_delta_k_left(const KMap& k, int domain_radius);
/// Delta_k^r(Z) = k(Z) 1 (x) Z.
TensorCochain make_delta_k_right(const KMap& k, int domain_radius);
/// delta_0(r): r 1(x)1 at Z = 1, zero elsewhere.
TensorCochain make_delta0(const Rational& r, int genus, int domain_radius);

/// Linear extension to a Laurent element: sum_Z c_Z D(Z). Every monomial of p
/// must lie in the window.
template <class V>
V evaluate_linear(const Cochain<V>& d, const LaurentElement& p) {
  require_same_genus(d.genus(), p.genus(), "cochain evaluation");
  V out(d.genus());
  for (const auto& [z, c] : p.terms()) out += c * d.at(z);
  return out;
}

/// Pointwise p and s on cochains.
WedgeCochain tensor_cochain_to_wedge(const TensorCochain& c);
TensorCochain wedge_cochain_to_tensor(const WedgeCochain& c);

/// Window restriction of the coboundary d(m): Z -> Z . m.
template <class O>
Cochain<PairElement<O>> coboundary_cochain(const PairElement<O>& m, int domain_radius) {
  Cochain<PairElement<O>> out(m.genus(), domain_radius);
  for (const auto& z : box_monomials(m.genus(), domain_radius)) out.set(z, act_monomial(z, m));
  return out;
}

/// i(Z1,Z2) D(Z1 Z2) - Z1 . D(Z2) + Z2 . D(Z1). Zero iff the cocycle equation
/// holds at (Z1, Z2). Throws WindowError unless Z1, Z2 and Z1 Z2 are in the window.
template <class V>
V cocycle_residual(const Cochain<V>& d, const Monomial& z1, const Monomial& z2) {
  const Monomial z12 = z1 * z2;
  const V& d12 = d.at(z12);
  const V& d1 = d.at(z1);
  const V& d2 = d.at(z2);
  V out(d.genus());
  if (const auto i = intersection_form(z1, z2); i != 0) {
    for (const auto& [k, c] : d12.terms()) out.add_term(k.first, k.second, Rational(c * i));
  }
  accumulate_monomial_action(z1, Rational(-1), d2, out);
  accumulate_monomial_action(z2, Rational(1), d1, out);
  return out;
}

template <class V>
struct ResidualWitness {
  Monomial z1;  // z1 > z2 lexicographically
  Monomial z2;
  V residual;
  friend bool operator==(const ResidualWitness&, const ResidualWitness&) = default;
};

/// Evaluates the residual on every unordered pair {Z1, Z2} (reported with
/// Z1 > Z2) such that Z1, Z2, Z1 Z2 lie in the window. Returns the non-zero
/// ones sorted lexicographically by (Z1, Z2). Empty iff the cochain is a cocycle
/// relative to its window.
template <class V>
std::vector<ResidualWitness<V>> residual_scan(const Cochain<V>& d, Exec exec = Exec::parallel);

extern template std::vector<ResidualWitness<Tensor2Element>> residual_scan(const TensorCochain&, Exec);
extern template std::vector<ResidualWitness<Wedge2Element>> residual_scan(const WedgeCochain&, Exec);

/// Pairs {u, v} (u > v) in the box with i(u,v) != 0 and k(uv) != k(u) + k(v).
struct KWitness {
  Monomial u;
  Monomial v;
  Rational defect;  // k(uv) - k(u) - k(v)
  friend bool operator==(const KWitness&, const KWitness&) = default;
};

struct KCheckResult {
  Rational origin_value;  // k(0); the additivity hypothesis also needs this to vanish
  std::vector<KWitness> witnesses;
  bool origin_ok() const { return origin_value == 0; }
  bool additive_on_box() const { return witnesses.empty(); }
};

KCheckResult k_compatibility_check(const KMap& k, int box_radius);

struct ExtendFailure {
  Monomial mismatch;  // lexicographically first non-zero box point where k != k'
  Rational k_value;
  Rational hom_value;
};

/// Reads k' off the basis monomials and checks k' == k at every non-zero point
/// of the box. The value at the origin is ignored.
std::variant<HomFunctional, ExtendFailure> extend_to_hom(const KMap& k, int box_radius);

/// Returns a window monomial Z != 1 whose Z ^ 1 coefficient in D(Z) is non-zero.
/// Such a Z proves D differs from every coboundary on the window, because
/// (d m)(Z) never has a Z ^ 1 component. Generators x_1, y_1, ... are tried
/// first, then the rest of the window in lexicographic order.
std::optional<Monomial> noncoboundary_certificate(const WedgeCochain& d);

/// Exhaustive check that the Z ^ 1 coefficient of Z . (u ^ v) vanishes for all
/// Z != 1 and all wedge pairs u > v with exponents in [-radius, radius].
struct SoundnessScan {
  int genus = 0;
  int radius = 0;
  std::uint64_t triples_checked = 0;
  std::uint64_t nonzero = 0;
  friend bool operator==(const SoundnessScan&, const SoundnessScan&) = default;
};

/// parallel: packed-integer OpenMP kernel. serial: reference loop through
/// act_wedge and coefficient extraction (slow; for cross-checking).
SoundnessScan certificate_soundness_scan(int genus, int radius, Exec exec = Exec::parallel);

}  // namespace w1g
