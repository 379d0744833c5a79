#pragma once

#include "w1g/laurent.hpp"

#include <map>
#include <string_view>
#include <utility>

namespace w1g {

using PairKey = std::pair<Monomial, Monomial>;

enum class Flavor { tensor, wedge };

std::string_view flavor_name(Flavor f);
Flavor parse_flavor(std::string_view name);

/// Ordered pairs: u (x) v.
struct TensorOrientation {
  static constexpr Flavor flavor = Flavor::tensor;
  /// Returns the sign to apply (0 drops the term); may swap u and v.
  static int canonicalize(Monomial&, Monomial&) { return 1; }
};

/// Antisymmetric pairs: u ^ v stored only with u > v.
struct WedgeOrientation {
  static constexpr Flavor flavor = Flavor::wedge;
  static int canonicalize(Monomial& u, Monomial& v) {
    if (u == v) return 0;
    if (u < v) {
      std::swap(u, v);
      return -1;
    }
    return 1;
  }
};

/// Finite-support element of W(x)W or W^W keyed by monomial pairs.
template <class Orientation>
class PairElement {
 public:
  using Terms = std::map<PairKey, Rational>;
  static constexpr Flavor flavor = Orientation::flavor;

  explicit PairElement(int genus) : genus_(genus) { (void)Monomial(genus); }

  int genus() const { return genus_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of u (x) v, or of u ^ v in either orientation.
  Rational coefficient(Monomial u, Monomial v) const {
    require_same_genus(genus_, u.genus(), "pair coefficient");
    require_same_genus(genus_, v.genus(), "pair coefficient");
    const int sign = Orientation::canonicalize(u, v);
    if (sign == 0) return 0;
    auto it = terms_.find({u, v});
    if (it == terms_.end()) return 0;
    return sign > 0 ? it->second : Rational(-it->second);
  }

  PairElement& add_term(Monomial u, Monomial v, const Rational& c) {
    require_same_genus(genus_, u.genus(), "pair add_term");
    require_same_genus(genus_, v.genus(), "pair add_term");
    if (c == 0) return *this;
    const int sign = Orientation::canonicalize(u, v);
    if (sign == 0) return *this;
    auto [it, inserted] = terms_.try_emplace({u, v}, sign > 0 ? c : Rational(-c));
    if (!inserted) {
      if (sign > 0)
        it->second += c;
      else
        it->second -= c;
      if (it->second == 0) terms_.erase(it);
    }
    return *this;
  }

  PairElement& operator+=(const PairElement& o) {
    require_same_genus(genus_, o.genus_, "pair addition");
    for (const auto& [k, c] : o.terms_) add_canonical(k, c);
    return *this;
  }
  PairElement& operator-=(const PairElement& o) {
    require_same_genus(genus_, o.genus_, "pair subtraction");
    for (const auto& [k, c] : o.terms_) add_canonical(k, -c);
    return *this;
  }
  PairElement& operator*=(const Rational& c) {
    if (c == 0)
      terms_.clear();
    else
      for (auto& [k, v] : terms_) v *= c;
    return *this;
  }
  friend PairElement operator+(PairElement a, const PairElement& b) { return a += b; }
  friend PairElement operator-(PairElement a, const PairElement& b) { return a -= b; }
  friend PairElement operator-(PairElement a) { return a *= Rational(-1); }
  friend PairElement operator*(const Rational& c, PairElement a) { return a *= c; }
  friend PairElement operator*(PairElement a, const Rational& c) { return a *= c; }
  friend bool operator==(const PairElement&, const PairElement&) = default;

 private:
  void add_canonical(const PairKey& k, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int genus_;
  Terms terms_;
};

using Tensor2Element = PairElement<TensorOrientation>;
using Wedge2Element = PairElement<WedgeOrientation>;

/// Z . (u (x) v) = {Z,u} (x) v + u (x) {Z,v}, for a single monomial Z with
/// coefficient c, accumulated into out.
template <class O>
void accumulate_monomial_action(const Monomial& z, const Rational& c, const PairElement<O>& m,
                                PairElement<O>& out) {
  for (const auto& [k, coef] : m.terms()) {
    const auto& [u, v] = k;
    if (const auto i = intersection_form(z, u); i != 0) out.add_term(z * u, v, Rational(c * coef * i));
    if (const auto i = intersection_form(z, v); i != 0) out.add_term(u, z * v, Rational(c * coef * i));
  }
}

/// Derivation action of W_1(g) on the tensor square.
Tensor2Element act_tensor(const LaurentElement& z, const Tensor2Element& t);
/// Derivation action of W_1(g) on the wedge square.
Wedge2Element act_wedge(const LaurentElement& z, const Wedge2Element& w);

inline Tensor2Element act(const LaurentElement& z, const Tensor2Element& t) { return act_tensor(z, t); }
inline Wedge2Element act(const LaurentElement& z, const Wedge2Element& w) { return act_wedge(z, w); }

/// Action of a single monomial; the hot path for cochain arithmetic.
template <class O>
PairElement<O> act_monomial(const Monomial& z, const PairElement<O>& m) {
  require_same_genus(z.genus(), m.genus(), "module action");
  PairElement<O> out(m.genus());
  accumulate_monomial_action(z, Rational(1), m, out);
  return out;
}

/// (d m)(Z) = Z . m.
template <class O>
PairElement<O> coboundary_value(const PairElement<O>& m, const LaurentElement& z) {
  return act(z, m);
}

/// s: u ^ v -> u (x) v - v (x) u.
Tensor2Element wedge_to_tensor(const Wedge2Element& w);
/// p: u (x) v -> 1/2 u ^ v.
Wedge2Element tensor_to_wedge(const Tensor2Element& t);

/// Summands of W(x)W = R(1(x)1) + W'(x)1 + 1(x)W' + W'(x)W', where W' is spanned
/// by the non-unit monomials.
enum class TensorComponent { unit_unit, prime_unit, unit_prime, prime_prime };
/// Summands of W^W = W'^1 + W'^W'.
enum class WedgeComponent { prime_unit, prime_prime };

TensorComponent component_of_tensor(const Monomial& u, const Monomial& v);
/// Either orientation.
WedgeComponent component_of_wedge(const Monomial& u, const Monomial& v);

std::string_view component_name(TensorComponent c);
std::string_view component_name(WedgeComponent c);

struct TensorDecomposition {
  Tensor2Element unit_unit;
  Tensor2Element prime_unit;
  Tensor2Element unit_prime;
  Tensor2Element prime_prime;
  const Tensor2Element& part(TensorComponent c) const;
};

TensorDecomposition decompose_tensor(const Tensor2Element& t);

struct WedgeDecomposition {
  Wedge2Element prime_unit;
  Wedge2Element prime_prime;
};

WedgeDecomposition decompose_wedge(const Wedge2Element& w);

}  // namespace w1g
