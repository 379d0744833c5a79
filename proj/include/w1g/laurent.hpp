#pragma once

#include "w1g/monomial.hpp"
#include "w1g/rational.hpp"

#include <map>
#include <utility>

namespace w1g {

/// An element of W_1(g): a finite Q-linear combination of Laurent monomials.
/// Terms are kept sorted (lexicographic) with no zero coefficients.
class LaurentElement {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit LaurentElement(int genus);
  LaurentElement(int genus, std::initializer_list<std::pair<Monomial, Rational>> terms);
  static LaurentElement monomial(const Monomial& m, const Rational& c = 1);

  int genus() const { return genus_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  /// Accumulates c * m, dropping the entry if it cancels.
  LaurentElement& add_term(const Monomial& m, const Rational& c);

  LaurentElement& operator+=(const LaurentElement& o);
  LaurentElement& operator-=(const LaurentElement& o);
  LaurentElement& operator*=(const Rational& c);

  friend LaurentElement operator+(LaurentElement a, const LaurentElement& b) { return a += b; }
  friend LaurentElement operator-(LaurentElement a, const LaurentElement& b) { return a -= b; }
  friend LaurentElement operator-(LaurentElement a) { return a *= Rational(-1); }
  friend LaurentElement operator*(LaurentElement a, const Rational& c) { return a *= c; }
  friend LaurentElement operator*(const Rational& c, LaurentElement a) { return a *= c; }
  /// Commutative product of W_1(g).
  friend LaurentElement operator*(const LaurentElement& a, const LaurentElement& b);

  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;

 private:
  int genus_;
  Terms terms_;
};

/// {P, Q}, the bilinear extension of {Z1, Z2} = i(Z1, Z2) Z1 Z2.
LaurentElement bracket(const LaurentElement& p, const LaurentElement& q);

}  // namespace w1g
