#include "w1g/laurent.hpp"

namespace w1g {

LaurentElement::LaurentElement(int genus) : genus_(genus) { (void)Monomial(genus); }

LaurentElement::LaurentElement(int genus,
                               std::initializer_list<std::pair<Monomial, Rational>> terms)
    : LaurentElement(genus) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

LaurentElement LaurentElement::monomial(const Monomial& m, const Rational& c) {
  LaurentElement e(m.genus());
  e.add_term(m, c);
  return e;
}

Rational LaurentElement::coefficient(const Monomial& m) const {
  require_same_genus(genus_, m.genus(), "coefficient lookup");
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

LaurentElement& LaurentElement::add_term(const Monomial& m, const Rational& c) {
  require_same_genus(genus_, m.genus(), "add_term");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

LaurentElement& LaurentElement::operator+=(const LaurentElement& o) {
  require_same_genus(genus_, o.genus_, "addition");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

LaurentElement& LaurentElement::operator-=(const LaurentElement& o) {
  require_same_genus(genus_, o.genus_, "subtraction");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

LaurentElement& LaurentElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LaurentElement operator*(const LaurentElement& a, const LaurentElement& b) {
  require_same_genus(a.genus_, b.genus_, "product");
  LaurentElement out(a.genus_);
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) out.add_term(m1 * m2, c1 * c2);
  return out;
}

LaurentElement bracket(const LaurentElement& p, const LaurentElement& q) {
  require_same_genus(p.genus(), q.genus(), "bracket");
  LaurentElement out(p.genus());
  for (const auto& [m1, c1] : p.terms())
    for (const auto& [m2, c2] : q.terms()) {
      const auto i = intersection_form(m1, m2);
      if (i != 0) out.add_term(m1 * m2, Rational(c1 * c2 * i));
    }
  return out;
}

}  // namespace w1g
