#include "w1g/bimodule.hpp"

namespace w1g {

std::string_view flavor_name(Flavor f) { return f == Flavor::tensor ? "tensor" : "wedge"; }

Flavor parse_flavor(std::string_view name) {
  if (name == "tensor") return Flavor::tensor;
  if (name == "wedge") return Flavor::wedge;
  throw ParseError("unknown flavor '" + std::string(name) + "'");
}

namespace {

template <class O>
PairElement<O> act_impl(const LaurentElement& z, const PairElement<O>& m) {
  require_same_genus(z.genus(), m.genus(), "module action");
  PairElement<O> out(m.genus());
  for (const auto& [zm, c] : z.terms()) accumulate_monomial_action(zm, c, m, out);
  return out;
}

}  // namespace

Tensor2Element act_tensor(const LaurentElement& z, const Tensor2Element& t) { return act_impl(z, t); }
Wedge2Element act_wedge(const LaurentElement& z, const Wedge2Element& w) { return act_impl(z, w); }

Tensor2Element wedge_to_tensor(const Wedge2Element& w) {
  Tensor2Element out(w.genus());
  for (const auto& [k, c] : w.terms()) {
    out.add_term(k.first, k.second, c);
    out.add_term(k.second, k.first, -c);
  }
  return out;
}

Wedge2Element tensor_to_wedge(const Tensor2Element& t) {
  Wedge2Element out(t.genus());
  const Rational half(1, 2);
  for (const auto& [k, c] : t.terms()) out.add_term(k.first, k.second, half * c);
  return out;
}

TensorComponent component_of_tensor(const Monomial& u, const Monomial& v) {
  const bool ul = u.is_unit(), vl = v.is_unit();
  if (ul && vl) return TensorComponent::unit_unit;
  if (vl) return TensorComponent::prime_unit;
  if (ul) return TensorComponent::unit_prime;
  return TensorComponent::prime_prime;
}

WedgeComponent component_of_wedge(const Monomial& u, const Monomial& v) {
  return (u.is_unit() || v.is_unit()) ? WedgeComponent::prime_unit : WedgeComponent::prime_prime;
}

std::string_view component_name(TensorComponent c) {
  switch (c) {
    case TensorComponent::unit_unit: return "unit_unit";
    case TensorComponent::prime_unit: return "prime_unit";
    case TensorComponent::unit_prime: return "unit_prime";
    case TensorComponent::prime_prime: return "prime_prime";
  }
  return "?";
}

std::string_view component_name(WedgeComponent c) {
  return c == WedgeComponent::prime_unit ? "prime_unit" : "prime_prime";
}

const Tensor2Element& TensorDecomposition::part(TensorComponent c) const {
  switch (c) {
    case TensorComponent::unit_unit: return unit_unit;
    case TensorComponent::prime_unit: return prime_unit;
    case TensorComponent::unit_prime: return unit_prime;
    case TensorComponent::prime_prime: break;
  }
  return prime_prime;
}

TensorDecomposition decompose_tensor(const Tensor2Element& t) {
  const int g = t.genus();
  TensorDecomposition d{Tensor2Element(g), Tensor2Element(g), Tensor2Element(g), Tensor2Element(g)};
  for (const auto& [k, c] : t.terms()) {
    Tensor2Element* dst = nullptr;
    switch (component_of_tensor(k.first, k.second)) {
      case TensorComponent::unit_unit: dst = &d.unit_unit; break;
      case TensorComponent::prime_unit: dst = &d.prime_unit; break;
      case TensorComponent::unit_prime: dst = &d.unit_prime; break;
      case TensorComponent::prime_prime: dst = &d.prime_prime; break;
    }
    dst->add_term(k.first, k.second, c);
  }
  return d;
}

WedgeDecomposition decompose_wedge(const Wedge2Element& w) {
  WedgeDecomposition d{Wedge2Element(w.genus()), Wedge2Element(w.genus())};
  for (const auto& [k, c] : w.terms()) {
    auto& dst = component_of_wedge(k.first, k.second) == WedgeComponent::prime_unit ? d.prime_unit
                                                                                  : d.prime_prime;
    dst.add_term(k.first, k.second, c);
  }
  return d;
}

}  // namespace w1g
