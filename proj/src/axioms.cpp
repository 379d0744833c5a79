#include "w1g/axioms.hpp"

#include "w1g/random.hpp"

namespace w1g {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++r_.checked;
    if (ok) return;
    if (r_.failures++ == 0) r_.first_failure = what;
  }
  PropertyResult done() { return std::move(r_); }

 private:
  PropertyResult r_;
};

LaurentElement mono(const Monomial& m) { return LaurentElement::monomial(m, 1); }

std::string triple(const Monomial& a, const Monomial& b, const Monomial& c) {
  return a.str() + " " + b.str() + " " + c.str();
}

void laws(const LaurentElement& p, const LaurentElement& q, const LaurentElement& r, Tally& anti, Tally& jacobi,
          Tally& leibniz, Tally& central, const std::string& label) {
  anti.check((bracket(p, q) + bracket(q, p)).is_zero(), label);
  jacobi.check((bracket(p, bracket(q, r)) + bracket(q, bracket(r, p)) + bracket(r, bracket(p, q))).is_zero(),
               label);
  leibniz.check(bracket(p, q * r) == bracket(p, q) * r + q * bracket(p, r), label);
  central.check(bracket(LaurentElement::monomial(Monomial(p.genus()), 1), p).is_zero(), label);
}

}  // namespace

std::vector<PropertyResult> poisson_properties(int exhaustive_radius, int samples, std::uint64_t seed) {
  Tally anti("antisymmetry"), jacobi("jacobi"), leibniz("leibniz"), central("unit_central");
  const auto box = box_monomials(1, exhaustive_radius);
  for (const auto& a : box)
    for (const auto& b : box)
      for (const auto& c : box) laws(mono(a), mono(b), mono(c), anti, jacobi, leibniz, central, triple(a, b, c));
  Sampler s(seed);
  for (int i = 0; i < samples; ++i) {
    const auto p = s.laurent(2, exhaustive_radius, 4);
    const auto q = s.laurent(2, exhaustive_radius, 4);
    const auto r = s.laurent(2, exhaustive_radius, 4);
    laws(p, q, r, anti, jacobi, leibniz, central, "genus-2 sample " + std::to_string(i));
  }
  return {anti.done(), jacobi.done(), leibniz.done(), central.done()};
}

namespace {

template <class E>
void module_laws(Sampler& s, int genus, const E& m, Tally& action, Tally& linear, Tally& unit,
                 const std::string& label) {
  const auto z1 = s.laurent(genus, 2, 3);
  const auto z2 = s.laurent(genus, 2, 3);
  action.check(act(bracket(z1, z2), m) == act(z1, act(z2, m)) - act(z2, act(z1, m)), label);
  E m2(genus);
  if constexpr (E::flavor == Flavor::tensor)
    m2 = s.tensor(genus, 2, 4);
  else
    m2 = s.wedge(genus, 2, 4);
  const Rational c = s.coefficient();
  linear.check(coboundary_value(m + c * m2, z1) == coboundary_value(m, z1) + c * coboundary_value(m2, z1), label);
  unit.check(coboundary_value(m, LaurentElement::monomial(Monomial(genus), 1)).is_zero(), label);
}

}  // namespace

std::vector<PropertyResult> bimodule_properties(int samples, std::uint64_t seed) {
  Tally action_t("tensor_action"), action_w("wedge_action"), linear("d_linear"), unit("d_kills_unit"),
      s_inter("s_intertwines"), p_inter("p_intertwines"), p_s("p_after_s_identity"), direct("decomposition_direct"),
      stable("decomposition_stable");
  Sampler s(seed ^ 0x5bd1e995ULL);
  for (int i = 0; i < samples; ++i) {
    const int genus = static_cast<int>(s.range(1, 3));
    const std::string label = "sample " + std::to_string(i) + " genus " + std::to_string(genus);
    const auto t = s.tensor(genus, 2, 5);
    const auto w = s.wedge(genus, 2, 5);
    module_laws(s, genus, t, action_t, linear, unit, label);
    module_laws(s, genus, w, action_w, linear, unit, label);
    const auto z = s.laurent(genus, 2, 3);
    s_inter.check(wedge_to_tensor(act(z, w)) == act(z, wedge_to_tensor(w)), label);
    p_inter.check(tensor_to_wedge(act(z, t)) == act(z, tensor_to_wedge(t)), label);
    p_s.check(tensor_to_wedge(wedge_to_tensor(w)) == w, label);

    const auto dt = decompose_tensor(t);
    const TensorComponent tc[] = {TensorComponent::unit_unit, TensorComponent::prime_unit,
                                  TensorComponent::unit_prime, TensorComponent::prime_prime};
    bool disjoint = dt.unit_unit + dt.prime_unit + dt.unit_prime + dt.prime_prime == t;
    bool st = true;
    for (auto c : tc) {
      for (const auto& [k, q] : dt.part(c).terms()) disjoint = disjoint && component_of_tensor(k.first, k.second) == c;
      const auto moved = act(z, dt.part(c));
      for (const auto& [k, q] : moved.terms()) st = st && component_of_tensor(k.first, k.second) == c;
    }
    const auto dw = decompose_wedge(w);
    disjoint = disjoint && dw.prime_unit + dw.prime_prime == w;
    for (const auto& [k, q] : dw.prime_unit.terms())
      disjoint = disjoint && component_of_wedge(k.first, k.second) == WedgeComponent::prime_unit;
    for (const auto& [k, q] : dw.prime_prime.terms())
      disjoint = disjoint && component_of_wedge(k.first, k.second) == WedgeComponent::prime_prime;
    const auto moved_pu = act(z, dw.prime_unit);
    const auto moved_pp = act(z, dw.prime_prime);
    for (const auto& [k, q] : moved_pu.terms())
      st = st && component_of_wedge(k.first, k.second) == WedgeComponent::prime_unit;
    for (const auto& [k, q] : moved_pp.terms())
      st = st && component_of_wedge(k.first, k.second) == WedgeComponent::prime_prime;
    direct.check(disjoint, label);
    stable.check(st, label);
  }
  return {action_t.done(), action_w.done(), linear.done(), unit.done(), s_inter.done(),
          p_inter.done(),  p_s.done(),      direct.done(), stable.done()};
}

AxiomsReport verify_axioms(int exhaustive_radius, int samples, std::uint64_t seed) {
  AxiomsReport rep;
  rep.seed = seed;
  rep.exhaustive_radius = exhaustive_radius;
  rep.samples = samples;
  rep.properties = poisson_properties(exhaustive_radius, samples, seed);
  auto b = bimodule_properties(samples, seed);
  rep.properties.insert(rep.properties.end(), b.begin(), b.end());
  return rep;
}

}  // namespace w1g
