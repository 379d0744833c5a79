#include "w1g/random.hpp"

namespace w1g {

std::int64_t Sampler::range(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw unbiased.
  const std::uint64_t limit = span == 0 ? 0 : std::numeric_limits<std::uint64_t>::max() -
                                                  std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x = rng_();
  while (span != 0 && x >= limit) x = rng_();
  return lo + static_cast<std::int64_t>(span == 0 ? x : x % span);
}

Monomial Sampler::monomial(int genus, int radius) {
  std::vector<Monomial::Exponent> e(static_cast<std::size_t>(2 * genus));
  for (auto& x : e) x = static_cast<Monomial::Exponent>(range(-radius, radius));
  return Monomial::from_exponents(e);
}

Rational Sampler::coefficient() {
  std::int64_t p = 0;
  while (p == 0) p = range(-5, 5);
  Rational q(static_cast<long>(p), static_cast<unsigned long>(range(1, 4)));
  q.canonicalize();
  return q;
}

LaurentElement Sampler::laurent(int genus, int radius, int max_terms) {
  LaurentElement out(genus);
  const auto n = range(1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) out.add_term(monomial(genus, radius), coefficient());
  return out;
}

Tensor2Element Sampler::tensor(int genus, int radius, int max_terms) {
  Tensor2Element out(genus);
  const auto n = range(1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) out.add_term(monomial(genus, radius), monomial(genus, radius), coefficient());
  return out;
}

Wedge2Element Sampler::wedge(int genus, int radius, int max_terms) {
  Wedge2Element out(genus);
  const auto n = range(1, max_terms);
  for (std::int64_t i = 0; i < n; ++i) out.add_term(monomial(genus, radius), monomial(genus, radius), coefficient());
  return out;
}

HomFunctional Sampler::hom(int genus) {
  std::vector<Rational> v(static_cast<std::size_t>(2 * genus));
  for (auto& x : v) x = range(-3, 3) == 0 ? Rational(0) : coefficient();
  return HomFunctional(std::move(v));
}

FiniteKMap Sampler::indicator(int genus, int radius) {
  Monomial m(genus);
  while (m.is_unit()) m = monomial(genus, radius);
  return FiniteKMap::indicator(m, coefficient());
}

}  // namespace w1g
