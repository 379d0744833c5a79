#include "w1g/turaev.hpp"

#include <omp.h>

namespace w1g {

namespace {

void require_genus(int genus) {
  if (genus < 2) throw DimensionError("the Turaev check needs genus at least 2");
  (void)Monomial(genus);
}

}  // namespace

Monomial turaev_gamma(int genus) {
  require_genus(genus);
  return Monomial::x(genus, 1) * Monomial::x(genus, 2).inverse();
}

PairKey turaev_target(int genus) {
  require_genus(genus);
  Monomial a = Monomial::x(genus, 1);
  Monomial b = Monomial::x(genus, 2).inverse();
  WedgeOrientation::canonicalize(a, b);
  return {a, b};
}

Rational gamma_coefficient(const Monomial& u, const Monomial& v, int genus) {
  require_genus(genus);
  require_same_genus(genus, u.genus(), "gamma coefficient");
  require_same_genus(genus, v.genus(), "gamma coefficient");
  Wedge2Element w(genus);
  w.add_term(u, v, 1);
  const auto [a, b] = turaev_target(genus);
  return act_monomial(turaev_gamma(genus), w).coefficient(a, b);
}

namespace {

// Closed form for a canonical pair u > v: gamma.(u^v) = i(g,u) gu^v + i(g,v) u^gv,
// and a ^ b contributes +-1 to the target when {a, b} equals it.
std::int64_t fast_coefficient(const Monomial& g, const PairKey& t, const Monomial& u, const Monomial& v) {
  std::int64_t c = 0;
  auto hit = [&](const Monomial& a, const Monomial& b, std::int64_t coef) {
    if (coef == 0) return;
    if (a == t.first && b == t.second) c += coef;
    else if (a == t.second && b == t.first) c -= coef;
  };
  hit(g * u, v, intersection_form(g, u));
  hit(u, g * v, intersection_form(g, v));
  return c;
}

}  // namespace

TuraevReport nontriviality_scan(int genus, int radius, Exec exec) {
  require_genus(genus);
  if (radius < 0) throw WindowError("negative scan radius");
  TuraevReport rep;
  rep.genus = genus;
  rep.radius = radius;
  rep.gamma = turaev_gamma(genus);
  rep.target = turaev_target(genus);
  const auto box = box_monomials(genus, radius);
  const auto n = static_cast<std::ptrdiff_t>(box.size());
  // First non-zero pair per u, so the reported witness is the lexicographic first.
  std::vector<std::optional<Monomial>> first(box.size());
  std::uint64_t checked = 0, nonzero = 0;
  if (exec == Exec::serial) {
    for (std::ptrdiff_t i = 0; i < n; ++i)
      for (std::ptrdiff_t j = 0; j < i; ++j) {
        ++checked;
        const auto& u = box[static_cast<std::size_t>(i)];
        const auto& v = box[static_cast<std::size_t>(j)];
        if (gamma_coefficient(u, v, genus) != 0) {
          ++nonzero;
          if (!first[static_cast<std::size_t>(i)]) first[static_cast<std::size_t>(i)] = v;
        }
      }
  } else {
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : checked, nonzero)
    for (std::ptrdiff_t i = 0; i < n; ++i)
      for (std::ptrdiff_t j = 0; j < i; ++j) {
        ++checked;
        const auto& u = box[static_cast<std::size_t>(i)];
        const auto& v = box[static_cast<std::size_t>(j)];
        if (fast_coefficient(rep.gamma, rep.target, u, v) != 0) {
          ++nonzero;
          if (!first[static_cast<std::size_t>(i)]) first[static_cast<std::size_t>(i)] = v;
        }
      }
  }
  rep.pairs_checked = checked;
  rep.nonzero = nonzero;
  rep.all_zero = nonzero == 0;
  for (std::size_t i = 0; i < first.size(); ++i)
    if (first[i]) {
      rep.first_nonzero = PairKey{box[i], *first[i]};
      break;
    }
  rep.nontrivial_in_window = rep.all_zero && rep.turaev_value != 0;
  return rep;
}

}  // namespace w1g
