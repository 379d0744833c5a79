#include "w1g/random.hpp"
#include "w1g/serialize.hpp"

#include <doctest.h>

using namespace w1g;

namespace {

const Monomial one1(1), x_1{1, 0}, y_1{0, 1};

FiniteKMap quadratic_a1(int radius) {
  FiniteKMap k(1);
  for (const auto& z : box_monomials(1, radius)) k.set(z, Rational(z[0] * z[0]));
  return k;
}

}  // namespace

TEST_CASE("delta_k constructors") {
  const HomFunctional a1 = HomFunctional::coordinate(1, 0);
  const HomFunctional b1 = HomFunctional::coordinate(1, 1);
  const auto d = make_delta_k(a1, 2);
  Wedge2Element want(1);
  want.add_term(Monomial{2, 1}, one1, 2);
  CHECK(d.at(Monomial{2, 1}) == want);
  CHECK(d.at(one1).is_zero());
  CHECK_THROWS_AS(d.at(Monomial{3, 0}), WindowError);

  const auto l = make_delta_k_left(b1, 3);
  Tensor2Element wl(1);
  wl.add_term(Monomial{0, 3}, one1, 3);
  CHECK(l.at(Monomial{0, 3}) == wl);
  CHECK(make_delta_k_right(b1, 3).at(x_1).is_zero());

  const auto d0 = make_delta0(1, 1, 2);
  Tensor2Element u(1);
  u.add_term(one1, one1, 1);
  CHECK(d0.at(one1) == u);
  CHECK(d0.at(x_1).is_zero());
  CHECK(make_delta0(0, 1, 2).entries().empty());
  CHECK_THROWS_AS(make_delta_k(a1, -1), WindowError);
}

TEST_CASE("residual of the x1y1 indicator") {
  const auto k = FiniteKMap::indicator(Monomial{1, 1});
  const auto d = make_delta_k(k, 1);
  Wedge2Element want(1);
  want.add_term(Monomial{1, 1}, one1, 1);
  CHECK(cocycle_residual(d, x_1, y_1) == want);
  CHECK(cocycle_residual(d, y_1, x_1) == -want);
  CHECK(cocycle_residual(make_delta_k(k, 2), x_1, x_1).is_zero());
  CHECK_THROWS_AS(cocycle_residual(d, Monomial{1, 1}, x_1), WindowError);

  // Brute-force oracle witness list for this window (orientation Z1 > Z2).
  const auto w = residual_scan(d);
  REQUIRE(w.size() == 3);
  CHECK(w[0].z1 == x_1);
  CHECK(w[0].z2 == y_1);
  CHECK(w[1].z1 == Monomial{1, 1});
  CHECK(w[1].z2 == Monomial{-1, 0});
  CHECK(w[2].z1 == Monomial{1, 1});
  CHECK(w[2].z2 == Monomial{0, -1});
  CHECK(residual_scan(d, Exec::serial) == w);
}

TEST_CASE("cocycles with empty residual scans") {
  CHECK(residual_scan(make_delta_k(HomFunctional({1, -2}), 3)).empty());
  CHECK(residual_scan(make_delta0(5, 1, 3)).empty());
  CHECK(residual_scan(make_delta0(5, 2, 1)).empty());
  CHECK(residual_scan(make_delta_k_left(HomFunctional({3, 1, 0, -1}), 1)).empty());
  CHECK(residual_scan(make_delta_k_right(HomFunctional({Rational(1, 2), 0}), 2)).empty());
}

TEST_CASE("coboundaries are cocycles") {
  Sampler rng(41);
  for (int t = 0; t < 40; ++t) {
    const int g = 1 + t % 2;
    const int r = g == 1 ? 2 : 1;
    const auto mw = rng.wedge(g, 3, 6);
    const auto mt = rng.tensor(g, 3, 6);
    CHECK(residual_scan(coboundary_cochain(mw, r)).empty());
    CHECK(residual_scan(coboundary_cochain(mt, r)).empty());
    CHECK_FALSE(noncoboundary_certificate(coboundary_cochain(mw, r)).has_value());
  }
}

TEST_CASE("residual is antisymmetric") {
  Sampler rng(42);
  for (int t = 0; t < 20; ++t) {
    WedgeCochain c(1, 2);
    for (const auto& z : box_monomials(1, 2)) c.set(z, rng.wedge(1, 2, 3));
    for (const auto& z1 : box_monomials(1, 1))
      for (const auto& z2 : box_monomials(1, 1)) CHECK(cocycle_residual(c, z1, z2) == -cocycle_residual(c, z2, z1));
  }
}

TEST_CASE("k compatibility check") {
  for (int b = 1; b <= 3; ++b) {
    CHECK(k_compatibility_check(HomFunctional({1, -2}), b).witnesses.empty());
    CHECK(k_compatibility_check(FiniteKMap::restrict(HomFunctional({1, -2}), 2 * b), b).witnesses.empty());
  }
  const auto hom = FiniteKMap::restrict(HomFunctional({1, -2}), 4);

  const auto q = k_compatibility_check(quadratic_a1(4), 2);
  CHECK(q.origin_ok());
  bool found = false;
  for (const auto& w : q.witnesses) {
    CHECK(w.u > w.v);
    CHECK(intersection_form(w.u, w.v) != 0);
    if (w.u == Monomial{1, 1} && w.v == x_1) {
      found = true;
      CHECK(w.defect == 2);
    }
  }
  CHECK(found);

  auto shifted = hom;
  shifted.set(one1, 7);
  const auto s = k_compatibility_check(shifted, 2);
  CHECK(s.witnesses.empty());
  CHECK_FALSE(s.origin_ok());
  CHECK(s.origin_value == 7);
}

TEST_CASE("extension to a homomorphism") {
  auto k = FiniteKMap::restrict(HomFunctional({1, -2}), 3);
  k.set(one1, 9);
  const auto ok = extend_to_hom(k, 3);
  REQUIRE(std::holds_alternative<HomFunctional>(ok));
  CHECK(std::get<HomFunctional>(ok) == HomFunctional({1, -2}));

  // Lexicographically first non-zero box point where a1^2 departs from a1.
  const auto bad = extend_to_hom(quadratic_a1(2), 2);
  REQUIRE(std::holds_alternative<ExtendFailure>(bad));
  const auto& f = std::get<ExtendFailure>(bad);
  CHECK(f.mismatch == Monomial{-2, -2});
  CHECK(f.k_value == 4);
  CHECK(f.hom_value == -2);

  const auto zero = extend_to_hom(FiniteKMap(2), 1);
  REQUIRE(std::holds_alternative<HomFunctional>(zero));
  CHECK(std::get<HomFunctional>(zero).is_zero());
}

TEST_CASE("additivity bridge between residual scan and k check") {
  Sampler rng(43);
  for (int t = 0; t < 30; ++t) {
    const int r = 1 + t % 3;
    const KMap k = t % 3 == 0 ? KMap(FiniteKMap::restrict(rng.hom(1), r)) : KMap(rng.indicator(1, r));
    const bool scan_empty = residual_scan(make_delta_k(k, r)).empty();
    bool inside = false;
    for (const auto& w : k_compatibility_check(k, r).witnesses) inside = inside || (w.u * w.v).sup_norm() <= r;
    CHECK(scan_empty == !inside);
  }
}

TEST_CASE("non-additive maps give the predicted residuals") {
  Sampler rng(44);
  for (int t = 0; t < 10; ++t) {
    const auto k = rng.indicator(1, 2);
    const auto d = make_delta_k(k, 3);
    const auto w = residual_scan(d);
    CHECK_FALSE(w.empty());
    for (const auto& e : w) {
      const Monomial z12 = e.z1 * e.z2;
      Wedge2Element want(1);
      want.add_term(z12, one1, (k(z12) - k(e.z1) - k(e.z2)) * intersection_form(e.z1, e.z2));
      CHECK(e.residual == want);
    }
  }
}

TEST_CASE("flavor bridge") {
  Sampler rng(45);
  for (int t = 0; t < 10; ++t) {
    const auto k = rng.hom(1 + t % 2);
    const int r = t % 2 == 0 ? 3 : 1;
    CHECK(tensor_cochain_to_wedge(make_delta_k_left(k, r) - make_delta_k_right(k, r)) == make_delta_k(k, r));
  }
}

TEST_CASE("non-coboundary certificate") {
  const auto w = noncoboundary_certificate(make_delta_k(HomFunctional({0, 3}), 2));
  REQUIRE(w.has_value());
  CHECK(*w == y_1);
  CHECK(noncoboundary_certificate(make_delta_k(HomFunctional({2, 0}), 2)) == x_1);
  CHECK_FALSE(noncoboundary_certificate(WedgeCochain(1, 2)).has_value());
}

TEST_CASE("certificate soundness scan against the brute-force count") {
  const auto par = certificate_soundness_scan(1, 2, Exec::parallel);
  CHECK(par.triples_checked == 7200);
  CHECK(par.nonzero == 0);
  CHECK(certificate_soundness_scan(1, 2, Exec::serial) == par);
  CHECK(certificate_soundness_scan(2, 1, Exec::serial) == certificate_soundness_scan(2, 1, Exec::parallel));
}

TEST_CASE("linear evaluation of cochains") {
  const auto d = make_delta_k(HomFunctional({1, 1}), 2);
  const LaurentElement p(1, {{x_1, 2}, {Monomial{1, 1}, -1}});
  Wedge2Element want(1);
  want.add_term(x_1, one1, 2).add_term(Monomial{1, 1}, one1, -2);
  CHECK(evaluate_linear(d, p) == want);
  CHECK_THROWS_AS(evaluate_linear(d, LaurentElement::monomial(Monomial{3, 0})), WindowError);
}

TEST_CASE("cochain and k-map serialization") {
  Sampler rng(46);
  const AnyCochain a = make_delta_k_left(rng.hom(2), 1);
  CHECK(read<AnyCochain>(parse_json(dump_json(Json(a)))) == a);
  const AnyCochain b = make_delta_k(rng.indicator(1, 2), 2);
  CHECK(read<AnyCochain>(parse_json(dump_json(Json(b)))) == b);
  const KMap h = rng.hom(3);
  CHECK(read<KMap>(parse_json(dump_json(Json(h)))) == h);
  const KMap f = quadratic_a1(2);
  CHECK(read<KMap>(parse_json(dump_json(Json(f)))) == f);
  const Json j = Json(make_delta_k(HomFunctional({1, 0}), 1));
  CHECK(j.at("flavor") == "wedge");
  CHECK(j.at("domain_radius") == 1);
  // Entries outside the declared window are rejected.
  Json bad = j;
  bad["domain_radius"] = 0;
  CHECK_THROWS_AS(read<AnyCochain>(bad), ParseError);
}
