#include "w1g/random.hpp"
#include "w1g/serialize.hpp"
#include "w1g/turaev.hpp"

#include <doctest.h>

using namespace w1g;

TEST_CASE("gamma and the target wedge") {
  CHECK(turaev_gamma(2) == Monomial{1, 0, -1, 0});
  CHECK(turaev_gamma(3) == Monomial{1, 0, -1, 0, 0, 0});
  const auto t = turaev_target(2);
  CHECK(t.first == Monomial{1, 0, 0, 0});
  CHECK(t.second == Monomial{0, 0, -1, 0});
  CHECK_THROWS_AS(turaev_gamma(1), DimensionError);
}

TEST_CASE("gamma coefficient examples") {
  const Monomial x1 = Monomial::x(2, 1), y1 = Monomial::y(2, 1), y2 = Monomial::y(2, 2);
  const Monomial x2inv = Monomial::x(2, 2).inverse();
  CHECK(gamma_coefficient(x1, x2inv, 2) == 0);
  CHECK(gamma_coefficient(y1, y2, 2) == 0);
  CHECK(gamma_coefficient(y1, y1, 2) == 0);
  CHECK_THROWS_AS(gamma_coefficient(Monomial{1, 0}, Monomial{0, 1}, 1), DimensionError);
}

TEST_CASE("scan counts match the brute-force oracle") {
  const auto s1 = nontriviality_scan(2, 1);
  CHECK(s1.pairs_checked == 3240);
  CHECK(s1.nonzero == 0);
  CHECK(s1.all_zero);
  CHECK(s1.nontrivial_in_window);
  CHECK(s1.turaev_value == 1);
  CHECK_FALSE(s1.first_nonzero.has_value());
  CHECK(nontriviality_scan(2, 1, Exec::serial) == s1);

  const auto s2 = nontriviality_scan(2, 2);
  CHECK(s2.pairs_checked == 195000);
  CHECK(s2.all_zero);

  const auto s0 = nontriviality_scan(2, 0);
  CHECK(s0.pairs_checked == 0);
  CHECK(s0.all_zero);

  CHECK(nontriviality_scan(3, 1).all_zero);
}

TEST_CASE("linearity bridge for the gamma coefficient") {
  Sampler rng(61);
  const auto gamma = LaurentElement::monomial(turaev_gamma(2));
  const auto [tu, tv] = turaev_target(2);
  for (int t = 0; t < 50; ++t) {
    const auto w = rng.wedge(2, 2, 8);
    Rational sum = 0;
    for (const auto& [k, c] : w.terms()) sum += c * gamma_coefficient(k.first, k.second, 2);
    CHECK(coboundary_value(w, gamma).coefficient(tu, tv) == sum);
  }
}

TEST_CASE("turaev report round-trip") {
  const auto s = nontriviality_scan(2, 1);
  CHECK(read<TuraevReport>(parse_json(dump_json(Json(s)))) == s);
}
