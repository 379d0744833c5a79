#include "reference.hpp"

#include "w1g/random.hpp"
#include "w1g/serialize.hpp"

#include <doctest.h>

using namespace w1g;

TEST_CASE("rational parsing and canonical form") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(parse_rational("8/4")) == "2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("6/-4"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  // Exactness beyond 64 bits.
  const Rational big = parse_rational("123456789012345678901234567890/7");
  CHECK(big * 7 == parse_rational("123456789012345678901234567890"));
}

TEST_CASE("monomial construction and ordering") {
  const Monomial one(1);
  CHECK(one.is_unit());
  CHECK(Monomial::x(1, 1) == Monomial{1, 0});
  CHECK(Monomial::y(2, 2) == Monomial{0, 0, 0, 1});
  CHECK(Monomial{2, -1}.sup_norm() == 2);
  CHECK(Monomial{0, 1} < Monomial{1, -5});
  CHECK_THROWS_AS(Monomial(0), DimensionError);
  CHECK_THROWS_AS(Monomial(kMaxGenus + 1), DimensionError);
  CHECK_THROWS_AS((Monomial{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(Monomial::x(2, 3), DimensionError);
}

TEST_CASE("intersection form examples") {
  CHECK(intersection_form(Monomial{1, 0}, Monomial{0, 1}) == 1);
  CHECK(intersection_form(Monomial{2, 3}, Monomial{1, -1}) == -5);
  CHECK(intersection_form(Monomial{3, -2, 1, 4}, Monomial{3, -2, 1, 4}) == 0);
  CHECK(intersection_form(Monomial{1, 0, 0, 2}, Monomial{0, 1, 3, 0}) == 1 - 6);
  CHECK_THROWS_AS(intersection_form(Monomial{1, 0}, Monomial{1, 0, 0, 0}), DimensionError);
}

TEST_CASE("monomial product is the lattice group law") {
  CHECK(Monomial{1, 0} * Monomial{0, 1} == Monomial{1, 1});
  CHECK(Monomial{2, -1} * Monomial{2, -1} == Monomial{4, -2});
  const Monomial u{3, -2, 0, 1};
  CHECK((u * u.inverse()).is_unit());
  CHECK(u * Monomial(2) == u);
  CHECK_THROWS_AS((Monomial{1, 0} * Monomial{1, 0, 0, 0}), DimensionError);
}

TEST_CASE("box enumeration is lexicographic and indexable") {
  const auto box = box_monomials(2, 1);
  REQUIRE(box.size() == box_size(2, 1));
  CHECK(box.size() == 81);
  for (std::size_t i = 0; i < box.size(); ++i) {
    CHECK(box_index(box[i], 1) == i);
    if (i > 0) CHECK(box[i - 1] < box[i]);
  }
  CHECK_THROWS_AS(box_index(Monomial{2, 0}, 1), WindowError);
  CHECK(generator_monomials(2) ==
        std::vector<Monomial>{Monomial{1, 0, 0, 0}, Monomial{0, 1, 0, 0}, Monomial{0, 0, 1, 0}, Monomial{0, 0, 0, 1}});
}

TEST_CASE("laurent elements stay canonical") {
  LaurentElement p(1);
  p.add_term(Monomial{1, 0}, 2).add_term(Monomial{1, 0}, -2);
  CHECK(p.is_zero());
  const LaurentElement a(1, {{Monomial{1, 0}, 1}, {Monomial{0, 1}, Rational(1, 2)}});
  const LaurentElement b(1, {{Monomial{1, 0}, -1}});
  CHECK((a + b).size() == 1);
  CHECK((a * Rational(0)).is_zero());
  CHECK((a - a).is_zero());
  const LaurentElement sq = a * a;
  CHECK(sq.coefficient(Monomial{2, 0}) == 1);
  CHECK(sq.coefficient(Monomial{1, 1}) == 1);
  CHECK(sq.coefficient(Monomial{0, 2}) == Rational(1, 4));
  CHECK_THROWS_AS(a + LaurentElement(2), DimensionError);
}

TEST_CASE("bracket examples") {
  const auto x = LaurentElement::monomial(Monomial{1, 0});
  const auto y = LaurentElement::monomial(Monomial{0, 1});
  CHECK(bracket(x, y) == LaurentElement::monomial(Monomial{1, 1}));
  CHECK(bracket(x, LaurentElement::monomial(Monomial{2, 1})) == LaurentElement::monomial(Monomial{3, 1}));
  const LaurentElement p(1, {{Monomial{1, 2}, 3}, {Monomial{-1, 0}, Rational(-1, 2)}});
  CHECK(bracket(p, p).is_zero());
  CHECK(bracket(LaurentElement::monomial(Monomial(1)), p).is_zero());
  CHECK_THROWS_AS(bracket(x, LaurentElement(2)), DimensionError);
}

TEST_CASE("bracket agrees with the dense term-pair oracle") {
  Sampler rng(11);
  for (int t = 0; t < 200; ++t) {
    const int g = 1 + static_cast<int>(t % 3);
    const auto p = rng.laurent(g, 4, 8);
    const auto q = rng.laurent(g, 4, 8);
    CHECK(ref::poly(bracket(p, q)) == ref::bracket(p, q));
  }
}

TEST_CASE("Poisson laws on random elements up to genus 3") {
  Sampler rng(2024);
  for (int t = 0; t < 150; ++t) {
    const int g = 1 + static_cast<int>(t % 3);
    const auto p = rng.laurent(g, 4, 8);
    const auto q = rng.laurent(g, 4, 8);
    const auto r = rng.laurent(g, 4, 8);
    CHECK((bracket(p, q) + bracket(q, p)).is_zero());
    CHECK((bracket(p, bracket(q, r)) + bracket(q, bracket(r, p)) + bracket(r, bracket(p, q))).is_zero());
    CHECK(bracket(p, q * r) == bracket(p, q) * r + q * bracket(p, r));
    CHECK(bracket(LaurentElement::monomial(Monomial(g), rng.coefficient()), p).is_zero());
  }
}

TEST_CASE("laurent serialization round-trips bit-exactly") {
  Sampler rng(5);
  for (int t = 0; t < 50; ++t) {
    const auto p = rng.laurent(1 + t % 3, 3, 6);
    const std::string text = dump_json(Json(p));
    const auto back = read<LaurentElement>(parse_json(text));
    CHECK(back == p);
    CHECK(dump_json(Json(back)) == text);
  }
  const Json zero = LaurentElement(2);
  CHECK(zero.at("terms").is_array());
  CHECK(zero.at("terms").empty());
  const Json one = LaurentElement::monomial(Monomial(2));
  CHECK(one.at("terms").size() == 1);
  CHECK_THROWS_AS(read<LaurentElement>(parse_json(R"({"genus":1,"terms":[{"exp":[1],"coef":"1"}]})")), ParseError);
  CHECK_THROWS_AS(read<LaurentElement>(parse_json(R"({"genus":1,"terms":[{"exp":[1,0],"coef":1.5}]})")), ParseError);
}
