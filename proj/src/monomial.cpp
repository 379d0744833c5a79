#include "w1g/monomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace w1g {

namespace {

void check_genus(int genus) {
  if (genus < 1 || genus > kMaxGenus)
    throw DimensionError("genus " + std::to_string(genus) + " outside [1, " +
                         std::to_string(kMaxGenus) + "]");
}

}  // namespace

Monomial::Monomial(int genus) : genus_(genus) { check_genus(genus); }

Monomial::Monomial(std::initializer_list<Exponent> exponents)
    : Monomial(from_exponents(std::span<const Exponent>(exponents.begin(), exponents.size()))) {}

Monomial Monomial::from_exponents(std::span<const Exponent> exponents) {
  if (exponents.empty() || exponents.size() % 2 != 0)
    throw DimensionError("exponent vector length must be a positive even number");
  Monomial m(static_cast<int>(exponents.size() / 2));
  std::copy(exponents.begin(), exponents.end(), m.exps_.begin());
  return m;
}

Monomial Monomial::x(int genus, int i) {
  Monomial m(genus);
  if (i < 1 || i > genus) throw DimensionError("generator index out of range");
  m.exps_[static_cast<std::size_t>(2 * (i - 1))] = 1;
  return m;
}

Monomial Monomial::y(int genus, int i) {
  Monomial m(genus);
  if (i < 1 || i > genus) throw DimensionError("generator index out of range");
  m.exps_[static_cast<std::size_t>(2 * (i - 1) + 1)] = 1;
  return m;
}

bool Monomial::is_unit() const {
  return std::all_of(exponents().begin(), exponents().end(), [](Exponent e) { return e == 0; });
}

Monomial::Exponent Monomial::sup_norm() const {
  Exponent r = 0;
  for (auto e : exponents()) r = std::max(r, static_cast<Exponent>(std::abs(e)));
  return r;
}

Monomial Monomial::inverse() const {
  Monomial m = *this;
  for (int i = 0; i < size(); ++i) {
    if (m.exps_[static_cast<std::size_t>(i)] == std::numeric_limits<Exponent>::min())
      throw std::overflow_error("exponent overflow in inverse");
    m.exps_[static_cast<std::size_t>(i)] = -m.exps_[static_cast<std::size_t>(i)];
  }
  return m;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  require_same_genus(genus_, other.genus_, "monomial product");
  for (int i = 0; i < size(); ++i) {
    auto& e = exps_[static_cast<std::size_t>(i)];
    if (__builtin_add_overflow(e, other.exps_[static_cast<std::size_t>(i)], &e))
      throw std::overflow_error("exponent overflow in monomial product");
  }
  return *this;
}

std::string Monomial::str() const {
  std::string s = "(";
  for (int i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += std::to_string(exps_[static_cast<std::size_t>(i)]);
  }
  return s + ")";
}

void require_same_genus(int a, int b, const char* what) {
  if (a != b)
    throw DimensionError(std::string("genus mismatch in ") + what + ": " + std::to_string(a) +
                         " vs " + std::to_string(b));
}

std::int64_t intersection_form(const Monomial& u, const Monomial& v) {
  require_same_genus(u.genus(), v.genus(), "intersection_form");
  std::int64_t s = 0;
  for (int j = 0; j < u.genus(); ++j) {
    const std::int64_t a = u[2 * j], b = u[2 * j + 1];
    const std::int64_t a2 = v[2 * j], b2 = v[2 * j + 1];
    s += a * b2 - a2 * b;
  }
  return s;
}

std::vector<Monomial> box_monomials(int genus, int radius) {
  if (radius < 0) throw WindowError("negative box radius");
  const int n = 2 * genus;
  std::vector<Monomial> out;
  out.reserve(box_size(genus, radius));
  std::vector<Monomial::Exponent> e(static_cast<std::size_t>(n), -radius);
  while (true) {
    out.push_back(Monomial::from_exponents(std::span<const Monomial::Exponent>(e)));
    int i = n - 1;
    while (i >= 0 && e[static_cast<std::size_t>(i)] == radius) {
      e[static_cast<std::size_t>(i)] = -radius;
      --i;
    }
    if (i < 0) break;
    ++e[static_cast<std::size_t>(i)];
  }
  return out;
}

std::size_t box_index(const Monomial& m, int radius) {
  const auto side = static_cast<std::size_t>(2 * radius + 1);
  std::size_t idx = 0;
  for (auto e : m.exponents()) {
    if (e < -radius || e > radius)
      throw WindowError("monomial " + m.str() + " outside box of radius " + std::to_string(radius));
    idx = idx * side + static_cast<std::size_t>(e + radius);
  }
  return idx;
}

std::vector<Monomial> generator_monomials(int genus) {
  std::vector<Monomial> out;
  for (int i = 1; i <= genus; ++i) {
    out.push_back(Monomial::x(genus, i));
    out.push_back(Monomial::y(genus, i));
  }
  return out;
}

}  // namespace w1g
