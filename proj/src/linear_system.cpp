#include "w1g/linear_system.hpp"

#include <algorithm>
#include <limits>

namespace w1g {

std::int32_t LinearSystem::intern(const Monomial& m) {
  require_same_genus(genus_, m.genus(), "linear system key");
  auto [it, inserted] = monomial_ids_.try_emplace(m, static_cast<std::int32_t>(monomials_.size()));
  if (inserted) monomials_.push_back(m);
  return it->second;
}

LinearSystem::Col LinearSystem::add_variable(const VarIndex& v) {
  if (!vars_.empty() && !(variable(static_cast<Col>(vars_.size() - 1)) < v))
    throw std::invalid_argument("variables must be added in increasing VarIndex order");
  if (vars_.size() >= static_cast<std::size_t>(std::numeric_limits<Col>::max()))
    throw std::length_error("too many variables");
  vars_.push_back({intern(v.z), intern(v.u), intern(v.v)});
  return static_cast<Col>(vars_.size() - 1);
}

VarIndex LinearSystem::variable(Col c) const {
  const auto& ids = vars_.at(static_cast<std::size_t>(c));
  return {monomials_[static_cast<std::size_t>(ids[0])], monomials_[static_cast<std::size_t>(ids[1])],
          monomials_[static_cast<std::size_t>(ids[2])]};
}

std::optional<LinearSystem::Col> LinearSystem::find_variable(const VarIndex& v) const {
  std::size_t lo = 0, hi = vars_.size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (variable(static_cast<Col>(mid)) < v)
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < vars_.size() && variable(static_cast<Col>(lo)) == v) return static_cast<Col>(lo);
  return std::nullopt;
}

void LinearSystem::add_row(std::span<const std::pair<Col, Rational>> entries, const Rational& rhs,
                           const RowTag& tag) {
  Integer scale = rhs.get_den();
  for (const auto& [c, q] : entries) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
  std::vector<std::pair<Col, Integer>> ints;
  for (const auto& [c, q] : entries) {
    if (c < 0 || static_cast<std::size_t>(c) >= vars_.size()) throw std::out_of_range("unknown column");
    if (q != 0) ints.emplace_back(c, Integer(q.get_num() * (scale / q.get_den())));
  }
  std::sort(ints.begin(), ints.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge repeated columns
  std::vector<std::pair<Col, Integer>> merged;
  for (auto& e : ints) {
    if (!merged.empty() && merged.back().first == e.first)
      merged.back().second += e.second;
    else
      merged.push_back(std::move(e));
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  Integer r = rhs.get_num() * (scale / rhs.get_den());
  Integer g = r;
  for (const auto& [c, v] : merged) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  std::vector<Entry> out;
  out.reserve(merged.size());
  for (auto& [c, v] : merged) {
    if (g > 1) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    if (!v.fits_slong_p()) throw std::overflow_error("row coefficient exceeds 64 bits");
    out.push_back({c, v.get_si()});
  }
  if (g > 1) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), g.get_mpz_t());
  push_row(std::move(out), Rational(r), tag);
}

void LinearSystem::add_integer_row(std::span<const Entry> entries, const Rational& rhs,
                                   const RowTag& tag) {
  std::vector<Entry> out(entries.begin(), entries.end());
  std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  std::size_t w = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].col < 0 || static_cast<std::size_t>(out[i].col) >= vars_.size())
      throw std::out_of_range("unknown column");
    if (w > 0 && out[w - 1].col == out[i].col) {
      if (__builtin_add_overflow(out[w - 1].coef, out[i].coef, &out[w - 1].coef))
        throw std::overflow_error("row coefficient overflow");
    } else {
      out[w++] = out[i];
    }
  }
  out.resize(w);
  std::erase_if(out, [](const Entry& e) { return e.coef == 0; });
  if (rhs.get_den() != 1) {
    // Keep the stored right-hand side integral.
    const Integer& den = rhs.get_den();
    if (!den.fits_slong_p()) throw std::overflow_error("rhs denominator exceeds 64 bits");
    const long d = den.get_si();
    for (auto& e : out)
      if (__builtin_mul_overflow(e.coef, d, &e.coef)) throw std::overflow_error("row coefficient overflow");
    push_row(std::move(out), Rational(rhs.get_num()), tag);
    return;
  }
  push_row(std::move(out), rhs, tag);
}

void LinearSystem::push_row(std::vector<Entry> entries, Rational rhs, const RowTag& tag) {
  const std::size_t r = num_rows();
  entries_.insert(entries_.end(), entries.begin(), entries.end());
  row_start_.push_back(entries_.size());
  if (rhs != 0) rhs_.emplace(r, std::move(rhs));
  tag_kind_.push_back(static_cast<std::uint8_t>(tag.kind));
  if (tag.kind == RowTag::Kind::user) {
    tag_keys_.push_back({-1, -1, -1, -1});
  } else {
    tag_keys_.push_back({intern(tag.keys[0]), intern(tag.keys[1]), intern(tag.keys[2]),
                         intern(tag.keys[3])});
  }
}

Rational LinearSystem::rhs(std::size_t r) const {
  auto it = rhs_.find(r);
  return it == rhs_.end() ? Rational(0) : it->second;
}

RowTag LinearSystem::tag(std::size_t r) const {
  RowTag t;
  t.kind = static_cast<RowTag::Kind>(tag_kind_.at(r));
  if (t.kind != RowTag::Kind::user)
    for (int i = 0; i < 4; ++i)
      t.keys[static_cast<std::size_t>(i)] =
          monomials_[static_cast<std::size_t>(tag_keys_[r][static_cast<std::size_t>(i)])];
  return t;
}

Rational LinearSystem::evaluate_row(std::size_t r, const SparseVector& x) const {
  Rational s = -rhs(r);
  for (const auto& e : row(r)) {
    auto it = std::lower_bound(x.begin(), x.end(), e.col,
                               [](const auto& p, Col c) { return p.first < c; });
    if (it != x.end() && it->first == e.col) s += it->second * static_cast<long>(e.coef);
  }
  return s;
}

}  // namespace w1g
