#include "w1g/cochain.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <optional>

namespace w1g {

HomFunctional::HomFunctional(std::vector<Rational> basis_values)
    : basis_values_(std::move(basis_values)) {
  if (basis_values_.empty() || basis_values_.size() % 2 != 0)
    throw DimensionError("HomFunctional needs 2g basis values");
  (void)Monomial(genus());
}

HomFunctional HomFunctional::coordinate(int genus, int index) {
  std::vector<Rational> v(static_cast<std::size_t>(2 * genus));
  if (index < 0 || index >= 2 * genus) throw DimensionError("coordinate index out of range");
  v[static_cast<std::size_t>(index)] = 1;
  return HomFunctional(std::move(v));
}

Rational HomFunctional::operator()(const Monomial& m) const {
  require_same_genus(genus(), m.genus(), "HomFunctional evaluation");
  Rational s = 0;
  for (int i = 0; i < m.size(); ++i)
    if (m[i] != 0) s += basis_values_[static_cast<std::size_t>(i)] * static_cast<long>(m[i]);
  return s;
}

bool HomFunctional::is_zero() const {
  return std::all_of(basis_values_.begin(), basis_values_.end(),
                     [](const Rational& q) { return q == 0; });
}

FiniteKMap FiniteKMap::indicator(const Monomial& point, const Rational& value) {
  FiniteKMap k(point.genus());
  k.set(point, value);
  return k;
}

FiniteKMap FiniteKMap::restrict(const HomFunctional& hom, int radius) {
  FiniteKMap k(hom.genus());
  for (const auto& m : box_monomials(hom.genus(), radius)) k.set(m, hom(m));
  return k;
}

FiniteKMap& FiniteKMap::set(const Monomial& m, const Rational& v) {
  require_same_genus(genus_, m.genus(), "FiniteKMap");
  if (v == 0)
    values_.erase(m);
  else
    values_.insert_or_assign(m, v);
  return *this;
}

Rational FiniteKMap::operator()(const Monomial& m) const {
  require_same_genus(genus_, m.genus(), "FiniteKMap evaluation");
  auto it = values_.find(m);
  return it == values_.end() ? Rational(0) : it->second;
}

Rational evaluate(const KMap& k, const Monomial& m) {
  return std::visit([&](const auto& f) { return f(m); }, k);
}

int genus_of(const KMap& k) {
  return std::visit([](const auto& f) { return f.genus(); }, k);
}

WedgeCochain make_delta_k(const KMap& k, int domain_radius) {
  const int g = genus_of(k);
  WedgeCochain out(g, domain_radius);
  const Monomial one(g);
  for (const auto& z : box_monomials(g, domain_radius)) {
    Wedge2Element w(g);
    w.add_term(z, one, evaluate(k, z));
    out.set(z, std::move(w));
  }
  return out;
}

TensorCochain make_delta_k_left(const KMap& k, int domain_radius) {
  const int g = genus_of(k);
  TensorCochain out(g, domain_radius);
  const Monomial one(g);
  for (const auto& z : box_monomials(g, domain_radius)) {
    Tensor2Element t(g);
    t.add_term(z, one, evaluate(k, z));
    out.set(z, std::move(t));
  }
  return out;
}

TensorCochain make_delta_k_right(const KMap& k, int domain_radius) {
  const int g = genus_of(k);
  TensorCochain out(g, domain_radius);
  const Monomial one(g);
  for (const auto& z : box_monomials(g, domain_radius)) {
    Tensor2Element t(g);
    t.add_term(one, z, evaluate(k, z));
    out.set(z, std::move(t));
  }
  return out;
}

TensorCochain make_delta0(const Rational& r, int genus, int domain_radius) {
  TensorCochain out(genus, domain_radius);
  const Monomial one(genus);
  Tensor2Element t(genus);
  t.add_term(one, one, r);
  out.set(one, std::move(t));
  return out;
}

namespace {

// Integer image of a cochain: coefficients scaled by a common denominator and
// monomials packed big-endian into fixed-width unsigned fields, so that key
// order equals lexicographic order and multiplying by Z adds shift(Z).
struct PackedTerm {
  std::uint32_t u;
  std::uint32_t v;
  Monomial mu;
  Monomial mv;
  std::int64_t coef;
};

struct PackedCochain {
  int bits = 0;
  std::vector<std::vector<PackedTerm>> values;  // by box index
  std::vector<std::int64_t> shift;              // by box index
};

template <class V>
std::optional<PackedCochain> pack_cochain(const Cochain<V>& d, const std::vector<Monomial>& dom) {
  const int g = d.genus();
  Integer den = 1;
  int reach = d.domain_radius();
  for (const auto& [z, v] : d.entries())
    for (const auto& [k, c] : v.terms()) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
      reach = std::max({reach, static_cast<int>(k.first.sup_norm()), static_cast<int>(k.second.sup_norm())});
    }
  // Every monomial met in a residual has norm <= reach + domain radius.
  const long span = 2L * (static_cast<long>(reach) + d.domain_radius()) + 1;
  const int bits = std::bit_width(static_cast<unsigned long>(span));
  if (bits * 2 * g > 32) return std::nullopt;
  const long offset = reach + d.domain_radius();
  auto key = [&](const Monomial& m) {
    std::uint32_t k = 0;
    for (int i = 0; i < 2 * g; ++i) k = (k << bits) | static_cast<std::uint32_t>(m[i] + offset);
    return k;
  };
  PackedCochain out;
  out.bits = bits;
  out.values.resize(dom.size());
  out.shift.resize(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    std::int64_t sh = 0;
    for (int j = 0; j < 2 * g; ++j) sh = sh * (std::int64_t{1} << bits) + dom[i][j];
    out.shift[i] = sh;
    for (const auto& [k, c] : d.at(dom[i]).terms()) {
      const Integer n = c.get_num() * (den / c.get_den());
      if (!n.fits_slong_p()) return std::nullopt;
      out.values[i].push_back({key(k.first), key(k.second), k.first, k.second, n.get_si()});
    }
  }
  return out;
}

// True iff i(Z1,Z2) D(Z1Z2) - Z1.D(Z2) + Z2.D(Z1) vanishes.
template <class V>
bool packed_residual_zero(const PackedCochain& p, std::size_t i1, std::size_t i2, std::size_t i12,
                          const Monomial& z1, const Monomial& z2,
                          std::vector<std::pair<std::uint64_t, __int128>>& acc) {
  acc.clear();
  auto push = [&](std::int64_t u, std::int64_t v, __int128 c) {
    if constexpr (V::flavor == Flavor::wedge) {
      if (u == v) return;
      if (u < v) {
        std::swap(u, v);
        c = -c;
      }
    }
    acc.emplace_back((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v), c);
  };
  if (const auto i = intersection_form(z1, z2); i != 0)
    for (const auto& t : p.values[i12]) push(t.u, t.v, static_cast<__int128>(t.coef) * i);
  auto act = [&](const Monomial& z, std::int64_t sh, std::size_t src, int sign) {
    for (const auto& t : p.values[src]) {
      if (const auto i = intersection_form(z, t.mu); i != 0)
        push(static_cast<std::int64_t>(t.u) + sh, t.v, static_cast<__int128>(t.coef) * i * sign);
      if (const auto i = intersection_form(z, t.mv); i != 0)
        push(t.u, static_cast<std::int64_t>(t.v) + sh, static_cast<__int128>(t.coef) * i * sign);
    }
  };
  act(z1, p.shift[i1], i2, -1);
  act(z2, p.shift[i2], i1, 1);
  std::sort(acc.begin(), acc.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t a = 0; a < acc.size();) {
    __int128 sum = 0;
    std::size_t b = a;
    for (; b < acc.size() && acc[b].first == acc[a].first; ++b) sum += acc[b].second;
    if (sum != 0) return false;
    a = b;
  }
  return true;
}

}  // namespace

template <class V>
std::vector<ResidualWitness<V>> residual_scan(const Cochain<V>& d, Exec exec) {
  const auto dom = box_monomials(d.genus(), d.domain_radius());
  const auto n = static_cast<std::ptrdiff_t>(dom.size());
  const int radius = d.domain_radius();
  const auto packed = exec == Exec::serial ? std::nullopt : pack_cochain(d, dom);
  // Row i collects witnesses with z1 = dom[i]; concatenating rows in order
  // gives the lexicographic order independent of the schedule.
  std::vector<std::vector<ResidualWitness<V>>> rows(dom.size());
  auto scan_row = [&](std::ptrdiff_t i, std::vector<std::pair<std::uint64_t, __int128>>& acc) {
    const Monomial& z1 = dom[static_cast<std::size_t>(i)];
    for (std::ptrdiff_t j = 0; j < i; ++j) {
      const Monomial& z2 = dom[static_cast<std::size_t>(j)];
      const Monomial z12 = z1 * z2;
      if (z12.sup_norm() > radius) continue;
      if (packed && packed_residual_zero<V>(*packed, static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                            box_index(z12, radius), z1, z2, acc))
        continue;
      V r = cocycle_residual(d, z1, z2);
      if (!r.is_zero()) rows[static_cast<std::size_t>(i)].push_back({z1, z2, std::move(r)});
    }
  };
  if (exec == Exec::serial) {
    std::vector<std::pair<std::uint64_t, __int128>> acc;
    for (std::ptrdiff_t i = 0; i < n; ++i) scan_row(i, acc);
  } else {
#pragma omp parallel
    {
      std::vector<std::pair<std::uint64_t, __int128>> acc;
#pragma omp for schedule(dynamic, 4)
      for (std::ptrdiff_t i = 0; i < n; ++i) scan_row(i, acc);
    }
  }
  std::vector<ResidualWitness<V>> out;
  for (auto& r : rows)
    for (auto& w : r) out.push_back(std::move(w));
  return out;
}

template std::vector<ResidualWitness<Tensor2Element>> residual_scan(const TensorCochain&, Exec);
template std::vector<ResidualWitness<Wedge2Element>> residual_scan(const WedgeCochain&, Exec);

KCheckResult k_compatibility_check(const KMap& k, int box_radius) {
  if (box_radius < 1) throw WindowError("box radius must be >= 1");
  const int g = genus_of(k);
  KCheckResult out{evaluate(k, Monomial(g)), {}};
  const auto box = box_monomials(g, box_radius);
  std::vector<Rational> kv;
  kv.reserve(box.size());
  for (const auto& m : box) kv.push_back(evaluate(k, m));
  for (std::size_t i = 0; i < box.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (intersection_form(box[i], box[j]) == 0) continue;
      Rational defect = evaluate(k, box[i] * box[j]) - kv[i] - kv[j];
      if (defect != 0) out.witnesses.push_back({box[i], box[j], std::move(defect)});
    }
  return out;
}

std::variant<HomFunctional, ExtendFailure> extend_to_hom(const KMap& k, int box_radius) {
  if (box_radius < 1) throw WindowError("box radius must be >= 1 to contain the basis");
  const int g = genus_of(k);
  std::vector<Rational> basis;
  for (const auto& e : generator_monomials(g)) basis.push_back(evaluate(k, e));
  HomFunctional hom(std::move(basis));
  for (const auto& m : box_monomials(g, box_radius)) {
    if (m.is_unit()) continue;
    Rational kv = evaluate(k, m), hv = hom(m);
    if (kv != hv) return ExtendFailure{m, std::move(kv), std::move(hv)};
  }
  return hom;
}

std::optional<Monomial> noncoboundary_certificate(const WedgeCochain& d) {
  const int g = d.genus();
  const Monomial one(g);
  auto witness = [&](const Monomial& z) {
    return d.in_window(z) && !z.is_unit() && d.at(z).coefficient(z, one) != 0;
  };
  for (const auto& z : generator_monomials(g))
    if (witness(z)) return z;
  for (const auto& [z, v] : d.entries())
    if (witness(z)) return z;
  return std::nullopt;
}

namespace {

SoundnessScan soundness_reference(int genus, int radius) {
  SoundnessScan out{genus, radius, 0, 0};
  const auto box = box_monomials(genus, radius);
  const Monomial one(genus);
  for (const auto& z : box) {
    if (z.is_unit()) continue;
    for (std::size_t i = 0; i < box.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) {
        Wedge2Element w(genus);
        w.add_term(box[i], box[j], 1);
        const auto image = act_monomial(z, w);
        ++out.triples_checked;
        if (image.coefficient(z, one) != 0) ++out.nonzero;
      }
  }
  return out;
}

// Coefficient of Z ^ 1 in i(Z,u) Zu ^ v + i(Z,v) u ^ Zv over all v < u, using
// [a ^ b : Z ^ 1] = [a=Z][b=1] - [a=1][b=Z]. Keys are packed exponent vectors
// (products are sums, the unit is 0). Selections are written as masks so the
// loop vectorizes; K is the narrowest integer holding every key.
template <class K>
std::uint64_t count_nonzero_row(K kz, K ku, K iu, const K* keys, const K* ivs, std::size_t count) {
  const K kzu = kz + ku;
  const K a1 = -static_cast<K>(kzu == kz);
  const K a2 = -static_cast<K>(kzu == 0);
  const K b1 = -static_cast<K>(ku == kz);
  const K b2 = -static_cast<K>(ku == 0);
  std::uint64_t local = 0;
  for (std::size_t vi = 0; vi < count; ++vi) {
    const K kv = keys[vi];
    const K iv = ivs[vi];
    const K kzv = kz + kv;
    const K t1 = (iu & a1 & -static_cast<K>(kv == 0)) - (iu & a2 & -static_cast<K>(kv == kz));
    const K t2 = (iv & b1 & -static_cast<K>(kzv == 0)) - (iv & b2 & -static_cast<K>(kzv == kz));
    local += static_cast<std::uint64_t>((t1 + t2) != 0);
  }
  return local;
}

// Exponent vectors packed linearly as sum_i e_i * 2^(bits*i); injective while
// every coordinate stays inside (-2^(bits-1), 2^(bits-1)), and products of
// monomials become sums of keys.
template <class K>
SoundnessScan soundness_packed(int genus, int radius, int bits) {
  const int coords = 2 * genus;
  const auto box = box_monomials(genus, radius);
  const std::size_t n = box.size();
  std::vector<K> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t k = 0;
    for (int c = coords - 1; c >= 0; --c) k = k * (std::int64_t{1} << bits) + box[i][c];
    key[i] = static_cast<K>(k);
  }
  std::uint64_t checked = 0, nonzero = 0;
  const auto nz = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic) reduction(+ : checked, nonzero)
  for (std::ptrdiff_t zi = 0; zi < nz; ++zi) {
    const Monomial& z = box[static_cast<std::size_t>(zi)];
    if (z.is_unit()) continue;
    const K kz = key[static_cast<std::size_t>(zi)];
    std::vector<K> iz(n);
    for (std::size_t vi = 0; vi < n; ++vi) iz[vi] = static_cast<K>(intersection_form(z, box[vi]));
    for (std::size_t ui = 1; ui < n; ++ui) {
      nonzero += count_nonzero_row<K>(kz, key[ui], iz[ui], key.data(), iz.data(), ui);
      checked += ui;
    }
  }
  return {genus, radius, checked, nonzero};
}

SoundnessScan soundness_packed(int genus, int radius) {
  // Sums of two box vectors reach 2*radius in absolute value.
  const int bits = std::bit_width(static_cast<unsigned>(4 * radius + 1)) + 1;
  const int total = bits * 2 * genus;
  if (total <= 30) return soundness_packed<std::int32_t>(genus, radius, bits);
  if (total <= 62) return soundness_packed<std::int64_t>(genus, radius, bits);
  return soundness_reference(genus, radius);
}

}  // namespace

SoundnessScan certificate_soundness_scan(int genus, int radius, Exec exec) {
  (void)Monomial(genus);
  if (radius < 0) throw WindowError("negative radius");
  return exec == Exec::serial ? soundness_reference(genus, radius) : soundness_packed(genus, radius);
}

WedgeCochain tensor_cochain_to_wedge(const TensorCochain& c) {
  WedgeCochain out(c.genus(), c.domain_radius());
  for (const auto& [z, v] : c.entries()) out.set(z, tensor_to_wedge(v));
  return out;
}

TensorCochain wedge_cochain_to_tensor(const WedgeCochain& c) {
  TensorCochain out(c.genus(), c.domain_radius());
  for (const auto& [z, v] : c.entries()) out.set(z, wedge_to_tensor(v));
  return out;
}

}  // namespace w1g
