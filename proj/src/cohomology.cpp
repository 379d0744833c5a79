#include "w1g/cohomology.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <limits>
#include <unordered_map>

namespace w1g {

std::string component_filter_name(const ComponentFilter& f) {
  if (std::holds_alternative<TensorComponent>(f)) return std::string(component_name(std::get<TensorComponent>(f)));
  if (std::holds_alternative<WedgeComponent>(f)) return std::string(component_name(std::get<WedgeComponent>(f)));
  return "all";
}

ComponentFilter parse_component_filter(Flavor flavor, std::string_view name) {
  if (name == "all") return {};
  if (flavor == Flavor::tensor) {
    for (auto c : {TensorComponent::unit_unit, TensorComponent::prime_unit, TensorComponent::unit_prime,
                   TensorComponent::prime_prime})
      if (component_name(c) == name) return c;
  } else {
    for (auto c : {WedgeComponent::prime_unit, WedgeComponent::prime_prime})
      if (component_name(c) == name) return c;
  }
  throw ParseError("unknown " + std::string(flavor_name(flavor)) + " component '" + std::string(name) + "'");
}

std::string_view truncation_name(Truncation t) {
  return t == Truncation::strict ? "strict" : "finite-support";
}

Truncation parse_truncation(std::string_view name) {
  if (name == "strict") return Truncation::strict;
  if (name == "finite-support") return Truncation::finite_support;
  throw ParseError("unknown truncation '" + std::string(name) + "'");
}

namespace {

void check_filter(Flavor flavor, const ComponentFilter& f) {
  if ((flavor == Flavor::tensor && std::holds_alternative<WedgeComponent>(f)) ||
      (flavor == Flavor::wedge && std::holds_alternative<TensorComponent>(f)))
    throw std::invalid_argument("component filter does not match the flavor");
}

bool in_component(const Monomial& u, const Monomial& v, const ComponentFilter& f) {
  if (auto t = std::get_if<TensorComponent>(&f)) return component_of_tensor(u, v) == *t;
  if (auto w = std::get_if<WedgeComponent>(&f)) return component_of_wedge(u, v) == *w;
  return true;
}

// Dense numbering of the canonical value pairs (u, v) with exponents in
// [-radius, radius] that belong to the component, consistent with lexicographic
// order on (u, v).
class PairSlots {
 public:
  PairSlots(int genus, int radius, Flavor flavor, const ComponentFilter& filter)
      : genus_(genus), radius_(radius), flavor_(flavor), filter_(filter) {
    check_filter(flavor, filter);
    n_ = static_cast<std::int64_t>(box_size(genus, radius));
    c_ = static_cast<std::int64_t>(box_index(Monomial(genus), radius));
    for (const auto& u : box_monomials(genus, radius))
      for (const auto& v : box_monomials(genus, radius)) {
        if (flavor == Flavor::wedge && !(u > v)) continue;
        if (in_component(u, v, filter)) pairs_.emplace_back(u, v);
      }
  }

  const std::vector<PairKey>& pairs() const { return pairs_; }
  std::int64_t count() const { return static_cast<std::int64_t>(pairs_.size()); }
  int radius() const { return radius_; }

  bool in_box(const Monomial& m) const { return m.sup_norm() <= radius_; }

  // Slot of a canonical pair already known to lie in the box, or -1 when it
  // is outside the component.
  std::int64_t slot(const Monomial& u, const Monomial& v) const {
    const auto a = static_cast<std::int64_t>(box_index(u, radius_));
    const auto b = static_cast<std::int64_t>(box_index(v, radius_));
    const auto skip = [&](std::int64_t i) { return i - (i > c_ ? 1 : 0); };
    if (flavor_ == Flavor::tensor) {
      const auto* t = std::get_if<TensorComponent>(&filter_);
      if (!t) return a * n_ + b;
      switch (*t) {
        case TensorComponent::unit_unit: return (a == c_ && b == c_) ? 0 : -1;
        case TensorComponent::prime_unit: return (b == c_ && a != c_) ? skip(a) : -1;
        case TensorComponent::unit_prime: return (a == c_ && b != c_) ? skip(b) : -1;
        case TensorComponent::prime_prime:
          return (a != c_ && b != c_) ? skip(a) * (n_ - 1) + skip(b) : -1;
      }
      return -1;
    }
    const auto* w = std::get_if<WedgeComponent>(&filter_);
    if (!w) return a * (a - 1) / 2 + b;
    switch (*w) {
      case WedgeComponent::prime_unit:
        if (a == c_) return skip(b);
        if (b == c_) return skip(a);
        return -1;
      case WedgeComponent::prime_prime:
        if (a == c_ || b == c_) return -1;
        return skip(a) * (skip(a) - 1) / 2 + skip(b);
    }
    return -1;
  }

 private:
  int genus_;
  int radius_;
  Flavor flavor_;
  ComponentFilter filter_;
  std::int64_t n_ = 0;
  std::int64_t c_ = 0;
  std::vector<PairKey> pairs_;
};

template <class V>
struct Known {
  const PinnedValues<V>* pinned = nullptr;
  const V* find(const Monomial& z) const {
    if (!pinned) return nullptr;
    auto it = pinned->find(z);
    return it == pinned->end() ? nullptr : &it->second;
  }
  bool contains(const Monomial& z) const { return pinned && pinned->count(z) != 0; }
};

struct PendingRow {
  std::vector<LinearSystem::Entry> entries;
  Rational rhs;
  RowTag tag;
};

template <class O>
LinearSystem build_system(int genus, int domain_radius, int value_radius, const SystemOptions& opts,
                          const PinnedValues<PairElement<O>>* pinned) {
  constexpr Flavor flavor = O::flavor;
  const ComponentFilter& filter = opts.component;
  const bool strict = opts.truncation == Truncation::strict;
  if (domain_radius < 1) throw WindowError("domain radius must be at least 1");
  if (value_radius < domain_radius) throw WindowError("value radius must be at least the domain radius");
  const PairSlots slots(genus, value_radius, flavor, filter);
  const auto domain = box_monomials(genus, domain_radius);
  const Known<PairElement<O>> known{pinned};

  LinearSystem sys(genus, flavor);
  sys.set_window(domain_radius, value_radius);
  // Unknown block for each non-pinned Z, in Z order.
  std::vector<std::int64_t> zblock(domain.size(), -1);
  std::int64_t nblocks = 0;
  for (std::size_t zi = 0; zi < domain.size(); ++zi)
    if (!known.contains(domain[zi])) zblock[zi] = nblocks++;
  if (nblocks * slots.count() >= std::numeric_limits<std::int32_t>::max())
    throw std::length_error("cocycle system too large");
  for (std::size_t zi = 0; zi < domain.size(); ++zi) {
    if (zblock[zi] < 0) continue;
    for (const auto& [u, v] : slots.pairs()) sys.add_variable({domain[zi], u, v});
  }

  std::vector<std::pair<std::size_t, std::size_t>> zpairs;
  for (std::size_t i = 0; i < domain.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if ((domain[i] * domain[j]).sup_norm() <= domain_radius) zpairs.emplace_back(i, j);

  // Strict rows live on window targets. Finite-support rows live on every
  // target reached from a window pair or a pinned value by the shifts below.
  auto targets_for = [&](const Monomial& z1, const Monomial& z2, const Monomial& z12) {
    if (strict) return slots.pairs();
    std::vector<PairKey> out;
    auto push = [&](Monomial a, Monomial b) {
      if (O::canonicalize(a, b) != 0 && in_component(a, b, filter)) out.emplace_back(a, b);
    };
    auto shifts = [&](const Monomial& a, const Monomial& b) {
      push(a, b);
      push(z1 * a, b);
      push(a, z1 * b);
      push(z2 * a, b);
      push(a, z2 * b);
    };
    for (const auto& [a, b] : slots.pairs()) shifts(a, b);
    for (const Monomial* z : {&z1, &z2, &z12})
      if (const auto* val = known.find(*z))
        for (const auto& [k, q] : val->terms()) shifts(k.first, k.second);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  };

  // All equations of one (Z1, Z2) pair, in target order.
  auto rows_for = [&](std::size_t i, std::size_t j, std::vector<PendingRow>& out) {
    const Monomial& z1 = domain[i];
    const Monomial& z2 = domain[j];
    const Monomial z12 = z1 * z2;
    const std::size_t i12 = box_index(z12, domain_radius);
    const Monomial z1inv = z1.inverse();
    const Monomial z2inv = z2.inverse();
    const std::int64_t i_12 = intersection_form(z1, z2);
    for (const auto& [u, v] : targets_for(z1, z2, z12)) {
      std::vector<LinearSystem::Entry> entries;
      Rational rhs = 0;
      bool keep = true;
      auto term = [&](std::int64_t coef, std::size_t zi, Monomial a, Monomial b) {
        if (coef == 0 || !keep) return;
        const int sign = O::canonicalize(a, b);
        if (sign == 0) return;
        if (const auto* val = known.find(domain[zi])) {
          const auto& terms = val->terms();
          auto it = terms.find({a, b});
          if (it != terms.end()) rhs -= it->second * static_cast<long>(sign * coef);
          return;
        }
        if (!slots.in_box(a) || !slots.in_box(b)) {
          if (strict) keep = false;
          return;
        }
        const std::int64_t s = slots.slot(a, b);
        if (s < 0) throw std::logic_error("cocycle equation leaves its component");
        entries.push_back({static_cast<LinearSystem::Col>(zblock[zi] * slots.count() + s), sign * coef});
      };
      term(i_12, i12, u, v);
      term(-intersection_form(z1, u), j, z1inv * u, v);
      term(-intersection_form(z1, v), j, u, z1inv * v);
      term(intersection_form(z2, u), i, z2inv * u, v);
      term(intersection_form(z2, v), i, u, z2inv * v);
      if (!keep || (entries.empty() && rhs == 0)) continue;
      out.push_back({std::move(entries), std::move(rhs), {RowTag::Kind::cocycle, {z1, z2, u, v}}});
    }
  };

  // Rows are generated in blocks of Z pairs (in parallel when asked) and
  // appended in the fixed pair order, so the system is schedule-independent.
  constexpr std::size_t kBlock = 64;
  std::vector<std::vector<PendingRow>> buffers(kBlock);
  for (std::size_t start = 0; start < zpairs.size(); start += kBlock) {
    const std::size_t len = std::min(kBlock, zpairs.size() - start);
    std::exception_ptr failure;
    auto work = [&](std::ptrdiff_t k) {
      try {
        auto& buf = buffers[static_cast<std::size_t>(k)];
        buf.clear();
        const auto& [i, j] = zpairs[start + static_cast<std::size_t>(k)];
        rows_for(i, j, buf);
      } catch (...) {
#pragma omp critical(w1g_build_failure)
        if (!failure) failure = std::current_exception();
      }
    };
    const auto n = static_cast<std::ptrdiff_t>(len);
    if (opts.exec == Exec::serial) {
      for (std::ptrdiff_t k = 0; k < n; ++k) work(k);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::ptrdiff_t k = 0; k < n; ++k) work(k);
    }
    if (failure) std::rethrow_exception(failure);
    for (std::size_t k = 0; k < len; ++k) {
      for (auto& row : buffers[k]) sys.add_integer_row(row.entries, row.rhs, row.tag);
      buffers[k].clear();
      buffers[k].shrink_to_fit();
    }
  }
  return sys;
}

std::vector<CertificateRow> certificate_rows(const LinearSystem& sys,
                                             const std::vector<std::pair<std::size_t, Rational>>& cert) {
  std::vector<CertificateRow> out;
  out.reserve(cert.size());
  for (const auto& [r, y] : cert) out.push_back({sys.tag(r), y});
  return out;
}

template <class O>
Cochain<PairElement<O>> typed_cochain(const LinearSystem& sys, const SparseVector& x) {
  Cochain<PairElement<O>> out(sys.genus(), std::max(sys.domain_radius(), 0));
  std::map<Monomial, PairElement<O>> vals;
  for (const auto& [c, q] : x) {
    if (q == 0) continue;
    const VarIndex vi = sys.variable(c);
    auto it = vals.try_emplace(vi.z, sys.genus()).first;
    it->second.add_term(vi.u, vi.v, q);
  }
  for (auto& [z, v] : vals) out.set(z, std::move(v));
  return out;
}

template <class O>
SparseVector typed_vector(const LinearSystem& sys, const Cochain<PairElement<O>>& c) {
  SparseVector out;
  for (const auto& [z, val] : c.entries())
    for (const auto& [k, q] : val.terms()) {
      const auto col = sys.find_variable({z, k.first, k.second});
      if (!col) throw WindowError("cochain value at " + z.str() + " has no unknown in the system");
      out.emplace_back(*col, q);
    }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

}  // namespace

LinearSystem build_cocycle_system(int genus, int domain_radius, int value_radius, Flavor flavor,
                                  const SystemOptions& opts) {
  if (flavor == Flavor::tensor)
    return build_system<TensorOrientation>(genus, domain_radius, value_radius, opts, nullptr);
  return build_system<WedgeOrientation>(genus, domain_radius, value_radius, opts, nullptr);
}

template <class V>
LinearSystem build_pinned_cocycle_system(int genus, int domain_radius, int value_radius,
                                         const PinnedValues<V>& pinned, const SystemOptions& opts) {
  for (const auto& [z, v] : pinned) {
    require_same_genus(genus, z.genus(), "pinned point");
    require_same_genus(genus, v.genus(), "pinned value");
    if (z.sup_norm() > domain_radius) throw WindowError("pinned point " + z.str() + " outside the domain");
  }
  if constexpr (V::flavor == Flavor::tensor)
    return build_system<TensorOrientation>(genus, domain_radius, value_radius, opts, &pinned);
  else
    return build_system<WedgeOrientation>(genus, domain_radius, value_radius, opts, &pinned);
}

template LinearSystem build_pinned_cocycle_system(int, int, int, const PinnedValues<Tensor2Element>&,
                                                  const SystemOptions&);
template LinearSystem build_pinned_cocycle_system(int, int, int, const PinnedValues<Wedge2Element>&,
                                                  const SystemOptions&);

AnyCochain cochain_from_vector(const LinearSystem& sys, const SparseVector& x) {
  if (sys.flavor() == Flavor::tensor) return typed_cochain<TensorOrientation>(sys, x);
  return typed_cochain<WedgeOrientation>(sys, x);
}

SparseVector vector_from_cochain(const LinearSystem& sys, const AnyCochain& c) {
  return std::visit(
      [&](const auto& cc) -> SparseVector {
        using C = std::decay_t<decltype(cc)>;
        if (C::flavor != sys.flavor()) throw std::invalid_argument("cochain flavor does not match the system");
        if constexpr (C::flavor == Flavor::tensor)
          return typed_vector<TensorOrientation>(sys, cc);
        else
          return typed_vector<WedgeOrientation>(sys, cc);
      },
      c);
}

SolveReport kernel_basis(const LinearSystem& sys, bool with_basis, Exec exec) {
  const auto res = eliminate(sys, SolveOptions{with_basis, false, exec});
  SolveReport rep;
  rep.genus = sys.genus();
  rep.flavor = sys.flavor();
  rep.domain_radius = sys.domain_radius();
  rep.value_radius = sys.value_radius();
  rep.num_vars = res.num_vars;
  rep.num_equations = res.num_rows;
  rep.rank = res.rank;
  rep.kernel_dim = res.kernel_dim();
  rep.components = res.components;
  rep.consistent = res.consistent;
  rep.certificate = certificate_rows(sys, res.certificate);
  if (with_basis)
    for (const auto& k : res.kernel) rep.kernel.push_back(cochain_from_vector(sys, k));
  return rep;
}

InteriorKernel interior_kernel(const LinearSystem& sys, int interior_radius, Exec exec) {
  InteriorKernel out;
  out.interior_radius = interior_radius;
  std::vector<char> interior(sys.num_vars(), 0);
  for (std::size_t c = 0; c < sys.num_vars(); ++c)
    if (sys.variable(static_cast<LinearSystem::Col>(c)).z.sup_norm() <= interior_radius) {
      interior[c] = 1;
      ++out.interior_vars;
    }
  const auto res = eliminate(sys, SolveOptions{true, false, exec});
  out.kernel_dim = res.kernel_dim();
  for (const auto& k : res.kernel) {
    WideSparseVector p;
    for (const auto& [c, q] : k)
      if (interior[static_cast<std::size_t>(c)]) p.emplace_back(c, q);
    if (!p.empty()) out.projected.push_back(std::move(p));
  }
  out.interior_dim = rank_of(out.projected, exec);
  return out;
}

bool interior_span_contains(const LinearSystem& sys, const InteriorKernel& k, const AnyCochain& c) {
  WideSparseVector p;
  for (const auto& [col, q] : vector_from_cochain(sys, c))
    if (sys.variable(col).z.sup_norm() <= k.interior_radius) p.emplace_back(col, q);
  if (p.empty()) return true;
  auto all = k.projected;
  all.push_back(std::move(p));
  return rank_of(all) == k.interior_dim;
}

// ---------------------------------------------------------------------------
// Coboundary membership.

template <class V>
CoboundaryResult<V> is_coboundary(const Cochain<V>& d, int coboundary_radius, Exec exec) {
  using O = std::conditional_t<V::flavor == Flavor::tensor, TensorOrientation, WedgeOrientation>;
  if (coboundary_radius < 0) throw WindowError("negative coboundary radius");
  const int genus = d.genus();
  const int reach = coboundary_radius + d.domain_radius();
  for (const auto& [z, val] : d.entries())
    for (const auto& [k, q] : val.terms())
      if (k.first.sup_norm() > reach || k.second.sup_norm() > reach)
        throw WindowError("value at " + z.str() + " has a term beyond the reach of the coboundary radius");

  const PairSlots slots(genus, coboundary_radius, V::flavor, {});
  LinearSystem sys(genus, V::flavor);
  sys.set_window(d.domain_radius(), coboundary_radius);
  const Monomial one(genus);
  for (const auto& [u, v] : slots.pairs()) sys.add_variable({one, u, v});

  const auto domain = box_monomials(genus, d.domain_radius());
  // For each Z: target pair -> row entries, plus the prescribed value.
  std::vector<std::vector<PendingRow>> per_z(domain.size());
  std::exception_ptr failure;
  auto work = [&](std::ptrdiff_t zi) {
    try {
      const Monomial& z = domain[static_cast<std::size_t>(zi)];
      std::map<PairKey, PendingRow> rows;
      auto at = [&](const Monomial& a, const Monomial& b) -> PendingRow& {
        auto [it, inserted] = rows.try_emplace({a, b});
        if (inserted) it->second.tag = {RowTag::Kind::coboundary, {z, a, b, one}};
        return it->second;
      };
      const auto& pairs = slots.pairs();
      for (std::size_t c = 0; c < pairs.size(); ++c) {
        const auto& [u, v] = pairs[c];
        auto add = [&](std::int64_t coef, Monomial a, Monomial b) {
          if (coef == 0) return;
          const int sign = O::canonicalize(a, b);
          if (sign == 0) return;
          at(a, b).entries.push_back({static_cast<LinearSystem::Col>(c), sign * coef});
        };
        add(intersection_form(z, u), z * u, v);
        add(intersection_form(z, v), u, z * v);
      }
      for (const auto& [k, q] : d.at(z).terms()) at(k.first, k.second).rhs = q;
      auto& out = per_z[static_cast<std::size_t>(zi)];
      for (auto& [k, row] : rows) out.push_back(std::move(row));
    } catch (...) {
#pragma omp critical(w1g_cob_failure)
      if (!failure) failure = std::current_exception();
    }
  };
  const auto nz = static_cast<std::ptrdiff_t>(domain.size());
  if (exec == Exec::serial) {
    for (std::ptrdiff_t k = 0; k < nz; ++k) work(k);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < nz; ++k) work(k);
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& rows : per_z) {
    for (auto& row : rows) sys.add_integer_row(row.entries, row.rhs, row.tag);
    rows.clear();
    rows.shrink_to_fit();
  }

  CoboundaryResult<V> out;
  out.coboundary_radius = coboundary_radius;
  out.num_vars = sys.num_vars();
  out.num_equations = sys.num_rows();
  const auto res = eliminate(sys, SolveOptions{false, true, exec});
  out.feasible = res.consistent;
  if (res.consistent) {
    V m(genus);
    for (const auto& [c, q] : res.solution) {
      const VarIndex vi = sys.variable(c);
      m.add_term(vi.u, vi.v, q);
    }
    bool ok = true;
    for (const auto& z : domain)
      if (!(act_monomial(z, m) == d.at(z))) {
        ok = false;
        break;
      }
    out.verified = ok;
    out.m = std::move(m);
  } else {
    out.certificate = certificate_rows(sys, res.certificate);
    out.verified = verify_certificate(sys, res.certificate);
    if constexpr (V::flavor == Flavor::wedge) out.absolute_witness = noncoboundary_certificate(d);
  }
  return out;
}

template CoboundaryResult<Tensor2Element> is_coboundary(const TensorCochain&, int, Exec);
template CoboundaryResult<Wedge2Element> is_coboundary(const WedgeCochain&, int, Exec);

// ---------------------------------------------------------------------------
// Propagation from generator values.

template <class V>
PropagationReport<V> propagate_from_generators(int genus, const PinnedValues<V>& assignment,
                                               int domain_radius, int value_radius,
                                               const SystemOptions& opts) {
  const ComponentFilter& filter = opts.component;
  const Exec exec = opts.exec;
  check_filter(V::flavor, filter);
  PinnedValues<V> pinned;
  pinned.try_emplace(Monomial(genus), genus);
  for (const auto& g : generator_monomials(genus)) pinned.try_emplace(g, genus);
  for (const auto& [z, v] : assignment) {
    auto it = pinned.find(z);
    if (it == pinned.end()) throw WindowError("assignment at " + z.str() + " is not 1 or a generator");
    require_same_genus(genus, v.genus(), "assignment value");
    for (const auto& [k, q] : v.terms()) {
      if (k.first.sup_norm() > value_radius || k.second.sup_norm() > value_radius)
        throw WindowError("assignment at " + z.str() + " exceeds the value radius");
      if (!in_component(k.first, k.second, filter))
        throw WindowError("assignment at " + z.str() + " leaves the selected component");
    }
    it->second = v;
  }

  const auto sys = build_pinned_cocycle_system(genus, domain_radius, value_radius, pinned, opts);
  PropagationReport<V> rep;
  rep.genus = genus;
  rep.domain_radius = domain_radius;
  rep.value_radius = value_radius;
  rep.component = component_filter_name(filter);
  rep.truncation = opts.truncation;
  rep.interior_radius = domain_radius - 1;
  rep.num_vars = sys.num_vars();
  rep.num_equations = sys.num_rows();

  const auto res = eliminate(sys, SolveOptions{false, true, exec});
  rep.rank = res.rank;
  rep.kernel_dim = res.kernel_dim();
  rep.consistent = res.consistent;
  if (!res.consistent) {
    rep.certificate = certificate_rows(sys, res.certificate);
    rep.certificate_verified = verify_certificate(sys, res.certificate);
    return rep;
  }

  std::vector<char> determined(sys.num_vars(), 0);
  for (const auto& [c, q] : res.determined) determined[static_cast<std::size_t>(c)] = 1;
  for (std::size_t c = 0; c < sys.num_vars(); ++c) {
    if (sys.variable(static_cast<LinearSystem::Col>(c)).z.sup_norm() > rep.interior_radius) continue;
    ++rep.interior_vars;
    if (!determined[c]) ++rep.interior_undetermined;
  }
  rep.unique_on_interior = rep.interior_undetermined == 0;
  if (!rep.unique_on_interior) {
    rep.interior_dim = interior_kernel(sys, rep.interior_radius, exec).interior_dim;
    return rep;
  }

  Cochain<V> sol(genus, rep.interior_radius);
  std::map<Monomial, V> vals;
  for (const auto& [c, q] : res.determined) {
    const VarIndex vi = sys.variable(c);
    if (vi.z.sup_norm() > rep.interior_radius || q == 0) continue;
    vals.try_emplace(vi.z, genus).first->second.add_term(vi.u, vi.v, q);
  }
  for (auto& [z, v] : vals) sol.set(z, std::move(v));
  for (const auto& [z, v] : pinned)
    if (z.sup_norm() <= rep.interior_radius) sol.set(z, v);
  rep.interior_solution = std::move(sol);
  return rep;
}

template PropagationReport<Tensor2Element> propagate_from_generators(int, const PinnedValues<Tensor2Element>&,
                                                                     int, int, const SystemOptions&);
template PropagationReport<Wedge2Element> propagate_from_generators(int, const PinnedValues<Wedge2Element>&,
                                                                    int, int, const SystemOptions&);

// ---------------------------------------------------------------------------
// Classification of the cobracket families modulo windowed coboundaries.

namespace {

// Coordinates (Z, a, b) packed into one integer; a and b lie in the box of
// radius `reach`.
struct CoordinateCode {
  int domain_radius;
  int reach;
  std::int64_t n;
  std::int64_t code(const Monomial& z, const Monomial& a, const Monomial& b) const {
    const auto zi = static_cast<std::int64_t>(box_index(z, domain_radius));
    return (zi * n + static_cast<std::int64_t>(box_index(a, reach))) * n +
           static_cast<std::int64_t>(box_index(b, reach));
  }
};

template <class V>
WideSparseVector flatten(const Cochain<V>& c, const CoordinateCode& code) {
  WideSparseVector out;
  for (const auto& [z, val] : c.entries())
    for (const auto& [k, q] : val.terms()) out.emplace_back(code.code(z, k.first, k.second), q);
  return out;
}

template <class O>
std::vector<WideSparseVector> coboundary_vectors(int genus, int domain_radius, int radius,
                                                 const CoordinateCode& code) {
  const PairSlots slots(genus, radius, O::flavor, {});
  const auto domain = box_monomials(genus, domain_radius);
  std::vector<WideSparseVector> out;
  out.reserve(slots.pairs().size());
  for (const auto& [u, v] : slots.pairs()) {
    WideSparseVector vec;
    for (const auto& z : domain) {
      auto add = [&](std::int64_t coef, Monomial a, Monomial b) {
        if (coef == 0) return;
        const int sign = O::canonicalize(a, b);
        if (sign != 0) vec.emplace_back(code.code(z, a, b), Rational(sign * coef));
      };
      add(intersection_form(z, u), z * u, v);
      add(intersection_form(z, v), u, z * v);
    }
    if (!vec.empty()) out.push_back(std::move(vec));
  }
  return out;
}

}  // namespace

TensorCochain iota_cochain(const KMap& k, int domain_radius) {
  return make_delta_k_left(k, domain_radius) - make_delta_k_right(k, domain_radius);
}

ClassificationReport classification_report(int genus, int domain_radius, int value_radius, Flavor flavor,
                                           int coboundary_radius, Exec exec) {
  if (domain_radius < 1) throw WindowError("domain radius must be at least 1");
  if (value_radius < domain_radius) throw WindowError("value radius must be at least the domain radius");
  if (coboundary_radius < 0) coboundary_radius = value_radius;
  ClassificationReport rep;
  rep.genus = genus;
  rep.flavor = flavor;
  rep.domain_radius = domain_radius;
  rep.value_radius = value_radius;
  rep.coboundary_radius = coboundary_radius;

  const CoordinateCode code{domain_radius, coboundary_radius + domain_radius,
                            static_cast<std::int64_t>(box_size(genus, coboundary_radius + domain_radius))};
  if (static_cast<double>(box_size(genus, domain_radius)) * static_cast<double>(code.n) *
          static_cast<double>(code.n) > 9.0e18)
    throw WindowError("classification window too large");

  std::vector<HomFunctional> basis;
  for (int i = 0; i < 2 * genus; ++i) basis.push_back(HomFunctional::coordinate(genus, i));
  static const char* const kNames[] = {"a", "b"};
  auto hom_name = [&](int i) { return std::string(kNames[i % 2]) + std::to_string(i / 2 + 1); };

  std::vector<WideSparseVector> family;
  bool cocycles = true;
  if (flavor == Flavor::wedge) {
    for (int i = 0; i < 2 * genus; ++i) {
      const auto d = make_delta_k(basis[static_cast<std::size_t>(i)], domain_radius);
      cocycles = cocycles && residual_scan(d, exec).empty();
      family.push_back(flatten(d, code));
      rep.family.push_back("Delta_" + hom_name(i));
    }
  } else {
    const auto d0 = make_delta0(1, genus, domain_radius);
    cocycles = cocycles && residual_scan(d0, exec).empty();
    family.push_back(flatten(d0, code));
    rep.family.push_back("delta_0");
    for (int side = 0; side < 2; ++side)
      for (int i = 0; i < 2 * genus; ++i) {
        const auto& k = basis[static_cast<std::size_t>(i)];
        const auto d = side == 0 ? make_delta_k_left(k, domain_radius) : make_delta_k_right(k, domain_radius);
        cocycles = cocycles && residual_scan(d, exec).empty();
        family.push_back(flatten(d, code));
        rep.family.push_back((side == 0 ? "Delta^l_" : "Delta^r_") + hom_name(i));
      }
  }
  rep.family_cocycles = cocycles;

  auto cob = flavor == Flavor::tensor
                 ? coboundary_vectors<TensorOrientation>(genus, domain_radius, coboundary_radius, code)
                 : coboundary_vectors<WedgeOrientation>(genus, domain_radius, coboundary_radius, code);
  rep.family_rank = rank_of(family, exec);
  rep.coboundary_rank = rank_of(cob, exec);
  cob.insert(cob.end(), family.begin(), family.end());
  rep.joint_rank = rank_of(cob, exec);
  rep.dimension = rep.joint_rank - rep.coboundary_rank;
  rep.expected_dimension = static_cast<std::size_t>(flavor == Flavor::wedge ? 2 * genus : 1 + 4 * genus);
  rep.expected_met = rep.dimension == rep.expected_dimension;

  bool iota = true;
  bool all_zero = true;
  for (const auto& k : basis) {
    const auto diff = tensor_cochain_to_wedge(iota_cochain(k, domain_radius)) - make_delta_k(k, domain_radius);
    if (diff.entries().empty()) continue;
    all_zero = false;
    if (!is_coboundary(diff, coboundary_radius, exec).feasible) iota = false;
  }
  rep.iota_check = iota;
  rep.iota_difference_zero = all_zero;
  return rep;
}

}  // namespace w1g
