#pragma once

#include "w1g/cochain.hpp"
#include "w1g/linear_system.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace w1g {

/// Restricts unknowns and equations to one summand of the value module. The
/// action preserves every summand, so restricted systems are exact blocks of
/// the full one.
using ComponentFilter = std::variant<std::monostate, TensorComponent, WedgeComponent>;

std::string component_filter_name(const ComponentFilter& f);
/// Inverse of component_filter_name for the given flavor ("all" is no filter).
ComponentFilter parse_component_filter(Flavor flavor, std::string_view name);

/// Known cochain values pinned in place of unknowns (used for generators).
template <class V>
using PinnedValues = std::map<Monomial, V>;

/// How equations that mention coefficients outside the value window are treated.
enum class Truncation {
  /// Cochains whose values are supported in the value window: outside
  /// coefficients are zero, and the equation is imposed at every target pair
  /// that some window coefficient reaches. Enlarging the value window only
  /// adds unknowns, so old solutions survive by zero-extension.
  finite_support,
  /// Outside coefficients are unknown: an equation is kept only if every
  /// index with non-zero coefficient lies in the window.
  strict,
};

std::string_view truncation_name(Truncation t);
Truncation parse_truncation(std::string_view name);

struct SystemOptions {
  ComponentFilter component{};
  Truncation truncation = Truncation::finite_support;
  Exec exec = Exec::parallel;
};

/// Unknowns C^Z_{u,v} for ||Z|| <= domain_radius and ||u||, ||v|| <= value_radius
/// (canonical wedge orientation, filtered to the component), in VarIndex order.
///
/// One equation per unordered pair Z1 > Z2 with Z1, Z2, Z1 Z2 in the domain and
/// per target pair (u, v):
///
///   i(Z1,Z2) C^{Z1Z2}_{u,v} - i(Z1,u) C^{Z2}_{Z1^-1 u, v} - i(Z1,v) C^{Z2}_{u, Z1^-1 v}
///     + i(Z2,u) C^{Z1}_{Z2^-1 u, v} + i(Z2,v) C^{Z1}_{u, Z2^-1 v} = 0.
///
/// Terms with zero coefficient are dropped; rows left without terms are
/// omitted. Rows are ordered by (Z1, Z2, u, v).
LinearSystem build_cocycle_system(int genus, int domain_radius, int value_radius, Flavor flavor,
                                  const SystemOptions& opts = {});

/// Same system with the unknowns at the pinned Z replaced by known values
/// (moved to the right-hand side). Pinned values may reach outside the value
/// window since they are known exactly.
template <class V>
LinearSystem build_pinned_cocycle_system(int genus, int domain_radius, int value_radius,
                                         const PinnedValues<V>& pinned, const SystemOptions& opts = {});

struct CertificateRow {
  RowTag tag;
  Rational multiplier;
  friend bool operator==(const CertificateRow&, const CertificateRow&) = default;
};

struct SolveReport {
  int genus = 0;
  Flavor flavor = Flavor::tensor;
  int domain_radius = -1;
  int value_radius = -1;
  std::size_t num_vars = 0;
  std::size_t num_equations = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  std::size_t components = 0;
  bool consistent = true;
  std::vector<CertificateRow> certificate;
  /// Filled only when requested; one cochain per free unknown.
  std::vector<AnyCochain> kernel;
  friend bool operator==(const SolveReport&, const SolveReport&) = default;
};

SolveReport kernel_basis(const LinearSystem& sys, bool with_basis = true, Exec exec = Exec::parallel);

/// Cochain with the given column values (domain radius from the system).
AnyCochain cochain_from_vector(const LinearSystem& sys, const SparseVector& x);
/// Coordinates of a cochain in the system's unknowns. Values at unknown-free
/// positions must vanish, otherwise WindowError.
SparseVector vector_from_cochain(const LinearSystem& sys, const AnyCochain& c);

/// Projection of the solution space onto the unknowns with ||Z|| <= interior_radius.
struct InteriorKernel {
  int interior_radius = 0;
  std::size_t kernel_dim = 0;
  std::size_t interior_vars = 0;
  std::size_t interior_dim = 0;
  std::vector<WideSparseVector> projected;  // spans the projection
};

InteriorKernel interior_kernel(const LinearSystem& sys, int interior_radius, Exec exec = Exec::parallel);

/// Whether the interior restriction of c lies in the projected span.
bool interior_span_contains(const LinearSystem& sys, const InteriorKernel& k, const AnyCochain& c);

template <class V>
struct CoboundaryResult {
  int coboundary_radius = 0;
  std::size_t num_vars = 0;
  std::size_t num_equations = 0;
  bool feasible = false;
  /// A solution with d(m) = D on the whole window (checked exactly).
  std::optional<V> m;
  /// Rows whose combination reads 0 = non-zero (checked exactly). Relative to
  /// the coboundary radius.
  std::vector<CertificateRow> certificate;
  bool verified = false;
  /// Window-independent proof that D is no coboundary (wedge only).
  std::optional<Monomial> absolute_witness;
  friend bool operator==(const CoboundaryResult&, const CoboundaryResult&) = default;
};

/// Solves d(m)(Z) = D(Z) for every window Z with m supported on pairs with
/// exponents in [-coboundary_radius, coboundary_radius]. Throws WindowError when
/// D has a term no such m can reach.
template <class V>
CoboundaryResult<V> is_coboundary(const Cochain<V>& d, int coboundary_radius, Exec exec = Exec::parallel);

template <class V>
struct PropagationReport {
  int genus = 0;
  int domain_radius = 0;
  int value_radius = 0;
  std::string component;
  Truncation truncation = Truncation::finite_support;
  std::size_t num_vars = 0;
  std::size_t num_equations = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
  bool consistent = true;
  std::vector<CertificateRow> certificate;
  bool certificate_verified = false;
  int interior_radius = 0;
  std::size_t interior_vars = 0;
  std::size_t interior_undetermined = 0;
  std::size_t interior_dim = 0;
  bool unique_on_interior = false;
  /// Window ||Z|| <= interior_radius, present iff unique.
  std::optional<Cochain<V>> interior_solution;
  friend bool operator==(const PropagationReport&, const PropagationReport&) = default;
};

/// Pins D(1), D(x_i), D(y_i) (missing entries are zero), solves the cocycle
/// system, and decides whether the interior ||Z|| <= domain_radius - 1 is
/// determined.
template <class V>
PropagationReport<V> propagate_from_generators(int genus, const PinnedValues<V>& assignment,
                                               int domain_radius, int value_radius,
                                               const SystemOptions& opts = {});

/// iota(k) = (0, k, -k): the tensor cochain D^l_k - D^r_k.
TensorCochain iota_cochain(const KMap& k, int domain_radius);

struct ClassificationReport {
  int genus = 0;
  Flavor flavor = Flavor::wedge;
  int domain_radius = 0;
  int value_radius = 0;
  int coboundary_radius = 0;
  std::vector<std::string> family;
  bool family_cocycles = false;
  std::size_t family_rank = 0;
  std::size_t coboundary_rank = 0;
  std::size_t joint_rank = 0;
  std::size_t dimension = 0;  // joint_rank - coboundary_rank
  std::size_t expected_dimension = 0;
  bool expected_met = false;
  /// p(D^l_k - D^r_k) - D_k is zero or a windowed coboundary for every basis k.
  bool iota_check = false;
  bool iota_difference_zero = false;
  bool passed() const { return family_cocycles && expected_met && iota_check; }
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Family for wedge: D_k over the basis homomorphisms. Family for tensor:
/// delta_0(1), D^l_k, D^r_k. Coboundaries are d(e) over basis pairs e with
/// exponents in [-coboundary_radius, coboundary_radius] (negative means
/// value_radius), restricted to the domain window.
ClassificationReport classification_report(int genus, int domain_radius, int value_radius, Flavor flavor,
                                           int coboundary_radius = -1, Exec exec = Exec::parallel);

}  // namespace w1g
