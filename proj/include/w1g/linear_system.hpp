#pragma once

#include "w1g/bimodule.hpp"
#include "w1g/exec.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace w1g {

/// An unknown C^Z_{u,v}. Unknowns of a module element m (no Z slot) use the
/// unit monomial for z.
struct VarIndex {
  Monomial z;
  Monomial u;
  Monomial v;
  friend bool operator==(const VarIndex&, const VarIndex&) = default;
  friend auto operator<=>(const VarIndex&, const VarIndex&) = default;
};

/// Which instance generated a row: for cocycle rows (Z1, Z2, u, v) of the
/// coefficient equation; for coboundary rows (Z, u, v, 1), the coefficient of
/// u (x) v (or u ^ v) in (d m)(Z).
struct RowTag {
  enum class Kind : std::uint8_t { user, cocycle, coboundary };
  Kind kind = Kind::user;
  std::array<Monomial, 4> keys{};
  friend bool operator==(const RowTag&, const RowTag&) = default;
};

using SparseVector = std::vector<std::pair<std::int32_t, Rational>>;

/// Sparse exact linear system sum_j a_ij x_j = b_i over named unknowns.
/// Unknowns are registered in strictly increasing VarIndex order, so column
/// order equals VarIndex order. Rows are stored in primitive integer form
/// (scaled by a non-zero rational), which leaves the solution set unchanged.
class LinearSystem {
 public:
  using Col = std::int32_t;
  struct Entry {
    Col col;
    std::int64_t coef;
  };

  LinearSystem(int genus, Flavor flavor) : genus_(genus), flavor_(flavor) { (void)Monomial(genus); }

  int genus() const { return genus_; }
  Flavor flavor() const { return flavor_; }

  /// Window parameters recorded by the builders (-1 when not applicable).
  int domain_radius() const { return domain_radius_; }
  int value_radius() const { return value_radius_; }
  void set_window(int domain_radius, int value_radius) {
    domain_radius_ = domain_radius;
    value_radius_ = value_radius;
  }

  Col add_variable(const VarIndex& v);
  std::size_t num_vars() const { return vars_.size(); }
  VarIndex variable(Col c) const;
  std::optional<Col> find_variable(const VarIndex& v) const;

  void add_row(std::span<const std::pair<Col, Rational>> entries, const Rational& rhs,
               const RowTag& tag = {});
  /// Integer fast path; entries may repeat columns and contain zeros.
  void add_integer_row(std::span<const Entry> entries, const Rational& rhs, const RowTag& tag = {});

  std::size_t num_rows() const { return row_start_.size() - 1; }
  std::span<const Entry> row(std::size_t r) const {
    return {entries_.data() + row_start_[r], row_start_[r + 1] - row_start_[r]};
  }
  Rational rhs(std::size_t r) const;
  bool homogeneous() const { return rhs_.empty(); }
  RowTag tag(std::size_t r) const;

  /// Residual A x - b at row r for a sparse x (sorted by column).
  Rational evaluate_row(std::size_t r, const SparseVector& x) const;

 private:
  std::int32_t intern(const Monomial& m);
  void push_row(std::vector<Entry> entries, Rational rhs, const RowTag& tag);

  int genus_;
  Flavor flavor_;
  int domain_radius_ = -1;
  int value_radius_ = -1;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::int32_t> monomial_ids_;
  std::vector<std::array<std::int32_t, 3>> vars_;
  std::vector<std::size_t> row_start_{0};
  std::vector<Entry> entries_;
  std::unordered_map<std::size_t, Rational> rhs_;
  std::vector<std::uint8_t> tag_kind_;
  std::vector<std::array<std::int32_t, 4>> tag_keys_;
};

struct SolveOptions {
  bool kernel_basis = false;
  bool particular_solution = false;
  Exec exec = Exec::parallel;
};

/// Result of exact elimination. Pivot columns are those of the reduced row
/// echelon form under column order, so every field is independent of the
/// schedule that processed the components.
struct EliminationResult {
  std::size_t num_vars = 0;
  std::size_t num_rows = 0;
  std::size_t rank = 0;
  std::size_t components = 0;
  std::vector<std::int32_t> pivot_columns;
  /// Pivot columns fixed to a single value by the system, whatever the free
  /// variables are; column -> value.
  std::vector<std::pair<std::int32_t, Rational>> determined;
  bool consistent = true;
  /// Multipliers y with sum_r y_r A_r = 0 and sum_r y_r b_r != 0.
  std::vector<std::pair<std::size_t, Rational>> certificate;
  std::vector<SparseVector> kernel;  // one vector per free column, ascending
  SparseVector solution;             // free columns set to zero
  std::size_t kernel_dim() const { return num_vars - rank; }
};

EliminationResult eliminate(const LinearSystem& sys, const SolveOptions& opts = {});

/// Checks a certificate exactly against the system.
bool verify_certificate(const LinearSystem& sys,
                        std::span<const std::pair<std::size_t, Rational>> certificate);

using WideSparseVector = std::vector<std::pair<std::int64_t, Rational>>;

/// Rank of a family of sparse rational vectors (columns are arbitrary ids).
std::size_t rank_of(std::span<const WideSparseVector> vectors, Exec exec = Exec::parallel);

}  // namespace w1g
