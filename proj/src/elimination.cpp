// Exact elimination over Q. The system is split into connected components
// (rows sharing a column), each reduced independently to fully reduced
// echelon form with integer rows; rational values appear only when the
// kernel basis and solutions are read off.

#include "w1g/linear_system.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>

namespace w1g {

namespace {

using Col = std::int32_t;

struct Row {
  std::vector<std::pair<Col, Integer>> e;  // sorted by column
  Integer rhs;
  std::vector<std::pair<std::size_t, Rational>> combo;  // source rows, sorted
};

const Integer* find_coef(const Row& r, Col c) {
  auto it = std::lower_bound(r.e.begin(), r.e.end(), c,
                             [](const auto& p, Col x) { return p.first < x; });
  return (it != r.e.end() && it->first == c) ? &it->second : nullptr;
}

// v <- a v - b w
void axpy(Row& v, const Integer& a, const Row& w, const Integer& b, bool track) {
  std::vector<std::pair<Col, Integer>> out;
  out.reserve(v.e.size() + w.e.size());
  std::size_t i = 0, j = 0;
  Integer t;
  while (i < v.e.size() || j < w.e.size()) {
    if (j == w.e.size() || (i < v.e.size() && v.e[i].first < w.e[j].first)) {
      out.emplace_back(v.e[i].first, a * v.e[i].second);
      ++i;
    } else if (i == v.e.size() || w.e[j].first < v.e[i].first) {
      out.emplace_back(w.e[j].first, -b * w.e[j].second);
      ++j;
    } else {
      t = a * v.e[i].second - b * w.e[j].second;
      if (t != 0) out.emplace_back(v.e[i].first, t);
      ++i;
      ++j;
    }
  }
  v.e = std::move(out);
  v.rhs = a * v.rhs - b * w.rhs;
  if (track) {
    std::map<std::size_t, Rational> acc;
    for (auto& [r, q] : v.combo) acc[r] += q * Rational(a);
    for (const auto& [r, q] : w.combo) acc[r] -= q * Rational(b);
    v.combo.clear();
    for (auto& [r, q] : acc)
      if (q != 0) v.combo.emplace_back(r, std::move(q));
  }
}

void make_primitive(Row& v, bool track) {
  Integer g = v.rhs;
  for (const auto& [c, x] : v.e) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (auto& [c, x] : v.e) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(v.rhs.get_mpz_t(), v.rhs.get_mpz_t(), g.get_mpz_t());
  if (track)
    for (auto& [r, q] : v.combo) q /= Rational(g);
}

struct ComponentResult {
  std::vector<Row> basis;  // pivot = first entry, positive
  bool consistent = true;
  std::vector<std::pair<std::size_t, Rational>> certificate;
};

template <class Provider>
ComponentResult reduce_component(const Provider& src, const std::vector<std::size_t>& rows,
                                 std::vector<std::int32_t>& pivot_slot, bool track) {
  ComponentResult out;
  auto& basis = out.basis;
  std::vector<Col> hits;
  for (std::size_t r : rows) {
    Row v;
    src.load(r, v);
    if (track) v.combo = {{r, Rational(1)}};
    hits.clear();
    for (const auto& [c, x] : v.e)
      if (pivot_slot[static_cast<std::size_t>(c)] >= 0) hits.push_back(c);
    Integer a, b, g;
    for (Col c : hits) {
      const Row& w = basis[static_cast<std::size_t>(pivot_slot[static_cast<std::size_t>(c)])];
      const Integer* vc = find_coef(v, c);
      if (!vc) continue;
      const Integer& p = w.e.front().second;
      g = gcd(p, *vc);
      a = p / g;
      b = *vc / g;
      axpy(v, a, w, b, track);
    }
    make_primitive(v, track);
    if (v.e.empty()) {
      if (v.rhs != 0 && out.consistent) {
        out.consistent = false;
        if (track) {
          out.certificate = std::move(v.combo);
          return out;
        }
      }
      continue;
    }
    if (v.e.front().second < 0) {
      for (auto& [c, x] : v.e) x = -x;
      v.rhs = -v.rhs;
      if (track)
        for (auto& [r2, q] : v.combo) q = -q;
    }
    const Col pc = v.e.front().first;
    const Integer& pv = v.e.front().second;
    for (auto& w : basis) {
      const Integer* wc = find_coef(w, pc);
      if (!wc) continue;
      g = gcd(pv, *wc);
      a = pv / g;
      b = *wc / g;
      axpy(w, a, v, b, track);
      make_primitive(w, track);
    }
    pivot_slot[static_cast<std::size_t>(pc)] = static_cast<std::int32_t>(basis.size());
    basis.push_back(std::move(v));
  }
  return out;
}

template <class Provider>
EliminationResult run_engine(const Provider& src, const SolveOptions& opts) {
  const std::size_t ncols = src.num_cols();
  const std::size_t nrows = src.num_rows();
  EliminationResult res;
  res.num_vars = ncols;
  res.num_rows = nrows;

  // Union-find on columns.
  std::vector<std::int32_t> parent(ncols);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::int32_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  std::vector<std::size_t> empty_rows;
  std::vector<Col> first_col(nrows, -1);
  for (std::size_t r = 0; r < nrows; ++r) {
    Col first = -1;
    src.for_cols(r, [&](Col c) {
      if (first < 0) {
        first = c;
      } else {
        auto ra = find(first), rb = find(c);
        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
      }
    });
    first_col[r] = first;
    if (first < 0) empty_rows.push_back(r);
  }
  // Components in order of their smallest column. A root is always the
  // smallest column of its set because unions keep the smaller id.
  std::vector<std::int32_t> comp_of_root(ncols, -1);
  std::vector<std::vector<std::size_t>> comp_rows;
  for (std::size_t r = 0; r < nrows; ++r) {
    if (first_col[r] < 0) continue;
    const auto root = static_cast<std::size_t>(find(first_col[r]));
    if (comp_of_root[root] < 0) {
      comp_of_root[root] = static_cast<std::int32_t>(comp_rows.size());
      comp_rows.emplace_back();
    }
    comp_rows[static_cast<std::size_t>(comp_of_root[root])].push_back(r);
  }
  {
    // Renumber so components are ordered by smallest column.
    std::vector<std::pair<std::int32_t, std::int32_t>> order;
    for (std::size_t c = 0; c < ncols; ++c)
      if (comp_of_root[c] >= 0) order.emplace_back(static_cast<std::int32_t>(c), comp_of_root[c]);
    std::vector<std::vector<std::size_t>> sorted;
    sorted.reserve(order.size());
    for (auto& [root, idx] : order) sorted.push_back(std::move(comp_rows[static_cast<std::size_t>(idx)]));
    comp_rows = std::move(sorted);
  }
  res.components = comp_rows.size();

  std::vector<std::int32_t> pivot_slot(ncols, -1);
  std::vector<ComponentResult> results(comp_rows.size());
  const auto ncomp = static_cast<std::ptrdiff_t>(comp_rows.size());
  std::exception_ptr failure;
  auto work = [&](std::ptrdiff_t k) {
    try {
      results[static_cast<std::size_t>(k)] =
          reduce_component(src, comp_rows[static_cast<std::size_t>(k)], pivot_slot, false);
    } catch (...) {
#pragma omp critical(w1g_elim_failure)
      if (!failure) failure = std::current_exception();
    }
  };
  if (opts.exec == Exec::serial) {
    for (std::ptrdiff_t k = 0; k < ncomp; ++k) work(k);
  } else {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t k = 0; k < ncomp; ++k) work(k);
  }
  if (failure) std::rethrow_exception(failure);

  // Infeasibility: an empty row with non-zero rhs, else the first component
  // (in column order) that reduced a row to 0 = c.
  for (std::size_t r : empty_rows) {
    Row v;
    src.load(r, v);
    if (v.rhs != 0) {
      res.consistent = false;
      res.certificate = {{r, Rational(1)}};
      break;
    }
  }
  if (res.consistent) {
    for (std::size_t k = 0; k < results.size(); ++k) {
      if (results[k].consistent) continue;
      res.consistent = false;
      for (const auto& row : results[k].basis)
        pivot_slot[static_cast<std::size_t>(row.e.front().first)] = -1;
      auto tracked = reduce_component(src, comp_rows[k], pivot_slot, true);
      res.certificate = std::move(tracked.certificate);
      break;
    }
  }

  std::vector<std::vector<std::pair<Col, Rational>>> kernel_entries;
  std::vector<char> is_pivot(ncols, 0);
  for (const auto& cr : results)
    for (const auto& row : cr.basis) {
      const Col p = row.e.front().first;
      is_pivot[static_cast<std::size_t>(p)] = 1;
      res.pivot_columns.push_back(p);
      const Rational pv(row.e.front().second);
      if (row.e.size() == 1) res.determined.emplace_back(p, Rational(row.rhs) / pv);
      if (opts.particular_solution && row.rhs != 0) res.solution.emplace_back(p, Rational(row.rhs) / pv);
    }
  std::sort(res.pivot_columns.begin(), res.pivot_columns.end());
  std::sort(res.determined.begin(), res.determined.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::sort(res.solution.begin(), res.solution.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  res.rank = res.pivot_columns.size();

  if (opts.kernel_basis) {
    std::vector<std::int32_t> free_slot(ncols, -1);
    for (std::size_t c = 0; c < ncols; ++c)
      if (!is_pivot[c]) {
        free_slot[c] = static_cast<std::int32_t>(res.kernel.size());
        res.kernel.push_back({{static_cast<Col>(c), Rational(1)}});
      }
    for (const auto& cr : results)
      for (const auto& row : cr.basis) {
        const Col p = row.e.front().first;
        const Rational pv(row.e.front().second);
        for (std::size_t i = 1; i < row.e.size(); ++i) {
          const auto f = static_cast<std::size_t>(row.e[i].first);
          res.kernel[static_cast<std::size_t>(free_slot[f])].emplace_back(p, -Rational(row.e[i].second) / pv);
        }
      }
    for (auto& v : res.kernel)
      std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return res;
}

struct SystemProvider {
  const LinearSystem& sys;
  std::size_t num_cols() const { return sys.num_vars(); }
  std::size_t num_rows() const { return sys.num_rows(); }
  template <class F>
  void for_cols(std::size_t r, F&& f) const {
    for (const auto& e : sys.row(r)) f(e.col);
  }
  void load(std::size_t r, Row& out) const {
    const auto row = sys.row(r);
    out.e.clear();
    out.e.reserve(row.size());
    for (const auto& e : row) out.e.emplace_back(e.col, Integer(static_cast<long>(e.coef)));
    const Rational b = sys.rhs(r);
    out.rhs = b.get_num();  // rows are stored with integer rhs
  }
};

struct VectorsProvider {
  std::vector<std::vector<std::pair<Col, Integer>>> rows;
  std::size_t ncols = 0;
  std::size_t num_cols() const { return ncols; }
  std::size_t num_rows() const { return rows.size(); }
  template <class F>
  void for_cols(std::size_t r, F&& f) const {
    for (const auto& e : rows[r]) f(e.first);
  }
  void load(std::size_t r, Row& out) const {
    out.e = rows[r];
    out.rhs = 0;
  }
};

}  // namespace

EliminationResult eliminate(const LinearSystem& sys, const SolveOptions& opts) {
  return run_engine(SystemProvider{sys}, opts);
}

bool verify_certificate(const LinearSystem& sys,
                        std::span<const std::pair<std::size_t, Rational>> certificate) {
  if (certificate.empty()) return false;
  std::map<Col, Rational> combo;
  Rational rhs = 0;
  for (const auto& [r, y] : certificate) {
    if (r >= sys.num_rows()) return false;
    for (const auto& e : sys.row(r)) combo[e.col] += y * static_cast<long>(e.coef);
    rhs += y * sys.rhs(r);
  }
  for (const auto& [c, q] : combo)
    if (q != 0) return false;
  return rhs != 0;
}

std::size_t rank_of(std::span<const WideSparseVector> vectors, Exec exec) {
  std::vector<std::int64_t> cols;
  for (const auto& v : vectors)
    for (const auto& [c, q] : v) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  VectorsProvider p;
  p.ncols = cols.size();
  for (const auto& v : vectors) {
    Integer scale = 1;
    for (const auto& [c, q] : v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    std::vector<std::pair<Col, Integer>> row;
    for (const auto& [c, q] : v) {
      if (q == 0) continue;
      const auto local = static_cast<Col>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
      row.emplace_back(local, Integer(q.get_num() * (scale / q.get_den())));
    }
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Col, Integer>> merged;
    for (auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first)
        merged.back().second += e.second;
      else
        merged.push_back(std::move(e));
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    p.rows.push_back(std::move(merged));
  }
  return run_engine(p, SolveOptions{false, false, exec}).rank;
}

}  // namespace w1g
