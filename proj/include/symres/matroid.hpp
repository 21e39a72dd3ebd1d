#pragma once

// Matroid-side verification of arrangement invariants. Nothing in this file
// touches the intersection lattice: circuits and no-broken-circuit sets come
// from exact rank computations on the hyperplane rows, and the finite-field
// count enumerates points of F_q^l directly.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symres/arrangement.hpp"
#include "symres/error.hpp"
#include "symres/index_set.hpp"
#include "symres/matrix.hpp"

namespace symres {

struct MatroidOptions {
  std::size_t subset_cap = 50'000'000;
  std::uint64_t point_cap = 100'000'000;  // largest q^l the finite-field count enumerates
  bool record_sets = false;               // keep the nbc sets, not only their counts
};

/// Rank oracle on subsets of hyperplanes. For affine arrangements a subset is
/// only dependent when its hyperplanes share a point.
class LinearMatroid {
 public:
  explicit LinearMatroid(const Arrangement& a) : arrangement_(&a) {}

  std::size_t size() const noexcept { return arrangement_->size(); }
  std::size_t rank() const { return arrangement_->rank(); }

  std::size_t rank_of(std::span<const std::size_t> subset) const { return symres::rank(rows(subset, false)); }

  bool has_common_point(std::span<const std::size_t> subset) const {
    if (subset.empty()) return true;
    auto e = rref(rows(subset, true));
    return e.rank == 0 || e.pivot_columns.back() != arrangement_->ambient_dim();
  }

  bool independent(std::span<const std::size_t> subset) const { return rank_of(subset) == subset.size(); }

  bool dependent(std::span<const std::size_t> subset) const {
    return !independent(subset) && has_common_point(subset);
  }

 private:
  ExactMatrix rows(std::span<const std::size_t> subset, bool augmented) const {
    const auto& a = *arrangement_;
    const std::size_t cols = a.ambient_dim() + (augmented ? 1 : 0);
    ExactMatrix m(a.field(), subset.size(), cols);
    for (std::size_t i = 0; i < subset.size(); ++i) {
      const auto& h = a[subset[i]];
      for (std::size_t j = 0; j < a.ambient_dim(); ++j) m(i, j) = h.normal()[j];
      if (augmented) m(i, a.ambient_dim()) = h.offset();
    }
    return m;
  }

  const Arrangement* arrangement_;
};

struct CircuitSet {
  std::vector<std::vector<std::size_t>> circuits;  // each sorted ascending
};

namespace detail {

// Advances a sorted k-combination of {0..n-1} in lexicographic order.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline IndexSet to_index_set(std::span<const std::size_t> members, std::size_t universe) {
  IndexSet s(universe);
  for (auto i : members) s.insert(i);
  return s;
}

}  // namespace detail

/// All minimal dependent subsets, by increasing size then lexicographically.
inline CircuitSet circuits(const Arrangement& a, const MatroidOptions& options = {}) {
  const LinearMatroid m(a);
  const std::size_t n = a.size();
  const std::size_t max_size = std::min(n, m.rank() + 1);
  CircuitSet out;
  std::vector<IndexSet> found;
  std::size_t enumerated = 0;
  for (std::size_t k = 1; k <= max_size; ++k) {
    std::vector<std::size_t> c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = i;
    do {
      if (++enumerated > options.subset_cap) {
        throw ComputationCap("circuit enumeration exceeded the subset cap of " + std::to_string(options.subset_cap));
      }
      const IndexSet cs = detail::to_index_set(c, n);
      if (std::any_of(found.begin(), found.end(), [&](const IndexSet& f) { return f.is_subset_of(cs); })) continue;
      if (m.dependent(c)) {
        out.circuits.push_back(c);
        found.push_back(cs);
      }
    } while (detail::next_combination(c, n));
  }
  return out;
}

struct NbcBasis {
  std::vector<BigInt> counts;                                  // index = cardinality
  std::vector<std::vector<std::vector<std::size_t>>> sets;     // filled when record_sets
};

/// Independent sets (with a common point) containing no broken circuit, where a
/// broken circuit is a circuit minus its smallest index.
inline NbcBasis nbc_basis(const Arrangement& a, const MatroidOptions& options = {}) {
  const std::size_t n = a.size();
  const std::size_t l = a.ambient_dim();
  // broken circuits grouped by their largest element
  std::vector<std::vector<IndexSet>> broken_by_max(n);
  for (const auto& c : circuits(a, options).circuits) {
    std::vector<std::size_t> b(c.begin() + 1, c.end());
    broken_by_max[b.back()].push_back(detail::to_index_set(b, n));
  }

  NbcBasis out;
  std::size_t visited = 0;
  std::vector<std::size_t> current;
  IndexSet members(n);

  auto record = [&] {
    const std::size_t k = current.size();
    if (out.counts.size() <= k) {
      out.counts.resize(k + 1, 0);
      out.sets.resize(k + 1);
    }
    out.counts[k] += 1;
    if (options.record_sets) out.sets[k].push_back(current);
  };

  // Independence is tracked with an rref of the chosen normals; a set of
  // hyperplanes with independent normals always has a common point.
  auto dfs = [&](auto& self, const RowEchelon& echelon, std::size_t start) -> void {
    record();
    for (std::size_t e = start; e < n; ++e) {
      if (++visited > options.subset_cap) {
        throw ComputationCap("nbc enumeration exceeded the subset cap of " + std::to_string(options.subset_cap));
      }
      auto rem = reduce_against(echelon, a[e].normal());
      if (std::all_of(rem.begin(), rem.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
      members.insert(e);
      bool broken = std::any_of(broken_by_max[e].begin(), broken_by_max[e].end(),
                                [&](const IndexSet& b) { return b.is_subset_of(members); });
      if (!broken) {
        ExactMatrix grown(a.field(), echelon.rank + 1, l);
        for (std::size_t i = 0; i < echelon.rank; ++i)
          for (std::size_t j = 0; j < l; ++j) grown(i, j) = echelon.reduced(i, j);
        for (std::size_t j = 0; j < l; ++j) grown(echelon.rank, j) = a[e].normal()[j];
        current.push_back(e);
        self(self, rref(std::move(grown)), e + 1);
        current.pop_back();
      }
      members.erase(e);
    }
  };
  dfs(dfs, rref(ExactMatrix(a.field(), 0, l)), 0);
  if (!options.record_sets) out.sets.clear();
  return out;
}

/// Betti numbers of the complement via the nbc basis, index = degree.
inline std::vector<BigInt> nbc_betti(const Arrangement& a, const MatroidOptions& options = {}) {
  MatroidOptions o = options;
  o.record_sets = false;
  return nbc_basis(a, o).counts;
}

// ---------------------------------------------------------------------------
// Finite-field point count

namespace detail {

inline BigInt bareiss_determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

inline bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

}  // namespace detail

/// Integer rows (normal | offset), each row scaled by the lcm of its denominators.
inline std::vector<std::vector<BigInt>> integer_augmented_rows(const Arrangement& a) {
  if (!a.field().is_rational()) {
    throw InvalidInput("finite-field counting needs a rational arrangement, got " + a.field().to_string());
  }
  std::vector<std::vector<BigInt>> rows;
  for (const auto& h : a.hyperplanes()) {
    auto aug = h.augmented_row();
    BigInt lcm = 1;
    for (const auto& c : aug) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.rational_value().get_den_mpz_t());
    std::vector<BigInt> row;
    for (const auto& c : aug) row.push_back(BigInt(c.rational_value() * lcm));
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Minor {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  BigInt value;
};

/// All nonzero k x k minors of the integer (normal | offset) matrix for
/// k <= rank + 1. These decide which primes reduce the arrangement faithfully.
inline std::vector<Minor> nonzero_minors(const Arrangement& a) {
  const auto rows = integer_augmented_rows(a);
  const std::size_t n = rows.size();
  const std::size_t c = a.ambient_dim() + 1;
  const std::size_t kmax = std::min({a.rank() + 1, n, c});
  std::vector<Minor> out;
  for (std::size_t k = 1; k <= kmax; ++k) {
    std::vector<std::size_t> rs(k);
    for (std::size_t i = 0; i < k; ++i) rs[i] = i;
    do {
      std::vector<std::size_t> cs(k);
      for (std::size_t i = 0; i < k; ++i) cs[i] = i;
      do {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = rows[rs[i]][cs[j]];
        BigInt d = detail::bareiss_determinant(std::move(sub));
        if (d != 0) out.push_back({rs, cs, std::move(d)});
      } while (detail::next_combination(cs, c));
    } while (detail::next_combination(rs, n));
  }
  return out;
}

/// The first minor divisible by q, if any.
inline std::optional<Minor> offending_minor(const std::vector<Minor>& minors, std::uint64_t q) {
  for (const auto& m : minors)
    if (mpz_divisible_ui_p(m.value.get_mpz_t(), q)) return m;
  return std::nullopt;
}

namespace detail {

inline std::string describe_minor(const Minor& m) {
  std::string s = "rows {";
  for (std::size_t i = 0; i < m.rows.size(); ++i) s += (i ? "," : "") + std::to_string(m.rows[i]);
  s += "} cols {";
  for (std::size_t i = 0; i < m.cols.size(); ++i) s += (i ? "," : "") + std::to_string(m.cols[i]);
  return s + "} = " + m.value.get_str();
}

inline std::uint64_t checked_power(std::uint64_t q, std::size_t l, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < l; ++i) {
    if (total > cap / q) return cap + 1;
    total *= q;
  }
  return total;
}

inline std::uint64_t count_points_mod(const std::vector<std::vector<BigInt>>& rows, std::size_t l, std::uint64_t q) {
  const std::size_t n = rows.size();
  // coef[h][j] = normal_j mod q, value[h] = normal . x - offset mod q
  std::vector<std::vector<std::uint64_t>> coef(n, std::vector<std::uint64_t>(l));
  std::vector<std::uint64_t> value(n);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t j = 0; j < l; ++j) coef[h][j] = mpz_fdiv_ui(rows[h][j].get_mpz_t(), q);
    value[h] = mpz_fdiv_ui(BigInt(-rows[h][l]).get_mpz_t(), q);
  }
  std::vector<std::uint64_t> x(l, 0);
  std::uint64_t good = 0;
  while (true) {
    bool off = true;
    for (std::size_t h = 0; h < n && off; ++h) off = value[h] != 0;
    if (off) ++good;
    // odometer step
    std::size_t j = 0;
    while (j < l) {
      if (x[j] + 1 < q) {
        ++x[j];
        for (std::size_t h = 0; h < n; ++h) value[h] = (value[h] + coef[h][j]) % q;
        break;
      }
      x[j] = 0;
      for (std::size_t h = 0; h < n; ++h) value[h] = (value[h] + (q - 1) * (q - coef[h][j]) % q) % q;
      ++j;
    }
    if (j == l) break;
  }
  return good;
}

}  // namespace detail

/// #{x in F_q^l on no hyperplane}; equals chi(A, q) when q is a good prime.
/// `minors` must be nonzero_minors(a); pass them in to avoid recomputing.
inline std::uint64_t finite_field_count(const Arrangement& a, std::uint64_t q, const std::vector<Minor>& minors,
                                        const MatroidOptions& options = {}) {
  if (!detail::is_prime(q)) throw InvalidInput(std::to_string(q) + " is not prime");
  const auto rows = integer_augmented_rows(a);
  if (auto bad = offending_minor(minors, q)) {
    throw InvalidInput("bad prime " + std::to_string(q) + ": divides minor " + detail::describe_minor(*bad));
  }
  const std::uint64_t points = detail::checked_power(q, a.ambient_dim(), options.point_cap);
  if (points > options.point_cap) {
    throw ComputationCap("q^l = " + std::to_string(q) + "^" + std::to_string(a.ambient_dim()) +
                         " exceeds the point cap of " + std::to_string(options.point_cap));
  }
  return detail::count_points_mod(rows, a.ambient_dim(), q);
}

inline std::uint64_t finite_field_count(const Arrangement& a, std::uint64_t q, const MatroidOptions& options = {}) {
  if (!detail::is_prime(q)) throw InvalidInput(std::to_string(q) + " is not prime");
  return finite_field_count(a, q, nonzero_minors(a), options);
}

/// The smallest `count` good primes whose q^l stays within the point cap.
inline std::vector<std::uint64_t> good_primes(const Arrangement& a, const std::vector<Minor>& minors,
                                              std::size_t count, const MatroidOptions& options = {}) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; out.size() < count; ++q) {
    if (!detail::is_prime(q)) continue;
    if (detail::checked_power(q, a.ambient_dim(), options.point_cap) > options.point_cap) break;
    if (!offending_minor(minors, q)) out.push_back(q);
  }
  return out;
}

inline std::vector<std::uint64_t> good_primes(const Arrangement& a, std::size_t count,
                                              const MatroidOptions& options = {}) {
  return good_primes(a, nonzero_minors(a), count, options);
}

}  // namespace symres
