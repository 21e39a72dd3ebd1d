#pragma once

// Intersection lattice L(A) of an arrangement, with its Moebius function and
// the characteristic / Poincare polynomials.
//
// Flats are built level by level: the flats of codimension k+1 are the
// nonempty intersections of a codimension-k flat with a hyperplane not
// containing it. A flat is keyed by the serialized rref of its augmented
// equations, which is canonical over an exact field. Every flat carries the
// closed set of hyperplanes containing it, and X <= Y iff contains(X) is a
// subset of contains(Y).

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symres/arrangement.hpp"
#include "symres/error.hpp"
#include "symres/index_set.hpp"
#include "symres/matrix.hpp"
#include "symres/polynomial.hpp"

namespace symres {

struct Flat {
  RowEchelon equations;  // rref of the augmented system, `codim` nonzero rows
  std::size_t codim = 0;
  IndexSet contains;
  std::string key;
};

struct LatticeOptions {
  std::size_t flat_cap = 2'000'000;
};

class IntersectionLattice {
 public:
  IntersectionLattice(std::size_t ambient_dim, std::size_t num_hyperplanes)
      : ambient_dim_(ambient_dim), num_hyperplanes_(num_hyperplanes) {}

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t num_hyperplanes() const noexcept { return num_hyperplanes_; }
  /// Largest codimension present (rank of the arrangement).
  std::size_t rank() const noexcept { return levels_.size() - 1; }

  const std::vector<std::vector<Flat>>& levels() const noexcept { return levels_; }
  const std::vector<std::vector<BigInt>>& moebius() const noexcept { return moebius_; }

  std::size_t flat_count() const noexcept {
    std::size_t n = 0;
    for (const auto& l : levels_) n += l.size();
    return n;
  }

  std::vector<std::size_t> flats_per_level() const {
    std::vector<std::size_t> out;
    for (const auto& l : levels_) out.push_back(l.size());
    return out;
  }

 private:
  friend IntersectionLattice intersection_lattice(const Arrangement&, const LatticeOptions&);

  std::size_t ambient_dim_;
  std::size_t num_hyperplanes_;
  std::vector<std::vector<Flat>> levels_;
  std::vector<std::vector<BigInt>> moebius_;
};

namespace detail {

inline std::string level_summary(const std::vector<std::size_t>& counts) {
  std::string s;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (k) s += ", ";
    s += "codim " + std::to_string(k) + ": " + std::to_string(counts[k]);
  }
  return s;
}

inline Flat make_flat(const Arrangement& a, RowEchelon equations) {
  Flat flat;
  flat.codim = equations.rank;
  flat.key = equations.reduced.top_rows(equations.rank).key();
  flat.contains = IndexSet(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto rem = reduce_against(equations, a[i].augmented_row());
    if (std::all_of(rem.begin(), rem.end(), [](const Scalar& s) { return s.is_zero(); })) flat.contains.insert(i);
  }
  flat.equations = std::move(equations);
  return flat;
}

}  // namespace detail

inline IntersectionLattice intersection_lattice(const Arrangement& a, const LatticeOptions& options = {}) {
  const std::size_t l = a.ambient_dim();
  const auto& f = a.field();
  IntersectionLattice lattice(l, a.size());

  lattice.levels_.push_back({detail::make_flat(a, rref(ExactMatrix(f, 0, l + 1)))});
  std::size_t total = 1;

  while (true) {
    const auto& current = lattice.levels_.back();
    std::unordered_map<std::string, std::size_t> seen;
    std::vector<Flat> next;
    for (const auto& x : current) {
      const std::size_t codim = x.codim;
      for (std::size_t h = 0; h < a.size(); ++h) {
        if (x.contains.contains(h)) continue;
        ExactMatrix stacked(f, codim + 1, l + 1);
        for (std::size_t i = 0; i < codim; ++i)
          for (std::size_t j = 0; j <= l; ++j) stacked(i, j) = x.equations.reduced(i, j);
        const auto row = a[h].augmented_row();
        for (std::size_t j = 0; j <= l; ++j) stacked(codim, j) = row[j];
        auto e = rref(std::move(stacked));
        if (e.pivot_columns.back() == l) continue;  // inconsistent: empty intersection
        std::string key = e.reduced.top_rows(e.rank).key();
        if (seen.contains(key)) continue;
        seen.emplace(std::move(key), next.size());
        next.push_back(detail::make_flat(a, std::move(e)));
        if (++total > options.flat_cap) {
          auto counts = lattice.flats_per_level();
          counts.push_back(next.size());
          throw ComputationCap("intersection lattice exceeded the flat cap of " + std::to_string(options.flat_cap) +
                               " (partial levels: " + detail::level_summary(counts) + ")");
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end(), [](const Flat& p, const Flat& q) { return p.key < q.key; });
    lattice.levels_.push_back(std::move(next));
  }

  // mu(X) = -sum_{Y < X} mu(Y)
  const auto& levels = lattice.levels_;
  auto& mu = lattice.moebius_;
  mu.resize(levels.size());
  mu[0] = {BigInt(1)};
  for (std::size_t k = 1; k < levels.size(); ++k) {
    mu[k].assign(levels[k].size(), 0);
    for (std::size_t i = 0; i < levels[k].size(); ++i) {
      const IndexSet& cx = levels[k][i].contains;
      BigInt sum = 0;
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t m = 0; m < levels[j].size(); ++m)
          if (levels[j][m].contains.is_subset_of(cx)) sum += mu[j][m];
      mu[k][i] = -sum;
    }
  }
  return lattice;
}

/// chi(A, t) = sum_X mu(X) t^(dim X).
inline IntegerPolynomial characteristic_polynomial(const IntersectionLattice& lattice) {
  IntegerPolynomial chi;
  const auto& levels = lattice.levels();
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (const auto& m : lattice.moebius()[k]) chi.add_to_coefficient(lattice.ambient_dim() - k, m);
  return chi;
}

/// pi(A, t) = sum_X mu(X) (-t)^(codim X).
inline IntegerPolynomial poincare_polynomial(const IntersectionLattice& lattice) {
  IntegerPolynomial pi;
  const auto& levels = lattice.levels();
  for (std::size_t k = 0; k < levels.size(); ++k)
    for (const auto& m : lattice.moebius()[k]) pi.add_to_coefficient(k, (k % 2 == 0) ? BigInt(m) : BigInt(-m));
  return pi;
}

/// Order-sensitive fingerprint of the Moebius values: sum over flats in
/// canonical order of (position + 1) * mu.
inline BigInt moebius_checksum(const IntersectionLattice& lattice) {
  BigInt sum = 0;
  unsigned long pos = 1;
  for (const auto& level : lattice.moebius())
    for (const auto& m : level) sum += m * pos++;
  return sum;
}

struct RegionCount {
  BigInt regions;
  BigInt bounded;
};

/// Zaslavsky: regions = (-1)^l chi(-1), bounded = (-1)^rank chi(1).
/// Only defined for arrangements whose coefficients are all real.
inline RegionCount region_count(const Arrangement& a, const IntersectionLattice& lattice) {
  if (auto bad = a.first_non_real()) {
    throw InvalidInput("region count needs a real arrangement; hyperplane " + std::to_string(*bad) + " (" +
                       a[*bad].key() + ") has non-real coefficients");
  }
  const auto chi = characteristic_polynomial(lattice);
  RegionCount rc;
  rc.regions = chi.evaluate(-1);
  if (a.ambient_dim() % 2 == 1) rc.regions = -rc.regions;
  rc.bounded = chi.evaluate(1);
  if (a.rank() % 2 == 1) rc.bounded = -rc.bounded;
  return rc;
}

inline RegionCount region_count(const Arrangement& a, const LatticeOptions& options = {}) {
  if (auto bad = a.first_non_real()) {
    throw InvalidInput("region count needs a real arrangement; hyperplane " + std::to_string(*bad) + " (" +
                       a[*bad].key() + ") has non-real coefficients");
  }
  return region_count(a, intersection_lattice(a, options));
}

}  // namespace symres
