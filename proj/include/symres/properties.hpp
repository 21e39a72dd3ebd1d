#pragma once

// Randomized invariant checks on small rational arrangements. Every run is
// reproducible from its seed.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "symres/arrangement.hpp"
#include "symres/lattice.hpp"
#include "symres/matroid.hpp"
#include "symres/polynomial.hpp"

namespace symres {

struct PropertyOptions {
  std::uint64_t seed = 20240607;
  std::size_t cases = 120;
  std::size_t max_hyperplanes = 12;
  std::size_t max_dim = 4;
  int coefficient_bound = 2;
  double affine_probability = 0.3;
};

struct PropertyFailure {
  std::size_t case_index = 0;
  std::string property;
  std::string detail;
  std::string arrangement;
};

struct PropertyReport {
  std::uint64_t seed = 0;
  std::size_t cases = 0;
  std::map<std::string, std::size_t> checked;  // property -> cases where it applied
  std::vector<PropertyFailure> failures;

  bool passed() const noexcept { return failures.empty(); }
  std::size_t failures_of(const std::string& property) const {
    std::size_t n = 0;
    for (const auto& f : failures) n += f.property == property;
    return n;
  }
};

inline Arrangement random_arrangement(std::mt19937_64& rng, const PropertyOptions& opts) {
  std::uniform_int_distribution<std::size_t> dim_d(1, opts.max_dim);
  std::uniform_int_distribution<std::size_t> size_d(0, opts.max_hyperplanes);
  std::uniform_int_distribution<int> coef_d(-opts.coefficient_bound, opts.coefficient_bound);
  std::bernoulli_distribution affine_d(opts.affine_probability);
  const std::size_t l = dim_d(rng);
  const std::size_t n = size_d(rng);
  std::vector<RawHyperplane> raw;
  while (raw.size() < n) {
    std::vector<Scalar> normal;
    bool zero = true;
    for (std::size_t j = 0; j < l; ++j) {
      const int c = coef_d(rng);
      zero = zero && c == 0;
      normal.emplace_back(c);
    }
    if (zero) continue;
    std::optional<Scalar> offset;
    if (affine_d(rng)) offset = Scalar(coef_d(rng));
    raw.push_back({std::move(normal), std::move(offset)});
  }
  return build_arrangement(FieldDescriptor::rational(), l, raw);
}

/// chi(t) = sum over subsets S with a common point of (-1)^|S| t^(l - rank S).
inline IntegerPolynomial whitney_characteristic(const Arrangement& a) {
  if (a.size() > 20) throw ComputationCap("Whitney sum over more than 2^20 subsets");
  const LinearMatroid m(a);
  const std::size_t n = a.size();
  std::vector<BigInt> coef(a.ambient_dim() + 1, 0);
  std::vector<std::size_t> subset;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    subset.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) subset.push_back(i);
    if (!m.has_common_point(subset)) continue;
    const std::size_t r = m.rank_of(subset);
    coef[a.ambient_dim() - r] += subset.size() % 2 ? -1 : 1;
  }
  return IntegerPolynomial(std::move(coef));
}

/// r(A) = r(A \ H) + r(A^H), r(empty) = 1; real arrangements only.
inline BigInt regions_by_deletion(const Arrangement& a) {
  if (a.empty()) return 1;
  const auto dr = deletion_restriction(a, a.size() - 1);
  return regions_by_deletion(dr.deleted) + regions_by_deletion(dr.restricted);
}

namespace detail {

/// For every flat X other than the ambient space, the sum of mu(Y) over
/// flats Y containing X is zero.
inline std::string moebius_row_sum_defect(const IntersectionLattice& lattice) {
  const auto& levels = lattice.levels();
  const auto& mu = lattice.moebius();
  for (std::size_t c = 1; c < levels.size(); ++c)
    for (std::size_t x = 0; x < levels[c].size(); ++x) {
      BigInt sum = 0;
      for (std::size_t d = 0; d <= c; ++d)
        for (std::size_t y = 0; y < levels[d].size(); ++y)
          if (levels[d][y].contains.is_subset_of(levels[c][x].contains)) sum += mu[d][y];
      if (sum != 0) return "row sum " + sum.get_str() + " at flat " + levels[c][x].key;
    }
  return {};
}

}  // namespace detail

inline PropertyReport run_property_suite(const PropertyOptions& opts = {}) {
  PropertyReport report;
  report.seed = opts.seed;
  report.cases = opts.cases;
  std::mt19937_64 rng(opts.seed);
  const IntegerPolynomial one_plus_t{1, 1};
  const IntegerPolynomial t{0, 1};

  for (std::size_t k = 0; k < opts.cases; ++k) {
    const Arrangement a = random_arrangement(rng, opts);
    auto fail = [&](const std::string& prop, const std::string& detail) {
      report.failures.push_back({k, prop, detail, a.to_string()});
    };
    const auto lattice = intersection_lattice(a);
    const auto chi = characteristic_polynomial(lattice);
    const auto pi = poincare_polynomial(lattice);

    ++report.checked["whitney"];
    if (const auto w = whitney_characteristic(a); w != chi) {
      fail("whitney", "lattice " + chi.to_string() + " vs Whitney " + w.to_string());
    }

    if (!a.empty()) {
      ++report.checked["deletion_restriction"];
      std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
      const auto dr = deletion_restriction(a, pick(rng));
      const auto pd = poincare_polynomial(intersection_lattice(dr.deleted));
      const auto pr = poincare_polynomial(intersection_lattice(dr.restricted));
      if (pi != pd + t * pr) {
        fail("deletion_restriction", pi.to_string() + " vs " + pd.to_string() + " + t(" + pr.to_string() + ")");
      }
    }

    ++report.checked["cone"];
    if (const auto pc = poincare_polynomial(intersection_lattice(cone(a))); pc != one_plus_t * pi) {
      fail("cone", "pi(cA) = " + pc.to_string() + ", (1+t) pi(A) = " + (one_plus_t * pi).to_string());
    }

    ++report.checked["moebius_row_sum"];
    if (auto defect = detail::moebius_row_sum_defect(lattice); !defect.empty()) fail("moebius_row_sum", defect);

    ++report.checked["zaslavsky"];
    const auto rc = region_count(a, lattice);
    const BigInt direct = regions_by_deletion(a);
    if (rc.regions != pi.evaluate(1) || rc.regions != direct) {
      fail("zaslavsky", "chi(-1) gives " + rc.regions.get_str() + ", pi(1) = " + pi.evaluate(1).get_str() +
                            ", deletion recursion gives " + direct.get_str());
    }
  }
  return report;
}

}  // namespace symres
