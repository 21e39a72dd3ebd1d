#pragma once

// Resolution counts: dim H*(complement) / |W| for a central arrangement, the
// closed product formula for wreath products, and the Namikawa Weyl group
// order assembled from minimal parabolic data.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symres/arrangement.hpp"
#include "symres/error.hpp"
#include "symres/group.hpp"
#include "symres/lattice.hpp"
#include "symres/matroid.hpp"
#include "symres/polynomial.hpp"
#include "symres/root_systems.hpp"

namespace symres {

struct WeylFactor {
  KleinianLabel label;
  BigInt order;
  bool overridden = false;
};

struct NamikawaWeylData {
  std::vector<WeylFactor> factors;
  BigInt total_order = 1;
};

/// Parabolic class index -> |W_B|, used where the normalizer folds the diagram.
using WeylOverrides = std::map<std::size_t, BigInt>;

inline BigInt weyl_order(const KleinianLabel& label) { return weyl_data(label.family, label.rank).weyl_order; }

/// |W| = prod_B |W_B|, with |W_B| the full Weyl group order of B's label when
/// the normalizer quotient acts trivially on B's conjugacy classes.
inline NamikawaWeylData namikawa_weyl_from_group(const std::vector<ParabolicClass>& parabolics,
                                                 const WeylOverrides& overrides = {}) {
  NamikawaWeylData w;
  for (std::size_t b = 0; b < parabolics.size(); ++b) {
    const auto& pc = parabolics[b];
    WeylFactor f{pc.kleinian_label, 0, false};
    if (auto it = overrides.find(b); it != overrides.end()) {
      f.order = it->second;
      f.overridden = true;
    } else if (pc.xi_acts_trivially()) {
      f.order = weyl_order(pc.kleinian_label);
    } else {
      throw InvalidInput("unsupported folding: the normalizer of parabolic class " + std::to_string(b) + " (" +
                         pc.kleinian_label.to_string() +
                         ") permutes its conjugacy classes and no |W_B| override is available");
    }
    w.total_order *= f.order;
    w.factors.push_back(std::move(f));
  }
  return w;
}

struct FiniteFieldCheck {
  std::uint64_t prime = 0;
  std::uint64_t points = 0;
  BigInt chi_value;
};

struct OracleRecord {
  std::string kind;  // "nbc" or "ff"
  bool agrees = true;
  bool skipped = false;
  std::string note;
  std::vector<BigInt> nbc_counts;
  std::vector<FiniteFieldCheck> ff_checks;
};

struct CountReport {
  std::size_t num_hyperplanes = 0;
  std::size_t ambient_dim = 0;
  std::size_t rank = 0;
  IntegerPolynomial characteristic;
  IntegerPolynomial poincare;
  BigInt os_dimension;
  BigInt weyl_order;
  BigInt resolution_count;
  std::optional<BigInt> regions;
  std::vector<std::size_t> flats_per_level;
  BigInt moebius_checksum;
  std::vector<OracleRecord> oracles;
};

/// Summary of an arrangement computed through its intersection lattice.
struct ArrangementSummary {
  std::size_t num_hyperplanes = 0;
  std::size_t ambient_dim = 0;
  std::size_t rank = 0;
  IntegerPolynomial characteristic;
  IntegerPolynomial poincare;
  BigInt os_dimension;
  std::optional<RegionCount> regions;
  std::vector<std::size_t> flats_per_level;
  BigInt moebius_checksum;
};

inline ArrangementSummary summarize(const Arrangement& a, const LatticeOptions& options = {}) {
  const auto lattice = intersection_lattice(a, options);
  ArrangementSummary s;
  s.num_hyperplanes = a.size();
  s.ambient_dim = a.ambient_dim();
  s.rank = lattice.rank();
  s.characteristic = characteristic_polynomial(lattice);
  s.poincare = poincare_polynomial(lattice);
  s.os_dimension = s.poincare.evaluate(1);
  if (!a.first_non_real()) s.regions = region_count(a, lattice);
  s.flats_per_level = lattice.flats_per_level();
  s.moebius_checksum = moebius_checksum(lattice);
  return s;
}

/// count = pi(A, 1) / |W|; for real A also regions = |W| * count.
inline CountReport count_resolutions(const Arrangement& a, const BigInt& weyl_order,
                                     const LatticeOptions& options = {}) {
  if (!a.central()) throw InvalidInput("count_resolutions needs a central arrangement");
  if (weyl_order < 1) throw InvalidInput("Weyl group order must be at least 1");
  const auto s = summarize(a, options);
  CountReport r;
  r.num_hyperplanes = s.num_hyperplanes;
  r.ambient_dim = s.ambient_dim;
  r.rank = s.rank;
  r.characteristic = s.characteristic;
  r.poincare = s.poincare;
  r.os_dimension = s.os_dimension;
  r.weyl_order = weyl_order;
  r.flats_per_level = s.flats_per_level;
  r.moebius_checksum = s.moebius_checksum;
  if (!mpz_divisible_p(r.os_dimension.get_mpz_t(), weyl_order.get_mpz_t())) {
    throw Inconsistency("Orlik-Solomon dimension " + r.os_dimension.get_str() + " is not divisible by |W| = " +
                        weyl_order.get_str());
  }
  r.resolution_count = r.os_dimension / weyl_order;
  if (s.regions) {
    r.regions = s.regions->regions;
    if (*r.regions != r.os_dimension) {
      throw Inconsistency("region count " + r.regions->get_str() + " differs from pi(1) = " + r.os_dimension.get_str());
    }
  }
  return r;
}

/// prod_i ((n-1) h + e_i + 1) / (e_i + 1), asserted integral.
inline BigInt wreath_count_closed_form(const WeylTypeData& type, unsigned n) {
  if (n < 1) throw InvalidInput("wreath parameter n must be >= 1");
  Rational product = 1;
  for (auto e : type.exponents) {
    product *= Rational(BigInt(n - 1) * type.coxeter_number + e + 1, BigInt(e + 1));
  }
  product.canonicalize();
  if (product.get_den() != 1) {
    throw Inconsistency(type.label() + ": closed-form product " + product.get_str() + " is not an integer");
  }
  return product.get_num();
}

/// |W| for S_n wr G: Z_2 x W_G when n >= 2, W_G when n = 1.
inline BigInt wreath_weyl_order(const WeylTypeData& type, unsigned n) {
  return n >= 2 ? BigInt(2 * type.weyl_order) : type.weyl_order;
}

/// Theorem-style count on the coned Catalan arrangement; must match the closed form.
inline CountReport wreath_count_direct(const WeylTypeData& type, unsigned n, const LatticeOptions& options = {}) {
  auto r = count_resolutions(catalan_arrangement({type, n}), wreath_weyl_order(type, n), options);
  const auto closed = wreath_count_closed_form(type, n);
  if (n >= 2 && r.resolution_count != closed) {
    throw Inconsistency(type.label() + ", n = " + std::to_string(n) + ": arrangement route gives " +
                        r.resolution_count.get_str() + ", closed form gives " + closed.get_str());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Oracle cross-checks

inline OracleRecord nbc_cross_check(const Arrangement& a, const IntegerPolynomial& poincare,
                                    const MatroidOptions& options = {}) {
  OracleRecord rec;
  rec.kind = "nbc";
  rec.nbc_counts = nbc_betti(a, options);
  rec.agrees = IntegerPolynomial(rec.nbc_counts) == poincare;
  if (!rec.agrees) rec.note = "nbc counts " + IntegerPolynomial(rec.nbc_counts).to_string() + " vs lattice " + poincare.to_string();
  return rec;
}

inline OracleRecord ff_cross_check(const Arrangement& a, const IntegerPolynomial& chi, std::size_t primes = 2,
                                   const MatroidOptions& options = {}) {
  OracleRecord rec;
  rec.kind = "ff";
  if (!a.field().is_rational()) {
    rec.skipped = true;
    rec.note = "finite-field count needs a rational arrangement";
    return rec;
  }
  // Prefer primes with chi(q) != 0: agreement at a zero of chi says less.
  const auto minors = nonzero_minors(a);
  std::vector<std::uint64_t> chosen, zeros;
  for (auto q : good_primes(a, minors, primes + 8, options)) {
    if (chosen.size() == primes) break;
    (chi.evaluate(BigInt(static_cast<unsigned long>(q))) != 0 ? chosen : zeros).push_back(q);
  }
  for (std::size_t i = 0; chosen.size() < primes && i < zeros.size(); ++i) chosen.push_back(zeros[i]);
  std::sort(chosen.begin(), chosen.end());
  for (auto q : chosen) {
    FiniteFieldCheck c;
    c.prime = q;
    c.points = finite_field_count(a, q, minors, options);
    c.chi_value = chi.evaluate(BigInt(static_cast<unsigned long>(q)));
    if (c.chi_value != BigInt(static_cast<unsigned long>(c.points))) rec.agrees = false;
    rec.ff_checks.push_back(std::move(c));
  }
  if (rec.ff_checks.size() < primes) {
    rec.note = "only " + std::to_string(rec.ff_checks.size()) + " good prime(s) within the point cap";
    if (rec.ff_checks.empty()) rec.skipped = true;
  }
  if (!rec.agrees) rec.note = "finite-field count differs from chi(q)";
  return rec;
}

}  // namespace symres
