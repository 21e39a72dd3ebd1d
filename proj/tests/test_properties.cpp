#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "symres/arrangement.hpp"
#include "symres/lattice.hpp"
#include "symres/properties.hpp"

using namespace symres;

namespace {

constexpr std::uint64_t kSeed = 20240607;

Arrangement from_planes(const std::vector<oracle::Plane>& planes, std::size_t dim) {
  std::vector<RawHyperplane> raw;
  for (const auto& p : planes) {
    RawHyperplane h;
    for (long v : p.normal) h.normal.emplace_back(v);
    if (p.offset != 0) h.offset = Scalar(p.offset);
    raw.push_back(std::move(h));
  }
  return build_arrangement(FieldDescriptor::rational(), dim, raw);
}

}  // namespace

// The lattice route against the test-side Whitney subset sum, on 150 random
// rational arrangements with at most 12 hyperplanes.
TEST(Properties, WhitneyOracleMatchesLattice) {
  std::mt19937_64 rng(kSeed);
  std::uniform_int_distribution<std::size_t> dim_d(1, 4), size_d(0, 12);
  std::size_t cases = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = dim_d(rng);
    const auto planes = oracle::dedup(oracle::random_planes(rng, size_d(rng), dim, 2, 0.3));
    ASSERT_LE(planes.size(), 12u);
    const auto a = from_planes(planes, dim);
    ASSERT_EQ(a.size(), planes.size());
    const auto chi = characteristic_polynomial(intersection_lattice(a));
    const auto whitney = oracle::whitney(planes, dim);
    EXPECT_EQ(chi, IntegerPolynomial(whitney)) << a.to_string();
    ++cases;
  }
  EXPECT_GE(cases, 100u);
}

TEST(Properties, LibrarySuitePassesWithRecordedSeed) {
  PropertyOptions opts;
  opts.seed = kSeed;
  opts.cases = 120;
  const auto r = run_property_suite(opts);
  EXPECT_EQ(r.seed, kSeed);
  for (const char* p : {"whitney", "deletion_restriction", "cone", "moebius_row_sum", "zaslavsky"}) {
    EXPECT_GE(r.checked.at(p), 100u) << p;
    EXPECT_EQ(r.failures_of(p), 0u) << p;
  }
  for (const auto& f : r.failures) ADD_FAILURE() << f.property << " case " << f.case_index << ": " << f.detail;
}

TEST(Properties, DeletionRestrictionOnCharacteristicPolynomial) {
  std::mt19937_64 rng(kSeed + 1);
  PropertyOptions opts;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_arrangement(rng, opts);
    if (a.empty()) continue;
    const auto chi = characteristic_polynomial(intersection_lattice(a));
    for (std::size_t h = 0; h < a.size(); ++h) {
      const auto dr = deletion_restriction(a, h);
      const auto cd = characteristic_polynomial(intersection_lattice(dr.deleted));
      const auto cr = characteristic_polynomial(intersection_lattice(dr.restricted));
      EXPECT_EQ(chi, cd - cr) << a.to_string() << " h=" << h;
    }
  }
}

TEST(Properties, ZaslavskyAgainstRegionRecursion) {
  std::mt19937_64 rng(kSeed + 2);
  PropertyOptions opts;
  opts.affine_probability = 0.6;
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_arrangement(rng, opts);
    const auto lattice = intersection_lattice(a);
    const auto rc = region_count(a, lattice);
    EXPECT_EQ(rc.regions, regions_by_deletion(a)) << a.to_string();
    EXPECT_EQ(rc.regions, poincare_polynomial(lattice).evaluate(1));
  }
}

TEST(Properties, SuiteDetectsABrokenInvariant) {
  // The harness is only useful if it can fail: a wrong polynomial must differ.
  const auto a = build_arrangement(FieldDescriptor::rational(), 2,
                                   {{{Scalar(1), Scalar(0)}, std::nullopt}, {{Scalar(0), Scalar(1)}, std::nullopt}});
  EXPECT_NE(whitney_characteristic(a), ((IntegerPolynomial{1, -2, 1}) + IntegerPolynomial{0, 1}));
  EXPECT_EQ(whitney_characteristic(a), (IntegerPolynomial{1, -2, 1}));
}
