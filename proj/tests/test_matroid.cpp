#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "symres/catalog.hpp"
#include "symres/lattice.hpp"
#include "symres/matroid.hpp"

using namespace symres;

namespace {

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

const std::vector<oracle::Plane> kBoolean3{{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}};
const std::vector<oracle::Plane> kBraid3{{{1, -1, 0}, 0}, {{1, 0, -1}, 0}, {{0, 1, -1}, 0}};

}  // namespace

TEST(Circuits, G4HasOneCircuit) {
  const auto c = circuits(g4_arrangement());
  ASSERT_EQ(c.circuits.size(), 1u);
  EXPECT_EQ(c.circuits[0], (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Circuits, BooleanHasNone) { EXPECT_TRUE(circuits(from_planes(kBoolean3, 3)).circuits.empty()); }

TEST(Circuits, FourConcurrentLines) {
  const auto a = from_planes({{{1, 0}, 0}, {{0, 1}, 0}, {{1, 1}, 0}, {{1, -1}, 0}}, 2);
  const auto c = circuits(a);
  ASSERT_EQ(c.circuits.size(), 4u);
  for (const auto& circuit : c.circuits) {
    EXPECT_EQ(circuit.size(), 3u);
    // rank oracle: dependent, and each 2-subset independent
    std::vector<oracle::Row> rows;
    for (auto i : circuit) rows.push_back({a[i].normal()[0].rational_value(), a[i].normal()[1].rational_value()});
    EXPECT_EQ(oracle::rank(rows), 2u);
  }
}

TEST(Circuits, AffineDependenceNeedsACommonPoint) {
  // x = 0, x = 1, y = 0: the two parallel lines never meet, so no circuit.
  const auto a = from_planes({{{1, 0}, 0}, {{1, 0}, 1}, {{0, 1}, 0}}, 2);
  EXPECT_TRUE(circuits(a).circuits.empty());
  // Three concurrent affine lines through (1, 1).
  const auto b = from_planes({{{1, 0}, 1}, {{0, 1}, 1}, {{1, 1}, 2}}, 2);
  EXPECT_EQ(circuits(b).circuits.size(), 1u);
}

TEST(Nbc, G4BasisMatchesSixMonomials) {
  MatroidOptions opts;
  opts.record_sets = true;
  const auto nbc = nbc_basis(g4_arrangement(), opts);
  EXPECT_EQ(nbc.counts, (std::vector<BigInt>{1, 3, 2}));
  const std::vector<std::vector<std::size_t>> expected{{}, {0}, {1}, {2}, {0, 1}, {0, 2}};
  std::vector<std::vector<std::size_t>> sets;
  for (auto level : nbc.sets) {
    std::sort(level.begin(), level.end());
    sets.insert(sets.end(), level.begin(), level.end());
  }
  EXPECT_EQ(sets, expected);
}

TEST(Nbc, Q8D8ReproducesPoincare) {
  EXPECT_EQ(nbc_betti(q8d8_arrangement()), (std::vector<BigInt>{1, 21, 170, 650, 1125, 625}));
}

TEST(Nbc, EmptyArrangement) {
  EXPECT_EQ(nbc_betti(Arrangement(FieldDescriptor::rational(), 2)), (std::vector<BigInt>{1}));
}

TEST(Nbc, SubsetCapIsReported) {
  MatroidOptions opts;
  opts.subset_cap = 100;
  EXPECT_THROW(nbc_betti(q8d8_arrangement(), opts), ComputationCap);
}

TEST(FiniteField, BooleanAndBraidAtSeven) {
  EXPECT_EQ(finite_field_count(from_planes(kBoolean3, 3), 7), 216u);
  EXPECT_EQ(finite_field_count(from_planes(kBraid3, 3), 7), 210u);
  EXPECT_EQ(finite_field_count(from_planes(kBraid3, 3), 11), 990u);
}

TEST(FiniteField, AffineA1Catalan) {
  const std::vector<oracle::Plane> planes{{{1}, 0}, {{1}, 1}, {{1}, -1}};
  EXPECT_EQ(finite_field_count(from_planes(planes, 1), 11), 8u);
}

TEST(FiniteField, BadAndNonPrimeModuliRejected) {
  const auto braid = from_planes(kBraid3, 3);
  EXPECT_THROW(finite_field_count(braid, 9), InvalidInput);
  // 2 divides the minor of x = 0 and x = 2 style data: {x = 0, x = 2} collapse mod 2.
  const auto a = from_planes({{{1}, 0}, {{1}, 2}}, 1);
  EXPECT_THROW(finite_field_count(a, 2), InvalidInput);
  EXPECT_EQ(finite_field_count(a, 3), 1u);
}

TEST(FiniteField, PointCapIsReported) {
  MatroidOptions opts;
  opts.point_cap = 1000;
  EXPECT_THROW(finite_field_count(q8d8_arrangement(), 7, opts), ComputationCap);
}

TEST(FiniteField, AgreesWithBruteForceAndChiOnRandomArrangements) {
  std::mt19937_64 rng(99173);
  std::uniform_int_distribution<std::size_t> dim_d(1, 3), size_d(1, 7);
  int compared = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t dim = dim_d(rng);
    const auto planes = oracle::dedup(oracle::random_planes(rng, size_d(rng), dim, 3, 0.4));
    const auto a = from_planes(planes, dim);
    const auto chi = characteristic_polynomial(intersection_lattice(a));
    for (auto q : good_primes(a, 2)) {
      const auto counted = finite_field_count(a, q);
      EXPECT_EQ(counted, oracle::brute_force_count(planes, dim, static_cast<long>(q)));
      EXPECT_EQ(BigInt(static_cast<unsigned long>(counted)), chi.evaluate(static_cast<long>(q)));
      ++compared;
    }
  }
  EXPECT_GE(compared, 100);
}
