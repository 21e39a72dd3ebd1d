#include <gtest/gtest.h>

#include <vector>

#include "symres/arrangement.hpp"
#include "symres/catalog.hpp"
#include "symres/lattice.hpp"

using namespace symres;

namespace {

const FieldDescriptor Q = FieldDescriptor::rational();

Arrangement rational(std::size_t dim, const std::vector<std::vector<long>>& rows,
                     const std::vector<long>& offsets = {}) {
  std::vector<RawHyperplane> raw;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    RawHyperplane h;
    for (long v : rows[i]) h.normal.emplace_back(v);
    if (i < offsets.size() && offsets[i] != 0) h.offset = Scalar(offsets[i]);
    raw.push_back(std::move(h));
  }
  return build_arrangement(Q, dim, raw);
}

Arrangement boolean(std::size_t l) {
  std::vector<std::vector<long>> rows(l, std::vector<long>(l, 0));
  for (std::size_t i = 0; i < l; ++i) rows[i][i] = 1;
  return rational(l, rows);
}

Arrangement braid3() { return rational(3, {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}}); }

IntegerPolynomial chi_of(const Arrangement& a) { return characteristic_polynomial(intersection_lattice(a)); }
IntegerPolynomial pi_of(const Arrangement& a) { return poincare_polynomial(intersection_lattice(a)); }

}  // namespace

TEST(Arrangement, Q8D8HasTwentyOneCentralHyperplanes) {
  const auto a = q8d8_arrangement();
  EXPECT_EQ(a.size(), 21u);
  EXPECT_EQ(a.ambient_dim(), 5u);
  EXPECT_TRUE(a.central());
  EXPECT_TRUE(a.field().is_rational());
}

TEST(Arrangement, ProportionalNormalsCollapse) {
  const auto a = rational(2, {{1, 1}, {2, 2}});
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].normal()[0], Scalar(1));
}

TEST(Arrangement, G4IsThreeLinesInThePlane) {
  const auto a = g4_arrangement();
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.ambient_dim(), 2u);
  EXPECT_TRUE(a.central());
  EXPECT_EQ(a.field(), FieldDescriptor::cyclotomic(3));
}

TEST(Arrangement, ZeroNormalAndFieldMismatchRejected) {
  EXPECT_THROW(rational(2, {{0, 0}}), InvalidInput);
  const auto f3 = FieldDescriptor::cyclotomic(3);
  EXPECT_THROW(build_arrangement(Q, 1, {{{Scalar::one(f3)}, std::nullopt}}), InvalidInput);
  EXPECT_THROW(rational(2, {{1, 0, 0}}), InvalidInput);
}

TEST(Lattice, EmptyArrangementIsOneFlat) {
  const Arrangement a(Q, 3);
  const auto l = intersection_lattice(a);
  EXPECT_EQ(l.flat_count(), 1u);
  EXPECT_EQ(l.moebius()[0][0], 1);
  EXPECT_EQ(characteristic_polynomial(l), (IntegerPolynomial{0, 0, 0, 1}));
}

TEST(Lattice, BooleanLattice) {
  const auto l = intersection_lattice(boolean(3));
  EXPECT_EQ(l.flats_per_level(), (std::vector<std::size_t>{1, 3, 3, 1}));
  for (std::size_t c = 0; c < l.levels().size(); ++c)
    for (const auto& mu : l.moebius()[c]) EXPECT_EQ(mu, c % 2 ? -1 : 1);
  // (t - 1)^3
  EXPECT_EQ(characteristic_polynomial(l), (IntegerPolynomial{-1, 3, -3, 1}));
}

TEST(Lattice, G4MoebiusValues) {
  const auto l = intersection_lattice(g4_arrangement());
  ASSERT_EQ(l.flats_per_level(), (std::vector<std::size_t>{1, 3, 1}));
  EXPECT_EQ(l.moebius()[0][0], 1);
  for (const auto& mu : l.moebius()[1]) EXPECT_EQ(mu, -1);
  EXPECT_EQ(l.moebius()[2][0], 2);
  EXPECT_EQ(characteristic_polynomial(l), (IntegerPolynomial{2, -3, 1}));
  EXPECT_EQ(poincare_polynomial(l), (IntegerPolynomial{1, 3, 2}));
}

TEST(Lattice, MoebiusSignsAlternate) {
  const auto l = intersection_lattice(q8d8_arrangement());
  for (std::size_t c = 0; c < l.levels().size(); ++c)
    for (const auto& mu : l.moebius()[c]) EXPECT_EQ(sgn(mu), c % 2 ? -1 : 1);
}

TEST(Lattice, BraidCharacteristicPolynomial) {
  // t (t - 1) (t - 2)
  EXPECT_EQ(chi_of(braid3()), (IntegerPolynomial{0, 2, -3, 1}));
}

TEST(Lattice, Q8D8PoincarePolynomial) {
  const auto a = q8d8_arrangement();
  const auto pi = pi_of(a);
  EXPECT_EQ(pi, (IntegerPolynomial{1, 21, 170, 650, 1125, 625}));
  EXPECT_EQ(pi.evaluate(1), 2592);
  EXPECT_EQ(region_count(a).regions, 2592);
}

TEST(Lattice, SingleHyperplane) {
  const auto a = rational(2, {{1, 0}});
  EXPECT_EQ(pi_of(a), (IntegerPolynomial{1, 1}));
  const auto rc = region_count(a);
  EXPECT_EQ(rc.regions, 2);
  EXPECT_EQ(rc.bounded, 0);
}

TEST(Lattice, FourConcurrentLinesGiveEightRegions) {
  const auto a = rational(2, {{1, 0}, {0, 1}, {1, 1}, {1, -1}});
  EXPECT_EQ(region_count(a).regions, 8);
}

TEST(Lattice, AffineRegionsAndBoundedRegions) {
  // x = 0, x = 1, x = -1 on the line: 4 regions, 2 bounded.
  const auto a = rational(1, {{1}, {1}, {1}}, {0, 1, -1});
  const auto rc = region_count(a);
  EXPECT_EQ(rc.regions, 4);
  EXPECT_EQ(rc.bounded, 2);
  // Three lines in general position: 7 regions, 1 bounded.
  const auto b = rational(2, {{1, 0}, {0, 1}, {1, 1}}, {0, 0, 1});
  EXPECT_EQ(region_count(b).regions, 7);
  EXPECT_EQ(region_count(b).bounded, 1);
}

TEST(Lattice, ParallelHyperplanesDoNotMeet) {
  const auto a = rational(2, {{1, 0}, {1, 0}}, {0, 1});
  const auto l = intersection_lattice(a);
  EXPECT_EQ(l.flats_per_level(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(characteristic_polynomial(l), (IntegerPolynomial{0, -2, 1}));
}

TEST(Lattice, RegionCountNeedsRealCoefficients) {
  try {
    region_count(g4_arrangement());
    FAIL() << "expected InvalidInput";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("hyperplane 1"), std::string::npos) << e.what();
  }
}

TEST(Lattice, FlatCapIsReported) {
  EXPECT_THROW(intersection_lattice(q8d8_arrangement(), LatticeOptions{50}), ComputationCap);
}

TEST(Cone, EmptyArrangementBecomesOneHyperplane) {
  const auto c = cone(Arrangement(Q, 1));
  EXPECT_EQ(c.ambient_dim(), 2u);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].normal(), (std::vector<Scalar>{Scalar(1), Scalar(0)}));
}

TEST(Cone, AffineA1CatalanCone) {
  const auto affine = rational(1, {{1}, {1}, {1}}, {0, -1, 1});
  const auto c = cone(affine);
  // coordinates (x0, x): x = 0, x + x0 = 0, x - x0 = 0, x0 = 0
  EXPECT_TRUE(same_hyperplanes(c, rational(2, {{0, 1}, {1, 1}, {-1, 1}, {1, 0}})));
  EXPECT_EQ(pi_of(c), (IntegerPolynomial{1, 1}) * pi_of(affine));
  EXPECT_EQ(pi_of(c), (IntegerPolynomial{1, 1}) * (IntegerPolynomial{1, 3}));
}

TEST(DeletionRestriction, Boolean) {
  const auto dr = deletion_restriction(boolean(2), 0);
  EXPECT_TRUE(same_hyperplanes(dr.deleted, rational(2, {{0, 1}})));
  EXPECT_EQ(dr.restricted.ambient_dim(), 1u);
  EXPECT_EQ(dr.restricted.size(), 1u);
}

TEST(DeletionRestriction, BraidImagesMerge) {
  const auto dr = deletion_restriction(braid3(), 0);
  EXPECT_EQ(dr.restricted.size(), 1u);
  EXPECT_EQ(dr.restricted.ambient_dim(), 2u);
}

TEST(DeletionRestriction, G4Identity) {
  const auto a = g4_arrangement();
  const auto dr = deletion_restriction(a, 0);
  EXPECT_EQ(dr.deleted.size(), 2u);
  EXPECT_EQ(chi_of(dr.deleted), (IntegerPolynomial{1, -2, 1}));
  EXPECT_EQ(chi_of(dr.restricted), (IntegerPolynomial{-1, 1}));
  EXPECT_EQ(chi_of(dr.deleted) - chi_of(dr.restricted), chi_of(a));
}
