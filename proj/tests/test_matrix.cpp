#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "symres/matrix.hpp"

using namespace symres;

namespace {

ExactMatrix rational_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Scalar>> s;
  for (const auto& r : rows) {
    s.emplace_back();
    for (long v : r) s.back().emplace_back(v);
  }
  return ExactMatrix::from_rows(FieldDescriptor::rational(), s);
}

}  // namespace

TEST(Matrix, IdentityIsItsOwnRref) {
  const auto id = ExactMatrix::identity(FieldDescriptor::rational(), 3);
  const auto e = rref(id);
  EXPECT_EQ(e.reduced, id);
  EXPECT_EQ(e.rank, 3u);
}

TEST(Matrix, RankOneRows) {
  const auto e = rref(rational_matrix({{1, 1}, {2, 2}}));
  EXPECT_EQ(e.reduced, rational_matrix({{1, 1}, {0, 0}}));
  EXPECT_EQ(e.rank, 1u);
  EXPECT_EQ(e.pivot_columns, (std::vector<std::size_t>{0}));
}

TEST(Matrix, G4NormalsHaveRankTwo) {
  const auto f = FieldDescriptor::cyclotomic(3);
  const Scalar one = Scalar::one(f), w = Scalar::zeta_power(f, 1), w2 = Scalar::zeta_power(f, 2);
  const auto m = ExactMatrix::from_rows(f, {{one, one}, {w, w2}, {w2, w}});
  EXPECT_EQ(rank(m), 2u);

  // Oracle: every 2x2 minor a d - b c, expanded by hand with w^2 = -1 - w,
  // w^3 = 1, w^4 = w. Rows (1,1),(w,w^2): w^2 - w = -1 - 2w.
  // Rows (1,1),(w^2,w): w - w^2 = 1 + 2w. Rows (w,w^2),(w^2,w): w^2 - w^4 = -1 - 2w.
  const auto minor = [](const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) { return a * d - b * c; };
  std::vector<Rational> m1{-1, -2}, m2{1, 2};
  EXPECT_EQ(minor(one, one, w, w2), Scalar::from_coords(f, m1));
  EXPECT_EQ(minor(one, one, w2, w), Scalar::from_coords(f, m2));
  EXPECT_EQ(minor(w, w2, w2, w), Scalar::from_coords(f, m1));
}

TEST(Matrix, KernelAnnihilates) {
  const auto m = rational_matrix({{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}});
  const auto k = kernel(m);
  EXPECT_EQ(k.cols(), 2u);
  EXPECT_TRUE((m * k).is_zero());
  EXPECT_EQ(rank(k), 2u);
}

TEST(Matrix, InverseRoundTrip) {
  const auto m = rational_matrix({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, ExactMatrix::identity(FieldDescriptor::rational(), 3));
  EXPECT_FALSE(inverse(rational_matrix({{1, 2}, {2, 4}})).has_value());
}

TEST(Matrix, MixedFieldRowsRejected) {
  const auto f3 = FieldDescriptor::cyclotomic(3);
  EXPECT_THROW(ExactMatrix::from_rows(FieldDescriptor::rational(), {{Scalar::one(f3)}}), InvalidInput);
}

TEST(Matrix, RankAgreesWithTransposeAndOracle) {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  std::uniform_int_distribution<long> entry(-3, 3);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    std::vector<std::vector<long>> rows(r, std::vector<long>(c));
    std::vector<oracle::Row> q(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        rows[i][j] = entry(rng);
        q[i].emplace_back(rows[i][j]);
      }
    const auto m = rational_matrix(rows);
    const auto rk = rank(m);
    EXPECT_EQ(rk, rank(m.transpose()));
    EXPECT_EQ(rk, oracle::rank(q));
    EXPECT_EQ(kernel(m).cols(), c - rk);
  }
}

TEST(Matrix, ReduceAgainstDetectsMembership) {
  const auto e = rref(rational_matrix({{1, 0, 1}, {0, 1, 1}}));
  std::vector<Scalar> in_span{Scalar(2), Scalar(3), Scalar(5)};
  std::vector<Scalar> outside{Scalar(0), Scalar(0), Scalar(1)};
  for (const auto& v : reduce_against(e, in_span)) EXPECT_TRUE(v.is_zero());
  bool any = false;
  for (const auto& v : reduce_against(e, outside)) any = any || !v.is_zero();
  EXPECT_TRUE(any);
}
