#pragma once

// Built-in worked examples:
//   q8d8          Q8 x_{Z2} D8 on C^2 (x) C^2, its 21-hyperplane arrangement in c = C^5
//   g4            the complex reflection group G4 doubled to C^2 + (C^2)*, 3 lines over Q(zeta_3)
//   wreath:T:N    S_N wr G with McKay type T, via the coned Catalan arrangement

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symres/arrangement.hpp"
#include "symres/counting.hpp"
#include "symres/error.hpp"
#include "symres/group.hpp"
#include "symres/matrix.hpp"
#include "symres/polynomial.hpp"
#include "symres/root_systems.hpp"

namespace symres {

struct ExpectedValues {
  std::optional<IntegerPolynomial> poincare;
  BigInt os_dimension;
  BigInt count;
  std::optional<std::size_t> group_order;
  std::optional<std::size_t> reflection_classes;
  std::optional<std::size_t> parabolic_classes;
  std::optional<std::string> parabolic_label;  // common label of every parabolic class
};

struct GroupData {
  FieldDescriptor field;
  std::size_t dim = 0;
  ExactMatrix form;
  std::vector<ExactMatrix> generators;

  MatrixGroup make() const { return MatrixGroup(field, dim, form, generators); }
};

struct CatalogEntry {
  std::string name;
  std::string description;
  Arrangement arrangement;
  NamikawaWeylData weyl;
  WeylOverrides weyl_overrides;
  std::optional<GroupData> group;
  std::optional<CatalanSpec> wreath;
  ExpectedValues expected;
};

namespace detail {

inline ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix k(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

// g -> diag(g, g^{-T}) on V + V*, which preserves [[0, I], [-I, 0]].
inline ExactMatrix double_to_symplectic(const ExactMatrix& g) {
  const std::size_t n = g.rows();
  const auto inv = inverse(g);
  if (!inv) throw InvalidInput("cannot double a singular matrix");
  const ExactMatrix dual = inv->transpose();
  ExactMatrix d(g.field(), 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      d(i, j) = g(i, j);
      d(n + i, n + j) = dual(i, j);
    }
  return d;
}

inline ExactMatrix standard_symplectic_form(const FieldDescriptor& f, std::size_t n) {
  ExactMatrix j(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = Scalar::one(f);
    j(n + i, i) = -Scalar::one(f);
  }
  return j;
}

inline ExactMatrix matrix2(const FieldDescriptor& f, Scalar a, Scalar b, Scalar c, Scalar d) {
  return ExactMatrix::from_rows(f, {{std::move(a), std::move(b)}, {std::move(c), std::move(d)}});
}

}  // namespace detail

/// The 21 hyperplanes in coordinates (c1..c5): the five c_i = 0, then the
/// sixteen c1 +- c2 +- c3 +- c4 +- c5 = 0.
inline Arrangement q8d8_arrangement() {
  const auto f = FieldDescriptor::rational();
  std::vector<RawHyperplane> raw;
  for (std::size_t i = 0; i < 5; ++i) {
    std::vector<Scalar> n(5, Scalar(0));
    n[i] = Scalar(1);
    raw.push_back({n, std::nullopt});
  }
  for (unsigned signs = 0; signs < 16; ++signs) {
    std::vector<Scalar> n{Scalar(1)};
    for (unsigned k = 0; k < 4; ++k) n.emplace_back((signs >> (3 - k)) & 1U ? -1L : 1L);
    raw.push_back({n, std::nullopt});
  }
  return build_arrangement(f, 5, raw);
}

/// H1 = {c1 + c2 = 0}, H2 = {w c1 + w^2 c2 = 0}, H3 = {w^2 c1 + w c2 = 0}, w = zeta_3.
inline Arrangement g4_arrangement() {
  const auto f = FieldDescriptor::cyclotomic(3);
  const Scalar one = Scalar::one(f);
  const Scalar w = Scalar::zeta_power(f, 1);
  const Scalar w2 = Scalar::zeta_power(f, 2);
  return build_arrangement(f, 2, {{{one, one}, std::nullopt}, {{w, w2}, std::nullopt}, {{w2, w}, std::nullopt}});
}

/// Q8 = <diag(i, -i), [[0,1],[-1,0]]> in SL(2), D8 = <rotation by pi/2, diag(1,-1)>
/// in O(2); the group is their Kronecker image on C^2 (x) C^2, preserving J (x) I.
inline GroupData q8d8_group_data() {
  const auto f = FieldDescriptor::cyclotomic(4);
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f), i = Scalar::zeta_power(f, 1);
  const auto id = ExactMatrix::identity(f, 2);
  const auto qa = detail::matrix2(f, i, zero, zero, -i);
  const auto qb = detail::matrix2(f, zero, one, -one, zero);
  const auto rot = detail::matrix2(f, zero, -one, one, zero);
  const auto flip = detail::matrix2(f, one, zero, zero, -one);
  GroupData g;
  g.field = f;
  g.dim = 4;
  g.form = detail::kronecker(detail::matrix2(f, zero, one, -one, zero), id);
  g.generators = {detail::kronecker(qa, id), detail::kronecker(qb, id), detail::kronecker(id, rot),
                  detail::kronecker(id, flip)};
  return g;
}

/// G4 = <s, t> with s = diag(1, w) and t = I + (w - 1)/3 [[2, 2], [1, 1]], both
/// reflections of order 3 satisfying sts = tst; doubled to Sp(4).
inline GroupData g4_group_data() {
  const auto f = FieldDescriptor::cyclotomic(3);
  const Scalar one = Scalar::one(f), zero = Scalar::zero(f), w = Scalar::zeta_power(f, 1);
  const Scalar third = Scalar(f, Rational(1, 3));
  const Scalar c = (w - one) * third;
  const auto s = detail::matrix2(f, one, zero, zero, w);
  const auto t = detail::matrix2(f, one + c * Scalar(f, 2), c * Scalar(f, 2), c, one + c);
  GroupData g;
  g.field = f;
  g.dim = 4;
  g.form = detail::standard_symplectic_form(f, 2);
  g.generators = {detail::double_to_symplectic(s), detail::double_to_symplectic(t)};
  return g;
}

namespace detail {

inline NamikawaWeylData uniform_weyl(const KleinianLabel& label, std::size_t copies) {
  NamikawaWeylData w;
  for (std::size_t i = 0; i < copies; ++i) {
    w.factors.push_back({label, weyl_order(label), false});
    w.total_order *= w.factors.back().order;
  }
  return w;
}

inline unsigned parse_wreath_n(const std::string& s, const std::string& name) {
  if (s.empty() || s.size() > 6 || s.find_first_not_of("0123456789") != std::string::npos) {
    throw InvalidInput("bad wreath parameter in catalog name '" + name + "'");
  }
  const unsigned n = static_cast<unsigned>(std::stoul(s));
  if (n < 1) throw InvalidInput("wreath parameter must be >= 1 in '" + name + "'");
  return n;
}

}  // namespace detail

inline CatalogEntry wreath_entry(const WeylTypeData& type, unsigned n) {
  CatalanSpec spec{type, n};
  const KleinianLabel label{type.family, type.rank};
  NamikawaWeylData weyl;
  if (n >= 2) weyl.factors.push_back({KleinianLabel{RootFamily::A, 1}, 2, false});
  weyl.factors.push_back({label, type.weyl_order, false});
  for (const auto& f : weyl.factors) weyl.total_order *= f.order;
  ExpectedValues ex;
  ex.count = wreath_count_closed_form(type, n);
  ex.os_dimension = ex.count * weyl.total_order;
  return CatalogEntry{"wreath:" + type.label() + ":" + std::to_string(n),
                      "S_" + std::to_string(n) + " wr G with W_G of type " + type.label(),
                      catalan_arrangement(spec),
                      std::move(weyl),
                      {},
                      std::nullopt,
                      spec,
                      std::move(ex)};
}

/// Looks up "q8d8", "g4" or "wreath:<TYPE>:<N>".
inline CatalogEntry catalog(const std::string& name) {
  if (name == "q8d8") {
    ExpectedValues ex;
    ex.poincare = IntegerPolynomial{1, 21, 170, 650, 1125, 625};
    ex.os_dimension = 2592;
    ex.count = 81;
    ex.group_order = 32;
    ex.reflection_classes = 5;
    ex.parabolic_classes = 5;
    ex.parabolic_label = "A1";
    return CatalogEntry{name,
                        "Q8 x_{Z2} D8 acting on C^4",
                        q8d8_arrangement(),
                        detail::uniform_weyl({RootFamily::A, 1}, 5),
                        {},
                        q8d8_group_data(),
                        std::nullopt,
                        std::move(ex)};
  }
  if (name == "g4") {
    ExpectedValues ex;
    ex.poincare = IntegerPolynomial{1, 3, 2};
    ex.os_dimension = 6;
    ex.count = 2;
    ex.group_order = 24;
    ex.reflection_classes = 2;
    ex.parabolic_classes = 1;
    ex.parabolic_label = "A2";
    NamikawaWeylData weyl;
    weyl.factors.push_back({KleinianLabel{RootFamily::A, 2}, 3, true});
    weyl.total_order = 3;
    return CatalogEntry{name,
                        "complex reflection group G4 acting on C^4",
                        g4_arrangement(),
                        std::move(weyl),
                        WeylOverrides{{0, 3}},
                        g4_group_data(),
                        std::nullopt,
                        std::move(ex)};
  }
  if (name.rfind("wreath:", 0) == 0) {
    const auto rest = name.substr(7);
    const auto colon = rest.find(':');
    if (colon == std::string::npos) throw InvalidInput("catalog name must look like wreath:TYPE:N, got '" + name + "'");
    return wreath_entry(weyl_data(rest.substr(0, colon)), detail::parse_wreath_n(rest.substr(colon + 1), name));
  }
  throw InvalidInput("unknown catalog entry '" + name + "' (expected q8d8, g4 or wreath:TYPE:N)");
}

/// Entries exercised by the self-test.
inline std::vector<std::string> selftest_catalog_names() {
  return {"q8d8", "g4", "wreath:A1:2", "wreath:A1:3", "wreath:A2:2", "wreath:A3:2"};
}

}  // namespace symres
