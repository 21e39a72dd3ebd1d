#pragma once

// Simply laced root systems and the coned Catalan-type arrangements
//   { lambda(x) + m alpha = 0 : lambda in R+, 1-n <= m <= n-1 } and { alpha = 0 }.
//
// Roots are realized in simple-root coordinates: a positive root
// sum c_i alpha_i is the integer vector (c_1, ..., c_l), read as the linear
// form x -> sum c_i x_i on h, where x_i = alpha_i(x).

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "symres/arrangement.hpp"
#include "symres/error.hpp"
#include "symres/exact_arith.hpp"

namespace symres {

enum class RootFamily { A, D, E };

struct WeylTypeData {
  RootFamily family = RootFamily::A;
  std::size_t rank = 0;
  std::vector<unsigned> exponents;
  unsigned coxeter_number = 0;
  std::vector<std::vector<int>> positive_roots;  // simple-root coordinates, by height then lex
  BigInt weyl_order;

  std::string label() const {
    const char f = family == RootFamily::A ? 'A' : family == RootFamily::D ? 'D' : 'E';
    return std::string(1, f) + std::to_string(rank);
  }

  static constexpr const char* realization = "simple-root coordinates";
};

namespace detail {

// Symmetric Cartan matrix, Bourbaki numbering.
inline std::vector<std::vector<int>> cartan_matrix(RootFamily family, std::size_t l) {
  std::vector<std::vector<int>> c(l, std::vector<int>(l, 0));
  auto link = [&](std::size_t i, std::size_t j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
  for (std::size_t i = 0; i < l; ++i) c[i][i] = 2;
  switch (family) {
    case RootFamily::A:
      for (std::size_t i = 1; i < l; ++i) link(i, i + 1);
      break;
    case RootFamily::D:
      for (std::size_t i = 1; i + 1 < l; ++i) link(i, i + 1);  // chain 1 - ... - (l-1)
      link(l - 2, l);
      break;
    case RootFamily::E:
      link(1, 3);
      link(3, 4);
      link(2, 4);
      for (std::size_t i = 4; i < l; ++i) link(i, i + 1);
      break;
  }
  return c;
}

// Positive roots of a simply laced system: beta + alpha_i is a root iff (beta, alpha_i) = -1.
inline std::vector<std::vector<int>> positive_roots(const std::vector<std::vector<int>>& cartan) {
  const std::size_t l = cartan.size();
  std::vector<std::vector<int>> roots;
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> r(l, 0);
    r[i] = 1;
    layer.push_back(r);
    seen.insert(r);
  }
  while (!layer.empty()) {
    std::sort(layer.begin(), layer.end());
    roots.insert(roots.end(), layer.begin(), layer.end());
    std::vector<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < l; ++i) {
        int pairing = 0;
        for (std::size_t j = 0; j < l; ++j) pairing += beta[j] * cartan[j][i];
        if (pairing != -1) continue;
        auto up = beta;
        ++up[i];
        if (seen.insert(up).second) next.push_back(up);
      }
    }
    layer = std::move(next);
  }
  return roots;
}

}  // namespace detail

/// Exponents, Coxeter number, positive roots and |W| for A_l (l>=1), D_l (l>=4), E_6/7/8.
inline constexpr std::size_t max_root_rank = 100;

inline WeylTypeData weyl_data(RootFamily family, std::size_t rank) {
  if (rank > max_root_rank) {
    throw InvalidInput("root system rank " + std::to_string(rank) + " exceeds the supported maximum " +
                       std::to_string(max_root_rank));
  }
  WeylTypeData w;
  w.family = family;
  w.rank = rank;
  switch (family) {
    case RootFamily::A:
      if (rank < 1) throw InvalidInput("A_l needs l >= 1");
      for (unsigned i = 1; i <= rank; ++i) w.exponents.push_back(i);
      w.coxeter_number = static_cast<unsigned>(rank + 1);
      break;
    case RootFamily::D:
      if (rank < 4) throw InvalidInput("D_l needs l >= 4");
      for (unsigned i = 0; i + 1 < rank; ++i) w.exponents.push_back(2 * i + 1);
      w.exponents.push_back(static_cast<unsigned>(rank - 1));
      std::sort(w.exponents.begin(), w.exponents.end());
      w.coxeter_number = static_cast<unsigned>(2 * rank - 2);
      break;
    case RootFamily::E:
      if (rank == 6) {
        w.exponents = {1, 4, 5, 7, 8, 11};
      } else if (rank == 7) {
        w.exponents = {1, 5, 7, 9, 11, 13, 17};
      } else if (rank == 8) {
        w.exponents = {1, 7, 11, 13, 17, 19, 23, 29};
      } else {
        throw InvalidInput("E_l needs l in {6, 7, 8}");
      }
      w.coxeter_number = w.exponents.back() + 1;
      break;
  }
  w.positive_roots = detail::positive_roots(detail::cartan_matrix(family, rank));
  w.weyl_order = 1;
  for (auto e : w.exponents) w.weyl_order *= e + 1;

  if (w.positive_roots.size() * 2 != rank * w.coxeter_number) {
    throw Inconsistency(w.label() + ": |R+| = " + std::to_string(w.positive_roots.size()) + " but l*h/2 = " +
                        std::to_string(rank * w.coxeter_number / 2));
  }
  if (w.coxeter_number != w.exponents.back() + 1) throw Inconsistency(w.label() + ": h != e_max + 1");
  return w;
}

/// Parses "A2", "D4", "E8", also "A_2".
inline WeylTypeData weyl_data(const std::string& label) {
  if (label.size() < 2) throw InvalidInput("unsupported root system label '" + label + "'");
  RootFamily family;
  switch (label[0]) {
    case 'A': case 'a': family = RootFamily::A; break;
    case 'D': case 'd': family = RootFamily::D; break;
    case 'E': case 'e': family = RootFamily::E; break;
    default: throw InvalidInput("unsupported root system label '" + label + "' (only A, D, E)");
  }
  std::string digits = label.substr(label[1] == '_' ? 2 : 1);
  if (digits.empty() || digits.size() > 4 ||
      !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw InvalidInput("unsupported root system label '" + label + "'");
  }
  return weyl_data(family, static_cast<std::size_t>(std::stoul(digits)));
}

struct CatalanSpec {
  WeylTypeData type;
  unsigned n = 1;
};

/// Central arrangement in coordinates (alpha, x_1..x_l): lambda . x + m alpha = 0
/// for lambda in R+ and |m| <= n-1, then alpha = 0.
inline Arrangement catalan_arrangement(const CatalanSpec& spec) {
  if (spec.n < 1) throw InvalidInput("wreath parameter n must be >= 1");
  const auto f = FieldDescriptor::rational();
  const std::size_t l = spec.type.rank;
  std::vector<RawHyperplane> raw;
  std::vector<Scalar> alpha(l + 1, Scalar(0));
  alpha[0] = Scalar(1);
  raw.push_back({alpha, std::nullopt});
  const int span = static_cast<int>(spec.n) - 1;
  for (const auto& root : spec.type.positive_roots) {
    for (int m = -span; m <= span; ++m) {
      std::vector<Scalar> normal;
      normal.emplace_back(m);
      for (int c : root) normal.emplace_back(c);
      raw.push_back({std::move(normal), std::nullopt});
    }
  }
  return build_arrangement(f, l + 1, raw);
}

/// Affine arrangement lambda . x + m = 0 in l variables; its cone is catalan_arrangement.
inline Arrangement affine_catalan(const CatalanSpec& spec) {
  if (spec.n < 1) throw InvalidInput("wreath parameter n must be >= 1");
  const auto f = FieldDescriptor::rational();
  std::vector<RawHyperplane> raw;
  const int span = static_cast<int>(spec.n) - 1;
  for (const auto& root : spec.type.positive_roots) {
    for (int m = -span; m <= span; ++m) {
      std::vector<Scalar> normal;
      for (int c : root) normal.emplace_back(c);
      raw.push_back({std::move(normal), Scalar(-m)});
    }
  }
  return build_arrangement(f, spec.type.rank, raw);
}

}  // namespace symres
