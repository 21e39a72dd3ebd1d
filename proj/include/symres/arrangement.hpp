#pragma once

// Hyperplane arrangements over an exact field.
//
// A hyperplane is {x : normal . x = offset}. Hyperplanes are kept in a
// canonical scaling (first nonzero normal coordinate equal to 1), so equal
// hyperplanes have identical coordinates and identical keys.

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "symres/error.hpp"
#include "symres/exact_arith.hpp"
#include "symres/matrix.hpp"

namespace symres {

/// Unnormalized input for build_arrangement. A missing offset means 0.
struct RawHyperplane {
  std::vector<Scalar> normal;
  std::optional<Scalar> offset;
};

class Hyperplane {
 public:
  /// Scales so the first nonzero normal coordinate is 1. Throws on a zero normal.
  static Hyperplane canonical(std::vector<Scalar> normal, Scalar offset) {
    std::size_t lead = 0;
    while (lead < normal.size() && normal[lead].is_zero()) ++lead;
    if (lead == normal.size()) throw InvalidInput("hyperplane with zero normal vector");
    if (!normal[lead].is_one()) {
      const Scalar inv = normal[lead].inverse();
      for (auto& c : normal) c = c * inv;
      offset = offset * inv;
    }
    return Hyperplane(std::move(normal), std::move(offset));
  }

  const std::vector<Scalar>& normal() const noexcept { return normal_; }
  const Scalar& offset() const noexcept { return offset_; }
  std::size_t dim() const noexcept { return normal_.size(); }
  bool is_linear() const { return offset_.is_zero(); }

  /// (normal | offset), the row used in augmented systems.
  std::vector<Scalar> augmented_row() const {
    auto row = normal_;
    row.push_back(offset_);
    return row;
  }

  /// Every coefficient fixed by complex conjugation.
  bool is_real() const {
    for (const auto& c : normal_)
      if (!(c.conjugate() == c)) return false;
    return offset_.conjugate() == offset_;
  }

  std::string key() const {
    std::string s;
    for (const auto& c : normal_) s += c.to_string() + " ";
    return s + "= " + offset_.to_string();
  }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  Hyperplane(std::vector<Scalar> normal, Scalar offset) : normal_(std::move(normal)), offset_(std::move(offset)) {}

  std::vector<Scalar> normal_;
  Scalar offset_;
};

class Arrangement {
 public:
  Arrangement(const FieldDescriptor& field, std::size_t ambient_dim) : field_(field), dim_(ambient_dim) {}

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return hyperplanes_.size(); }
  bool empty() const noexcept { return hyperplanes_.empty(); }
  const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
  const Hyperplane& operator[](std::size_t i) const { return hyperplanes_[i]; }

  bool central() const {
    for (const auto& h : hyperplanes_)
      if (!h.is_linear()) return false;
    return true;
  }

  /// Adds h unless an identical hyperplane is present. Returns true if added.
  bool add(Hyperplane h) {
    if (h.dim() != dim_) {
      throw InvalidInput("hyperplane has " + std::to_string(h.dim()) + " coefficients, expected " +
                         std::to_string(dim_));
    }
    if (!keys_.insert(h.key()).second) return false;
    hyperplanes_.push_back(std::move(h));
    return true;
  }

  /// Index of the first hyperplane with a non-real coefficient.
  std::optional<std::size_t> first_non_real() const {
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
      if (!hyperplanes_[i].is_real()) return i;
    return std::nullopt;
  }

  /// One row per hyperplane: the normal vector.
  ExactMatrix normal_matrix() const {
    ExactMatrix m(field_, hyperplanes_.size(), dim_);
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i)
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = hyperplanes_[i].normal()[j];
    return m;
  }

  /// One row per hyperplane: (normal | offset).
  ExactMatrix augmented_matrix() const {
    ExactMatrix m(field_, hyperplanes_.size(), dim_ + 1);
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) {
      for (std::size_t j = 0; j < dim_; ++j) m(i, j) = hyperplanes_[i].normal()[j];
      m(i, dim_) = hyperplanes_[i].offset();
    }
    return m;
  }

  /// Rank of the essentialization: dimension of the span of the normals.
  std::size_t rank() const { return hyperplanes_.empty() ? 0 : symres::rank(normal_matrix()); }

  /// "{h1; h2; ...} in dim l", hyperplanes written as "c1 .. cl = c0".
  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < hyperplanes_.size(); ++i) s += (i ? "; " : "") + hyperplanes_[i].key();
    return s + "} in dim " + std::to_string(dim_);
  }

  /// Same field, dimension and hyperplane set, ignoring order.
  friend bool same_hyperplanes(const Arrangement& a, const Arrangement& b) {
    if (!(a.field_ == b.field_) || a.dim_ != b.dim_ || a.size() != b.size()) return false;
    return a.keys_ == b.keys_;
  }

 private:
  FieldDescriptor field_;
  std::size_t dim_;
  std::vector<Hyperplane> hyperplanes_;
  std::set<std::string> keys_;
};

/// Canonicalizes and deduplicates, preserving order of first appearance.
inline Arrangement build_arrangement(const FieldDescriptor& field, std::size_t ambient_dim,
                                     const std::vector<RawHyperplane>& raw) {
  Arrangement a(field, ambient_dim);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto& r = raw[i];
    const std::string where = "hyperplane " + std::to_string(i);
    if (r.normal.size() != ambient_dim) {
      throw InvalidInput(where + " has " + std::to_string(r.normal.size()) + " coefficients, expected " +
                         std::to_string(ambient_dim));
    }
    for (const auto& c : r.normal)
      if (!(c.field() == field)) throw InvalidInput(where + ": coefficient over " + c.field().to_string() +
                                                    " in an arrangement over " + field.to_string());
    Scalar offset = Scalar::zero(field);
    if (r.offset) {
      if (!(r.offset->field() == field)) throw InvalidInput(where + ": offset over " + r.offset->field().to_string());
      offset = *r.offset;
    }
    try {
      a.add(Hyperplane::canonical(r.normal, offset));
    } catch (const InvalidInput& e) {
      throw InvalidInput(where + ": " + e.what());
    }
  }
  return a;
}

/// Homogenization: {f(x) = a} becomes {f(x) - a x0 = 0} in coordinates
/// (x0, x1, ..., xl), followed by the extra hyperplane {x0 = 0}.
inline Arrangement cone(const Arrangement& a) {
  const auto& f = a.field();
  Arrangement out(f, a.ambient_dim() + 1);
  for (const auto& h : a.hyperplanes()) {
    std::vector<Scalar> n;
    n.reserve(a.ambient_dim() + 1);
    n.push_back(-h.offset());
    n.insert(n.end(), h.normal().begin(), h.normal().end());
    out.add(Hyperplane::canonical(std::move(n), Scalar::zero(f)));
  }
  std::vector<Scalar> x0(a.ambient_dim() + 1, Scalar::zero(f));
  x0[0] = Scalar::one(f);
  out.add(Hyperplane::canonical(std::move(x0), Scalar::zero(f)));
  return out;
}

struct DeletionRestriction {
  Arrangement deleted;
  Arrangement restricted;
};

/// Deletion A \ {h} and restriction A^h. The restriction lives on h, with
/// coordinates the non-pivot columns of h's (canonical) equation.
inline DeletionRestriction deletion_restriction(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw InvalidInput("hyperplane index " + std::to_string(h) + " out of range");
  const auto& f = a.field();
  const std::size_t l = a.ambient_dim();
  Arrangement deleted(f, l);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (i != h) deleted.add(a[i]);

  const Hyperplane& target = a[h];
  std::size_t pivot = 0;
  while (target.normal()[pivot].is_zero()) ++pivot;  // canonical form: coefficient 1 here
  Arrangement restricted(f, l - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i == h) continue;
    // Substitute x_p = offset_h - sum_{j != p} n_j x_j.
    const auto& g = a[i];
    const Scalar gp = g.normal()[pivot];
    std::vector<Scalar> n;
    n.reserve(l - 1);
    bool nonzero = false;
    for (std::size_t j = 0; j < l; ++j) {
      if (j == pivot) continue;
      n.push_back(g.normal()[j] - gp * target.normal()[j]);
      nonzero = nonzero || !n.back().is_zero();
    }
    Scalar offset = g.offset() - gp * target.offset();
    if (!nonzero) continue;  // parallel to h (empty) or equal to h
    restricted.add(Hyperplane::canonical(std::move(n), std::move(offset)));
  }
  return {std::move(deleted), std::move(restricted)};
}

}  // namespace symres
