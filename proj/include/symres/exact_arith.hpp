#pragma once

// Exact scalars over Q and the cyclotomic fields Q(zeta_N).
//
// An element of Q(zeta_N) is stored by its coordinates in the power basis
// 1, z, ..., z^(d-1) of Q[x]/Phi_N(x), d = phi(N). Every stored coordinate
// vector is already reduced, so two scalars are equal iff their coordinate
// vectors are identical. Rationals are GMP mpq values in lowest terms.

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symres/error.hpp"

namespace symres {

using BigInt = mpz_class;
using Rational = mpq_class;

inline unsigned euler_totient(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace detail {

struct CyclotomicData {
  unsigned conductor = 1;
  std::size_t degree = 1;
  // Phi_N, monic, low degree first; size degree + 1.
  std::vector<BigInt> phi;
  // power_table[k] = coordinates of x^k mod Phi_N, for 0 <= k < table size.
  std::vector<std::vector<BigInt>> power_table;
};

// Exact division of integer polynomials by a monic divisor (low degree first).
inline std::vector<BigInt> divide_monic(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() <= dn) return {0};
  std::vector<BigInt> quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    BigInt c = num[k];
    quot[k - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[k - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw Inconsistency("cyclotomic polynomial division left a remainder");
  }
  return quot;
}

inline std::vector<BigInt> compute_phi(unsigned n, std::map<unsigned, std::vector<BigInt>>& memo) {
  if (auto it = memo.find(n); it != memo.end()) return it->second;
  // x^n - 1 = prod_{d | n} Phi_d(x)
  std::vector<BigInt> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = divide_monic(poly, compute_phi(d, memo));
  }
  memo.emplace(n, poly);
  return poly;
}

inline std::unique_ptr<CyclotomicData> build_cyclotomic(unsigned n) {
  static std::map<unsigned, std::vector<BigInt>> phi_memo;
  auto data = std::make_unique<CyclotomicData>();
  data->conductor = n;
  data->phi = compute_phi(n, phi_memo);
  data->degree = data->phi.size() - 1;
  const std::size_t d = data->degree;
  const std::size_t table_size = std::max<std::size_t>(n, 2 * d - 1);
  data->power_table.reserve(table_size);
  std::vector<BigInt> current(d, 0);
  current[0] = 1;
  for (std::size_t k = 0; k < table_size; ++k) {
    data->power_table.push_back(current);
    // multiply by x and reduce with x^d = -sum phi[j] x^j
    BigInt carry = current[d - 1];
    for (std::size_t j = d - 1; j > 0; --j) current[j] = current[j - 1];
    current[0] = 0;
    if (carry != 0) {
      for (std::size_t j = 0; j < d; ++j) current[j] -= carry * data->phi[j];
    }
  }
  return data;
}

inline const CyclotomicData& cyclotomic_data(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::unique_ptr<CyclotomicData>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_cyclotomic(n)).first;
  return *it->second;
}

// Gaussian elimination for a small square rational system; returns nullopt
// style empty vector when singular.
inline std::vector<Rational> solve_square(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return {};
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

}  // namespace detail

/// Q (conductor 1) or Q(zeta_N).
class FieldDescriptor {
 public:
  FieldDescriptor() : FieldDescriptor(1) {}

  static FieldDescriptor rational() { return FieldDescriptor(1); }
  static FieldDescriptor cyclotomic(unsigned conductor) {
    if (conductor == 0) throw InvalidInput("cyclotomic conductor must be positive");
    return FieldDescriptor(conductor);
  }

  bool is_rational() const noexcept { return conductor_ == 1; }
  unsigned conductor() const noexcept { return conductor_; }
  std::size_t degree() const noexcept { return data_->degree; }
  const detail::CyclotomicData& data() const noexcept { return *data_; }

  std::string to_string() const {
    return is_rational() ? std::string("rational") : "cyclotomic " + std::to_string(conductor_);
  }

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) noexcept {
    return a.conductor_ == b.conductor_;
  }

 private:
  explicit FieldDescriptor(unsigned n) : conductor_(n), data_(&detail::cyclotomic_data(n)) {}

  unsigned conductor_;
  const detail::CyclotomicData* data_;
};

class Scalar;
Scalar cyclotomic_reduce(std::span<const Rational> poly_coords, const FieldDescriptor& field);

/// Exact element of a FieldDescriptor's field.
class Scalar {
 public:
  Scalar() : coords_{Rational(0)} {}
  Scalar(long v) : coords_{Rational(v)} {}  // NOLINT: rational literals read naturally
  explicit Scalar(Rational q) : coords_{std::move(q)} { coords_[0].canonicalize(); }
  Scalar(const FieldDescriptor& f, Rational q) : field_(f), coords_(f.degree(), Rational(0)) {
    coords_[0] = std::move(q);
    coords_[0].canonicalize();
  }

  static Scalar zero(const FieldDescriptor& f) { return Scalar(f, Rational(0)); }
  static Scalar one(const FieldDescriptor& f) { return Scalar(f, Rational(1)); }

  /// Coordinates must already be in the reduced power basis (length = degree).
  static Scalar from_coords(const FieldDescriptor& f, std::vector<Rational> coords) {
    if (coords.size() != f.degree()) {
      throw InvalidInput("scalar over " + f.to_string() + " needs " + std::to_string(f.degree()) +
                         " coordinates, got " + std::to_string(coords.size()));
    }
    for (auto& c : coords) c.canonicalize();
    return Scalar(f, std::move(coords), 0);
  }

  /// zeta_N^k.
  static Scalar zeta_power(const FieldDescriptor& f, unsigned k) {
    std::vector<Rational> poly(f.conductor(), Rational(0));
    poly[k % f.conductor()] = 1;
    return cyclotomic_reduce(poly, f);
  }

  const FieldDescriptor& field() const noexcept { return field_; }
  const std::vector<Rational>& coords() const noexcept { return coords_; }

  bool is_zero() const {
    for (const auto& c : coords_)
      if (c != 0) return false;
    return true;
  }
  bool is_one() const {
    if (coords_[0] != 1) return false;
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }
  /// True when the value lies in the prime field Q.
  bool is_rational_value() const {
    for (std::size_t i = 1; i < coords_.size(); ++i)
      if (coords_[i] != 0) return false;
    return true;
  }
  const Rational& rational_value() const {
    if (!is_rational_value()) throw InvalidInput("scalar " + to_string() + " is not rational");
    return coords_[0];
  }

  Scalar operator-() const {
    Scalar r = *this;
    for (auto& c : r.coords_) c = -c;
    return r;
  }

  Scalar& operator+=(const Scalar& o) {
    check_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    check_field(o);
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this * o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    a.check_field(b);
    const std::size_t d = a.coords_.size();
    if (d == 1) return Scalar(a.field_, {a.coords_[0] * b.coords_[0]}, 0);
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
      if (a.coords_[i] == 0) continue;
      for (std::size_t j = 0; j < d; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
    }
    return reduce_product(a.field_, prod);
  }

  Scalar inverse() const {
    if (is_zero()) throw InvalidInput("division by zero");
    const std::size_t d = coords_.size();
    if (d == 1) return Scalar(field_, {1 / coords_[0]}, 0);
    // Solve M y = e_0 where column j of M holds the coordinates of this * zeta^j.
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d));
    Scalar col = *this;
    const Scalar z = zeta_power(field_, 1);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coords_[i];
      col = col * z;
    }
    std::vector<Rational> rhs(d, Rational(0));
    rhs[0] = 1;
    auto y = detail::solve_square(std::move(m), std::move(rhs));
    if (y.empty()) throw Inconsistency("multiplication map of a nonzero field element is singular");
    return Scalar(field_, std::move(y), 0);
  }

  /// Complex conjugation, zeta -> zeta^(N-1).
  Scalar conjugate() const {
    if (field_.is_rational()) return *this;
    const unsigned n = field_.conductor();
    std::vector<Rational> poly(n, Rational(0));
    for (std::size_t k = 0; k < coords_.size(); ++k) poly[(n - k) % n] += coords_[k];
    return cyclotomic_reduce(poly, field_);
  }

  /// Explicit embedding Q -> Q(zeta_N); identity when fields already agree.
  Scalar promote(const FieldDescriptor& target) const {
    if (target == field_) return *this;
    if (!field_.is_rational()) {
      throw InvalidInput("cannot promote a scalar over " + field_.to_string() + " to " + target.to_string());
    }
    return Scalar(target, coords_[0]);
  }

  /// Text form: `p/q` for rationals, `(a0,a1,...)` for cyclotomic values.
  std::string to_string() const {
    if (field_.is_rational()) return coords_[0].get_str();
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += coords_[i].get_str();
    }
    return s + ")";
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }

 private:
  friend Scalar cyclotomic_reduce(std::span<const Rational>, const FieldDescriptor&);

  Scalar(const FieldDescriptor& f, std::vector<Rational> coords, int) : field_(f), coords_(std::move(coords)) {}

  void check_field(const Scalar& o) const {
    if (!(field_ == o.field_)) {
      throw InvalidInput("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
    }
  }

  static Scalar reduce_product(const FieldDescriptor& f, const std::vector<Rational>& poly) {
    const auto& data = f.data();
    const std::size_t d = data.degree;
    std::vector<Rational> out(d, Rational(0));
    for (std::size_t k = 0; k < poly.size(); ++k) {
      if (poly[k] == 0) continue;
      if (k < d) {
        out[k] += poly[k];
        continue;
      }
      const auto& row = data.power_table[k];
      for (std::size_t i = 0; i < d; ++i)
        if (row[i] != 0) out[i] += poly[k] * row[i];
    }
    return Scalar(f, std::move(out), 0);
  }

  FieldDescriptor field_;
  std::vector<Rational> coords_;
};

/// Canonical representative of sum_k poly_coords[k] zeta^k modulo Phi_N.
inline Scalar cyclotomic_reduce(std::span<const Rational> poly_coords, const FieldDescriptor& field) {
  const unsigned n = field.conductor();
  if (poly_coords.size() > n) {
    throw InvalidInput("coordinate vector of length " + std::to_string(poly_coords.size()) +
                       " exceeds conductor " + std::to_string(n));
  }
  std::vector<Rational> poly(poly_coords.begin(), poly_coords.end());
  for (auto& c : poly) c.canonicalize();
  if (poly.empty()) return Scalar::zero(field);
  return Scalar::reduce_product(field, poly);
}

inline Scalar conjugate(const Scalar& x) { return x.conjugate(); }

namespace detail {

inline bool is_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline Rational parse_rational(std::string_view token) {
  auto slash = token.find('/');
  std::string_view num = token.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : token.substr(slash + 1);
  if (!is_integer_token(num) || !is_integer_token(den) || den[0] == '-' || den[0] == '+') {
    throw InvalidInput("malformed rational '" + std::string(token) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  BigInt p{std::string(num)};
  BigInt q{std::string(den)};
  if (q == 0) throw InvalidInput("zero denominator in '" + std::string(token) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

}  // namespace detail

/// Parses the scalar text syntax: `p/q`, `p`, or `(a0,...,a_{d-1})`.
/// A bare rational in a cyclotomic field denotes the embedded constant.
inline Scalar parse_scalar(std::string_view token, const FieldDescriptor& field) {
  if (token.empty()) throw InvalidInput("empty scalar token");
  if (token.front() != '(') return Scalar(field, detail::parse_rational(token));
  if (token.back() != ')') throw InvalidInput("unterminated scalar tuple '" + std::string(token) + "'");
  std::string_view body = token.substr(1, token.size() - 2);
  std::vector<Rational> coords;
  while (true) {
    auto comma = body.find(',');
    coords.push_back(detail::parse_rational(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return Scalar::from_coords(field, std::move(coords));
}

}  // namespace symres
