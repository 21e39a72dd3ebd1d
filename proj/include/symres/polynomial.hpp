#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "symres/exact_arith.hpp"

namespace symres {

/// Dense polynomial with arbitrary-precision integer coefficients, index = degree.
/// The zero polynomial has an empty coefficient list.
class IntegerPolynomial {
 public:
  IntegerPolynomial() = default;
  IntegerPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }
  explicit IntegerPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The monomial c * t^k.
  static IntegerPolynomial monomial(const BigInt& c, std::size_t k) {
    std::vector<BigInt> v(k + 1, 0);
    v[k] = c;
    return IntegerPolynomial(std::move(v));
  }

  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  BigInt coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

  void add_to_coefficient(std::size_t k, const BigInt& c) {
    if (coeffs_.size() <= k) coeffs_.resize(k + 1, 0);
    coeffs_[k] += c;
    trim();
  }

  BigInt evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * t + coeffs_[k];
    return acc;
  }

  friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] += b.coeffs_[k];
    return IntegerPolynomial(std::move(v));
  }
  friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) v[k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) v[k] -= b.coeffs_[k];
    return IntegerPolynomial(std::move(v));
  }
  friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntegerPolynomial(std::move(v));
  }

  friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

  /// Human form in the variable `var`, low degree first: "1 + 21t + 170t^2".
  std::string to_string(char var = 't') const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const BigInt& c = coeffs_[k];
      if (c == 0) continue;
      BigInt mag = abs(c);
      if (s.empty()) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      if (k == 0 || mag != 1) s += mag.get_str();
      if (k >= 1) s += var;
      if (k >= 2) s += "^" + std::to_string(k);
    }
    return s;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

}  // namespace symres
