#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "localh/rational.hpp"

namespace localh {

/// Integer-coefficient univariate polynomial, dense, canonical form
/// (no trailing zero coefficient; the zero polynomial is the empty list).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Int> coefficients) : coeffs_(std::move(coefficients)) {
    trim();
  }

  static IntPolynomial zero() { return IntPolynomial(); }
  static IntPolynomial constant(Int c) { return IntPolynomial({std::move(c)}); }
  /// c * x^k
  static IntPolynomial monomial(Int c, std::size_t k) {
    std::vector<Int> v(k + 1, Int(0));
    v[k] = std::move(c);
    return IntPolynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
  const std::vector<Int>& coefficients() const { return coeffs_; }

  bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }

  IntPolynomial operator+(const IntPolynomial& other) const;
  IntPolynomial operator-(const IntPolynomial& other) const;
  IntPolynomial operator*(const IntPolynomial& other) const;
  IntPolynomial operator-() const;

  /// "0", "3*x", "1 + 3*x", "x^2 - 2*x + ..." style, zero terms omitted,
  /// ascending degree.
  std::string to_string() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Int> coeffs_;
};

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_subtract(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial poly_multiply(const IntPolynomial& a, const IntPolynomial& b);

/// (x + shift)^n with integer shift.
IntPolynomial binomial_power(const Int& shift, std::size_t n);

}  // namespace localh
