#include "localh/polynomial.hpp"

namespace localh {

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
  std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] += other.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& other) const {
  std::vector<Int> out(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) out[i] -= other.coeffs_[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& other) const {
  if (is_zero() || other.is_zero()) return IntPolynomial();
  std::vector<Int> out(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<Int> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Int& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Int mag = negative ? Int(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += mag.str();
    } else {
      if (mag != 1) out += mag.str() + "*";
      out += "x";
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

IntPolynomial poly_add(const IntPolynomial& a, const IntPolynomial& b) { return a + b; }
IntPolynomial poly_subtract(const IntPolynomial& a, const IntPolynomial& b) { return a - b; }
IntPolynomial poly_multiply(const IntPolynomial& a, const IntPolynomial& b) { return a * b; }

IntPolynomial binomial_power(const Int& shift, std::size_t n) {
  IntPolynomial result = IntPolynomial::constant(Int(1));
  const IntPolynomial base({shift, Int(1)});
  for (std::size_t i = 0; i < n; ++i) result = result * base;
  return result;
}

}  // namespace localh
