#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "superfed/polynomial.hpp"

namespace superfed {

/// Quotient of polynomials in the even coordinates.
///
/// The denominator is kept as a product of monic, non-constant factor
/// polynomials raised to positive powers. Factors are not guaranteed to be
/// irreducible or coprime; common factors are cancelled whenever an exact
/// trial division succeeds. Equality never relies on a canonical form: two
/// values are equal iff their difference has a zero numerator, which agrees
/// with cross-multiplication.
class RationalFunction {
 public:
  struct Factor {
    std::shared_ptr<const Polynomial> base;
    unsigned exponent;
  };

  explicit RationalFunction(std::size_t nvars = 0) : num_(nvars) {}
  explicit RationalFunction(Polynomial numerator) : num_(std::move(numerator)) {}
  /// Throws not_invertible_error if `denominator` is zero.
  RationalFunction(Polynomial numerator, const Polynomial& denominator);

  static RationalFunction constant(std::size_t nvars, const Rational& c) {
    return RationalFunction(Polynomial::constant(nvars, c));
  }

  std::size_t nvars() const noexcept { return num_.nvars(); }
  const Polynomial& numerator() const noexcept { return num_; }
  /// Expanded product of the denominator factors.
  Polynomial denominator() const;
  std::span<const Factor> factors() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.empty(); }
  bool is_constant() const noexcept { return den_.empty() && num_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction& operator*=(const Rational& c);
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(RationalFunction a, const Rational& c) { return a *= c; }
  /// *this += sign * b, reusing this numerator's storage.
  RationalFunction& accumulate(const RationalFunction& b, int sign);
  RationalFunction& operator+=(const RationalFunction& b) { return accumulate(b, 1); }
  RationalFunction& operator-=(const RationalFunction& b) { return accumulate(b, -1); }

  /// Throws not_invertible_error on zero.
  RationalFunction inverse() const;
  RationalFunction derivative(std::size_t var) const;
  /// Throws pole_error if a denominator factor vanishes at `point`.
  Rational evaluate(std::span<const Rational> point) const;

  /// Equality through the difference's numerator.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b);

  std::string to_string(std::span<const std::string> names) const;

 private:
  void cancel();

  Polynomial num_;
  std::vector<Factor> den_;
};

/// a/b == c/d decided as a*d == c*b on expanded polynomials.
bool equal_by_cross_multiplication(const RationalFunction& a, const RationalFunction& b);

}  // namespace superfed
