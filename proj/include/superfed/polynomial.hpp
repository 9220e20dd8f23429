#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace superfed {

using Rational = mpq_class;

/// Upper bound on the number of even coordinates a chart may carry.
inline constexpr std::size_t max_even_coordinates = 16;

/// Exponent vector of a monomial in the even coordinates.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index, std::uint16_t power = 1);

  std::uint16_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  void set(std::size_t i, std::uint16_t e) noexcept { exps_[i] = e; }

  unsigned total_degree() const noexcept;
  bool is_one() const noexcept { return total_degree() == 0; }

  /// True if this monomial divides `other`.
  bool divides(const Monomial& other) const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Requires `b.divides(a)`.
  friend Monomial operator/(const Monomial& a, const Monomial& b) noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial&,
                                          const Monomial&) = default;

 private:
  std::array<std::uint16_t, max_even_coordinates> exps_{};
};

/// Multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by ascending lexicographic monomial order with no
/// zero coefficients, so structural equality is mathematical equality.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coefficient;
  };

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  /// Builds from unsorted terms; duplicates are combined and zeros dropped.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  /// Constant term (zero if absent).
  Rational constant_term() const;
  /// Leading term in lex order; requires a nonzero polynomial.
  const Term& leading_term() const { return terms_.back(); }

  unsigned total_degree() const noexcept;
  unsigned degree_in(std::size_t var) const noexcept;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Quotient if `divisor` divides this polynomial exactly, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;

  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;

  /// Scales so that the leading coefficient is one; returns the factor removed.
  Rational make_monic();

  /// Rational c and primitive integer polynomial P with *this == c * P and
  /// P's leading coefficient positive.
  std::pair<Rational, Polynomial> primitive_part() const;

  /// Grammar-compatible text, constant term first.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_;
  std::vector<Term> terms_;
};

std::string to_string(const Rational& q);

}  // namespace superfed
