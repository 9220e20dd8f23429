#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "superfed/parity.hpp"
#include "superfed/rational_function.hpp"

namespace superfed {

/// Number of even (p) and odd (q) coordinates of a chart.
struct Signature {
  std::size_t even = 0;
  std::size_t odd = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Upper bound on the number of odd coordinates (monomials are bitmasks).
inline constexpr std::size_t max_odd_coordinates = 24;

/// Bitmask of odd generators; bit k stands for theta_{k+1}.
using OddMonomial = std::uint32_t;

/// Element of Frac(Q[x_1..x_p]) (x) Lambda(theta_1..theta_q).
///
/// Stored as rational-function coefficients written to the left of Grassmann
/// monomials theta_{i1} theta_{i2} ... with i1 < i2 < ... . Zero components
/// are never stored.
class Superfunction {
 public:
  using Component = std::pair<OddMonomial, RationalFunction>;

  Superfunction() = default;
  explicit Superfunction(Signature sig);
  Superfunction(Signature sig, RationalFunction body);

  static Superfunction zero(Signature sig) { return Superfunction(sig); }
  static Superfunction constant(Signature sig, const Rational& c);
  static Superfunction even_coordinate(Signature sig, std::size_t k);
  static Superfunction odd_coordinate(Signature sig, std::size_t k);
  /// coefficient * theta^mask.
  static Superfunction monomial(Signature sig, OddMonomial mask, RationalFunction coefficient);

  Signature signature() const noexcept { return sig_; }
  std::span<const Component> components() const noexcept { return comps_; }
  /// Coefficient of theta^mask (zero if absent).
  RationalFunction component(OddMonomial mask) const;
  RationalFunction body() const { return component(0); }

  bool is_zero() const noexcept { return comps_.empty(); }
  bool has_invertible_body() const noexcept {
    return !comps_.empty() && comps_.front().first == 0;
  }

  Superfunction operator-() const;
  Superfunction& operator+=(const Superfunction& b);
  Superfunction& operator-=(const Superfunction& b);
  Superfunction& operator*=(const Rational& c);
  friend Superfunction operator+(Superfunction a, const Superfunction& b) { return a += b; }
  friend Superfunction operator-(Superfunction a, const Superfunction& b) { return a -= b; }
  friend Superfunction operator*(Superfunction a, const Rational& c) { return a *= c; }
  friend Superfunction operator*(const Rational& c, Superfunction a) { return a *= c; }
  friend Superfunction operator*(const Superfunction& a, const Superfunction& b);

  friend bool operator==(const Superfunction& a, const Superfunction& b);

 private:
  Signature sig_;
  std::vector<Component> comps_;  // sorted by mask
};

/// Grassmann product with anticommuting odd generators.
Superfunction multiply(const Superfunction& a, const Superfunction& b);

/// a^{-1} = body^{-1} sum_{k=0..q} (-soul/body)^k; throws not_invertible_error.
Superfunction invert(const Superfunction& a);

/// Coefficient-wise derivative along the k-th even coordinate.
Superfunction partial_even(const Superfunction& a, std::size_t k);

/// Left derivative along the k-th odd coordinate.
Superfunction partial_odd(const Superfunction& a, std::size_t k);

/// Substitutes rationals for every even coordinate; throws pole_error.
Superfunction evaluate_even(const Superfunction& a, std::span<const Rational> point);

Grading grading_of(const Superfunction& a);

/// Sign of theta^a theta^b = sign * theta^{a|b}; zero when they overlap.
int grassmann_sign(OddMonomial a, OddMonomial b) noexcept;

/// Grammar-compatible text for `a`, given even and odd coordinate names.
std::string to_string(const Superfunction& a, std::span<const std::string> even_names,
                      std::span<const std::string> odd_names);

}  // namespace superfed
