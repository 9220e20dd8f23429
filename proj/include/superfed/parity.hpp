#pragma once

#include <cstdint>
#include <string_view>

namespace superfed {

enum class Parity : std::uint8_t { even = 0, odd = 1 };

constexpr Parity operator+(Parity a, Parity b) noexcept {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) ^
                             static_cast<std::uint8_t>(b));
}

constexpr Parity& operator+=(Parity& a, Parity b) noexcept { return a = a + b; }

constexpr Parity operator*(Parity a, Parity b) noexcept {
  return static_cast<Parity>(static_cast<std::uint8_t>(a) &
                             static_cast<std::uint8_t>(b));
}

constexpr bool is_odd(Parity a) noexcept { return a == Parity::odd; }

/// (-1)^{a}: +1 for even, -1 for odd.
constexpr int sign_of(Parity a) noexcept { return is_odd(a) ? -1 : 1; }

/// Koszul sign (-1)^{|a||b|}.
constexpr int koszul(Parity a, Parity b) noexcept { return sign_of(a * b); }

constexpr Parity parity_of_count(std::size_t n) noexcept {
  return (n & 1U) ? Parity::odd : Parity::even;
}

/// Classification of a superfunction by the parities of its components.
enum class Grading : std::uint8_t { even, odd, mixed, zero };

constexpr std::string_view to_string(Parity p) noexcept {
  return is_odd(p) ? "odd" : "even";
}

constexpr std::string_view to_string(Grading g) noexcept {
  switch (g) {
    case Grading::even:
      return "even";
    case Grading::odd:
      return "odd";
    case Grading::mixed:
      return "mixed";
    case Grading::zero:
      return "zero";
  }
  return "zero";
}

}  // namespace superfed
