#pragma once

// Hand-rolled generators and small helpers shared by the unit tests.

#include <bit>
#include <cstdint>
#include <random>
#include <string_view>

#include "superfed/geometry.hpp"
#include "superfed/parser.hpp"

namespace support {

using namespace superfed;

/// Parses `text` on `chart`; shorthand for building fixtures.
inline Superfunction sf(const Chart& chart, std::string_view text) {
  return parse_expression(text, chart);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return rng_() & 1U; }
  Parity parity() { return coin() ? Parity::odd : Parity::even; }

  Rational rational() {
    long n = 0;
    while (n == 0) n = integer(-5, 5);
    Rational q(n, integer(1, 3));
    q.canonicalize();
    return q;
  }

  Polynomial polynomial(std::size_t nvars, unsigned degree, std::size_t terms) {
    std::vector<Polynomial::Term> out;
    for (std::size_t t = 0; t < terms; ++t) {
      Monomial m;
      unsigned left = static_cast<unsigned>(integer(0, degree));
      for (std::size_t v = 0; v < nvars && left > 0; ++v) {
        const auto e = static_cast<std::uint16_t>(integer(0, left));
        m.set(v, e);
        left -= e;
      }
      out.push_back({m, rational()});
    }
    return Polynomial::from_terms(nvars, std::move(out));
  }

  /// Homogeneous polynomial superfunction of the given parity.
  Superfunction superfunction(Signature sig, Parity parity, unsigned degree = 2) {
    Superfunction out(sig);
    const OddMonomial limit = OddMonomial{1} << sig.odd;
    for (OddMonomial mask = 0; mask < limit; ++mask) {
      if (parity_of_count(static_cast<std::size_t>(std::popcount(mask))) != parity) continue;
      if (integer(0, 2) == 0) continue;
      out += Superfunction::monomial(sig, mask,
                                     RationalFunction(polynomial(sig.even, degree, 2)));
    }
    return out;
  }

  /// Like superfunction() but divided by an invertible even element.
  Superfunction rational_superfunction(Signature sig, Parity parity) {
    Superfunction f = superfunction(sig, parity);
    Superfunction d = superfunction(sig, Parity::even, 1) + Superfunction::constant(sig, 2);
    if (!d.has_invertible_body()) return f;
    return f * invert(d);
  }

  VectorField field(const Chart& chart, Parity parity, unsigned degree = 2) {
    VectorField x = VectorField::zero(chart);
    for (std::size_t i = 0; i < chart.dimension(); ++i) {
      x[i] = superfunction(chart.signature(), parity + chart.parity(i), degree);
    }
    return x;
  }

  /// Random parity-even connection.
  Connection connection(const Chart& chart, unsigned degree = 1) {
    Connection c = Connection::flat(chart);
    const std::size_t n = chart.dimension();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          c.christoffel(k, i, j) = superfunction(
              chart.signature(), chart.parity(i) + chart.parity(j) + chart.parity(k), degree);
        }
      }
    }
    return c;
  }

  /// Random parity-even connection with Gamma^k_ij = (-1)^{|i||j|} Gamma^k_ji.
  Connection symmetric_connection(const Chart& chart, unsigned degree = 1) {
    Connection c = connection(chart, degree);
    const std::size_t n = chart.dimension();
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (is_odd(chart.parity(i))) c.christoffel(k, i, i) = chart.zero();
        for (std::size_t j = i + 1; j < n; ++j) {
          const Superfunction& g = c.christoffel(k, i, j);
          c.christoffel(k, j, i) =
              koszul(chart.parity(i), chart.parity(j)) > 0 ? g : -g;
        }
      }
    }
    return c;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace support
