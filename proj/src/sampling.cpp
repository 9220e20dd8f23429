#include "superfed/sampling.hpp"

#include <bit>
#include <vector>

namespace superfed {

namespace {

// Every monomial in `nvars` variables of total degree at most `degree`.
void enumerate(std::size_t nvars, std::size_t var, unsigned budget, Monomial& current,
               std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e <= budget; ++e) {
    current.set(var, static_cast<std::uint16_t>(e));
    enumerate(nvars, var + 1, budget - e, current, out);
  }
  current.set(var, 0);
}

}  // namespace

Rational Sampler::nonzero_rational() {
  long num = 0;
  while (num == 0) num = uniform(-3, 3);
  Rational q(num, uniform(1, 4));
  q.canonicalize();
  return q;
}

Superfunction Sampler::superfunction(Signature sig, Parity parity, unsigned degree,
                                     unsigned keep_num, unsigned keep_den) {
  Superfunction out(sig);
  const OddMonomial limit = OddMonomial{1} << sig.odd;
  for (OddMonomial mask = 0; mask < limit; ++mask) {
    const auto count = static_cast<unsigned>(std::popcount(mask));
    if (count > degree || parity_of_count(count) != parity) continue;
    std::vector<Monomial> monomials;
    Monomial scratch;
    enumerate(sig.even, 0, degree - count, scratch, monomials);
    std::vector<Polynomial::Term> terms;
    for (const auto& m : monomials) {
      if (!chance(keep_num, keep_den)) continue;
      long c = 0;
      while (c == 0) c = uniform(-2, 2);
      terms.push_back({m, Rational(c)});
    }
    if (terms.empty()) continue;
    out += Superfunction::monomial(
        sig, mask, RationalFunction(Polynomial::from_terms(sig.even, std::move(terms))));
  }
  return out;
}

}  // namespace superfed
