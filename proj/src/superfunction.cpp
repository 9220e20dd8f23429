#include "superfed/superfunction.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "superfed/errors.hpp"

namespace superfed {

namespace {

void check_signature(const Superfunction& a, const Superfunction& b) {
  if (a.signature() != b.signature()) {
    throw signature_error("superfunctions on charts with different signatures");
  }
}

Parity mask_parity(OddMonomial m) { return parity_of_count(std::popcount(m)); }

std::vector<Superfunction::Component> merge(std::vector<Superfunction::Component>&& a,
                                            std::span<const Superfunction::Component> b,
                                            int sign) {
  std::vector<Superfunction::Component> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, sign > 0 ? b[j].second : -b[j].second);
      ++j;
    } else {
      a[i].second.accumulate(b[j].second, sign);
      if (!a[i].second.is_zero()) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

int grassmann_sign(OddMonomial a, OddMonomial b) noexcept {
  if (a & b) return 0;
  // Moving each generator of b leftwards past the larger generators of a.
  unsigned swaps = 0;
  while (b) {
    const unsigned k = static_cast<unsigned>(std::countr_zero(b));
    b &= b - 1;
    const OddMonomial above = k + 1 >= 32 ? 0 : (~OddMonomial{0} << (k + 1));
    swaps += static_cast<unsigned>(std::popcount(a & above));
  }
  return (swaps & 1U) ? -1 : 1;
}

Superfunction::Superfunction(Signature sig) : sig_(sig) {
  if (sig.even > max_even_coordinates || sig.odd > max_odd_coordinates) {
    throw signature_error("chart signature exceeds supported size");
  }
}

Superfunction::Superfunction(Signature sig, RationalFunction body) : Superfunction(sig) {
  if (body.nvars() != sig.even) throw signature_error("body over wrong number of variables");
  if (!body.is_zero()) comps_.emplace_back(0, std::move(body));
}

Superfunction Superfunction::constant(Signature sig, const Rational& c) {
  return Superfunction(sig, RationalFunction::constant(sig.even, c));
}

Superfunction Superfunction::even_coordinate(Signature sig, std::size_t k) {
  if (k >= sig.even) throw error("even coordinate index out of range");
  return Superfunction(sig, RationalFunction(Polynomial::variable(sig.even, k)));
}

Superfunction Superfunction::odd_coordinate(Signature sig, std::size_t k) {
  if (k >= sig.odd) throw error("odd coordinate index out of range");
  return monomial(sig, OddMonomial{1} << k, RationalFunction::constant(sig.even, Rational(1)));
}

Superfunction Superfunction::monomial(Signature sig, OddMonomial mask,
                                      RationalFunction coefficient) {
  Superfunction r(sig);
  if (sig.odd < 32 && (mask >> sig.odd) != 0) throw error("odd monomial out of range");
  if (coefficient.nvars() != sig.even) {
    throw signature_error("coefficient over wrong number of variables");
  }
  if (!coefficient.is_zero()) r.comps_.emplace_back(mask, std::move(coefficient));
  return r;
}

RationalFunction Superfunction::component(OddMonomial mask) const {
  auto it = std::lower_bound(comps_.begin(), comps_.end(), mask,
                             [](const Component& c, OddMonomial m) { return c.first < m; });
  if (it != comps_.end() && it->first == mask) return it->second;
  return RationalFunction(sig_.even);
}

Superfunction Superfunction::operator-() const {
  Superfunction r = *this;
  for (auto& c : r.comps_) c.second = -c.second;
  return r;
}

Superfunction& Superfunction::operator+=(const Superfunction& b) {
  check_signature(*this, b);
  if (b.comps_.empty()) return *this;
  if (comps_.empty()) {
    comps_ = b.comps_;
    return *this;
  }
  comps_ = merge(std::move(comps_), b.comps_, 1);
  return *this;
}

Superfunction& Superfunction::operator-=(const Superfunction& b) {
  check_signature(*this, b);
  if (b.comps_.empty()) return *this;
  comps_ = merge(std::move(comps_), b.comps_, -1);
  return *this;
}

Superfunction& Superfunction::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& comp : comps_) comp.second *= c;
  return *this;
}

Superfunction operator*(const Superfunction& a, const Superfunction& b) {
  check_signature(a, b);
  Superfunction r(a.sig_);
  if (a.comps_.empty() || b.comps_.empty()) return r;
  if (a.comps_.size() == 1 && b.comps_.size() == 1) {
    const auto& [ma, ca] = a.comps_.front();
    const auto& [mb, cb] = b.comps_.front();
    const int s = grassmann_sign(ma, mb);
    if (s == 0) return r;
    RationalFunction c = ca * cb;
    if (s < 0) c = -c;
    if (!c.is_zero()) r.comps_.emplace_back(ma | mb, std::move(c));
    return r;
  }
  std::map<OddMonomial, RationalFunction> acc;
  for (const auto& [ma, ca] : a.comps_) {
    for (const auto& [mb, cb] : b.comps_) {
      const int s = grassmann_sign(ma, mb);
      if (s == 0) continue;
      RationalFunction c = ca * cb;
      auto [it, inserted] = acc.try_emplace(ma | mb, a.sig_.even);
      if (s > 0) {
        it->second += c;
      } else {
        it->second -= c;
      }
    }
  }
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) r.comps_.emplace_back(m, std::move(c));
  }
  return r;
}

bool operator==(const Superfunction& a, const Superfunction& b) {
  if (a.sig_ != b.sig_ || a.comps_.size() != b.comps_.size()) return false;
  for (std::size_t i = 0; i < a.comps_.size(); ++i) {
    if (a.comps_[i].first != b.comps_[i].first) return false;
    if (!(a.comps_[i].second == b.comps_[i].second)) return false;
  }
  return true;
}

Superfunction multiply(const Superfunction& a, const Superfunction& b) { return a * b; }

Superfunction invert(const Superfunction& a) {
  if (!a.has_invertible_body()) {
    throw not_invertible_error("superfunction with zero body is not invertible");
  }
  const Signature sig = a.signature();
  const RationalFunction body_inv = a.body().inverse();
  Superfunction inv_body(sig, body_inv);
  Superfunction soul = a - Superfunction(sig, a.body());
  if (soul.is_zero()) return inv_body;
  // u = -soul / body is nilpotent with u^{q+1} = 0.
  const Superfunction u = -(soul * inv_body);
  Superfunction sum = Superfunction::constant(sig, Rational(1));
  Superfunction power = sum;
  for (std::size_t k = 1; k <= sig.odd; ++k) {
    power = power * u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * inv_body;
}

Superfunction partial_even(const Superfunction& a, std::size_t k) {
  if (k >= a.signature().even) throw error("even coordinate index out of range");
  std::vector<Superfunction::Component> out;
  Superfunction r(a.signature());
  for (const auto& [m, c] : a.components()) {
    r += Superfunction::monomial(a.signature(), m, c.derivative(k));
  }
  return r;
}

Superfunction partial_odd(const Superfunction& a, std::size_t k) {
  if (k >= a.signature().odd) throw error("odd coordinate index out of range");
  const OddMonomial bit = OddMonomial{1} << k;
  Superfunction r(a.signature());
  for (const auto& [m, c] : a.components()) {
    if (!(m & bit)) continue;
    // Bring theta_k to the front past the generators preceding it.
    const int s = (std::popcount(m & (bit - 1)) & 1) ? -1 : 1;
    r += Superfunction::monomial(a.signature(), m & ~bit, s > 0 ? c : -c);
  }
  return r;
}

Superfunction evaluate_even(const Superfunction& a, std::span<const Rational> point) {
  const Signature sig = a.signature();
  if (point.size() != sig.even) throw signature_error("evaluation point has wrong arity");
  Superfunction r(sig);
  for (const auto& [m, c] : a.components()) {
    r += Superfunction::monomial(sig, m, RationalFunction::constant(sig.even, c.evaluate(point)));
  }
  return r;
}

Grading grading_of(const Superfunction& a) {
  if (a.is_zero()) return Grading::zero;
  bool even = false;
  bool odd = false;
  for (const auto& [m, c] : a.components()) {
    (is_odd(mask_parity(m)) ? odd : even) = true;
  }
  if (even && odd) return Grading::mixed;
  return even ? Grading::even : Grading::odd;
}

std::string to_string(const Superfunction& a, std::span<const std::string> even_names,
                      std::span<const std::string> odd_names) {
  if (a.is_zero()) return "0";
  std::vector<const Superfunction::Component*> order;
  for (const auto& c : a.components()) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(), [](const auto* x, const auto* y) {
    const int px = std::popcount(x->first);
    const int py = std::popcount(y->first);
    if (px != py) return px < py;
    // Ascending generator order reads as lexicographic on reversed bits.
    for (unsigned k = 0; k < 32; ++k) {
      const bool bx = (x->first >> k) & 1U;
      const bool by = (y->first >> k) & 1U;
      if (bx != by) return bx;
    }
    return false;
  });

  std::string out;
  for (const auto* comp : order) {
    const auto& [m, c] = *comp;
    std::string mono;
    for (unsigned k = 0; k < odd_names.size(); ++k) {
      if ((m >> k) & 1U) {
        if (!mono.empty()) mono += "*";
        mono += odd_names[k];
      }
    }
    std::string coeff = c.to_string(even_names);
    std::string term;
    if (mono.empty()) {
      term = coeff;
    } else if (coeff == "1") {
      term = mono;
    } else if (coeff == "-1") {
      term = "-" + mono;
    } else {
      const bool simple = c.is_polynomial() && c.numerator().size() == 1;
      term = (simple ? coeff : "(" + coeff + ")") + "*" + mono;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

}  // namespace superfed
