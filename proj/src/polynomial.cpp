#include <array>
#include "superfed/polynomial.hpp"

#include <algorithm>
#include <limits>

#include "superfed/errors.hpp"

namespace superfed {

Monomial Monomial::variable(std::size_t index, std::uint16_t power) {
  Monomial m;
  m.exps_[index] = power;
  return m;
}

unsigned Monomial::total_degree() const noexcept {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < max_even_coordinates; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < max_even_coordinates; ++i) {
    const unsigned e = unsigned{a.exps_[i]} + unsigned{b.exps_[i]};
    if (e > std::numeric_limits<std::uint16_t>::max()) {
      throw error("monomial exponent overflow");
    }
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) noexcept {
  Monomial r;
  for (std::size_t i = 0; i < max_even_coordinates; ++i) {
    r.exps_[i] = static_cast<std::uint16_t>(a.exps_[i] - b.exps_[i]);
  }
  return r;
}

namespace {

bool term_less(const Polynomial::Term& a, const Polynomial::Term& b) {
  return a.monomial < b.monomial;
}

// Merges two sorted term lists, scaling the second by `sign`. Terms of `a`
// are moved from.
std::vector<Polynomial::Term> merge(std::vector<Polynomial::Term>&& a,
                                    std::span<const Polynomial::Term> b,
                                    int sign) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const auto cmp = a[i].monomial <=> b[j].monomial;
    if (cmp < 0) {
      out.push_back(std::move(a[i++]));
    } else if (cmp > 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
    } else {
      if (sign < 0) {
        a[i].coefficient -= b[j].coefficient;
      } else {
        a[i].coefficient += b[j].coefficient;
      }
      if (sgn(a[i].coefficient) != 0) out.push_back(std::move(a[i]));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

void check_nvars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) {
    throw signature_error("polynomials over different numbers of variables");
  }
}

constexpr std::uint64_t modulus = 2147483647;  // 2^31 - 1

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b) { return (a * b) % modulus; }

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul_mod(r, a);
    a = mul_mod(a, a);
    e >>= 1;
  }
  return r;
}

std::optional<std::uint64_t> reduce(const Rational& q) {
  const auto num = mpz_fdiv_ui(q.get_num_mpz_t(), modulus);
  if (mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0) return num;
  const auto den = mpz_fdiv_ui(q.get_den_mpz_t(), modulus);
  if (den == 0) return std::nullopt;
  return mul_mod(num, pow_mod(den, modulus - 2));
}

// Image of p in F_P[x_var] after substituting fixed values for the other
// variables; nullopt if a coefficient is not P-integral.
std::optional<std::vector<std::uint64_t>> univariate_image(
    std::span<const Polynomial::Term> terms, std::size_t nvars, std::size_t var,
    unsigned degree) {
  std::vector<std::uint64_t> out(degree + 1, 0);
  // powers[i][e] = c_i^e
  std::array<std::vector<std::uint64_t>, max_even_coordinates> powers;
  for (const auto& t : terms) {
    auto c = reduce(t.coefficient);
    if (!c) return std::nullopt;
    std::uint64_t v = *c;
    for (std::size_t i = 0; i < nvars; ++i) {
      const unsigned e = t.monomial[i];
      if (i == var || e == 0) continue;
      auto& table = powers[i];
      if (table.empty()) table.push_back(1);
      while (table.size() <= e) table.push_back(mul_mod(table.back(), 1000003 + 7919 * i));
      v = mul_mod(v, table[e]);
    }
    auto& slot = out[t.monomial[var]];
    slot = (slot + v) % modulus;
  }
  return out;
}

// False only when `divisor` certainly does not divide `dividend`: a
// substitution x_i -> c_i (i != var) followed by reduction mod P is a ring
// homomorphism, and when the divisor's image keeps its degree with a unit
// leading coefficient, exact division survives it.
bool may_divide(const Polynomial& dividend, const Polynomial& divisor) {
  std::size_t var = 0;
  unsigned best = 0;
  for (std::size_t v = 0; v < divisor.nvars(); ++v) {
    const unsigned d = divisor.degree_in(v);
    if (d > best) {
      best = d;
      var = v;
    }
  }
  if (best == 0) return true;
  const unsigned top = dividend.degree_in(var);
  auto d = univariate_image(divisor.terms(), divisor.nvars(), var, best);
  if (!d || (*d)[best] == 0) return true;
  auto n = univariate_image(dividend.terms(), dividend.nvars(), var, top);
  if (!n) return true;
  auto& r = *n;
  const std::uint64_t lead_inv = pow_mod((*d)[best], modulus - 2);
  for (unsigned k = top + 1; k-- > best;) {
    if (r[k] == 0) continue;
    const std::uint64_t f = mul_mod(r[k], lead_inv);
    for (unsigned m = 0; m <= best; ++m) {
      auto& slot = r[k - best + m];
      slot = (slot + modulus - mul_mod(f, (*d)[m])) % modulus;
    }
  }
  for (unsigned k = 0; k < best; ++k) {
    if (r[k] != 0) return false;
  }
  return true;
}

}  // namespace

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (sgn(c) != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw error("polynomial variable index out of range");
  Polynomial p(nvars);
  p.terms_.push_back({Monomial::variable(index), Rational(1)});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  Polynomial p(nvars);
  p.terms_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coefficient += t.coefficient;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coefficient) == 0) {
        p.terms_.pop_back();
      }
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coefficient) == 0) {
    p.terms_.pop_back();
  }
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.front().monomial.is_one()) {
    return terms_.front().coefficient;
  }
  return Rational(0);
}

unsigned Polynomial::total_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.total_degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const noexcept {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.monomial[var]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_nvars(*this, other);
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  terms_ = merge(std::move(terms_), other.terms_, 1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_nvars(*this, other);
  if (other.terms_.empty()) return *this;
  terms_ = merge(std::move(terms_), other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  if (c == 1) return *this;
  for (auto& t : terms_) t.coefficient *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.nvars());
  if (a.is_constant()) return b * a.terms_.front().coefficient;
  if (b.is_constant()) return a * b.terms_.front().coefficient;
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // Multiplying by a single term preserves the monomial order.
    const auto& single = a.terms_.size() == 1 ? a.terms_.front() : b.terms_.front();
    const auto& other = a.terms_.size() == 1 ? b : a;
    Polynomial r(a.nvars());
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_) {
      r.terms_.push_back({t.monomial * single.monomial,
                          t.coefficient * single.coefficient});
    }
    return r;
  }
  std::vector<Polynomial::Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) {
      products.push_back({s.monomial * t.monomial, s.coefficient * t.coefficient});
    }
  }
  return Polynomial::from_terms(a.nvars(), std::move(products));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].monomial != b.terms_[i].monomial ||
        a.terms_[i].coefficient != b.terms_[i].coefficient) {
      return false;
    }
  }
  return true;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const {
  check_nvars(*this, divisor);
  if (divisor.is_zero()) throw not_invertible_error("polynomial division by zero");
  if (is_zero()) return Polynomial(nvars_);
  if (divisor.is_constant()) {
    return *this * Rational(1 / divisor.terms_.front().coefficient);
  }
  // The lex-smallest and lex-largest terms of a product are the products of
  // the factors' extreme terms.
  if (!divisor.terms_.front().monomial.divides(terms_.front().monomial) ||
      !divisor.terms_.back().monomial.divides(terms_.back().monomial)) {
    return std::nullopt;
  }
  for (std::size_t v = 0; v < nvars_; ++v) {
    if (divisor.degree_in(v) > degree_in(v)) return std::nullopt;
  }
  if (!may_divide(*this, divisor)) return std::nullopt;

  const Term& lead = divisor.terms_.back();
  const Rational lead_inv = 1 / lead.coefficient;
  std::vector<Term> remainder = terms_;
  std::vector<Term> quotient;
  std::vector<Term> shifted;
  while (!remainder.empty()) {
    const Term& top = remainder.back();
    if (!lead.monomial.divides(top.monomial)) return std::nullopt;
    Term q{top.monomial / lead.monomial, top.coefficient * lead_inv};
    shifted.clear();
    shifted.reserve(divisor.terms_.size());
    for (const auto& t : divisor.terms_) {
      shifted.push_back({t.monomial * q.monomial, t.coefficient * q.coefficient});
    }
    remainder = merge(std::move(remainder), shifted, -1);
    quotient.push_back(std::move(q));
  }
  std::reverse(quotient.begin(), quotient.end());
  Polynomial result(nvars_);
  result.terms_ = std::move(quotient);
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_);
  for (const auto& t : terms_) {
    const auto e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, static_cast<std::uint16_t>(e - 1));
    r.terms_.push_back({m, t.coefficient * e});
  }
  // Lowering one exponent can reorder terms.
  std::sort(r.terms_.begin(), r.terms_.end(), term_less);
  return r;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw signature_error("evaluation point has wrong arity");
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coefficient;
    for (std::size_t i = 0; i < nvars_; ++i) {
      for (unsigned k = 0; k < t.monomial[i]; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

Rational Polynomial::make_monic() {
  if (terms_.empty()) return Rational(0);
  Rational lead = terms_.back().coefficient;
  if (lead != 1) {
    const Rational inv = 1 / lead;
    for (auto& t : terms_) t.coefficient *= inv;
  }
  return lead;
}

std::pair<Rational, Polynomial> Polynomial::primitive_part() const {
  if (terms_.empty()) return {Rational(0), *this};
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& t : terms_) {
    den_lcm = lcm(den_lcm, t.coefficient.get_den());
    num_gcd = gcd(num_gcd, t.coefficient.get_num());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (sgn(terms_.back().coefficient) < 0) c = -c;
  Polynomial p = *this * Rational(1 / c);
  return {c, std::move(p)};
}

std::string to_string(const Rational& q) {
  return q.get_str();
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* a, const Term* b) {
    const auto da = a->monomial.total_degree();
    const auto db = b->monomial.total_degree();
    if (da != db) return da < db;
    return b->monomial < a->monomial;
  });
  std::string out;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->coefficient;
    const bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (negative) {
      out += "-";
    } else if (!first) {
      out += "+";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto e = t->monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[i];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

}  // namespace superfed
