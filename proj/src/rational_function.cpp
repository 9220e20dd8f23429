#include "superfed/rational_function.hpp"

#include <algorithm>

#include "superfed/errors.hpp"

namespace superfed {

namespace {

bool same_base(const RationalFunction::Factor& a, const RationalFunction::Factor& b) {
  return a.base == b.base || *a.base == *b.base;
}

Polynomial power(const Polynomial& p, unsigned e) {
  Polynomial r = Polynomial::constant(p.nvars(), Rational(1));
  for (unsigned k = 0; k < e; ++k) r = r * p;
  return r;
}

bool same_factors(std::span<const RationalFunction::Factor> a,
                  std::span<const RationalFunction::Factor> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].exponent != b[i].exponent || !same_base(a[i], b[i])) return false;
  }
  return true;
}

unsigned exponent_of(std::span<const RationalFunction::Factor> den,
                     const RationalFunction::Factor& f) {
  for (const auto& g : den) {
    if (same_base(f, g)) return g.exponent;
  }
  return 0;
}

// Divides `num` by as many copies of the factors as divide it exactly,
// lowering the exponents accordingly.
void cancel_into(Polynomial& num, std::vector<RationalFunction::Factor>& den) {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (auto& f : den) {
    while (f.exponent > 0) {
      auto q = num.divide_exact(*f.base);
      if (!q) break;
      num = std::move(*q);
      --f.exponent;
    }
  }
  std::erase_if(den, [](const auto& f) { return f.exponent == 0; });
}

void check_nvars(const RationalFunction& a, const RationalFunction& b) {
  if (a.nvars() != b.nvars()) {
    throw signature_error("rational functions over different variables");
  }
}

}  // namespace

RationalFunction::RationalFunction(Polynomial numerator, const Polynomial& denominator)
    : num_(std::move(numerator)) {
  if (denominator.is_zero()) throw not_invertible_error("zero denominator");
  if (denominator.nvars() != num_.nvars()) {
    throw signature_error("rational function parts over different variables");
  }
  if (denominator.is_constant()) {
    num_ *= Rational(1 / denominator.constant_term());
    return;
  }
  Polynomial base = denominator;
  const Rational lead = base.make_monic();
  num_ *= Rational(1 / lead);
  den_.push_back({std::make_shared<const Polynomial>(std::move(base)), 1});
  cancel();
}

void RationalFunction::cancel() { cancel_into(num_, den_); }

Polynomial RationalFunction::denominator() const {
  Polynomial d = Polynomial::constant(nvars(), Rational(1));
  for (const auto& f : den_) d = d * power(*f.base, f.exponent);
  return d;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) den_.clear();
  return *this;
}

RationalFunction& RationalFunction::accumulate(const RationalFunction& b, int sign) {
  check_nvars(*this, b);
  if (b.is_zero()) return *this;
  if (is_zero()) {
    *this = sign > 0 ? b : -b;
    return *this;
  }
  if (same_factors(den_, b.den_)) {
    if (sign > 0) {
      num_ += b.num_;
    } else {
      num_ -= b.num_;
    }
    cancel();
    return *this;
  }

  // Common multiple of the two denominators.
  std::vector<Factor> common = den_;
  for (const auto& g : b.den_) {
    auto it = std::find_if(common.begin(), common.end(),
                           [&](const auto& f) { return same_base(f, g); });
    if (it == common.end()) {
      common.push_back(g);
    } else {
      it->exponent = std::max(it->exponent, g.exponent);
    }
  }
  for (const auto& f : common) {
    for (unsigned k = exponent_of(den_, f); k < f.exponent; ++k) num_ = num_ * *f.base;
  }
  const bool lift_b = std::any_of(common.begin(), common.end(), [&](const auto& f) {
    return exponent_of(b.den_, f) < f.exponent;
  });
  if (lift_b) {
    Polynomial nb = b.num_;
    for (const auto& f : common) {
      for (unsigned k = exponent_of(b.den_, f); k < f.exponent; ++k) nb = nb * *f.base;
    }
    if (sign > 0) {
      num_ += nb;
    } else {
      num_ -= nb;
    }
  } else if (sign > 0) {
    num_ += b.num_;
  } else {
    num_ -= b.num_;
  }
  den_ = std::move(common);
  cancel();
  return *this;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r = a;
  return r.accumulate(b, 1);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  RationalFunction r = a;
  return r.accumulate(b, -1);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  check_nvars(a, b);
  if (a.is_zero() || b.is_zero()) return RationalFunction(a.nvars());
  if (a.is_constant()) return b * a.num_.constant_term();
  if (b.is_constant()) return a * b.num_.constant_term();

  // Cancel each numerator against the other operand's denominator before
  // multiplying; each operand is already reduced against its own.
  Polynomial na = a.num_;
  Polynomial nb = b.num_;
  std::vector<RationalFunction::Factor> da = a.den_;
  std::vector<RationalFunction::Factor> db = b.den_;
  cancel_into(na, db);
  cancel_into(nb, da);

  RationalFunction r(na * nb);
  r.den_ = std::move(da);
  for (const auto& g : db) {
    auto it = std::find_if(r.den_.begin(), r.den_.end(),
                           [&](const auto& f) { return same_base(f, g); });
    if (it == r.den_.end()) {
      r.den_.push_back(g);
    } else {
      it->exponent += g.exponent;
    }
  }
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw not_invertible_error("inverse of zero rational function");
  Polynomial top = denominator();
  if (num_.is_constant()) {
    return RationalFunction(top * Rational(1 / num_.constant_term()));
  }
  Polynomial base = num_;
  const Rational lead = base.make_monic();
  RationalFunction r(top * Rational(1 / lead));
  r.den_.push_back({std::make_shared<const Polynomial>(std::move(base)), 1});
  r.cancel();
  return r;
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (den_.empty()) return RationalFunction(num_.derivative(var));
  // d(n / prod f^e) = (n' prod f - n sum e f' prod_{g != f} g) / (prod f^e * prod f)
  const std::size_t nv = nvars();
  Polynomial all = Polynomial::constant(nv, Rational(1));
  for (const auto& f : den_) all = all * *f.base;
  Polynomial top = num_.derivative(var) * all;
  for (std::size_t i = 0; i < den_.size(); ++i) {
    Polynomial df = den_[i].base->derivative(var);
    if (df.is_zero()) continue;
    Polynomial term = df * Rational(den_[i].exponent);
    for (std::size_t j = 0; j < den_.size(); ++j) {
      if (j != i) term = term * *den_[j].base;
    }
    top -= num_ * term;
  }
  RationalFunction r(std::move(top));
  r.den_ = den_;
  for (auto& f : r.den_) ++f.exponent;
  r.cancel();
  return r;
}

Rational RationalFunction::evaluate(std::span<const Rational> point) const {
  Rational value = num_.evaluate(point);
  for (const auto& f : den_) {
    const Rational d = f.base->evaluate(point);
    if (sgn(d) == 0) throw pole_error("denominator vanishes at evaluation point");
    for (unsigned k = 0; k < f.exponent; ++k) value /= d;
  }
  return value;
}

bool operator==(const RationalFunction& a, const RationalFunction& b) {
  if (a.nvars() != b.nvars()) return false;
  if (same_factors(a.den_, b.den_)) return a.num_ == b.num_;
  return (a - b).is_zero();
}

bool equal_by_cross_multiplication(const RationalFunction& a, const RationalFunction& b) {
  check_nvars(a, b);
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  if (den_.empty()) return num_.to_string(names);

  // value = num / prod (c_i P_i)^{e_i} with P_i primitive over the integers.
  Polynomial num = num_;
  std::vector<std::pair<Polynomial, unsigned>> parts;
  for (const auto& f : den_) {
    auto [c, p] = f.base->primitive_part();
    for (unsigned k = 0; k < f.exponent; ++k) num *= Rational(1 / c);
    parts.emplace_back(std::move(p), f.exponent);
  }
  auto [g, top] = num.primitive_part();
  const mpz_class a = g.get_num();
  const mpz_class b = g.get_den();

  std::string numerator;
  if (top.is_constant()) {
    numerator = a.get_str();
  } else {
    std::string body = top.to_string(names);
    const bool wrap = top.size() > 1;
    if (a == 1) {
      numerator = wrap ? "(" + body + ")" : body;
    } else if (a == -1) {
      numerator = "-" + (wrap ? "(" + body + ")" : body);
    } else {
      numerator = a.get_str() + "*" + (wrap ? "(" + body + ")" : body);
    }
  }

  std::vector<std::string> pieces;
  if (b != 1) pieces.push_back(b.get_str());
  for (const auto& [p, e] : parts) {
    std::string s = p.to_string(names);
    const bool bare_variable =
        p.size() == 1 && p.leading_term().coefficient == 1 && p.total_degree() == 1;
    if (!bare_variable) s = "(" + s + ")";
    if (e > 1) s += "^" + std::to_string(e);
    pieces.push_back(std::move(s));
  }
  std::string denominator;
  for (const auto& s : pieces) {
    if (!denominator.empty()) denominator += "*";
    denominator += s;
  }
  if (pieces.size() > 1) denominator = "(" + denominator + ")";
  return numerator + "/" + denominator;
}

}  // namespace superfed
