#include "superfed/geometry.hpp"

#include "superfed/errors.hpp"

namespace superfed {

namespace {

bool has_parity(const Superfunction& f, Parity p) {
  const Grading g = grading_of(f);
  return g == Grading::zero || g == (is_odd(p) ? Grading::odd : Grading::even);
}

Superfunction signed_copy(const Superfunction& f, int sign) { return sign > 0 ? f : -f; }

void check_dimension(const Chart& chart, const VectorField& x) {
  if (x.size() != chart.dimension()) throw signature_error("vector field not on this chart");
}

std::size_t complexity(const Superfunction& f) {
  std::size_t c = 0;
  for (const auto& [m, r] : f.components()) {
    c += r.numerator().size() + 4 * r.factors().size();
    for (const auto& factor : r.factors()) c += factor.base->size();
  }
  return c;
}

}  // namespace

Superfunction apply(const Chart& chart, const VectorField& x, const Superfunction& f) {
  check_dimension(chart, x);
  chart.check(f);
  Superfunction sum = chart.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    Superfunction d = chart.partial(i, f);
    if (!d.is_zero()) sum += x[i] * d;
  }
  return sum;
}

VectorField lie_bracket(const Chart& chart, const VectorField& x, const VectorField& y) {
  const int s = koszul(field_parity(chart, x), field_parity(chart, y));
  std::vector<Superfunction> comps;
  comps.reserve(chart.dimension());
  for (std::size_t k = 0; k < chart.dimension(); ++k) {
    Superfunction c = apply(chart, x, y[k]);
    const Superfunction back = apply(chart, y, x[k]);
    if (s > 0) {
      c -= back;
    } else {
      c += back;
    }
    comps.push_back(std::move(c));
  }
  return VectorField(std::move(comps));
}

Superfunction form_eval(const Chart& chart, const BilinearForm& g, const VectorField& x,
                        const VectorField& y) {
  const Parity px = field_parity(chart, x);
  const Parity py = field_parity(chart, y);
  const Parity pg = g.parity;
  Superfunction sum = chart.zero();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    const Parity xi = px + chart.parity(i);
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (y[j].is_zero() || g.gram(i, j).is_zero()) continue;
      const Parity yj = py + chart.parity(j);
      const int s = koszul(xi, pg) * koszul(yj, pg + chart.parity(i));
      sum += signed_copy(x[i] * y[j] * g.gram(i, j), s);
    }
  }
  return sum;
}

VectorField covariant_derivative(const Chart& chart, const Connection& c, const VectorField& x,
                                 const VectorField& y) {
  check_dimension(chart, x);
  const Parity py = field_parity(chart, y);
  const std::size_t n = chart.dimension();
  VectorField out = VectorField::zero(chart);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    std::vector<Superfunction> inner(n, chart.zero());
    for (std::size_t k = 0; k < n; ++k) inner[k] = chart.partial(i, y[k]);
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      const int s = koszul(chart.parity(i), py + chart.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        const auto& gamma = c.christoffel(k, i, j);
        if (gamma.is_zero()) continue;
        inner[k] += signed_copy(y[j] * gamma, s);
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (!inner[k].is_zero()) out[k] += x[i] * inner[k];
    }
  }
  return out;
}

VectorField torsion(const Chart& chart, const Connection& c, const VectorField& x,
                    const VectorField& y) {
  const int s = koszul(field_parity(chart, x), field_parity(chart, y));
  VectorField t = covariant_derivative(chart, c, x, y);
  const VectorField back = covariant_derivative(chart, c, y, x);
  if (s > 0) {
    t -= back;
  } else {
    t += back;
  }
  t -= lie_bracket(chart, x, y);
  return t;
}

Superfunction covariant_derivative_bilinear(const Chart& chart, const Connection& c,
                                            const BilinearForm& g, const VectorField& x,
                                            const VectorField& y, const VectorField& z) {
  const Parity px = field_parity(chart, x);
  const Parity py = field_parity(chart, y);
  field_parity(chart, z);
  Superfunction r = apply(chart, x, form_eval(chart, g, y, z));
  r -= signed_copy(form_eval(chart, g, covariant_derivative(chart, c, x, y), z),
                   koszul(px, g.parity));
  r -= signed_copy(form_eval(chart, g, y, covariant_derivative(chart, c, x, z)),
                   koszul(px, py + g.parity));
  return r;
}

Table3 compatibility_residuals(const Chart& chart, const Connection& c, const BilinearForm& g) {
  const std::size_t n = chart.dimension();
  const Parity pg = g.parity;
  // lowered(i, j, k) = g(nabla_{d_i} d_j, d_k)
  Table3 lowered(n, chart.signature());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        const auto& gamma = c.christoffel(l, i, j);
        if (gamma.is_zero()) continue;
        const Parity pgam = chart.parity(i) + chart.parity(j) + chart.parity(l);
        for (std::size_t k = 0; k < n; ++k) {
          if (g.gram(l, k).is_zero()) continue;
          lowered(i, j, k) += signed_copy(gamma * g.gram(l, k), koszul(pgam, pg));
        }
      }
    }
  }
  Table3 out(n, chart.signature());
  for (std::size_t i = 0; i < n; ++i) {
    const Parity pi = chart.parity(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Parity pj = chart.parity(j);
      for (std::size_t k = 0; k < n; ++k) {
        Superfunction r = chart.partial(i, g.gram(j, k));
        r -= signed_copy(lowered(i, j, k), koszul(pi, pg));
        // g(d_j, nabla_{d_i} d_k)
        Superfunction right = chart.zero();
        for (std::size_t l = 0; l < n; ++l) {
          const auto& gamma = c.christoffel(l, i, k);
          if (gamma.is_zero() || g.gram(j, l).is_zero()) continue;
          const Parity pgam = pi + chart.parity(k) + chart.parity(l);
          right += signed_copy(gamma * g.gram(j, l), koszul(pgam, pg + pj));
        }
        r -= signed_copy(right, koszul(pi, pj + pg));
        out(i, j, k) = std::move(r);
      }
    }
  }
  return out;
}

std::vector<IndexedResidual> parity_violations(const Chart& chart, const BilinearForm& g) {
  std::vector<IndexedResidual> out;
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    for (std::size_t j = 0; j < chart.dimension(); ++j) {
      if (!has_parity(g.gram(i, j), g.parity + chart.parity(i) + chart.parity(j))) {
        out.push_back({{i, j}, g.gram(i, j)});
      }
    }
  }
  return out;
}

std::vector<IndexedResidual> antisymmetry_violations(const Chart& chart, const BilinearForm& g) {
  std::vector<IndexedResidual> out;
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    for (std::size_t j = i; j < chart.dimension(); ++j) {
      const int s = koszul(chart.parity(i), chart.parity(j));
      Superfunction r = g.gram(i, j) + signed_copy(g.gram(j, i), s);
      if (!r.is_zero()) out.push_back({{i, j}, std::move(r)});
    }
  }
  return out;
}

ClosednessCheck is_closed(const Chart& chart, const BilinearForm& omega) {
  const std::size_t n = chart.dimension();
  const Parity w = omega.parity;
  ClosednessCheck out{true, Table3(n, chart.signature())};
  for (std::size_t i = 0; i < n; ++i) {
    const Parity pi = chart.parity(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Parity pj = chart.parity(j);
      for (std::size_t k = 0; k < n; ++k) {
        const Parity pk = chart.parity(k);
        Superfunction r = signed_copy(chart.partial(i, omega.gram(j, k)), koszul(w, pi));
        r -= signed_copy(chart.partial(j, omega.gram(i, k)), koszul(pj, w + pi));
        r += signed_copy(chart.partial(k, omega.gram(i, j)), koszul(pk, w + pi + pj));
        if (!r.is_zero()) out.closed = false;
        out.residuals(i, j, k) = std::move(r);
      }
    }
  }
  return out;
}

BilinearForm d_one_form(const Chart& chart, std::span<const Superfunction> alpha, Parity parity) {
  const std::size_t n = chart.dimension();
  if (alpha.size() != n) throw signature_error("covector not on this chart");
  for (std::size_t j = 0; j < n; ++j) {
    chart.check(alpha[j]);
    if (!has_parity(alpha[j], parity + chart.parity(j))) {
      throw homogeneity_error("covector component " + std::to_string(j + 1) +
                              " has the wrong parity");
    }
  }
  BilinearForm out = BilinearForm::zero(chart, parity);
  for (std::size_t i = 0; i < n; ++i) {
    const Parity pi = chart.parity(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Parity pj = chart.parity(j);
      Superfunction e = signed_copy(chart.partial(i, alpha[j]), koszul(parity, pi));
      e -= signed_copy(chart.partial(j, alpha[i]), koszul(pj, parity + pi));
      out.gram(i, j) = std::move(e);
    }
  }
  return out;
}

RationalFunction body_determinant(const Chart& chart, const BilinearForm& g) {
  const std::size_t n = chart.dimension();
  const std::size_t nv = chart.signature().even;
  std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(n, RationalFunction(nv)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = g.gram(i, j).body();
  }
  RationalFunction det = RationalFunction::constant(nv, Rational(1));
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t pivot = n;
    for (std::size_t s = r; s < n; ++s) {
      if (!a[s][r].is_zero() && (pivot == n || a[s][r].is_constant())) pivot = s;
    }
    if (pivot == n) return RationalFunction(nv);
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      det = -det;
    }
    det = det * a[r][r];
    const RationalFunction inv = a[r][r].inverse();
    for (std::size_t s = r + 1; s < n; ++s) {
      if (a[s][r].is_zero()) continue;
      const RationalFunction f = a[s][r] * inv;
      for (std::size_t k = r; k < n; ++k) {
        if (!a[r][k].is_zero()) a[s][k] -= f * a[r][k];
      }
    }
  }
  return det;
}

OmegaSolver::OmegaSolver(const Chart& chart, const BilinearForm& omega)
    : n_(chart.dimension()),
      sig_(chart.signature()),
      omega_parity_(omega.parity), inverse_(n_, chart.signature()) {
  // V M = s t with M_lk = (-1)^{|l||w|} w_lk and s = (-1)^{|V||w|}. Column
  // operations reduce M to the identity; applied to an identity block they
  // produce M^{-1}.
  const std::size_t n = n_;
  std::vector<std::vector<Superfunction>> a(2 * n, std::vector<Superfunction>(n, chart.zero()));
  for (std::size_t l = 0; l < n; ++l) {
    const int s = koszul(chart.parity(l), omega.parity);
    for (std::size_t k = 0; k < n; ++k) a[l][k] = signed_copy(omega.gram(l, k), s);
    a[n + l][l] = chart.constant(Rational(1));
  }
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t pivot = n;
    std::size_t best = 0;
    for (std::size_t c = r; c < n; ++c) {
      if (!a[r][c].has_invertible_body()) continue;
      const std::size_t cost = complexity(a[r][c]);
      if (pivot == n || cost < best) {
        pivot = c;
        best = cost;
      }
    }
    if (pivot == n) {
      throw degenerate_form_error("no invertible-body pivot in row " + std::to_string(r + 1) +
                                  " of the Gram matrix");
    }
    if (pivot != r) {
      for (auto& row : a) std::swap(row[r], row[pivot]);
    }
    const Superfunction inv = invert(a[r][r]);
    for (auto& row : a) {
      if (!row[r].is_zero()) row[r] = row[r] * inv;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k == r || a[r][k].is_zero()) continue;
      const Superfunction f = a[r][k];
      for (auto& row : a) {
        if (!row[r].is_zero()) row[k] -= row[r] * f;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) inverse_(k, l) = std::move(a[n + k][l]);
  }
}

VectorField OmegaSolver::solve(std::span<const Superfunction> targets, Parity v_parity) const {
  if (targets.size() != n_) throw signature_error("target list has wrong length");
  const int s = koszul(v_parity, omega_parity_);
  std::vector<Superfunction> comps;
  comps.reserve(n_);
  for (std::size_t l = 0; l < n_; ++l) {
    Superfunction v(sig_);
    for (std::size_t k = 0; k < n_; ++k) {
      if (targets[k].is_zero() || inverse_(k, l).is_zero()) continue;
      v += targets[k] * inverse_(k, l);
    }
    comps.push_back(signed_copy(v, s));
  }
  return VectorField(std::move(comps));
}

TwoForm TwoForm::make(const Chart& chart, BilinearForm omega) {
  if (omega.gram.dimension() != chart.dimension()) {
    throw invariant_violation("Gram matrix dimension does not match the chart");
  }
  if (auto bad = parity_violations(chart, omega); !bad.empty()) {
    const auto& v = bad.front();
    throw invariant_violation("omega entry (" + chart.name(v.indices[0]) + "," +
                              chart.name(v.indices[1]) + ") = " + chart.format(v.residual) +
                              " does not have parity " +
                              std::string(to_string(omega.parity + chart.parity(v.indices[0]) +
                                                    chart.parity(v.indices[1]))));
  }
  if (auto bad = antisymmetry_violations(chart, omega); !bad.empty()) {
    const auto& v = bad.front();
    throw invariant_violation("omega is not graded antisymmetric at (" + chart.name(v.indices[0]) +
                              "," + chart.name(v.indices[1]) +
                              "): residual " + chart.format(v.residual));
  }
  const auto closed = is_closed(chart, omega);
  if (!closed.closed) {
    const std::size_t n = chart.dimension();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const auto& r = closed.residuals(i, j, k);
          if (r.is_zero()) continue;
          throw invariant_violation("omega is not closed at (" + chart.name(i) + "," +
                                    chart.name(j) + "," + chart.name(k) + "): residual " +
                                    chart.format(r));
        }
      }
    }
  }
  auto solver = std::make_shared<const OmegaSolver>(chart, omega);
  return TwoForm(std::move(omega), std::move(solver));
}

VectorField solve_against_omega(const Chart& chart, const BilinearForm& omega,
                                std::span<const Superfunction> targets, Parity v_parity) {
  return OmegaSolver(chart, omega).solve(targets, v_parity);
}

VectorField solve_against_omega(const TwoForm& omega, std::span<const Superfunction> targets,
                                Parity v_parity) {
  return omega.solver().solve(targets, v_parity);
}

std::vector<IndexedResidual> connection_parity_violations(const Chart& chart,
                                                          const Connection& c) {
  std::vector<IndexedResidual> out;
  const std::size_t n = chart.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const auto& g = c.christoffel(k, i, j);
        if (!has_parity(g, chart.parity(i) + chart.parity(j) + chart.parity(k))) {
          out.push_back({{k, i, j}, g});
        }
      }
    }
  }
  return out;
}

bool is_symmetric(const Chart& chart, const Connection& c) {
  const std::size_t n = chart.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const int s = koszul(chart.parity(i), chart.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        if (!(c.christoffel(k, i, j) == signed_copy(c.christoffel(k, j, i), s))) return false;
      }
    }
  }
  return true;
}

}  // namespace superfed
