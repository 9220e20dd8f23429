#include "superfed/fedosov.hpp"

#include <array>

#include "superfed/errors.hpp"
#include "superfed/sampling.hpp"

namespace superfed {

namespace {

Superfunction signed_copy(const Superfunction& f, int sign) { return sign > 0 ? f : -f; }

bool has_parity(const Superfunction& f, Parity p) {
  const Grading g = grading_of(f);
  return g == Grading::zero || g == (is_odd(p) ? Grading::odd : Grading::even);
}

// table(i,j,k) = omega(T(d_i,d_j), d_k) for a (2,1) tensor whose pairs have
// parity |i| + |j|.
Table3 lower_index(const Chart& chart, const TwoForm& omega, const Table21& t) {
  const std::size_t n = chart.dimension();
  Table3 out(n, chart.signature());
  const Parity w = omega.parity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Parity pv = chart.parity(i) + chart.parity(j);
      for (std::size_t k = 0; k < n; ++k) {
        Superfunction sum = chart.zero();
        for (std::size_t l = 0; l < n; ++l) {
          const auto& c = t(l, i, j);
          if (c.is_zero() || omega(l, k).is_zero()) continue;
          sum += signed_copy(c * omega(l, k), koszul(pv + chart.parity(l), w));
        }
        out(i, j, k) = std::move(sum);
      }
    }
  }
  return out;
}

// Koszul sign of rearranging graded objects with parities `p` by `perm`.
int permutation_sign(const std::array<Parity, 3>& p, const std::array<int, 3>& perm) {
  int s = 1;
  for (int u = 0; u < 3; ++u) {
    for (int v = u + 1; v < 3; ++v) {
      if (perm[u] > perm[v]) s *= koszul(p[perm[u]], p[perm[v]]);
    }
  }
  return s;
}

constexpr std::array<std::array<int, 3>, 6> permutations{{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};

}  // namespace

void VerificationReport::add(std::string identity, std::vector<std::size_t> indices,
                             Superfunction residual) {
  const bool ok = residual.is_zero();
  if (!ok) ++failures_;
  checks_.push_back({std::move(identity), std::move(indices), std::move(residual), ok});
}

const Check* VerificationReport::first_failure(std::string_view identity) const {
  for (const auto& c : checks_) {
    if (!c.passed && (identity.empty() || c.identity == identity)) return &c;
  }
  return nullptr;
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& c : other.checks_) add(c.identity, c.indices, c.residual);
}

NTensor extract_n(const Chart& chart, const Connection& base, const TwoForm& omega) {
  if (!is_symmetric(chart, base)) {
    throw precondition_error("base connection is not symmetric");
  }
  const std::size_t n = chart.dimension();
  const Parity w = omega.parity();
  NTensor out{Table21::zero(chart)};
  std::vector<VectorField> coords;
  for (std::size_t i = 0; i < n; ++i) coords.push_back(VectorField::coordinate(chart, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Superfunction> targets;
      targets.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        targets.push_back(signed_copy(
            covariant_derivative_bilinear(chart, base, omega.form(), coords[i], coords[j],
                                          coords[k]),
            koszul(w, chart.parity(i))));
      }
      out.components.set_pair(
          i, j, solve_against_omega(omega, targets, chart.parity(i) + chart.parity(j)));
    }
  }
  return out;
}

Connection fedosov_correct(const Chart& chart, const Connection& base, const NTensor& n_tensor) {
  const std::size_t n = chart.dimension();
  Connection out = base;
  const Rational third(1, 3);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int s = koszul(chart.parity(i), chart.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        Superfunction sum = n_tensor.components(k, i, j) + signed_copy(n_tensor.components(k, j, i), s);
        if (!sum.is_zero()) out.christoffel(k, i, j) += third * sum;
      }
    }
  }
  return out;
}

Connection fedosov_correct(const Chart& chart, const Connection& base, const TwoForm& omega) {
  return fedosov_correct(chart, base, extract_n(chart, base, omega));
}

VerificationReport verify_symplectic(const Chart& chart, const Connection& c,
                                     const TwoForm& omega) {
  const std::size_t n = chart.dimension();
  VerificationReport report;
  std::vector<VectorField> coords;
  for (std::size_t i = 0; i < n; ++i) coords.push_back(VectorField::coordinate(chart, i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      VectorField t = torsion(chart, c, coords[i], coords[j]);
      for (std::size_t k = 0; k < n; ++k) {
        report.add(identity::torsion, {i, j, k}, std::move(t[k]));
      }
    }
  }
  Table3 compat = compatibility_residuals(chart, c, omega.form());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        report.add(identity::compatibility, {i, j, k}, std::move(compat(i, j, k)));
      }
    }
  }
  return report;
}

VerificationReport check_n_antisymmetry(const Chart& chart, const TwoForm& omega,
                                        const NTensor& n_tensor) {
  const std::size_t n = chart.dimension();
  const Table3 lowered = lower_index(chart, omega, n_tensor.components);
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const int s = koszul(chart.parity(j), chart.parity(k));
        report.add(identity::n_antisymmetry, {i, j, k},
                   lowered(i, j, k) + signed_copy(lowered(i, k, j), s));
      }
    }
  }
  return report;
}

VerificationReport check_n_cyclic(const Chart& chart, const TwoForm& omega,
                                  const NTensor& n_tensor) {
  const std::size_t n = chart.dimension();
  const Table3 lowered = lower_index(chart, omega, n_tensor.components);
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    const Parity pi = chart.parity(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Parity pj = chart.parity(j);
      for (std::size_t k = 0; k < n; ++k) {
        const Parity pk = chart.parity(k);
        Superfunction r = lowered(i, j, k);
        r += signed_copy(lowered(j, k, i), koszul(pi, pj + pk));
        r += signed_copy(lowered(k, i, j), koszul(pk, pi + pj));
        report.add(identity::n_cyclic, {i, j, k}, std::move(r));
      }
    }
  }
  return report;
}

std::vector<IndexedResidual> cochain_violations(const Chart& chart, const SCochain& b) {
  const std::size_t n = chart.dimension();
  std::vector<IndexedResidual> out;
  for (std::size_t i = 0; i < n; ++i) {
    const Parity pi = chart.parity(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Parity pj = chart.parity(j);
      for (std::size_t k = 0; k < n; ++k) {
        const Parity pk = chart.parity(k);
        const auto& v = b.components(i, j, k);
        if (!has_parity(v, b.parity + pi + pj + pk)) out.push_back({{i, j, k}, v});
        Superfunction first = v - signed_copy(b.components(j, i, k), koszul(pi, pj));
        if (!first.is_zero()) out.push_back({{i, j, k}, std::move(first)});
        Superfunction second = v - signed_copy(b.components(i, k, j), koszul(pj, pk));
        if (!second.is_zero()) out.push_back({{i, j, k}, std::move(second)});
      }
    }
  }
  return out;
}

STensor s_from_cochain(const Chart& chart, const TwoForm& omega, const SCochain& b) {
  if (b.components.dimension() != chart.dimension()) {
    throw signature_error("cochain not on this chart");
  }
  if (auto bad = cochain_violations(chart, b); !bad.empty()) {
    const auto& idx = bad.front().indices;
    throw precondition_error("cochain is not totally graded symmetric at (" +
                             chart.name(idx[0]) + "," + chart.name(idx[1]) + "," +
                             chart.name(idx[2]) + ")");
  }
  const std::size_t n = chart.dimension();
  STensor out{Table21::zero(chart)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Superfunction> targets;
      bool any = false;
      for (std::size_t k = 0; k < n; ++k) {
        targets.push_back(b.components(i, j, k));
        any = any || !targets.back().is_zero();
      }
      if (!any) continue;
      out.components.set_pair(
          i, j, solve_against_omega(omega, targets, chart.parity(i) + chart.parity(j)));
    }
  }
  return out;
}

VerificationReport check_admissible(const Chart& chart, const TwoForm& omega, const STensor& s) {
  const std::size_t n = chart.dimension();
  VerificationReport report;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int sign = koszul(chart.parity(i), chart.parity(j));
      for (std::size_t k = 0; k < n; ++k) {
        report.add(identity::supersymmetry, {k, i, j},
                   s.components(k, i, j) - signed_copy(s.components(k, j, i), sign));
      }
    }
  }
  const Table3 lowered = lower_index(chart, omega, s.components);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const int sign = koszul(chart.parity(j), chart.parity(k));
        report.add(identity::total_symmetry, {i, j, k},
                   lowered(i, j, k) - signed_copy(lowered(i, k, j), sign));
      }
    }
  }
  return report;
}

Connection deform(const Connection& c, const STensor& s) {
  return {c.christoffel + s.components};
}

STensor difference(const Connection& a, const Connection& b) {
  return {a.christoffel - b.christoffel};
}

Connection affine_combination(const Connection& a, const Connection& b, const Rational& t) {
  return {t * a.christoffel + Rational(1 - t) * b.christoffel};
}

SCochain random_cochain(const Chart& chart, Parity parity, unsigned degree, std::uint64_t seed) {
  const std::size_t n = chart.dimension();
  Sampler sampler(seed);
  Table3 raw(n, chart.signature());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Parity p = parity + chart.parity(i) + chart.parity(j) + chart.parity(k);
        raw(i, j, k) = sampler.superfunction(chart.signature(), p, degree);
      }
    }
  }
  // Graded symmetrization (1/6) sum_sigma koszul(sigma) raw(sigma(i,j,k)).
  SCochain out{Table3(n, chart.signature()), parity};
  const Rational sixth(1, 6);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const std::array<std::size_t, 3> idx{i, j, k};
        const std::array<Parity, 3> par{chart.parity(i), chart.parity(j), chart.parity(k)};
        Superfunction sum = chart.zero();
        for (const auto& perm : permutations) {
          const auto& v = raw(idx[perm[0]], idx[perm[1]], idx[perm[2]]);
          if (v.is_zero()) continue;
          sum += signed_copy(v, permutation_sign(par, perm));
        }
        out.components(i, j, k) = sixth * sum;
      }
    }
  }
  return out;
}

}  // namespace superfed
