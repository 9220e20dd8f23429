#include "superfed/kernel_suite.hpp"

#include <array>
#include <functional>

#include "superfed/corpus.hpp"
#include "superfed/geometry.hpp"
#include "superfed/sampling.hpp"

namespace superfed {

std::size_t KernelSuiteResult::cases() const noexcept {
  std::size_t n = 0;
  for (const auto& p : properties) n += p.cases;
  return n;
}

std::size_t KernelSuiteResult::failures() const noexcept {
  std::size_t n = 0;
  for (const auto& p : properties) n += p.failures;
  return n;
}

namespace {

const std::array<Chart, 3>& charts() {
  static const std::array<Chart, 3> c{Chart::standard(2, 2), Chart::standard(1, 3),
                                      Chart::standard(3, 1)};
  return c;
}

Parity random_parity(Sampler& s) { return s.chance(1, 2) ? Parity::odd : Parity::even; }

// Polynomial part, sometimes divided by a random invertible even element.
Superfunction element(Sampler& s, const Chart& chart, Parity parity) {
  Superfunction f = s.superfunction(chart.signature(), parity, 2);
  if (s.chance(1, 3)) {
    Superfunction d = s.superfunction(chart.signature(), Parity::even, 1) +
                      chart.constant(s.nonzero_rational());
    if (d.has_invertible_body()) f = f * invert(d);
  }
  return f;
}

VectorField field(Sampler& s, const Chart& chart, Parity parity) {
  VectorField x = VectorField::zero(chart);
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    x[i] = s.superfunction(chart.signature(), parity + chart.parity(i), 2);
  }
  return x;
}

int sign_of_pair(Parity a, Parity b) { return koszul(a, b); }

Superfunction signed_copy(const Superfunction& f, int sign) { return sign > 0 ? f : -f; }

struct Runner {
  Sampler sampler;
  std::size_t cases;
  KernelSuiteResult result;

  // `check` returns an empty string on success, a description otherwise.
  void run(std::string name, const std::function<std::string(Sampler&, const Chart&)>& check) {
    KernelProperty p{std::move(name), 0, 0, {}};
    for (std::size_t c = 0; c < cases; ++c) {
      const Chart& chart = charts()[c % charts().size()];
      std::string failure = check(sampler, chart);
      ++p.cases;
      if (!failure.empty()) {
        if (p.failures++ == 0) p.first_failure = "case " + std::to_string(c) + ": " + failure;
      }
    }
    result.properties.push_back(std::move(p));
  }
};

std::string differ(const Chart& chart, const Superfunction& lhs, const Superfunction& rhs) {
  if (lhs == rhs) return {};
  return chart.format(lhs) + " != " + chart.format(rhs);
}

}  // namespace

KernelSuiteResult run_kernel_suite(std::uint64_t seed, std::size_t cases_per_property) {
  Runner r{Sampler(mix_seed(seed, 0x6b65726e656cULL)), cases_per_property, {}};

  r.run("supercommutativity", [](Sampler& s, const Chart& chart) {
    const Parity pa = random_parity(s);
    const Parity pb = random_parity(s);
    const Superfunction a = element(s, chart, pa);
    const Superfunction b = element(s, chart, pb);
    return differ(chart, a * b, signed_copy(b * a, sign_of_pair(pa, pb)));
  });

  r.run("associativity", [](Sampler& s, const Chart& chart) {
    const Superfunction a = element(s, chart, random_parity(s));
    const Superfunction b = element(s, chart, random_parity(s));
    const Superfunction c = element(s, chart, random_parity(s));
    return differ(chart, (a * b) * c, a * (b * c));
  });

  r.run("distributivity", [](Sampler& s, const Chart& chart) {
    const Superfunction a = element(s, chart, random_parity(s));
    const Superfunction b = element(s, chart, random_parity(s));
    const Superfunction c = element(s, chart, random_parity(s));
    return differ(chart, a * (b + c), a * b + a * c);
  });

  r.run("inversion", [](Sampler& s, const Chart& chart) -> std::string {
    Superfunction a = element(s, chart, Parity::even) + chart.constant(s.nonzero_rational());
    if (!a.has_invertible_body()) a += chart.constant(Rational(1));
    if (!a.has_invertible_body()) return {};
    const Superfunction inv = invert(a);
    if (std::string d = differ(chart, a * inv, chart.constant(Rational(1))); !d.empty()) return d;
    return differ(chart, inv * a, chart.constant(Rational(1)));
  });

  r.run("leibniz", [](Sampler& s, const Chart& chart) {
    const std::size_t i = static_cast<std::size_t>(s.uniform(0, chart.dimension() - 1));
    const Parity pa = random_parity(s);
    const Superfunction a = element(s, chart, pa);
    const Superfunction b = element(s, chart, random_parity(s));
    const Superfunction rhs = chart.partial(i, a) * b +
                              signed_copy(a * chart.partial(i, b), koszul(chart.parity(i), pa));
    return differ(chart, chart.partial(i, a * b), rhs);
  });

  r.run("d_squared_functions", [](Sampler& s, const Chart& chart) -> std::string {
    const Parity pf = random_parity(s);
    const Superfunction f = element(s, chart, pf);
    std::vector<Superfunction> df;
    for (std::size_t j = 0; j < chart.dimension(); ++j) {
      df.push_back(signed_copy(chart.partial(j, f), koszul(pf, chart.parity(j))));
    }
    const BilinearForm ddf = d_one_form(chart, df, pf);
    for (std::size_t i = 0; i < chart.dimension(); ++i) {
      for (std::size_t j = 0; j < chart.dimension(); ++j) {
        if (!ddf.gram(i, j).is_zero()) {
          return "d(df) at (" + std::to_string(i) + "," + std::to_string(j) +
                 ") = " + chart.format(ddf.gram(i, j));
        }
      }
    }
    return {};
  });

  r.run("d_squared_one_forms", [](Sampler& s, const Chart& chart) -> std::string {
    const Parity pa = random_parity(s);
    std::vector<Superfunction> alpha;
    for (std::size_t j = 0; j < chart.dimension(); ++j) {
      alpha.push_back(element(s, chart, pa + chart.parity(j)));
    }
    const ClosednessCheck c = is_closed(chart, d_one_form(chart, alpha, pa));
    return c.closed ? std::string{} : std::string("d(d alpha) is not zero");
  });

  r.run("bracket_antisymmetry", [](Sampler& s, const Chart& chart) -> std::string {
    const Parity px = random_parity(s);
    const Parity py = random_parity(s);
    const VectorField x = field(s, chart, px);
    const VectorField y = field(s, chart, py);
    VectorField lhs = lie_bracket(chart, x, y);
    const VectorField rhs = lie_bracket(chart, y, x);
    if (koszul(px, py) > 0) {
      lhs += rhs;
    } else {
      lhs -= rhs;
    }
    for (std::size_t k = 0; k < chart.dimension(); ++k) {
      if (!lhs[k].is_zero()) return "component " + std::to_string(k) + " = " + chart.format(lhs[k]);
    }
    return {};
  });

  r.run("super_jacobi", [](Sampler& s, const Chart& chart) -> std::string {
    const Parity px = random_parity(s);
    const Parity py = random_parity(s);
    const VectorField x = field(s, chart, px);
    const VectorField y = field(s, chart, py);
    const VectorField z = field(s, chart, random_parity(s));
    VectorField lhs = lie_bracket(chart, x, lie_bracket(chart, y, z));
    lhs -= lie_bracket(chart, lie_bracket(chart, x, y), z);
    const VectorField last = lie_bracket(chart, y, lie_bracket(chart, x, z));
    if (koszul(px, py) > 0) {
      lhs -= last;
    } else {
      lhs += last;
    }
    for (std::size_t k = 0; k < chart.dimension(); ++k) {
      if (!lhs[k].is_zero()) return "component " + std::to_string(k) + " = " + chart.format(lhs[k]);
    }
    return {};
  });

  return std::move(r.result);
}

}  // namespace superfed
