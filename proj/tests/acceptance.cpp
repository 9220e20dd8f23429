// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "superfed/chart_spec.hpp"
#include "superfed/cli.hpp"
#include "superfed/corpus.hpp"
#include "superfed/errors.hpp"
#include "superfed/kernel_suite.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace superfed;

namespace {

constexpr std::size_t corpus_size = 50;
constexpr std::uint64_t corpus_seed = 2024;

struct Outcome {
  bool passed = true;
  std::string detail;

  void fail(const std::string& why) {
    if (passed) detail = why;
    passed = false;
  }
};

Superfunction signed_copy(const Superfunction& f, int s) { return s > 0 ? f : -f; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Pipeline {
  const CorpusInstance* instance;
  NTensor n;
  Connection corrected;
};

// 1. Existence on the randomized corpus, timed.
Outcome existence(std::vector<CorpusInstance>& corpus, std::vector<Pipeline>& out) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  corpus = make_corpus(corpus_size, corpus_seed);
  out.reserve(corpus.size());
  std::size_t verified = 0;
  bool odd_seen = false;
  for (const CorpusInstance& inst : corpus) {
    const Chart& c = inst.chart;
    NTensor n = extract_n(c, Connection::flat(c), inst.omega);
    Connection corrected = fedosov_correct(c, Connection::flat(c), n);
    const VerificationReport report = verify_symplectic(c, corrected, inst.omega);
    if (report.passed()) {
      ++verified;
    } else {
      o.fail(inst.label() + " failed " + report.first_failure()->identity);
    }
    odd_seen = odd_seen || is_odd(inst.omega.parity());
    out.push_back({&inst, std::move(n), std::move(corrected)});
  }
  const double elapsed = seconds_since(start);
  if (!odd_seen) o.fail("no odd form in the corpus");
  if (elapsed >= 60.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.passed) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%zu/%zu charts symplectic in %.1f s", verified, corpus.size(),
                  elapsed);
    o.detail = buf;
  }
  return o;
}

// 2. Antisymmetry and cyclic identity of N on every coordinate triple.
Outcome n_identities(const std::vector<Pipeline>& runs) {
  Outcome o;
  std::size_t triples = 0;
  for (const Pipeline& p : runs) {
    const Chart& c = p.instance->chart;
    const TwoForm& w = p.instance->omega;
    auto lowered = [&](std::size_t i, std::size_t j, std::size_t k) {
      return form_eval(c, w.form(), p.n.components.on_pair(i, j), VectorField::coordinate(c, k));
    };
    for (std::size_t i = 0; i < c.dimension(); ++i) {
      for (std::size_t j = 0; j < c.dimension(); ++j) {
        for (std::size_t k = 0; k < c.dimension(); ++k) {
          const Parity pi = c.parity(i), pj = c.parity(j), pk = c.parity(k);
          const Superfunction two =
              lowered(i, j, k) + signed_copy(lowered(i, k, j), koszul(pj, pk));
          const Superfunction three = lowered(i, j, k) +
                                      signed_copy(lowered(j, k, i), koszul(pi, pj + pk)) +
                                      signed_copy(lowered(k, i, j), koszul(pk, pi + pj));
          if (!two.is_zero()) o.fail(p.instance->label() + " antisymmetry");
          if (!three.is_zero()) o.fail(p.instance->label() + " cyclic identity");
          ++triples;
        }
      }
    }
    if (!check_n_antisymmetry(c, w, p.n).passed() || !check_n_cyclic(c, w, p.n).passed()) {
      o.fail(p.instance->label() + " library identity check");
    }
  }
  if (o.passed) o.detail = std::to_string(triples) + " triples, both identities exactly zero";
  return o;
}

// 3. Plane example against Cramer's rule on the 2x2 Gram systems.
Outcome hand_oracle() {
  Outcome o;
  const Chart plane = Chart::standard(2, 0);
  BilinearForm g = BilinearForm::zero(plane, Parity::even);
  g.gram(0, 1) = support::sf(plane, "1+x1");
  g.gram(1, 0) = -g.gram(0, 1);
  const TwoForm w = TwoForm::make(plane, g);
  const NTensor n = extract_n(plane, Connection::flat(plane), w);
  const Connection c = fedosov_correct(plane, Connection::flat(plane), n);

  // sum_l N^l_ij w_lk = d_i w_jk, k = 1, 2: a 2x2 system in (N^1, N^2).
  const Superfunction det = g.gram(0, 0) * g.gram(1, 1) - g.gram(1, 0) * g.gram(0, 1);
  Table21 oracle_n = Table21::zero(plane);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Superfunction b0 = partial_even(g.gram(j, 0), i);
      const Superfunction b1 = partial_even(g.gram(j, 1), i);
      // rows k: N^1 w_1k + N^2 w_2k = b_k
      oracle_n(0, i, j) = (b0 * g.gram(1, 1) - g.gram(1, 0) * b1) * invert(det);
      oracle_n(1, i, j) = (g.gram(0, 0) * b1 - b0 * g.gram(0, 1)) * invert(det);
    }
  }
  if (!(oracle_n == n.components)) o.fail("N differs from the Cramer solution");
  const Rational third(1, 3);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        if (!(c.christoffel(k, i, j) == third * (oracle_n(k, i, j) + oracle_n(k, j, i)))) {
          o.fail("Gamma differs from the oracle correction");
        }
      }
    }
  }
  const Superfunction inv = support::sf(plane, "1/(1+x1)");
  if (!(n.components(0, 0, 0) == inv) || !(n.components(1, 0, 1) == inv) ||
      !(c.christoffel(0, 0, 0) == support::sf(plane, "2/(3*(1+x1))")) ||
      !(c.christoffel(1, 0, 1) == support::sf(plane, "1/(3*(1+x1))")) ||
      !(c.christoffel(1, 1, 0) == support::sf(plane, "1/(3*(1+x1))"))) {
    o.fail("hand values not reproduced");
  }
  if (o.passed) o.detail = "N(d1,d1) = (1/(1+x1)) d1, Gamma^1_11 = 2/(3(1+x1)), Gamma^2_12 = Gamma^2_21 = 1/(3(1+x1))";
  return o;
}

// 4. q = 0 charts against the dense ungraded correction at rational points.
Outcome classical_reduction() {
  Outcome o;
  support::Gen gen(404);
  std::size_t charts = 0;
  std::size_t points = 0;
  for (std::size_t index = 0; charts < 10; ++index) {
    const CorpusConfig config{index % 2 == 0 ? 2u : 4u, 0, Parity::even};
    const CorpusInstance inst = make_corpus_instance(index, 77, config);
    const Chart& c = inst.chart;
    const std::size_t n = c.dimension();
    const Connection conn = fedosov_correct(c, Connection::flat(c), inst.omega);
    ++charts;
    for (int taken = 0; taken < 5;) {
      std::vector<Rational> point;
      for (std::size_t v = 0; v < n; ++v) point.push_back(gen.rational());
      std::vector<std::vector<Rational>> w(n, std::vector<Rational>(n));
      oracle::Table d(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n)));
      try {
        for (std::size_t j = 0; j < n; ++j) {
          for (std::size_t k = 0; k < n; ++k) {
            const Superfunction& f = inst.omega(j, k);
            auto value = [&](std::span<const Rational> x) -> Rational {
              return evaluate_even(f, x).body().evaluate(x);
            };
            w[j][k] = value(point);
            for (std::size_t i = 0; i < n; ++i) d[i][j][k] = oracle::derivative_at(value, point, i, 2);
          }
        }
      } catch (const pole_error&) {
        continue;
      }
      const auto gamma = oracle::classical_correction(w, d);
      if (!gamma) continue;
      bool pole = false;
      for (std::size_t k = 0; k < n && !pole; ++k) {
        for (std::size_t i = 0; i < n && !pole; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            Rational got;
            try {
              got = evaluate_even(conn.christoffel(k, i, j), point).body().evaluate(point);
            } catch (const pole_error&) {
              pole = true;
              break;
            }
            if (got != (*gamma)[k][i][j]) o.fail(inst.label() + " differs at a sample point");
          }
        }
      }
      if (pole) continue;
      ++taken;
      ++points;
    }
  }
  if (o.passed) o.detail = std::to_string(charts) + " charts, " + std::to_string(points) + " points";
  return o;
}

// 5. Deformations by random admissible tensors and the affine structure.
Outcome non_uniqueness(const std::vector<Pipeline>& runs) {
  Outcome o;
  std::size_t verified = 0;
  for (const Pipeline& p : runs) {
    const CorpusInstance& inst = *p.instance;
    const Chart& c = inst.chart;
    std::vector<Connection> symplectic{p.corrected};
    for (std::uint64_t s = 1; s <= 3; ++s) {
      const SCochain b = random_cochain(c, inst.omega.parity(), 1, mix_seed(s, inst.index));
      symplectic.push_back(deform(p.corrected, s_from_cochain(c, inst.omega, b)));
      if (verify_symplectic(c, symplectic.back(), inst.omega).passed()) {
        ++verified;
      } else {
        o.fail(inst.label() + " deformation not symplectic");
      }
    }
    for (std::size_t a = 0; a < symplectic.size(); ++a) {
      for (std::size_t b = a + 1; b < symplectic.size(); ++b) {
        if (!check_admissible(c, inst.omega, difference(symplectic[a], symplectic[b])).passed()) {
          o.fail(inst.label() + " difference not admissible");
        }
      }
    }
    for (const Rational& t : {Rational(1, 2), Rational(-1), Rational(2)}) {
      if (!verify_symplectic(c, affine_combination(symplectic[1], symplectic[2], t), inst.omega)
               .passed()) {
        o.fail(inst.label() + " affine combination not symplectic");
      }
    }
  }
  if (o.passed) {
    o.detail = std::to_string(verified) + " deformations, differences admissible, t in {1/2,-1,2}";
  }
  return o;
}

// 6. Failure paths report what went wrong.
Outcome failure_paths() {
  Outcome o;
  const Chart plane = Chart::standard(2, 0);
  BilinearForm g = BilinearForm::zero(plane, Parity::even);
  g.gram(0, 1) = support::sf(plane, "1+x1");
  g.gram(1, 0) = -g.gram(0, 1);
  const TwoForm w = TwoForm::make(plane, g);
  const VerificationReport flat = verify_symplectic(plane, Connection::flat(plane), w);
  const Check* first = flat.first_failure(identity::compatibility);
  if (flat.passed() || first == nullptr || first->indices != std::vector<std::size_t>{0, 0, 1} ||
      !(first->residual == plane.constant(1))) {
    o.fail("flat connection: expected residual 1 at (x1,x1,x2)");
  }

  STensor s{Table21::zero(plane)};
  s.components(0, 0, 1) = plane.constant(1);
  const Connection corrected = fedosov_correct(plane, Connection::flat(plane), w);
  const VerificationReport twisted = verify_symplectic(plane, deform(corrected, s), w);
  if (twisted.passed(identity::torsion)) o.fail("non-supersymmetric S passed the torsion check");

  const char* spec =
      "[coordinates]\nx1 = even\nx2 = even\nth1 = odd\n[omega]\nparity = even\n"
      "(x1,x2) = 1\n(th1,th1) = 1+x1\n";
  try {
    build_model(parse_chart_spec(spec));
    o.fail("non-closed form loaded");
  } catch (const invariant_violation& e) {
    if (std::string(e.what()).find("(x1,th1,th1)") == std::string::npos) {
      o.fail(std::string("rejection without the triple: ") + e.what());
    }
  }
  if (o.passed) o.detail = "flat residual 1 at (x1,x1,x2), torsion caught, non-closed form rejected at (x1,th1,th1)";
  return o;
}

// 7. Randomized kernel identities.
Outcome kernel_identities() {
  Outcome o;
  const KernelSuiteResult r = run_kernel_suite(7, 150);
  for (const KernelProperty& p : r.properties) {
    if (p.failures > 0) o.fail(p.name + ": " + p.first_failure);
  }
  if (r.cases() < 1000) o.fail("only " + std::to_string(r.cases()) + " cases");
  if (o.passed) {
    o.detail = std::to_string(r.cases()) + " cases over " + std::to_string(r.properties.size()) +
               " properties";
  }
  return o;
}

// 8. Byte-identical reports from repeated runs.
Outcome determinism() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path();
  auto report = [&](std::vector<std::string> args, const std::string& name) {
    const auto path = dir / ("superfed_acceptance_" + name + ".json");
    args.push_back("--json");
    args.push_back(path.string());
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    std::ifstream in(path, std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    std::filesystem::remove(path);
    if (code != exit_success) o.fail(name + " exited with " + std::to_string(code));
    return bytes.str();
  };
  const std::vector<std::string> selftest{"selftest", "--charts", "6", "--seed", "5",
                                          "--kernel-cases", "20"};
  const std::vector<std::string> deform_cmd{"deform", std::string(SUPERFED_SPEC_DIR) + "/super_plane.spec",
                                            "--seed", "9", "--degree", "2"};
  const std::string s1 = report(selftest, "selftest_a");
  const std::string s2 = report(selftest, "selftest_b");
  const std::string d1 = report(deform_cmd, "deform_a");
  const std::string d2 = report(deform_cmd, "deform_b");
  if (s1.empty() || s1 != s2) o.fail("selftest reports differ");
  if (d1.empty() || d1 != d2) o.fail("deform reports differ");
  if (o.passed) {
    o.detail = "selftest " + std::to_string(s1.size()) + " bytes, deform " +
               std::to_string(d1.size()) + " bytes, identical";
  }
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& run) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %d [%s] %s: %s (%.1f s)\n", id, o.passed ? "PASS" : "FAIL", title,
                o.detail.c_str(), seconds_since(start));
    std::fflush(stdout);
    if (!o.passed) ++failures;
  };

  std::vector<CorpusInstance> corpus;
  std::vector<Pipeline> runs;
  report(1, "existence pipeline", [&] { return existence(corpus, runs); });
  report(2, "N identities", [&] { return n_identities(runs); });
  report(3, "hand oracle", hand_oracle);
  report(4, "classical reduction", classical_reduction);
  report(5, "non-uniqueness", [&] { return non_uniqueness(runs); });
  report(6, "failure paths", failure_paths);
  report(7, "kernel identities", kernel_identities);
  report(8, "determinism", determinism);
  std::printf("%s: %d of 8 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
