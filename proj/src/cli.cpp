#include "superfed/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>

#include "CLI11.hpp"
#include "superfed/corpus.hpp"
#include "superfed/errors.hpp"
#include "superfed/report.hpp"

namespace superfed {

namespace {

struct Outcome {
  Json report;
  bool passed = true;
};

const char* verdict(bool ok) { return ok ? "ok" : "FAILED"; }

void print_table(std::ostream& out, std::string_view title, const Json& entries) {
  out << title << (entries.empty() ? ": none\n" : ":\n");
  for (const auto& [key, value] : entries.items()) {
    out << "  " << key << " = " << value.get<std::string>() << "\n";
  }
}

void print_verification(std::ostream& out, std::string_view title, const Json& v) {
  out << title << ": " << verdict(v["passed"].get<bool>()) << " (" << v["checks"].get<std::size_t>()
      << " checks, " << v["failures"].get<std::size_t>() << " failures)\n";
  for (const auto& [name, s] : v["identities"].items()) {
    out << "  " << name << ": " << s["checks"].get<std::size_t>() << " checks, "
        << s["failures"].get<std::size_t>() << " failures\n";
  }
  if (v.contains("residuals")) {
    for (const auto& r : v["residuals"]) {
      if (r["residual"] != "0") {
        out << "  nonzero " << r["identity"].get<std::string>() << " at "
            << r["indices"].get<std::string>() << ": " << r["residual"].get<std::string>() << "\n";
      }
    }
  } else if (v.contains("first_failure")) {
    const auto& f = v["first_failure"];
    out << "  first failure " << f["identity"].get<std::string>() << " at "
        << f["indices"].get<std::string>() << ": " << f["residual"].get<std::string>() << "\n";
  }
}

void print_validation(std::ostream& out, const Json& v) {
  for (const char* name : {"parity", "antisymmetry"}) {
    out << name << ": " << verdict(v[name]["passed"].get<bool>()) << "\n";
    for (const auto& bad : v[name]["violations"]) {
      out << "  " << bad["indices"].get<std::string>() << ": " << bad["residual"].get<std::string>()
          << "\n";
    }
  }
  out << "closedness: " << verdict(v["closedness"]["passed"].get<bool>()) << "\n";
  for (const auto& [key, value] : v["closedness"]["residuals"].items()) {
    out << "  " << key << ": " << value.get<std::string>() << "\n";
  }
  const auto& nd = v["nondegeneracy"];
  out << "nondegeneracy: " << verdict(nd["passed"].get<bool>()) << " (body determinant "
      << nd["body_determinant"].get<std::string>() << ", valid where "
      << nd["locus_of_validity"].get<std::string>() << ")\n";
}

std::string describe_chart(const Chart& chart) {
  std::string s = "R^(" + std::to_string(chart.signature().even) + "|" +
                  std::to_string(chart.signature().odd) + "):";
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    s += " " + chart.name(i) + (chart.parity(i) == Parity::odd ? "(odd)" : "");
  }
  return s;
}

Outcome run_validate(const std::string& path, std::ostream& out) {
  const ChartSpec spec = read_chart_spec(path);
  const AssembledSpec a = assemble(spec);
  Outcome o{report_header("validate"), true};
  o.report["input"] = spec_echo(spec);
  FormValidation v = validate_form(a.chart, a.omega);
  o.passed = v.passed;
  out << describe_chart(a.chart) << "\nomega parity " << to_string(a.omega.parity) << "\n";
  print_validation(out, v.json);
  o.report["validation"] = std::move(v.json);
  if (a.connection_given) {
    const auto bad = connection_parity_violations(a.chart, a.connection);
    Json violations = Json::array();
    for (const auto& r : bad) {
      violations.push_back({{"indices", index_key(a.chart, std::array{r.indices[1], r.indices[2],
                                                                      r.indices[0]})},
                            {"residual", a.chart.format(r.residual)}});
    }
    o.report["connection"] = {{"passed", bad.empty()},
                              {"symmetric", is_symmetric(a.chart, a.connection)},
                              {"parity_violations", std::move(violations)}};
    o.passed = o.passed && bad.empty();
    out << "connection parity: " << verdict(bad.empty()) << "\n";
  }
  if (a.cochain) {
    const auto bad = cochain_violations(a.chart, *a.cochain);
    o.report["cochain"] = {{"passed", bad.empty()}, {"violations", bad.size()}};
    o.passed = o.passed && bad.empty();
    out << "cochain symmetry and parity: " << verdict(bad.empty()) << "\n";
  }
  o.report["passed"] = o.passed;
  out << "result: " << (o.passed ? "valid" : "invalid") << "\n";
  return o;
}

Outcome run_fedosov(const std::string& path, std::ostream& out) {
  const ChartSpec spec = read_chart_spec(path);
  const ChartModel m = build_model(spec);
  const Chart& chart = m.chart;
  Outcome o{report_header("fedosov"), true};
  o.report["input"] = spec_echo(spec);
  o.report["validation"] = validate_form(chart, m.omega.form()).json;
  o.report["base_connection"] = table21_json(chart, m.connection.christoffel);

  const NTensor n = extract_n(chart, m.connection, m.omega);
  const Connection c = fedosov_correct(chart, m.connection, n);
  const VerificationReport v = verify_symplectic(chart, c, m.omega);
  const VerificationReport e2 = check_n_antisymmetry(chart, m.omega, n);
  const VerificationReport e3 = check_n_cyclic(chart, m.omega, n);

  o.report["n_tensor"] = table21_json(chart, n.components);
  o.report["christoffel"] = table21_json(chart, c.christoffel);
  o.report["verification"] = verification_json(chart, v, true);
  o.report["n_identities"] = {{"n_antisymmetry", verification_json(chart, e2, false)},
                              {"n_cyclic", verification_json(chart, e3, false)}};
  o.passed = v.passed() && e2.passed() && e3.passed();
  o.report["passed"] = o.passed;

  out << describe_chart(chart) << "\nomega parity " << to_string(m.omega.parity()) << "\n";
  print_table(out, "N^k(d_i,d_j) keyed (i,j,k)", o.report["n_tensor"]);
  print_table(out, "corrected Christoffel symbols Gamma^k_ij keyed (i,j,k)", o.report["christoffel"]);
  print_verification(out, "symplectic verification", o.report["verification"]);
  print_verification(out, "N antisymmetry", o.report["n_identities"]["n_antisymmetry"]);
  print_verification(out, "N cyclic identity", o.report["n_identities"]["n_cyclic"]);
  out << "result: " << (o.passed ? "symplectic connection verified" : "verification failed") << "\n";
  return o;
}

Outcome run_deform(const std::string& path, std::optional<std::uint64_t> seed, unsigned degree,
                   std::ostream& out) {
  const ChartSpec spec = read_chart_spec(path);
  const ChartModel m = build_model(spec);
  const Chart& chart = m.chart;
  Outcome o{report_header("deform"), true};
  o.report["input"] = spec_echo(spec);

  const Connection base = fedosov_correct(chart, m.connection, m.omega);
  const VerificationReport base_v = verify_symplectic(chart, base, m.omega);

  SCochain b;
  Json source;
  if (m.cochain && !seed) {
    b = *m.cochain;
    source = {{"source", "spec"}};
  } else {
    const std::uint64_t s = seed.value_or(0);
    b = random_cochain(chart, m.omega.parity(), degree, s);
    source = {{"source", "random"}, {"seed", s}, {"degree", degree}};
  }
  const STensor st = s_from_cochain(chart, m.omega, b);
  const VerificationReport adm = check_admissible(chart, m.omega, st);
  const Connection deformed = deform(base, st);
  const VerificationReport dv = verify_symplectic(chart, deformed, m.omega);
  const VerificationReport diff = check_admissible(chart, m.omega, difference(deformed, base));

  source["entries"] = table3_json(chart, b.components);
  o.report["cochain"] = std::move(source);
  o.report["base_christoffel"] = table21_json(chart, base.christoffel);
  o.report["base_verification"] = verification_json(chart, base_v, false);
  o.report["s_tensor"] = table21_json(chart, st.components);
  o.report["admissibility"] = verification_json(chart, adm, false);
  o.report["christoffel"] = table21_json(chart, deformed.christoffel);
  o.report["verification"] = verification_json(chart, dv, true);
  o.report["difference_admissibility"] = verification_json(chart, diff, false);
  o.passed = base_v.passed() && adm.passed() && dv.passed() && diff.passed();

  out << describe_chart(chart) << "\nomega parity " << to_string(m.omega.parity()) << "\n";
  out << "cochain: " << o.report["cochain"]["source"].get<std::string>() << "\n";
  print_verification(out, "base verification", o.report["base_verification"]);
  print_table(out, "S^k(d_i,d_j) keyed (i,j,k)", o.report["s_tensor"]);
  print_verification(out, "admissibility of S", o.report["admissibility"]);
  print_verification(out, "deformed verification", o.report["verification"]);
  print_verification(out, "admissibility of the difference", o.report["difference_admissibility"]);

  Json affine = Json::array();
  for (const Rational& t : {Rational(1, 2), Rational(-1), Rational(2)}) {
    const VerificationReport av =
        verify_symplectic(chart, affine_combination(deformed, base, t), m.omega);
    Json e = verification_json(chart, av, false);
    affine.push_back({{"t", to_string(t)}, {"verification", std::move(e)}});
    o.passed = o.passed && av.passed();
    print_verification(out, "affine combination t = " + to_string(t), affine.back()["verification"]);
  }
  o.report["affine_combinations"] = std::move(affine);
  o.report["passed"] = o.passed;
  out << "result: " << (o.passed ? "deformation verified" : "verification failed") << "\n";
  return o;
}

Outcome run_selftest(std::size_t charts, std::uint64_t seed, std::size_t kernel_cases,
                     std::ostream& out) {
  Outcome o{report_header("selftest"), true};
  o.report["parameters"] = {{"charts", charts}, {"seed", seed}, {"kernel_cases", kernel_cases}};
  const auto configs = corpus_configurations();
  Json instances = Json::array();
  std::size_t failed_instances = 0;
  for (std::size_t i = 0; i < charts; ++i) {
    const CorpusInstance inst = make_corpus_instance(i, seed, configs[i % configs.size()]);
    const Chart& chart = inst.chart;
    const Connection flat = Connection::flat(chart);
    const NTensor n = extract_n(chart, flat, inst.omega);
    const Connection c = fedosov_correct(chart, flat, n);
    const VerificationReport v = verify_symplectic(chart, c, inst.omega);
    const VerificationReport e2 = check_n_antisymmetry(chart, inst.omega, n);
    const VerificationReport e3 = check_n_cyclic(chart, inst.omega, n);
    const SCochain b = random_cochain(chart, inst.omega.parity(), 1, mix_seed(seed, i));
    const STensor s = s_from_cochain(chart, inst.omega, b);
    const Connection deformed = deform(c, s);
    const VerificationReport dv = verify_symplectic(chart, deformed, inst.omega);
    const VerificationReport diff = check_admissible(chart, inst.omega, difference(deformed, c));
    const bool ok = v.passed() && e2.passed() && e3.passed() && dv.passed() && diff.passed();
    if (!ok) ++failed_instances;
    instances.push_back({{"index", i},
                         {"chart", inst.label()},
                         {"passed", ok},
                         {"symplectic", verification_json(chart, v, false)},
                         {"n_antisymmetry", verification_json(chart, e2, false)},
                         {"n_cyclic", verification_json(chart, e3, false)},
                         {"deformed", verification_json(chart, dv, false)},
                         {"difference_admissibility", verification_json(chart, diff, false)}});
    out << inst.label() << ": symplectic " << verdict(v.passed()) << ", N antisymmetry "
        << verdict(e2.passed()) << ", N cyclic " << verdict(e3.passed()) << ", deformation "
        << verdict(dv.passed() && diff.passed()) << "\n";
  }
  const KernelSuiteResult kernel = run_kernel_suite(seed, kernel_cases);
  for (const auto& p : kernel.properties) {
    out << "kernel " << p.name << ": " << p.cases << " cases, " << p.failures << " failures\n";
  }
  o.passed = failed_instances == 0 && kernel.passed();
  o.report["corpus"] = {{"instances", charts},
                        {"failed", failed_instances},
                        {"results", std::move(instances)}};
  o.report["kernel"] = kernel_suite_json(kernel);
  o.report["passed"] = o.passed;
  out << "result: " << charts - failed_instances << "/" << charts << " charts passed, kernel "
      << verdict(kernel.passed()) << "\n";
  return o;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symplectic connections on superdomains", "superfed"};
  app.require_subcommand(1);

  std::string json_path;
  std::string spec_path;
  std::optional<std::uint64_t> seed;
  unsigned degree = 1;
  std::size_t charts = 18;
  std::uint64_t selftest_seed = 1;
  std::size_t kernel_cases = 120;

  auto add_common = [&](CLI::App* sub, bool with_spec) {
    if (with_spec) sub->add_option("spec", spec_path, "chart specification file")->required();
    sub->add_option("--json", json_path, "write the machine-readable report to this path");
  };
  auto* validate = app.add_subcommand("validate", "check the two-form of a spec");
  add_common(validate, true);
  auto* fedosov = app.add_subcommand("fedosov", "build and verify the corrected connection");
  add_common(fedosov, true);
  auto* deform_cmd = app.add_subcommand("deform", "deform by an admissible tensor and re-verify");
  add_common(deform_cmd, true);
  deform_cmd->add_option("--seed", seed, "seed of the random cochain");
  deform_cmd->add_option("--degree", degree, "degree of the random cochain")
      ->check(CLI::Range(0u, 4u));
  auto* selftest = app.add_subcommand("selftest", "randomized corpus and kernel property suite");
  add_common(selftest, false);
  selftest->add_option("--charts", charts, "number of corpus charts");
  selftest->add_option("--seed", selftest_seed, "corpus seed");
  selftest->add_option("--kernel-cases", kernel_cases, "cases per kernel property");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_success;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  Outcome o;
  try {
    if (*validate) {
      o = run_validate(spec_path, out);
    } else if (*fedosov) {
      o = run_fedosov(spec_path, out);
    } else if (*deform_cmd) {
      o = run_deform(spec_path, seed, degree, out);
    } else {
      o = run_selftest(charts, selftest_seed, kernel_cases, out);
    }
  } catch (const parse_error& e) {
    err << "syntax error at offset " << e.position() << ": " << e.what() << "\n";
    return exit_usage;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }

  if (!json_path.empty()) {
    std::ofstream file(json_path, std::ios::binary);
    if (!file || !(file << dump(o.report))) {
      err << "error: cannot write report to '" << json_path << "'\n";
      return exit_usage;
    }
  }
  return o.passed ? exit_success : exit_verification_failed;
}

}  // namespace superfed
