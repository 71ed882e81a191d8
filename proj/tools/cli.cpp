#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <functional>
#include <iomanip>
#include <sstream>

#include "amazing/amazing_matrix.hpp"
#include "amazing/eulerian_algebra.hpp"
#include "amazing/group_oracle.hpp"
#include "amazing/simulation.hpp"
#include "amazing/verification.hpp"

namespace amazing::cli {

namespace {

using Json = nlohmann::ordered_json;

// Parameter errors raised after parsing (bounds the parser cannot express).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Derived>
Json matrix_json(const Eigen::MatrixBase<Derived>& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <typename Derived>
void write_csv(std::ostream& out, const Eigen::MatrixBase<Derived>& m,
               const std::vector<int>& labels, bool header) {
  if (header) {
    for (std::size_t j = 0; j < labels.size(); ++j) out << (j ? "," : "") << labels[j];
    out << '\n';
  }
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out << (j ? "," : "") << to_string(m(i, j));
    out << '\n';
  }
}

std::vector<int> state_labels(int n, bool zero_based) {
  std::vector<int> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = zero_based ? i : i + 1;
  return labels;
}

Json meta(const std::string& command, Json parameters) {
  Json m;
  m["command"] = command;
  m["parameters"] = std::move(parameters);
  m["version"] = kVersion;
  return m;
}

Json checks_json(const Report& report) {
  Json checks = Json::array();
  for (const Check& c : report.checks) {
    Json entry;
    entry["identity"] = c.identity;
    entry["parameters"] = c.parameters;
    entry["passed"] = c.passed;
    if (!c.passed) entry["detail"] = c.detail;
    checks.push_back(std::move(entry));
  }
  return checks;
}

void emit(std::ostream& out, const Json& document) { out << document.dump(2) << '\n'; }

std::string fixed(double value, int digits) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << value;
  return s.str();
}

struct Options {
  int n = 0;
  long long b = 0;
  int r = 0;
  bool normalized = false;
  bool zero_based = false;
  bool header = false;
  bool det = false;
  std::string format = "json";
  std::string basis = "s";
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  unsigned threads = 1;
  double tolerance = 0.005;
  int max_n = 0;
};

void require_csv_or_json(const Options& o) {
  if (o.format != "csv" && o.format != "json")
    throw UsageError("--format must be csv or json");
}

int cmd_amazing(const Options& o, std::ostream& out) {
  require_csv_or_json(o);
  const AmazingMatrix m = amazing_matrix(o.n, o.b);
  const std::vector<int> labels = state_labels(o.n, o.zero_based);
  if (o.format == "csv") {
    if (o.normalized)
      write_csv(out, normalized(m), labels, o.header);
    else
      write_csv(out, m.entries, labels, o.header);
    return kSuccess;
  }
  Json params;
  params["n"] = o.n;
  params["b"] = o.b;
  params["normalized"] = o.normalized;
  params["zero_based"] = o.zero_based;
  Json doc;
  doc["meta"] = meta("amazing", params);
  doc["meta"]["states"] = labels;
  doc["normalizer"] = m.normalizer.str();
  doc["matrix"] = o.normalized ? matrix_json(normalized(m)) : matrix_json(m.entries);
  emit(out, doc);
  return kSuccess;
}

int cmd_basis_matrix(const std::string& name, const BasisMatrix& basis, const Options& o,
                     std::ostream& out) {
  require_csv_or_json(o);
  if (o.format == "csv") {
    if (o.det) throw UsageError("--det is only available with --format json");
    write_csv(out, basis.entries, state_labels(basis.n, false), o.header);
    return kSuccess;
  }
  Json params;
  params["n"] = o.n;
  if (name == "foulkes") params["det"] = o.det;
  Json doc;
  doc["meta"] = meta(name, params);
  doc["from_basis"] = std::string(basis_name(basis.from));
  doc["to_basis"] = std::string(basis_name(basis.to));
  doc["matrix"] = matrix_json(basis.entries);
  if (o.det) {
    const Integer det = foulkes_determinant(o.n);
    doc["determinant"] = det.str();
    doc["superfactorial"] = superfactorial(o.n).str();
  }
  emit(out, doc);
  return kSuccess;
}

int cmd_eigen(const Options& o, std::ostream& out) {
  const Report report = verify_spectrum(o.n, o.b);
  Json params;
  params["n"] = o.n;
  params["b"] = o.b;
  Json doc;
  doc["meta"] = meta("eigen", params);
  Json eigenvalues = Json::array();
  Integer value = 1;
  for (int k = 1; k <= o.n; ++k) eigenvalues.push_back((value *= o.b).str());
  doc["eigenvalues"] = eigenvalues;
  doc["right_eigenvectors"] = matrix_json(worpitzky_matrix(o.n).entries);
  doc["left_eigenvectors"] = matrix_json(foulkes_matrix(o.n).entries);
  doc["checks"] = checks_json(report);
  doc["passed"] = report.passed();
  emit(out, doc);
  return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_idempotents(const Options& o, std::ostream& out) {
  if (o.basis != "s" && o.basis != "group") throw UsageError("--basis must be s or group");
  if (o.basis == "group" && o.n > kMaxProductDegree)
    throw UsageError("--basis group requires n <= " + std::to_string(kMaxProductDegree));
  Json params;
  params["n"] = o.n;
  params["basis"] = o.basis;
  Json doc;
  doc["meta"] = meta("idempotents", params);
  Json list = Json::array();
  for (int k = 1; k <= o.n; ++k) {
    Json terms = Json::object();
    if (o.basis == "s") {
      const SWordExpansion e = idempotent_s_expansion(o.n, k);
      for (const auto& [word, c] : e.terms()) terms[word.str()] = c.str();
    } else {
      const GroupAlgebraElement e = idempotent_group(o.n, k);
      for (const auto& [perm, c] : e.terms()) terms[perm.str()] = c.str();
    }
    Json entry;
    entry["k"] = k;
    entry["terms"] = std::move(terms);
    list.push_back(std::move(entry));
  }
  doc["idempotents"] = std::move(list);
  emit(out, doc);
  return kSuccess;
}

int cmd_descent_poly(const Options& o, std::ostream& out) {
  const DescentPolynomial poly = descent_polynomial(o.n, o.b, o.r);
  Json params;
  params["n"] = o.n;
  params["b"] = o.b;
  params["r"] = o.r;
  Json doc;
  doc["meta"] = meta("descent-poly", params);
  doc["base"] = poly.base.str();
  Json coeffs = Json::array();
  for (const Integer& c : poly.coeffs) coeffs.push_back(c.str());
  doc["coefficients"] = std::move(coeffs);
  doc["mass"] = poly.mass().str();
  emit(out, doc);
  return kSuccess;
}

int cmd_oracle_transition(const Options& o, std::ostream& out, std::ostream& err) {
  require_csv_or_json(o);
  if (o.n > kMaxProductDegree)
    throw UsageError("oracle transition requires n <= " + std::to_string(kMaxProductDegree));
  RationalMatrix oracle;
  try {
    oracle = oracle_transition_matrix(o.n, o.b);
  } catch (const OracleFailure& failure) {
    err << "oracle failure: " << failure.what() << '\n';
    return kVerificationFailed;
  }
  const bool matches = oracle == normalized(amazing_matrix(o.n, o.b));
  if (!matches) err << "oracle transition matrix differs from the amazing matrix\n";
  if (o.format == "csv") {
    write_csv(out, oracle, state_labels(o.n, o.zero_based), o.header);
  } else {
    Json params;
    params["n"] = o.n;
    params["b"] = o.b;
    Json doc;
    doc["meta"] = meta("oracle transition", params);
    doc["meta"]["states"] = state_labels(o.n, o.zero_based);
    doc["matrix"] = matrix_json(oracle);
    doc["matches_amazing"] = matches;
    emit(out, doc);
  }
  return matches ? kSuccess : kVerificationFailed;
}

int cmd_oracle_shuffles(const Options& o, std::ostream& out) {
  const ShuffleMultiset shuffles = enumerate_b_shuffles(o.n, o.b);
  const Report report = verify_shuffle_multiset(shuffles);
  Json params;
  params["n"] = o.n;
  params["b"] = o.b;
  Json doc;
  doc["meta"] = meta("oracle shuffles", params);
  Json list = Json::array();
  for (const auto& [perm, m] : shuffles.multiplicity) {
    Json entry;
    entry["permutation"] = perm.str();
    entry["multiplicity"] = m.str();
    list.push_back(std::move(entry));
  }
  doc["shuffles"] = std::move(list);
  doc["total"] = shuffles.total().str();
  doc["checks"] = checks_json(report);
  doc["passed"] = report.passed();
  emit(out, doc);
  return report.passed() ? kSuccess : kVerificationFailed;
}

int cmd_simulate(const std::string& kind, const Options& o, std::ostream& out) {
  SimulationConfig cfg{o.trials, o.seed, o.steps, o.threads};
  EmpiricalMatrix empirical;
  if (kind == "shuffle") {
    if (cfg.steps == 0) cfg.steps = 1;
    empirical = simulate_shuffle_chain(o.n, o.b, cfg);
  } else {
    if (cfg.steps == 0) cfg.steps = 4;
    empirical = simulate_carries(o.n, o.b, cfg);
  }
  const RationalMatrix exact = normalized(amazing_matrix(o.n, o.b));
  const std::vector<double> tv = row_tv_distance(empirical, exact);
  bool passed = true;
  for (double d : tv) passed = passed && d <= o.tolerance;

  Json params;
  params["n"] = o.n;
  params["b"] = o.b;
  params["trials"] = o.trials;
  params["seed"] = o.seed;
  params["steps"] = cfg.steps;
  params["tolerance"] = o.tolerance;
  Json doc;
  doc["meta"] = meta("simulate " + kind, params);
  doc["meta"]["states"] = state_labels(o.n, true);
  Json counts = Json::array();
  Json freq = Json::array();
  const Eigen::MatrixXd f = empirical.frequencies();
  for (Eigen::Index i = 0; i < empirical.counts.rows(); ++i) {
    Json crow = Json::array();
    Json frow = Json::array();
    for (Eigen::Index j = 0; j < empirical.counts.cols(); ++j) {
      crow.push_back(std::to_string(empirical.counts(i, j)));
      frow.push_back(fixed(f(i, j), 6));
    }
    counts.push_back(std::move(crow));
    freq.push_back(std::move(frow));
  }
  doc["counts"] = std::move(counts);
  doc["frequencies"] = std::move(freq);
  doc["exact"] = matrix_json(exact);
  Json tv_json = Json::array();
  for (double d : tv) tv_json.push_back(fixed(d, 6));
  doc["tv_distance"] = std::move(tv_json);
  doc["passed"] = passed;
  emit(out, doc);
  return passed ? kSuccess : kVerificationFailed;
}

int cmd_verify_all(const Options& o, std::ostream& out) {
  if (o.format != "table" && o.format != "json")
    throw UsageError("--format must be table or json");
  const Report report = verify_all(o.max_n);
  if (o.format == "json") {
    Json params;
    params["max_n"] = o.max_n;
    Json doc;
    doc["meta"] = meta("verify all", params);
    doc["checks"] = checks_json(report);
    doc["failures"] = report.failures();
    doc["passed"] = report.passed();
    emit(out, doc);
  } else {
    for (const Check& c : report.checks) {
      out << (c.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(28) << c.identity
          << ' ' << c.parameters;
      if (!c.passed) out << "  (" << c.detail << ')';
      out << '\n';
    }
    out << report.checks.size() << " checks, " << report.failures() << " failed\n";
  }
  return report.passed() ? kSuccess : kVerificationFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact amazing-matrix, Eulerian-idempotent and riffle-shuffle toolkit", "amazing"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Options o;
  const auto positive_n = CLI::Range(1, 64);
  const auto positive_b = CLI::Range(1LL, 1'000'000LL);

  auto add_nb = [&](CLI::App* sub) {
    sub->add_option("--n", o.n, "degree / number of cards")->required()->check(positive_n);
    sub->add_option("--b", o.b, "shuffle base")->required()->check(positive_b);
  };

  auto* amazing = app.add_subcommand("amazing", "amazing matrix P(b)");
  add_nb(amazing);
  amazing->add_flag("--normalized", o.normalized, "divide rows by b^n");
  amazing->add_flag("--zero-based", o.zero_based, "label states 0..n-1");
  amazing->add_flag("--header", o.header, "CSV header line");
  amazing->add_option("--format", o.format, "csv or json");

  auto* foulkes = app.add_subcommand("foulkes", "Foulkes character table");
  foulkes->add_option("--n", o.n)->required()->check(positive_n);
  foulkes->add_flag("--det", o.det, "include the determinant");
  foulkes->add_flag("--header", o.header);
  foulkes->add_option("--format", o.format, "csv or json");

  auto* worpitzky = app.add_subcommand("worpitzky", "Worpitzky matrix (E -> A)");
  worpitzky->add_option("--n", o.n)->required()->check(positive_n);
  worpitzky->add_flag("--header", o.header);
  worpitzky->add_option("--format", o.format, "csv or json");

  auto* eigen = app.add_subcommand("eigen", "exact spectral verification");
  add_nb(eigen);

  auto* idempotents = app.add_subcommand("idempotents", "Eulerian idempotents");
  idempotents->add_option("--n", o.n)->required()->check(CLI::Range(1, 12));
  idempotents->add_option("--basis", o.basis, "s or group");

  auto* descent = app.add_subcommand("descent-poly", "descent polynomial of b^r-shuffles");
  add_nb(descent);
  descent->add_option("--r", o.r)->required()->check(CLI::Range(1, 64));

  auto* oracle = app.add_subcommand("oracle", "brute-force oracles");
  oracle->require_subcommand(1);
  auto* transition = oracle->add_subcommand("transition", "enumerated transition matrix");
  add_nb(transition);
  transition->add_flag("--zero-based", o.zero_based);
  transition->add_flag("--header", o.header);
  transition->add_option("--format", o.format, "csv or json");
  auto* shuffles = oracle->add_subcommand("shuffles", "enumerated b-shuffle multiset");
  add_nb(shuffles);

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo simulation");
  simulate->require_subcommand(1);
  std::vector<CLI::App*> sims;
  for (const char* kind : {"shuffle", "carries"}) {
    auto* sim = simulate->add_subcommand(kind, std::string(kind) + " chain");
    add_nb(sim);
    sim->add_option("--trials", o.trials)->required()->check(CLI::PositiveNumber);
    sim->add_option("--seed", o.seed)->required();
    sim->add_option("--steps", o.steps, "shuffles (or digit columns) per trial");
    sim->add_option("--threads", o.threads)->check(CLI::Range(1u, 256u));
    sim->add_option("--tolerance", o.tolerance, "per-row TV distance bound");
    sims.push_back(sim);
  }

  auto* verify = app.add_subcommand("verify", "identity suites");
  verify->require_subcommand(1);
  auto* all = verify->add_subcommand("all", "run every exact identity suite");
  all->add_option("--max-n", o.max_n)->required()->check(CLI::Range(1, 20));
  std::string verify_format = "table";
  all->add_option("--format", verify_format, "table or json");

  std::vector<std::string> argv_storage{"amazing"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (amazing->parsed()) return cmd_amazing(o, out);
    if (foulkes->parsed()) return cmd_basis_matrix("foulkes", foulkes_matrix(o.n), o, out);
    if (worpitzky->parsed()) return cmd_basis_matrix("worpitzky", worpitzky_matrix(o.n), o, out);
    if (eigen->parsed()) return cmd_eigen(o, out);
    if (idempotents->parsed()) return cmd_idempotents(o, out);
    if (descent->parsed()) return cmd_descent_poly(o, out);
    if (transition->parsed()) return cmd_oracle_transition(o, out, err);
    if (shuffles->parsed()) return cmd_oracle_shuffles(o, out);
    if (sims[0]->parsed()) return cmd_simulate("shuffle", o, out);
    if (sims[1]->parsed()) return cmd_simulate("carries", o, out);
    if (all->parsed()) {
      o.format = verify_format;
      return cmd_verify_all(o, out);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  err << "usage error: no command\n";
  return kUsageError;
}

}  // namespace amazing::cli
