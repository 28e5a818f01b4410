#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kzres/serialize.hpp"

namespace kzres::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string lambda;
  int m = 0;
  int n = 0;
  int all_partitions = 0;
  bool all = false;
  bool pairing = false;
  std::string format = "text";
  std::string output;
  std::optional<int> workers;
  std::int64_t budget = kDefaultResidueBudget;
};

SolveOptions solve_options(const Config& c) {
  SolveOptions o;
  o.budget = c.budget;
  if (c.workers) {
    o.workers = *c.workers;
  } else if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      o.workers = std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError(std::string(kWorkersEnv) + " must be a positive integer");
    }
  }
  if (o.workers < 1) throw UsageError("worker count must be positive");
  return o;
}

Partition require_lambda(const Config& c) {
  if (c.lambda.empty()) throw UsageError("--lambda is required");
  Partition p = parse_partition(c.lambda);
  if (p.size() > kMaxVars) throw UsageError("N = " + std::to_string(p.size()) + " exceeds the maximum of 8");
  return p;
}

int require_positive_m(const Config& c, const std::string& hint) {
  if (c.m == 0) throw UsageError("--m must be a non-zero integer");
  if (c.m < 0) throw UsageError("--m must be positive here" + hint);
  return c.m;
}

std::string lambda_string(const std::vector<int>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

std::string poly_text(const SparsePolynomial& p) { return to_difference_string(p); }

std::string fraction_text(const SparsePolynomial& num, const SparsePolynomial& den) {
  return "(" + poly_text(num) + ") / (" + poly_text(den) + ")";
}

void write_report_text(std::ostream& os, const CheckReport& r) {
  os << (r.pass ? "PASS " : "FAIL ") << r.check << " lambda=(" << lambda_string(r.lambda) << ") m=" << r.m;
  if (!r.detail.empty()) os << " [" << r.detail << "]";
  os << "\n";
  if (!r.pass) {
    os << "  witness: " << r.witness << "\n";
    if (r.residual) os << "  residual: " << r.residual->to_string() << "\n";
  }
}

void write_matrix_text(std::ostream& os, const FundamentalMatrix& f) {
  const auto stats = diagram_stats(f.shape, f.m);
  os << "lambda " << f.shape.to_string() << "  m " << f.m << "  degree " << stats.solution_degree << "\n";
  os << "standard tableaux:";
  for (std::size_t t = 0; t < f.tableaux.size(); ++t) os << " T" << t + 1 << "=" << f.tableaux[t].to_string();
  os << "\nmatrix (row: cycle of T, column: coordinate along v_T'):\n";
  for (std::size_t r = 0; r < f.matrix.rows(); ++r)
    for (std::size_t c = 0; c < f.matrix.cols(); ++c)
      os << "  [" << r + 1 << "," << c + 1 << "] " << poly_text(f.matrix.at(r, c)) << "\n";
  os << "tabloid components:\n";
  for (const auto& s : f.solutions) {
    os << "  cycle " << s.cycle.to_string() << "\n";
    for (const auto& [u, p] : s.components) os << "    " << u.to_string() << ": " << poly_text(p) << "\n";
  }
}

struct Result {
  std::string body;
  int code = kPass;
};

Result cmd_solve(const Config& c) {
  const Partition p = require_lambda(c);
  const int m = require_positive_m(c, "; use `dual` for the negative parameter");
  const auto f = fundamental_solution(p, m, solve_options(c));
  std::ostringstream os;
  if (c.format == "json") {
    os << to_json(f).dump(2) << "\n";
  } else {
    write_matrix_text(os, f);
  }
  return {os.str(), kPass};
}

Result reports_result(const Config& c, const std::vector<CheckReport>& reports, const json& extra = nullptr) {
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  std::ostringstream os;
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    json doc = {{"verdict", pass ? "pass" : "fail"}, {"reports", arr}};
    if (!extra.is_null()) doc["result"] = extra;
    os << doc.dump(2) << "\n";
  } else {
    for (const auto& r : reports)
      if (c.all || !r.pass) write_report_text(os, r);
    const auto failed = std::count_if(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
    os << (pass ? "all " : "") << reports.size() - static_cast<std::size_t>(failed) << " of " << reports.size()
       << " checks passed\n";
  }
  return {os.str(), pass ? kPass : kCheckFailed};
}

Result cmd_verify(const Config& c) {
  const int m = require_positive_m(c, "");
  const SolveOptions opts = solve_options(c);
  std::vector<Partition> shapes;
  if (c.all_partitions > 0) {
    if (!c.lambda.empty()) throw UsageError("--lambda and --all-partitions are exclusive");
    if (c.all_partitions > kMaxVars) throw UsageError("--all-partitions exceeds the maximum N of 8");
    shapes = enumerate_partitions(c.all_partitions);
  } else {
    shapes.push_back(require_lambda(c));
  }
  for (const auto& p : shapes) check_resource_guard(p, opts);
  std::vector<CheckReport> reports;
  for (const auto& p : shapes) {
    auto part = verify_suite(p, m, opts);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  return reports_result(c, reports);
}

Result cmd_stats(const Config& c) {
  const Partition p = require_lambda(c);
  const int m = c.m == 0 ? 1 : require_positive_m(c, "");
  const auto s = diagram_stats(p, m);
  std::ostringstream os;
  if (c.format == "json") {
    os << to_json(s, p, m).dump(2) << "\n";
  } else {
    os << "lambda " << p.to_string() << "\n"
       << "f2 " << s.f2 << "\n"
       << "specht_dim " << s.specht_dim << "\n"
       << "d_plus " << s.d_plus << "\n"
       << "transpose " << s.transpose.to_string() << "\n"
       << "m_profile";
    for (int x : s.levels.sizes) os << " " << x;
    os << "\nconfig_dim " << s.levels.config_dim << "\n"
       << "solution_degree(m=" << m << ") " << s.solution_degree << "\n";
  }
  return {os.str(), kPass};
}

Result cmd_det(const Config& c) {
  const Partition p = require_lambda(c);
  const int m = require_positive_m(c, "");
  const auto f = fundamental_solution(p, m, solve_options(c));
  const SparsePolynomial det = determinant(f.matrix);
  const CheckReport r = check_det(f);
  json extra = {{"det", to_json(det)}};
  if (c.format == "json") return reports_result(c, {r}, extra);
  std::ostringstream os;
  os << "det " << poly_text(det) << "\n";
  write_report_text(os, r);
  return {os.str(), r.pass ? kPass : kCheckFailed};
}

Result cmd_dual(const Config& c) {
  const Partition p = require_lambda(c);
  if (c.m == 0) throw UsageError("--m must be a non-zero integer");
  const int k = std::abs(c.m);
  const auto f = fundamental_solution(p, k, solve_options(c));
  const DualMatrix d = dual_matrix(f);
  const CheckReport r = check_dual(f);
  if (c.format == "json") {
    json rows = json::array();
    for (std::size_t a = 0; a < d.numerators.rows(); ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < d.numerators.cols(); ++b) row.push_back(to_json(d.numerators.at(a, b)));
      rows.push_back(std::move(row));
    }
    json extra = {{"lambda", p.parts()}, {"parameter", -k}, {"numerators", rows}, {"denominator", to_json(d.det)}};
    return reports_result(c, {r}, extra);
  }
  std::ostringstream os;
  os << "lambda " << p.to_string() << "  parameter " << -k << "\n";
  os << "denominator " << poly_text(d.det) << "\n";
  for (std::size_t a = 0; a < d.numerators.rows(); ++a)
    for (std::size_t b = 0; b < d.numerators.cols(); ++b)
      os << "  [" << a + 1 << "," << b + 1 << "] " << poly_text(d.numerators.at(a, b)) << "\n";
  write_report_text(os, r);
  return {os.str(), r.pass ? kPass : kCheckFailed};
}

Result cmd_reflection(const Config& c) {
  if (c.n < 2 || c.n > kMaxVars) throw UsageError("--n must lie in 2..8");
  const int m = require_positive_m(c, "");
  const auto psi = reflection_psi(c.n, m);
  const auto phi = reflection_phi(c.n, m);
  std::vector<CheckReport> reports{check_reflection(c.n, m)};
  if (c.pairing) reports.push_back(check_pairing(c.n, m));
  if (c.format == "json") {
    json jp = json::array();
    for (const auto& s : psi) {
      json comps = json::array();
      for (const auto& x : s.components) comps.push_back(to_json(x));
      jp.push_back({{"index", s.index}, {"components", comps}});
    }
    json jf = json::array();
    for (const auto& s : phi) {
      json comps = json::array();
      for (const auto& x : s.components) comps.push_back(to_json(x));
      jf.push_back({{"index", s.index}, {"components", comps}});
    }
    return reports_result(c, reports, {{"n", c.n}, {"m", m}, {"psi", jp}, {"phi", jf}});
  }
  std::ostringstream os;
  for (const auto& s : psi) {
    os << "psi_" << s.index << ":\n";
    for (std::size_t b = 0; b < s.components.size(); ++b)
      os << "  eps_" << b + 1 << ": " << poly_text(s.components[b]) << "\n";
  }
  for (const auto& s : phi) {
    os << "phi_" << s.index << ":\n";
    for (std::size_t b = 0; b < s.components.size(); ++b)
      os << "  eps_" << b + 1 << ": "
         << fraction_text(s.components[b].numerator(), s.components[b].denominator()) << "\n";
  }
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  for (const auto& r : reports) write_report_text(os, r);
  return {os.str(), pass ? kPass : kCheckFailed};
}

Result cmd_twist(const Config& c) {
  const Partition p = require_lambda(c);
  const int m = require_positive_m(c, "");
  const auto f = fundamental_solution(p, m, solve_options(c));
  std::vector<CheckReport> reports;
  std::ostringstream os;
  json tables = json::array();
  for (const auto& s : f.solutions) {
    const RationalTable t = alt_twist(s);
    CheckReport r = check_kz(t);
    r.check = "kz-twisted " + s.cycle.to_string();
    reports.push_back(r);
    json comps = json::object();
    if (c.format == "json") {
      for (const auto& [u, num] : t.numerators) comps[u.to_string()] = to_json(num);
      tables.push_back({{"cycle", to_json(s.cycle)},
                        {"parameter", t.parameter},
                        {"denominator", to_json(t.denominator)},
                        {"numerators", comps}});
    } else {
      os << "cycle " << s.cycle.to_string() << "  parameter " << t.parameter << "  denominator "
         << poly_text(t.denominator) << "\n";
      for (const auto& [u, num] : t.numerators) os << "  " << u.to_string() << ": " << poly_text(num) << "\n";
    }
  }
  if (c.format == "json") return reports_result(c, reports, tables);
  const bool pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  for (const auto& r : reports) write_report_text(os, r);
  return {os.str(), pass ? kPass : kCheckFailed};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact integral solutions of the KZ equation in Specht modules"};
  app.require_subcommand(1);
  Config c;
  int workers = 0;

  auto common = [&](CLI::App* sub, bool needs_lambda) {
    if (needs_lambda) sub->add_option("--lambda", c.lambda, "partition, e.g. 2,1");
    sub->add_option("--m", c.m, "integer parameter");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", c.output, "write the result to a file");
    sub->add_option("--workers", workers, "worker threads (default from " + std::string(kWorkersEnv) + ", else 1)");
    sub->add_option("--budget", c.budget, "residue budget d_lambda * |G_lambda|")->check(CLI::PositiveNumber);
  };
  auto* solve = app.add_subcommand("solve", "fundamental matrix and tabloid table");
  common(solve, true);
  auto* verify = app.add_subcommand("verify", "run every applicable check");
  common(verify, true);
  verify->add_flag("--all", c.all, "list passing checks too");
  verify->add_option("--all-partitions", c.all_partitions, "sweep every partition of N");
  auto* stats = app.add_subcommand("stats", "diagram statistics");
  common(stats, true);
  auto* det = app.add_subcommand("det", "determinant of the fundamental matrix");
  common(det, true);
  auto* dual = app.add_subcommand("dual", "transposed inverse fundamental matrix");
  common(dual, true);
  auto* reflection = app.add_subcommand("reflection", "reflection-representation families");
  common(reflection, false);
  reflection->add_option("--n", c.n, "number of points");
  reflection->add_flag("--pairing", c.pairing, "also check the pairing");
  auto* twist = app.add_subcommand("twist", "alternating twist of each solution");
  common(twist, true);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->count("--workers") > 0) c.workers = workers;
  }

  Result result;
  try {
    const auto* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "solve") result = cmd_solve(c);
    else if (name == "verify") result = cmd_verify(c);
    else if (name == "stats") result = cmd_stats(c);
    else if (name == "det") result = cmd_det(c);
    else if (name == "dual") result = cmd_dual(c);
    else if (name == "reflection") result = cmd_reflection(c);
    else result = cmd_twist(c);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceGuardError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  if (c.output.empty()) {
    out << result.body;
  } else {
    std::ofstream file(c.output);
    if (!file) {
      err << "error: cannot open " << c.output << "\n";
      return kUsage;
    }
    file << result.body;
  }
  return result.code;
}

}  // namespace kzres::cli
