#include "hskein_cli/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hskein/bps.hpp"
#include "hskein/characters.hpp"
#include "hskein/error.hpp"
#include "hskein/recursion.hpp"
#include "hskein/serialize.hpp"
#include "hskein/verify.hpp"

namespace hskein::cli {

namespace {

using nlohmann::json;

struct CliConfig {
  std::string psi;
  int degree = 4;
  std::string basis = "W";
  std::string format = "text";
  std::string output;
  std::string suite = "all";
  std::string mode = "exact";
  std::uint64_t seed = 1;
  int points = 3;
  std::string json_path;
  std::string data;
  int n = 0;
};

class UsageFailure : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

BpsSpec parse_psi(const std::string& text, int degree) {
  std::vector<std::string> fields;
  std::stringstream ss(text);
  for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
  if (fields.size() != 3) throw UsageFailure("--psi expects g,l,sign such as 0,1,+");
  BpsSpec spec;
  try {
    spec.g = std::stoi(fields[0]);
    spec.l = std::stoi(fields[1]);
  } catch (const std::exception&) {
    throw UsageFailure("--psi: g and l must be integers");
  }
  if (fields[2] == "+" || fields[2] == "+1" || fields[2] == "1")
    spec.sign = 1;
  else if (fields[2] == "-" || fields[2] == "-1")
    spec.sign = -1;
  else
    throw UsageFailure("--psi: sign must be + or -");
  if (spec.g < 0 || spec.l < 0) throw UsageFailure("--psi: g and l must be non-negative");
  spec.truncation = degree;
  return spec;
}

// Writes to --output when given, else to out.
void emit(const CliConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(cfg.output);
  if (!f) throw Error(ErrorCode::IoError, "cannot write " + cfg.output);
  f << text << '\n';
}

int cmd_expand(const CliConfig& cfg, std::ostream& out) {
  const BpsSpec spec = parse_psi(cfg.psi, cfg.degree);
  const auto psi = convert_all(make_psi<Scalar>(spec), parse_basis(cfg.basis));
  emit(cfg, out, cfg.format == "json" ? to_json(psi) : to_text(psi, true));
  return Ok;
}

json report_json(const VerificationReport& r) {
  json residuals = json::array();
  for (const auto& d : r.residuals) {
    json e = {{"degree", d.degree}, {"zero", d.zero}};
    if (!d.zero) e["witness"] = d.witness;
    residuals.push_back(e);
  }
  json j = {{"name", r.name},       {"degree", r.degree},       {"mode", mode_name(r.mode)},
            {"passed", r.passed()}, {"seconds", r.seconds},     {"residuals", residuals}};
  if (!r.error.empty()) j["error"] = r.error;
  if (r.expect_first_failure) j["expected_first_failure"] = *r.expect_first_failure;
  return j;
}

std::string report_line(const VerificationReport& r) {
  std::ostringstream os;
  os << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  [degree " << r.degree << ", " << mode_name(r.mode)
     << ", " << std::fixed << std::setprecision(3) << r.seconds << "s]";
  if (!r.error.empty()) os << "  error: " << r.error;
  if (auto f = r.first_failure()) {
    os << "  first nonzero degree " << *f;
    for (const auto& d : r.residuals)
      if (!d.zero) {
        os << ": " << d.witness;
        break;
      }
  }
  return os.str();
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.mode = cfg.mode == "randomized" ? Mode::Randomized : Mode::Exact;
  opts.seed = cfg.seed;
  opts.points = cfg.points;
  std::vector<VerificationReport> reports;
  auto add = [&](std::vector<VerificationReport> rs) { reports.insert(reports.end(), rs.begin(), rs.end()); };
  const bool all = cfg.suite == "all";
  if (all || cfg.suite == "theorem1") add(verify_theorem1(cfg.degree, opts));
  if (all || cfg.suite == "recursions") add(verify_section4_recursions(cfg.degree, opts));
  if (all || cfg.suite == "solver") add(verify_solver_coherence(cfg.degree, opts));
  if (all || cfg.suite == "foundations") add(verify_foundations(cfg.degree, cfg.degree));

  bool ok = true;
  json doc = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    out << report_line(r) << '\n';
    doc.push_back(report_json(r));
  }
  out << (ok ? "all " : "some ") << reports.size() << " checks " << (ok ? "passed" : "did not pass") << '\n';
  if (!cfg.json_path.empty()) {
    std::ofstream f(cfg.json_path);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + cfg.json_path);
    f << doc.dump(2) << '\n';
  }
  return ok ? Ok : VerificationFailed;
}

std::string residual_summary(const std::vector<int>& failing, int degree) {
  if (failing.empty()) return "residual: zero through degree " + std::to_string(degree);
  std::string s = "residual: nonzero at degrees";
  for (int d : failing) s += " " + std::to_string(d);
  return s;
}

int cmd_solve(const CliConfig& cfg, std::ostream& out) {
  std::ifstream f(cfg.data);
  if (!f) throw UsageFailure("cannot read " + cfg.data);
  std::stringstream buf;
  buf << f.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "data file must hold a JSON object");
  j["truncation"] = cfg.degree;
  const std::string text = j.dump();

  TensorSeries<Scalar> phi(0, cfg.degree);
  std::vector<int> failing;
  std::string kind;
  if (json_is_relative(text)) {
    kind = "relative";
    const auto a = parse_rel_json(text);
    phi = solve_relative_via_bridge(expln_bridge_A_to_B(c_coefficients(a)));
    failing = check_relative_recursion(phi, a, RecursionSide::Right).failing_degrees();
  } else {
    kind = "absolute";
    const auto a = parse_series_json(text);
    phi = solve_absolute(a);
    const auto residual = absolute_residual(phi, a);
    for (const auto& [key, c] : residual.terms())
      if (failing.empty() || failing.back() != key.degree) failing.push_back(key.degree);
  }
  phi = convert_all(phi, parse_basis(cfg.basis));
  if (cfg.format == "json") {
    json doc = {{"kind", kind},
                {"solution", json::parse(to_json(phi))},
                {"residual_zero", failing.empty()},
                {"failing_degrees", failing}};
    emit(cfg, out, doc.dump());
  } else {
    emit(cfg, out, to_text(phi, true) + "\n" + residual_summary(failing, cfg.degree));
  }
  return failing.empty() ? Ok : VerificationFailed;
}

int cmd_chartable(const CliConfig& cfg, std::ostream& out) {
  const CharTable& t = char_table(cfg.n);
  const auto& parts = t.partitions();
  if (cfg.format == "json") {
    json labels = json::array();
    for (const Partition& p : parts) labels.push_back(p.to_string());
    json rows = json::array();
    for (std::size_t i = 0; i < parts.size(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < parts.size(); ++j) row.push_back(t.value(i, j));
      rows.push_back(row);
    }
    emit(cfg, out, json{{"n", cfg.n}, {"partitions", labels}, {"values", rows}}.dump());
    return Ok;
  }
  std::size_t label_width = 0;
  std::size_t width = 1;
  for (const Partition& p : parts) label_width = std::max(label_width, p.to_string().size());
  for (std::int64_t v : t.values()) width = std::max(width, std::to_string(v).size());
  std::ostringstream os;
  os << std::setw(static_cast<int>(label_width)) << "";
  for (std::size_t j = 0; j < parts.size(); ++j) os << "  " << std::setw(static_cast<int>(width)) << j;
  os << '\n';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    os << std::left << std::setw(static_cast<int>(label_width)) << parts[i].to_string() << std::right;
    for (std::size_t j = 0; j < parts.size(); ++j) os << "  " << std::setw(static_cast<int>(width)) << t.value(i, j);
    if (i + 1 < parts.size()) os << '\n';
  }
  emit(cfg, out, os.str());
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact computations in the HOMFLY-PT skein of the solid torus", "hskein"};
  app.require_subcommand(1);
  const std::vector<std::string> bases{"W", "P"};
  const std::vector<std::string> formats{"text", "json"};

  auto* expand = app.add_subcommand("expand", "Expand a BPS partition function Psi^{+-(g,l)}");
  expand->add_option("--psi", cfg.psi, "g,l,sign, for example 0,1,+")->required();
  expand->add_option("--degree", cfg.degree, "Truncation degree")->check(CLI::NonNegativeNumber);
  expand->add_option("--basis", cfg.basis, "W or P")->check(CLI::IsMember(bases));
  expand->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  expand->add_option("--output", cfg.output, "Write to this file instead of stdout");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", cfg.suite)
      ->check(CLI::IsMember({"theorem1", "recursions", "solver", "foundations", "all"}));
  verify->add_option("--degree", cfg.degree)->check(CLI::NonNegativeNumber);
  verify->add_option("--mode", cfg.mode)->check(CLI::IsMember({"exact", "randomized"}));
  verify->add_option("--seed", cfg.seed, "Seed for randomized mode");
  verify->add_option("--points", cfg.points, "Evaluation points per check in randomized mode")
      ->check(CLI::PositiveNumber);
  verify->add_option("--json", cfg.json_path, "Write the reports as JSON");

  auto* solve = app.add_subcommand("solve", "Solve a recursion from a JSON data file");
  solve->add_option("--data", cfg.data, "JSON relative element or operator series")->required();
  solve->add_option("--degree", cfg.degree)->check(CLI::NonNegativeNumber);
  solve->add_option("--basis", cfg.basis)->check(CLI::IsMember(bases));
  solve->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  solve->add_option("--output", cfg.output);

  auto* chartable = app.add_subcommand("chartable", "Print the character table of S_n");
  chartable->add_option("n", cfg.n)->required()->check(CLI::NonNegativeNumber);
  chartable->add_option("--format", cfg.format)->check(CLI::IsMember(formats));
  chartable->add_option("--output", cfg.output);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : UsageError;
  }

  try {
    if (*expand) return cmd_expand(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    if (*solve) return cmd_solve(cfg, out);
    return cmd_chartable(cfg, out);
  } catch (const UsageFailure& e) {
    err << "error: " << e.what() << '\n';
    return UsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::BadParams ? UsageError : VerificationFailed;
  }
}

}  // namespace hskein::cli
