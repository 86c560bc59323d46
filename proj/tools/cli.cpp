#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fncalc/bundle.hpp"
#include "fncalc/decompose.hpp"
#include "fncalc/error.hpp"
#include "fncalc/form_io.hpp"
#include "fncalc/spec_io.hpp"
#include "fncalc/verify.hpp"

namespace fncalc::cli {

namespace {

struct CliConfig {
  std::string spec_path;
  std::vector<std::string> forms;
  std::vector<std::string> fields;
  std::string coords;
  std::string left, right;
  std::optional<int> left_degree, right_degree;
  std::string kind = "fn";
  std::string op;
  bool horizontal = false;
  std::string suite;
  int trials = 10;
  std::uint64_t seed = 0;
  std::string dims = "3";
  int jobs = 1;
  std::string out_path;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return kParse;
    case ErrorKind::UnknownSuite: return kUnknownSuite;
    case ErrorKind::DegreeError: return kDegree;
    case ErrorKind::ChartMismatch: return kChartMismatch;
    case ErrorKind::IoError: return kIo;
    case ErrorKind::NotEquivariant:
    case ErrorKind::DerivationCheckFailed:
    case ErrorKind::ExtractionInconsistent:
    case ErrorKind::NotInDerH:
    case ErrorKind::FiberCoordinates: return kHypothesis;
    case ErrorKind::NotIdempotent:
    case ErrorKind::NonConstantTrace:
    case ErrorKind::RankOutOfRange:
    case ErrorKind::InvalidChart:
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::ArityMismatch: return kValidation;
  }
  return kValidation;
}

Connection load_connection(const std::string& path) { return parse_connection_spec(read_text_file(path)); }

std::vector<int> parse_dims(const std::string& text) {
  std::vector<int> dims;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    try {
      std::size_t used = 0;
      dims.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "bad dimension list '" + text + "'");
    }
  }
  if (dims.empty()) throw Error(ErrorKind::ParseError, "empty dimension list");
  return dims;
}

Chart parse_coords(const std::string& text) {
  std::vector<std::string> names;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) names.push_back(part);
  return Chart(std::move(names));
}

int cmd_curvature(const CliConfig& cfg, std::ostream& out) {
  const Connection conn = load_connection(cfg.spec_path);
  out << "R = " << to_string(curvature(conn)) << '\n';
  out << "Rbar = " << to_string(cocurvature(conn)) << '\n';
  const OperatorExpr Dh = cov_D(conn);
  const OperatorExpr dh = cov_d(conn);
  const OperatorExpr iR = insert_h(curvature(conn), conn);
  for (const auto& text : cfg.forms) {
    const ScalarForm omega = parse_scalar_form(conn.chart(), text);
    out << "form " << to_string(omega) << '\n';
    out << "  h* = " << to_string(h_star(conn, omega)) << '\n';
    out << "  D^h = " << to_string(apply(Dh, omega)) << '\n';
    out << "  d^h = " << to_string(apply(dh, omega)) << '\n';
    out << "  i^h(R) = " << to_string(apply(iR, omega)) << '\n';
    out << "  d^h - D^h = " << to_string(apply(dh - Dh, omega)) << '\n';
  }
  return kOk;
}

int cmd_bracket(const CliConfig& cfg, std::ostream& out) {
  std::optional<Connection> conn;
  Chart chart;
  if (!cfg.spec_path.empty()) {
    conn = load_connection(cfg.spec_path);
    chart = conn->chart();
  } else if (!cfg.coords.empty()) {
    chart = parse_coords(cfg.coords);
  } else {
    throw Error(ErrorKind::ArityMismatch, "bracket needs --coords or --connection");
  }
  const VectorForm K = parse_vector_form(chart, cfg.left, cfg.left_degree);
  const VectorForm L = parse_vector_form(chart, cfg.right, cfg.right_degree);
  VectorForm result;
  if (cfg.kind == "fn") {
    result = fn_bracket(K, L);
  } else if (cfg.kind == "deg1") {
    result = fn_bracket_deg1_oracle(K, L);
  } else if (cfg.kind == "alg") {
    result = alg_bracket(K, L);
  } else {
    if (!conn) throw Error(ErrorKind::ArityMismatch, "--kind hat needs --connection");
    result = hat_bracket(K, L, *conn);
  }
  out << to_string(result) << '\n';
  return kOk;
}

OperatorExpr named_operator(const std::string& name, const Connection& conn) {
  const OperatorExpr d = exterior_d(conn.chart());
  const OperatorExpr hs = h_star_op(conn);
  if (name == "d-hstar") return graded_commutator(d, hs);
  if (name == "D-h") return cov_D(conn);
  if (name == "d-h") return cov_d(conn);
  if (name == "d") return d;
  if (name == "hstar-theta-phi") return compose(hs, theta(conn.phi()));
  if (name == "theta-h-h") return theta_h(conn.h(), conn);
  if (name == "theta-h-phi") return theta_h(conn.phi(), conn);
  if (name == "i-h-R") return insert_h(curvature(conn), conn);
  throw Error(ErrorKind::ParseError, "unknown operator '" + name + "'");
}

int cmd_decompose(const CliConfig& cfg, std::ostream& out) {
  const Connection conn = load_connection(cfg.spec_path);
  const OperatorExpr D = named_operator(cfg.op, conn);
  const Decomposition dec = cfg.horizontal ? decompose_h(D, conn) : decompose(D, conn);
  out << "K = " << to_string(dec.K) << '\n';
  out << "L = " << to_string(dec.L) << '\n';
  return kOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  SuiteOptions options;
  options.dims = parse_dims(cfg.dims);
  options.trials = cfg.trials;
  options.seed = cfg.seed;
  options.jobs = cfg.jobs;
  const SuiteReport report = verify_suite(cfg.suite, options);
  const std::string text = render_report(report);
  if (cfg.out_path.empty()) {
    out << text;
  } else {
    write_text_file(cfg.out_path, text);
  }
  return report.passed() ? kOk : kSuiteFailed;
}

int cmd_lift(const CliConfig& cfg, std::ostream& out) {
  const ProductBundle pb = parse_bundle_spec(read_text_file(cfg.spec_path));
  const Connection conn = induced_connection(pb);
  out << "phi = " << to_string(conn.phi()) << '\n';
  out << "R = " << to_string(curvature(conn)) << '\n';
  out << "Rbar = " << to_string(cocurvature(conn)) << '\n';
  for (std::size_t a = 0; a < pb.base_dim(); ++a) {
    out << "chi(d/" << pb.base().name(a) << ") = "
        << to_string(chi_lift(pb, VectorForm::coordinate_field(pb.base(), a))) << '\n';
  }
  for (const auto& text : cfg.fields) {
    const VectorForm K = parse_vector_form(pb.base(), text);
    out << "chi_* " << to_string(K) << " = " << to_string(chi_star(pb, K)) << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Exact calculus of vector-valued forms for connections", "fncalc"};
  app.require_subcommand(1);

  auto* curv = app.add_subcommand("curvature", "Curvature, cocurvature and covariant derivatives of a connection");
  curv->add_option("spec", cfg.spec_path, "Connection spec file")->required();
  curv->add_option("--form", cfg.forms, "Scalar form to differentiate, e.g. '(1) z'");

  auto* br = app.add_subcommand("bracket", "Brackets of vector-valued forms");
  br->add_option("--coords", cfg.coords, "Comma separated coordinate names");
  br->add_option("--connection", cfg.spec_path, "Connection spec file (required for --kind hat)");
  br->add_option("--left", cfg.left, "Left vector-valued form")->required();
  br->add_option("--right", cfg.right, "Right vector-valued form")->required();
  br->add_option("--left-degree", cfg.left_degree, "Degree of the left form when it is 0");
  br->add_option("--right-degree", cfg.right_degree, "Degree of the right form when it is 0");
  br->add_option("--kind", cfg.kind, "fn | alg | deg1 | hat")
      ->check(CLI::IsMember({"fn", "alg", "deg1", "hat"}));

  auto* dec = app.add_subcommand("decompose", "Split a derivation over h* into Lie and algebraic parts");
  dec->add_option("spec", cfg.spec_path, "Connection spec file")->required();
  dec->add_option("--op", cfg.op, "d-hstar | D-h | d-h | d | hstar-theta-phi | theta-h-h | theta-h-phi | i-h-R")
      ->required();
  dec->add_flag("--horizontal", cfg.horizontal, "Use the Theta^h form for derivations commuting with h*");

  auto* ver = app.add_subcommand("verify", "Run a randomized identity suite");
  ver->add_option("suite", cfg.suite, "Suite id")->required();
  ver->add_option("--trials", cfg.trials, "Trials per group")->check(CLI::PositiveNumber);
  ver->add_option("--seed", cfg.seed, "Root seed");
  ver->add_option("--dims", cfg.dims, "Comma separated chart dimensions in 1..6");
  ver->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  ver->add_option("--out", cfg.out_path, "Write the report here instead of stdout");

  auto* lift = app.add_subcommand("lift", "Induced connection and horizontal lifts on a product bundle");
  lift->add_option("spec", cfg.spec_path, "Bundle spec file")->required();
  lift->add_option("--field", cfg.fields, "Base vector-valued form to lift");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*curv) return cmd_curvature(cfg, out);
    if (*br) return cmd_bracket(cfg, out);
    if (*dec) return cmd_decompose(cfg, out);
    if (*ver) return cmd_verify(cfg, out);
    if (*lift) return cmd_lift(cfg, out);
  } catch (const Error& e) {
    err << "error[" << error_kind_name(e.kind()) << "]: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
  err << "error[usage]: no subcommand\n";
  return kUsage;
}

}  // namespace fncalc::cli
