#include "conefn/cli.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "conefn/bernoulli.hpp"
#include "conefn/complex_format.hpp"
#include "conefn/cone_io.hpp"
#include "conefn/errors.hpp"
#include "conefn/generalized.hpp"
#include "conefn/verify.hpp"

#ifndef CONEFN_DATA_DIR
#define CONEFN_DATA_DIR "data/cones"
#endif

namespace conefn::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Globals {
  std::optional<double> tol, tail_tol;
  std::optional<int> radius;
  std::optional<std::int64_t> max_terms;
  std::uint64_t seed = 1;
  std::string config_path;
};

EvalConfig load_config(const Globals& g) {
  EvalConfig cfg;
  std::string path = g.config_path;
  if (path.empty())
    if (const char* env = std::getenv("CONEFN_CONFIG")) path = env;
  if (!path.empty()) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open config file " + path);
    json j;
    try {
      in >> j;
      if (j.contains("tail_tol")) cfg.tail_tol = j["tail_tol"].get<double>();
      if (j.contains("comparison_tol")) cfg.comparison_tol = j["comparison_tol"].get<double>();
      if (j.contains("max_terms")) cfg.max_terms = j["max_terms"].get<std::int64_t>();
      if (j.contains("oracle_radius")) cfg.oracle_radius = j["oracle_radius"].get<int>();
      if (j.contains("max_bernoulli_order")) cfg.max_bernoulli_order = j["max_bernoulli_order"].get<int>();
    } catch (const json::exception& e) {
      throw ParseError("malformed config file " + path + ": " + e.what());
    }
  }
  if (g.tol) cfg.comparison_tol = *g.tol;
  if (g.tail_tol) cfg.tail_tol = *g.tail_tol;
  if (g.radius) cfg.oracle_radius = *g.radius;
  if (g.max_terms) cfg.max_terms = *g.max_terms;
  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return cfg;
}

json stats_json(const TruncationStats& s) {
  return {{"terms", s.terms}, {"tail_bound", s.tail_bound}, {"products", s.products}};
}

std::string sha256_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string data = ss.str();
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return hex.str();
}

// ---- eval --------------------------------------------------------------------

struct EvalArgs {
  std::string target;
  std::string cone_path;
  std::string z = "0";
  std::vector<std::string> omegas;
  std::string tau;
  std::string eta = "-1";
  std::optional<int> n;
  std::string form = "positive";
};

const std::vector<std::string> kEvalTargets = {
    "qfactorial", "G", "G0", "G1", "G2", "theta0", "S", "S1", "S2", "S3", "B", "B22C", "B33C", "BC-lifted",
    "S2C", "S2C-factorized", "S3C", "S3C-factorized", "G1C", "G1C-factorized", "G2C", "G2C-factorized",
    "G2C-alternative", "GC-lattice"};

bool needs_cone(const std::string& t) {
  return t.find('C') != std::string::npos && t != "theta0";
}

int cmd_eval(const EvalArgs& a, const EvalConfig& cfg, std::ostream& out) {
  if (std::find(kEvalTargets.begin(), kEvalTargets.end(), a.target) == kEvalTargets.end())
    throw ParseError("unknown eval target '" + a.target + "'");
  const Complex z = parse_complex(a.z);
  ComplexTuple w;
  for (const auto& s : a.omegas) w.push_back(parse_complex(s));
  if (a.target == "theta0" || a.target == "G0") {
    if (!a.tau.empty()) w = {parse_complex(a.tau)};
    if (w.size() != 1) throw ParseError(a.target + " needs exactly one period (--tau or --omega)");
  }
  std::optional<Cone> cone;
  if (needs_cone(a.target)) {
    if (a.cone_path.empty()) throw ParseError("target " + a.target + " needs --cone");
    cone = load_cone(a.cone_path);
  }
  auto need = [&](std::size_t k) {
    if (w.size() != k) throw ParseError(a.target + " needs " + std::to_string(k) + " periods, got " + std::to_string(w.size()));
  };
  TruncationStats st;
  Complex v;
  const std::string& t = a.target;
  if (t == "qfactorial") {
    v = qfactorial(z, w, cfg, &st);
  } else if (t == "G" || t == "G0" || t == "G1" || t == "G2" || t == "theta0") {
    if (t.size() == 2) need(static_cast<std::size_t>(t[1] - '0') + 1);
    v = elliptic_gamma(z, w, cfg, &st);
  } else if (t == "S" || t == "S1" || t == "S2" || t == "S3") {
    if (t.size() == 2) need(static_cast<std::size_t>(t[1] - '0'));
    if (a.form != "positive" && a.form != "negative") throw ParseError("--form must be positive or negative");
    v = multiple_sine(z, w, cfg, a.form == "positive" ? SineForm::kPositive : SineForm::kNegative, &st);
  } else if (t == "B") {
    v = bernoulli_multiple(a.n.value_or(static_cast<int>(w.size())), z, w, cfg.max_bernoulli_order);
  } else if (t == "B22C") {
    v = bernoulli_cone_22(*cone, z, w);
  } else if (t == "B33C") {
    v = bernoulli_cone_33(*cone, z, w);
  } else if (t == "BC-lifted") {
    v = bernoulli_cone_lifted(*cone, z, w, parse_complex(a.eta));
  } else if (t == "S2C") {
    v = S2C_decomposed(*cone, z, w, cfg, &st);
  } else if (t == "S2C-factorized") {
    v = S2C_factorized(*cone, z, w, cfg, &st);
  } else if (t == "S3C") {
    v = S3C_decomposed(*cone, z, w, cfg, &st);
  } else if (t == "S3C-factorized") {
    v = S3C_factorized(*cone, z, w, cfg, &st);
  } else if (t == "G1C") {
    v = G1C_direct(*cone, z, w, cfg, &st);
  } else if (t == "G1C-factorized") {
    v = G1C_factorized(*cone, z, w, cfg, &st);
  } else if (t == "G2C") {
    v = G2C_direct(*cone, z, w, cfg, &st);
  } else if (t == "G2C-factorized") {
    v = G2C_factorized(*cone, z, w, G2CVariant::kPrimary, cfg, &st);
  } else if (t == "G2C-alternative") {
    v = G2C_factorized(*cone, z, w, G2CVariant::kAlternative, cfg, &st);
  } else if (t == "GC-lattice") {
    const LatticeProduct lp = GC_lattice_product(*cone, z, w, cfg.oracle_radius);
    v = lp.value;
    st.tail_bound = lp.tail_estimate;
    st.terms = lp.points;
  }
  json om = json::array();
  for (const auto& x : w) om.push_back(to_json(x));
  out << t << " = " << format_complex(v) << "\n";
  json rec = {{"schema", kReportSchema}, {"target", t}, {"z", to_json(z)}, {"omegas", om},
              {"value", to_json(v)}, {"truncation", stats_json(st)}, {"config", to_json(cfg)}};
  if (cone) rec["cone"] = cone_to_json(*cone);
  out << rec.dump() << "\n";
  return kOk;
}

// ---- verify ------------------------------------------------------------------

void print_summary_header(std::ostream& out) {
  out << std::left << std::setw(20) << "theorem" << std::setw(20) << "cone" << std::setw(9) << "samples"
      << std::setw(14) << "max_resid" << std::setw(14) << "median_resid" << "status\n";
}

void print_summary_row(std::ostream& out, const VerificationReport& r) {
  std::ostringstream mx, md;
  mx << std::scientific << std::setprecision(2) << r.max_residual();
  md << std::scientific << std::setprecision(2) << r.median_residual();
  out << std::left << std::setw(20) << r.theorem << std::setw(20) << r.cone_label << std::setw(9) << r.samples.size()
      << std::setw(14) << mx.str() << std::setw(14) << md.str() << r.status;
  if (!r.reason.empty()) out << " (" << r.reason << ")";
  out << "\n";
}

int status_code(const std::string& status) { return status == "FAIL" ? kFail : kOk; }

int cmd_verify(const std::string& theorem, const std::string& cone_path, std::size_t samples, const std::string& out_path,
               bool as_json, const Globals& g, const EvalConfig& cfg, std::ostream& out) {
  if (!is_theorem_id(theorem)) throw ParseError("unknown theorem id '" + theorem + "'");
  const Cone c = load_cone(cone_path);
  VerifyOptions opts;
  opts.samples = samples;
  opts.seed = g.seed;
  opts.cfg = cfg;
  opts.cone_label = fs::path(cone_path).stem().string();
  const VerificationReport r = verify_theorem(theorem, c, opts);
  const std::string text = to_json(r).dump(2) + "\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write report to " + out_path);
    f << text;
  }
  if (as_json) {
    out << text;
  } else {
    print_summary_header(out);
    print_summary_row(out, r);
  }
  return status_code(r.status);
}

// ---- subdivide / check-cone --------------------------------------------------

int cmd_subdivide(const std::string& v1s, const std::string& v2s, std::ostream& out) {
  const IntVector v1 = parse_int_vector(v1s), v2 = parse_int_vector(v2s);
  const auto chain = subdivide_wedge(v1, v2);
  out << "chain:";
  for (const auto& u : chain) out << ' ' << to_string(u);
  out << "\ninterior lines: " << chain.size() - 2;
  if (chain.size() > 2) {
    out << " (";
    for (std::size_t i = 1; i + 1 < chain.size(); ++i) out << (i > 1 ? " " : "") << to_string(chain[i]);
    out << ")";
  }
  out << "\nadjacent determinants:";
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) out << ' ' << det2(chain[i], chain[i + 1]);
  out << "\n";
  return kOk;
}

int cmd_check_cone(const std::string& path, std::ostream& out) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open cone file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("malformed JSON in " + path + ": " + e.what());
  }
  // Report primitivity before the full validation so the offending normal is visible.
  if (j.is_object() && j.contains("normals") && j["normals"].is_array()) {
    for (const auto& row : j["normals"]) {
      if (!row.is_array()) break;
      IntVector v;
      for (const auto& x : row)
        if (x.is_number_integer()) v.push_back(x.get<Int>());
      const bool prim = gcd_of(v) == 1;
      out << "normal " << to_string(v) << ": " << (prim ? "primitive" : "non-primitive") << "\n";
      if (!prim) {
        out << "rejected: non-primitive normal " << to_string(v) << "\n";
        return kDomain;
      }
    }
  }
  const Cone c = cone_from_json(j);
  const bool good = is_good(c);
  out << "dim: " << c.dim() << "\n";
  out << "edge rays:";
  for (const auto& x : c.edge_rays()) out << ' ' << to_string(x);
  out << "\ngood: " << (good ? "yes" : "no") << "\n";
  const auto xi = gorenstein_vector(c);
  out << "gorenstein: " << (xi ? "yes, xi=" + to_string(*xi) : std::string("no")) << "\n";
  out << "strictly convex: " << (is_strictly_convex(c, 10) ? "yes" : "no") << "\n";
  out << "minimal: " << (is_minimal(c, 10) ? "yes" : "no") << "\n";
  if (good) {
    const auto fms = face_matrices(c);
    out << "face matrices: " << fms.size() << "\n";
    for (const auto& f : fms)
      out << "  face " << f.face << " ray " << to_string(f.ray) << " n " << to_string(f.n) << " K " << to_string(f.k) << "\n";
  }
  return kOk;
}

// ---- report ------------------------------------------------------------------

int cmd_report(const std::string& data_dir, std::size_t samples, const std::string& out_path, const Globals& g,
               const EvalConfig& cfg, std::ostream& out) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<fs::path> files;
  if (!fs::is_directory(data_dir)) throw ParseError("data directory " + data_dir + " does not exist");
  for (const auto& e : fs::directory_iterator(data_dir))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  json inputs = json::array(), items = json::array();
  bool failed = false;
  print_summary_header(out);
  for (const auto& f : files) {
    inputs.push_back({{"path", f.filename().string()}, {"sha256", sha256_file(f)}});
    const Cone c = load_cone(f);
    for (const auto& id : theorem_ids()) {
      VerifyOptions opts;
      opts.samples = samples;
      opts.seed = g.seed;
      opts.cfg = cfg;
      opts.cone_label = f.stem().string();
      const VerificationReport r = verify_theorem(id, c, opts);
      print_summary_row(out, r);
      failed = failed || r.status == "FAIL";
      json item = {{"cone", opts.cone_label}, {"theorem", id}, {"status", r.status},
                   {"samples", r.samples.size()}, {"max_residual", r.max_residual()}};
      if (!r.reason.empty()) item["reason"] = r.reason;
      items.push_back(item);
    }
  }
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  json manifest = {{"schema", kReportSchema}, {"tool", "conefn"},       {"version", kToolVersion},
                   {"config", to_json(cfg)},  {"seed", g.seed},         {"samples", samples},
                   {"inputs", inputs},        {"items", items},         {"wall_clock_seconds", wall}};
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw ParseError("cannot write manifest to " + out_path);
    f << manifest.dump(2) << "\n";
  }
  out << "overall: " << (failed ? "FAIL" : "PASS") << "\n";
  return failed ? kFail : kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cone-generalized multiple sine and elliptic gamma functions", "conefn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("conefn ") + kToolVersion);
  Globals g;
  app.add_option("--tol", g.tol, "comparison tolerance for identity residuals");
  app.add_option("--tail-tol", g.tail_tol, "truncation tolerance for q-factorial tails");
  app.add_option("--radius", g.radius, "lattice enumeration radius");
  app.add_option("--max-terms", g.max_terms, "cap on terms per infinite product");
  app.add_option("--seed", g.seed, "seed for sampled verification points");
  app.add_option("--config", g.config_path, "JSON config file (default: $CONEFN_CONFIG)");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate a function");
  eval->add_option("target", ea.target, "function id")->required();
  eval->add_option("--cone", ea.cone_path, "cone JSON file");
  eval->add_option("--z", ea.z, "argument z as re+imi");
  eval->add_option("--omega", ea.omegas, "periods as re+imi (repeatable)");
  eval->add_option("--tau", ea.tau, "modulus for theta0");
  eval->add_option("--eta", ea.eta, "extra period of the lifted cone (BC-lifted)");
  eval->add_option("--n", ea.n, "Bernoulli index (B)");
  eval->add_option("--form", ea.form, "multiple sine product form: positive|negative");

  std::string theorem, cone_path, out_path;
  std::size_t samples = 5;
  bool as_json = false;
  auto* verify = app.add_subcommand("verify", "verify a theorem on sampled points");
  verify->add_option("theorem", theorem, "theorem id")->required();
  verify->add_option("--cone", cone_path, "cone JSON file")->required();
  verify->add_option("--samples", samples, "number of sample points");
  verify->add_option("--out", out_path, "write the JSON report here");
  verify->add_flag("--json", as_json, "print the JSON report instead of the summary");

  std::string v1, v2;
  auto* subdivide = app.add_subcommand("subdivide", "unimodular subdivision of a 2-d wedge");
  subdivide->add_option("--v1", v1, "first normal, e.g. 0,1")->required();
  subdivide->add_option("--v2", v2, "second normal, e.g. -2,1 (use --v2=-2,1)")->required();

  std::string check_path;
  auto* check = app.add_subcommand("check-cone", "diagnose a cone file");
  check->add_option("cone", check_path, "cone JSON file")->required();

  std::string data_dir = CONEFN_DATA_DIR, manifest_path;
  std::size_t report_samples = 5;
  auto* report = app.add_subcommand("report", "verify every theorem over a directory of cones");
  report->add_option("--data", data_dir, "directory of cone JSON files");
  report->add_option("--samples", report_samples, "sample points per theorem");
  report->add_option("--out", manifest_path, "write the run manifest here");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << "conefn " << kToolVersion << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const EvalConfig cfg = load_config(g);
    if (*eval) return cmd_eval(ea, cfg, out);
    if (*verify) return cmd_verify(theorem, cone_path, samples, out_path, as_json, g, cfg, out);
    if (*subdivide) return cmd_subdivide(v1, v2, out);
    if (*check) return cmd_check_cone(check_path, out);
    if (*report) return cmd_report(data_dir, report_samples, manifest_path, g, cfg, out);
  } catch (const Error& e) {
    const json j = {{"error", std::string(to_string(e.kind()))}, {"message", e.what()}};
    err << j.dump() << "\n";
    return e.kind() == ErrorKind::kParse ? kUsage : kDomain;
  }
  return kUsage;
}

}  // namespace conefn::cli
