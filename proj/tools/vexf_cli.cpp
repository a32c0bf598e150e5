#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "vexf/audit.hpp"
#include "vexf/errors.hpp"
#include "vexf/extended_formulation.hpp"
#include "vexf/instances.hpp"
#include "vexf/io.hpp"
#include "vexf/lex_lp.hpp"
#include "vexf/maxout_net.hpp"
#include "vexf/monotone_split.hpp"
#include "vexf/polytopes.hpp"
#include "vexf/sampling.hpp"

namespace {

using vexf::io::Json;

constexpr int kExitPass = 0;
constexpr int kExitAuditFailure = 1;
constexpr int kExitUsage = 2;

/// Input errors map to exit code 2 rather than an audit failure.
struct UsageError : vexf::Error {
  using vexf::Error::Error;
};

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw vexf::Error("sha256 digest failed");
  }
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw vexf::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct Options {
  std::uint64_t seed = 0;
  std::optional<std::size_t> samples;
  std::string out;
  bool trace = false;
  bool timing = false;
};

/// Accumulates the machine-readable report of one invocation.
class Report {
 public:
  Report(std::vector<std::string> argv, const Options& options) : options_(options) {
    json_["command"] = std::move(argv);
    json_["inputs"] = Json::object();
    json_["outputs"] = Json::object();
    json_["checks"] = Json::array();
  }

  /// Reads a JSON input and records its digest.
  Json load(const std::string& path) {
    const std::string bytes = slurp(path);
    json_["inputs"][path] = "sha256:" + sha256_hex(bytes);
    return vexf::io::parse(bytes);
  }

  Json& outputs() { return json_["outputs"]; }

  void add(const std::vector<vexf::Check>& checks) {
    for (const auto& c : checks) {
      Json j;
      j["id"] = c.id;
      j["pass"] = c.pass;
      if (!c.detail.empty()) j["detail"] = c.detail;
      json_["checks"].push_back(std::move(j));
      pass_ = pass_ && c.pass;
    }
  }

  int finish(std::chrono::steady_clock::time_point start) {
    json_["status"] = pass_ ? "pass" : "fail";
    if (options_.timing) {
      json_["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
    std::cout << json_.dump(2) << "\n";
    return pass_ ? kExitPass : kExitAuditFailure;
  }

 private:
  Json json_;
  const Options& options_;
  bool pass_ = true;
};

std::vector<vexf::Vec> samples_for(vexf::Index d, const Options& options) {
  return vexf::sample_points(d, options.seed, options.samples.value_or(vexf::default_sample_count()));
}

vexf::MaxoutNetwork load_network(Report& report, const std::string& path) {
  vexf::MaxoutNetwork net = vexf::io::network_from_json(report.load(path));
  const auto diagnostics = vexf::validate(net);
  if (!diagnostics.empty()) {
    std::string msg = "invalid network:";
    for (const auto& d : diagnostics) msg += " [" + d.code + "] " + d.message + ";";
    throw UsageError(msg);
  }
  return net;
}

/// Writes `artifact` to --out when given; always mirrors it into the report.
void emit(Report& report, const Options& options, const std::string& key, const Json& artifact) {
  if (!options.out.empty()) vexf::io::write_file(options.out, artifact);
  report.outputs()[key] = artifact;
}

int cmd_eval(Report& report, const Options& options, const std::string& net_path, const std::vector<std::string>& xs) {
  const auto net = load_network(report, net_path);
  std::vector<vexf::Vec> points;
  for (const auto& s : xs) points.push_back(vexf::parse_vector(s));
  if (points.empty()) points = samples_for(net.d, options);
  Json values = Json::array();
  for (const auto& x : points) {
    if (x.size() != net.d) throw UsageError("point has length " + std::to_string(x.size()) + ", network expects " +
                                            std::to_string(net.d));
    values.push_back({{"x", vexf::io::to_json(x)}, {"value", vexf::io::to_json(vexf::evaluate(net, x))}});
  }
  report.outputs()["evaluations"] = std::move(values);
  return 0;
}

int cmd_split(Report& report, const Options& options, const std::string& net_path, const std::string& g_path,
              const std::string& h_path) {
  const auto net = load_network(report, net_path);
  const auto result = vexf::split(net, options.trace);
  report.add(vexf::audit_split(net, result, samples_for(net.d, options)));
  const Json g = vexf::io::to_json(result.g);
  const Json h = vexf::io::to_json(result.h);
  if (!g_path.empty()) vexf::io::write_file(g_path, g);
  if (!h_path.empty()) vexf::io::write_file(h_path, h);
  Json pair{{"g", g}, {"h", h}};
  if (result.trace) {
    Json steps = Json::array();
    for (const auto& step : *result.trace) steps.push_back(vexf::io::to_json(step));
    pair["trace"] = std::move(steps);
  }
  emit(report, options, "split", pair);
  return 0;
}

int cmd_epi_ef(Report& report, const Options& options, const std::string& net_path) {
  const auto net = load_network(report, net_path);
  if (!vexf::is_monotone(net)) throw UsageError("epi-ef requires a monotone network");
  const auto ef = vexf::epigraph_ef(net);
  report.add(vexf::audit_epigraph(net, ef, samples_for(net.d, options)));
  report.outputs()["size"] = ef.size();
  emit(report, options, "ef", vexf::io::to_json(ef));
  return 0;
}

int cmd_newton(Report& report, const Options& options, const std::string& net_path) {
  const auto net = load_network(report, net_path);
  if (!vexf::is_monotone(net)) throw UsageError("newton requires a monotone network");
  const auto newt = vexf::newton_polytope(net);
  report.add(vexf::audit_newton(net, newt, samples_for(net.d, options)));
  report.outputs()["num_vertices"] = newt.num_vertices();
  emit(report, options, "polytope", vexf::io::to_json(newt));
  return 0;
}

int cmd_optimize(Report& report, const Options& options, const std::string& q_path, const std::string& r_path,
                 const std::string& c_text) {
  const auto ef_q = vexf::io::ef_from_json(report.load(q_path));
  const auto ef_r = vexf::io::ef_from_json(report.load(r_path));
  const vexf::Vec c = vexf::parse_vector(c_text);
  if (c.size() != ef_r.target_dim() || ef_q.target_dim() != ef_r.target_dim()) {
    throw UsageError("objective and formulations disagree in dimension");
  }
  vexf::Check status{"optimize.lex_optimal", true, ""};
  try {
    const auto opt = vexf::virtual_optimize(ef_q, ef_r, c);
    Json result;
    result["x"] = vexf::io::to_json(opt.x);
    result["value"] = vexf::io::to_json(opt.value);
    result["x_r"] = vexf::io::to_json(opt.x_r);
    result["x_q"] = vexf::io::to_json(opt.x_q);
    emit(report, options, "optimum", result);
  } catch (const vexf::GeometryError& e) {
    status.pass = false;
    status.detail = e.what();
  }
  report.add({status});
  return 0;
}

int cmd_certify(Report& report, const Options& options, const std::string& path) {
  const auto p = vexf::io::vpolytope_from_json(report.load(path));
  const auto cert = vexf::virtual_ef_certificate(p);
  report.add(vexf::audit_certificate(p, cert, samples_for(p.dim(), options)));
  Json out;
  out["s"] = cert.s;
  out["size_ef_q"] = cert.ef_q.size();
  out["size_ef_r"] = cert.ef_r.size();
  out["total_size"] = cert.total_size();
  out["bound"] = 4 * cert.s;
  report.outputs()["certificate"] = out;
  if (!options.out.empty()) {
    Json artifact;
    artifact["q"] = vexf::io::to_json(cert.q);
    artifact["r"] = vexf::io::to_json(cert.r);
    artifact["ef_q"] = vexf::io::to_json(cert.ef_q);
    artifact["ef_r"] = vexf::io::to_json(cert.ef_r);
    artifact["network"] = vexf::io::to_json(cert.net);
    vexf::io::write_file(options.out, artifact);
  }
  return 0;
}

struct GenArgs {
  std::string family;
  std::string repr = "v";
  int n = 3;
  int k = 1;
  int d = 2;
  int m = 4;
  std::size_t units = 4;
  bool monotone = false;
};

int cmd_gen(Report& report, const Options& options, const GenArgs& a) {
  auto pick = [&](const vexf::PolytopePair& pair) -> Json {
    if (a.repr == "v") return vexf::io::to_json(pair.v);
    if (a.repr == "h") return vexf::io::to_json(pair.h);
    throw UsageError("--repr must be v or h");
  };
  Json artifact;
  if (a.family == "cube") {
    artifact = pick(vexf::cube(a.d));
  } else if (a.family == "cross") {
    artifact = pick(vexf::cross_polytope(a.d));
  } else if (a.family == "permutahedron") {
    artifact = pick(vexf::permutahedron(a.n));
  } else if (a.family == "sorting-ef") {
    artifact = vexf::io::to_json(vexf::sorting_network_ef(a.n));
  } else if (a.family == "matching") {
    artifact = vexf::io::to_json(vexf::matching_polytope(a.n));
  } else if (a.family == "hypersimplex") {
    artifact = vexf::io::to_json(vexf::hypersimplex(a.k, a.n));
  } else if (a.family == "random") {
    artifact = vexf::io::to_json(vexf::random_vpolytope(a.d, a.m, options.seed));
  } else if (a.family == "random-network") {
    artifact = vexf::io::to_json(vexf::random_network(a.d, a.units, options.seed, 3, a.monotone));
  } else {
    throw UsageError("unknown family '" + a.family + "'");
  }
  emit(report, options, "instance", artifact);
  return 0;
}

int cmd_verify(Report& report, const Options& options, const std::string& suite, std::size_t cases) {
  const auto names = vexf::suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    std::string msg = "unknown suite '" + suite + "'; known:";
    for (const auto& n : names) msg += " " + n;
    throw UsageError(msg);
  }
  vexf::SuiteOptions so;
  so.seed = options.seed;
  so.cases = cases;
  if (options.samples) so.samples = *options.samples;
  report.add(vexf::run_suite(suite, so));
  report.outputs()["suite"] = suite;
  report.outputs()["cases"] = cases;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  const auto start = std::chrono::steady_clock::now();
  CLI::App app{"Exact maxout-network splitting, extended formulations and virtual optimization"};
  app.require_subcommand(1);
  app.fallthrough();
  Options options;
  app.add_option("--seed", options.seed, "seed for every randomized step")->capture_default_str();
  app.add_option("--samples", options.samples, "random sample points per audit (default: VEXF_SAMPLE_COUNT or 100)");
  app.add_option("--out", options.out, "write the primary artifact to this file");
  app.add_flag("--trace", options.trace, "include intermediate networks of the split");
  app.add_flag("--timing", options.timing, "add elapsed time to the report (breaks byte-identical reruns)");

  std::string net_path, q_path, r_path, c_text, poly_path, suite, g_path, h_path;
  std::vector<std::string> xs;
  std::size_t cases = 100;
  GenArgs gen;

  auto* eval = app.add_subcommand("eval", "evaluate a network at points");
  eval->add_option("network", net_path)->required();
  eval->add_option("--x", xs, "comma-separated rational point; repeatable");

  auto* split = app.add_subcommand("split", "write f as g - h with g, h monotone");
  split->add_option("network", net_path)->required();
  split->add_option("--out-g", g_path, "write g here");
  split->add_option("--out-h", h_path, "write h here");

  auto* epi = app.add_subcommand("epi-ef", "extended formulation of the epigraph of a monotone network");
  epi->add_option("network", net_path)->required();

  auto* newton = app.add_subcommand("newton", "Newton polytope of a monotone network");
  newton->add_option("network", net_path)->required();

  auto* optimize = app.add_subcommand("optimize", "optimize over P given formulations of Q and R = P + Q");
  optimize->add_option("--ef-q", q_path)->required();
  optimize->add_option("--ef-r", r_path)->required();
  optimize->add_option("--c", c_text, "comma-separated objective")->required();

  auto* certify = app.add_subcommand("certify", "virtual extension certificate of a V-polytope");
  certify->add_option("polytope", poly_path)->required();

  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  gen_cmd->add_option("--family", gen.family,
                      "cube | cross | permutahedron | sorting-ef | matching | hypersimplex | random | random-network")
      ->required();
  gen_cmd->add_option("--repr", gen.repr, "v or h where both exist")->capture_default_str();
  gen_cmd->add_option("--n", gen.n)->capture_default_str();
  gen_cmd->add_option("--k", gen.k)->capture_default_str();
  gen_cmd->add_option("--d", gen.d)->capture_default_str();
  gen_cmd->add_option("--m", gen.m)->capture_default_str();
  gen_cmd->add_option("--units", gen.units)->capture_default_str();
  gen_cmd->add_flag("--monotone", gen.monotone);

  auto* verify = app.add_subcommand("verify", "run a seeded invariant suite");
  verify->add_option("suite", suite)->required();
  verify->add_option("--cases", cases)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  Report report(std::vector<std::string>(argv + 1, argv + argc), options);
  try {
    if (*eval) cmd_eval(report, options, net_path, xs);
    if (*split) cmd_split(report, options, net_path, g_path, h_path);
    if (*epi) cmd_epi_ef(report, options, net_path);
    if (*newton) cmd_newton(report, options, net_path);
    if (*optimize) cmd_optimize(report, options, q_path, r_path, c_text);
    if (*certify) cmd_certify(report, options, poly_path);
    if (*gen_cmd) cmd_gen(report, options, gen);
    if (*verify) cmd_verify(report, options, suite, cases);
  } catch (const vexf::GeometryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitAuditFailure;
  } catch (const vexf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return report.finish(start);
}
