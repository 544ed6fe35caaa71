// Command-line front end: classification, curve export, energy tables,
// stability reports, constants, the sarc/loop crossover, and flow runs.
// All machine-readable output is byte-stable for fixed inputs.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "elastica/classify.hpp"
#include "elastica/curve.hpp"
#include "elastica/energy.hpp"
#include "elastica/errors.hpp"
#include "elastica/flow.hpp"
#include "elastica/io.hpp"
#include "elastica/moduli.hpp"
#include "elastica/stability.hpp"

namespace {

using namespace elastica;

std::string out_dir() {
  const char* env = std::getenv("ELASTICA_OUT_DIR");
  return env != nullptr ? std::string(env) : std::string(".");
}

std::string resolve(const std::string& path) {
  if (path.empty() || path.front() == '/' || path.front() == '.') return path;
  return out_dir() + "/" + path;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(resolve(path), std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << content;
}

void emit(const std::optional<std::string>& out, const std::string& content) {
  if (out) {
    write_file(*out, content);
  } else {
    std::cout << content;
  }
}

classify::Family parse_family(const std::string& name) {
  if (name == "segment") return classify::Family::segment;
  if (name == "sarc" || name == "shorter-arc") return classify::Family::shorter_arc;
  if (name == "larc" || name == "longer-arc") return classify::Family::longer_arc;
  if (name == "loop") return classify::Family::loop;
  throw domain_error("unknown family '" + name +
                     "' (expected segment|sarc|larc|loop)");
}

curve::PlanarCurve load_curve_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw domain_error("cannot open curve file: " + path);
  curve::PlanarCurve c;
  std::string line;
  std::getline(f, line);  // header s,x,y,theta,k
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    curve::Sample s{};
    std::istringstream ss(line);
    char comma;
    if (!(ss >> s.s >> comma >> s.x >> comma >> s.y >> comma >> s.theta >>
          comma >> s.k)) {
      throw domain_error("malformed curve CSV row: " + line);
    }
    c.samples.push_back(s);
  }
  if (c.samples.size() < 3) throw domain_error("curve file has too few rows");
  c.total_length = c.samples.back().s;
  return c;
}

// --initial accepts segment | family:<name>,n=<k> | wavelike:q=<v> |
// file:<path.csv>
curve::PlanarCurve build_initial(const std::string& spec,
                                 const classify::ProblemParams& p,
                                 int samples) {
  if (spec == "segment") {
    const auto seg = classify::build_critical_point(p, classify::Family::segment, 0);
    return curve::sample_curve(seg, samples);
  }
  if (spec.rfind("family:", 0) == 0) {
    const std::string body = spec.substr(7);
    const auto comma = body.find(",n=");
    if (comma == std::string::npos) {
      throw domain_error("--initial family form is family:<name>,n=<k>");
    }
    const auto fam = parse_family(body.substr(0, comma));
    const int n = std::stoi(body.substr(comma + 3));
    return curve::sample_curve(classify::build_critical_point(p, fam, n),
                               samples);
  }
  if (spec.rfind("wavelike:q=", 0) == 0) {
    const double q = std::stod(spec.substr(11));
    return curve::wavelike_curve(q, p.ell, samples);
  }
  if (spec.rfind("file:", 0) == 0) {
    return load_curve_csv(spec.substr(5));
  }
  throw domain_error(
      "--initial must be segment, family:<name>,n=<k>, wavelike:q=<v>, or "
      "file:<path.csv>");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"penalized pinned elastica toolkit"};
  app.require_subcommand(1);

  double lambda = 0.5;
  double ell = 1.0;
  int n_max = 5;
  int samples = 512;
  std::optional<std::string> out;
  std::string format = "json";
  std::string family = "larc";
  int mode_n = 1;
  bool reflect = false;

  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--lambda", lambda, "penalization parameter > 0");
    cmd->add_option("--ell", ell, "endpoint gap > 0");
  };

  auto* c_const = app.add_subcommand("constants",
                                     "q_hat, q_star, lambda_hat with residuals");
  c_const->add_option("--out", out, "output path (default stdout)");

  auto* c_classify =
      app.add_subcommand("classify", "enumerate the critical points");
  add_params(c_classify);
  c_classify->add_option("--n-max", n_max, "largest mode to enumerate");
  c_classify->add_option("--out", out, "output path (default stdout)");

  auto* c_curve = app.add_subcommand("curve", "sample one critical point");
  add_params(c_curve);
  c_curve->add_option("--family", family, "segment|sarc|larc|loop");
  c_curve->add_option("--n", mode_n, "mode index");
  c_curve->add_option("--samples", samples, "number of arclength intervals");
  c_curve->add_flag("--reflect", reflect, "emit the lower half-plane copy");
  c_curve->add_option("--format", format, "json|csv");
  c_curve->add_option("--out", out, "output path (default stdout)");

  auto* c_energy = app.add_subcommand("energy-table",
                                      "energies and comparison checks");
  add_params(c_energy);
  c_energy->add_option("--n-max", n_max, "largest mode");
  c_energy->add_option("--format", format, "json|csv");
  c_energy->add_option("--out", out, "output path (default stdout)");

  auto* c_stab = app.add_subcommand("stability", "stability verdicts");
  add_params(c_stab);
  c_stab->add_option("--n-max", n_max, "largest mode");
  c_stab->add_option("--out", out, "output path (default stdout)");

  auto* c_cross = app.add_subcommand(
      "crossover", "lambda where E[sarc1] and E[loop1] swap order");
  c_cross->add_option("--ell", ell, "endpoint gap > 0");
  c_cross->add_option("--out", out, "output path (default stdout)");

  auto* c_flow = app.add_subcommand("flow", "run the lambda-elastic flow");
  add_params(c_flow);
  std::string initial = "wavelike:q=0.93";
  int flow_m = 400;
  double flow_dt = 0.0;
  double flow_tend = 0.0;
  double flow_dtmax = 1e-3;
  double flow_interval = 0.0;
  int init_samples = 4096;
  std::string prefix = "flow_run";
  c_flow->add_option("--initial", initial,
                     "segment | family:<name>,n=<k> | wavelike:q=<v> | "
                     "file:<path.csv>");
  c_flow->add_option("--M", flow_m, "segment count (>= 16)");
  c_flow->add_option("--dt", flow_dt, "initial step (default 1e-6 ell^4)");
  c_flow->add_option("--t-end", flow_tend, "horizon (default 10 ell^4)");
  c_flow->add_option("--dt-max", flow_dtmax, "adaptive step ceiling");
  c_flow->add_option("--sample-interval", flow_interval,
                     "trajectory sampling interval (default t_end/400)");
  c_flow->add_option("--init-samples", init_samples,
                     "resolution of the generated initial curve");
  c_flow->add_option("--n-max", n_max, "catalogue depth for convergence");
  c_flow->add_option("--out-prefix", prefix,
                     "writes <prefix>.jsonl and <prefix>.summary.json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_const->parsed()) {
      emit(out, io::constants_json());
    } else if (c_classify->parsed()) {
      const classify::ProblemParams p(lambda, ell);
      const auto entries = classify::enumerate_critical_points(p, n_max);
      emit(out, io::catalogue_json(p, n_max, entries));
    } else if (c_curve->parsed()) {
      const classify::ProblemParams p(lambda, ell);
      const auto fam = parse_family(family);
      const auto cp = classify::build_critical_point(p, fam, mode_n);
      const auto c = curve::sample_curve(cp, samples, reflect);
      if (format == "csv") {
        emit(out, io::curve_csv(c));
      } else if (format == "json") {
        emit(out, io::curve_json(cp, p, c));
      } else {
        throw domain_error("curve --format must be json or csv");
      }
    } else if (c_energy->parsed()) {
      const classify::ProblemParams p(lambda, ell);
      if (format == "csv") {
        const auto entries = classify::enumerate_critical_points(p, n_max);
        emit(out, io::energy_table_csv(p, entries));
      } else if (format == "json") {
        const auto rep = energy::compare_all(p, std::max(n_max, 2));
        emit(out, io::comparison_json(p, rep));
      } else {
        throw domain_error("energy-table --format must be json or csv");
      }
    } else if (c_stab->parsed()) {
      const classify::ProblemParams p(lambda, ell);
      const auto entries = classify::enumerate_critical_points(p, n_max);
      emit(out, io::stability_json(p, entries));
    } else if (c_cross->parsed()) {
      emit(out, io::crossover_json(ell, energy::crossover_lambda(ell)));
    } else if (c_flow->parsed()) {
      const classify::ProblemParams p(lambda, ell);
      const double ell4 = std::pow(ell, 4);
      if (flow_dt <= 0.0) flow_dt = 1e-6 * ell4;
      if (flow_tend <= 0.0) flow_tend = 10.0 * ell4;
      const auto gamma0 = build_initial(initial, p, init_samples);
      auto state = flow::init_flow(gamma0, p, flow_m, flow_dt);
      const auto catalogue = classify::enumerate_critical_points(p, n_max);

      std::ofstream traj(resolve(prefix + ".jsonl"), std::ios::binary);
      if (!traj) throw std::runtime_error("cannot open trajectory output");
      flow::RunOptions opt;
      opt.dt_max = flow_dtmax;
      opt.sample_interval = flow_interval;
      opt.observer = [&](const flow::FlowState& s,
                         const flow::FlowDiagnostics& d) {
        traj << io::trajectory_record(s, d);
      };
      const auto outcome = flow::run(state, flow_tend, catalogue, opt);
      const std::string summary = io::outcome_json(outcome);
      write_file(prefix + ".summary.json", summary);
      std::cout << summary;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
