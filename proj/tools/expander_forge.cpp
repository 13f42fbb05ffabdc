// expander-forge: build rotation-map digraphs and their zig-zag products,
// measure spectral expansion, evaluate the expansion bounds and regenerate the
// random-graph experiments as CSV.
//
// Exit codes: 0 success, 1 validation error, 2 IO/parse error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "xforge/error.hpp"
#include "xforge/experiment.hpp"
#include "xforge/products.hpp"
#include "xforge/randgen.hpp"
#include "xforge/rng.hpp"
#include "xforge/rot_io.hpp"
#include "xforge/spectral.hpp"

namespace {

using namespace xforge;

constexpr int kValidationExit = 1;
constexpr int kIoExit = 2;

void print7(double v) { std::printf("%.7f\n", v); }

void emit_graph(const LabelledDigraph& g, const std::string& out) {
  if (out.empty() || out == "-") {
    write_rot(std::cout, g);
  } else {
    write_rot_file(out, g);
  }
}

// Writes through `writer` to the --out file, or stdout when none was given.
template <typename Writer>
void emit_text(const std::string& out, Writer&& writer) {
  if (out.empty() || out == "-") {
    writer(std::cout);
    return;
  }
  std::ofstream file(out, std::ios::binary);
  if (!file) throw Error(ErrorKind::IoError, "cannot write " + out);
  writer(file);
  if (!file) throw Error(ErrorKind::IoError, "write failed for " + out);
}

struct ExperimentOptions {
  std::string case_name;
  std::size_t n = 0, m = 0, d = 0;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::size_t k_max = 10;
  std::string out;
};

std::vector<ExperimentParams> resolve_cases(const ExperimentOptions& o) {
  std::vector<ExperimentParams> out;
  if (!o.case_name.empty()) {
    const std::vector<std::string> names =
        o.case_name == "all" ? std::vector<std::string>{"i", "ii", "iii"}
                             : std::vector<std::string>{o.case_name};
    for (const auto& name : names) {
      auto p = case_params(name);
      if (!p) throw Error(ErrorKind::InvalidArgument, "unknown case '" + name + "' (i, ii, iii, all)");
      out.push_back(*p);
    }
  } else {
    if (o.n == 0 || o.m == 0 || o.d == 0) {
      throw Error(ErrorKind::InvalidArgument, "give --case or all of --n --m --d");
    }
    out.push_back({o.n, o.m, o.d, 0, 0});
  }
  for (auto& p : out) {
    p.trials = o.trials;
    p.master_seed = o.seed;
  }
  return out;
}

void add_experiment_flags(CLI::App* cmd, ExperimentOptions& o) {
  cmd->add_option("--case", o.case_name, "Preset: i (50/40/30), ii (30/20/10), iii (10/5/3)");
  cmd->add_option("--n", o.n, "Vertices of G");
  cmd->add_option("--m", o.m, "Degree of G (= vertices of H)");
  cmd->add_option("--d", o.d, "Degree of H");
  cmd->add_option("--trials", o.trials, "Random labellings of G")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Master seed");
  cmd->add_option("--out", o.out, "CSV output path (default stdout)");
}

int run(int argc, char** argv) {
  CLI::App app{"Zig-zag products of regular digraphs and their spectral expansion"};
  app.require_subcommand(1);

  std::size_t n = 0, m = 0, t = 1, k = 1;
  std::uint64_t seed = 0;
  std::string out, g_path, h1_path, h2_path;
  double alpha = 0, beta1 = 0, beta2 = 0;

  auto* gen = app.add_subcommand("gen", "Random M-regular digraph (configuration model) with a random two-way labelling");
  gen->add_option("--n", n, "Vertices")->required()->check(CLI::PositiveNumber);
  gen->add_option("--m", m, "Degree")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("--out", out, "Output .rot path (default stdout)");

  auto* zz = app.add_subcommand("zigzag", "Generalized zig-zag product G z (H1,H2)");
  zz->add_option("G", g_path, "G .rot file")->required();
  zz->add_option("H1", h1_path, "H1 .rot file")->required();
  zz->add_option("H2", h2_path, "H2 .rot file")->required();
  zz->add_option("--out", out, "Output .rot path (default stdout)");

  auto* rzz = app.add_subcommand("rzigzag", "Reduced zig-zag product G z' H");
  rzz->add_option("G", g_path, "G .rot file")->required();
  rzz->add_option("H", h1_path, "H .rot file")->required();
  rzz->add_option("--out", out, "Output .rot path (default stdout)");

  auto* pw = app.add_subcommand("power", "t-th power of a graph");
  pw->add_option("G", g_path, "G .rot file")->required();
  pw->add_option("--t", t, "Exponent")->required()->check(CLI::PositiveNumber);
  pw->add_option("--out", out, "Output .rot path (default stdout)");

  auto* lam = app.add_subcommand("lambda", "Spectral expansion (second singular value of the transition matrix)");
  lam->add_option("G", g_path, "Graph .rot file")->required();

  auto* bnd = app.add_subcommand("bound", "f(alpha, beta1, beta2)");
  bnd->add_option("alpha", alpha)->required();
  bnd->add_option("beta1", beta1)->required();
  bnd->add_option("beta2", beta2)->required();

  auto* bndp = app.add_subcommand("bound-prime", "f'(alpha, beta)^(k-1)");
  bndp->add_option("alpha", alpha)->required();
  bndp->add_option("beta", beta1)->required();
  bndp->add_option("--k", k, "Power of the reduced product")->check(CLI::PositiveNumber);

  auto* exp = app.add_subcommand("experiment", "Regenerate the random-graph experiments as CSV");
  exp->require_subcommand(1);
  ExperimentOptions zopt, ropt;
  auto* exp_zz = exp->add_subcommand("zigzag", "ave/max lambda(G z (H,H)) against f");
  add_experiment_flags(exp_zz, zopt);
  auto* exp_rp = exp->add_subcommand("reduced-power", "ave/max lambda((G z' H)^k) against f'^(k-1)");
  add_experiment_flags(exp_rp, ropt);
  exp_rp->add_option("--k-max", ropt.k_max, "Largest power")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kValidationExit;
  }

  const SpectralConfig cfg = SpectralConfig::from_env();

  if (gen->parsed()) {
    SeededRng rng(seed, 0);
    const EdgeMultiset edges = config_model(n, m, rng);
    emit_graph(random_labelling(edges, m, rng), out);
  } else if (zz->parsed()) {
    emit_graph(zigzag(read_rot_file(g_path), read_rot_file(h1_path), read_rot_file(h2_path)), out);
  } else if (rzz->parsed()) {
    emit_graph(reduced_zigzag(read_rot_file(g_path), read_rot_file(h1_path)), out);
  } else if (pw->parsed()) {
    emit_graph(power(read_rot_file(g_path), t), out);
  } else if (lam->parsed()) {
    const double lambda = graph_expansion(read_rot_file(g_path), cfg);
    print7(lambda);
    if (top_singular_value_repeated(lambda, cfg.inequality_slack)) {
      std::fprintf(stderr, "disconnected_or_periodic=maybe\n");
    }
  } else if (bnd->parsed()) {
    print7(bound_f(alpha, beta1, beta2));
  } else if (bndp->parsed()) {
    print7(std::pow(bound_f_prime(alpha, beta1), static_cast<double>(k - 1)));
  } else if (exp_zz->parsed()) {
    std::vector<ExperimentReport> reports;
    for (const auto& p : resolve_cases(zopt)) reports.push_back(run_zigzag_experiment(p, cfg));
    emit_text(zopt.out, [&](std::ostream& os) { write_zigzag_csv(os, reports); });
  } else if (exp_rp->parsed()) {
    const auto cases = resolve_cases(ropt);
    if (cases.size() != 1) {
      throw Error(ErrorKind::InvalidArgument, "reduced-power takes a single case");
    }
    const auto reports = run_reduced_power_experiment(cases.front(), ropt.k_max, cfg);
    emit_text(ropt.out, [&](std::ostream& os) { write_reduced_power_csv(os, reports); });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const xforge::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    const auto kind = e.kind();
    return kind == xforge::ErrorKind::IoError || kind == xforge::ErrorKind::ParseError ? kIoExit
                                                                                         : kValidationExit;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kIoExit;
  }
}
