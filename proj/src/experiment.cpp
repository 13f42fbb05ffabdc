#include "xforge/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <numeric>
#include <ostream>

#include "xforge/error.hpp"
#include "xforge/linear_operator.hpp"
#include "xforge/products.hpp"
#include "xforge/randgen.hpp"
#include "xforge/rng.hpp"

namespace xforge {

namespace {

std::string fixed7(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.7f", v);
  return buf;
}

void check_params(const ExperimentParams& p) {
  if (p.n == 0 || p.m == 0 || p.d == 0 || p.trials == 0) {
    throw Error(ErrorKind::InvalidArgument, "n, m, d and trials must be positive");
  }
}

// Runs body(t) for every trial, concurrently, rethrowing the first failure.
template <typename Body>
void for_each_trial(std::size_t trials, Body&& body) {
  std::exception_ptr failure;
  const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t t = 0; t < count; ++t) {
    try {
      body(static_cast<std::size_t>(t));
    } catch (...) {
#pragma omp critical(xforge_trial_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

std::optional<ExperimentParams> case_params(std::string_view name) {
  if (name == "i") return ExperimentParams{50, 40, 30, 100, 0};
  if (name == "ii") return ExperimentParams{30, 20, 10, 100, 0};
  if (name == "iii") return ExperimentParams{10, 5, 3, 100, 0};
  return std::nullopt;
}

ExperimentGraphs make_experiment_graphs(const ExperimentParams& p, const SpectralConfig& cfg) {
  check_params(p);
  SeededRng g_rng(p.master_seed, kGraphStream);
  SeededRng h_rng(p.master_seed, kComponentStream);
  EdgeMultiset g_edges = config_model(p.n, p.m, g_rng);
  LabelledDigraph h = ordered_labelling(config_model(p.m, p.d, h_rng), p.d);
  const double lambda_g = graph_expansion(ordered_labelling(g_edges, p.m), cfg);
  const double lambda_h = graph_expansion(h, cfg);
  return {std::move(g_edges), std::move(h), lambda_g, lambda_h};
}

LabelledDigraph trial_labelling(const ExperimentGraphs& graphs, const ExperimentParams& p,
                                std::size_t trial) {
  SeededRng rng(p.master_seed, trial);
  return random_labelling(graphs.g_edges, p.m, rng);
}

double zigzag_expansion(const LabelledDigraph& g, const LabelledDigraph& h,
                        const SpectralConfig& cfg) {
  if (g.n_ports() <= cfg.dense_cutoff) {
    return dense_spectral_expansion(transition_matrix(zigzag(g, h, h)));
  }
  return power_iteration_expansion(zigzag_operator(g, h, h), cfg.power_tol, cfg.max_iters,
                                   cfg.start_seed)
      .lambda;
}

std::vector<double> reduced_power_expansions(const LabelledDigraph& g, const LabelledDigraph& h,
                                             std::size_t k_max, const SpectralConfig& cfg) {
  if (g.n_ports() <= cfg.dense_cutoff) {
    return power_expansions(transition_matrix(reduced_zigzag(g, h)), k_max, cfg);
  }
  return power_expansions(reduced_zigzag_operator(g, h), k_max, cfg);
}

void summarize(ExperimentReport& r) {
  if (r.per_trial.empty()) return;
  r.ave_lambda = std::accumulate(r.per_trial.begin(), r.per_trial.end(), 0.0) /
                 static_cast<double>(r.per_trial.size());
  r.max_lambda = *std::max_element(r.per_trial.begin(), r.per_trial.end());
}

ExperimentReport run_zigzag_experiment(const ExperimentParams& p, const SpectralConfig& cfg) {
  const ExperimentGraphs graphs = make_experiment_graphs(p, cfg);
  ExperimentReport report;
  report.params = p;
  report.lambda_g = graphs.lambda_g;
  report.lambda_h = graphs.lambda_h;
  report.per_trial.assign(p.trials, 0.0);
  for_each_trial(p.trials, [&](std::size_t t) {
    report.per_trial[t] = zigzag_expansion(trial_labelling(graphs, p, t), graphs.h, cfg);
  });
  summarize(report);
  report.bound = bound_f(std::min(graphs.lambda_g, 1.0), std::min(graphs.lambda_h, 1.0),
                         std::min(graphs.lambda_h, 1.0));
  return report;
}

std::vector<ExperimentReport> run_reduced_power_experiment(const ExperimentParams& p,
                                                           std::size_t k_max,
                                                           const SpectralConfig& cfg) {
  if (k_max == 0) throw Error(ErrorKind::InvalidArgument, "k_max must be >= 1");
  const ExperimentGraphs graphs = make_experiment_graphs(p, cfg);
  std::vector<std::vector<double>> by_trial(p.trials);
  for_each_trial(p.trials, [&](std::size_t t) {
    by_trial[t] = reduced_power_expansions(trial_labelling(graphs, p, t), graphs.h, k_max, cfg);
  });

  const double fp = bound_f_prime(std::min(graphs.lambda_g, 1.0), std::min(graphs.lambda_h, 1.0));
  std::vector<ExperimentReport> reports(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    ExperimentReport& r = reports[k - 1];
    r.params = p;
    r.lambda_g = graphs.lambda_g;
    r.lambda_h = graphs.lambda_h;
    r.k = k;
    r.per_trial.reserve(p.trials);
    for (const auto& row : by_trial) r.per_trial.push_back(row[k - 1]);
    summarize(r);
    r.bound = std::pow(fp, static_cast<double>(k - 1));
  }
  return reports;
}

void write_zigzag_csv(std::ostream& out, const std::vector<ExperimentReport>& reports) {
  out << "n,m,d,lambda_g,lambda_h,ave,max,f\n";
  for (const auto& r : reports) {
    out << r.params.n << ',' << r.params.m << ',' << r.params.d << ',' << fixed7(r.lambda_g) << ','
        << fixed7(r.lambda_h) << ',' << fixed7(r.ave_lambda) << ',' << fixed7(r.max_lambda) << ','
        << fixed7(r.bound) << '\n';
  }
}

void write_reduced_power_csv(std::ostream& out, const std::vector<ExperimentReport>& reports) {
  out << "k,ave,max,bound\n";
  for (const auto& r : reports) {
    out << r.k.value_or(0) << ',' << fixed7(r.ave_lambda) << ',' << fixed7(r.max_lambda) << ','
        << fixed7(r.bound) << '\n';
  }
}

}  // namespace xforge
