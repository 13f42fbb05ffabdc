#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "xforge/graph.hpp"
#include "xforge/spectral.hpp"

namespace xforge {

struct ExperimentParams {
  std::size_t n = 0;  // vertices of G
  std::size_t m = 0;  // degree of G = vertices of H
  std::size_t d = 0;  // degree of H
  std::size_t trials = 1;
  std::uint64_t master_seed = 0;
};

/// Preset sizes: "i" = 50/40/30, "ii" = 30/20/10, "iii" = 10/5/3.
std::optional<ExperimentParams> case_params(std::string_view name);

// Random streams under a master seed. Trial t draws G's labelling from stream
// t; the fixed graphs use reserved streams far from any trial index.
inline constexpr std::uint64_t kGraphStream = 0xFFFF'FFFF'FFFF'FF00ULL;
inline constexpr std::uint64_t kComponentStream = 0xFFFF'FFFF'FFFF'FF01ULL;

/// The fixed ingredients of one experiment: G's edge multiset (labelled per
/// trial) and H with its in-order labelling.
struct ExperimentGraphs {
  EdgeMultiset g_edges;
  LabelledDigraph h;
  double lambda_g = 0.0;
  double lambda_h = 0.0;
};

ExperimentGraphs make_experiment_graphs(const ExperimentParams& p, const SpectralConfig& cfg = {});

/// G with the random two-way labelling of trial `trial`.
LabelledDigraph trial_labelling(const ExperimentGraphs& graphs, const ExperimentParams& p,
                                std::size_t trial);

struct ExperimentReport {
  ExperimentParams params;
  double lambda_g = 0.0;
  double lambda_h = 0.0;
  std::vector<double> per_trial;
  double ave_lambda = 0.0;
  double max_lambda = 0.0;
  double bound = 0.0;
  std::optional<std::size_t> k;  // set for reduced-power rows
};

/// lambda(G z (H,H)) for one labelled G: dense SVD of the explicit product
/// when it fits under cfg.dense_cutoff, power iteration on the factored
/// transition operator otherwise.
double zigzag_expansion(const LabelledDigraph& g, const LabelledDigraph& h,
                        const SpectralConfig& cfg = {});

/// lambda((G z' H)^k) for k = 1..k_max, same routing as zigzag_expansion.
std::vector<double> reduced_power_expansions(const LabelledDigraph& g, const LabelledDigraph& h,
                                             std::size_t k_max, const SpectralConfig& cfg = {});

/// One random G and H; `trials` random labellings of G; lambda(G z (H,H)) per
/// trial, bound f(lambda G, lambda H, lambda H). Trials run concurrently and
/// are reduced in trial order.
ExperimentReport run_zigzag_experiment(const ExperimentParams& p, const SpectralConfig& cfg = {});

/// Same graphs and labellings as run_zigzag_experiment; one report per
/// k = 1..k_max with bound f'(lambda G, lambda H)^(k-1).
std::vector<ExperimentReport> run_reduced_power_experiment(const ExperimentParams& p,
                                                           std::size_t k_max,
                                                           const SpectralConfig& cfg = {});

/// Fills ave/max from per_trial.
void summarize(ExperimentReport& r);

/// Header "n,m,d,lambda_g,lambda_h,ave,max,f", one row per report.
void write_zigzag_csv(std::ostream& out, const std::vector<ExperimentReport>& reports);
/// Header "k,ave,max,bound", one row per k.
void write_reduced_power_csv(std::ostream& out, const std::vector<ExperimentReport>& reports);

}  // namespace xforge
