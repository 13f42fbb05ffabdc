#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include <Eigen/Core>

#include "xforge/graph.hpp"
#include "xforge/linear_operator.hpp"

namespace xforge {

/// Central numeric knobs. Every tolerance used by the spectral routines and by
/// the inequality checks comes from here.
struct SpectralConfig {
  std::size_t dense_cutoff = 600;  // dims above this use power iteration
  double power_tol = 1e-10;        // relative Rayleigh-quotient tolerance
  std::size_t max_iters = 100'000;
  std::uint64_t start_seed = 0x5EEDULL;
  double stochastic_tol = 1e-12;
  double inequality_slack = 1e-9;

  /// Defaults, with `inequality_slack` overridden by EXPANDER_FORGE_TOL when set.
  static SpectralConfig from_env();
};

/// Doubly stochastic matrix of a random walk; entry (v,u) is the probability
/// of stepping from u to v.
class TransitionMatrix {
 public:
  /// Throws NotStochastic unless entries lie in [0,1] and every row and column
  /// sums to 1 within `tol`.
  static TransitionMatrix from_matrix(Eigen::MatrixXd a, double tol = 1e-12);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(a_.rows()); }
  const Eigen::MatrixXd& matrix() const noexcept { return a_; }
  double operator()(std::size_t v, std::size_t u) const {
    return a_(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(u));
  }

 private:
  explicit TransitionMatrix(Eigen::MatrixXd a) : a_(std::move(a)) {}
  Eigen::MatrixXd a_;
};

/// A = left * diag(singular_values) * right^T, singular values non-increasing.
struct SvdFactors {
  Eigen::MatrixXd left;
  Eigen::MatrixXd right;
  Eigen::VectorXd singular_values;
};

/// Probability vector on [N].
class Distribution {
 public:
  /// Throws DomainError on negative entries or a sum off 1 by more than `tol`.
  static Distribution from_vector(Eigen::VectorXd p, double tol = 1e-12);
  static Distribution uniform(std::size_t n);
  static Distribution point_mass(std::size_t n, std::size_t vertex);

  std::size_t size() const noexcept { return static_cast<std::size_t>(p_.size()); }
  const Eigen::VectorXd& probabilities() const noexcept { return p_; }

 private:
  explicit Distribution(Eigen::VectorXd p) : p_(std::move(p)) {}
  Eigen::VectorXd p_;
};

TransitionMatrix transition_matrix(const LabelledDigraph& g);

/// SVD with sigma_1 = 1 and p_1 = q_1 = 1/sqrt(n) pinned, the rest computed on
/// the complement of the all-ones vector. Each later left vector is signed so
/// its largest-magnitude entry is positive (the right vector flips with it).
SvdFactors svd(const TransitionMatrix& a);

/// lambda(A): the second largest singular value, 0 when dim = 1. Dense SVD up
/// to cfg.dense_cutoff, deflated power iteration above it.
double spectral_expansion(const TransitionMatrix& a, const SpectralConfig& cfg = {});

/// Dense-SVD route regardless of size.
double dense_spectral_expansion(const TransitionMatrix& a);

struct PowerIterationResult {
  double lambda = 0.0;
  std::size_t iterations = 0;
  double last_gap = 0.0;  // last change in the Rayleigh quotient
};

/// Power iteration on x -> P A^T A P x, P the projector onto 1-perp.
/// Convergence is judged on the Rayleigh quotient: its step-to-step change
/// and an extrapolated remainder must both fall below tol * quotient on two
/// consecutive steps. Throws NoConvergence after max_iters.
PowerIterationResult power_iteration_expansion(const LinearOperator& a, double tol,
                                               std::size_t max_iters,
                                               std::uint64_t seed = 0x5EEDULL);

double spectral_expansion_power_iter(const TransitionMatrix& a, double tol,
                                     std::size_t max_iters);

/// lambda(A^t), computed without building G^t.
double matrix_power_expansion(const TransitionMatrix& a, std::size_t t,
                              const SpectralConfig& cfg = {});

/// lambda(A^k) for k = 1..k_max.
std::vector<double> power_expansions(const TransitionMatrix& a, std::size_t k_max,
                                     const SpectralConfig& cfg = {});
std::vector<double> power_expansions(const LinearOperator& a, std::size_t k_max,
                                     const SpectralConfig& cfg = {});

/// lambda of a graph, choosing dense or matrix-free by size.
double graph_expansion(const LabelledDigraph& g, const SpectralConfig& cfg = {});

/// True when lambda is numerically 1, i.e. sigma_1 = sigma_2 = 1: the walk is
/// disconnected or periodic (which one is not determined).
bool top_singular_value_repeated(double lambda, double tol = 1e-9);

/// Upper bound on lambda(G z (H1,H2)) given lambda(G) <= alpha,
/// lambda(H1) <= beta1, lambda(H2) <= beta2:
///   f = ( sqrt(a^2 (1-b1^2)(1-b2^2) + (b1+b2)^2)
///       + sqrt(a^2 (1-b1^2)(1-b2^2) + (b1-b2)^2) ) / 2
/// Throws DomainError outside [0,1]^3.
double bound_f(double alpha, double beta1, double beta2);

/// f'(a,b) = a(1-b)/2 + sqrt(a^2 (1-b)^2 + 4b)/2 = f(a, sqrt b, sqrt b).
/// lambda((G z' H)^k) <= f'(lambda G, lambda H)^(k-1).
double bound_f_prime(double alpha, double beta);

/// ||A^t mu - pi||_2 with pi uniform.
double mixing_distance(const TransitionMatrix& a, const Distribution& mu, std::size_t t);

/// One row per line, 17 significant digits in scientific notation.
void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& a);

}  // namespace xforge
