#include "xforge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

#include "xforge/error.hpp"
#include "xforge/rng.hpp"

namespace xforge {

namespace {

// Rayleigh quotients below this are treated as numerically zero when judging
// convergence (corresponds to lambda ~ 1e-10).
constexpr double kQuotientFloor = 1e-20;

void remove_mean(std::span<double> x) {
  double sum = 0.0;
  for (double v : x) sum += v;
  const double mean = sum / static_cast<double>(x.size());
  for (double& v : x) v -= mean;
}

// Union-find over the bipartite support graph: out-copy u joined to in-copy v
// whenever the walk can step u -> v. For a doubly stochastic A this graph is
// disconnected exactly when sigma_2(A) = 1.
class SupportComponents {
 public:
  explicit SupportComponents(std::size_t n) : parent_(2 * n), count_(2 * n) {
    for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = i;
  }
  void join(std::size_t from, std::size_t to) {
    const std::size_t a = find(from), b = find(to + parent_.size() / 2);
    if (a != b) {
      parent_[a] = b;
      --count_;
    }
  }
  bool split() const { return count_ > 1; }

 private:
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) i = parent_[i] = parent_[parent_[i]];
    return i;
  }
  std::vector<std::size_t> parent_;
  std::size_t count_;
};

bool support_split(const Eigen::MatrixXd& a) {
  SupportComponents c(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index u = 0; u < a.cols(); ++u)
    for (Eigen::Index v = 0; v < a.rows(); ++v)
      if (a(v, u) != 0.0) c.join(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  return c.split();
}

bool support_split(const LabelledDigraph& g) {
  SupportComponents c(g.n_vertices());
  for (const Edge& e : edge_multiset_of(g).edges) c.join(e.from, e.to);
  return c.split();
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_unit_interval(double value, const char* name) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw Error(ErrorKind::DomainError, std::string(name) + " = " + std::to_string(value) +
                                            " is outside [0,1]");
  }
}

}  // namespace

SpectralConfig SpectralConfig::from_env() {
  SpectralConfig cfg;
  if (const char* env = std::getenv("EXPANDER_FORGE_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v >= 0.0)) {
      throw Error(ErrorKind::InvalidArgument,
                  std::string("EXPANDER_FORGE_TOL is not a nonnegative number: ") + env);
    }
    cfg.inequality_slack = v;
  }
  return cfg;
}

TransitionMatrix TransitionMatrix::from_matrix(Eigen::MatrixXd a, double tol) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorKind::NotStochastic, "transition matrix must be square and nonempty");
  }
  if (!a.allFinite() || (a.array() < -tol).any() || (a.array() > 1.0 + tol).any()) {
    throw Error(ErrorKind::NotStochastic, "entries must lie in [0,1]");
  }
  const double col_err = (a.colwise().sum().array() - 1.0).abs().maxCoeff();
  const double row_err = (a.rowwise().sum().array() - 1.0).abs().maxCoeff();
  if (col_err > tol || row_err > tol) {
    throw Error(ErrorKind::NotStochastic,
                "row/column sums deviate from 1 by " + std::to_string(std::max(col_err, row_err)));
  }
  return TransitionMatrix(std::move(a));
}

Distribution Distribution::from_vector(Eigen::VectorXd p, double tol) {
  if (p.size() == 0 || !p.allFinite() || (p.array() < 0.0).any()) {
    throw Error(ErrorKind::DomainError, "probabilities must be finite and nonnegative");
  }
  if (std::abs(p.sum() - 1.0) > tol) {
    throw Error(ErrorKind::DomainError, "probabilities must sum to 1");
  }
  return Distribution(std::move(p));
}

Distribution Distribution::uniform(std::size_t n) {
  const auto size = static_cast<Eigen::Index>(n);
  return Distribution(Eigen::VectorXd::Constant(size, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::point_mass(std::size_t n, std::size_t vertex) {
  if (vertex >= n) throw Error(ErrorKind::OutOfRange, "vertex outside [N]");
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  p(static_cast<Eigen::Index>(vertex)) = 1.0;
  return Distribution(std::move(p));
}

TransitionMatrix transition_matrix(const LabelledDigraph& g) {
  const auto n = static_cast<Eigen::Index>(g.n_vertices());
  const std::size_t m = g.degree();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  const auto codes = g.codes();
  // Accumulate integer counts first so every entry is exactly count/M.
  for (std::size_t i = 0; i < codes.size(); ++i) {
    a(static_cast<Eigen::Index>(codes[i] / m), static_cast<Eigen::Index>(i / m)) += 1.0;
  }
  a /= static_cast<double>(m);
  return TransitionMatrix::from_matrix(std::move(a));
}

SvdFactors svd(const TransitionMatrix& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  SvdFactors out;
  out.left.resize(n, n);
  out.right.resize(n, n);
  out.singular_values.resize(n);
  const Eigen::VectorXd ones = Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(static_cast<double>(n)));
  out.left.col(0) = ones;
  out.right.col(0) = ones;
  out.singular_values(0) = 1.0;
  if (n == 1) return out;

  // Orthonormal basis of 1-perp from the Householder reflector that maps e1
  // onto the ones direction.
  const Eigen::MatrixXd ones_col = ones;
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(ones_col);
  const Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd basis = q.rightCols(n - 1);

  // A maps 1-perp into itself (and so does A^T), so restricting there gives
  // the remaining singular triplets.
  const Eigen::MatrixXd restricted = basis.transpose() * a.matrix() * basis;
  Eigen::JacobiSVD<Eigen::MatrixXd> dec(restricted, Eigen::ComputeFullU | Eigen::ComputeFullV);
  out.left.rightCols(n - 1) = basis * dec.matrixU();
  out.right.rightCols(n - 1) = basis * dec.matrixV();
  out.singular_values.tail(n - 1) = dec.singularValues();

  for (Eigen::Index c = 1; c < n; ++c) {
    Eigen::Index arg = 0;
    out.left.col(c).cwiseAbs().maxCoeff(&arg);
    if (out.left(arg, c) < 0.0) {
      out.left.col(c) *= -1.0;
      out.right.col(c) *= -1.0;
    }
  }
  return out;
}

double dense_spectral_expansion(const TransitionMatrix& a) {
  if (a.dim() == 1) return 0.0;
  Eigen::BDCSVD<Eigen::MatrixXd> dec(a.matrix());
  return dec.singularValues()(1);
}

PowerIterationResult power_iteration_expansion(const LinearOperator& a, double tol,
                                               std::size_t max_iters, std::uint64_t seed) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const std::size_t n = a.dim();
  PowerIterationResult result;
  if (n == 1) return result;

  std::vector<double> x(n), w(n), z(n);
  SeededRng rng(seed, 0);
  for (double& v : x) v = 2.0 * rng.next_double() - 1.0;
  remove_mean(x);
  double norm = std::sqrt(dot(x, x));
  for (double& v : x) v /= norm;

  // Quotient history; the remainder estimate compares changes over windows of
  // up to kWindow steps so that it stays above rounding noise.
  constexpr std::size_t kWindow = 32;
  std::vector<double> rhos;
  rhos.reserve(std::min<std::size_t>(max_iters, 4096));
  int settled = 0;
  for (std::size_t it = 1; it <= max_iters; ++it) {
    a.apply(x, w);
    remove_mean(w);
    a.apply_transpose(w, z);
    remove_mean(z);
    const double rho = std::max(dot(x, z), 0.0);
    norm = std::sqrt(dot(z, z));
    result.iterations = it;
    result.lambda = std::sqrt(rho);
    if (norm == 0.0) {
      result.last_gap = 0.0;
      return result;  // operator vanishes on 1-perp
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = z[i] / norm;
    rhos.push_back(rho);
    if (rhos.size() < 2) continue;

    const std::size_t k = rhos.size() - 1;
    const double gap = std::abs(rho - rhos[k - 1]);
    const double threshold = tol * std::max(rho, kQuotientFloor);
    result.last_gap = gap;
    bool ok = gap <= threshold;
    const std::size_t span = std::min(kWindow, k / 2);
    if (ok && span >= 1) {
      const double d1 = rho - rhos[k - span];
      const double d0 = rhos[k - span] - rhos[k - 2 * span];
      const double q = d0 != 0.0 ? d1 / d0 : 0.0;
      if (q > 0.0 && q < 1.0) {
        ok = std::abs(d1) * q / (1.0 - q) <= threshold;
      } else {
        ok = std::abs(d1) <= threshold;
      }
    }
    settled = ok ? settled + 1 : 0;
    if (settled >= 2) return result;
  }
  throw Error(ErrorKind::NoConvergence,
              "power iteration did not converge in " + std::to_string(max_iters) +
                  " iterations (last quotient gap " + std::to_string(result.last_gap) +
                  ", lambda ~ " + std::to_string(result.lambda) + ")");
}

double spectral_expansion_power_iter(const TransitionMatrix& a, double tol,
                                     std::size_t max_iters) {
  if (a.dim() > 1 && support_split(a.matrix())) return 1.0;
  return power_iteration_expansion(dense_operator(a.matrix()), tol, max_iters).lambda;
}

double spectral_expansion(const TransitionMatrix& a, const SpectralConfig& cfg) {
  if (a.dim() <= cfg.dense_cutoff) return dense_spectral_expansion(a);
  if (support_split(a.matrix())) return 1.0;
  return power_iteration_expansion(dense_operator(a.matrix()), cfg.power_tol, cfg.max_iters,
                                   cfg.start_seed)
      .lambda;
}

std::vector<double> power_expansions(const TransitionMatrix& a, std::size_t k_max,
                                     const SpectralConfig& cfg) {
  if (a.dim() > cfg.dense_cutoff) return power_expansions(dense_operator(a.matrix()), k_max, cfg);
  std::vector<double> out;
  out.reserve(k_max);
  Eigen::MatrixXd power = a.matrix();
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) power = a.matrix() * power;
    if (a.dim() == 1) {
      out.push_back(0.0);
      continue;
    }
    Eigen::BDCSVD<Eigen::MatrixXd> dec(power);
    out.push_back(dec.singularValues()(1));
  }
  return out;
}

std::vector<double> power_expansions(const LinearOperator& a, std::size_t k_max,
                                     const SpectralConfig& cfg) {
  std::vector<double> out;
  out.reserve(k_max);
  for (std::size_t k = 1; k <= k_max; ++k) {
    out.push_back(
        power_iteration_expansion(operator_power(a, k), cfg.power_tol, cfg.max_iters, cfg.start_seed)
            .lambda);
  }
  return out;
}

double matrix_power_expansion(const TransitionMatrix& a, std::size_t t, const SpectralConfig& cfg) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "power must be >= 1");
  if (a.dim() > cfg.dense_cutoff) {
    return power_iteration_expansion(operator_power(dense_operator(a.matrix()), t), cfg.power_tol,
                                     cfg.max_iters, cfg.start_seed)
        .lambda;
  }
  return power_expansions(a, t, cfg).back();
}

double graph_expansion(const LabelledDigraph& g, const SpectralConfig& cfg) {
  if (g.n_vertices() <= cfg.dense_cutoff) return dense_spectral_expansion(transition_matrix(g));
  if (support_split(g)) return 1.0;
  return power_iteration_expansion(transition_operator(g), cfg.power_tol, cfg.max_iters,
                                   cfg.start_seed)
      .lambda;
}

bool top_singular_value_repeated(double lambda, double tol) { return lambda >= 1.0 - tol; }

double bound_f(double alpha, double beta1, double beta2) {
  check_unit_interval(alpha, "alpha");
  check_unit_interval(beta1, "beta1");
  check_unit_interval(beta2, "beta2");
  const double common = alpha * alpha * (1.0 - beta1 * beta1) * (1.0 - beta2 * beta2);
  const double sum = beta1 + beta2;
  const double diff = beta1 - beta2;
  return 0.5 * (std::sqrt(common + sum * sum) + std::sqrt(common + diff * diff));
}

double bound_f_prime(double alpha, double beta) {
  check_unit_interval(alpha, "alpha");
  check_unit_interval(beta, "beta");
  const double a = alpha * (1.0 - beta);
  return 0.5 * a + 0.5 * std::sqrt(a * a + 4.0 * beta);
}

double mixing_distance(const TransitionMatrix& a, const Distribution& mu, std::size_t t) {
  if (mu.size() != a.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "distribution and matrix sizes differ");
  }
  Eigen::VectorXd v = mu.probabilities();
  for (std::size_t s = 0; s < t; ++s) v = a.matrix() * v;
  v.array() -= 1.0 / static_cast<double>(a.dim());
  return v.norm();
}

void write_matrix_csv(std::ostream& out, const Eigen::MatrixXd& a) {
  char buf[32];
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      std::snprintf(buf, sizeof buf, "%.16e", a(r, c));
      if (c > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }
}

}  // namespace xforge
