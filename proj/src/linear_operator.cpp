#include "xforge/linear_operator.hpp"

#include <memory>
#include <string>

#include "xforge/error.hpp"
#include "xforge/kernels.hpp"

namespace xforge {

LinearOperator dense_operator(Eigen::MatrixXd a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix is not square");
  auto mat = std::make_shared<const Eigen::MatrixXd>(std::move(a));
  const auto n = static_cast<std::size_t>(mat->rows());
  return LinearOperator(
      n,
      [mat](std::span<const double> x, std::span<double> y) {
        Eigen::Map<Eigen::VectorXd>(y.data(), mat->rows()).noalias() =
            *mat * Eigen::Map<const Eigen::VectorXd>(x.data(), mat->cols());
      },
      [mat](std::span<const double> x, std::span<double> y) {
        Eigen::Map<Eigen::VectorXd>(y.data(), mat->cols()).noalias() =
            mat->transpose() * Eigen::Map<const Eigen::VectorXd>(x.data(), mat->rows());
      });
}

LinearOperator transition_operator(const LabelledDigraph& g) {
  auto rot = std::make_shared<const std::vector<kernels::Code>>(g.codes().begin(), g.codes().end());
  auto inv = std::make_shared<const std::vector<kernels::Code>>(g.inverse_codes());
  const std::size_t m = g.degree();
  return LinearOperator(
      g.n_vertices(),
      [inv, m](std::span<const double> x, std::span<double> y) {
        kernels::omp::rotation_apply(*inv, m, x, y);
      },
      [rot, m](std::span<const double> x, std::span<double> y) {
        kernels::omp::rotation_apply_transpose(*rot, m, x, y);
      });
}

LinearOperator lifted_operator(std::size_t blocks, const LabelledDigraph& h) {
  auto rot = std::make_shared<const std::vector<kernels::Code>>(h.codes().begin(), h.codes().end());
  const std::size_t d = h.degree();
  return LinearOperator(
      blocks * h.n_vertices(),
      [rot, d, blocks](std::span<const double> x, std::span<double> y) {
        kernels::omp::lifted_apply(*rot, d, blocks, x, y);
      },
      [rot, d, blocks](std::span<const double> x, std::span<double> y) {
        kernels::omp::lifted_apply_transpose(*rot, d, blocks, x, y);
      });
}

LinearOperator rotation_permutation(const LabelledDigraph& g) {
  auto perm = std::make_shared<const std::vector<kernels::Code>>(g.codes().begin(), g.codes().end());
  return LinearOperator(
      g.n_ports(),
      [perm](std::span<const double> x, std::span<double> y) {
        kernels::omp::permutation_apply(*perm, x, y);
      },
      [perm](std::span<const double> x, std::span<double> y) {
        kernels::omp::permutation_apply_transpose(*perm, x, y);
      });
}

LinearOperator product(std::vector<LinearOperator> factors) {
  if (factors.empty()) throw Error(ErrorKind::InvalidArgument, "empty operator product");
  const std::size_t n = factors.front().dim();
  for (const auto& f : factors) {
    if (f.dim() != n) throw Error(ErrorKind::DimensionMismatch, "operator dimensions differ");
  }
  if (factors.size() == 1) return factors.front();
  auto fs = std::make_shared<const std::vector<LinearOperator>>(std::move(factors));

  // Ping-pong between two scratch vectors; the last step writes into y.
  auto run = [fs, n](std::span<const double> x, std::span<double> y, bool transpose) {
    std::vector<double> a(x.begin(), x.end()), b(n);
    const std::size_t count = fs->size();
    for (std::size_t s = 0; s < count; ++s) {
      // A*B*C acts as C, B, A; its transpose as A^T, B^T, C^T.
      const auto& f = transpose ? (*fs)[s] : (*fs)[count - 1 - s];
      std::span<double> out = (s + 1 == count) ? y : std::span<double>(b);
      if (transpose) {
        f.apply_transpose(a, out);
      } else {
        f.apply(a, out);
      }
      if (s + 1 != count) std::swap(a, b);
    }
  };
  return LinearOperator(
      n, [run](std::span<const double> x, std::span<double> y) { run(x, y, false); },
      [run](std::span<const double> x, std::span<double> y) { run(x, y, true); });
}

LinearOperator operator_power(const LinearOperator& a, std::size_t t) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "operator power must be >= 1");
  return product(std::vector<LinearOperator>(t, a));
}

LinearOperator zigzag_operator(const LabelledDigraph& g, const LabelledDigraph& h1,
                               const LabelledDigraph& h2) {
  if (h1.n_vertices() != g.degree() || h2.n_vertices() != g.degree()) {
    throw Error(ErrorKind::DimensionMismatch, "H graphs must live on [deg G]");
  }
  const std::size_t n = g.n_vertices();
  return product({lifted_operator(n, h2), rotation_permutation(g), lifted_operator(n, h1)});
}

LinearOperator reduced_zigzag_operator(const LabelledDigraph& g, const LabelledDigraph& h) {
  if (h.n_vertices() != g.degree()) {
    throw Error(ErrorKind::DimensionMismatch, "H must live on [deg G]");
  }
  return product({rotation_permutation(g), lifted_operator(g.n_vertices(), h)});
}

Eigen::MatrixXd to_dense(const LinearOperator& a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXd out(n, n);
  std::vector<double> e(a.dim(), 0.0), col(a.dim());
  for (Eigen::Index j = 0; j < n; ++j) {
    e[static_cast<std::size_t>(j)] = 1.0;
    a.apply(e, col);
    out.col(j) = Eigen::Map<const Eigen::VectorXd>(col.data(), n);
    e[static_cast<std::size_t>(j)] = 0.0;
  }
  return out;
}

}  // namespace xforge
