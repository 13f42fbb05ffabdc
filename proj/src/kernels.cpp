#include "xforge/kernels.hpp"

#include <algorithm>

namespace xforge::kernels {

namespace {

// Below this many ports the fork/join cost dominates.
constexpr std::ptrdiff_t kParallelThreshold = 1 << 14;

}  // namespace

namespace serial {

void rotation_apply(std::span<const Code> rot, std::size_t m, std::span<const double> x,
                    std::span<double> y) {
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t i = 0; i < rot.size(); ++i) y[rot[i] / m] += x[i / m];
  const double scale = 1.0 / static_cast<double>(m);
  for (double& v : y) v *= scale;
}

void rotation_apply_transpose(std::span<const Code> rot, std::size_t m,
                              std::span<const double> x, std::span<double> y) {
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t i = 0; i < rot.size(); ++i) y[i / m] += x[rot[i] / m];
  const double scale = 1.0 / static_cast<double>(m);
  for (double& v : y) v *= scale;
}

void lifted_apply(std::span<const Code> rot_h, std::size_t d, std::size_t blocks,
                  std::span<const double> x, std::span<double> y) {
  const std::size_t m = rot_h.size() / d;
  const double scale = 1.0 / static_cast<double>(d);
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t u = 0; u < blocks; ++u) {
    const std::size_t base = u * m;
    for (std::size_t p = 0; p < rot_h.size(); ++p) {
      y[base + rot_h[p] / d] += scale * x[base + p / d];
    }
  }
}

void lifted_apply_transpose(std::span<const Code> rot_h, std::size_t d, std::size_t blocks,
                            std::span<const double> x, std::span<double> y) {
  const std::size_t m = rot_h.size() / d;
  const double scale = 1.0 / static_cast<double>(d);
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t u = 0; u < blocks; ++u) {
    const std::size_t base = u * m;
    for (std::size_t p = 0; p < rot_h.size(); ++p) {
      y[base + p / d] += scale * x[base + rot_h[p] / d];
    }
  }
}

void permutation_apply(std::span<const Code> perm, std::span<const double> x,
                       std::span<double> y) {
  for (std::size_t i = 0; i < perm.size(); ++i) y[perm[i]] = x[i];
}

void permutation_apply_transpose(std::span<const Code> perm, std::span<const double> x,
                                 std::span<double> y) {
  for (std::size_t i = 0; i < perm.size(); ++i) y[i] = x[perm[i]];
}

}  // namespace serial

namespace omp {

void rotation_apply(std::span<const Code> inv, std::size_t m, std::span<const double> x,
                    std::span<double> y) {
  const auto n = static_cast<std::ptrdiff_t>(y.size());
  const double scale = 1.0 / static_cast<double>(m);
#pragma omp parallel for schedule(static) if (static_cast<std::ptrdiff_t>(inv.size()) > kParallelThreshold)
  for (std::ptrdiff_t v = 0; v < n; ++v) {
    double acc = 0.0;
    const Code* src = inv.data() + static_cast<std::size_t>(v) * m;
    for (std::size_t l = 0; l < m; ++l) acc += x[src[l] / m];
    y[static_cast<std::size_t>(v)] = acc * scale;
  }
}

void rotation_apply_transpose(std::span<const Code> rot, std::size_t m,
                              std::span<const double> x, std::span<double> y) {
  const auto n = static_cast<std::ptrdiff_t>(y.size());
  const double scale = 1.0 / static_cast<double>(m);
#pragma omp parallel for schedule(static) if (static_cast<std::ptrdiff_t>(rot.size()) > kParallelThreshold)
  for (std::ptrdiff_t u = 0; u < n; ++u) {
    double acc = 0.0;
    const Code* dst = rot.data() + static_cast<std::size_t>(u) * m;
    for (std::size_t k = 0; k < m; ++k) acc += x[dst[k] / m];
    y[static_cast<std::size_t>(u)] = acc * scale;
  }
}

void lifted_apply(std::span<const Code> rot_h, std::size_t d, std::size_t blocks,
                  std::span<const double> x, std::span<double> y) {
  const std::size_t m = rot_h.size() / d;
  const double scale = 1.0 / static_cast<double>(d);
  const auto nb = static_cast<std::ptrdiff_t>(blocks);
  const bool big = static_cast<std::ptrdiff_t>(blocks * rot_h.size()) > kParallelThreshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::ptrdiff_t u = 0; u < nb; ++u) {
    const std::size_t base = static_cast<std::size_t>(u) * m;
    double* out = y.data() + base;
    const double* in = x.data() + base;
    std::fill(out, out + m, 0.0);
    for (std::size_t p = 0; p < rot_h.size(); ++p) out[rot_h[p] / d] += scale * in[p / d];
  }
}

void lifted_apply_transpose(std::span<const Code> rot_h, std::size_t d, std::size_t blocks,
                            std::span<const double> x, std::span<double> y) {
  const std::size_t m = rot_h.size() / d;
  const double scale = 1.0 / static_cast<double>(d);
  const auto nb = static_cast<std::ptrdiff_t>(blocks);
  const bool big = static_cast<std::ptrdiff_t>(blocks * rot_h.size()) > kParallelThreshold;
#pragma omp parallel for schedule(static) if (big)
  for (std::ptrdiff_t u = 0; u < nb; ++u) {
    const std::size_t base = static_cast<std::size_t>(u) * m;
    double* out = y.data() + base;
    const double* in = x.data() + base;
    for (std::size_t k = 0; k < m; ++k) {
      double acc = 0.0;
      for (std::size_t i = 0; i < d; ++i) acc += in[rot_h[k * d + i] / d];
      out[k] = acc * scale;
    }
  }
}

void permutation_apply(std::span<const Code> perm, std::span<const double> x,
                       std::span<double> y) {
  const auto n = static_cast<std::ptrdiff_t>(perm.size());
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[perm[static_cast<std::size_t>(i)]] = x[static_cast<std::size_t>(i)];
}

void permutation_apply_transpose(std::span<const Code> perm, std::span<const double> x,
                                 std::span<double> y) {
  const auto n = static_cast<std::ptrdiff_t>(perm.size());
#pragma omp parallel for schedule(static) if (n > kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) y[static_cast<std::size_t>(i)] = x[perm[static_cast<std::size_t>(i)]];
}

}  // namespace omp

}  // namespace xforge::kernels
