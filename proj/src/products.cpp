#include "xforge/products.hpp"

#include <string>
#include <vector>

#include "xforge/error.hpp"

namespace xforge {

namespace {

void require_on_labels(const LabelledDigraph& g, const LabelledDigraph& h, const char* name) {
  if (h.n_vertices() != g.degree()) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(name) + " has " + std::to_string(h.n_vertices()) +
                    " vertices but G has degree " + std::to_string(g.degree()));
  }
}

}  // namespace

LabelledDigraph zigzag(const LabelledDigraph& g, const LabelledDigraph& h1,
                       const LabelledDigraph& h2) {
  require_on_labels(g, h1, "H1");
  require_on_labels(g, h2, "H2");
  const std::size_t n = g.n_vertices();
  const std::size_t m = g.degree();
  const std::size_t d1 = h1.degree();
  const std::size_t d2 = h2.degree();
  const std::size_t deg = d1 * d2;

  const auto rot_g = g.codes();
  const auto rot_h1 = h1.codes();
  const auto rot_h2 = h2.codes();
  std::vector<LabelledDigraph::Code> rot(n * m * deg);

  const auto blocks = static_cast<std::ptrdiff_t>(n * m);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t uk = 0; uk < blocks; ++uk) {
    const std::size_t u = static_cast<std::size_t>(uk) / m;
    const std::size_t k = static_cast<std::size_t>(uk) % m;
    for (std::size_t i = 0; i < d1; ++i) {
      const std::size_t step1 = rot_h1[k * d1 + i];  // (k', i')
      const std::size_t k_mid = step1 / d1;
      const std::size_t i_out = step1 % d1;
      const std::size_t step2 = rot_g[u * m + k_mid];  // (v, l')
      const std::size_t v = step2 / m;
      const std::size_t l_mid = step2 % m;
      for (std::size_t j = 0; j < d2; ++j) {
        const std::size_t step3 = rot_h2[l_mid * d2 + j];  // (l, j')
        const std::size_t l = step3 / d2;
        const std::size_t j_out = step3 % d2;
        const std::size_t src = static_cast<std::size_t>(uk) * deg + i * d2 + j;
        rot[src] = static_cast<LabelledDigraph::Code>((v * m + l) * deg + i_out * d2 + j_out);
      }
    }
  }
  return LabelledDigraph::from_codes(n * m, deg, std::move(rot));
}

LabelledDigraph reduced_zigzag(const LabelledDigraph& g, const LabelledDigraph& h) {
  require_on_labels(g, h, "H");
  const std::size_t m = g.degree();
  const std::size_t d = h.degree();
  const auto rot_g = g.codes();
  const auto rot_h = h.codes();
  std::vector<LabelledDigraph::Code> rot(g.n_vertices() * m * d);

  const auto blocks = static_cast<std::ptrdiff_t>(g.n_vertices() * m);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t uk = 0; uk < blocks; ++uk) {
    const std::size_t u = static_cast<std::size_t>(uk) / m;
    const std::size_t k = static_cast<std::size_t>(uk) % m;
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t step1 = rot_h[k * d + i];  // (k', j)
      const std::size_t vl = rot_g[u * m + step1 / d];
      rot[static_cast<std::size_t>(uk) * d + i] =
          static_cast<LabelledDigraph::Code>(vl * d + step1 % d);
    }
  }
  return LabelledDigraph::from_codes(g.n_vertices() * m, d, std::move(rot));
}

LabelledDigraph power(const LabelledDigraph& g, std::size_t t, std::size_t max_entries) {
  if (t == 0) throw Error(ErrorKind::InvalidArgument, "power exponent must be >= 1");
  const std::size_t n = g.n_vertices();
  const std::size_t m = g.degree();
  std::size_t deg = 1;
  for (std::size_t s = 0; s < t; ++s) {
    if (deg > max_entries / m || deg * m > max_entries / n) {
      throw Error(ErrorKind::PowerTooLarge,
                  "N*M^t exceeds the cap of " + std::to_string(max_entries) + " rotation entries");
    }
    deg *= m;
  }

  const auto rot_g = g.codes();
  std::vector<LabelledDigraph::Code> rot(n * deg);
  const auto total = static_cast<std::ptrdiff_t>(n * deg);
#pragma omp parallel
  {
    std::vector<std::size_t> labels(t);
#pragma omp for schedule(static)
    for (std::ptrdiff_t idx = 0; idx < total; ++idx) {
      std::size_t v = static_cast<std::size_t>(idx) / deg;
      std::size_t code = static_cast<std::size_t>(idx) % deg;
      // digits of the label tuple, k_t is least significant
      for (std::size_t s = t; s-- > 0;) {
        labels[s] = code % m;
        code /= m;
      }
      std::size_t out = 0;
      std::size_t place = 1;
      for (std::size_t s = 0; s < t; ++s) {
        const std::size_t vl = rot_g[v * m + labels[s]];
        v = vl / m;
        // l_s lands at position s of the reversed tuple (lt..l1), i.e. weight M^s
        out += (vl % m) * place;
        place *= m;
      }
      rot[static_cast<std::size_t>(idx)] = static_cast<LabelledDigraph::Code>(v * deg + out);
    }
  }
  return LabelledDigraph::from_codes(n, deg, std::move(rot));
}

}  // namespace xforge
