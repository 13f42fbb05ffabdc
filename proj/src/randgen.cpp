#include "xforge/randgen.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "xforge/error.hpp"

namespace xforge {

namespace {

void require_regular(const EdgeMultiset& e, std::size_t m) {
  if (m == 0 || e.n_vertices == 0 || !e.is_regular(m)) {
    throw Error(ErrorKind::NotRegular,
                "edge multiset is not " + std::to_string(m) + "-regular on " +
                    std::to_string(e.n_vertices) + " vertices");
  }
}

// Labels edge slots given per-vertex label permutations.
LabelledDigraph assemble(const EdgeMultiset& e, std::size_t m,
                         const std::vector<std::size_t>& out_perm,
                         const std::vector<std::size_t>& in_perm) {
  const std::size_t n = e.n_vertices;
  std::vector<std::size_t> out_seen(n, 0), in_seen(n, 0);
  std::vector<LabelledDigraph::Code> rot(n * m);
  for (const Edge& edge : e.edges) {
    const std::size_t k = out_perm[edge.from * m + out_seen[edge.from]++];
    const std::size_t l = in_perm[edge.to * m + in_seen[edge.to]++];
    rot[edge.from * m + k] = static_cast<LabelledDigraph::Code>(edge.to * m + l);
  }
  return LabelledDigraph::from_codes(n, m, std::move(rot));
}

}  // namespace

EdgeMultiset config_model(std::size_t n, std::size_t m, SeededRng& rng) {
  if (n == 0 || m == 0) throw Error(ErrorKind::InvalidArgument, "n and m must be positive");
  const std::size_t size = n * m;
  std::vector<std::size_t> x(size), y(size);
  std::iota(x.begin(), x.end(), std::size_t{0});
  std::iota(y.begin(), y.end(), std::size_t{0});
  rng.shuffle(std::span<std::size_t>(x));
  rng.shuffle(std::span<std::size_t>(y));

  // Value w (0-based, i.e. w+1 in 1..MN) reduces to 1-based vertex ((w+1) mod N
  // with 0 read as N), which is 0-based vertex w mod N.
  EdgeMultiset e;
  e.n_vertices = n;
  e.edges.reserve(size);
  for (std::size_t i = 0; i < size; ++i) e.edges.push_back({x[i] % n, y[i] % n});
  return e;
}

LabelledDigraph random_labelling(const EdgeMultiset& e, std::size_t m, SeededRng& rng) {
  require_regular(e, m);
  const std::size_t n = e.n_vertices;
  std::vector<std::size_t> out_perm(n * m), in_perm(n * m);
  for (std::size_t u = 0; u < n; ++u) {
    std::span<std::size_t> block(out_perm.data() + u * m, m);
    std::iota(block.begin(), block.end(), std::size_t{0});
    rng.shuffle(block);
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::span<std::size_t> block(in_perm.data() + v * m, m);
    std::iota(block.begin(), block.end(), std::size_t{0});
    rng.shuffle(block);
  }
  return assemble(e, m, out_perm, in_perm);
}

LabelledDigraph ordered_labelling(const EdgeMultiset& e, std::size_t m) {
  require_regular(e, m);
  std::vector<std::size_t> identity(e.n_vertices * m);
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = i % m;
  return assemble(e, m, identity, identity);
}

}  // namespace xforge
