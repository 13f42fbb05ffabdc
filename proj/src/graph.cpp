#include "xforge/graph.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "xforge/error.hpp"

namespace xforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotABijection: return "NotABijection";
    case ErrorKind::IncompleteTable: return "IncompleteTable";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::PowerTooLarge: return "PowerTooLarge";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NotRegular: return "NotRegular";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_shape(std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) {
    throw Error(ErrorKind::InvalidArgument, "vertex count and degree must be positive");
  }
  if (m > std::numeric_limits<LabelledDigraph::Code>::max() / n) {
    throw Error(ErrorKind::InvalidArgument, "rotation table too large for 32-bit port codes");
  }
}

}  // namespace

bool EdgeMultiset::is_regular(std::size_t m) const {
  if (edges.size() != n_vertices * m) return false;
  std::vector<std::size_t> out(n_vertices, 0), in(n_vertices, 0);
  for (const Edge& e : edges) {
    if (e.from >= n_vertices || e.to >= n_vertices) return false;
    ++out[e.from];
    ++in[e.to];
  }
  return std::all_of(out.begin(), out.end(), [m](std::size_t d) { return d == m; }) &&
         std::all_of(in.begin(), in.end(), [m](std::size_t d) { return d == m; });
}

bool same_multiset(const EdgeMultiset& a, const EdgeMultiset& b) {
  if (a.n_vertices != b.n_vertices || a.edges.size() != b.edges.size()) return false;
  auto x = a.edges;
  auto y = b.edges;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

LabelledDigraph LabelledDigraph::from_codes(std::size_t n, std::size_t m, std::vector<Code> rot) {
  check_shape(n, m);
  const std::size_t size = n * m;
  if (rot.size() != size) {
    throw Error(ErrorKind::IncompleteTable, "expected " + std::to_string(size) + " entries, got " +
                                                std::to_string(rot.size()));
  }
  std::vector<bool> hit(size, false);
  for (std::size_t i = 0; i < size; ++i) {
    const Code c = rot[i];
    if (c >= size) {
      throw Error(ErrorKind::NotABijection, "target of port " + std::to_string(i) + " out of range");
    }
    if (hit[c]) {
      throw Error(ErrorKind::NotABijection,
                  "target (" + std::to_string(c / m + 1) + "," + std::to_string(c % m + 1) +
                      ") hit twice");
    }
    hit[c] = true;
  }
  return LabelledDigraph(n, m, std::move(rot));
}

LabelledDigraph LabelledDigraph::from_table(std::size_t n, std::size_t m,
                                            std::span<const RotationEntry> table) {
  check_shape(n, m);
  const std::size_t size = n * m;
  constexpr Code kUnset = std::numeric_limits<Code>::max();
  std::vector<Code> rot(size, kUnset);
  std::vector<bool> hit(size, false);
  for (const auto& [from, to] : table) {
    if (from.vertex >= n || from.label >= m) {
      throw Error(ErrorKind::IncompleteTable, "source port out of range");
    }
    const std::size_t src = from.vertex * m + from.label;
    if (rot[src] != kUnset) {
      throw Error(ErrorKind::IncompleteTable, "source port listed twice");
    }
    if (to.vertex >= n || to.label >= m) {
      throw Error(ErrorKind::NotABijection, "target port out of range");
    }
    const std::size_t dst = to.vertex * m + to.label;
    if (hit[dst]) {
      throw Error(ErrorKind::NotABijection,
                  "target (" + std::to_string(to.vertex + 1) + "," + std::to_string(to.label + 1) +
                      ") hit twice");
    }
    hit[dst] = true;
    rot[src] = static_cast<Code>(dst);
  }
  for (std::size_t i = 0; i < size; ++i) {
    if (rot[i] == kUnset) {
      throw Error(ErrorKind::IncompleteTable, "missing entry for (" + std::to_string(i / m + 1) +
                                                  "," + std::to_string(i % m + 1) + ")");
    }
  }
  return LabelledDigraph(n, m, std::move(rot));
}

Port LabelledDigraph::rot(std::size_t u, std::size_t k) const {
  if (u >= n_ || k >= m_) {
    throw Error(ErrorKind::OutOfRange, "port (" + std::to_string(u + 1) + "," +
                                           std::to_string(k + 1) + ") outside [N]x[M]");
  }
  const Code c = rot_[u * m_ + k];
  return {c / m_, c % m_};
}

std::vector<LabelledDigraph::Code> LabelledDigraph::inverse_codes() const {
  std::vector<Code> inv(rot_.size());
  for (std::size_t i = 0; i < rot_.size(); ++i) inv[rot_[i]] = static_cast<Code>(i);
  return inv;
}

LabelledDigraph trivial_graph(std::size_t m) {
  std::vector<LabelledDigraph::Code> rot(m);
  for (std::size_t k = 0; k < m; ++k) rot[k] = static_cast<LabelledDigraph::Code>(k);
  return LabelledDigraph::from_codes(m, 1, std::move(rot));
}

Port rot_of(const LabelledDigraph& g, std::size_t u, std::size_t k) { return g.rot(u, k); }

EdgeMultiset edge_multiset_of(const LabelledDigraph& g) {
  EdgeMultiset e;
  e.n_vertices = g.n_vertices();
  e.edges.reserve(g.n_ports());
  const std::size_t m = g.degree();
  const auto codes = g.codes();
  for (std::size_t i = 0; i < codes.size(); ++i) {
    e.edges.push_back({i / m, codes[i] / m});
  }
  return e;
}

}  // namespace xforge
