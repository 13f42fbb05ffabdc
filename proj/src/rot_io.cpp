#include "xforge/rot_io.hpp"

#include <array>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "xforge/error.hpp"

namespace xforge {

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + msg);
}

// Parses exactly `count` positive integers from the line, rejecting trailing tokens.
template <std::size_t Count>
std::array<long long, Count> parse_ints(const std::string& line, std::size_t line_no) {
  std::istringstream ss(line);
  std::array<long long, Count> out{};
  for (auto& v : out) {
    if (!(ss >> v)) fail(line_no, "expected " + std::to_string(Count) + " integers");
    if (v < 1) fail(line_no, "values must be positive (1-based)");
  }
  std::string extra;
  if (ss >> extra) fail(line_no, "trailing token '" + extra + "'");
  return out;
}

}  // namespace

LabelledDigraph read_rot(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!next_content_line(in, line, line_no)) {
    throw Error(ErrorKind::ParseError, "empty graph file");
  }
  const auto [n, m] = parse_ints<2>(line, line_no);
  const auto nn = static_cast<std::size_t>(n);
  const auto mm = static_cast<std::size_t>(m);

  if (mm > std::numeric_limits<LabelledDigraph::Code>::max() / nn) {
    fail(line_no, "N*M too large");
  }
  std::vector<LabelledDigraph::Code> rot;
  rot.reserve(nn * mm);
  for (std::size_t u = 0; u < nn; ++u) {
    for (std::size_t k = 0; k < mm; ++k) {
      if (!next_content_line(in, line, line_no)) {
        throw Error(ErrorKind::ParseError, "expected " + std::to_string(nn * mm) +
                                               " rotation lines, file ended after " +
                                               std::to_string(u * mm + k));
      }
      const auto [su, sk, v, l] = parse_ints<4>(line, line_no);
      if (static_cast<std::size_t>(su) != u + 1 || static_cast<std::size_t>(sk) != k + 1) {
        fail(line_no, "expected entry for (" + std::to_string(u + 1) + "," +
                          std::to_string(k + 1) + ") in row-major order");
      }
      if (static_cast<std::size_t>(v) > nn || static_cast<std::size_t>(l) > mm) {
        fail(line_no, "target outside [N]x[M]");
      }
      rot.push_back(static_cast<LabelledDigraph::Code>((v - 1) * m + (l - 1)));
    }
  }
  if (next_content_line(in, line, line_no)) {
    fail(line_no, "more than N*M rotation lines");
  }
  try {
    return LabelledDigraph::from_codes(nn, mm, std::move(rot));
  } catch (const Error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

LabelledDigraph read_rot_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  return read_rot(in);
}

void write_rot(std::ostream& out, const LabelledDigraph& g) {
  const std::size_t m = g.degree();
  out << g.n_vertices() << ' ' << m << '\n';
  const auto codes = g.codes();
  std::string buf;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    buf.clear();
    buf += std::to_string(i / m + 1);
    buf += ' ';
    buf += std::to_string(i % m + 1);
    buf += ' ';
    buf += std::to_string(codes[i] / m + 1);
    buf += ' ';
    buf += std::to_string(codes[i] % m + 1);
    buf += '\n';
    out << buf;
  }
}

void write_rot_file(const std::filesystem::path& path, const LabelledDigraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path.string());
  write_rot(out, g);
  if (!out) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace xforge
