#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "test_support.hpp"
#include "xforge/error.hpp"
#include "xforge/rot_io.hpp"

namespace xforge {
namespace {

ErrorKind parse_failure(const std::string& text) {
  std::istringstream in(text);
  try {
    read_rot(in);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorKind::IoError;
}

TEST(RotIo, WritesOneBasedRowMajor) {
  const auto g = LabelledDigraph::from_codes(2, 1, {1, 0});
  std::ostringstream out;
  write_rot(out, g);
  EXPECT_EQ(out.str(), "2 1\n1 1 2 1\n2 1 1 1\n");
}

TEST(RotIo, CommentsAndBlankLinesAreSkipped) {
  std::istringstream in("# header comment\n2 1\n\n1 1 2 1\n  # inline\n2 1 1 1\n");
  EXPECT_EQ(read_rot(in), LabelledDigraph::from_codes(2, 1, {1, 0}));
}

TEST(RotIo, RoundTripIsExact) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto g = testing::random_graph(3 + seed, 2 + seed % 4, seed);
    std::stringstream buf;
    write_rot(buf, g);
    EXPECT_EQ(read_rot(buf), g);
  }
}

TEST(RotIo, StrictParsing) {
  EXPECT_EQ(parse_failure(""), ErrorKind::ParseError);
  EXPECT_EQ(parse_failure("2 1\n1 1 2 1\n"), ErrorKind::ParseError);                    // short
  EXPECT_EQ(parse_failure("2 1\n1 1 2 1\n2 1 1 1\n1 1 1 1\n"), ErrorKind::ParseError);  // long
  EXPECT_EQ(parse_failure("2 1\n2 1 1 1\n1 1 2 1\n"), ErrorKind::ParseError);           // order
  EXPECT_EQ(parse_failure("2 1\n1 1 2 1\n2 1 2 1\n"), ErrorKind::ParseError);           // not bijective
  EXPECT_EQ(parse_failure("2 1\n1 1 3 1\n2 1 1 1\n"), ErrorKind::ParseError);           // range
  EXPECT_EQ(parse_failure("2 1\n1 1 2 1 9\n2 1 1 1\n"), ErrorKind::ParseError);         // extra token
  EXPECT_EQ(parse_failure("0 1\n"), ErrorKind::ParseError);
  EXPECT_EQ(parse_failure("2 x\n"), ErrorKind::ParseError);
}

TEST(RotIo, MissingFileIsIoError) {
  try {
    read_rot_file("/nonexistent/graph.rot");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IoError);
  }
}

}  // namespace
}  // namespace xforge
