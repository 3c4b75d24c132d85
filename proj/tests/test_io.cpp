#include <gtest/gtest.h>

#include <sstream>

#include "hnls/io.hpp"
#include "hnls/rng.hpp"

namespace hnls {
namespace {

TEST(CoeffFile, RoundTripIsExact) {
  Rng rng(3);
  const FourierCoeffs c = random_field(6, Ensemble::gaussian, rng);
  std::stringstream buf;
  write_coeffs(buf, c);
  const FourierCoeffs back = read_coeffs(buf);
  EXPECT_EQ(back.half_width(), 6);
  EXPECT_EQ(back.entries(), c.entries());
}

TEST(CoeffFile, CommentsAndBlankLines) {
  std::istringstream in("# header comment\n\nN 2\n 1 -1 0.5 0\n# note\n0 2 0 -1\n\n");
  const FourierCoeffs c = read_coeffs(in);
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(c.at({1, -1}), Complex(0.5, 0.0));
  EXPECT_EQ(c.at({0, 2}), Complex(0.0, -1.0));
}

TEST(CoeffFile, RejectsBadInput) {
  for (const char* text : {"", "# only\n", "M 2\n", "N 0\n", "N x\n", "N 2\n1 1 0.5\n", "N 2\n1 1 0.5 0 9\n",
                           "N 2\n-2 0 1 0\n", "N 2\n3 0 1 0\n", "N 2\n1 1 nanx 0\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_coeffs(in), ValidationError) << '"' << text << '"';
  }
  EXPECT_THROW(read_coeffs_file("/nonexistent/dir/file.txt"), ValidationError);
}

}  // namespace
}  // namespace hnls
