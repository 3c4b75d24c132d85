#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace hnls::cli {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("hnls_cli_test_" + name);
  fs::remove_all(p);
  return p;
}

int invoke(std::vector<std::string> args, std::string* errors = nullptr) {
  args.insert(args.begin(), "hnls");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), err);
  if (errors) *errors = err.str();
  return code;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

TEST(NList, Syntax) {
  EXPECT_EQ(parse_n_list("3..6"), (std::vector<i64>{3, 4, 5, 6}));
  EXPECT_EQ(parse_n_list("8..64*2"), (std::vector<i64>{8, 16, 32, 64}));
  EXPECT_EQ(parse_n_list("1,5..6,9"), (std::vector<i64>{1, 5, 6, 9}));
  EXPECT_EQ(parse_n_list("7"), (std::vector<i64>{7}));
  for (const char* bad : {"", "a", "3..", "6..3", "2..8*1", "0..8*2", "4,,5"})
    EXPECT_THROW(parse_n_list(bad), ValidationError) << bad;
}

TEST(Lattice, SmallBoxRows) {
  const fs::path dir = scratch("lattice");
  ASSERT_EQ(invoke({"lattice", "--n", "2", "--bound", "4", "--out", dir.string()}), 0);
  const std::string csv = slurp(dir / "lattice.csv");
  EXPECT_NE(csv.find("2,0,9,closed_form\n"), std::string::npos);
  EXPECT_NE(csv.find("2,2,0,divisor\n"), std::string::npos);
  EXPECT_NE(csv.find("2,4,2,divisor\n"), std::string::npos);
  EXPECT_TRUE(fs::exists(dir / "manifest.json"));
  EXPECT_TRUE(fs::exists(dir / "lattice_extremes.json"));
}

TEST(Lattice, BothMethodsAgreeRowByRow) {
  const fs::path dir = scratch("lattice_both");
  ASSERT_EQ(invoke({"lattice", "--n", "8", "--bound", "64", "--method", "both", "--out", dir.string()}), 0);
  std::ifstream f(dir / "lattice.csv");
  std::string header, brute, divisor;
  std::getline(f, header);
  EXPECT_EQ(header, "N,l,count,method");
  int pairs = 0;
  while (std::getline(f, brute) && std::getline(f, divisor)) {
    auto strip = [](const std::string& row) { return row.substr(0, row.rfind(',')); };
    EXPECT_EQ(strip(brute), strip(divisor));
    ++pairs;
  }
  EXPECT_EQ(pairs, 129);
  const auto ext = Json::parse(slurp(dir / "lattice_extremes.json"));
  EXPECT_TRUE(ext["methods_agree"].get<bool>());
}

TEST(Strichartz, SameSeedGivesIdenticalBytes) {
  const fs::path a = scratch("str_a"), b = scratch("str_b"), c = scratch("str_c");
  const std::vector<std::string> args{"strichartz", "--n", "2..8*2", "--trials", "3", "--seed", "5"};
  auto with = [&](const fs::path& dir, std::vector<std::string> extra) {
    auto v = args;
    v.insert(v.end(), {"--out", dir.string()});
    v.insert(v.end(), extra.begin(), extra.end());
    return invoke(v);
  };
  ASSERT_EQ(with(a, {}), 0);
  ASSERT_EQ(with(b, {}), 0);
  ASSERT_EQ(with(c, {"--threads", "3"}), 0);
  for (const char* f : {"strichartz.csv", "strichartz_summary.json", "strichartz.svg"}) {
    EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    EXPECT_EQ(slurp(a / f), slurp(c / f)) << f;
  }
  const auto manifest = Json::parse(slurp(a / "manifest.json"));
  EXPECT_EQ(manifest["command"], "strichartz");
  EXPECT_EQ(manifest["seed"], 5);
  EXPECT_EQ(manifest["outputs"].size(), 3u);
}

TEST(Strichartz, ExtremizerOnlySlope) {
  const fs::path dir = scratch("str_ext");
  ASSERT_EQ(invoke({"strichartz", "--n", "8..256*2", "--trials", "1", "--ensemble", "extremizer", "--out",
                    dir.string()}),
            0);
  const auto s = Json::parse(slurp(dir / "strichartz_summary.json"));
  EXPECT_NEAR(s["slope"].get<double>(), 0.25, 0.01);
}

TEST(Extremizer, MatchesClosedForm) {
  const fs::path dir = scratch("ext");
  ASSERT_EQ(invoke({"extremizer", "--n", "64", "--format", "json", "--out", dir.string()}), 0);
  const auto rows = Json::parse(slurp(dir / "extremizer.json"));
  ASSERT_EQ(rows.size(), 1u);
  const double expected = phi_l4_closed_form(64) / std::sqrt(129.0);
  EXPECT_NEAR(rows[0]["ratio"].get<double>() / expected, 1.0, 1e-12);
}

TEST(Picard, SlopeForHalf) {
  const fs::path dir = scratch("picard");
  ASSERT_EQ(invoke({"picard", "--n", "8..512", "--s", "0.5", "--t", "1", "--check-quadrature", "8", "--out",
                    dir.string()}),
            0);
  const auto s = Json::parse(slurp(dir / "picard_summary.json"));
  EXPECT_NEAR(s["slope"].get<double>(), 1.5, 0.03);
  for (const auto& c : s["quadrature_check"]) EXPECT_LT(c["relative_error"].get<double>(), 1e-10);
}

TEST(Nls, ZeroCouplingIsFreeFlowAndRoundTrips) {
  const fs::path dir = scratch("nls");
  ASSERT_EQ(invoke({"nls", "--mu", "0", "--grid", "16", "--dt", "0.01", "--t-end", "0.5", "--out", dir.string()}), 0);
  const auto check = Json::parse(slurp(dir / "nls_free_check.json"));
  EXPECT_LT(check["relative_error_vs_free_flow"].get<double>(), 1e-12);

  // Feed the final state back in as input.
  const fs::path again = scratch("nls_again");
  ASSERT_EQ(invoke({"nls", "--input", (dir / "nls_final.txt").string(), "--grid", "18", "--dt", "0.01", "--t-end",
                    "0.1", "--out", again.string()}),
            0);
  EXPECT_TRUE(fs::exists(again / "nls_trace.csv"));
}

TEST(Galilean, ErrorsAreRoundoff) {
  const fs::path dir = scratch("gal");
  ASSERT_EQ(invoke({"galilean-check", "--n", "8", "--format", "json", "--out", dir.string()}), 0);
  const auto rows = Json::parse(slurp(dir / "galilean.json"));
  ASSERT_EQ(rows.size(), 10u);
  for (const auto& r : rows) EXPECT_LT(r["relative_error"].get<double>(), 1e-10);
}

TEST(ExitCodes, ValidationAndNumerical) {
  const std::string out = scratch("codes").string();
  std::string err;
  EXPECT_EQ(invoke({"lattice", "--n", "0", "--out", out}, &err), 2);
  EXPECT_EQ(invoke({"lattice", "--method", "guess", "--out", out}), 2);
  EXPECT_EQ(invoke({"nosuch"}), 2);
  EXPECT_EQ(invoke({}), 2);
  EXPECT_EQ(invoke({"strichartz", "--n", "9..3", "--out", out}, &err), 2);
  EXPECT_NE(err.find("empty range"), std::string::npos);
  EXPECT_EQ(invoke({"nls", "--grid", "4", "--n", "4", "--out", out}), 2);
  EXPECT_EQ(invoke({"nls", "--input", "/nonexistent/u0.txt", "--out", out}), 2);

  const fs::path bad = scratch("codes_input");
  fs::create_directories(bad);
  std::ofstream(bad / "huge.txt") << "N 1\n0 0 1e160 0\n";
  EXPECT_EQ(invoke({"nls", "--input", (bad / "huge.txt").string(), "--grid", "8", "--dt", "0.1", "--t-end", "0.1",
                    "--out", out},
                   &err),
            3);
  EXPECT_NE(err.find("non-finite"), std::string::npos);
}

}  // namespace
}  // namespace hnls::cli
