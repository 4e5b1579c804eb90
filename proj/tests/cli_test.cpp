#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "hypercat_app.hpp"
#include "oracles.hpp"

using namespace hypercat;
using namespace hypercat::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hypercat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, Coeff) {
  const auto r = invoke({"coeff", "--type", "2,1,1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "C = 495")) << r.out;
  EXPECT_TRUE(contains(r.out, "V=9 E=12 F=4")) << r.out;

  const auto empty = invoke({"coeff", "--type", ""});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_TRUE(contains(empty.out, "C = 1")) << empty.out;

  const auto central = invoke({"coeff", "--type", "2,1", "--central", "--power", "2"});
  EXPECT_TRUE(contains(central.out, "central-3:12 central-4:9")) << central.out;
  EXPECT_TRUE(contains(central.out, "C^(2) = " + power_coeff(TypeVector{{2, 2}, {3, 1}}, 2).str()));

  const auto json = nlohmann::json::parse(invoke({"--format", "json", "coeff", "--type", "2,1"}).out);
  EXPECT_EQ(json["C"], "21");
  EXPECT_EQ(json["type"], nlohmann::json::parse("[2,1]"));
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"coeff"}).code, kExitUsage);
  EXPECT_EQ(invoke({"coeff", "--type", "2,x"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--measure", "face", "--level", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"verify", "--measure", "volume", "--level", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"raney", "rank", "0a"}).code, kExitUsage);
  EXPECT_EQ(invoke({"raney", "rotations", "20"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--format", "xml", "coeff", "--type", "1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--max-faces", "2", "subdigons", "--type", "3", "--mode", "list"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, Verify) {
  const auto r = invoke({"verify", "--measure", "vertex", "--level", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "ZERO\n");
  EXPECT_EQ(invoke({"verify", "--measure", "edge", "--level", "8"}).out, "ZERO\n");
  EXPECT_EQ(invoke({"verify", "--measure", "face", "--level", "4", "--q", "3"}).out, "ZERO\n");
  const auto json = nlohmann::json::parse(invoke({"--format", "json", "verify", "--measure", "edge", "--level", "3"}).out);
  EXPECT_TRUE(json["zero"].get<bool>());
}

TEST(Cli, Table) {
  const auto csv = invoke({"table", "--measure", "vertex", "--level", "5"});
  EXPECT_EQ(csv.code, kExitOk);
  EXPECT_TRUE(contains(csv.out, "level,source,polynomial\n")) << csv.out;
  EXPECT_TRUE(contains(csv.out, "42 t2^5 + 84 t2^3 t3 + 28 t2^2 t4 + 28 t2 t3^2 + 7 t2 t5 + 7 t3 t4 + t6")) << csv.out;
  const auto md = invoke({"--format", "markdown", "table", "--measure", "face", "--level", "2", "--q", "3"});
  EXPECT_EQ(md.code, kExitOk);
  EXPECT_TRUE(contains(md.out, "|")) << md.out;
}

TEST(Cli, Subdigons) {
  EXPECT_EQ(invoke({"subdigons", "--type", "2,1"}).out, "21\ncentral-3:12 central-4:9\n");
  const auto list = invoke({"subdigons", "--type", "1", "--mode", "list"});
  EXPECT_EQ(list.out, "200\n");
  const auto json = nlohmann::json::parse(invoke({"subdigons", "--type", "2,1,1", "--mode", "json"}).out);
  EXPECT_EQ(json.size(), 495u);
}

TEST(Cli, Raney) {
  EXPECT_EQ(invoke({"raney", "rank", "0030130010001000420"}).out, "-4\n");
  EXPECT_EQ(invoke({"raney", "check", "020"}).code, kExitVerifyFailed);
  EXPECT_EQ(invoke({"raney", "check", "202030100"}).code, kExitOk);
  EXPECT_EQ(invoke({"raney", "check", "002010", "--n", "3"}).code, kExitOk);
  EXPECT_EQ(invoke({"raney", "rotations", "0002"}).out, "2 0200\n3 2000\n");

  const auto id = invoke({"raney", "identify", "0030130010001000420", "--cyclic"});
  EXPECT_EQ(id.code, kExitOk);
  EXPECT_EQ(id.out, "(10), 0, 0, (4(200)0(30(1(300(10)))0)0)\n");
  const auto traced = invoke({"raney", "identify", "0030130010001000420", "--cyclic", "--trace"});
  EXPECT_TRUE(contains(traced.out, "0)0(30(1(300(10)))0)0)(10)00(4(20\n")) << traced.out;

  const auto words = invoke({"raney", "enumerate", "--n", "1", "--m2", "2", "--m3", "1"});
  EXPECT_TRUE(contains(words.out, "\n21 lists\n")) << words.out;
  const auto lists = invoke({"raney", "enumerate", "--n", "3", "--m1", "1", "--tail", "1"});
  EXPECT_TRUE(contains(lists.out, "\n15 lists\n")) << lists.out;
}

TEST(Cli, Powers) {
  const auto r = invoke({"powers", "--r", "5", "--m", "3", "--order", "20"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(contains(r.out, "P_5 = 1 - 3 t + t^2")) << r.out;
  EXPECT_TRUE(contains(r.out, "identity through t^20: ZERO")) << r.out;
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"table", "--measure", "edge", "--level", "8"},
      {"--format", "json", "subdigons", "--type", "2,1,1", "--mode", "json"},
      {"raney", "enumerate", "--n", "2", "--m2", "2"},
      {"solve", "--measure", "vertex", "--level", "20", "--t", "1/5"},
  };
  for (const auto& c : commands) {
    const auto a = invoke(c);
    const auto b = invoke(c);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(Solve, QuadraticVertex40) {
  SolveRequest req;
  req.coeffs = {parse_rational("1/5")};
  req.spec = LayerSpec{LevelMeasure::Vertex, 40, std::nullopt};
  const auto exact = solve(req);
  const double root = (5 - std::sqrt(5.0)) / 2;  // smaller root of t a^2 - a + 1 at t = 1/5
  EXPECT_NEAR(exact.alpha, root, 1e-4);
  EXPECT_NEAR(root, 1.3819660113, 1e-10);
  EXPECT_LT(std::abs(exact.residual), 1e-4);

  req.exact = false;
  const auto approx = solve(req);
  EXPECT_NEAR(approx.alpha, exact.alpha, 1e-12);

  const auto text = invoke({"solve", "--measure", "vertex", "--level", "40", "--t", "1/5"});
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_TRUE(contains(text.out, "alpha = 1.381")) << text.out;
}

TEST(Solve, FaceLayersConvergeToBisectionRoot) {
  SolveRequest req;
  req.coeffs = {parse_rational("1/10"), parse_rational("1/50")};
  req.spec = LayerSpec{LevelMeasure::Face, 16, 3};
  const auto report = solve(req);
  const double root = oracle::bisection_root({0.1, 0.02}, 1.0, 1.5);
  EXPECT_LT(std::abs(report.residual), 1e-6);
  EXPECT_NEAR(report.alpha, root, 1e-5);
  // Partial sums increase toward the root; the residual shrinks with them.
  double previous = 1.0;
  for (std::size_t d = 1; d < report.partial_sums.size(); ++d) {
    const double g = std::abs(cli::detail::geometric_value(std::vector<double>{0.1, 0.02}, report.partial_sums[d]));
    EXPECT_LT(g, previous) << d;
    EXPECT_LE(report.partial_sums[d], root + 1e-12);
    previous = g;
  }
}

TEST(Solve, ParseRational) {
  EXPECT_EQ(parse_rational("1/5"), Rational(1, 5));
  EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
  EXPECT_EQ(parse_rational("2e-3"), Rational(1, 500));
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Solve, FaceBoundMustMatchQ) {
  SolveRequest req;
  req.coeffs = {Rational(1, 10), Rational(1, 50)};
  req.spec = LayerSpec{LevelMeasure::Face, 3, 4};
  EXPECT_THROW(solve(req), std::invalid_argument);
  req.coeffs.clear();
  EXPECT_THROW(solve(req), std::invalid_argument);
}
