#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "kinclust/cli.hpp"
#include "support.hpp"

using namespace kinclust;
using namespace kinclust::testing;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "kinclust");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(KINCLUST_DATA_DIR) + "/" + name; }
std::string scratch(const char* name) { return std::string(KINCLUST_SCRATCH_DIR) + "/" + name; }

std::string line_value(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  return "";
}

// "p/q (decimal)" -> exact rational.
Scalar exact_value(const std::string& out) {
  std::string v = line_value(out, "value");
  return parse_scalar(v.substr(0, v.find(' ')));
}

}  // namespace

TEST(Cli, HolesTwoVerticals) {
  auto r = run({"holes", data("two_verticals.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "0 unbounded_left {} 0 1");
  EXPECT_NE(r.out.find("bounded {0} 0 1"), std::string::npos);
  EXPECT_NE(r.out.find("unbounded_right {0,1} 0 1"), std::string::npos);
}

TEST(Cli, HolesFractionsReparse) {
  auto r = run({"holes", data("three_crossing.json")});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("bounded {2} 1/10 9/10"), std::string::npos);
}

TEST(Cli, SdWellSepNotBelowBrute) {
  auto brute = run({"sd", "brute", data("fig3.json"), "-k", "3"});
  auto ws = run({"sd", "wellsep", data("fig3.json"), "-k", "3"});
  auto exact = run({"sd", "exact", data("fig3.json"), "-k", "3"});
  ASSERT_EQ(brute.code, 0) << brute.err;
  ASSERT_EQ(ws.code, 0) << ws.err;
  ASSERT_EQ(exact.code, 0) << exact.err;
  EXPECT_GE(exact_value(ws.out), exact_value(brute.out));
  EXPECT_EQ(exact_value(exact.out), exact_value(brute.out));
  EXPECT_EQ(line_value(brute.out, "value"), "61753/36180 (1.70682697623)");
  EXPECT_EQ(line_value(brute.out, "objective"), "sd");
  EXPECT_EQ(line_value(brute.out, "clusters"), "3");
}

TEST(Cli, MdBsearchFig5) {
  auto r = run({"md", "bsearch", data("fig5.json"), "-k", "2", "--eps", "0.1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_LE(exact_value(r.out), q("2.807"));
  EXPECT_FALSE(line_value(r.out, "interval").empty());
}

TEST(Cli, MdMethods) {
  auto fig5_set = parse_instance(cli::read_file(data("fig5.json")));
  std::string opt = to_exact_string(oracle::brute_opt_md(fig5_set, 2).value);
  auto gp = run({"md", "gp", data("fig5.json"), "-D", opt});
  ASSERT_EQ(gp.code, 0) << gp.err;
  EXPECT_LE(std::stoi(line_value(gp.out, "clusters")), 2);
  auto kc = run({"md", "kcenter", data("fig5.json"), "-k", "2"});
  ASSERT_EQ(kc.code, 0) << kc.err;
  EXPECT_FALSE(line_value(kc.out, "radius").empty());
  auto ws = run({"md", "wellsep", data("fig5.json"), "-k", "2"});
  ASSERT_EQ(ws.code, 0) << ws.err;
  auto brute = run({"md", "brute", data("fig5.json"), "-k", "2"});
  ASSERT_EQ(brute.code, 0) << brute.err;
  EXPECT_EQ(line_value(brute.out, "clustering"), "{0,2} {1,3}");
  EXPECT_GT(exact_value(ws.out), exact_value(brute.out));
}

TEST(Cli, ExactFractionReparses) {
  for (const char* method : {"exact", "wellsep", "brute"}) {
    auto r = run({"sd", method, data("fig4.json"), "-k", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto s = parse_instance(cli::read_file(data("fig4.json")));
    Scalar v = exact_value(r.out);
    if (std::string(method) == "brute") { EXPECT_EQ(v, oracle::brute_opt_sd(s, 3).value); }
    if (std::string(method) == "wellsep") { EXPECT_EQ(v, sd_wellsep_dp(s, 3).value); }
    std::string text = line_value(r.out, "value");
    std::smatch m;
    ASSERT_TRUE(std::regex_match(text, m, std::regex(R"((-?\d+(?:/\d+)?) \((\S+)\))")));
    EXPECT_NEAR(std::stod(m[2].str()), to_double(v), 1e-9 * std::max(1.0, to_double(v)));
  }
}

TEST(Cli, WritesClusteringFile) {
  auto path = scratch("fig3_out.json");
  auto r = run({"sd", "brute", data("fig3.json"), "-k", "3", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  auto s = parse_instance(cli::read_file(data("fig3.json")));
  auto c = parse_clustering(cli::read_file(path), s);
  EXPECT_EQ(sd_value(s, c), ratio(61753, 36180));
}

TEST(Cli, GenRoundTrip) {
  auto path = scratch("gen.json");
  auto r = run({"gen", "-n", "7", "--seed", "99", "--x0-min", "-1/2", "--slope-max", "3", "--name", "g", "-o", path});
  ASSERT_EQ(r.code, 0) << r.err;
  GeneratorConfig cfg;
  cfg.n = 7;
  cfg.seed = 99;
  cfg.x0_lo = ratio(-1, 2);
  cfg.slope_hi = 3;
  auto file = parse_instance_file(cli::read_file(path));
  EXPECT_EQ(file.trajectories, generate_instance(cfg));
  EXPECT_EQ(file.name, std::optional<std::string>("g"));

  auto to_stdout = run({"gen", "-n", "3", "--seed", "1"});
  ASSERT_EQ(to_stdout.code, 0);
  EXPECT_EQ(parse_instance(to_stdout.out).size(), 3u);
}

TEST(Cli, Render) {
  auto svg_path = scratch("fig3.svg");
  auto r = run({"render", data("fig3.json"), "--clusters", data("fig3_clusters.json"), "-o", svg_path});
  ASSERT_EQ(r.code, 0) << r.err;
  auto svg = cli::read_file(svg_path);
  EXPECT_TRUE(xml_well_formed(svg));
  EXPECT_EQ(count_occurrences(svg, "class=\"span\""), 2u);

  auto h = run({"render", data("three_crossing.json"), "--holes", "-o", svg_path});
  ASSERT_EQ(h.code, 0) << h.err;
  EXPECT_EQ(count_occurrences(cli::read_file(svg_path), "class=\"hole\""), 5u);

  auto both = run({"render", data("fig3.json"), "--holes", "--clusters", data("fig3_clusters.json"), "-o", svg_path});
  EXPECT_EQ(both.code, 1);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({}).code, 1);
  auto unknown = run({"holes", data("fig3.json"), "--bogus"});
  EXPECT_EQ(unknown.code, 1);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"sd", "fastest", data("fig3.json"), "-k", "2"}).code, 1);
  EXPECT_EQ(run({"sd", "exact", data("fig3.json")}).code, 1);
  EXPECT_EQ(run({"sd", "exact", data("fig3.json"), "-k", "9"}).code, 1);
  EXPECT_EQ(run({"holes", scratch("missing.json")}).code, 1);
  EXPECT_EQ(run({"md", "gp", data("fig5.json")}).code, 1);
  EXPECT_EQ(run({"md", "gp", data("fig5.json"), "-D", "-1"}).code, 1);
  EXPECT_EQ(run({"md", "bsearch", data("fig5.json")}).code, 1);
  EXPECT_EQ(run({"md", "bsearch", data("fig5.json"), "-k", "2", "--eps", "0"}).code, 1);

  std::ofstream(scratch("bad.json")) << R"({"trajectories":[{"x0":"0","x1":"0"},{"x0":"0","x1":"0"}]})";
  auto dup = run({"holes", scratch("bad.json")});
  EXPECT_EQ(dup.code, 1);
  EXPECT_NE(dup.err.find("identical"), std::string::npos);
}

TEST(Cli, Help) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holes"), std::string::npos);
}
