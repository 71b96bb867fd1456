#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "cli.hpp"
#include "lechain/correlators.hpp"

using namespace lechain;
using namespace lechain::cli;

namespace {

constexpr double pi = std::numbers::pi;

double num(const Cell& c) { return std::get<double>(c); }
std::string str(const Cell& c) { return std::get<std::string>(c); }

std::size_t col(const Table& t, const std::string& name) {
  for (std::size_t k = 0; k < t.columns.size(); ++k)
    if (t.columns[k] == name) return k;
  throw std::out_of_range(name);
}

RunConfig config(Command c) {
  RunConfig r;
  r.command = c;
  return r;
}

namespace fs = std::filesystem;

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / ("lechain_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

int tool(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string(LECHAIN_TOOL) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Grid, Parse) {
  const Grid g = parse_grid("0.5:1.5:3");
  EXPECT_EQ(g.points(), (std::vector<double>{0.5, 1.0, 1.5}));
  EXPECT_EQ(parse_grid("2:2:1").points(), std::vector<double>{2.0});
  for (const char* bad : {"1:0:3", "0:1", "0:1:0", "a:1:2", "0:1:2:3", "1:1:2", "0:1:2x"})
    EXPECT_THROW(parse_grid(bad), ConfigError) << bad;
}

TEST(Format, Numbers) {
  EXPECT_EQ(format_number(-0.5908629074133), "-0.590862907413");
  EXPECT_EQ(format_number(1.5e-5), "1.5e-05");
  EXPECT_EQ(format_number(0.00012345), "0.00012345");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(2.0), "2");
}

TEST(Writers, CsvAndJson) {
  Table t;
  t.columns = {"a", "b", "c", "d"};
  t.add({long{1}, 0.25, std::string("x,y"), std::vector<double>{1.0, 0.5}});
  t.add({Cell{}, true, std::string("q\"r"), std::vector<double>{}});
  std::ostringstream csv, json;
  write_csv(t, csv);
  EXPECT_EQ(csv.str(), "a,b,c,d\n1,0.25,\"x,y\",1;0.5\n,true,\"q\"\"r\",\n");
  write_json(t, json);
  EXPECT_EQ(json.str().substr(0, 20), "{\n  \"a\": [\n    1,\n  ");
  EXPECT_NE(json.str().find("\"d\": [\n    [\n      1.0,\n      0.5\n    ],\n    []\n  ]"), std::string::npos);
}

TEST(Validate, Rejects) {
  RunConfig c = config(Command::Figure);
  c.which = 5;
  EXPECT_THROW(run(c), ConfigError);
  c = config(Command::Correlators);
  c.n_min = 0;
  EXPECT_THROW(run(c), ConfigError);
  c = config(Command::Correlators);
  c.field = 0.2;
  EXPECT_THROW(run(c), ConfigError);
  c = config(Command::LESearch);
  c.sites = 15;
  EXPECT_THROW(run(c), ConfigError);
  c = config(Command::Correlators);
  c.family = Family::XXZ;
  EXPECT_THROW(run(c), ConfigError);
  c.etas = {1.2};
  EXPECT_THROW(run(c), ConfigError);
}

TEST(Correlators, ReferenceConstantsAndBounds) {
  RunConfig c = config(Command::Correlators);
  c.n_max = 6;
  const Table t = run(c);
  ASSERT_EQ(t.rows.size(), 6u);
  const double reference[] = {-0.5908629072, 0.2427190798, -0.2009945090, 0.0346527769};
  for (int k = 0; k < 4; ++k) {
    EXPECT_NEAR(num(t.rows[k][col(t, "zz")]), reference[k], 1e-9);
    EXPECT_NEAR(num(t.rows[k][col(t, "le_lower")]), std::abs(reference[k]), 1e-9);
    EXPECT_EQ(str(t.rows[k][col(t, "provenance")]), "EXACT");
  }
  EXPECT_EQ(str(t.rows[5][col(t, "provenance")]), "SERIES");
}

TEST(Correlators, Xxz) {
  RunConfig c = config(Command::Correlators);
  c.family = Family::XXZ;
  c.etas = {0.5};
  c.n_max = 3;
  const Table t = run(c);
  EXPECT_NEAR(num(t.rows[0][col(t, "xx")]), amplitude_F(0.5), 1e-14);
  EXPECT_EQ(str(t.rows[2][col(t, "provenance")]), "ASYMPTOTIC");
}

TEST(Figure, Susceptibility) {
  RunConfig c = config(Command::Figure);
  c.which = 2;
  c.grid = parse_grid("0.9999:0.9999:1");
  const Table t = run(c);
  EXPECT_NEAR(num(t.rows[0][col(t, "y")]), 1.0 / (pi * pi), 1e-3);
}

TEST(Figure, AmplitudeSkipsEndpoints) {
  RunConfig c = config(Command::Figure);
  c.which = 1;
  c.grid = parse_grid("0:1:5");
  const Table t = run(c);
  ASSERT_EQ(t.rows.size(), 5u);
  EXPECT_EQ(str(t.rows[0][col(t, "provenance")]), "SKIPPED");
  EXPECT_EQ(str(t.rows[4][col(t, "provenance")]), "SKIPPED");
  EXPECT_EQ(t.warnings.size(), 2u);
  EXPECT_NEAR(num(t.rows[2][col(t, "y")]), amplitude_F(0.5), 1e-14);
}

TEST(Figure, AlphaBranchesDiverge) {
  RunConfig c = config(Command::Figure);
  c.which = 3;
  c.grid = parse_grid("0.6:0.7333333333333333:5");
  const Table t = run(c);
  EXPECT_EQ(str(t.rows[2][col(t, "provenance")]), "SKIPPED");
  EXPECT_EQ(str(t.rows[1][0]), "alpha1");
  EXPECT_EQ(str(t.rows[3][0]), "alpha2");
  EXPECT_GT(std::abs(num(t.rows[1][col(t, "y")])), std::abs(num(t.rows[0][col(t, "y")])));
  EXPECT_GT(std::abs(num(t.rows[3][col(t, "y")])), std::abs(num(t.rows[4][col(t, "y")])));
}

TEST(Figure, ThetaXxxMonotone) {
  RunConfig c = config(Command::Figure);
  c.which = 4;
  const Table t = run(c);
  ASSERT_EQ(t.rows.size(), 40u);
  double prev = 1.0;
  for (const auto& row : t.rows) {
    EXPECT_EQ(str(row[col(t, "provenance")]), "BETHE");
    const double theta = num(row[col(t, "y")]);
    EXPECT_GT(theta, prev);
    prev = theta;
  }
  EXPECT_LT(num(t.rows.front()[col(t, "y")]), 1.2);
  EXPECT_EQ(prev, 2.0);
}

TEST(Figure, ThetaSeriesPerEta) {
  RunConfig c = config(Command::Figure);
  c.which = 4;
  c.family = Family::XXZ;
  c.etas = {0.3, 0.8};
  c.grid = parse_grid("0.5:1.5:3");
  const Table t = run(c);
  ASSERT_EQ(t.rows.size(), 6u);
  EXPECT_EQ(str(t.rows[0][0]), "eta=0.3");
  EXPECT_EQ(str(t.rows[1][col(t, "provenance")]), "SKIPPED");
  EXPECT_EQ(str(t.rows[5][col(t, "provenance")]), "BETHE");
}

TEST(ConcurrenceTable, Xxx) {
  RunConfig c = config(Command::ConcurrenceTable);
  c.n_max = 8;
  const Table t = run(c);
  EXPECT_NEAR(num(t.rows[0][col(t, "concurrence")]), 0.1931, 1e-4);
  for (std::size_t k = 1; k < t.rows.size(); ++k) EXPECT_EQ(num(t.rows[k][col(t, "concurrence")]), 0.0);
  for (const auto& row : t.rows) EXPECT_GE(num(row[col(t, "le_lower")]), num(row[col(t, "concurrence")]));
}

TEST(ConcurrenceTable, XxzVanishingDistance) {
  RunConfig c = config(Command::ConcurrenceTable);
  c.family = Family::XXZ;
  c.etas = {0.5};
  const Table t = run(c);
  const double expect = std::pow(2.0 * amplitude_F(0.5), 2.0);
  for (const auto& row : t.rows) {
    EXPECT_NEAR(num(row[col(t, "vanishing_distance")]), expect, 1e-9);
    if (str(row[col(t, "provenance")]) != "SKIPPED") {
      EXPECT_GE(num(row[col(t, "le_lower")]), num(row[col(t, "concurrence")]));
    }
  }
}

TEST(LESearch, GhzAndRing) {
  RunConfig c = config(Command::LESearch);
  c.state = StateKind::GHZ;
  c.sites = 4;
  c.pair = std::make_pair(0, 1);
  const Table g = run(c);
  ASSERT_EQ(g.rows.size(), 1u);
  EXPECT_GE(num(g.rows[0][col(g, "le")]), 0.999);
  EXPECT_EQ(std::get<bool>(g.rows[0][col(g, "converged")]), true);
  EXPECT_EQ(std::get<std::vector<double>>(g.rows[0][col(g, "polar")]).size(), 2u);

  c.state = StateKind::Ground;
  c.sites = 6;
  const Table r = run(c);
  const double le = num(r.rows[0][col(r, "le")]);
  EXPECT_GE(le, num(r.rows[0][col(r, "lower")]) - 1e-6);
  EXPECT_LE(le, num(r.rows[0][col(r, "upper")]) + 1e-6);
  EXPECT_EQ(str(r.rows[0][col(r, "provenance")]), "SEARCH");
}

TEST(Executable, ByteDeterminism) {
  const fs::path dir = scratch();
  for (const std::string args :
       {"correlators --n-max 12", "correlators --model xxz --eta 0.7 --format json", "figure --which 1 --grid 0.1:0.9:9",
        "figure --which 3 --format json", "figure --which 4 --model xxz --eta 0.4 --eta 0.9 --grid 0.2:1.4:4",
        "concurrence-table --model xxz --eta 0.5", "le-search --sites 5 --restarts 6 --seed 3 --format json"}) {
    ASSERT_EQ(tool(args, dir / "a"), 0) << args;
    ASSERT_EQ(tool(args, dir / "b"), 0) << args;
    const std::string a = slurp(dir / "a");
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, slurp(dir / "b")) << args;
  }
  fs::remove_all(dir);
}

TEST(Executable, ExitCodes) {
  const fs::path dir = scratch();
  EXPECT_EQ(tool("correlators", dir / "o"), 0);
  EXPECT_EQ(tool("nonsense", dir / "o"), 2);
  EXPECT_EQ(tool("figure --which 7", dir / "o"), 2);
  EXPECT_EQ(tool("correlators --model xyz", dir / "o"), 2);
  EXPECT_EQ(tool("figure --which 1 --grid 1:0:2", dir / "o"), 2);
  EXPECT_EQ(tool("le-search --sites 4 --pair 0,0", dir / "o"), 2);
  EXPECT_EQ(tool("correlators --out " + (dir / "missing" / "x.csv").string(), dir / "o"), 4);
  EXPECT_EQ(tool("correlators --n-max 3 --out " + (dir / "x.csv").string(), dir / "o"), 0);
  EXPECT_EQ(slurp(dir / "x.csv").substr(0, 5), "n,zz,");
  fs::remove_all(dir);
}
