#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cli.hpp"
#include "lechain/numerics.hpp"

using namespace lechain;
using namespace lechain::cli;

namespace {

void add_model_flags(CLI::App* app, RunConfig& c) {
  static const std::map<std::string, Family> families{{"xxx", Family::XXX}, {"xxz", Family::XXZ}};
  app->add_option("--model", c.family, "xxx or xxz")->transform(CLI::CheckedTransformer(families, CLI::ignore_case));
  app->add_option("--eta", c.etas, "anisotropy eta (repeatable for figure 4)");
  app->add_option("--field", c.field, "magnetic field h");
}

void add_output_flags(CLI::App* app, RunConfig& c) {
  static const std::map<std::string, Format> formats{{"csv", Format::CSV}, {"json", Format::JSON}};
  app->add_option("--format", c.format, "csv or json")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app->add_option("--out", c.out, "output file (default stdout)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlators, critical exponents and localizable entanglement of spin-1/2 chains"};
  app.require_subcommand(1);
  RunConfig c;
  std::string grid;

  auto* corr = app.add_subcommand("correlators", "ground-state correlators and LE lower bounds by distance");
  auto* fig = app.add_subcommand("figure", "figure data: 1 F(eta), 2 chi(eta), 3 alpha1/alpha2, 4 theta(h)");
  auto* le = app.add_subcommand("le-search", "localizable entanglement on a finite chain");
  auto* conc = app.add_subcommand("concurrence-table", "concurrence before measurement by distance");

  for (auto* sub : {corr, fig, le, conc}) {
    add_model_flags(sub, c);
    add_output_flags(sub, c);
  }
  for (auto* sub : {corr, conc}) {
    sub->add_option("--n-min", c.n_min, "smallest separation");
    sub->add_option("--n-max", c.n_max, "largest separation");
  }
  fig->add_option("--which", c.which, "figure number 1..4")->required();
  fig->add_option("--grid", grid, "start:stop:count (eta for 1-3, h for 4)");
  fig->add_option("--order", c.order, "quadrature order of the Bethe solver");

  static const std::map<std::string, Boundary> boundaries{{"open", Boundary::Open}, {"periodic", Boundary::Periodic}};
  static const std::map<std::string, StateKind> states{{"ground", StateKind::Ground}, {"ghz", StateKind::GHZ}};
  std::vector<int> pair;
  le->add_option("--sites", c.sites, "chain length");
  le->add_option("--pair", pair, "marked pair i,j (default: all pairs)")->expected(2)->delimiter(',');
  le->add_option("--boundary", c.boundary, "open or periodic")
      ->transform(CLI::CheckedTransformer(boundaries, CLI::ignore_case));
  le->add_option("--state", c.state, "ground or ghz")->transform(CLI::CheckedTransformer(states, CLI::ignore_case));
  le->add_option("--restarts", c.restarts, "optimizer restarts");
  le->add_option("--seed", c.seed, "seed of the starting plans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? Ok : InvalidConfig;
  }

  Table table;
  try {
    if (corr->parsed()) c.command = Command::Correlators;
    if (fig->parsed()) c.command = Command::Figure;
    if (le->parsed()) c.command = Command::LESearch;
    if (conc->parsed()) c.command = Command::ConcurrenceTable;
    if (!grid.empty()) c.grid = parse_grid(grid);
    if (pair.size() == 2) c.pair = std::make_pair(pair[0], pair[1]);
    table = run(c);
  } catch (const NonConvergence& e) {
    std::cerr << "error: " << e.what() << '\n';
    return NumericalFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return InvalidConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return InvalidConfig;
  }
  for (const auto& w : table.warnings) std::cerr << "warning: skipped " << w << '\n';

  std::ostringstream text;
  write(table, c.format, text);
  if (!c.out) {
    std::cout << text.str();
    return std::cout.flush() ? Ok : IOFailure;
  }
  std::ofstream file(*c.out, std::ios::binary);
  if (!file || !(file << text.str()) || !file.flush()) {
    std::cerr << "error: cannot write " << *c.out << '\n';
    return IOFailure;
  }
  return Ok;
}
