#include "cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <sstream>

#include "lechain/bethe.hpp"
#include "lechain/correlators.hpp"
#include "lechain/field_theory.hpp"
#include "lechain/le_search.hpp"
#include "lechain/quantum.hpp"

namespace lechain::cli {

namespace {

constexpr double kSingularTol = 1e-12;

std::string label_for(Family family, double eta) {
  if (family == Family::XXX) return "xxx";
  return "eta=" + format_number(eta);
}

std::vector<double> grid_or(const RunConfig& config, const char* fallback) {
  return (config.grid ? *config.grid : parse_grid(fallback)).points();
}

void skip(Table& table, std::vector<Cell> row, const std::string& note) {
  row.push_back(std::string("SKIPPED"));
  row.push_back(note);
  table.warnings.push_back(note);
  table.add(std::move(row));
}

double require_single_eta(const RunConfig& config) {
  if (config.family == Family::XXX) return 1.0;
  if (config.etas.size() != 1) throw ConfigError("xxz model needs exactly one --eta for this command");
  return config.etas.front();
}

Table correlators_xxx(const RunConfig& config) {
  Table t;
  t.columns = {"n", "zz", "kind", "asymptotic", "le_lower", "provenance"};
  for (long n = config.n_min; n <= config.n_max; ++n) {
    const Separation sep(n);
    const CorrelatorValue v = xxx_zz(sep);
    const double lower = v.kind == CorrelatorKind::Exact ? std::abs(v.value) : lukyanov_le_lower(sep);
    t.add({n, v.value, std::string(to_string(v.kind)), xxx_asymptotic_zz(sep).value, lower,
           std::string(to_string(v.kind))});
  }
  return t;
}

Table correlators_xxz(const RunConfig& config) {
  const ChainModel model = xxz_model(require_single_eta(config));
  Table t;
  t.columns = {"n", "xx", "zz", "kind", "le_lower", "provenance"};
  for (long n = config.n_min; n <= config.n_max; ++n) {
    const Separation sep(n);
    const double xx = xxz_xx_asymptotic(model, sep).value;
    const double zz = xxz_zz_asymptotic(model, sep).value;
    const char* kind = to_string(CorrelatorKind::Asymptotic);
    t.add({n, xx, zz, std::string(kind), le_lower_bound(xx, xx, zz), std::string(kind)});
  }
  return t;
}

bool eta_open(double eta) { return eta > 0.0 && eta < 1.0; }

Table figure_eta_sweep(const RunConfig& config) {
  Table t;
  t.columns = {"series", "x", "y", "provenance", "note"};
  const char* fallback = config.which == 2 ? "0.01:1:100" : "0.01:0.99:99";
  for (double eta : grid_or(config, fallback)) {
    switch (config.which) {
      case 1:
        if (!eta_open(eta)) {
          skip(t, {std::string("F"), eta, Cell{}}, "F undefined at eta=" + format_number(eta));
          continue;
        }
        t.add({std::string("F"), eta, amplitude_F(eta), std::string("EXACT"), Cell{}});
        break;
      case 2:
        if (!(eta > 0.0 && eta <= 1.0)) {
          skip(t, {std::string("chi"), eta, Cell{}}, "chi undefined at eta=" + format_number(eta));
          continue;
        }
        t.add({std::string("chi"), eta, susceptibility(eta), std::string("EXACT"), Cell{}});
        break;
      default: {
        const bool pole = std::abs(eta - 2.0 / 3.0) < kSingularTol;
        const std::string series = eta < 2.0 / 3.0 ? "alpha1" : "alpha2";
        if (!eta_open(eta) || pole) {
          skip(t, {series, eta, Cell{}}, series + " singular at eta=" + format_number(eta));
          continue;
        }
        t.add({series, eta, eta < 2.0 / 3.0 ? alpha1(eta) : alpha2(eta), std::string("EXACT"), Cell{}});
      }
    }
  }
  return t;
}

Table figure_theta(const RunConfig& config) {
  std::vector<double> etas = config.family == Family::XXX ? std::vector<double>{1.0} : config.etas;
  if (etas.empty()) throw ConfigError("figure 4 with the xxz model needs at least one --eta");
  Table t;
  t.columns = {"series", "x", "y", "lambda_f", "residual_eps_edge", "residual_ie", "provenance", "note"};
  for (double eta : etas) {
    const double hc = saturation_field(config.family, eta);
    const std::string label = label_for(config.family, eta);
    std::vector<double> fields;
    if (config.grid) {
      fields = config.grid->points();
    } else {
      for (int k = 1; k <= 40; ++k) fields.push_back(hc * k / 40.0);
    }
    for (double h : fields) {
      if (!(h > 0.0) || h > hc) {
        skip(t, {label, h, Cell{}, Cell{}, Cell{}, Cell{}},
             label + ": h=" + format_number(h) + " outside (0, h_c=" + format_number(hc) + "]");
        continue;
      }
      const BetheSolution s = theta_exact(make_model(config.family, eta, h), config.order);
      t.add({label, h, s.theta, s.lambda_f, s.residual_eps_edge, s.residual_ie, std::string("BETHE"), Cell{}});
    }
  }
  return t;
}

}  // namespace

std::vector<double> Grid::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    out.push_back(start);
    return out;
  }
  for (int k = 0; k < count; ++k) out.push_back(k == count - 1 ? stop : start + (stop - start) * k / (count - 1));
  return out;
}

Grid parse_grid(const std::string& text) {
  std::istringstream in(text);
  std::string a, b, c;
  if (!std::getline(in, a, ':') || !std::getline(in, b, ':') || !std::getline(in, c) || c.find(':') != std::string::npos)
    throw ConfigError("grid must be start:stop:count, got '" + text + "'");
  Grid g;
  try {
    std::size_t used = 0;
    g.start = std::stod(a, &used);
    if (used != a.size()) throw ConfigError("bad grid start");
    g.stop = std::stod(b, &used);
    if (used != b.size()) throw ConfigError("bad grid stop");
    g.count = std::stoi(c, &used);
    if (used != c.size()) throw ConfigError("bad grid count");
  } catch (const std::logic_error&) {
    throw ConfigError("grid must be start:stop:count, got '" + text + "'");
  }
  if (g.count < 1) throw ConfigError("grid count must be >= 1");
  if (g.count == 1 ? g.start != g.stop : !(g.start < g.stop))
    throw ConfigError("grid must be increasing, got '" + text + "'");
  return g;
}

void validate(const RunConfig& c) {
  if (c.n_min < 1 || c.n_max < c.n_min) throw ConfigError("need 1 <= n-min <= n-max");
  if (c.order < 8) throw ConfigError("order must be >= 8");
  if (c.field < 0.0) throw ConfigError("field must be >= 0");
  for (double eta : c.etas)
    if (c.family == Family::XXZ && !(eta > 0.0 && eta < 1.0)) throw ConfigError("xxz needs eta in (0, 1)");
  if (c.family == Family::XXX && !c.etas.empty() && (c.etas.size() != 1 || c.etas.front() != 1.0))
    throw ConfigError("xxx model has eta = 1");
  switch (c.command) {
    case Command::Figure:
      if (c.which < 1 || c.which > 4) throw ConfigError("figure must be 1..4");
      break;
    case Command::LESearch:
      if (c.sites < 3 || c.sites > 14) throw ConfigError("le-search needs 3 <= sites <= 14");
      if (c.restarts < 1) throw ConfigError("restarts must be >= 1");
      if (c.pair) {
        const auto [i, j] = *c.pair;
        if (i < 0 || j >= c.sites || i >= j) throw ConfigError("pair must satisfy 0 <= i < j < sites");
      }
      break;
    case Command::Correlators:
    case Command::ConcurrenceTable:
      if (c.field != 0.0) throw ConfigError("this command tabulates zero-field correlators; use --field 0");
      break;
  }
}

void Table::add(std::vector<Cell> row) {
  if (row.size() != columns.size()) throw std::logic_error("row width does not match the header");
  rows.push_back(std::move(row));
}

Table cmd_correlators(const RunConfig& config) {
  return config.family == Family::XXX ? correlators_xxx(config) : correlators_xxz(config);
}

Table cmd_figure(const RunConfig& config) {
  return config.which == 4 ? figure_theta(config) : figure_eta_sweep(config);
}

Table cmd_le_search(const RunConfig& config) {
  const int n = config.sites;
  Eigen::VectorXcd psi;
  if (config.state == StateKind::GHZ) {
    psi = ghz_state(n);
  } else {
    const double eta = require_single_eta(config);
    const FiniteChain chain = make_chain(make_model(config.family, eta, config.field), n, config.boundary);
    psi = ground_state(chain).vector;
  }
  std::vector<std::pair<int, int>> pairs;
  if (config.pair) {
    pairs.push_back(*config.pair);
  } else {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }

  Table t;
  t.columns = {"i",     "j",     "zz",       "qxx",        "qyy", "qzz",       "sigma_i",       "sigma_j",
               "lower", "upper", "wootters", "assistance", "le",  "converged", "restarts_used", "polar",
               "azimuth", "provenance"};
  LESearchOptions options;
  options.restarts = config.restarts;
  options.seed = config.seed;
  for (const auto& [i, j] : pairs) {
    double q[4] = {};
    for (PauliAxis a : {PauliAxis::X, PauliAxis::Y, PauliAxis::Z}) {
      const double raw = expectation(psi, n, a, i, j);
      q[static_cast<int>(a)] = raw - expectation(psi, n, a, i) * expectation(psi, n, a, j);
    }
    const double zz = expectation(psi, n, PauliAxis::Z, i, j);
    const double si = expectation(psi, n, PauliAxis::Z, i), sj = expectation(psi, n, PauliAxis::Z, j);
    const TwoSpinDensity rho = reduced_density(psi, n, i, j);
    const LEResult le = optimize_le(psi, n, i, j, options);
    t.add({long{i}, long{j}, zz, q[1], q[2], q[3], si, sj, le_lower_bound(q[1], q[2], q[3]), le_upper_bound(zz, si, sj),
           wootters_concurrence(rho), assistance_concurrence(rho), le.value, le.converged, long{le.restarts_used},
           le.plan.polar, le.plan.azimuth, std::string("SEARCH")});
  }
  return t;
}

Table cmd_concurrence_table(const RunConfig& config) {
  Table t;
  t.columns = {"n", "concurrence", "le_lower", "vanishing_distance", "provenance", "note"};
  if (config.family == Family::XXX) {
    for (long n = config.n_min; n <= config.n_max; ++n) {
      const Separation sep(n);
      const CorrelatorValue v = xxx_zz(sep);
      const double lower = v.kind == CorrelatorKind::Exact ? std::abs(v.value) : lukyanov_le_lower(sep);
      t.add({n, concurrence_xxx(sep), lower, Cell{}, std::string(to_string(v.kind)), Cell{}});
    }
    return t;
  }
  const ChainModel model = xxz_model(require_single_eta(config));
  const double distance = vanishing_distance_xxz(model.eta);
  for (long n = config.n_min; n <= config.n_max; ++n) {
    const Separation sep(n);
    const CorrelatorTriple triple{xxz_xx_asymptotic(model, sep).value, xxz_zz_asymptotic(model, sep).value, 0.0};
    if (1.0 + triple.G < 2.0 * std::abs(triple.sigma) || 1.0 - triple.G < 2.0 * std::abs(triple.gx)) {
      skip(t, {n, Cell{}, Cell{}, distance},
           "n=" + std::to_string(n) + ": asymptotic correlators are not a physical two-spin state");
      continue;
    }
    const double c = concurrence_from_spectrum(r_eigenvalues_closed(triple).sorted);
    t.add({n, c, le_lower_bound(triple.gx, triple.gx, triple.G), distance, std::string("ASYMPTOTIC"), Cell{}});
  }
  return t;
}

Table run(const RunConfig& config) {
  validate(config);
  switch (config.command) {
    case Command::Correlators: return cmd_correlators(config);
    case Command::Figure: return cmd_figure(config);
    case Command::LESearch: return cmd_le_search(config);
    case Command::ConcurrenceTable: return cmd_concurrence_table(config);
  }
  throw std::logic_error("unknown command");
}

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

struct CsvCell {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(long v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_number(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
  std::string operator()(const std::string& v) const { return csv_field(v); }
  std::string operator()(const std::vector<double>& v) const {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) out += (k ? ";" : "") + format_number(v[k]);
    return out;
  }
};

// Round to the printed precision so JSON and CSV carry the same digits.
double printed(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

struct JsonCell {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(long v) const { return v; }
  nlohmann::ordered_json operator()(double v) const { return printed(v); }
  nlohmann::ordered_json operator()(bool v) const { return v; }
  nlohmann::ordered_json operator()(const std::string& v) const { return v; }
  nlohmann::ordered_json operator()(const std::vector<double>& v) const {
    auto arr = nlohmann::ordered_json::array();
    for (double x : v) arr.push_back(printed(x));
    return arr;
  }
};

}  // namespace

void write_csv(const Table& table, std::ostream& os) {
  for (std::size_t k = 0; k < table.columns.size(); ++k) os << (k ? "," : "") << csv_field(table.columns[k]);
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << std::visit(CsvCell{}, row[k]);
    os << '\n';
  }
}

void write_json(const Table& table, std::ostream& os) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::object();
  for (std::size_t k = 0; k < table.columns.size(); ++k) {
    auto col = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) col.push_back(std::visit(JsonCell{}, row[k]));
    doc[table.columns[k]] = std::move(col);
  }
  os << doc.dump(2) << '\n';
}

void write(const Table& table, Format format, std::ostream& os) {
  if (format == Format::CSV)
    write_csv(table, os);
  else
    write_json(table, os);
}

}  // namespace lechain::cli
