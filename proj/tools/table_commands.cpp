#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "simplexft/classical_poly.hpp"
#include "simplexft/errors.hpp"
#include "simplexft/fourier.hpp"
#include "simplexft/simplex_poly.hpp"

namespace simplexft::cli {
namespace {

struct TableArgs {
  std::string format = "csv";
  std::string output;
  int precision = 17;
  int r = 1;
  int max_degree = 2;
  int max_n = 3;
  double spacing = 0.1;
  std::vector<int> index;
  std::vector<double> alpha;
  std::vector<double> a_vec;
  double a = 0.5;
  double b = 0.5;
  double c = 0.5;
  double d = 0.5;
  std::vector<double> x;
  double x_min = -3.0;
  double x_max = 3.0;
  int points = 13;
};

// Column names plus rows of already formatted decimal strings.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

void emit(const Table& t, const TableArgs& args) {
  std::ostringstream os;
  if (args.format == "csv") {
    for (std::size_t k = 0; k < t.columns.size(); ++k) {
      os << (k ? "," : "") << t.columns[k];
    }
    os << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t k = 0; k < row.size(); ++k) {
        os << (k ? "," : "") << row[k];
      }
      os << "\n";
    }
  } else {
    // Values stay decimal strings so JSON and CSV carry identical digits.
    nlohmann::ordered_json j;
    j["columns"] = t.columns;
    j["rows"] = t.rows;
    os << j.dump() << "\n";
  }
  if (args.output.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream file(args.output);
  if (!file) {
    throw ParameterRangeError("cannot open output file " + args.output);
  }
  file << os.str();
}

std::string label(const MultiIndex& n) {
  std::string s = "P[";
  for (std::size_t k = 0; k < n.size(); ++k) {
    s += (k ? " " : "") + std::to_string(n[k]);
  }
  return s + "]";
}

// Lattice points k * spacing with sum <= 1, lexicographic.
void lattice(std::size_t r, long steps, std::vector<long>& current, std::vector<std::vector<long>>& out) {
  if (current.size() == r) {
    out.push_back(current);
    return;
  }
  long used = 0;
  for (const long v : current) {
    used += v;
  }
  for (long k = 0; used + k <= steps; ++k) {
    current.push_back(k);
    lattice(r, steps, current, out);
    current.pop_back();
  }
}

Table simplex_table(const TableArgs& args) {
  if (args.r < 1 || args.max_degree < 0) {
    throw ParameterRangeError("table simplex: need --r >= 1 and --max-degree >= 0");
  }
  const auto r = static_cast<std::size_t>(args.r);
  const double inv = 1.0 / args.spacing;
  const long steps = std::lround(inv);
  if (!(args.spacing > 0.0) || std::abs(inv - static_cast<double>(steps)) > 1e-9 * inv) {
    throw ParameterRangeError("table simplex: --spacing must be 1/k for a positive integer k");
  }
  const AlphaVector alpha(args.alpha.empty() ? std::vector<double>(r + 1, 0.0) : args.alpha);
  const std::vector<MultiIndex> basis = multi_indices_up_to(r, static_cast<unsigned>(args.max_degree));
  Table t;
  for (std::size_t k = 0; k < r; ++k) {
    t.columns.push_back("x" + std::to_string(k + 1));
  }
  for (const MultiIndex& n : basis) {
    t.columns.push_back(label(n));
  }
  std::vector<std::vector<long>> points;
  std::vector<long> current;
  lattice(r, steps, current, points);
  for (const auto& pt : points) {
    std::vector<double> x;
    std::vector<std::string> row;
    for (const long k : pt) {
      x.push_back(static_cast<double>(k) / static_cast<double>(steps));
      row.push_back(format_real(x.back(), args.precision));
    }
    for (const MultiIndex& n : basis) {
      row.push_back(format_real(simplex_poly_eval(n, alpha, x), args.precision));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table hahn_table(const TableArgs& args) {
  if (args.max_n < 0 || args.x.empty()) {
    throw ParameterRangeError("table hahn: need --max-n >= 0 and a non-empty --x list");
  }
  Table t;
  t.columns.push_back("n");
  for (const double x : args.x) {
    const std::string s = format_real(x, args.precision);
    t.columns.push_back("re(x=" + s + ")");
    t.columns.push_back("im(x=" + s + ")");
  }
  for (int n = 0; n <= args.max_n; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (const double x : args.x) {
      const Complex v = hahn_eval(HahnParams{static_cast<unsigned>(n), args.a, args.b, args.c, args.d}, x);
      row.push_back(format_real(v.real(), args.precision));
      row.push_back(format_real(v.imag(), args.precision));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table g_table(const TableArgs& args) {
  if (args.r != 1) {
    throw ParameterRangeError("table g: only r = 1 is tabulated");
  }
  if (args.points < 2 || !(args.x_max > args.x_min)) {
    throw ParameterRangeError("table g: need --points >= 2 and --x-max > --x-min");
  }
  const GParams p{to_multi_index(args.index.empty() ? std::vector<int>{0} : args.index),
                  ParamVector(args.a_vec), AlphaVector(args.alpha)};
  Table t;
  t.columns = {"x", "g"};
  for (int i = 0; i < args.points; ++i) {
    const double x = args.x_min + (args.x_max - args.x_min) * i / (args.points - 1);
    const double xs[1] = {x};
    t.rows.push_back({format_real(x, args.precision), format_real(g_eval(p, xs), args.precision)});
  }
  return t;
}

CLI::App* sub(CLI::App& table, const char* name, const char* about, TableArgs& args) {
  CLI::App* s = table.add_subcommand(name, about);
  s->add_option("--format", args.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  s->add_option("--output,-o", args.output, "Write to a file instead of stdout");
  s->add_option("--precision", args.precision, "Significant digits")->capture_default_str();
  return s;
}

} // namespace

void register_table(CLI::App& app, int& /*exit_code*/) {
  auto args = std::make_shared<TableArgs>();
  CLI::App* table = app.add_subcommand("table", "Tabulate values on a lattice");
  table->require_subcommand(1);

  CLI::App* simplex = sub(*table, "simplex", "Basis elements of total degree <= max on a simplex lattice", *args);
  simplex->add_option("--r", args->r)->capture_default_str();
  simplex->add_option("--max-degree", args->max_degree)->capture_default_str();
  simplex->add_option("--spacing", args->spacing, "Lattice spacing 1/k")->capture_default_str();
  simplex->add_option("--alpha", args->alpha, "Defaults to zeros")->delimiter(',');
  simplex->callback([args] { emit(simplex_table(*args), *args); });

  CLI::App* hahn = sub(*table, "hahn", "p_n(x; a, b, c, d) for n <= max over a list of x", *args);
  hahn->add_option("--max-n", args->max_n)->capture_default_str();
  hahn->add_option("--a", args->a)->capture_default_str();
  hahn->add_option("--b", args->b)->capture_default_str();
  hahn->add_option("--c", args->c)->capture_default_str();
  hahn->add_option("--d", args->d)->capture_default_str();
  hahn->add_option("--x", args->x)->required()->delimiter(',');
  hahn->callback([args] { emit(hahn_table(*args), *args); });

  CLI::App* g = sub(*table, "g", "g_1(x) on a uniform grid", *args);
  g->add_option("--r", args->r)->capture_default_str();
  g->add_option("--n", args->index)->delimiter(',');
  g->add_option("--a", args->a_vec)->required()->delimiter(',');
  g->add_option("--alpha", args->alpha)->required()->delimiter(',');
  g->add_option("--x-min", args->x_min)->capture_default_str();
  g->add_option("--x-max", args->x_max)->capture_default_str();
  g->add_option("--points", args->points)->capture_default_str();
  g->callback([args] { emit(g_table(*args), *args); });
}

} // namespace simplexft::cli
