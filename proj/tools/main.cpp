#include <cstdio>
#include <iostream>
#include <sstream>

#include "cli.hpp"
#include "simplexft/errors.hpp"

namespace simplexft::cli {

std::string format_real(double x, int precision) {
  std::ostringstream os;
  os.precision(precision);
  os << (x == 0.0 ? 0.0 : x);
  return os.str();
}

std::string format_complex(std::complex<double> z, int precision) {
  return "(" + format_real(z.real(), precision) + ", " + format_real(z.imag(), precision) + ")";
}

MultiIndex to_multi_index(const std::vector<int>& v) {
  std::vector<unsigned> out;
  for (const int e : v) {
    if (e < 0) {
      throw ParameterRangeError("multi-index entries must be non-negative");
    }
    out.push_back(static_cast<unsigned>(e));
  }
  return MultiIndex(std::move(out));
}

} // namespace simplexft::cli

int main(int argc, char** argv) {
  using namespace simplexft::cli;
  CLI::App app{"Orthogonal polynomials on the simplex, their Fourier transforms and the _rS family"};
  app.require_subcommand(1);
  int exit_code = kExitOk;
  register_eval(app, exit_code);
  register_table(app, exit_code);
  register_verify(app, exit_code);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const simplexft::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return exit_code;
}
