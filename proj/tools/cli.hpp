#ifndef SIMPLEXFT_TOOLS_CLI_HPP
#define SIMPLEXFT_TOOLS_CLI_HPP

#include <CLI11.hpp>

#include <complex>
#include <string>
#include <vector>

#include "simplexft/indices.hpp"

namespace simplexft::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

struct OutputOptions {
  int precision = 17;
};

/// "(re, im)" with `precision` significant digits.
std::string format_complex(std::complex<double> z, int precision);
std::string format_real(double x, int precision);

MultiIndex to_multi_index(const std::vector<int>& v);

void register_eval(CLI::App& app, int& exit_code);
void register_table(CLI::App& app, int& exit_code);
void register_verify(CLI::App& app, int& exit_code);

} // namespace simplexft::cli

#endif // SIMPLEXFT_TOOLS_CLI_HPP
