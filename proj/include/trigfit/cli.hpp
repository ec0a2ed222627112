#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "trigfit/polynomial.hpp"

namespace trigfit::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kBreakdown = 2,
  kNotConverged = 3,
};

/// "voronoi", "uniform" or "file:<path>".
struct WeightsSpec {
  std::string mode = "voronoi";
  std::string path;

  static WeightsSpec parse(const std::string& text);
};

struct Fit1dConfig {
  std::string input;
  double epsilon = 0.0;
  WeightsSpec weights;
  std::optional<int> max_degree;  // empty means auto
  std::optional<std::size_t> grid_size;
  bool normalize = false;
  std::string out_json;
  std::string out_grid;
};

struct CurveConfig {
  std::string input;
  double epsilon = 0.0;
  std::optional<int> max_degree;
  std::optional<std::size_t> grid_size;
  std::string out_json;
  std::string out_grid;
};

struct SeqConfig {
  std::string input_dir;
  std::string targets;  // file path or comma-separated list
  double epsilon = 0.0;
  std::optional<int> cross_degree;
  std::optional<int> max_line_degree;
  std::optional<std::size_t> grid_size;
  std::string out_dir;
  unsigned threads = 1;
};

struct DiagConfig {
  std::string input;
  int degree = 0;
  WeightsSpec weights;
  bool normalize = false;
  std::string out_json;  // empty writes to stdout
};

int cmd_fit1d(const Fit1dConfig& config, std::ostream& err);
int cmd_curve(const CurveConfig& config, std::ostream& err);
int cmd_seq(const SeqConfig& config, std::ostream& err);
int cmd_diag(const DiagConfig& config, std::ostream& out, std::ostream& err);

/// TRIGFIT_THREADS if set (must be a positive integer), else the hardware
/// concurrency. Throws Error(InvalidArgument) on a malformed value.
unsigned threads_from_env();

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Coefficients from a fit1d/curve JSON report.
TrigPolynomial read_coefficients_json(const std::string& path);

}  // namespace trigfit::cli
