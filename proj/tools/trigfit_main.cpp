#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "trigfit/cli.hpp"
#include "trigfit/errors.hpp"

namespace {

// "auto" or a nonnegative integer.
std::optional<int> parse_max_degree(const std::string& text) {
  if (text == "auto") return std::nullopt;
  std::size_t used = 0;
  int v = -1;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
  }
  if (used != text.size() || v < 0) {
    throw trigfit::Error(trigfit::ErrorCode::InvalidArgument, "max degree must be 'auto' or a nonnegative integer");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace trigfit::cli;
  CLI::App app{"Adaptive-degree trigonometric least-squares fitting for nonuniform samples"};
  app.require_subcommand(1);

  Fit1dConfig fit1d;
  std::string fit_weights = "voronoi", fit_max = "auto";
  std::size_t fit_grid = 0;
  auto* f = app.add_subcommand("fit1d", "Fit a 1-periodic signal from x,re[,im] samples");
  f->add_option("--input", fit1d.input, "Sample CSV")->required();
  f->add_option("--epsilon", fit1d.epsilon, "Relative residual target in [0,1)")->required();
  f->add_option("--weights", fit_weights, "voronoi | uniform | file:PATH");
  f->add_option("--max-degree", fit_max, "Largest degree tried, or auto");
  f->add_option("--grid", fit_grid, "Evaluation grid size")->check(CLI::PositiveNumber);
  f->add_flag("--normalize", fit1d.normalize, "Map the x range affinely onto [0,1)");
  f->add_option("--out-json", fit1d.out_json, "Coefficient report");
  f->add_option("--out-grid", fit1d.out_grid, "Grid evaluation CSV");

  CurveConfig curve;
  std::string curve_max = "auto";
  std::size_t curve_grid = 0;
  auto* c = app.add_subcommand("curve", "Fit a closed contour from ordered x,y points");
  c->add_option("--input", curve.input, "Contour CSV")->required();
  c->add_option("--epsilon", curve.epsilon, "Relative residual target in [0,1)")->required();
  c->add_option("--max-degree", curve_max, "Largest degree tried, or auto");
  c->add_option("--grid", curve_grid, "Contour samples")->check(CLI::PositiveNumber);
  c->add_option("--out-json", curve.out_json, "Coefficient report");
  c->add_option("--out-grid", curve.out_grid, "Contour CSV");

  SeqConfig seq;
  std::string seq_max = "auto";
  int seq_cross = -1;
  std::size_t seq_grid = 0;
  auto* s = app.add_subcommand("seq", "Recover missing lines of a contour sequence");
  s->add_option("--input-dir", seq.input_dir, "Directory of <tau>.csv files with u,x,y rows")->required();
  s->add_option("--targets", seq.targets, "Target positions: file or comma list")->required();
  s->add_option("--epsilon", seq.epsilon, "Per-line relative residual target")->required();
  s->add_option("--cross-degree", seq_cross, "Degree across lines (default from line count)")
      ->check(CLI::NonNegativeNumber);
  s->add_option("--max-degree", seq_max, "Per-line degree cap, or auto");
  s->add_option("--grid", seq_grid, "Shared u-grid size")->check(CLI::PositiveNumber);
  s->add_option("--out-dir", seq.out_dir, "Output directory")->required();

  DiagConfig diag;
  std::string diag_weights = "voronoi";
  auto* d = app.add_subcommand("diag", "Conditioning report for a sampling set");
  d->add_option("--input", diag.input, "CSV whose first column is x")->required();
  d->add_option("--degree", diag.degree, "Degree M")->required()->check(CLI::NonNegativeNumber);
  d->add_option("--weights", diag_weights, "voronoi | uniform | file:PATH");
  d->add_flag("--normalize", diag.normalize, "Map the x range affinely onto [0,1)");
  d->add_option("--out-json", diag.out_json, "Report path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  try {
    if (f->parsed()) {
      fit1d.weights = WeightsSpec::parse(fit_weights);
      fit1d.max_degree = parse_max_degree(fit_max);
      if (fit_grid) fit1d.grid_size = fit_grid;
      return cmd_fit1d(fit1d, std::cerr);
    }
    if (c->parsed()) {
      curve.max_degree = parse_max_degree(curve_max);
      if (curve_grid) curve.grid_size = curve_grid;
      return cmd_curve(curve, std::cerr);
    }
    if (s->parsed()) {
      seq.max_line_degree = parse_max_degree(seq_max);
      if (seq_cross >= 0) seq.cross_degree = seq_cross;
      if (seq_grid) seq.grid_size = seq_grid;
      seq.threads = threads_from_env();
      return cmd_seq(seq, std::cerr);
    }
    diag.weights = WeightsSpec::parse(diag_weights);
    return cmd_diag(diag, std::cout, std::cerr);
  } catch (const trigfit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
