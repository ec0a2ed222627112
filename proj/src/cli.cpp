#include "trigfit/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "trigfit/curve.hpp"
#include "trigfit/errors.hpp"
#include "trigfit/fft.hpp"
#include "trigfit/levinson.hpp"
#include "trigfit/oracle.hpp"
#include "trigfit/sequence2d.hpp"

namespace trigfit::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

struct Table {
  std::vector<std::size_t> lines;  // 1-based source line per row
  std::vector<std::vector<double>> rows;
};

// Comma-separated numeric table. Blank lines and '#' comments are skipped; the
// first remaining line may be a header.
Table read_table(const std::string& path, std::size_t min_cols, std::size_t max_cols) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputFormat, "cannot open " + path);
  Table t;
  std::string raw;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, ',');
    std::vector<double> row;
    bool numeric = true;
    for (auto f : fields) {
      auto v = parse_number(f);
      if (!v) {
        numeric = false;
        break;
      }
      row.push_back(*v);
    }
    const bool header = first && !numeric;
    first = false;
    if (header) continue;
    const std::string where = path + ": line " + std::to_string(lineno) + ": ";
    if (!numeric) throw Error(ErrorCode::InputFormat, where + "malformed number in '" + std::string(line) + "'");
    if (row.size() < min_cols || row.size() > max_cols) {
      throw Error(ErrorCode::InputFormat, where + "expected " + std::to_string(min_cols) +
                                              (min_cols == max_cols ? "" : "-" + std::to_string(max_cols)) +
                                              " columns, got " + std::to_string(row.size()));
    }
    for (double v : row) {
      if (!std::isfinite(v)) throw Error(ErrorCode::InputFormat, where + "non-finite value");
    }
    t.lines.push_back(lineno);
    t.rows.push_back(std::move(row));
  }
  if (t.rows.empty()) throw Error(ErrorCode::InputFormat, path + ": no data rows");
  return t;
}

std::vector<std::size_t> sort_order(const std::vector<double>& x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  return idx;
}

template <typename T>
std::vector<T> permuted(const std::vector<T>& v, const std::vector<std::size_t>& order) {
  std::vector<T> out;
  out.reserve(order.size());
  for (auto i : order) out.push_back(v[i]);
  return out;
}

// Affine map onto [0,1) keeping the last point one mean spacing short of 1.
void normalize_points(std::vector<double>& x) {
  if (x.size() < 2) {
    std::fill(x.begin(), x.end(), 0.0);
    return;
  }
  const auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  const double a = *lo, span = *hi - *lo;
  if (span <= 0.0) throw Error(ErrorCode::DegenerateSet, "cannot normalize coincident points");
  const double scale = span * static_cast<double>(x.size()) / static_cast<double>(x.size() - 1);
  for (double& v : x) v = (v - a) / scale;
}

struct Samples {
  std::vector<double> x;
  std::vector<Complex> s;
  std::optional<std::vector<double>> w;
};

std::vector<double> read_weights(const WeightsSpec& spec, std::size_t count) {
  const auto t = read_table(spec.path, 1, 1);
  if (t.rows.size() != count) {
    throw Error(ErrorCode::LengthMismatch, spec.path + ": " + std::to_string(t.rows.size()) +
                                               " weights for " + std::to_string(count) + " samples");
  }
  std::vector<double> w;
  for (const auto& r : t.rows) w.push_back(r[0]);
  return w;
}

// Sorted samples from an x[,re[,im]] table, weights carried through the sort.
Samples load_samples(const std::string& path, const WeightsSpec& weights, bool normalize,
                     std::size_t min_cols) {
  const auto t = read_table(path, min_cols, 3);
  Samples out;
  for (const auto& r : t.rows) {
    out.x.push_back(r[0]);
    out.s.emplace_back(r.size() > 1 ? r[1] : 0.0, r.size() > 2 ? r[2] : 0.0);
  }
  if (weights.mode == "file") out.w = read_weights(weights, out.x.size());
  const auto order = sort_order(out.x);
  out.x = permuted(out.x, order);
  out.s = permuted(out.s, order);
  if (out.w) out.w = permuted(*out.w, order);
  if (normalize) normalize_points(out.x);
  return out;
}

SampleSet1D make_set(Samples in, const WeightsSpec& weights) {
  if (weights.mode == "uniform") return SampleSet1D::with_uniform_weights(std::move(in.x), std::move(in.s));
  return SampleSet1D::validate(std::move(in.x), std::move(in.s), std::move(in.w));
}

void write_text(const std::string& path, const std::string& content) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InputFormat, "cannot write " + path);
  out << content;
  if (!out) throw Error(ErrorCode::InputFormat, "failed writing " + path);
}

std::string grid_x(std::size_t j, std::size_t n) {
  return format_double(static_cast<double>(j) / static_cast<double>(n));
}

Json report(const TrigPolynomial& poly, bool converged, double achieved_eps,
            const std::vector<std::pair<int, double>>& history, const std::string& mode) {
  Json j;
  j["degree"] = poly.degree();
  j["converged"] = converged;
  j["achieved_eps"] = achieved_eps;
  Json coeffs = Json::array();
  for (int k = -poly.degree(); k <= poly.degree(); ++k) {
    const Complex c = poly.coefficient(k);
    coeffs.push_back(Json{{"k", k}, {"re", c.real()}, {"im", c.imag()}});
  }
  j["coefficients"] = std::move(coeffs);
  Json hist = Json::array();
  // level is the system dimension 2M+1 of each completed degree
  for (const auto& [m, eps] : history) hist.push_back(Json::array({2 * m + 1, eps}));
  j["residual_history"] = std::move(hist);
  j["weights_mode"] = mode;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool numerical(ErrorCode code) {
  return code == ErrorCode::Breakdown || code == ErrorCode::SingularSystem ||
         code == ErrorCode::ZeroPivot || code == ErrorCode::RankDeficient;
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return numerical(e.code()) ? kBreakdown : kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

void check_grid(std::optional<std::size_t> grid, std::optional<int> max_degree) {
  if (grid && *grid == 0) throw Error(ErrorCode::GridTooSmall, "grid size must be positive");
  if (grid && max_degree && *grid < 2 * static_cast<std::size_t>(*max_degree) + 1) {
    throw Error(ErrorCode::GridTooSmall, "grid size " + std::to_string(*grid) + " < 2*max_degree+1");
  }
}

std::vector<double> parse_targets(const std::string& spec) {
  std::string text = spec;
  if (fs::is_regular_file(spec)) {
    std::ifstream in(spec);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::vector<double> out;
  std::istringstream lines(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    const auto l = trim(line);
    if (l.empty() || l.front() == '#') continue;
    for (auto f : split(l, ',')) {
      if (trim(f).empty()) continue;
      auto v = parse_number(f);
      if (!v) {
        throw Error(ErrorCode::InputFormat,
                    "targets: line " + std::to_string(lineno) + ": malformed number '" + std::string(trim(f)) + "'");
      }
      out.push_back(*v);
    }
  }
  if (out.empty()) throw Error(ErrorCode::InputFormat, "no target lines given");
  return out;
}

}  // namespace

WeightsSpec WeightsSpec::parse(const std::string& text) {
  if (text == "voronoi" || text == "uniform") return {text, {}};
  if (text.rfind("file:", 0) == 0 && text.size() > 5) return {"file", text.substr(5)};
  throw Error(ErrorCode::InvalidArgument, "weights must be voronoi, uniform or file:PATH, got '" + text + "'");
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

unsigned threads_from_env() {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const char* env = std::getenv("TRIGFIT_THREADS");
  if (!env || !*env) return hw;
  unsigned v = 0;
  const std::string_view s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
    throw Error(ErrorCode::InvalidArgument, "TRIGFIT_THREADS must be a positive integer, got '" + std::string(s) + "'");
  }
  return v;
}

TrigPolynomial read_coefficients_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InputFormat, "cannot open " + path);
  const auto j = Json::parse(in);
  const int degree = j.at("degree").get<int>();
  std::vector<Complex> c(2 * static_cast<std::size_t>(degree) + 1);
  for (const auto& e : j.at("coefficients")) {
    const int k = e.at("k").get<int>();
    if (k < -degree || k > degree) throw Error(ErrorCode::InputFormat, "coefficient index out of range");
    c[static_cast<std::size_t>(k + degree)] = {e.at("re").get<double>(), e.at("im").get<double>()};
  }
  return TrigPolynomial(std::move(c));
}

int cmd_fit1d(const Fit1dConfig& config, std::ostream& err) {
  return guarded(err, [&] {
    const NoiseSpec noise(config.epsilon);
    check_grid(config.grid_size, config.max_degree);
    const auto samples = make_set(load_samples(config.input, config.weights, config.normalize, 2), config.weights);

    auto emit = [&](const TrigPolynomial& poly, bool converged, double eps,
                    const std::vector<std::pair<int, double>>& history) {
      const std::size_t n = config.grid_size.value_or(default_grid_size(poly.degree()));
      const auto grid = evaluate_on_grid(poly, n);
      write_text(config.out_json, dump(report(poly, converged, eps, history, config.weights.mode)));
      std::string csv = "x,re,im\n";
      for (std::size_t j = 0; j < n; ++j) {
        csv += grid_x(j, n) + "," + format_double(grid[j].real()) + "," + format_double(grid[j].imag()) + "\n";
      }
      write_text(config.out_grid, csv);
    };

    try {
      const auto res = fit(samples, noise, FitOptions{config.max_degree, false});
      emit(res.poly, res.converged, res.achieved_eps, res.residual_history);
      if (!res.converged) {
        err << "warning: no degree <= " << res.degree() << " reached epsilon " << config.epsilon
            << " (achieved " << res.achieved_eps << ")\n";
        return static_cast<int>(kNotConverged);
      }
      return static_cast<int>(kOk);
    } catch (const BreakdownError& e) {
      const double eps = e.history().empty() ? 1.0 : std::sqrt(e.history().back().second);
      emit(e.last_solution(), false, eps, e.history());
      err << "error: " << e.what() << "\n";
      return static_cast<int>(kBreakdown);
    }
  });
}

int cmd_curve(const CurveConfig& config, std::ostream& err) {
  return guarded(err, [&] {
    const NoiseSpec noise(config.epsilon);
    check_grid(config.grid_size, config.max_degree);
    const auto t = read_table(config.input, 2, 2);
    std::vector<Point2> pts;
    for (const auto& r : t.rows) pts.push_back({r[0], r[1]});
    CurveFitOptions opts;
    opts.max_degree = config.max_degree;
    opts.grid_size = config.grid_size;
    const auto res = fit_curve(BoundaryPoints(std::move(pts)), noise, opts);

    auto j = report(res.fit.poly, res.fit.converged, res.fit.achieved_eps, res.fit.residual_history, "voronoi");
    j["length"] = res.param.length;
    write_text(config.out_json, dump(j));
    std::string csv = "x,y\n";
    for (const auto& p : res.contour) csv += format_double(p.x) + "," + format_double(p.y) + "\n";
    write_text(config.out_grid, csv);
    if (!res.fit.converged) {
      err << "warning: contour fit did not reach epsilon " << config.epsilon << "\n";
      return static_cast<int>(kNotConverged);
    }
    return static_cast<int>(kOk);
  });
}

int cmd_seq(const SeqConfig& config, std::ostream& err) {
  return guarded(err, [&] {
    const NoiseSpec noise(config.epsilon);
    if (!fs::is_directory(config.input_dir)) {
      throw Error(ErrorCode::InputFormat, "not a directory: " + config.input_dir);
    }
    const auto targets = parse_targets(config.targets);
    for (double t : targets) {
      if (!(t >= 0.0 && t < 1.0)) throw Error(ErrorCode::OutOfDomain, "target line " + format_double(t) + " outside [0,1)");
    }

    struct Candidate {
      double tau;
      std::string file;
    };
    std::vector<Candidate> files;
    Json dropped = Json::array();
    for (const auto& entry : fs::directory_iterator(config.input_dir)) {
      if (!entry.is_regular_file() || entry.path().extension() != ".csv") continue;
      const auto name = entry.path().filename().string();
      const auto tau = parse_number(entry.path().stem().string());
      if (!tau) continue;
      if (!(*tau >= 0.0 && *tau < 1.0)) {
        throw Error(ErrorCode::OutOfDomain, "line position " + name + " outside [0,1)");
      }
      files.push_back({*tau, name});
    }
    std::sort(files.begin(), files.end(), [](const Candidate& a, const Candidate& b) {
      return a.tau != b.tau ? a.tau < b.tau : a.file < b.file;
    });
    for (std::size_t i = 1; i < files.size(); ++i) {
      if (files[i].tau == files[i - 1].tau) {
        throw Error(ErrorCode::NonMonotonePoints, "duplicate line position in " + files[i - 1].file + " and " + files[i].file);
      }
    }
    if (files.empty()) throw Error(ErrorCode::InputFormat, "no <tau>.csv line files in " + config.input_dir);

    // Unreadable line files are dropped here, failing fits below.
    LineSampleGrid grid;
    std::vector<std::string> names;
    for (const auto& f : files) {
      try {
        auto s = load_samples((fs::path(config.input_dir) / f.file).string(), WeightsSpec{}, false, 3);
        grid.per_line_samples.push_back(SampleSet1D::validate(std::move(s.x), std::move(s.s)));
        grid.line_positions.push_back(f.tau);
        names.push_back(f.file);
      } catch (const Error& e) {
        dropped.push_back(Json{{"tau", f.tau}, {"file", f.file}, {"error", std::string(to_string(e.code()))}, {"reason", e.what()}});
        err << "warning: dropped " << f.file << ": " << e.what() << "\n";
      }
    }
    if (grid.line_positions.empty()) throw Error(ErrorCode::InputFormat, "no readable line files in " + config.input_dir);
    grid.target_lines = targets;

    auto fits = fit_lines(grid, noise, config.max_line_degree, config.threads);
    Json lines = Json::array();
    bool all_converged = true;
    for (std::size_t j = 0; j < fits.size(); ++j) {
      const auto& lf = fits[j];
      if (!lf.usable()) {
        dropped.push_back(Json{{"tau", lf.tau}, {"file", names[j]}, {"error", std::string(to_string(*lf.error))}, {"reason", lf.reason}});
        err << "warning: dropped " << names[j] << ": " << lf.reason << "\n";
        continue;
      }
      all_converged = all_converged && lf.fit->converged;
      lines.push_back(Json{{"tau", lf.tau},
                           {"file", names[j]},
                           {"degree", lf.fit->degree()},
                           {"converged", lf.fit->converged},
                           {"achieved_eps", lf.fit->achieved_eps}});
    }
    if (lines.empty()) throw Error(ErrorCode::DegenerateSet, "no usable line fits");

    const int cross = config.cross_degree.value_or(default_cross_degree(fits));
    const std::size_t n = config.grid_size.value_or(default_u_grid(fits));
    const auto res = recover_cross(grid, std::move(fits), cross, n, config.threads);

    fs::create_directories(config.out_dir);
    Json target_list = Json::array();
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const std::string file = "target_" + std::to_string(i) + ".csv";
      std::string csv = "x,y\n";
      for (const auto& z : res.recovered_lines[i]) csv += format_double(z.real()) + "," + format_double(z.imag()) + "\n";
      write_text((fs::path(config.out_dir) / file).string(), csv);
      target_list.push_back(Json{{"tau", targets[i]}, {"file", file}});
    }
    Json summary;
    summary["lines"] = std::move(lines);
    summary["dropped"] = std::move(dropped);
    summary["cross_degree"] = res.cross_degree;
    summary["u_grid_size"] = res.u_grid_size;
    summary["targets"] = std::move(target_list);
    write_text((fs::path(config.out_dir) / "summary.json").string(), dump(summary));
    return static_cast<int>(all_converged ? kOk : kNotConverged);
  });
}

int cmd_diag(const DiagConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
    auto raw = load_samples(config.input, config.weights, config.normalize, 1);
    const auto samples = make_set(std::move(raw), config.weights);
    const auto x = samples.points();
    if (2 * static_cast<std::size_t>(config.degree) + 1 > x.size()) {
      throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(config.degree) + " needs 2M+1 <= " +
                                                 std::to_string(x.size()) + " points");
    }
    const auto w = samples.weights();
    const auto spec = oracle::spectrum(oracle::build(x, w, config.degree));
    const double gamma = mesh_norm(x);

    Json j;
    j["r"] = x.size();
    j["degree"] = config.degree;
    j["gamma"] = gamma;
    j["lambda_min"] = spec.lambda_min;
    j["lambda_max"] = spec.lambda_max;
    j["cond"] = spec.cond;
    auto bound_json = [](std::optional<double> b) { return b ? Json(*b) : Json("inapplicable"); };
    j["cond_bound"] = bound_json(oracle::condition_bound_1d(gamma, config.degree));
    j["cond_bound_scaled"] = bound_json(oracle::condition_bound_1d_scaled(gamma, config.degree));
    Json frob;
    frob["voronoi"] = oracle::frobenius_objective(x, voronoi_weights(x), config.degree);
    frob["uniform"] = oracle::frobenius_objective(x, uniform_weights(x.size()), config.degree);
    if (config.weights.mode == "file") frob["file"] = oracle::frobenius_objective(x, w, config.degree);
    j["frobenius"] = std::move(frob);
    j["weights_mode"] = config.weights.mode;
    if (config.out_json.empty()) {
      out << dump(j);
    } else {
      write_text(config.out_json, dump(j));
    }
    return static_cast<int>(kOk);
  });
}

}  // namespace trigfit::cli
