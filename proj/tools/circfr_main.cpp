// Command-line front end: constants, density, mise, regress, bandwidth,
// simulate. Usage problems exit 2; module errors exit 1 with the error name
// on stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circfrechet/bandwidth.hpp"
#include "circfrechet/dataset.hpp"
#include "circfrechet/errors.hpp"
#include "circfrechet/frechet_ll.hpp"
#include "circfrechet/harness.hpp"
#include "circfrechet/kde.hpp"

namespace {

using circfr::format_double;

std::vector<std::size_t> parse_n_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::istringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      const long v = std::stol(tok);
      if (v < 1) throw std::invalid_argument("");
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw circfr::ParseError("bad count '" + tok + "' in n-list");
    }
  }
  if (out.empty()) throw circfr::ParseError("empty n-list");
  return out;
}

// "0.3" or "amise:<density model>" (plug-in oracle bandwidth for that law).
double resolve_bandwidth(const std::string& text, const circfr::DirectionalKernel& kernel,
                         std::size_t n) {
  if (text.rfind("amise:", 0) == 0) {
    const auto model = circfr::DensityModel::parse(text.substr(6));
    return circfr::amise_bandwidth(circfr::score_sf(model), kernel, n);
  }
  try {
    std::size_t consumed = 0;
    const double h = std::stod(text, &consumed);
    if (consumed != text.size() || !(h > 0)) throw std::invalid_argument("");
    return h;
  } catch (const std::exception&) {
    throw circfr::ParseError("bandwidth must be a positive number or 'amise:<model>', got '" +
                             text + "'");
  }
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw circfr::ParseError("cannot write '" + path + "'");
  return file;
}

struct CommonDataFlags {
  std::string input;
  std::string predictor_column = "angle";
  bool degrees = false;
  std::string output;

  circfr::DatasetSchema schema(circfr::SpaceKind space) const {
    circfr::DatasetSchema s;
    s.predictor_column = predictor_column;
    s.angle_unit = degrees ? circfr::AngleUnit::Degrees : circfr::AngleUnit::Radians;
    s.space = space;
    return s;
  }
};

void add_data_flags(CLI::App* cmd, CommonDataFlags& f) {
  cmd->add_option("--input", f.input, "input CSV")->required();
  cmd->add_option("--predictor-column", f.predictor_column, "predictor column name");
  cmd->add_flag("--degrees", f.degrees, "predictor angles are in degrees");
  cmd->add_option("--output", f.output, "output path (default stdout)");
}

int run_constants(const std::string& kernel_name, double h, const std::string& output) {
  const auto kernel = circfr::DirectionalKernel::from_name(kernel_name);
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << "kind,h,j,k,value\n";
  for (int k = 1; k <= 2; ++k) {
    for (int j = 0; j <= 4; ++j) {
      out << "a,," << j << ',' << k << ',' << format_double(circfr::moment_a(kernel, j, k).value)
          << '\n';
    }
  }
  for (int k = 1; k <= 2; ++k) {
    for (int j = 0; j <= 4; ++j) {
      out << "c," << format_double(h) << ',' << j << ',' << k << ','
          << format_double(circfr::normalizing_c(kernel, h, j, k).value) << '\n';
    }
  }
  return 0;
}

int run_density(const CommonDataFlags& data, const std::string& kernel_name,
                const std::string& bandwidth, std::size_t grid) {
  const auto kernel = circfr::DirectionalKernel::from_name(kernel_name);
  const auto sample =
      circfr::load_angle_dataset(data.input, data.schema(circfr::SpaceKind::EuclideanReal));
  const double h = resolve_bandwidth(bandwidth, kernel, sample.size());
  circfr::DensityEstimate est(kernel, sample, h);
  const auto values = est.evaluate_grid(grid);
  std::ofstream file;
  std::ostream& out = open_output(file, data.output);
  out << "angle,density\n";
  for (std::size_t g = 0; g < grid; ++g) {
    const double angle = -circfr::kPi + circfr::kTwoPi * static_cast<double>(g) /
                                            static_cast<double>(grid);
    out << format_double(angle) << ',' << format_double(values[g]) << '\n';
  }
  return 0;
}

int run_mise(const std::string& model_text, const std::string& kernel_name,
             const std::string& n_list_text, std::size_t reps, std::uint64_t seed,
             const std::string& output) {
  const auto kernel = circfr::DirectionalKernel::from_name(kernel_name);
  const auto model = circfr::DensityModel::parse(model_text);
  const double sf = circfr::score_sf(model);
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << "n,h,mise\n";
  for (std::size_t n : parse_n_list(n_list_text)) {
    const double h = circfr::amise_bandwidth(sf, kernel, n);
    const double mise = circfr::empirical_mise(model, kernel, h, n, reps, seed);
    out << n << ',' << format_double(h) << ',' << format_double(mise) << '\n';
  }
  return 0;
}

int run_regress(const CommonDataFlags& data, const std::string& estimator,
                const std::string& space_name, const std::string& kernel_name,
                const std::string& bandwidth, std::size_t query_grid) {
  const auto kernel = circfr::DirectionalKernel::from_name(kernel_name);
  const auto space = circfr::MetricSpace::from_name(space_name);
  const auto sample = circfr::load_paired_dataset(data.input, data.schema(space.kind()));
  const double h = resolve_bandwidth(bandwidth, kernel, sample.size());
  const bool ll = estimator == "ll";

  std::ofstream file;
  std::ostream& out = open_output(file, data.output);
  const std::size_t width = sample.responses.front().values().size();
  out << "angle";
  for (std::size_t c = 1; c <= width; ++c) out << ",y" << c;
  out << ",objective";
  if (ll) out << ",sigma2,w_min,w_max";
  out << '\n';

  for (std::size_t g = 0; g < query_grid; ++g) {
    const double x = -circfr::kPi + circfr::kTwoPi * static_cast<double>(g) /
                                        static_cast<double>(query_grid);
    const circfr::FrechetEstimate est = ll ? circfr::ll_estimate(space, sample, kernel, h, x)
                                           : circfr::lc_estimate(space, sample, kernel, h, x);
    out << format_double(x);
    for (double v : est.minimizer.values()) out << ',' << format_double(v);
    out << ',' << format_double(est.objective);
    if (ll) {
      const auto w = circfr::effective_weights(sample.predictors, kernel, h, x);
      double wmin = w.weights.front(), wmax = w.weights.front();
      for (double v : w.weights) {
        wmin = std::min(wmin, v);
        wmax = std::max(wmax, v);
      }
      out << ',' << format_double(w.moments.sigma2) << ',' << format_double(wmin) << ','
          << format_double(wmax);
    }
    out << '\n';
  }
  return 0;
}

int run_bandwidth(const CommonDataFlags& data, const std::string& method,
                  const std::string& kernel_name, const std::string& grid_text,
                  const std::string& space_name, const std::string& estimator, double pilot) {
  const auto kernel = circfr::DirectionalKernel::from_name(kernel_name);
  nlohmann::json report;
  report["scores"] = nlohmann::json::array();
  if (method == "plugin") {
    const auto sample =
        circfr::load_angle_dataset(data.input, data.schema(circfr::SpaceKind::EuclideanReal));
    report["selected_h"] = circfr::plugin_bandwidth(
        sample, kernel, pilot > 0 ? std::optional<double>(pilot) : std::nullopt);
  } else {
    const auto space = circfr::MetricSpace::from_name(space_name);
    const auto sample = circfr::load_paired_dataset(data.input, data.schema(space.kind()));
    const auto grid = circfr::BandwidthGrid::parse(grid_text);
    const auto result = circfr::cv_bandwidth_frechet(
        space, sample, kernel, grid,
        estimator == "ll" ? circfr::RegressionEstimator::LL : circfr::RegressionEstimator::LC);
    report["selected_h"] = result.selected_h;
    for (const auto& [h, cv] : result.scores) report["scores"].push_back({{"h", h}, {"cv", cv}});
  }
  std::ofstream file;
  std::ostream& out = open_output(file, data.output);
  out << report.dump(2) << '\n';
  return 0;
}

int run_simulate(const std::string& config_path, const std::string& output, bool timing) {
  std::ifstream in(config_path);
  if (!in) throw circfr::ParseError("cannot open '" + config_path + "'");
  nlohmann::json cfg_json;
  try {
    in >> cfg_json;
  } catch (const nlohmann::json::exception& e) {
    throw circfr::ParseError(std::string("bad config JSON: ") + e.what());
  }
  circfr::ExperimentConfig config;
  try {
    config = circfr::ExperimentConfig::from_json(cfg_json);
  } catch (const nlohmann::json::exception& e) {
    throw circfr::ParseError(std::string("bad config: ") + e.what());
  }
  const auto t0 = std::chrono::steady_clock::now();
  const circfr::RateReport report = circfr::run_rate_experiment(config);
  nlohmann::json j = report.to_json();
  if (timing) {
    // Opt-in: timestamps would break byte-identical reruns.
    j["wall_time_seconds"] = std::chrono::duration<double>(
        std::chrono::steady_clock::now() - t0).count();
  }
  std::ofstream file;
  std::ostream& out = open_output(file, output);
  out << j.dump(2) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directional kernel smoothing and metric-space regression on the circle"};
  app.require_subcommand(1);

  auto* constants = app.add_subcommand("constants", "kernel moment and normalizing tables");
  // "--h" is the documented flag; give up the short help alias to make room.
  constants->set_help_flag("--help", "print help");
  std::string const_kernel = "von_mises", const_output;
  double const_h = 0.1;
  constants->add_option("--kernel", const_kernel, "kernel family");
  constants->add_option("--h", const_h, "bandwidth for the c table")->check(CLI::PositiveNumber);
  constants->add_option("--output", const_output, "output path (default stdout)");

  auto* density = app.add_subcommand("density", "kernel density estimate on a grid");
  CommonDataFlags density_data;
  std::string density_kernel = "von_mises", density_bw = "amise:vm:0,1";
  std::size_t density_grid = 256;
  add_data_flags(density, density_data);
  density->add_option("--kernel", density_kernel, "kernel family");
  density->add_option("--bandwidth", density_bw, "number or amise:<model>");
  density->add_option("--grid", density_grid, "evaluation grid size")->check(CLI::PositiveNumber);

  auto* mise = app.add_subcommand("mise", "Monte Carlo MISE at the oracle bandwidth");
  std::string mise_model = "vm:0,1", mise_kernel = "von_mises", mise_nlist = "500,1000,2000";
  std::string mise_output;
  std::size_t mise_reps = 50;
  std::uint64_t mise_seed = 1;
  mise->add_option("--model", mise_model, "density model");
  mise->add_option("--kernel", mise_kernel, "kernel family");
  mise->add_option("--n-list", mise_nlist, "comma-separated sample sizes");
  mise->add_option("--reps", mise_reps, "Monte Carlo repetitions")->check(CLI::PositiveNumber);
  mise->add_option("--seed", mise_seed, "master seed");
  mise->add_option("--output", mise_output, "output path (default stdout)");

  auto* regress = app.add_subcommand("regress", "local Frechet regression on a query grid");
  CommonDataFlags regress_data;
  std::string regress_estimator = "lc", regress_space = "euclidean";
  std::string regress_kernel = "von_mises", regress_bw;
  std::size_t regress_grid = 16;
  add_data_flags(regress, regress_data);
  regress->add_option("--estimator", regress_estimator, "lc or ll")
      ->check(CLI::IsMember({"lc", "ll"}));
  regress->add_option("--space", regress_space, "euclidean | circle | wasserstein");
  regress->add_option("--kernel", regress_kernel, "kernel family");
  regress->add_option("--bandwidth", regress_bw, "number or amise:<model>")->required();
  regress->add_option("--query-grid", regress_grid, "number of query angles")
      ->check(CLI::PositiveNumber);

  auto* bandwidth = app.add_subcommand("bandwidth", "bandwidth selection");
  CommonDataFlags bw_data;
  std::string bw_method = "plugin", bw_kernel = "von_mises", bw_grid = "0.05:1.5:20log";
  std::string bw_space = "euclidean", bw_estimator = "lc";
  double bw_pilot = 0.0;
  add_data_flags(bandwidth, bw_data);
  bandwidth->add_option("--method", bw_method, "plugin or cv")
      ->check(CLI::IsMember({"plugin", "cv"}));
  bandwidth->add_option("--kernel", bw_kernel, "kernel family");
  bandwidth->add_option("--grid", bw_grid, "cv grid, lo:hi:COUNTlog|lin");
  bandwidth->add_option("--space", bw_space, "response space (cv)");
  bandwidth->add_option("--estimator", bw_estimator, "lc or ll (cv)")
      ->check(CLI::IsMember({"lc", "ll"}));
  bandwidth->add_option("--pilot", bw_pilot, "pilot bandwidth override (plugin)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo rate experiment");
  std::string sim_config, sim_output;
  bool sim_timing = false;
  simulate->add_option("--config", sim_config, "experiment JSON")->required();
  simulate->add_option("--output", sim_output, "report path (default stdout)");
  simulate->add_flag("--timing", sim_timing, "add wall_time_seconds to the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*constants) return run_constants(const_kernel, const_h, const_output);
    if (*density) return run_density(density_data, density_kernel, density_bw, density_grid);
    if (*mise) return run_mise(mise_model, mise_kernel, mise_nlist, mise_reps, mise_seed,
                               mise_output);
    if (*regress) return run_regress(regress_data, regress_estimator, regress_space,
                                     regress_kernel, regress_bw, regress_grid);
    if (*bandwidth) return run_bandwidth(bw_data, bw_method, bw_kernel, bw_grid, bw_space,
                                         bw_estimator, bw_pilot);
    if (*simulate) return run_simulate(sim_config, sim_output, sim_timing);
  } catch (const circfr::Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
