// Command-line front end: analytic curves, Monte Carlo campaigns, association
// tables, and goodness-of-fit comparisons, emitted as plot-ready CSV/JSON.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "hetnet/association.hpp"
#include "hetnet/config.hpp"
#include "hetnet/fading.hpp"
#include "hetnet/simulator.hpp"
#include "hetnet/specfun.hpp"
#include "hetnet/stats.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace hetnet;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitStatistical = 3;

struct Grid {
  double lo = 0.0;
  double hi = 5.0;
  double step = 0.05;

  std::vector<double> points() const {
    std::vector<double> ys;
    const int n = static_cast<int>(std::floor((hi - lo) / step + 0.5));
    for (int i = 0; i <= n; ++i) ys.push_back(lo + i * step);
    return ys;
  }
};

Grid parse_grid(const std::string& text) {
  Grid g;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &g.lo, &g.hi, &g.step) != 3 ||
      !(g.step > 0.0) || !(g.hi > g.lo)) {
    throw CLI::ValidationError("--grid", "expected lo:hi:step with step > 0");
  }
  return g;
}

// Pinned numeric format: 9 significant digits, decimal notation.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string config_echo_comment(const config::ExperimentConfig& cfg) {
  std::ostringstream out;
  out << "# alpha=" << fmt(cfg.network.alpha);
  for (std::size_t k = 0; k < cfg.network.tiers.size(); ++k) {
    out << " lambda" << (k + 1) << "=" << fmt(cfg.network.tiers[k].density)
        << " P" << (k + 1) << "=" << fmt(cfg.network.tiers[k].power);
  }
  out << " m=" << fmt(cfg.fading_m) << " omega=" << fmt(cfg.fading_omega);
  return out.str();
}

json config_echo_json(const config::ExperimentConfig& cfg) {
  json tiers = json::array();
  for (const auto& t : cfg.network.tiers) {
    tiers.push_back({{"density", t.density}, {"power", t.power}});
  }
  return {{"alpha", cfg.network.alpha},
          {"tiers", tiers},
          {"fading", {{"type", "nakagami"},
                      {"m", cfg.fading_m},
                      {"omega", cfg.fading_omega}}}};
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

json ks_report_json(const stats::KsReport& r) {
  json j{{"statistic", r.statistic},
         {"critical_value", r.critical_value},
         {"significance_level", r.significance_level},
         {"pass", r.pass},
         {"n_a", r.n_a}};
  if (r.n_b > 0) j["n_b"] = r.n_b;
  if (r.small_sample_warning) j["small_sample_warning"] = true;
  return j;
}

int cmd_analytic(const config::ExperimentConfig& cfg, const Grid& grid,
                 const std::string& out_path, const std::string& format) {
  auto model = cfg.make_model();
  fading::EffectiveFadingDistribution eff(model, cfg.network.alpha);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);

  json rows = json::array();
  int skipped = 0;
  if (format == "csv") {
    out << config_echo_comment(cfg) << "\n";
    out << "y,f_h,f_eff_general,f_eff_closed\n";
  }
  for (double y : grid.points()) {
    try {
      const double fh = model->pdf(y);
      const double general = eff.pdf(y);
      const double closed = fading::effective_pdf_nakagami(
          cfg.fading_m, cfg.fading_omega, cfg.network.alpha, y);
      if (format == "csv") {
        out << fmt(y) << "," << fmt(fh) << "," << fmt(general) << ","
            << fmt(closed) << "\n";
      } else {
        rows.push_back({{"y", y},
                        {"f_h", fh},
                        {"f_eff_general", general},
                        {"f_eff_closed", closed}});
      }
    } catch (const specfun::IntegrationFailure& e) {
      ++skipped;
      std::cerr << "warning: quadrature failed at y=" << fmt(y)
                << " (estimate " << fmt(e.estimate) << "); row skipped\n";
    }
  }
  if (format == "json") {
    json doc{{"config", config_echo_json(cfg)},
             {"rows", rows},
             {"rows_skipped", skipped}};
    out << doc.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_simulate(const config::ExperimentConfig& cfg, std::uint64_t trials,
                 std::uint64_t seed, int n_max, const std::string& out_path,
                 const std::string& format, double level) {
  auto model = cfg.make_model();
  const auto result =
      simulator::run_campaign(cfg.network, *model, trials, n_max, seed);

  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  if (format == "csv") {
    out << config_echo_comment(cfg) << " seed=" << seed << " trials=" << trials
        << " n_max=" << n_max << "\n";
    out << "h_star,tier,order,distance\n";
    for (const auto& s : result.samples) {
      out << fmt(s.h_star) << "," << s.serving_tier << "," << s.serving_order
          << "," << fmt(s.serving_distance) << "\n";
    }
  }

  std::vector<double> gains;
  std::vector<std::uint64_t> tier_counts(cfg.network.tiers.size(), 0);
  gains.reserve(result.samples.size());
  for (const auto& s : result.samples) {
    gains.push_back(s.h_star);
    tier_counts[s.serving_tier - 1]++;
  }
  stats::EmpiricalDistribution dist(std::move(gains));
  const double m = cfg.fading_m, omega = cfg.fading_omega,
               alpha = cfg.network.alpha;
  const auto ks = stats::ks_one_sample(
      dist,
      [m, omega, alpha](double y) {
        return fading::effective_cdf_nakagami(m, omega, alpha, y);
      },
      level);

  json summary{{"config", config_echo_json(cfg)},
               {"seed", seed},
               {"trials", trials},
               {"n_max", n_max},
               {"tier_fractions", json::array()},
               {"ks_vs_effective_closed_form", ks_report_json(ks)}};
  for (auto c : tier_counts) {
    summary["tier_fractions"].push_back(static_cast<double>(c) /
                                        static_cast<double>(trials));
  }
  if (format == "json") {
    json doc = summary;
    doc["samples"] = json::array();
    for (const auto& s : result.samples) {
      doc["samples"].push_back({{"h_star", s.h_star},
                                {"tier", s.serving_tier},
                                {"order", s.serving_order},
                                {"distance", s.serving_distance}});
    }
    out << doc.dump(2) << "\n";
  } else if (&out != &std::cout) {
    std::cout << summary.dump(2) << "\n";
  } else {
    std::cerr << summary.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_assoc(const config::ExperimentConfig& cfg, std::optional<double> h,
              int n_max, const std::string& out_path,
              const std::string& format) {
  auto model = cfg.make_model();
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);

  if (h) {
    json rows = json::array();
    if (format == "csv") {
      out << config_echo_comment(cfg) << " h=" << fmt(*h) << "\n";
      out << "k,n,p_conditional\n";
    }
    for (std::size_t k = 0; k < cfg.network.tiers.size(); ++k) {
      const auto g = association::g_pair(
          *model, cfg.network.alpha, *h,
          association::tier_bias(cfg.network, k));
      for (int n = 1; n <= n_max; ++n) {
        const double p = association::conditional_assoc_prob(g, n);
        if (format == "csv") {
          out << (k + 1) << "," << n << "," << fmt(p) << "\n";
        } else {
          rows.push_back({{"k", k + 1}, {"n", n}, {"p", p}});
        }
      }
    }
    if (format == "json") {
      out << json{{"config", config_echo_json(cfg)}, {"h", *h},
                  {"entries", rows}}
                 .dump(2)
          << "\n";
    }
    return kExitOk;
  }

  const auto table =
      association::assoc_prob_table(cfg.network, *model, n_max);
  const auto sums = table.row_sums();
  if (format == "csv") {
    out << config_echo_comment(cfg) << " n_max=" << n_max << "\n";
    out << "k,n,p\n";
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
      for (int n = 1; n <= n_max; ++n) {
        out << (k + 1) << "," << n << "," << fmt(table.entries[k][n - 1])
            << "\n";
      }
    }
    for (std::size_t k = 0; k < sums.size(); ++k) {
      out << "# row_sum_" << (k + 1) << "=" << fmt(sums[k]) << "\n";
    }
    out << "# truncation_mass=" << fmt(table.truncation_mass) << "\n";
  } else {
    json rows = json::array();
    for (std::size_t k = 0; k < table.entries.size(); ++k) {
      for (int n = 1; n <= n_max; ++n) {
        rows.push_back(
            {{"k", k + 1}, {"n", n}, {"p", table.entries[k][n - 1]}});
      }
    }
    out << json{{"config", config_echo_json(cfg)},
                {"n_max", n_max},
                {"entries", rows},
                {"row_sums", sums},
                {"truncation_mass", table.truncation_mass}}
               .dump(2)
        << "\n";
  }
  return kExitOk;
}

std::vector<double> read_sample_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open sample file: " + path);
  std::vector<double> h_star;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line.rfind("h_star,", 0) != 0) {
        throw std::runtime_error("sample file " + path +
                                 ": expected header h_star,tier,order,distance");
      }
      header_seen = true;
      continue;
    }
    h_star.push_back(std::stod(line.substr(0, line.find(','))));
  }
  if (h_star.empty()) {
    throw std::runtime_error("sample file " + path + ": no records");
  }
  return h_star;
}

int cmd_compare(const std::string& samples_a, const std::string& samples_b,
                const config::ExperimentConfig* cfg,
                const std::string& against, double level,
                const std::string& out_path) {
  stats::EmpiricalDistribution a(read_sample_file(samples_a));
  stats::KsReport report;
  json doc;
  if (!samples_b.empty()) {
    stats::EmpiricalDistribution b(read_sample_file(samples_b));
    report = stats::ks_two_sample(a, b, level);
    doc["mode"] = "two-sample";
  } else {
    if (!cfg) {
      std::cerr << "error: compare needs either --samples-b or --config\n";
      return kExitUsage;
    }
    const double m = cfg->fading_m, omega = cfg->fading_omega,
                 alpha = cfg->network.alpha;
    std::function<double(double)> cdf;
    if (against == "effective") {
      cdf = [m, omega, alpha](double y) {
        return fading::effective_cdf_nakagami(m, omega, alpha, y);
      };
    } else {
      fading::NakagamiFading model(m, omega);
      cdf = [model](double y) { return model.cdf(y); };
    }
    report = stats::ks_one_sample(a, cdf, level);
    doc["mode"] = "one-sample";
    doc["against"] = against;
    doc["config"] = config_echo_json(*cfg);
  }
  doc["ks"] = ks_report_json(report);
  std::ofstream file;
  std::ostream& out = open_output(file, out_path);
  out << doc.dump(2) << "\n";
  return report.pass ? kExitOk : kExitStatistical;
}

int cmd_reproduce_fig1(const config::ExperimentConfig& base,
                       const std::vector<double>& m_values,
                       std::uint64_t trials, std::uint64_t seed, int n_max,
                       const Grid& grid, double level,
                       const std::string& out_dir) {
  std::filesystem::create_directories(out_dir);
  json manifest{{"command", "reproduce-fig1"},
                {"config", config_echo_json(base)},
                {"m_values", m_values},
                {"trials", trials},
                {"seed", seed},
                {"n_max", n_max},
                {"grid", {{"lo", grid.lo}, {"hi", grid.hi}, {"step", grid.step}}},
                {"significance_level", level},
                {"files", json::array()}};
  bool all_pass = true;
  for (double m : m_values) {
    config::ExperimentConfig cfg = base;
    cfg.fading_m = m;
    auto model = cfg.make_model();
    const auto result = simulator::run_campaign(cfg.network, *model, trials,
                                                n_max, seed, true);
    std::vector<double> h_star;
    h_star.reserve(result.samples.size());
    for (const auto& s : result.samples) h_star.push_back(s.h_star);
    stats::EmpiricalDistribution eff_dist(std::move(h_star));
    stats::EmpiricalDistribution orig_dist(result.original_gains);

    const int bins = static_cast<int>(std::lround((grid.hi - grid.lo) /
                                                  grid.step));
    const auto eff_hist =
        stats::histogram_density(eff_dist, bins, grid.lo, grid.hi);
    const auto orig_hist =
        stats::histogram_density(orig_dist, bins, grid.lo, grid.hi);

    std::ostringstream name;
    name << "fig1_m" << fmt(m) << ".csv";
    const auto path = std::filesystem::path(out_dir) / name.str();
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path.string());
    out << config_echo_comment(cfg) << " seed=" << seed << " trials=" << trials
        << " n_max=" << n_max << "\n";
    out << "y,f_h,f_eff,sim_density_eff,sim_density_orig\n";
    for (int b = 0; b < bins; ++b) {
      const double y = eff_hist.bins[b].center;
      out << fmt(y) << "," << fmt(model->pdf(y)) << ","
          << fmt(fading::effective_pdf_nakagami(m, cfg.fading_omega,
                                                cfg.network.alpha, y))
          << "," << fmt(eff_hist.bins[b].density) << ","
          << fmt(orig_hist.bins[b].density) << "\n";
    }

    const double omega = cfg.fading_omega, alpha = cfg.network.alpha;
    const auto ks = stats::ks_one_sample(
        eff_dist,
        [m, omega, alpha](double y) {
          return fading::effective_cdf_nakagami(m, omega, alpha, y);
        },
        level);
    all_pass = all_pass && ks.pass;
    manifest["files"].push_back({{"m", m},
                                 {"path", name.str()},
                                 {"ks_vs_effective", ks_report_json(ks)}});
  }
  std::ofstream mout(std::filesystem::path(out_dir) / "manifest.json");
  mout << manifest.dump(2) << "\n";
  return all_pass ? kExitOk : kExitStatistical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Effective fading analysis for K-tier cellular networks"};
  app.require_subcommand(1);

  std::string config_path, out_path, format = "csv", grid_text = "0:5:0.05";
  std::string samples_a, samples_b, against = "effective";
  std::uint64_t trials = 10000, seed = 1;
  int n_max = 500;
  double level = 0.01;
  std::optional<double> cond_h;
  std::vector<double> m_values{0.5, 1.0, 3.0};

  auto add_common = [&](CLI::App* cmd, bool needs_config) {
    auto* opt = cmd->add_option("--config", config_path, "JSON config file");
    if (needs_config) opt->required();
    cmd->add_option("--out", out_path, "output path (default stdout)");
    cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* analytic = app.add_subcommand("analytic", "analytic density curves");
  add_common(analytic, true);
  analytic->add_option("--grid", grid_text, "evaluation grid lo:hi:step");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo campaign");
  add_common(simulate, true);
  simulate->add_option("--trials", trials, "number of trials");
  simulate->add_option("--seed", seed, "master seed");
  simulate->add_option("--n-max", n_max, "BSs simulated per tier");
  simulate->add_option("--level", level, "KS significance level");

  auto* assoc = app.add_subcommand("assoc", "association probabilities");
  // frees the short -h so the conditioning-gain option can be named --h
  assoc->set_help_flag("--help", "print help");
  add_common(assoc, true);
  assoc->add_option("--h", cond_h, "conditioning fading gain");
  assoc->add_option("--n-max", n_max, "largest order index tabulated");

  auto* compare = app.add_subcommand("compare", "KS comparison");
  add_common(compare, false);
  compare->add_option("--samples", samples_a, "sample CSV file")->required();
  compare->add_option("--samples-b", samples_b, "second sample CSV file");
  compare->add_option("--against", against, "effective|original")
      ->check(CLI::IsMember({"effective", "original"}));
  compare->add_option("--level", level, "KS significance level");

  auto* fig1 = app.add_subcommand("reproduce-fig1", "per-m comparison bundle");
  add_common(fig1, true);
  fig1->add_option("--m-values", m_values, "Nakagami m values");
  fig1->add_option("--trials", trials, "number of trials");
  fig1->add_option("--seed", seed, "master seed");
  fig1->add_option("--n-max", n_max, "BSs simulated per tier");
  fig1->add_option("--grid", grid_text, "histogram/density grid lo:hi:step");
  fig1->add_option("--level", level, "KS significance level");

  CLI11_PARSE(app, argc, argv);

  try {
    std::optional<config::ExperimentConfig> cfg;
    if (!config_path.empty()) cfg = config::load_config_file(config_path);
    const Grid grid = parse_grid(grid_text);

    if (analytic->parsed()) {
      return cmd_analytic(*cfg, grid, out_path, format);
    }
    if (simulate->parsed()) {
      return cmd_simulate(*cfg, trials, seed, n_max, out_path, format, level);
    }
    if (assoc->parsed()) {
      return cmd_assoc(*cfg, cond_h, n_max, out_path, format);
    }
    if (compare->parsed()) {
      return cmd_compare(samples_a, samples_b, cfg ? &*cfg : nullptr, against,
                         level, out_path);
    }
    if (fig1->parsed()) {
      const std::string dir = out_path.empty() ? "fig1_out" : out_path;
      return cmd_reproduce_fig1(*cfg, m_values, trials, seed, n_max, grid,
                                level, dir);
    }
  } catch (const config::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const specfun::IntegrationFailure& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
