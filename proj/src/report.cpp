#include "fdt/report.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <json.hpp>

#include "fdt/eval.hpp"
#include "fdt/residual.hpp"
#include "fdt/solver.hpp"

namespace fdt {

namespace {

constexpr int kResidualPoints = 8;

std::string num17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

nlohmann::json metadata(const RunConfig& cfg, const SeriesSolution& sol) {
  return {{"alpha", sol.alpha().str()},
          {"beta", cfg.problem.beta.str()},
          {"A", cfg.problem.A},
          {"K", cfg.trunc_index}};
}

void validate(const RunConfig& cfg) {
  const RationalOrder alpha = choose_grid(cfg.problem);
  const std::int64_t twop = 2 * index_of(cfg.problem.beta, alpha);
  if (cfg.trunc_index < twop)
    throw std::invalid_argument("K too small: need K >= " + std::to_string(twop) +
                                " for beta = " + cfg.problem.beta.str());
  if (!(cfg.t_max > 0.0)) throw std::invalid_argument("t_max must be positive");
  if (cfg.grid_points < 2) throw std::invalid_argument("need at least 2 grid points");
  if (!cfg.write_csv && !cfg.write_json) throw std::invalid_argument("no output format selected");
}

}  // namespace

std::vector<std::pair<std::string, std::string>> render_reports(const RunConfig& cfg) {
  validate(cfg);
  const SeriesSolution sol = solve(cfg.problem, cfg.trunc_index);
  const CoeffSeq& u = sol.coeffs();
  const nlohmann::json meta = metadata(cfg, sol);

  // coefficient table
  std::string coeff_csv = "k,alpha_k,U\n";
  nlohmann::json coeff_rows = nlohmann::json::array();
  for (std::int64_t k = 0; k <= sol.truncation_index(); ++k) {
    const std::string ak = sol.alpha().times(k).str();
    const double v = u[static_cast<std::size_t>(k)];
    coeff_csv += std::to_string(k) + "," + ak + "," + num17(v) + "\n";
    coeff_rows.push_back({k, ak, v});
  }

  // solution grid
  std::vector<double> ts(static_cast<std::size_t>(cfg.grid_points));
  for (int i = 0; i < cfg.grid_points; ++i)
    ts[static_cast<std::size_t>(i)] = cfg.t_max * i / (cfg.grid_points - 1);
  const std::vector<double> us = evaluate_many(u, ts);
  std::string sol_csv = "t,u\n";
  nlohmann::json sol_rows = nlohmann::json::array();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    sol_csv += num17(ts[i]) + "," + num17(us[i]) + "\n";
    sol_rows.push_back({ts[i], us[i]});
  }

  // residual report
  const std::vector<double> pts = geometric_points(cfg.t_max, kResidualPoints);
  const ResidualReport rep = residual(sol, pts);
  std::string res_csv = "t,residual\n";
  nlohmann::json res_rows = nlohmann::json::array();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    res_csv += num17(rep.sample_points[i]) + "," + num17(rep.residuals[i]) + "\n";
    res_rows.push_back({rep.sample_points[i], rep.residuals[i]});
  }

  // convergence report: u(t_max/2) at K/4, K/2, K
  const double t_half = cfg.t_max / 2.0;
  std::string conv_csv = "K,u,delta\n";
  nlohmann::json conv_rows = nlohmann::json::array();
  double prev = 0.0;
  bool have_prev = false;
  for (std::int64_t kj : {cfg.trunc_index / 4, cfg.trunc_index / 2, cfg.trunc_index}) {
    const double uj = evaluate(u.prefix(kj), t_half);
    conv_csv += std::to_string(kj) + "," + num17(uj) + ",";
    if (have_prev) {
      conv_csv += num17(std::abs(uj - prev));
      conv_rows.push_back({kj, uj, std::abs(uj - prev)});
    } else {
      conv_rows.push_back({kj, uj, nullptr});
    }
    conv_csv += "\n";
    prev = uj;
    have_prev = true;
  }

  std::vector<std::pair<std::string, std::string>> files;
  if (cfg.write_csv) {
    files.emplace_back("coefficients.csv", coeff_csv);
    files.emplace_back("solution.csv", sol_csv);
    files.emplace_back("residual.csv", res_csv);
    files.emplace_back("convergence.csv", conv_csv);
  }
  if (cfg.write_json) {
    auto mirror = [&meta](nlohmann::json rows) {
      return nlohmann::json{{"metadata", meta}, {"rows", std::move(rows)}}.dump(2) + "\n";
    };
    files.emplace_back("coefficients.json", mirror(coeff_rows));
    files.emplace_back("solution.json", mirror(sol_rows));
    nlohmann::json res_doc{{"metadata", meta},
                           {"max_abs_residual", rep.max_abs_residual},
                           {"rows", res_rows}};
    files.emplace_back("residual.json", res_doc.dump(2) + "\n");
    files.emplace_back("convergence.json", mirror(conv_rows));
  }
  return files;
}

int run(const RunConfig& cfg) {
  const auto files = render_reports(cfg);
  std::filesystem::create_directories(cfg.output_dir);
  std::vector<std::filesystem::path> written;
  try {
    for (const auto& [name, content] : files) {
      const auto path = cfg.output_dir / name;
      std::ofstream out(path, std::ios::binary);
      out << content;
      if (!out) throw std::runtime_error("failed to write " + path.string());
      written.push_back(path);
      std::cout << "wrote " << path.string() << "\n";
    }
  } catch (...) {
    for (const auto& path : written) {
      std::error_code ec;
      std::filesystem::remove(path, ec);
    }
    throw;
  }
  return 0;
}

}  // namespace fdt
