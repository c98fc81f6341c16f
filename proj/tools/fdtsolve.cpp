#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdt/report.hpp"
#include "fdt/run_config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fractional power series solver for singular Emden-Fowler type initial value problems"};
  app.require_subcommand(1);

  std::string problem_file;
  std::int64_t order = -1;
  double t_max = -1.0;
  int points = -1;
  std::string out_dir;
  std::vector<std::string> formats;

  CLI::App* solve = app.add_subcommand("solve", "solve a problem file and write reports");
  solve->add_option("problem-file", problem_file, "JSON problem description")->required();
  solve->add_option("--order", order, "series truncation index K (default 64)");
  solve->add_option("--tmax", t_max, "right end of the evaluation interval (default 1.0)");
  solve->add_option("--points", points, "number of solution grid points (default 101)");
  solve->add_option("--out", out_dir, "output directory (default .)");
  solve->add_option("--format", formats, "output formats: csv and/or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    fdt::RunConfig cfg = fdt::parse_problem_file(problem_file);
    if (order >= 0) cfg.trunc_index = order;
    if (t_max > 0.0) cfg.t_max = t_max;
    if (points > 0) cfg.grid_points = points;
    if (!out_dir.empty()) cfg.output_dir = out_dir;
    if (!formats.empty()) {
      cfg.write_csv = false;
      cfg.write_json = false;
      for (const auto& f : formats) {
        if (f == "csv") cfg.write_csv = true;
        if (f == "json") cfg.write_json = true;
      }
    }
    return fdt::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
