#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "fdt/problem.hpp"
#include "fdt/rational.hpp"

namespace fdt {

struct RunConfig {
  ProblemSpec problem;
  std::int64_t trunc_index = 64;
  double t_max = 1.0;
  int grid_points = 101;
  std::filesystem::path output_dir = ".";
  bool write_csv = true;
  bool write_json = false;
};

// "p/q" (or a bare integer) to an exact rational.
RationalOrder parse_fraction(std::string_view text);

// JSON problem file, see README for the grammar:
//   { "beta": "3/4", "A": 1.0, "f": [{"c": 1.0, "r": "0/1"}], "g": [0.0, 1.0] }
// Optional keys K, t_max, points override the run defaults; command-line
// flags override both.
RunConfig parse_problem_file(const std::filesystem::path& path);

}  // namespace fdt
