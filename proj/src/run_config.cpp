#include "fdt/run_config.hpp"

#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace fdt {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("malformed fraction: '" + std::string(text) + "'");
  return v;
}

}  // namespace

RationalOrder parse_fraction(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return RationalOrder(parse_int(text));
  return RationalOrder(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

RunConfig parse_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path.string());

  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("problem file is not valid JSON: " + std::string(e.what()));
  }
  if (!doc.is_object()) throw std::invalid_argument("problem file must be a JSON object");

  for (const auto& [key, _] : doc.items()) {
    if (key != "beta" && key != "A" && key != "f" && key != "g" && key != "K" &&
        key != "t_max" && key != "points")
      throw std::invalid_argument("unknown field '" + key + "' in problem file");
  }

  if (!doc.contains("beta") || !doc["beta"].is_string())
    throw std::invalid_argument("field 'beta' missing or not a fraction string");
  if (!doc.contains("A") || !doc["A"].is_number())
    throw std::invalid_argument("field 'A' missing or not a number");
  if (!doc.contains("f") || !doc["f"].is_array() || doc["f"].empty())
    throw std::invalid_argument("field 'f' missing or empty: need at least one monomial");
  if (!doc.contains("g") || !doc["g"].is_array() || doc["g"].empty())
    throw std::invalid_argument("field 'g' missing or empty: need at least one coefficient");

  const RationalOrder beta = parse_fraction(doc["beta"].get<std::string>());

  std::vector<Monomial> f;
  for (const auto& item : doc["f"]) {
    if (!item.is_object() || !item.contains("c") || !item["c"].is_number() ||
        !item.contains("r") || !item["r"].is_string())
      throw std::invalid_argument("field 'f': each monomial needs a number 'c' and a fraction string 'r'");
    f.push_back({item["c"].get<double>(), parse_fraction(item["r"].get<std::string>())});
  }

  std::vector<double> g;
  for (const auto& item : doc["g"]) {
    if (!item.is_number()) throw std::invalid_argument("field 'g' must contain only numbers");
    g.push_back(item.get<double>());
  }

  RunConfig cfg{ProblemSpec(beta, doc["A"].get<double>(), std::move(f), std::move(g))};
  if (doc.contains("K")) cfg.trunc_index = doc["K"].get<std::int64_t>();
  if (doc.contains("t_max")) cfg.t_max = doc["t_max"].get<double>();
  if (doc.contains("points")) cfg.grid_points = doc["points"].get<int>();
  return cfg;
}

}  // namespace fdt
