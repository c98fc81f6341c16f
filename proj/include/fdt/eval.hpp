#pragma once

#include <span>
#include <vector>

#include "fdt/series.hpp"

namespace fdt {

// Series evaluation over many points. Each point is independent, so the
// parallel kernel produces bit-identical output to the serial reference.
std::vector<double> evaluate_many(const CoeffSeq& s, std::span<const double> ts);
std::vector<double> evaluate_many_serial(const CoeffSeq& s, std::span<const double> ts);

}  // namespace fdt
