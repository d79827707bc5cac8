#pragma once

// Per-file work of the pipeline. `serial` is the reference the OpenMP versions
// are tested against; both return results in input order.

#include <span>
#include <vector>

#include "aosce/ast.hpp"
#include "aosce/corpus.hpp"
#include "aosce/metrics.hpp"
#include "aosce/weights.hpp"

namespace aosce {

namespace serial {
std::vector<SourceUnit> parse_files(std::span<const SourceFileRef> files);
std::vector<UnitMetrics> measure_units(std::span<const SourceUnit> units, const WeightTable& weights);
}  // namespace serial

namespace omp {
std::vector<SourceUnit> parse_files(std::span<const SourceFileRef> files);
std::vector<UnitMetrics> measure_units(std::span<const SourceUnit> units, const WeightTable& weights);
}  // namespace omp

inline std::vector<SourceUnit> parse_files(std::span<const SourceFileRef> files, Execution execution) {
    return execution == Execution::Serial ? serial::parse_files(files) : omp::parse_files(files);
}

}  // namespace aosce
