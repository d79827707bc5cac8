#include "aosce/kernels.hpp"

#include <cstddef>

#include "aosce/parser.hpp"

namespace aosce {

namespace serial {

std::vector<SourceUnit> parse_files(std::span<const SourceFileRef> files) {
    std::vector<SourceUnit> units;
    units.reserve(files.size());
    for (const SourceFileRef& f : files) units.push_back(parse_file(f));
    return units;
}

std::vector<UnitMetrics> measure_units(std::span<const SourceUnit> units, const WeightTable& weights) {
    std::vector<UnitMetrics> out;
    out.reserve(units.size());
    for (const SourceUnit& u : units) out.push_back(measure_unit(u, weights));
    return out;
}

}  // namespace serial

namespace omp {

// Each iteration writes only its own slot, so output order matches input order
// regardless of scheduling.
std::vector<SourceUnit> parse_files(std::span<const SourceFileRef> files) {
    std::vector<SourceUnit> units(files.size());
    const auto n = static_cast<std::ptrdiff_t>(files.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        units[static_cast<std::size_t>(i)] = parse_file(files[static_cast<std::size_t>(i)]);
    }
    return units;
}

std::vector<UnitMetrics> measure_units(std::span<const SourceUnit> units, const WeightTable& weights) {
    std::vector<UnitMetrics> out(units.size());
    const auto n = static_cast<std::ptrdiff_t>(units.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = measure_unit(units[static_cast<std::size_t>(i)], weights);
    }
    return out;
}

}  // namespace omp

}  // namespace aosce
