#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aosce/ast.hpp"
#include "aosce/metrics.hpp"

namespace aosce {

/// Three-phase text log: FILE lines, declaration signatures, METRIC lines.
std::string write_log(std::span<const SourceUnit> units, const VersionMetrics& metrics);

std::string write_json(const VersionMetrics& metrics);

/// Columns Version|WMCA|NAC|WPA|WAA|WJP; "NA" for aspect metrics of aspect-free
/// versions and for an undefined NAC.
std::string render_table(std::span<const VersionMetrics> reports);

std::string write_csv(std::span<const VersionMetrics> reports);

/// Signed exact value, used for metric values and deltas in comparisons.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    friend Rational operator-(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b);

    std::string rendered(int places) const;
};

enum class Trend { Increasing, Decreasing, Mixed, Flat };

std::string_view to_string(Trend trend);

struct MetricPoint {
    std::string version_id;
    std::optional<Rational> value;  // empty when not applicable (NAC without classes)
    std::optional<Rational> delta;  // empty for the first version or next to an empty value
};

struct MetricSeries {
    std::string metric;  // wmca, nac, wpa, waa, wjp
    int places = 1;
    std::vector<MetricPoint> points;
    Trend trend = Trend::Flat;
};

struct ComparisonReport {
    std::vector<VersionMetrics> versions;
    std::vector<MetricSeries> series;
};

/// Needs at least two versions (TooFewVersions otherwise). Keeps the given order.
ComparisonReport compare_versions(std::span<const VersionMetrics> reports);

std::string write_json(const ComparisonReport& report);

/// One line per metric: `WMCA  increasing  14 -> 20 -> 31`.
std::string render_trends(const ComparisonReport& report);

}  // namespace aosce
