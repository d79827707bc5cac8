#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "aosce/ast.hpp"
#include "aosce/weights.hpp"

namespace aosce {

using CategorySet = std::set<JoinPointCategory>;

/// Named pointcuts visible inside one source unit, keyed by `name` and `Owner.name`.
class PointcutScope {
public:
    PointcutScope() = default;
    explicit PointcutScope(const SourceUnit& unit);

    /// Null when the name is unknown. An abstract pointcut is found but has a null expression.
    const PointcutDecl* find(const std::string& name) const;

private:
    std::map<std::string, const PointcutDecl*, std::less<>> by_name_;
};

/// Join point categories selected by an expression, following named references
/// through `scope`. Unresolved references add a warning to `diagnostics`.
CategorySet classify_joinpoint_categories(const ExprPtr& expr, const PointcutScope& scope,
                                          std::vector<Diagnostic>* diagnostics = nullptr,
                                          const std::filesystem::path& file = {}, int line = 1);

/// Designator weight plus signature weight of one pointcut expression.
Weight pointcut_wpa(const ExprPtr& expr, const WeightTable& weights);

Weight wpa_aspect(const AspectDecl& aspect, const WeightTable& weights);
Weight waa_aspect(const AspectDecl& aspect, const WeightTable& weights);

/// Sum of join point type weights over the categories of each pointcut.
Weight wjp_pointcuts(const std::vector<PointcutDecl>& pointcuts, const PointcutScope& scope,
                     const WeightTable& weights, std::vector<Diagnostic>* diagnostics = nullptr,
                     const std::filesystem::path& file = {});

/// Methods excluding constructors; nested types are counted on their own.
std::uint64_t wmca_unit(const ClassDecl& cls);
std::uint64_t wmca_unit(const AspectDecl& aspect);

/// Attributes over classes, kept unreduced so that num and den stay the NA and NC counts.
struct Ratio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;

    /// Rounded half up to `places` decimals using integer arithmetic only.
    std::string rendered(int places = 3) const;

    friend bool operator==(const Ratio&, const Ratio&) = default;
};

struct AspectMetrics {
    std::string aspect_name;
    Weight wpa;
    Weight waa;
    Weight wjp;
    std::uint64_t wmca = 0;

    friend bool operator==(const AspectMetrics&, const AspectMetrics&) = default;
};

struct ClassMetrics {
    std::string class_name;
    std::uint64_t wmca = 0;
    std::uint64_t attribute_count = 0;
    Weight wjp_contribution;

    friend bool operator==(const ClassMetrics&, const ClassMetrics&) = default;
};

/// Everything one source unit contributes to a version.
struct UnitMetrics {
    std::filesystem::path file;
    std::vector<AspectMetrics> per_aspect;
    std::vector<ClassMetrics> per_class;
    std::vector<Diagnostic> diagnostics;
};

UnitMetrics measure_unit(const SourceUnit& unit, const WeightTable& weights);

struct VersionMetrics {
    std::string version_id;
    Weight wpa;
    Weight waa;
    Weight wjp;
    std::uint64_t wmca = 0;
    std::optional<Ratio> nac;  // empty when there are no classes
    std::uint64_t aspect_count = 0;
    std::uint64_t class_count = 0;
    std::uint64_t method_count = 0;
    std::uint64_t attribute_count = 0;
    std::vector<AspectMetrics> per_aspect;  // sorted by name
    std::vector<ClassMetrics> per_class;    // sorted by name
    bool aspect_free = true;

    // Not part of the reports.
    std::vector<std::filesystem::path> excluded_files;
    std::vector<Diagnostic> diagnostics;
};

/// Folds unit contributions into version totals. Order of `units` does not matter.
VersionMetrics aggregate_version(const std::string& version_id, std::span<const UnitMetrics> units);

std::optional<Ratio> nac_version(std::span<const SourceUnit> units);

/// Version-wide join point weight with its per-aspect and per-class parts.
struct WjpBreakdown {
    Weight total;
    std::vector<std::pair<std::string, Weight>> per_aspect;
    std::vector<std::pair<std::string, Weight>> per_class;
};

WjpBreakdown wjp_version(std::span<const SourceUnit> units, const WeightTable& weights);

enum class Execution { Serial, Parallel };

struct MeasureOptions {
    bool strict = false;
    Execution execution = Execution::Parallel;
};

/// Measures one version. Units carrying Error diagnostics raise
/// StrictModeParseFailure in strict mode and are left out otherwise.
VersionMetrics measure_version(const std::string& version_id, std::span<const SourceUnit> units,
                               const WeightTable& weights, const MeasureOptions& options = {});

}  // namespace aosce
