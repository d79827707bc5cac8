#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "aosce/ast.hpp"
#include "aosce/pointcut.hpp"

namespace aosce {

/// Non-negative cognitive weight held as an integer number of tenths.
class Weight {
public:
    constexpr Weight() = default;

    static constexpr Weight from_tenths(std::uint64_t tenths) { return Weight(tenths); }

    constexpr std::uint64_t tenths() const { return tenths_; }

    constexpr Weight& operator+=(Weight other) {
        tenths_ += other.tenths_;
        return *this;
    }
    friend constexpr Weight operator+(Weight a, Weight b) { return a += b; }
    friend constexpr auto operator<=>(Weight, Weight) = default;

    /// One decimal place, e.g. "1.5", "0.0", "100.0".
    std::string str() const;

private:
    constexpr explicit Weight(std::uint64_t tenths) : tenths_(tenths) {}
    std::uint64_t tenths_ = 0;
};

constexpr Weight operator""_w(unsigned long long tenths) { return Weight::from_tenths(tenths); }

enum class JoinPointCategory {
    MethodExecution,
    MethodCall,
    ExceptionHandling,
    WithinAdvice,
    Attribute,
    ParticularMethod,
    ParticularClass,
    ParticularPackage,
    ControlFlow,
    BooleanOrCombined,
};
inline constexpr std::size_t kJoinPointCategoryCount = 10;

/// Join point signature specificity, least to most weighty.
enum class SpecificityLevel {
    FullyQualified,
    WildcardParams,
    WildcardReturn,
    WildcardName,
    WildcardOrUnqualifiedClass,
};
inline constexpr std::size_t kSpecificityLevelCount = 5;
inline constexpr std::size_t kAdviceKindCount = 5;

/// snake_case names, shared by the override config and the log.
std::string_view to_string(JoinPointCategory category);
std::string_view to_string(SpecificityLevel level);
std::string_view config_key(AdviceKind kind);

struct WeightTable {
    std::map<std::string, Weight, std::less<>> designator_weights;
    std::array<Weight, kAdviceKindCount> advice_weights{};
    std::array<Weight, kJoinPointCategoryCount> joinpoint_type_weights{};
    std::array<Weight, kSpecificityLevelCount> signature_level_weights{};

    /// Zero for designators without an entry.
    Weight designator(std::string_view name) const;
    Weight advice(AdviceKind kind) const { return advice_weights[static_cast<std::size_t>(kind)]; }
    Weight joinpoint_type(JoinPointCategory c) const {
        return joinpoint_type_weights[static_cast<std::size_t>(c)];
    }
    Weight signature_level(SpecificityLevel l) const {
        return signature_level_weights[static_cast<std::size_t>(l)];
    }

    friend bool operator==(const WeightTable&, const WeightTable&) = default;
};

/// Default cognitive-weight tables:
///
///   designators   execution 0.1, call 0.2, get 0.3, set 0.4, handler 0.5
///   advice        before 0.1, after 0.1 (also returning/throwing), around 0.2
///   join points   0.1 (method execution) through 1.0 (boolean or combined)
///   signatures    0.1 (fully qualified) through 0.5 (wildcard/unqualified class)
const WeightTable& default_weights();

/// Most specific wildcard level that applies to the pattern. Checked from the
/// class pattern down: a `*` or missing package in the class wins over a `*`
/// in the name, which wins over a wildcard return (`*` or `||`), which wins
/// over wildcard params (`..` or `*`).
SpecificityLevel specificity_level(const SignaturePattern& pattern);

Weight signature_weight(const SignaturePattern& pattern, const WeightTable& table);

/// Parses an override document (see README for keys). Blank text means no overrides.
WeightTable parse_weight_overrides(std::string_view json_text);

WeightTable load_weight_overrides(const std::filesystem::path& config_path);

}  // namespace aosce
