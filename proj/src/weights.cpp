#include "aosce/weights.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "aosce/error.hpp"
#include "json.hpp"

namespace aosce {

std::string Weight::str() const {
    return std::to_string(tenths_ / 10) + "." + std::to_string(tenths_ % 10);
}

std::string_view to_string(JoinPointCategory category) {
    switch (category) {
        case JoinPointCategory::MethodExecution: return "method_execution";
        case JoinPointCategory::MethodCall: return "method_call";
        case JoinPointCategory::ExceptionHandling: return "exception_handling";
        case JoinPointCategory::WithinAdvice: return "within_advice";
        case JoinPointCategory::Attribute: return "attribute";
        case JoinPointCategory::ParticularMethod: return "particular_method";
        case JoinPointCategory::ParticularClass: return "particular_class";
        case JoinPointCategory::ParticularPackage: return "particular_package";
        case JoinPointCategory::ControlFlow: return "control_flow";
        case JoinPointCategory::BooleanOrCombined: return "boolean_or_combined";
    }
    return "method_execution";
}

std::string_view to_string(SpecificityLevel level) {
    switch (level) {
        case SpecificityLevel::FullyQualified: return "fully_qualified";
        case SpecificityLevel::WildcardParams: return "wildcard_params";
        case SpecificityLevel::WildcardReturn: return "wildcard_return";
        case SpecificityLevel::WildcardName: return "wildcard_name";
        case SpecificityLevel::WildcardOrUnqualifiedClass: return "wildcard_or_unqualified_class";
    }
    return "fully_qualified";
}

std::string_view config_key(AdviceKind kind) {
    switch (kind) {
        case AdviceKind::Before: return "before";
        case AdviceKind::After: return "after";
        case AdviceKind::AfterReturning: return "after_returning";
        case AdviceKind::AfterThrowing: return "after_throwing";
        case AdviceKind::Around: return "around";
    }
    return "before";
}

Weight WeightTable::designator(std::string_view name) const {
    const auto it = designator_weights.find(name);
    return it == designator_weights.end() ? Weight{} : it->second;
}

const WeightTable& default_weights() {
    static const WeightTable table = [] {
        WeightTable t;
        t.designator_weights = {
            {"execution", 1_w}, {"call", 2_w}, {"get", 3_w}, {"set", 4_w}, {"handler", 5_w},
        };
        t.advice_weights = {1_w, 1_w, 1_w, 1_w, 2_w};
        for (std::size_t i = 0; i < kJoinPointCategoryCount; ++i) {
            t.joinpoint_type_weights[i] = Weight::from_tenths(i + 1);
        }
        for (std::size_t i = 0; i < kSpecificityLevelCount; ++i) {
            t.signature_level_weights[i] = Weight::from_tenths(i + 1);
        }
        return t;
    }();
    return table;
}

SpecificityLevel specificity_level(const SignaturePattern& p) {
    auto has = [](const std::string& s, std::string_view needle) { return s.find(needle) != std::string::npos; };
    if (has(p.declaring_type_pattern, "*") || !has(p.declaring_type_pattern, ".")) {
        return SpecificityLevel::WildcardOrUnqualifiedClass;
    }
    if (has(p.name_pattern, "*")) return SpecificityLevel::WildcardName;
    if (has(p.return_pattern, "*") || has(p.return_pattern, "||")) return SpecificityLevel::WildcardReturn;
    if (has(p.params_pattern, "..") || has(p.params_pattern, "*")) return SpecificityLevel::WildcardParams;
    return SpecificityLevel::FullyQualified;
}

Weight signature_weight(const SignaturePattern& pattern, const WeightTable& table) {
    return table.signature_level(specificity_level(pattern));
}

namespace {

Weight to_weight(const nlohmann::json& value, const std::string& where) {
    if (!value.is_number()) throw Error(ErrorCode::MalformedConfig, where + " must be a number");
    const double v = value.get<double>();
    if (v < 0) throw Error(ErrorCode::NegativeWeight, where + " is negative");
    const double scaled = v * 10.0;
    const double rounded = std::round(scaled);
    if (std::fabs(scaled - rounded) > 1e-9) {
        throw Error(ErrorCode::MalformedConfig, where + " is not a multiple of 0.1");
    }
    return Weight::from_tenths(static_cast<std::uint64_t>(rounded));
}

template <typename Enum, std::size_t N, typename NameFn>
void override_array(const nlohmann::json& section, const std::string& section_name,
                    std::array<Weight, N>& target, NameFn name_of) {
    for (const auto& [key, value] : section.items()) {
        bool found = false;
        for (std::size_t i = 0; i < N; ++i) {
            if (name_of(static_cast<Enum>(i)) == key) {
                target[i] = to_weight(value, section_name + "." + key);
                found = true;
                break;
            }
        }
        if (!found) throw Error(ErrorCode::UnknownWeightKey, section_name + "." + key);
    }
}

}  // namespace

WeightTable parse_weight_overrides(std::string_view json_text) {
    WeightTable table = default_weights();
    if (json_text.find_first_not_of(" \t\r\n") == std::string_view::npos) return table;

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedConfig, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorCode::MalformedConfig, "top level must be an object");

    for (const auto& [section, body] : doc.items()) {
        if (!body.is_object()) throw Error(ErrorCode::MalformedConfig, section + " must be an object");
        if (section == "designator") {
            for (const auto& [key, value] : body.items()) {
                if (!is_recognized_designator(key)) throw Error(ErrorCode::UnknownWeightKey, "designator." + key);
                table.designator_weights[key] = to_weight(value, "designator." + key);
            }
        } else if (section == "advice") {
            override_array<AdviceKind>(body, section, table.advice_weights,
                                       [](AdviceKind k) { return config_key(k); });
        } else if (section == "joinpoint_type") {
            override_array<JoinPointCategory>(body, section, table.joinpoint_type_weights,
                                              [](JoinPointCategory c) { return to_string(c); });
        } else if (section == "signature_level") {
            override_array<SpecificityLevel>(body, section, table.signature_level_weights,
                                             [](SpecificityLevel l) { return to_string(l); });
        } else {
            throw Error(ErrorCode::UnknownWeightKey, section);
        }
    }
    return table;
}

WeightTable load_weight_overrides(const std::filesystem::path& config_path) {
    std::ifstream in(config_path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ConfigNotFound, config_path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_weight_overrides(buffer.str());
}

}  // namespace aosce
