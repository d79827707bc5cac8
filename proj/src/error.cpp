#include "aosce/error.hpp"

namespace aosce {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::RootNotFound: return "RootNotFound";
        case ErrorCode::EmptyCorpus: return "EmptyCorpus";
        case ErrorCode::ConfigNotFound: return "ConfigNotFound";
        case ErrorCode::MalformedConfig: return "MalformedConfig";
        case ErrorCode::UnknownWeightKey: return "UnknownWeightKey";
        case ErrorCode::NegativeWeight: return "NegativeWeight";
        case ErrorCode::StrictModeParseFailure: return "StrictModeParseFailure";
        case ErrorCode::TooFewVersions: return "TooFewVersions";
        case ErrorCode::WriteFailure: return "WriteFailure";
    }
    return "Unknown";
}

std::string format_diagnostic(const Diagnostic& d) {
    std::string out = d.file.string();
    out += ':';
    out += std::to_string(d.line);
    out += d.severity == Severity::Error ? ": error: " : ": warning: ";
    out += d.message;
    return out;
}

}  // namespace aosce
