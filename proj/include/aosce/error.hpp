#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace aosce {

enum class ErrorCode {
    RootNotFound,
    EmptyCorpus,
    ConfigNotFound,
    MalformedConfig,
    UnknownWeightKey,
    NegativeWeight,
    StrictModeParseFailure,
    TooFewVersions,
    WriteFailure,
};

std::string_view to_string(ErrorCode code);

/// Analysis failure raised by the pipeline stages. The CLI maps these to exit codes.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

enum class Severity { Warning, Error };

struct Diagnostic {
    std::filesystem::path file;
    int line = 1;
    Severity severity = Severity::Warning;
    std::string message;

    friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

std::string format_diagnostic(const Diagnostic& d);

}  // namespace aosce
