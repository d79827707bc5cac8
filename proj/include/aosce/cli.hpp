#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace aosce {

enum class Command { Scan, Measure, Compare };

enum class OutputFormat { Log, Json, Csv, Table };

struct RunConfig {
    Command command = Command::Measure;
    std::vector<std::filesystem::path> roots;
    bool versions_mode = false;
    std::optional<std::filesystem::path> weights_path;
    std::set<OutputFormat> formats{OutputFormat::Log, OutputFormat::Json, OutputFormat::Csv,
                                   OutputFormat::Table};
    std::filesystem::path output_dir = ".";
    bool strict = false;
    std::vector<std::string> order;
};

/// Entry point behind the `aosce` binary; `args` excludes the program name.
/// Returns 0 on success, 1 on analysis errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aosce
