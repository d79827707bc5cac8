#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "aosce/corpus.hpp"
#include "aosce/metrics.hpp"

namespace testing {

std::filesystem::path source_dir();
std::filesystem::path fixtures_dir();  // fixtures/mini-uas
std::filesystem::path data_dir();      // tests/data

inline const std::vector<std::string>& mini_uas_versions() {
    static const std::vector<std::string> ids{"J1.0", "AJ1.1", "AJ1.2", "AJ1.3", "AJ1.4"};
    return ids;
}

std::string read_text(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

// Replaces every occurrence of `from` with `to`.
std::string replace_all(std::string text, const std::string& from, const std::string& to);

/// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag);
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

// A MANIFEST file as written next to each fixture version.
struct ManifestFile {
    std::string relpath;
    std::vector<std::string> entries;  // "class X attributes=N", "method ...", ...
};

struct Manifest {
    std::map<std::string, std::string> header;
    std::vector<ManifestFile> files;

    const std::string& at(const std::string& key) const { return header.at(key); }
    std::uint64_t number(const std::string& key) const { return std::stoull(header.at(key)); }
};

Manifest read_manifest(const std::filesystem::path& version_dir);

/// Lines of `file` that start with `prefix` followed by a space.
std::uint64_t count_entries(const ManifestFile& file, const std::string& prefix);

/// Parses and measures one version directory with the default weights.
struct Measured {
    aosce::VersionRef version;
    std::vector<aosce::SourceUnit> units;
    aosce::VersionMetrics metrics;
};
Measured measure_dir(const std::filesystem::path& dir, aosce::Execution execution = aosce::Execution::Serial);

// Random Java-only sources. The generator keeps its own tally of what it wrote.
struct GeneratedJava {
    std::string file_name;
    std::string text;
    std::uint64_t classes = 0;
    std::uint64_t attributes = 0;
    std::uint64_t methods = 0;  // constructors excluded
};
GeneratedJava random_java_file(std::mt19937_64& rng, int index);

}  // namespace testing
