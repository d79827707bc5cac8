#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace aosce {

enum class FileKind { JavaFile, AspectJFile, Ignored };

std::string_view to_string(FileKind kind);

struct SourceFileRef {
    std::filesystem::path path;
    FileKind kind = FileKind::JavaFile;
    std::string version_id;

    friend bool operator==(const SourceFileRef&, const SourceFileRef&) = default;
};

struct VersionRef {
    std::string id;
    std::filesystem::path root;
    std::vector<SourceFileRef> files;  // sorted by path

    friend bool operator==(const VersionRef&, const VersionRef&) = default;
};

enum class ScanMode { SingleVersion, VersionsRoot };

/// Classification by extension only, case-insensitive.
FileKind classify_file(const std::filesystem::path& path);

/// Walks `root` and returns the versions it holds. Paths are made absolute.
/// Symlinks are not followed and dot-prefixed directories are skipped.
/// Throws Error(RootNotFound) or Error(EmptyCorpus).
std::vector<VersionRef> scan_corpus(const std::filesystem::path& root, ScanMode mode);

/// Stable text form of a scan result, one line per version and file.
std::string describe_scan(const std::vector<VersionRef>& versions);

}  // namespace aosce
