#include "aosce/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <system_error>

#include "aosce/error.hpp"

namespace fs = std::filesystem;

namespace aosce {

std::string_view to_string(FileKind kind) {
    switch (kind) {
        case FileKind::JavaFile: return "java";
        case FileKind::AspectJFile: return "aj";
        case FileKind::Ignored: return "ignored";
    }
    return "ignored";
}

FileKind classify_file(const fs::path& path) {
    std::string ext = path.extension().string();
    std::transform(ext.begin(), ext.end(), ext.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (ext == ".java") return FileKind::JavaFile;
    if (ext == ".aj") return FileKind::AspectJFile;
    return FileKind::Ignored;
}

namespace {

bool hidden(const fs::path& p) {
    const std::string name = p.filename().string();
    return !name.empty() && name.front() == '.';
}

std::vector<SourceFileRef> collect_sources(const fs::path& root, const std::string& version_id) {
    std::vector<SourceFileRef> files;
    std::error_code ec;
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw Error(ErrorCode::RootNotFound, root.string() + ": " + ec.message());
    for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
        if (ec) break;
        const fs::directory_entry& entry = *it;
        if (entry.is_symlink(ec)) {
            it.disable_recursion_pending();
            continue;
        }
        if (entry.is_directory(ec)) {
            if (hidden(entry.path())) it.disable_recursion_pending();
            continue;
        }
        if (!entry.is_regular_file(ec)) continue;
        const FileKind kind = classify_file(entry.path());
        if (kind == FileKind::Ignored) continue;
        files.push_back({entry.path(), kind, version_id});
    }
    std::sort(files.begin(), files.end(),
              [](const SourceFileRef& a, const SourceFileRef& b) { return a.path < b.path; });
    return files;
}

}  // namespace

std::vector<VersionRef> scan_corpus(const fs::path& root, ScanMode mode) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw Error(ErrorCode::RootNotFound, root.string() + " is not a directory");
    }
    const fs::path base = fs::weakly_canonical(fs::absolute(root));

    std::vector<VersionRef> versions;
    if (mode == ScanMode::SingleVersion) {
        std::string id = base.filename().string();
        versions.push_back({id, base, collect_sources(base, id)});
    } else {
        std::vector<fs::path> children;
        for (const fs::directory_entry& entry : fs::directory_iterator(base)) {
            if (entry.is_symlink() || !entry.is_directory() || hidden(entry.path())) continue;
            children.push_back(entry.path());
        }
        std::sort(children.begin(), children.end(), [](const fs::path& a, const fs::path& b) {
            return a.filename().string() < b.filename().string();
        });
        for (const fs::path& child : children) {
            std::string id = child.filename().string();
            versions.push_back({id, child, collect_sources(child, id)});
        }
    }

    const bool any = std::any_of(versions.begin(), versions.end(),
                                 [](const VersionRef& v) { return !v.files.empty(); });
    if (!any) throw Error(ErrorCode::EmptyCorpus, "no .java or .aj files under " + base.string());
    return versions;
}

std::string describe_scan(const std::vector<VersionRef>& versions) {
    std::string out;
    for (const VersionRef& v : versions) {
        out += "VERSION " + v.id + " " + v.root.string() + " (" + std::to_string(v.files.size()) +
               " files)\n";
        for (const SourceFileRef& f : v.files) {
            out += "  ";
            out += to_string(f.kind);
            out += ' ';
            out += f.path.string();
            out += '\n';
        }
    }
    return out;
}

}  // namespace aosce
