#include "aosce/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "aosce/corpus.hpp"
#include "aosce/error.hpp"
#include "aosce/kernels.hpp"
#include "aosce/metrics.hpp"
#include "aosce/report.hpp"
#include "aosce/weights.hpp"

namespace fs = std::filesystem;

namespace aosce {

namespace {

constexpr int kOk = 0;
constexpr int kAnalysisError = 1;
constexpr int kUsageError = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void write_file(const fs::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::WriteFailure, "cannot open " + path.string());
    out << content;
    out.flush();
    if (!out) throw Error(ErrorCode::WriteFailure, "cannot write " + path.string());
}

struct MeasuredVersion {
    std::vector<SourceUnit> units;
    VersionMetrics metrics;
};

MeasuredVersion measure(const VersionRef& version, const WeightTable& weights, bool strict, std::ostream& err) {
    MeasuredVersion mv;
    mv.units = omp::parse_files(version.files);
    mv.metrics = measure_version(version.id, mv.units, weights, {strict, Execution::Parallel});
    for (const Diagnostic& d : mv.metrics.diagnostics) err << format_diagnostic(d) << '\n';
    for (const fs::path& p : mv.metrics.excluded_files) {
        err << p.string() << ": excluded from metrics because of parse errors\n";
    }
    return mv;
}

WeightTable weights_for(const RunConfig& cfg) {
    return cfg.weights_path ? load_weight_overrides(*cfg.weights_path) : default_weights();
}

int do_scan(const RunConfig& cfg, std::ostream& out) {
    const ScanMode mode = cfg.versions_mode ? ScanMode::VersionsRoot : ScanMode::SingleVersion;
    out << describe_scan(scan_corpus(cfg.roots.front(), mode));
    return kOk;
}

int do_measure(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const WeightTable weights = weights_for(cfg);
    const VersionRef version = scan_corpus(cfg.roots.front(), ScanMode::SingleVersion).front();
    const MeasuredVersion mv = measure(version, weights, cfg.strict, err);
    const std::vector<VersionMetrics> one{mv.metrics};

    const fs::path base = cfg.output_dir / version.id;
    if (cfg.formats.count(OutputFormat::Log)) write_file(base.string() + ".log", write_log(mv.units, mv.metrics));
    if (cfg.formats.count(OutputFormat::Json)) write_file(base.string() + ".json", write_json(mv.metrics));
    if (cfg.formats.count(OutputFormat::Csv)) write_file(base.string() + ".csv", write_csv(one));
    if (cfg.formats.count(OutputFormat::Table)) out << render_table(one);
    return kOk;
}

std::vector<VersionRef> ordered_versions(const RunConfig& cfg) {
    std::vector<VersionRef> versions;
    if (cfg.versions_mode) {
        versions = scan_corpus(cfg.roots.front(), ScanMode::VersionsRoot);
    } else {
        for (const fs::path& root : cfg.roots) {
            std::vector<VersionRef> v = scan_corpus(root, ScanMode::SingleVersion);
            versions.push_back(std::move(v.front()));
        }
        std::sort(versions.begin(), versions.end(),
                  [](const VersionRef& a, const VersionRef& b) { return a.id < b.id; });
        for (std::size_t i = 1; i < versions.size(); ++i) {
            if (versions[i].id == versions[i - 1].id) throw UsageError("duplicate version id " + versions[i].id);
        }
    }
    if (cfg.order.empty()) return versions;

    std::vector<VersionRef> ordered;
    for (const std::string& id : cfg.order) {
        auto it = std::find_if(versions.begin(), versions.end(), [&](const VersionRef& v) { return v.id == id; });
        if (it == versions.end()) throw UsageError("--order names unknown version " + id);
        ordered.push_back(std::move(*it));
        versions.erase(it);
    }
    for (VersionRef& v : versions) ordered.push_back(std::move(v));
    return ordered;
}

int do_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const WeightTable weights = weights_for(cfg);
    const std::vector<VersionRef> versions = ordered_versions(cfg);

    std::vector<VersionMetrics> reports;
    for (const VersionRef& v : versions) {
        MeasuredVersion mv = measure(v, weights, cfg.strict, err);
        if (cfg.formats.count(OutputFormat::Log)) {
            write_file(cfg.output_dir / (v.id + ".log"), write_log(mv.units, mv.metrics));
        }
        reports.push_back(std::move(mv.metrics));
    }
    const ComparisonReport comparison = compare_versions(reports);

    if (cfg.formats.count(OutputFormat::Json)) write_file(cfg.output_dir / "comparison.json", write_json(comparison));
    if (cfg.formats.count(OutputFormat::Csv)) write_file(cfg.output_dir / "comparison.csv", write_csv(reports));
    if (cfg.formats.count(OutputFormat::Table)) {
        out << render_table(reports) << '\n' << render_trends(comparison);
    }
    return kOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::vector<std::string>& formats) {
    cmd->add_option("--weights", cfg.weights_path, "JSON file overriding cognitive weights");
    cmd->add_option("--format", formats, "Comma-separated outputs: log,json,csv,table")
        ->delimiter(',')
        ->check(CLI::IsMember({"log", "json", "csv", "table"}));
    cmd->add_option("--out", cfg.output_dir, "Directory for report files");
    cmd->add_flag("--strict", cfg.strict, "Fail when any file has parse errors");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Aspect-oriented complexity metrics (WPA, WAA, WJP, WMCA, NAC) for Java/AspectJ sources",
                 "aosce"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::vector<std::string> formats;
    fs::path single_root;
    fs::path versions_root;
    std::vector<fs::path> compare_roots;

    CLI::App* scan = app.add_subcommand("scan", "List discovered versions and source files");
    scan->add_option("dir", single_root, "Corpus directory")->required();
    scan->add_flag("--versions-root", cfg.versions_mode, "Treat each subdirectory as one version");

    CLI::App* measure_cmd = app.add_subcommand("measure", "Measure one version directory");
    measure_cmd->add_option("dir", single_root, "Version directory")->required();
    add_common(measure_cmd, cfg, formats);

    CLI::App* compare = app.add_subcommand("compare", "Measure and compare an ordered sequence of versions");
    compare->add_option("roots", compare_roots, "Version directories");
    compare->add_option("--versions-root", versions_root, "Directory whose subdirectories are versions");
    compare->add_option("--order", cfg.order, "Explicit version order, comma-separated")->delimiter(',');
    add_common(compare, cfg, formats);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsageError;
    }

    if (!formats.empty()) {
        static const std::map<std::string, OutputFormat> by_name{
            {"log", OutputFormat::Log}, {"json", OutputFormat::Json},
            {"csv", OutputFormat::Csv}, {"table", OutputFormat::Table}};
        cfg.formats.clear();
        for (const std::string& f : formats) cfg.formats.insert(by_name.at(f));
    }

    try {
        if (scan->parsed()) {
            cfg.command = Command::Scan;
            cfg.roots = {single_root};
            return do_scan(cfg, out);
        }
        if (measure_cmd->parsed()) {
            cfg.command = Command::Measure;
            cfg.roots = {single_root};
            return do_measure(cfg, out, err);
        }
        cfg.command = Command::Compare;
        if (!versions_root.empty()) {
            if (!compare_roots.empty()) throw UsageError("give either --versions-root or version directories");
            cfg.versions_mode = true;
            cfg.roots = {versions_root};
        } else {
            if (compare_roots.size() < 2) throw UsageError("compare needs --versions-root or at least two directories");
            cfg.roots = compare_roots;
        }
        return do_compare(cfg, out, err);
    } catch (const UsageError& e) {
        err << "aosce: " << e.what() << '\n';
        return kUsageError;
    } catch (const Error& e) {
        err << "aosce: " << e.what() << '\n';
        return kAnalysisError;
    }
}

}  // namespace aosce
