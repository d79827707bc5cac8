// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "aosce/kernels.hpp"
#include "aosce/parser.hpp"
#include "aosce/report.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace aosce;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

// Collects the first few mismatches so a failure line says what went wrong.
class Checker {
public:
    template <class A, class B>
    void equal(const A& actual, const B& expected, const std::string& what) {
        if (actual == expected) return;
        ++failures_;
        if (failures_ <= 3) {
            std::ostringstream s;
            s << what << ": got " << actual << ", want " << expected;
            notes_.push_back(s.str());
        }
    }
    void that(bool condition, const std::string& what) {
        if (condition) return;
        ++failures_;
        if (failures_ <= 3) notes_.push_back(what);
    }

    Outcome outcome(const std::string& summary) const {
        if (failures_ == 0) return {true, summary};
        std::string d = std::to_string(failures_) + " mismatch(es)";
        for (const std::string& n : notes_) d += "; " + n;
        return {false, d};
    }

private:
    int failures_ = 0;
    std::vector<std::string> notes_;
};

std::string nac_text(const VersionMetrics& v) {
    return v.nac ? std::to_string(v.nac->num) + "/" + std::to_string(v.nac->den) : std::string("NA");
}

std::vector<SourceUnit> parse_version(const std::string& id) {
    const VersionRef v = scan_corpus(testing::fixtures_dir() / id, ScanMode::SingleVersion).front();
    return serial::parse_files(v.files);
}

Outcome fixture_oracle() {
    Checker c;
    double slowest = 0;
    for (const std::string& id : testing::mini_uas_versions()) {
        const testing::Manifest m = testing::read_manifest(testing::fixtures_dir() / id);
        const auto start = std::chrono::steady_clock::now();
        const testing::Measured r = testing::measure_dir(testing::fixtures_dir() / id, Execution::Parallel);
        const std::string outputs = write_log(r.units, r.metrics) + write_json(r.metrics);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        slowest = std::max(slowest, secs);

        const VersionMetrics& v = r.metrics;
        c.equal(v.wmca, m.number("wmca"), id + " wmca");
        c.equal(nac_text(v), m.at("nac"), id + " nac");
        c.equal(v.nac ? v.nac->rendered() : "NA", m.at("nac_rendered"), id + " nac rendered");
        if (m.at("wpa") == "NA") {
            c.that(v.aspect_free, id + " should be aspect free");
        } else {
            c.equal(v.wpa.str(), m.at("wpa"), id + " wpa");
            c.equal(v.waa.str(), m.at("waa"), id + " waa");
            c.equal(v.wjp.str(), m.at("wjp"), id + " wjp");
        }
        c.that(secs < 1.0, id + " took " + std::to_string(secs) + " s");
        c.that(!outputs.empty(), id + " produced no output");
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "slowest version %.3f s", slowest);
    return c.outcome("5 versions match their manifests, " + std::string(buf));
}

Outcome zero_law() {
    Checker c;
    std::mt19937_64 rng(20240611);
    constexpr int kCases = 120;
    for (int k = 0; k < kCases; ++k) {
        testing::TempDir dir("zero");
        const int files = std::uniform_int_distribution<int>(1, 5)(rng);
        std::uint64_t classes = 0, attributes = 0, methods = 0;
        for (int f = 0; f < files; ++f) {
            const testing::GeneratedJava g = testing::random_java_file(rng, f);
            testing::write_text(dir.path() / "gen" / g.file_name, g.text);
            classes += g.classes;
            attributes += g.attributes;
            methods += g.methods;
        }
        const testing::Measured r = testing::measure_dir(dir.path());
        const VersionMetrics& v = r.metrics;
        const std::string label = "case " + std::to_string(k);
        c.that(v.aspect_free, label + " not aspect free");
        c.equal(v.wpa.tenths(), 0u, label + " wpa");
        c.equal(v.waa.tenths(), 0u, label + " waa");
        c.equal(v.wjp.tenths(), 0u, label + " wjp");
        const std::vector<VersionMetrics> one{v};
        const std::string csv = write_csv(one);
        const std::string row = csv.substr(csv.find('\n') + 1);
        const std::string tail = ",NA,NA,NA\n";
        c.that(row.size() > tail.size() && row.compare(row.size() - tail.size(), tail.size(), tail) == 0,
               label + " row lacks NA: " + row);
        c.equal(v.class_count, classes, label + " classes");
        c.equal(v.attribute_count, attributes, label + " attributes");
        c.equal(v.wmca, methods, label + " methods");
    }
    return c.outcome(std::to_string(kCases) + " random Java-only versions: WPA = WAA = WJP = 0, rendered NA");
}

Outcome nac_anchor() {
    Checker c;
    const testing::Measured r = testing::measure_dir(testing::fixtures_dir() / "J1.0");
    c.equal(r.metrics.class_count, 12u, "classes");
    c.equal(r.metrics.attribute_count, 115u, "attributes");
    c.equal(r.metrics.nac ? r.metrics.nac->rendered() : "NA", "9.583", "rendered NAC");
    const std::vector<VersionMetrics> one{r.metrics};
    c.that(render_table(one).find(" 9.583 ") != std::string::npos, "table lacks 9.583");
    return c.outcome("J1.0: 115 attributes / 12 classes renders 9.583");
}

struct Totals {
    std::uint64_t wpa = 0, waa = 0, wjp = 0, wmca = 0, na = 0, nc = 0;
    friend bool operator==(const Totals&, const Totals&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Totals& t) {
        return os << "{" << t.wpa << "," << t.waa << "," << t.wjp << "," << t.wmca << "," << t.na << "," << t.nc << "}";
    }
};

Totals totals(const std::vector<SourceUnit>& units) {
    const VersionMetrics v = measure_version("part", units, default_weights(), {false, Execution::Serial});
    return {v.wpa.tenths(), v.waa.tenths(), v.wjp.tenths(), v.wmca, v.attribute_count, v.class_count};
}

Outcome additivity() {
    Checker c;
    std::mt19937_64 rng(7);
    std::vector<std::vector<SourceUnit>> versions;
    std::vector<Totals> whole;
    for (const std::string& id : testing::mini_uas_versions()) {
        versions.push_back(parse_version(id));
        whole.push_back(totals(versions.back()));
    }
    constexpr int kPartitions = 240;
    for (int k = 0; k < kPartitions; ++k) {
        const std::size_t which = k % versions.size();
        std::vector<SourceUnit> a, b;
        for (const SourceUnit& u : versions[which]) (rng() % 2 ? a : b).push_back(u);
        const Totals ta = totals(a), tb = totals(b);
        const Totals sum{ta.wpa + tb.wpa, ta.waa + tb.waa, ta.wjp + tb.wjp,
                         ta.wmca + tb.wmca, ta.na + tb.na, ta.nc + tb.nc};
        c.equal(sum, whole[which], "partition " + std::to_string(k) + " of " + testing::mini_uas_versions()[which]);
    }
    return c.outcome(std::to_string(kPartitions) + " random partitions: wpa, waa, wjp, wmca, NA, NC add up");
}

Outcome permutation_invariance() {
    Checker c;
    std::mt19937_64 rng(99);
    constexpr int kShuffles = 60;
    std::vector<VersionRef> refs;
    std::vector<std::string> baseline;
    const auto render_all = [](const VersionRef& v, Execution ex) {
        const std::vector<SourceUnit> units = parse_files(v.files, ex);
        const VersionMetrics m = measure_version(v.id, units, default_weights(), {false, ex});
        const std::vector<VersionMetrics> one{m};
        return write_json(m) + write_log(units, m) + render_table(one) + write_csv(one);
    };
    for (const std::string& id : testing::mini_uas_versions()) {
        refs.push_back(scan_corpus(testing::fixtures_dir() / id, ScanMode::SingleVersion).front());
        baseline.push_back(render_all(refs.back(), Execution::Serial));
    }
    for (int k = 0; k < kShuffles; ++k) {
        const std::size_t which = k % refs.size();
        VersionRef shuffled = refs[which];
        std::shuffle(shuffled.files.begin(), shuffled.files.end(), rng);
        const Execution ex = k % 2 ? Execution::Parallel : Execution::Serial;
        c.that(render_all(shuffled, ex) == baseline[which], "shuffle " + std::to_string(k) + " changed the output");
    }
    return c.outcome(std::to_string(kShuffles) + " shuffles: JSON, log, table and CSV byte-identical");
}

Outcome counting_oracle() {
    Checker c;
    std::size_t files = 0;
    for (const std::string& id : testing::mini_uas_versions()) {
        const fs::path dir = testing::fixtures_dir() / id;
        const testing::Manifest m = testing::read_manifest(dir);
        std::uint64_t total = 0;
        for (const testing::ManifestFile& f : m.files) {
            const fs::path path = dir / f.relpath;
            const SourceUnit u = parse_file({path, classify_file(path), id});
            const UnitMetrics um = measure_unit(u, default_weights());
            std::uint64_t wmca = 0;
            for (const ClassMetrics& cm : um.per_class) wmca += cm.wmca;
            for (const AspectMetrics& am : um.per_aspect) wmca += am.wmca;
            const std::uint64_t expected = testing::count_entries(f, "method");
            c.equal(wmca, expected, id + "/" + f.relpath);
            total += expected;
            ++files;
        }
        c.equal(total, m.number("wmca"), id + " manifest total");
        c.equal(testing::measure_dir(dir).metrics.wmca, total, id + " version wmca");
    }
    return c.outcome(std::to_string(files) + " fixture files: wmca equals the manifest method count");
}

Outcome exact_arithmetic() {
    Checker c;
    Weight sum;
    for (int i = 0; i < 1000; ++i) sum += Weight::from_tenths(1);
    c.equal(sum.str(), "100.0", "direct sum");

    // The same sum through the whole pipeline: 1000 before advices of 0.1 each.
    testing::TempDir dir("exact");
    std::string text = "aspect Many {\n    pointcut p(): execution(void a.B.c());\n";
    for (int i = 0; i < 1000; ++i) text += "    before(): p() { }\n";
    text += "}\n";
    testing::write_text(dir.path() / "Many.aj", text);
    const testing::Measured r = testing::measure_dir(dir.path());
    c.equal(r.metrics.waa.str(), "100.0", "pipeline WAA");
    c.that(write_log(r.units, r.metrics).find("\nMETRIC WAA 100.0\n") != std::string::npos, "log lacks WAA 100.0");
    return c.outcome("1000 x 0.1 renders 100.0, directly and through the log");
}

Outcome comment_immunity() {
    Checker c;
    const testing::Measured plain = testing::measure_dir(testing::data_dir() / "immunity" / "plain");
    const testing::Measured noisy = testing::measure_dir(testing::data_dir() / "immunity" / "noisy");
    const auto strip_id = [](std::string json, const std::string& id) {
        return testing::replace_all(std::move(json), "\"" + id + "\"", "\"<ID>\"");
    };
    c.equal(strip_id(write_json(noisy.metrics), "noisy"), strip_id(write_json(plain.metrics), "plain"), "JSON");
    c.that(noisy.metrics.per_aspect == plain.metrics.per_aspect, "per-aspect metrics differ");
    c.that(noisy.metrics.per_class == plain.metrics.per_class, "per-class metrics differ");
    c.that(noisy.metrics.diagnostics.empty(), "noisy fixture produced diagnostics");
    return c.outcome("commented and quoted declarations leave every metric unchanged");
}

Outcome monotonicity() {
    Checker c;
    int trials = 0;
    for (const std::string& id : testing::mini_uas_versions()) {
        const fs::path src = testing::fixtures_dir() / id;
        const testing::Measured base = testing::measure_dir(src);
        for (const SourceUnit& unit : base.units) {
            if (unit.aspects.empty()) continue;
            const AspectDecl& aspect = unit.aspects.front();
            const auto named = std::find_if(aspect.pointcuts.begin(), aspect.pointcuts.end(),
                                            [](const PointcutDecl& p) { return !p.anonymous(); });
            if (named == aspect.pointcuts.end()) continue;

            testing::TempDir tmp("mono");
            const fs::path copy = tmp.path() / id;
            fs::copy(src, copy, fs::copy_options::recursive);
            const fs::path target = copy / fs::relative(unit.file.path, base.version.root);
            std::string text = testing::read_text(target);
            text.insert(text.rfind('}'), "    before(): " + named->name + "() {\n    }\n");
            testing::write_text(target, text);

            const VersionMetrics& before = base.metrics;
            const VersionMetrics after = testing::measure_dir(copy).metrics;
            const std::string label = id + " " + aspect.name;
            c.equal(after.waa.tenths(), before.waa.tenths() + 1, label + " waa");
            c.equal(after.wpa.tenths(), before.wpa.tenths(), label + " wpa");
            c.equal(after.wjp.tenths(), before.wjp.tenths(), label + " wjp");
            c.equal(after.wmca, before.wmca, label + " wmca");
            c.equal(nac_text(after), nac_text(before), label + " nac");
            c.equal(after.aspect_count, before.aspect_count, label + " aspects");
            ++trials;
        }
    }
    c.that(trials > 0, "no aspects to extend");
    return c.outcome(std::to_string(trials) + " aspects: one more before() adds exactly 0.1 to WAA, nothing else");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"fixture oracle", fixture_oracle},
        {"zero law for Java-only versions", zero_law},
        {"NAC anchor 9.583", nac_anchor},
        {"additivity", additivity},
        {"permutation invariance", permutation_invariance},
        {"counting oracle", counting_oracle},
        {"exact arithmetic", exact_arithmetic},
        {"comment/string immunity", comment_immunity},
        {"before() monotonicity", monotonicity},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  [" << i + 1 << "] " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
