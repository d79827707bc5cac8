#include "aosce/report.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <set>

#include "aosce/error.hpp"
#include "json.hpp"

namespace aosce {

namespace {

using nlohmann::json;

std::string nac_text(const VersionMetrics& m) { return m.nac ? m.nac->rendered(3) : "NA"; }

std::vector<const SourceUnit*> sorted_units(std::span<const SourceUnit> units) {
    std::vector<const SourceUnit*> out;
    for (const SourceUnit& u : units) out.push_back(&u);
    std::stable_sort(out.begin(), out.end(),
                     [](const SourceUnit* a, const SourceUnit* b) { return a->file.path < b->file.path; });
    return out;
}

void log_pointcuts(const std::vector<PointcutDecl>& pointcuts, const PointcutScope& scope, std::string& out) {
    for (const PointcutDecl& p : pointcuts) {
        out += "  POINTCUT " + (p.anonymous() ? std::string("<anonymous>") : p.name) + ": ";
        out += p.expression ? render_expr(p.expression) : "<abstract>";
        out += '\n';
        for (JoinPointCategory c : classify_joinpoint_categories(p.expression, scope)) {
            out += "    JOINPOINT ";
            out += to_string(c);
            out += '\n';
        }
    }
}

void log_members(const std::vector<AttributeDecl>& attributes, const std::vector<MethodDecl>& methods,
                 std::string& out) {
    for (const AttributeDecl& a : attributes) out += "  ATTRIBUTE " + a.declared_type + " " + a.name + "\n";
    for (const MethodDecl& m : methods) out += "  METHOD " + m.signature_text + "\n";
}

void log_unit(const SourceUnit& unit, std::string& out) {
    const PointcutScope scope(unit);
    struct Entry {
        int line;
        const ClassDecl* cls;
        const AspectDecl* aspect;
    };
    std::vector<Entry> entries;
    for (const ClassDecl* c : flatten_classes(unit.classes)) entries.push_back({c->line, c, nullptr});
    for (const AspectDecl& a : unit.aspects) entries.push_back({a.line, nullptr, &a});
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.line < b.line; });

    for (const Entry& e : entries) {
        if (e.cls) {
            out += "CLASS " + e.cls->name + "\n";
            log_members(e.cls->attributes, e.cls->methods, out);
            log_pointcuts(e.cls->pointcuts, scope, out);
        } else {
            out += "ASPECT " + e.aspect->name + "\n";
            log_members(e.aspect->attributes, e.aspect->methods, out);
            log_pointcuts(e.aspect->pointcuts, scope, out);
            for (const AdviceDecl& a : e.aspect->advices) {
                out += "  ADVICE ";
                out += to_string(a.kind);
                out += ": " + render_expr(a.expression) + "\n";
            }
        }
    }
}

json metrics_json(const VersionMetrics& m) {
    json j;
    j["version"] = m.version_id;
    j["wpa"] = m.wpa.str();
    j["waa"] = m.waa.str();
    j["wjp"] = m.wjp.str();
    j["wmca"] = m.wmca;
    j["aspect_free"] = m.aspect_free;
    if (m.nac) {
        j["nac"] = {{"num", m.nac->num}, {"den", m.nac->den}, {"rendered", m.nac->rendered(3)}};
    } else {
        j["nac"] = nullptr;
    }
    j["counts"] = {{"aspects", m.aspect_count},
                   {"classes", m.class_count},
                   {"methods", m.method_count},
                   {"attributes", m.attribute_count}};
    j["aspects"] = json::array();
    for (const AspectMetrics& a : m.per_aspect) {
        j["aspects"].push_back({{"name", a.aspect_name},
                                {"wpa", a.wpa.str()},
                                {"waa", a.waa.str()},
                                {"wjp", a.wjp.str()},
                                {"wmca", a.wmca}});
    }
    j["classes"] = json::array();
    for (const ClassMetrics& c : m.per_class) {
        j["classes"].push_back({{"name", c.class_name},
                                {"wmca", c.wmca},
                                {"attributes", c.attribute_count},
                                {"wjp", c.wjp_contribution.str()}});
    }
    return j;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::array<std::string, 6> row_cells(const VersionMetrics& m) {
    const auto aspect_metric = [&](Weight w) { return m.aspect_free ? std::string("NA") : w.str(); };
    return {m.version_id, std::to_string(m.wmca), nac_text(m), aspect_metric(m.wpa), aspect_metric(m.waa),
            aspect_metric(m.wjp)};
}

Rational normalized(std::int64_t num, std::int64_t den) {
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    return g > 1 ? Rational{num / g, den / g} : Rational{num, den};
}

}  // namespace

std::string write_log(std::span<const SourceUnit> units, const VersionMetrics& metrics) {
    const std::vector<const SourceUnit*> ordered = sorted_units(units);
    const std::set<std::filesystem::path> excluded(metrics.excluded_files.begin(), metrics.excluded_files.end());

    std::string out;
    for (const SourceUnit* u : ordered) out += "FILE " + u->file.path.string() + "\n";
    for (const SourceUnit* u : ordered) {
        if (!excluded.count(u->file.path)) log_unit(*u, out);
    }
    out += "METRIC WPA " + metrics.wpa.str() + "\n";
    out += "METRIC WAA " + metrics.waa.str() + "\n";
    out += "METRIC WJP " + metrics.wjp.str() + "\n";
    out += "METRIC WMCA " + std::to_string(metrics.wmca) + "\n";
    out += "METRIC NAC " + nac_text(metrics) + "\n";
    return out;
}

std::string write_json(const VersionMetrics& metrics) { return metrics_json(metrics).dump(2) + "\n"; }

std::string render_table(std::span<const VersionMetrics> reports) {
    std::vector<std::array<std::string, 6>> rows;
    rows.push_back({"Version", "WMCA", "NAC", "WPA", "WAA", "WJP"});
    for (const VersionMetrics& m : reports) rows.push_back(row_cells(m));

    std::array<std::size_t, 6> width{};
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    }
    auto line = [&](const std::array<std::string, 6>& cells) {
        std::string s;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            s += cells[c];
            if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
        }
        return s + "\n";
    };

    std::string out = line(rows[0]);
    std::array<std::string, 6> rule;
    for (std::size_t c = 0; c < rule.size(); ++c) rule[c] = std::string(width[c], '-');
    out += line(rule);
    for (std::size_t r = 1; r < rows.size(); ++r) out += line(rows[r]);
    return out;
}

std::string write_csv(std::span<const VersionMetrics> reports) {
    std::string out = "version,wmca,nac,wpa,waa,wjp\n";
    for (const VersionMetrics& m : reports) {
        const auto cells = row_cells(m);
        out += csv_field(cells[0]);
        for (std::size_t c = 1; c < cells.size(); ++c) out += "," + cells[c];
        out += "\n";
    }
    return out;
}

Rational operator-(const Rational& a, const Rational& b) {
    return normalized(a.num * b.den - b.num * a.den, a.den * b.den);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
}

bool operator==(const Rational& a, const Rational& b) { return a.num * b.den == b.num * a.den; }

std::string Rational::rendered(int places) const {
    const Rational r = normalized(num, den);
    const bool negative = r.num < 0;
    const Ratio magnitude{static_cast<std::uint64_t>(negative ? -r.num : r.num), static_cast<std::uint64_t>(r.den)};
    const std::string digits = magnitude.rendered(places);
    const bool zero = digits.find_first_not_of("0.") == std::string::npos;
    return (negative && !zero ? "-" : "") + digits;
}

std::string_view to_string(Trend trend) {
    switch (trend) {
        case Trend::Increasing: return "increasing";
        case Trend::Decreasing: return "decreasing";
        case Trend::Mixed: return "mixed";
        case Trend::Flat: return "flat";
    }
    return "flat";
}

ComparisonReport compare_versions(std::span<const VersionMetrics> reports) {
    if (reports.size() < 2) {
        throw Error(ErrorCode::TooFewVersions, "comparison needs at least two versions, got " +
                                                   std::to_string(reports.size()));
    }
    ComparisonReport report;
    report.versions.assign(reports.begin(), reports.end());

    struct Def {
        const char* name;
        int places;
        std::optional<Rational> (*value)(const VersionMetrics&);
    };
    static const Def defs[] = {
        {"wmca", 0, [](const VersionMetrics& m) -> std::optional<Rational> {
             return Rational{static_cast<std::int64_t>(m.wmca), 1};
         }},
        {"nac", 3, [](const VersionMetrics& m) -> std::optional<Rational> {
             if (!m.nac) return std::nullopt;
             return Rational{static_cast<std::int64_t>(m.nac->num), static_cast<std::int64_t>(m.nac->den)};
         }},
        {"wpa", 1, [](const VersionMetrics& m) -> std::optional<Rational> {
             return Rational{static_cast<std::int64_t>(m.wpa.tenths()), 10};
         }},
        {"waa", 1, [](const VersionMetrics& m) -> std::optional<Rational> {
             return Rational{static_cast<std::int64_t>(m.waa.tenths()), 10};
         }},
        {"wjp", 1, [](const VersionMetrics& m) -> std::optional<Rational> {
             return Rational{static_cast<std::int64_t>(m.wjp.tenths()), 10};
         }},
    };

    for (const Def& def : defs) {
        MetricSeries series;
        series.metric = def.name;
        series.places = def.places;
        bool up = false;
        bool down = false;
        for (std::size_t i = 0; i < reports.size(); ++i) {
            MetricPoint point{reports[i].version_id, def.value(reports[i]), std::nullopt};
            if (i > 0 && point.value && series.points.back().value) {
                point.delta = *point.value - *series.points.back().value;
                const Rational zero{0, 1};
                up = up || *point.delta > zero;
                down = down || *point.delta < zero;
            }
            series.points.push_back(std::move(point));
        }
        series.trend = up && down ? Trend::Mixed : up ? Trend::Increasing : down ? Trend::Decreasing : Trend::Flat;
        report.series.push_back(std::move(series));
    }
    return report;
}

namespace {

std::string signed_text(const Rational& r, int places) {
    std::string s = r.rendered(places);
    if (r > Rational{0, 1} && s.find_first_not_of("0.") != std::string::npos) s.insert(0, "+");
    return s;
}

}  // namespace

std::string write_json(const ComparisonReport& report) {
    json j;
    j["versions"] = json::array();
    for (const VersionMetrics& v : report.versions) j["versions"].push_back(metrics_json(v));
    j["series"] = json::array();
    for (const MetricSeries& s : report.series) {
        json points = json::array();
        for (const MetricPoint& p : s.points) {
            json point;
            point["version"] = p.version_id;
            point["value"] = p.value ? json(p.value->rendered(s.places)) : json(nullptr);
            point["delta"] = p.delta ? json(signed_text(*p.delta, s.places)) : json(nullptr);
            points.push_back(std::move(point));
        }
        j["series"].push_back({{"metric", s.metric}, {"trend", std::string(to_string(s.trend))}, {"points", points}});
    }
    return j.dump(2) + "\n";
}

std::string render_trends(const ComparisonReport& report) {
    std::string out;
    for (const MetricSeries& s : report.series) {
        std::string name = s.metric;
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) { return std::toupper(c); });
        std::string line = name + std::string(6 - std::min<std::size_t>(name.size(), 5), ' ');
        std::string trend(to_string(s.trend));
        line += trend + std::string(12 - trend.size(), ' ');
        for (std::size_t i = 0; i < s.points.size(); ++i) {
            if (i > 0) line += " -> ";
            line += s.points[i].value ? s.points[i].value->rendered(s.places) : "NA";
        }
        out += line + "\n";
    }
    return out;
}

}  // namespace aosce
