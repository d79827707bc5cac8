#include "aosce/metrics.hpp"

#include <algorithm>
#include <tuple>

#include "aosce/kernels.hpp"
#include "aosce/pointcut.hpp"

namespace aosce {

PointcutScope::PointcutScope(const SourceUnit& unit) {
    auto add = [this](const std::string& owner, const std::vector<PointcutDecl>& pointcuts) {
        for (const PointcutDecl& p : pointcuts) {
            if (p.anonymous()) continue;
            by_name_.emplace(p.name, &p);
            by_name_.emplace(owner + "." + p.name, &p);
        }
    };
    for (const AspectDecl& a : unit.aspects) add(a.name, a.pointcuts);
    for (const ClassDecl* c : flatten_classes(unit.classes)) add(c->name, c->pointcuts);
}

const PointcutDecl* PointcutScope::find(const std::string& name) const {
    const auto it = by_name_.find(name);
    return it == by_name_.end() ? nullptr : it->second;
}

namespace {

struct Classifier {
    const PointcutScope& scope;
    std::vector<Diagnostic>* diagnostics;
    const std::filesystem::path& file;
    int line;
    std::vector<std::string> resolving;
    CategorySet out;

    void note(std::string message) {
        if (diagnostics) diagnostics->push_back({file, line, Severity::Warning, std::move(message)});
    }

    void primitive(const Primitive& p) {
        if (!p.known) return;
        const std::string& d = p.designator;
        if (d == "execution" || d == "call") {
            const SignatureParse sig = extract_signature_pattern(p);
            const bool exact = sig.pattern && specificity_level(*sig.pattern) == SpecificityLevel::FullyQualified;
            if (exact) {
                out.insert(JoinPointCategory::ParticularMethod);
            } else {
                out.insert(d == "execution" ? JoinPointCategory::MethodExecution : JoinPointCategory::MethodCall);
            }
        } else if (d == "handler") {
            out.insert(JoinPointCategory::ExceptionHandling);
        } else if (d == "adviceexecution") {
            out.insert(JoinPointCategory::WithinAdvice);
        } else if (d == "get" || d == "set") {
            out.insert(JoinPointCategory::Attribute);
        } else if (d == "within") {
            const std::string& arg = p.argument_text;
            const bool package = arg.size() >= 3 && arg.compare(arg.size() - 3, 3, "..*") == 0;
            out.insert(package ? JoinPointCategory::ParticularPackage : JoinPointCategory::ParticularClass);
        } else if (d == "cflow" || d == "cflowbelow") {
            out.insert(JoinPointCategory::ControlFlow);
        }
    }

    void visit(const ExprPtr& e) {
        if (!e) return;
        if (const auto* p = std::get_if<Primitive>(&e->node)) {
            primitive(*p);
        } else if (const auto* a = std::get_if<AndExpr>(&e->node)) {
            out.insert(JoinPointCategory::BooleanOrCombined);
            visit(a->left);
            visit(a->right);
        } else if (const auto* o = std::get_if<OrExpr>(&e->node)) {
            out.insert(JoinPointCategory::BooleanOrCombined);
            visit(o->left);
            visit(o->right);
        } else if (const auto* n = std::get_if<NotExpr>(&e->node)) {
            out.insert(JoinPointCategory::BooleanOrCombined);
            visit(n->child);
        } else {
            const std::string& name = std::get<NamedRef>(e->node).name;
            const PointcutDecl* decl = scope.find(name);
            if (!decl) {
                note("pointcut " + name + " is not declared in this file; it contributes no join points");
                return;
            }
            if (std::find(resolving.begin(), resolving.end(), name) != resolving.end()) {
                note("pointcut " + name + " refers to itself");
                return;
            }
            resolving.push_back(name);
            visit(decl->expression);
            resolving.pop_back();
        }
    }
};

void sum_wpa(const ExprPtr& e, const WeightTable& w, Weight& total) {
    if (!e) return;
    if (const auto* p = std::get_if<Primitive>(&e->node)) {
        if (!p->known) return;
        total += w.designator(p->designator);
        if (const SignatureParse sig = extract_signature_pattern(*p); sig.pattern) {
            total += signature_weight(*sig.pattern, w);
        }
    } else if (const auto* a = std::get_if<AndExpr>(&e->node)) {
        sum_wpa(a->left, w, total);
        sum_wpa(a->right, w, total);
    } else if (const auto* o = std::get_if<OrExpr>(&e->node)) {
        sum_wpa(o->left, w, total);
        sum_wpa(o->right, w, total);
    } else if (const auto* n = std::get_if<NotExpr>(&e->node)) {
        sum_wpa(n->child, w, total);
    }
}

std::uint64_t count_methods(const std::vector<MethodDecl>& methods) {
    return static_cast<std::uint64_t>(
        std::count_if(methods.begin(), methods.end(), [](const MethodDecl& m) { return !m.is_constructor; }));
}

}  // namespace

CategorySet classify_joinpoint_categories(const ExprPtr& expr, const PointcutScope& scope,
                                          std::vector<Diagnostic>* diagnostics,
                                          const std::filesystem::path& file, int line) {
    Classifier c{scope, diagnostics, file, line, {}, {}};
    c.visit(expr);
    return std::move(c.out);
}

Weight pointcut_wpa(const ExprPtr& expr, const WeightTable& weights) {
    Weight total;
    sum_wpa(expr, weights, total);
    return total;
}

Weight wpa_aspect(const AspectDecl& aspect, const WeightTable& weights) {
    Weight total;
    for (const PointcutDecl& p : aspect.pointcuts) total += pointcut_wpa(p.expression, weights);
    return total;
}

Weight waa_aspect(const AspectDecl& aspect, const WeightTable& weights) {
    Weight total;
    for (const AdviceDecl& a : aspect.advices) total += weights.advice(a.kind);
    return total;
}

Weight wjp_pointcuts(const std::vector<PointcutDecl>& pointcuts, const PointcutScope& scope,
                     const WeightTable& weights, std::vector<Diagnostic>* diagnostics,
                     const std::filesystem::path& file) {
    Weight total;
    for (const PointcutDecl& p : pointcuts) {
        for (JoinPointCategory c :
             classify_joinpoint_categories(p.expression, scope, diagnostics, file, p.source_line)) {
            total += weights.joinpoint_type(c);
        }
    }
    return total;
}

std::uint64_t wmca_unit(const ClassDecl& cls) { return count_methods(cls.methods); }
std::uint64_t wmca_unit(const AspectDecl& aspect) { return count_methods(aspect.methods); }

std::string Ratio::rendered(int places) const {
    std::uint64_t scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const std::uint64_t q = (2 * num * scale + den) / (2 * den);
    std::string frac = std::to_string(q % scale);
    if (places > 0) frac.insert(0, static_cast<std::size_t>(places) - frac.size(), '0');
    return std::to_string(q / scale) + (places > 0 ? "." + frac : "");
}

UnitMetrics measure_unit(const SourceUnit& unit, const WeightTable& weights) {
    UnitMetrics m;
    m.file = unit.file.path;
    const PointcutScope scope(unit);
    for (const AspectDecl& a : unit.aspects) {
        m.per_aspect.push_back({a.name, wpa_aspect(a, weights), waa_aspect(a, weights),
                                wjp_pointcuts(a.pointcuts, scope, weights, &m.diagnostics, unit.file.path),
                                wmca_unit(a)});
    }
    for (const ClassDecl* c : flatten_classes(unit.classes)) {
        m.per_class.push_back({c->name, wmca_unit(*c), c->attributes.size(),
                               wjp_pointcuts(c->pointcuts, scope, weights, &m.diagnostics, unit.file.path)});
    }
    return m;
}

namespace {

bool diagnostic_less(const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.file, a.line, a.severity, a.message) < std::tie(b.file, b.line, b.severity, b.message);
}

}  // namespace

VersionMetrics aggregate_version(const std::string& version_id, std::span<const UnitMetrics> units) {
    VersionMetrics v;
    v.version_id = version_id;
    for (const UnitMetrics& u : units) {
        v.per_aspect.insert(v.per_aspect.end(), u.per_aspect.begin(), u.per_aspect.end());
        v.per_class.insert(v.per_class.end(), u.per_class.begin(), u.per_class.end());
        v.diagnostics.insert(v.diagnostics.end(), u.diagnostics.begin(), u.diagnostics.end());
    }
    std::sort(v.per_aspect.begin(), v.per_aspect.end(), [](const AspectMetrics& a, const AspectMetrics& b) {
        return std::tie(a.aspect_name, a.wpa, a.waa, a.wjp, a.wmca) <
               std::tie(b.aspect_name, b.wpa, b.waa, b.wjp, b.wmca);
    });
    std::sort(v.per_class.begin(), v.per_class.end(), [](const ClassMetrics& a, const ClassMetrics& b) {
        return std::tie(a.class_name, a.wmca, a.attribute_count, a.wjp_contribution) <
               std::tie(b.class_name, b.wmca, b.attribute_count, b.wjp_contribution);
    });
    std::sort(v.diagnostics.begin(), v.diagnostics.end(), diagnostic_less);

    for (const AspectMetrics& a : v.per_aspect) {
        v.wpa += a.wpa;
        v.waa += a.waa;
        v.wjp += a.wjp;
        v.wmca += a.wmca;
    }
    for (const ClassMetrics& c : v.per_class) {
        v.wjp += c.wjp_contribution;
        v.wmca += c.wmca;
        v.attribute_count += c.attribute_count;
    }
    v.aspect_count = v.per_aspect.size();
    v.class_count = v.per_class.size();
    v.method_count = v.wmca;
    v.aspect_free = v.aspect_count == 0;
    // Pointcuts only select join points for advice, and advice lives in aspects.
    if (v.aspect_free) v.wjp = Weight{};
    if (v.class_count > 0) v.nac = Ratio{v.attribute_count, v.class_count};
    return v;
}

std::optional<Ratio> nac_version(std::span<const SourceUnit> units) {
    std::uint64_t attributes = 0;
    std::uint64_t classes = 0;
    for (const SourceUnit& u : units) {
        for (const ClassDecl* c : flatten_classes(u.classes)) {
            ++classes;
            attributes += c->attributes.size();
        }
    }
    if (classes == 0) return std::nullopt;
    return Ratio{attributes, classes};
}

WjpBreakdown wjp_version(std::span<const SourceUnit> units, const WeightTable& weights) {
    WjpBreakdown out;
    bool any_aspect = false;
    for (const SourceUnit& u : units) {
        const PointcutScope scope(u);
        for (const AspectDecl& a : u.aspects) {
            any_aspect = true;
            const Weight w = wjp_pointcuts(a.pointcuts, scope, weights);
            out.per_aspect.emplace_back(a.name, w);
            out.total += w;
        }
        for (const ClassDecl* c : flatten_classes(u.classes)) {
            const Weight w = wjp_pointcuts(c->pointcuts, scope, weights);
            out.per_class.emplace_back(c->name, w);
            out.total += w;
        }
    }
    if (!any_aspect) out.total = Weight{};
    return out;
}

VersionMetrics measure_version(const std::string& version_id, std::span<const SourceUnit> units,
                               const WeightTable& weights, const MeasureOptions& options) {
    std::vector<SourceUnit> clean;
    std::vector<std::filesystem::path> excluded;
    std::vector<Diagnostic> parse_diags;
    for (const SourceUnit& u : units) {
        parse_diags.insert(parse_diags.end(), u.parse_diagnostics.begin(), u.parse_diagnostics.end());
        if (u.has_errors()) {
            excluded.push_back(u.file.path);
        } else {
            clean.push_back(u);
        }
    }
    std::sort(excluded.begin(), excluded.end());
    if (options.strict && !excluded.empty()) {
        std::string files;
        for (const auto& p : excluded) files += (files.empty() ? "" : ", ") + p.string();
        throw Error(ErrorCode::StrictModeParseFailure, "version " + version_id + ": parse errors in " + files);
    }

    const std::vector<UnitMetrics> per_unit = options.execution == Execution::Serial
                                                  ? serial::measure_units(clean, weights)
                                                  : omp::measure_units(clean, weights);
    VersionMetrics v = aggregate_version(version_id, per_unit);
    v.excluded_files = std::move(excluded);
    v.diagnostics.insert(v.diagnostics.end(), parse_diags.begin(), parse_diags.end());
    std::sort(v.diagnostics.begin(), v.diagnostics.end(), diagnostic_less);
    return v;
}

}  // namespace aosce
