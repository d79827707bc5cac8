#include "aosce/ast.hpp"

#include <algorithm>

namespace aosce {

ExprPtr make_primitive(std::string designator, std::string argument, bool known) {
    return std::make_shared<const PointcutExpr>(
        PointcutExpr{Primitive{std::move(designator), std::move(argument), known}});
}

ExprPtr make_and(ExprPtr left, ExprPtr right) {
    return std::make_shared<const PointcutExpr>(PointcutExpr{AndExpr{std::move(left), std::move(right)}});
}

ExprPtr make_or(ExprPtr left, ExprPtr right) {
    return std::make_shared<const PointcutExpr>(PointcutExpr{OrExpr{std::move(left), std::move(right)}});
}

ExprPtr make_not(ExprPtr child) {
    return std::make_shared<const PointcutExpr>(PointcutExpr{NotExpr{std::move(child)}});
}

ExprPtr make_named_ref(std::string name) {
    return std::make_shared<const PointcutExpr>(PointcutExpr{NamedRef{std::move(name)}});
}

bool same_expr(const ExprPtr& a, const ExprPtr& b) {
    if (!a || !b) return !a && !b;
    if (a->node.index() != b->node.index()) return false;
    if (const auto* pa = std::get_if<Primitive>(&a->node)) {
        const auto& pb = std::get<Primitive>(b->node);
        return pa->designator == pb.designator && pa->argument_text == pb.argument_text &&
               pa->known == pb.known;
    }
    if (const auto* x = std::get_if<AndExpr>(&a->node)) {
        const auto& y = std::get<AndExpr>(b->node);
        return same_expr(x->left, y.left) && same_expr(x->right, y.right);
    }
    if (const auto* x = std::get_if<OrExpr>(&a->node)) {
        const auto& y = std::get<OrExpr>(b->node);
        return same_expr(x->left, y.left) && same_expr(x->right, y.right);
    }
    if (const auto* x = std::get_if<NotExpr>(&a->node)) {
        return same_expr(x->child, std::get<NotExpr>(b->node).child);
    }
    return std::get<NamedRef>(a->node).name == std::get<NamedRef>(b->node).name;
}

namespace {

// Or binds loosest, then And, then Not; anything else is atomic.
int precedence(const PointcutExpr& e) {
    if (std::holds_alternative<OrExpr>(e.node)) return 0;
    if (std::holds_alternative<AndExpr>(e.node)) return 1;
    if (std::holds_alternative<NotExpr>(e.node)) return 2;
    return 3;
}

void render(const ExprPtr& e, int min_prec, std::string& out) {
    if (!e) return;
    const bool paren = precedence(*e) < min_prec;
    if (paren) out += '(';
    if (const auto* p = std::get_if<Primitive>(&e->node)) {
        if (p->designator.empty()) {
            out += p->argument_text;
        } else {
            out += p->designator + "(" + p->argument_text + ")";
        }
    } else if (const auto* a = std::get_if<AndExpr>(&e->node)) {
        render(a->left, 1, out);
        out += " && ";
        render(a->right, 2, out);
    } else if (const auto* o = std::get_if<OrExpr>(&e->node)) {
        render(o->left, 0, out);
        out += " || ";
        render(o->right, 1, out);
    } else if (const auto* n = std::get_if<NotExpr>(&e->node)) {
        out += '!';
        render(n->child, 2, out);
    } else {
        out += std::get<NamedRef>(e->node).name + "()";
    }
    if (paren) out += ')';
}

}  // namespace

std::string render_expr(const ExprPtr& expr) {
    std::string out;
    render(expr, 0, out);
    return out;
}

bool is_combined(const PointcutExpr& expr) {
    return std::holds_alternative<AndExpr>(expr.node) || std::holds_alternative<OrExpr>(expr.node) ||
           std::holds_alternative<NotExpr>(expr.node);
}

std::string_view to_string(AdviceKind kind) {
    switch (kind) {
        case AdviceKind::Before: return "before";
        case AdviceKind::After: return "after";
        case AdviceKind::AfterReturning: return "after returning";
        case AdviceKind::AfterThrowing: return "after throwing";
        case AdviceKind::Around: return "around";
    }
    return "before";
}

bool SourceUnit::has_errors() const {
    return std::any_of(parse_diagnostics.begin(), parse_diagnostics.end(),
                       [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

namespace {
void flatten_into(const std::vector<ClassDecl>& classes, std::vector<const ClassDecl*>& out) {
    for (const ClassDecl& c : classes) {
        out.push_back(&c);
        flatten_into(c.nested, out);
    }
}
}  // namespace

std::vector<const ClassDecl*> flatten_classes(const std::vector<ClassDecl>& classes) {
    std::vector<const ClassDecl*> out;
    flatten_into(classes, out);
    return out;
}

}  // namespace aosce
