#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "aosce/corpus.hpp"
#include "aosce/error.hpp"

namespace aosce {

struct PointcutExpr;
using ExprPtr = std::shared_ptr<const PointcutExpr>;

struct Primitive {
    std::string designator;
    std::string argument_text;
    bool known = true;
};

struct AndExpr {
    ExprPtr left;
    ExprPtr right;
};

struct OrExpr {
    ExprPtr left;
    ExprPtr right;
};

struct NotExpr {
    ExprPtr child;
};

struct NamedRef {
    std::string name;
};

/// Immutable pointcut expression tree. Children are shared, so copies are cheap.
struct PointcutExpr {
    std::variant<Primitive, AndExpr, OrExpr, NotExpr, NamedRef> node;
};

ExprPtr make_primitive(std::string designator, std::string argument, bool known = true);
ExprPtr make_and(ExprPtr left, ExprPtr right);
ExprPtr make_or(ExprPtr left, ExprPtr right);
ExprPtr make_not(ExprPtr child);
ExprPtr make_named_ref(std::string name);

/// Structural equality; null equals null.
bool same_expr(const ExprPtr& a, const ExprPtr& b);

/// Canonical text: `a && b`, `a || b`, `!a`, `name()`, parenthesised only where precedence needs it.
std::string render_expr(const ExprPtr& expr);

bool is_combined(const PointcutExpr& expr);

struct MethodDecl {
    std::string name;
    std::string signature_text;
    bool is_constructor = false;
    bool is_intertype = false;
    int line = 1;
};

struct AttributeDecl {
    std::string name;
    std::string declared_type;
    int line = 1;
};

/// `name` is empty for the anonymous pointcut of an advice with an inline expression.
/// `expression` is null for abstract pointcuts.
struct PointcutDecl {
    std::string name;
    ExprPtr expression;
    int source_line = 1;

    bool anonymous() const { return name.empty(); }
};

enum class AdviceKind { Before, After, AfterReturning, AfterThrowing, Around };

std::string_view to_string(AdviceKind kind);

struct AdviceDecl {
    AdviceKind kind = AdviceKind::Before;
    ExprPtr expression;
    int source_line = 1;
};

struct ClassDecl {
    std::string name;  // nested classes are qualified: Outer.Inner
    int line = 1;
    std::vector<MethodDecl> methods;
    std::vector<AttributeDecl> attributes;
    std::vector<PointcutDecl> pointcuts;
    std::vector<ClassDecl> nested;
};

/// Anonymous pointcuts for inline advice expressions are appended to `pointcuts`;
/// an advice whose expression is a bare named reference adds none.
struct AspectDecl {
    std::string name;
    int line = 1;
    std::vector<PointcutDecl> pointcuts;
    std::vector<AdviceDecl> advices;
    std::vector<MethodDecl> methods;
    std::vector<AttributeDecl> attributes;
};

struct SourceUnit {
    SourceFileRef file;
    std::vector<ClassDecl> classes;
    std::vector<AspectDecl> aspects;
    std::vector<Diagnostic> parse_diagnostics;

    bool has_errors() const;
};

/// Depth-first list of a class and all of its nested classes.
std::vector<const ClassDecl*> flatten_classes(const std::vector<ClassDecl>& classes);

}  // namespace aosce
