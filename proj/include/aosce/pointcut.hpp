#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aosce/ast.hpp"
#include "aosce/error.hpp"

namespace aosce {

/// Designators the expression parser accepts as primitives.
bool is_recognized_designator(std::string_view word);

/// execution, call, get, set, handler: the designators that carry a signature.
bool is_kinded_designator(std::string_view word);

struct ExprParse {
    ExprPtr expr;
    std::vector<Diagnostic> diagnostics;
};

/// Parses the text following `:` in a pointcut or advice declaration.
///
/// Grammar, loosest binding first:
///
///     or      := and ('||' and)*
///     and     := unary ('&&' unary)*
///     unary   := '!' unary | primary
///     primary := '(' or ')' | name '(' balanced-text ')'
///
/// `name` is a designator keyword (Primitive) or any other, possibly qualified,
/// identifier (NamedRef). Designator-like words outside the recognized set, such
/// as `if` or `@annotation`, become Primitive nodes with known = false plus a
/// warning. Malformed input yields an error diagnostic and a single unknown
/// Primitive holding the whole text.
ExprParse parse_pointcut_expression(std::string_view text, const std::filesystem::path& file = {},
                                    int line = 1);

struct SignaturePattern {
    std::string return_pattern;
    std::string declaring_type_pattern;
    std::string name_pattern;
    std::string params_pattern;

    friend bool operator==(const SignaturePattern&, const SignaturePattern&) = default;
};

struct SignatureParse {
    std::optional<SignaturePattern> pattern;
    std::vector<Diagnostic> diagnostics;
};

/// Splits the argument of a kinded designator into its pattern parts. Method
/// designators yield all four parts, field designators leave params empty and
/// handler stores its type pattern as declaring_type_pattern. Non-kinded and
/// unknown primitives yield no pattern.
SignatureParse extract_signature_pattern(const Primitive& primitive,
                                         const std::filesystem::path& file = {}, int line = 1);

}  // namespace aosce
