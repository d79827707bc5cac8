#pragma once

#include <string_view>
#include <vector>

#include "aosce/ast.hpp"
#include "aosce/lexer.hpp"

namespace aosce {

/// Declaration-level recursive descent over one file's tokens.
///
/// Recognizes class, interface, enum, record and aspect scopes (all but the last
/// become ClassDecl), and inside them methods, constructors, fields, pointcuts,
/// advices and intertype members. Method and initializer bodies are skipped by
/// brace matching. Never throws: problems are recorded in parse_diagnostics.
SourceUnit parse_unit(const std::vector<Token>& tokens, const SourceFileRef& file);

/// tokenize + parse_unit, with lexer diagnostics carried over.
SourceUnit parse_source(std::string_view text, const SourceFileRef& file);

/// Reads the file from disk first. An unreadable file becomes an Error diagnostic.
SourceUnit parse_file(const SourceFileRef& file);

}  // namespace aosce
