#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aosce/error.hpp"

namespace aosce {

enum class TokenKind {
    Identifier,  // also numeric literals
    Keyword,
    Punct,       // , . .. ... : ? @ < > [ ]
    BraceOpen,
    BraceClose,
    ParenOpen,
    ParenClose,
    Semicolon,
    Operator,
    End,
};

struct Token {
    TokenKind kind = TokenKind::End;
    std::string text;
    int line = 1;
    // Whitespace, a comment or an elided literal separated this token from the previous one.
    bool spaced = false;

    friend bool operator==(const Token&, const Token&) = default;
};

struct TokenStream {
    std::vector<Token> tokens;  // always terminated by an End token
    std::vector<Diagnostic> diagnostics;
};

bool is_keyword(std::string_view word);

/// Splits Java/AspectJ source into tokens. Comments, string literals, text
/// blocks and character literals produce no tokens. Unterminated comments and
/// literals are reported and lexing resumes on the following line.
TokenStream tokenize(std::string_view text, const std::filesystem::path& file = {});

/// Re-joins tokens, keeping a single space wherever the source had a gap.
std::string join_tokens(const std::vector<Token>& tokens, std::size_t begin, std::size_t end);

}  // namespace aosce
