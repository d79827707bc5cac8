#include "aosce/lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace aosce {

namespace {

constexpr std::array<std::string_view, 56> kKeywords = {
    "abstract",  "aspect",     "assert",    "boolean",  "break",     "byte",       "case",
    "catch",     "char",       "class",     "const",    "continue",  "default",    "do",
    "double",    "else",       "enum",      "extends",  "false",     "final",      "finally",
    "float",     "for",        "goto",      "if",       "implements", "import",    "instanceof",
    "int",       "interface",  "long",      "native",   "new",       "null",       "package",
    "pointcut",  "private",    "privileged", "protected", "public",  "return",     "short",
    "static",    "strictfp",   "super",     "switch",   "synchronized", "this",    "throw",
    "throws",    "transient",  "true",      "try",      "void",      "volatile",   "while",
};

constexpr std::array<std::string_view, 16> kTwoCharOperators = {
    "&&", "||", "==", "!=", "++", "--", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "->", "::",
};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool ident_part(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Lexer {
public:
    Lexer(std::string_view text, const std::filesystem::path& file) : text_(text), file_(file) {}

    TokenStream run() {
        while (pos_ < text_.size()) step();
        out_.tokens.push_back({TokenKind::End, "", line_, true});
        return std::move(out_);
    }

private:
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }

    void advance() {
        if (text_[pos_] == '\n') ++line_;
        ++pos_;
    }

    void report(int line, std::string message) {
        out_.diagnostics.push_back({file_, line, Severity::Error, std::move(message)});
    }

    // Restart lexing at the line after `line`, used after an unterminated construct.
    void resume_after_line(std::size_t start, int line) {
        pos_ = start;
        line_ = line;
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        gap_ = true;
    }

    void emit(TokenKind kind, std::string text) {
        out_.tokens.push_back({kind, std::move(text), line_, gap_});
        gap_ = false;
    }

    void step() {
        const char c = peek();
        if (c == '\n' || std::isspace(static_cast<unsigned char>(c))) {
            advance();
            gap_ = true;
            return;
        }
        if (c == '/' && peek(1) == '/') {
            while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            gap_ = true;
            return;
        }
        if (c == '/' && peek(1) == '*') return block_comment();
        if (c == '"' && peek(1) == '"' && peek(2) == '"') return text_block();
        if (c == '"' || c == '\'') return quoted(c);
        if (ident_start(static_cast<unsigned char>(c))) return word();
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
            return number();
        }
        punctuation();
    }

    void block_comment() {
        const std::size_t start = pos_;
        const int start_line = line_;
        const std::size_t close = text_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) {
            report(start_line, "unterminated block comment");
            return resume_after_line(start, start_line);
        }
        while (pos_ < close + 2) advance();
        gap_ = true;
    }

    void text_block() {
        const std::size_t start = pos_;
        const int start_line = line_;
        const std::size_t close = text_.find("\"\"\"", pos_ + 3);
        if (close == std::string_view::npos) {
            report(start_line, "unterminated text block");
            return resume_after_line(start, start_line);
        }
        while (pos_ < close + 3) advance();
        gap_ = true;
    }

    void quoted(char quote) {
        const std::size_t start = pos_;
        const int start_line = line_;
        ++pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] != '\n') {
                pos_ += 2;
                continue;
            }
            if (c == '\n') break;
            ++pos_;
            if (c == quote) {
                gap_ = true;
                return;
            }
        }
        report(start_line, quote == '"' ? "unterminated string literal" : "unterminated character literal");
        resume_after_line(start, start_line);
    }

    void word() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && ident_part(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string w(text_.substr(start, pos_ - start));
        const TokenKind kind = is_keyword(w) ? TokenKind::Keyword : TokenKind::Identifier;
        emit(kind, std::move(w));
    }

    void number() {
        const std::size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            const char prev = pos_ > start ? text_[pos_ - 1] : '\0';
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                ++pos_;
            } else if (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                ++pos_;
            } else if ((c == '+' || c == '-') && (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P')) {
                ++pos_;
            } else {
                break;
            }
        }
        emit(TokenKind::Identifier, std::string(text_.substr(start, pos_ - start)));
    }

    void punctuation() {
        const char c = peek();
        if (c == '.') {
            const std::size_t n = peek(1) != '.' ? 1 : (peek(2) == '.' ? 3 : 2);
            pos_ += n;
            return emit(TokenKind::Punct, std::string(n, '.'));
        }
        const std::string_view two = text_.substr(pos_, 2);
        if (std::find(kTwoCharOperators.begin(), kTwoCharOperators.end(), two) != kTwoCharOperators.end()) {
            pos_ += 2;
            return emit(two == "::" ? TokenKind::Punct : TokenKind::Operator, std::string(two));
        }
        ++pos_;
        switch (c) {
            case '{': return emit(TokenKind::BraceOpen, "{");
            case '}': return emit(TokenKind::BraceClose, "}");
            case '(': return emit(TokenKind::ParenOpen, "(");
            case ')': return emit(TokenKind::ParenClose, ")");
            case ';': return emit(TokenKind::Semicolon, ";");
            case ',': case ':': case '?': case '@': case '<': case '>': case '[': case ']':
                return emit(TokenKind::Punct, std::string(1, c));
            default: return emit(TokenKind::Operator, std::string(1, c));
        }
    }

    std::string_view text_;
    std::filesystem::path file_;
    std::size_t pos_ = 0;
    int line_ = 1;
    bool gap_ = false;
    TokenStream out_;
};

}  // namespace

bool is_keyword(std::string_view word) {
    return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

TokenStream tokenize(std::string_view text, const std::filesystem::path& file) {
    return Lexer(text, file).run();
}

std::string join_tokens(const std::vector<Token>& tokens, std::size_t begin, std::size_t end) {
    std::string out;
    end = std::min(end, tokens.size());
    for (std::size_t i = begin; i < end; ++i) {
        if (tokens[i].kind == TokenKind::End) break;
        if (i > begin && tokens[i].spaced) out += ' ';
        out += tokens[i].text;
    }
    return out;
}

}  // namespace aosce
