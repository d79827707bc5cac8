#include "aosce/pointcut.hpp"

#include <algorithm>
#include <array>

#include "aosce/lexer.hpp"

namespace aosce {

namespace {

constexpr std::array<std::string_view, 16> kDesignators = {
    "execution", "call",     "get",    "set",  "handler", "within",         "withincode",        "cflow",
    "cflowbelow", "adviceexecution", "this", "target", "args", "initialization", "preinitialization",
    "staticinitialization",
};

// AspectJ designators this tool does not model.
constexpr std::array<std::string_view, 9> kUnmodelled = {
    "if", "lock", "unlock", "@this", "@target", "@args", "@within", "@withincode", "@annotation",
};

constexpr std::array<std::string_view, 11> kModifiers = {
    "public", "private", "protected", "static", "final", "synchronized",
    "native", "abstract", "strictfp", "transient", "volatile",
};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view word) {
    return std::find(set.begin(), set.end(), word) != set.end();
}

struct Malformed {
    std::string reason;
};

class ExprParser {
public:
    ExprParser(const std::vector<Token>& tokens, const std::filesystem::path& file, int line,
               std::vector<Diagnostic>& diags)
        : t_(tokens), file_(file), line_(line), diags_(diags) {}

    ExprPtr parse() {
        if (at().kind == TokenKind::End) throw Malformed{"empty expression"};
        ExprPtr e = parse_or();
        if (at().kind != TokenKind::End) throw Malformed{"unexpected '" + at().text + "'"};
        return e;
    }

private:
    const Token& at(std::size_t ahead = 0) const { return t_[std::min(i_ + ahead, t_.size() - 1)]; }

    ExprPtr parse_or() {
        ExprPtr left = parse_and();
        while (at().text == "||") {
            ++i_;
            left = make_or(std::move(left), parse_and());
        }
        return left;
    }

    ExprPtr parse_and() {
        ExprPtr left = parse_unary();
        while (at().text == "&&") {
            ++i_;
            left = make_and(std::move(left), parse_unary());
        }
        return left;
    }

    ExprPtr parse_unary() {
        if (at().text == "!") {
            ++i_;
            return make_not(parse_unary());
        }
        return parse_primary();
    }

    ExprPtr parse_primary() {
        if (at().kind == TokenKind::ParenOpen) {
            ++i_;
            ExprPtr inner = parse_or();
            if (at().kind != TokenKind::ParenClose) throw Malformed{"missing ')'"};
            ++i_;
            return inner;
        }

        std::string name;
        if (at().text == "@" && at(1).kind == TokenKind::Identifier) {
            name = "@" + at(1).text;
            i_ += 2;
        } else if (at().kind == TokenKind::Identifier || at().kind == TokenKind::Keyword) {
            name = at().text;
            ++i_;
            while (at().text == "." && at(1).kind == TokenKind::Identifier) {
                name += "." + at(1).text;
                i_ += 2;
            }
        } else {
            throw Malformed{"expected a designator or pointcut name, found '" + at().text + "'"};
        }

        if (at().kind != TokenKind::ParenOpen) throw Malformed{"expected '(' after '" + name + "'"};
        const std::size_t open = i_;
        int depth = 0;
        do {
            if (at().kind == TokenKind::End) throw Malformed{"unbalanced parentheses after '" + name + "'"};
            if (at().kind == TokenKind::ParenOpen) ++depth;
            if (at().kind == TokenKind::ParenClose) --depth;
            ++i_;
        } while (depth > 0);
        std::string argument = join_tokens(t_, open + 1, i_ - 1);

        if (is_recognized_designator(name)) return make_primitive(name, std::move(argument));
        if (contains(kUnmodelled, name)) {
            diags_.push_back({file_, line_, Severity::Warning, "unsupported pointcut designator '" + name + "'"});
            return make_primitive(name, std::move(argument), false);
        }
        return make_named_ref(std::move(name));
    }

    const std::vector<Token>& t_;
    std::filesystem::path file_;
    int line_;
    std::vector<Diagnostic>& diags_;
    std::size_t i_ = 0;
};

// Index where the trailing run of unspaced tokens starts, i.e. the `pkg.Type.name` chain.
std::size_t name_chain_start(const std::vector<Token>& toks, std::size_t begin, std::size_t end) {
    std::size_t k = end - 1;
    while (k > begin && !toks[k].spaced) --k;
    return k;
}

std::size_t skip_modifiers(const std::vector<Token>& toks, std::size_t i, std::size_t end) {
    while (i < end) {
        if (contains(kModifiers, toks[i].text)) {
            ++i;
        } else if (toks[i].text == "!" && i + 1 < end && contains(kModifiers, toks[i + 1].text)) {
            i += 2;
        } else {
            break;
        }
    }
    return i;
}

}  // namespace

bool is_recognized_designator(std::string_view word) { return contains(kDesignators, word); }

bool is_kinded_designator(std::string_view word) {
    return word == "execution" || word == "call" || word == "get" || word == "set" || word == "handler";
}

ExprParse parse_pointcut_expression(std::string_view text, const std::filesystem::path& file, int line) {
    ExprParse result;
    TokenStream ts = tokenize(text, file);
    for (Diagnostic& d : ts.diagnostics) {
        d.line = line;
        result.diagnostics.push_back(std::move(d));
    }
    try {
        result.expr = ExprParser(ts.tokens, file, line, result.diagnostics).parse();
    } catch (const Malformed& m) {
        result.diagnostics.push_back(
            {file, line, Severity::Warning, "malformed pointcut expression: " + m.reason});
        result.expr = make_primitive("", join_tokens(ts.tokens, 0, ts.tokens.size()), false);
    }
    return result;
}

SignatureParse extract_signature_pattern(const Primitive& primitive, const std::filesystem::path& file,
                                         int line) {
    SignatureParse result;
    if (!primitive.known || !is_kinded_designator(primitive.designator)) return result;

    auto malformed = [&](const std::string& why) {
        result.diagnostics.push_back({file, line, Severity::Warning,
                                      "malformed signature in " + primitive.designator + "(" +
                                          primitive.argument_text + "): " + why});
        return result;
    };

    const std::vector<Token> toks = tokenize(primitive.argument_text).tokens;
    const std::size_t count = toks.size() - 1;  // drop End
    if (count == 0) return malformed("empty pattern");

    SignaturePattern pat;
    if (primitive.designator == "handler") {
        pat.declaring_type_pattern = join_tokens(toks, 0, count);
        result.pattern = std::move(pat);
        return result;
    }

    std::size_t head_end = count;
    if (primitive.designator == "execution" || primitive.designator == "call") {
        std::size_t open = 0;
        while (open < count && toks[open].kind != TokenKind::ParenOpen) ++open;
        if (open == count) return malformed("missing parameter list");
        int depth = 0;
        std::size_t close = open;
        for (; close < count; ++close) {
            if (toks[close].kind == TokenKind::ParenOpen) ++depth;
            if (toks[close].kind == TokenKind::ParenClose && --depth == 0) break;
        }
        if (close == count) return malformed("unclosed parameter list");
        pat.params_pattern = join_tokens(toks, open + 1, close);
        head_end = open;
    }

    const std::size_t head_begin = skip_modifiers(toks, 0, head_end);
    if (head_begin >= head_end) return malformed("missing name pattern");

    const std::size_t chain = name_chain_start(toks, head_begin, head_end);
    pat.return_pattern = join_tokens(toks, head_begin, chain);

    std::size_t dot = head_end;
    for (std::size_t k = head_end; k-- > chain;) {
        if (toks[k].text == "." || toks[k].text == "..") {
            dot = k;
            break;
        }
    }
    if (dot == head_end) {
        pat.name_pattern = join_tokens(toks, chain, head_end);
    } else {
        pat.declaring_type_pattern = join_tokens(toks, chain, dot);
        pat.name_pattern = join_tokens(toks, dot + 1, head_end);
    }
    if (pat.name_pattern.empty()) return malformed("missing name pattern");
    if (pat.return_pattern.empty() && pat.name_pattern != "new") return malformed("missing type pattern");

    result.pattern = std::move(pat);
    return result;
}

}  // namespace aosce
