#include "aosce/parser.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <sstream>

#include "aosce/pointcut.hpp"

namespace aosce {

namespace {

constexpr std::array<std::string_view, 15> kModifiers = {
    "public",   "private",      "protected", "static",   "final",      "abstract", "native", "synchronized",
    "transient", "volatile",    "strictfp",  "default",  "privileged", "sealed",   "transitive",
};

bool is_modifier(std::string_view w) {
    return std::find(kModifiers.begin(), kModifiers.end(), w) != kModifiers.end();
}

// Enclosing declaration of the member being parsed.
struct Scope {
    std::string simple_name;
    std::string qualified_name;
    ClassDecl* cls = nullptr;
    AspectDecl* aspect = nullptr;
};

class Parser {
public:
    Parser(const std::vector<Token>& tokens, const SourceFileRef& file) : t_(tokens) { unit_.file = file; }

    SourceUnit run() {
        if (t_.empty() || t_.back().kind != TokenKind::End) {
            error(1, "token stream is not terminated");
            return std::move(unit_);
        }
        top_level();
        check_disjoint_names();
        return std::move(unit_);
    }

private:
    const Token& at(std::size_t ahead = 0) const { return t_[std::min(i_ + ahead, t_.size() - 1)]; }
    bool at_end() const { return at().kind == TokenKind::End; }

    void error(int line, std::string message) {
        unit_.parse_diagnostics.push_back({unit_.file.path, line, Severity::Error, std::move(message)});
    }

    void warn(int line, std::string message) {
        unit_.parse_diagnostics.push_back({unit_.file.path, line, Severity::Warning, std::move(message)});
    }

    void merge(std::vector<Diagnostic>&& diags) {
        for (Diagnostic& d : diags) unit_.parse_diagnostics.push_back(std::move(d));
    }

    bool type_keyword_here() const {
        const std::string& w = at().text;
        if (at().kind == TokenKind::Keyword && (w == "class" || w == "interface" || w == "enum" || w == "aspect")) {
            return true;
        }
        // `record` is contextual: record Name( or record Name<
        return w == "record" && at(1).kind == TokenKind::Identifier &&
               (at(2).kind == TokenKind::ParenOpen || at(2).text == "<");
    }

    // Skips `non-sealed`, which lexes as three tokens.
    bool skip_modifier(std::vector<std::string>* collected) {
        if (at().text == "non" && at(1).text == "-" && at(2).text == "sealed") {
            i_ += 3;
            if (collected) collected->push_back("non-sealed");
            return true;
        }
        if ((at().kind == TokenKind::Keyword || at().kind == TokenKind::Identifier) && is_modifier(at().text) &&
            at(1).kind != TokenKind::ParenOpen) {
            if (collected) collected->push_back(at().text);
            ++i_;
            return true;
        }
        return false;
    }

    void skip_annotation() {
        ++i_;  // @
        if (at().kind == TokenKind::Identifier || at().kind == TokenKind::Keyword) ++i_;
        while (at().text == "." && at(1).kind == TokenKind::Identifier) i_ += 2;
        if (at().kind == TokenKind::ParenOpen) skip_parens();
    }

    // At '(' ; leaves the cursor after the matching ')'.
    bool skip_parens() {
        int depth = 0;
        const int line = at().line;
        do {
            if (at_end()) {
                error(line, "unbalanced parentheses");
                return false;
            }
            if (at().kind == TokenKind::ParenOpen) ++depth;
            if (at().kind == TokenKind::ParenClose) --depth;
            ++i_;
        } while (depth > 0);
        return true;
    }

    // At '{' ; leaves the cursor after the matching '}'.
    bool skip_block() {
        int depth = 0;
        const int line = at().line;
        do {
            if (at_end()) {
                error(line, "unbalanced braces: block opened here is never closed");
                return false;
            }
            if (at().kind == TokenKind::BraceOpen) ++depth;
            if (at().kind == TokenKind::BraceClose) --depth;
            ++i_;
        } while (depth > 0);
        return true;
    }

    void skip_statement() {
        while (!at_end() && at().kind != TokenKind::Semicolon) {
            if (at().kind == TokenKind::BraceOpen) {
                skip_block();
            } else if (at().kind == TokenKind::ParenOpen) {
                skip_parens();
            } else {
                ++i_;
            }
        }
        if (!at_end()) ++i_;
    }

    void top_level() {
        bool reported_junk = false;
        while (!at_end()) {
            const Token& tok = at();
            if (tok.text == "package" || tok.text == "import") {
                skip_statement();
            } else if (tok.kind == TokenKind::Semicolon) {
                ++i_;
            } else if (tok.text == "@" && at(1).text == "interface") {
                ++i_;
            } else if (tok.text == "@") {
                skip_annotation();
            } else if (skip_modifier(nullptr)) {
            } else if (type_keyword_here()) {
                type_declaration(nullptr);
                reported_junk = false;
            } else if (tok.kind == TokenKind::BraceClose) {
                error(tok.line, "unbalanced braces: unmatched '}'");
                ++i_;
            } else {
                if (!reported_junk) error(tok.line, "unexpected '" + tok.text + "' outside a type declaration");
                reported_junk = true;
                ++i_;
            }
        }
    }

    // At the type keyword. `outer` is null for top-level declarations.
    void type_declaration(const Scope* outer) {
        const std::string kind = at().text;
        const int line = at().line;
        ++i_;
        std::string name = "<anonymous>";
        if (at().kind == TokenKind::Identifier) {
            name = at().text;
            ++i_;
        } else {
            error(line, "missing name after '" + kind + "'");
        }

        while (!at_end() && at().kind != TokenKind::BraceOpen) {
            if (at().kind == TokenKind::ParenOpen) {
                if (!skip_parens()) return;
            } else if (at().kind == TokenKind::Semicolon || at().kind == TokenKind::BraceClose) {
                break;
            } else {
                ++i_;
            }
        }
        if (at().kind != TokenKind::BraceOpen) {
            error(line, "missing body for " + kind + " " + name);
            return;
        }
        ++i_;

        Scope scope;
        scope.simple_name = name;
        scope.qualified_name = outer ? outer->qualified_name + "." + name : name;

        if (kind == "aspect") {
            AspectDecl aspect;
            aspect.name = scope.qualified_name;
            aspect.line = line;
            scope.aspect = &aspect;
            body(scope, kind, line);
            unit_.aspects.push_back(std::move(aspect));
            return;
        }

        ClassDecl cls;
        cls.name = scope.qualified_name;
        cls.line = line;
        scope.cls = &cls;
        if (kind == "enum") skip_enum_constants();
        body(scope, kind, line);
        if (outer && outer->cls) {
            outer->cls->nested.push_back(std::move(cls));
        } else {
            unit_.classes.push_back(std::move(cls));
        }
    }

    // Enum constants run up to the first top-level ';' or the closing brace.
    void skip_enum_constants() {
        while (!at_end()) {
            if (at().kind == TokenKind::Semicolon) {
                ++i_;
                return;
            }
            if (at().kind == TokenKind::BraceClose) return;
            if (at().kind == TokenKind::BraceOpen) {
                skip_block();
            } else if (at().kind == TokenKind::ParenOpen) {
                skip_parens();
            } else {
                ++i_;
            }
        }
    }

    void body(Scope& scope, const std::string& kind, int open_line) {
        while (true) {
            if (at_end()) {
                error(open_line, "unbalanced braces: " + kind + " " + scope.qualified_name + " is never closed");
                return;
            }
            const Token& tok = at();
            if (tok.kind == TokenKind::BraceClose) {
                ++i_;
                return;
            }
            if (tok.kind == TokenKind::Semicolon) {
                ++i_;
            } else if (tok.kind == TokenKind::BraceOpen) {
                skip_block();
            } else {
                member(scope);
            }
        }
    }

    void member(Scope& scope) {
        std::vector<std::string> modifiers;
        while (true) {
            if (at().text == "@" && at(1).text == "interface") {
                ++i_;
                break;
            }
            if (at().text == "@") {
                skip_annotation();
                continue;
            }
            if (!skip_modifier(&modifiers)) break;
        }
        if (at().kind == TokenKind::BraceOpen) {  // static initializer
            skip_block();
            return;
        }
        if (at().kind == TokenKind::BraceClose || at_end()) return;
        if (type_keyword_here()) {
            type_declaration(&scope);
            return;
        }
        if (at().kind == TokenKind::Keyword && at().text == "pointcut") {
            pointcut(scope);
            return;
        }
        if (scope.aspect && at().text == "declare") {
            skip_statement();
            return;
        }
        declaration(scope, modifiers);
    }

    void pointcut(Scope& scope) {
        const int line = at().line;
        ++i_;
        PointcutDecl decl;
        decl.source_line = line;
        if (at().kind != TokenKind::Identifier) {
            error(line, "missing pointcut name");
            skip_statement();
            return;
        }
        decl.name = at().text;
        ++i_;
        if (at().kind == TokenKind::ParenOpen && !skip_parens()) return;

        if (at().text == ":") {
            ++i_;
            const std::size_t begin = i_;
            int depth = 0;
            while (!at_end() && !(depth == 0 && at().kind == TokenKind::Semicolon)) {
                if (at().kind == TokenKind::ParenOpen) ++depth;
                if (at().kind == TokenKind::ParenClose) --depth;
                if (at().kind == TokenKind::BraceOpen || at().kind == TokenKind::BraceClose) break;
                ++i_;
            }
            const std::size_t end = i_;
            if (at().kind != TokenKind::Semicolon) {
                error(line, "pointcut " + decl.name + " is not terminated by ';'");
            } else {
                ++i_;
            }
            ExprParse parsed = parse_pointcut_expression(join_tokens(t_, begin, end), unit_.file.path, line);
            merge(std::move(parsed.diagnostics));
            decl.expression = std::move(parsed.expr);
        } else if (at().kind == TokenKind::Semicolon) {
            ++i_;
        } else {
            error(line, "malformed pointcut declaration " + decl.name);
            skip_statement();
        }

        if (scope.aspect) {
            scope.aspect->pointcuts.push_back(std::move(decl));
        } else {
            scope.cls->pointcuts.push_back(std::move(decl));
        }
    }

    // Methods, constructors, advices and fields. The cursor is past modifiers.
    void declaration(Scope& scope, const std::vector<std::string>& modifiers) {
        const std::size_t start = i_;
        const int line = at().line;

        std::size_t term = i_;
        std::size_t first_paren = t_.size();
        int depth = 0;
        for (; term < t_.size(); ++term) {
            const Token& tok = t_[term];
            if (tok.kind == TokenKind::End) break;
            if (tok.kind == TokenKind::ParenOpen) {
                if (depth == 0 && first_paren == t_.size()) first_paren = term;
                ++depth;
            } else if (tok.kind == TokenKind::ParenClose) {
                --depth;
            } else if (depth == 0 && (tok.kind == TokenKind::BraceOpen || tok.kind == TokenKind::Semicolon ||
                                      tok.kind == TokenKind::BraceClose || tok.text == "=")) {
                break;
            }
        }
        const Token& terminator = t_[std::min(term, t_.size() - 1)];
        if (terminator.kind == TokenKind::End || terminator.kind == TokenKind::BraceClose) {
            error(line, "unterminated member declaration");
            i_ = term;
            return;
        }

        if (scope.aspect && terminator.kind == TokenKind::BraceOpen && first_paren < term &&
            advice(scope, first_paren, term, line)) {
            return;
        }

        if (first_paren < term && terminator.text != "=" && first_paren > start &&
            (t_[first_paren - 1].kind == TokenKind::Identifier || t_[first_paren - 1].text == "new")) {
            method(scope, modifiers, start, first_paren, term, line);
            return;
        }

        // Compact record constructor: `Name {`
        if (terminator.kind == TokenKind::BraceOpen && term == start + 1 && t_[start].text == scope.simple_name &&
            scope.cls) {
            MethodDecl ctor{scope.simple_name, join_modifiers(modifiers, join_tokens(t_, start, term)), true, false,
                            line};
            scope.cls->methods.push_back(std::move(ctor));
            i_ = term;
            skip_block();
            return;
        }

        if (terminator.kind == TokenKind::Semicolon || terminator.text == "=") {
            field(scope, start, line);
            return;
        }

        error(line, "unrecognized member declaration starting with '" + t_[start].text + "'");
        i_ = term;
        skip_block();
    }

    static std::string join_modifiers(const std::vector<std::string>& modifiers, const std::string& rest) {
        std::string out;
        for (const std::string& m : modifiers) out += m + " ";
        return out + rest;
    }

    std::size_t matching_paren(std::size_t open, std::size_t limit) const {
        int depth = 0;
        for (std::size_t k = open; k < limit; ++k) {
            if (t_[k].kind == TokenKind::ParenOpen) ++depth;
            if (t_[k].kind == TokenKind::ParenClose && --depth == 0) return k;
        }
        return limit;
    }

    // before(..) : expr {   after(..) [returning|throwing [(..)]] : expr {   T around(..) : expr {
    bool advice(Scope& scope, std::size_t first_paren, std::size_t term, int line) {
        const std::string& word = t_[first_paren - 1].text;
        if (word != "before" && word != "after" && word != "around") return false;
        std::size_t k = matching_paren(first_paren, term);
        if (k >= term) return false;
        ++k;

        AdviceKind kind = word == "before" ? AdviceKind::Before
                          : word == "around" ? AdviceKind::Around
                                             : AdviceKind::After;
        if (kind == AdviceKind::After && (t_[k].text == "returning" || t_[k].text == "throwing")) {
            kind = t_[k].text == "returning" ? AdviceKind::AfterReturning : AdviceKind::AfterThrowing;
            ++k;
            if (t_[k].kind == TokenKind::ParenOpen) {
                k = matching_paren(k, term);
                if (k >= term) return false;
                ++k;
            }
        }
        if (t_[k].text == "throws") {
            while (k < term && t_[k].text != ":") ++k;
        }
        if (k >= term || t_[k].text != ":") return false;

        ExprParse parsed = parse_pointcut_expression(join_tokens(t_, k + 1, term), unit_.file.path, line);
        merge(std::move(parsed.diagnostics));
        AdviceDecl decl{kind, parsed.expr, line};
        if (!std::holds_alternative<NamedRef>(parsed.expr->node)) {
            scope.aspect->pointcuts.push_back({"", parsed.expr, line});
        }
        scope.aspect->advices.push_back(std::move(decl));
        i_ = term;
        skip_block();
        return true;
    }

    void method(Scope& scope, const std::vector<std::string>& modifiers, std::size_t start,
                std::size_t first_paren, std::size_t term, int line) {
        const std::size_t close = matching_paren(first_paren, term);
        const std::size_t name_at = first_paren - 1;

        MethodDecl decl;
        decl.name = t_[name_at].text;
        decl.line = line;
        decl.is_intertype = scope.aspect && name_at > start && t_[name_at - 1].text == ".";
        decl.signature_text = join_modifiers(modifiers, join_tokens(t_, start, std::min(close + 1, term)));

        if (decl.is_intertype) {
            decl.is_constructor = decl.name == "new";
        } else if (decl.name == scope.simple_name) {
            // A constructor has nothing but type parameters before its name.
            std::size_t k = start;
            if (t_[k].text == "<") {
                int angle = 0;
                for (; k < name_at; ++k) {
                    if (t_[k].text == "<") ++angle;
                    if (t_[k].text == ">" && --angle == 0) {
                        ++k;
                        break;
                    }
                }
            }
            decl.is_constructor = k == name_at;
        }

        if (scope.aspect) {
            scope.aspect->methods.push_back(std::move(decl));
        } else {
            scope.cls->methods.push_back(std::move(decl));
        }

        i_ = term;
        if (t_[term].kind == TokenKind::BraceOpen) {
            skip_block();
        } else {
            ++i_;
        }
    }

    // Leaves the cursor after `new Type<...>` so commas inside type arguments are not separators.
    void skip_new_expression_type() {
        ++i_;  // new
        while (at().kind == TokenKind::Identifier || at().text == ".") ++i_;
        if (at().text == "<") skip_angles();
    }

    void skip_angles() {
        int angle = 0;
        do {
            if (at_end() || at().kind == TokenKind::Semicolon) return;
            if (at().text == "<") ++angle;
            if (at().text == ">") --angle;
            ++i_;
        } while (angle > 0);
    }

    // Stops on a top-level ',' or ';' without consuming it.
    void skip_initializer() {
        int depth = 0;
        while (!at_end()) {
            const Token& tok = at();
            if (depth == 0 && (tok.text == "," || tok.kind == TokenKind::Semicolon)) return;
            if (depth == 0 && tok.kind == TokenKind::BraceClose) return;
            if (tok.text == "new") {
                skip_new_expression_type();
                continue;
            }
            if (tok.text == "." && at(1).text == "<") {
                ++i_;
                skip_angles();
                continue;
            }
            if (tok.kind == TokenKind::ParenOpen || tok.kind == TokenKind::BraceOpen || tok.text == "[") ++depth;
            if (tok.kind == TokenKind::ParenClose || tok.kind == TokenKind::BraceClose || tok.text == "]") --depth;
            ++i_;
        }
    }

    // `Type a [= init], b[] [= init];`
    void field(Scope& scope, std::size_t start, int line) {
        // First declarator: find the first top-level '=', ',' or ';' outside type arguments.
        std::size_t k = start;
        int angle = 0;
        for (; k < t_.size(); ++k) {
            const Token& tok = t_[k];
            if (tok.kind == TokenKind::End) break;
            if (tok.text == "<") ++angle;
            if (tok.text == ">") --angle;
            if (angle <= 0 && (tok.text == "=" || tok.text == "," || tok.kind == TokenKind::Semicolon)) break;
        }

        std::size_t name_end = k;
        std::string dims;
        while (name_end >= start + 2 && t_[name_end - 1].text == "]" && t_[name_end - 2].text == "[") {
            name_end -= 2;
            dims += "[]";
        }
        if (name_end < start + 2 || t_[name_end - 1].kind != TokenKind::Identifier) {
            error(line, "malformed field declaration");
            i_ = k;
            skip_statement();
            return;
        }

        std::size_t name_begin = name_end - 1;
        if (scope.aspect) {  // intertype field: Type Target.name
            while (name_begin >= start + 2 && t_[name_begin - 1].text == "." && !t_[name_begin].spaced &&
                   t_[name_begin - 2].kind == TokenKind::Identifier && !t_[name_begin - 1].spaced &&
                   name_begin - 2 > start) {
                name_begin -= 2;
            }
        }
        const std::string base_type = join_tokens(t_, start, name_begin);
        std::vector<AttributeDecl> decls;
        decls.push_back({join_tokens(t_, name_begin, name_end), base_type + dims, line});

        i_ = k;
        while (!at_end()) {
            if (at().text == "=") {
                ++i_;
                skip_initializer();
            }
            if (at().kind == TokenKind::Semicolon) {
                ++i_;
                break;
            }
            if (at().text != ",") {
                error(at().line, "malformed field declaration");
                break;
            }
            ++i_;
            if (at().kind != TokenKind::Identifier) {
                error(at().line, "expected a field name after ','");
                skip_statement();
                break;
            }
            AttributeDecl extra{at().text, base_type, at().line};
            ++i_;
            while (at().text == "[" && at(1).text == "]") {
                extra.declared_type += "[]";
                i_ += 2;
            }
            decls.push_back(std::move(extra));
        }

        auto& target = scope.aspect ? scope.aspect->attributes : scope.cls->attributes;
        for (AttributeDecl& d : decls) target.push_back(std::move(d));
    }

    void check_disjoint_names() {
        std::set<std::string> class_names;
        for (const ClassDecl* c : flatten_classes(unit_.classes)) class_names.insert(c->name);
        for (const AspectDecl& a : unit_.aspects) {
            if (class_names.count(a.name)) warn(a.line, "aspect " + a.name + " shares its name with a class");
        }
    }

    const std::vector<Token>& t_;
    std::size_t i_ = 0;
    SourceUnit unit_;
};

}  // namespace

SourceUnit parse_unit(const std::vector<Token>& tokens, const SourceFileRef& file) {
    return Parser(tokens, file).run();
}

SourceUnit parse_source(std::string_view text, const SourceFileRef& file) {
    TokenStream ts = tokenize(text, file.path);
    SourceUnit unit = parse_unit(ts.tokens, file);
    unit.parse_diagnostics.insert(unit.parse_diagnostics.begin(), ts.diagnostics.begin(), ts.diagnostics.end());
    return unit;
}

SourceUnit parse_file(const SourceFileRef& file) {
    std::ifstream in(file.path, std::ios::binary);
    if (!in) {
        SourceUnit unit;
        unit.file = file;
        unit.parse_diagnostics.push_back({file.path, 1, Severity::Error, "cannot read file"});
        return unit;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_source(buffer.str(), file);
}

}  // namespace aosce
