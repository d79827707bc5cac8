#include "doctest.h"

#include <algorithm>

#include "aosce/lexer.hpp"
#include "support.hpp"

using namespace aosce;

namespace {

std::size_t count_text(const TokenStream& ts, const std::string& text) {
    return std::count_if(ts.tokens.begin(), ts.tokens.end(), [&](const Token& t) { return t.text == text; });
}

}  // namespace

TEST_CASE("line comment hides its keywords") {
    const TokenStream ts = tokenize("// class Fake\nclass Real {}");
    CHECK(count_text(ts, "class") == 1);
    CHECK(count_text(ts, "Fake") == 0);
    CHECK(ts.tokens.front().line == 2);
}

TEST_CASE("string, char and text block contents produce no tokens") {
    const TokenStream ts = tokenize("String s = \"aspect\"; char c = '{'; String t = \"\"\"\n  pointcut\n  \"\"\";");
    CHECK(count_text(ts, "aspect") == 0);
    CHECK(count_text(ts, "pointcut") == 0);
    CHECK(count_text(ts, "{") == 0);
    CHECK(ts.diagnostics.empty());
}

TEST_CASE("keywords and token kinds") {
    const TokenStream ts = tokenize("aspect A { pointcut p(): call(* *..*(..)); }");
    REQUIRE(ts.tokens.size() > 4);
    CHECK(ts.tokens[0].kind == TokenKind::Keyword);
    CHECK(ts.tokens[1].kind == TokenKind::Identifier);
    CHECK(ts.tokens[2].kind == TokenKind::BraceOpen);
    CHECK(ts.tokens.back().kind == TokenKind::End);
    CHECK(count_text(ts, "..") == 2);
    CHECK(is_keyword("privileged"));
    CHECK_FALSE(is_keyword("var"));
}

TEST_CASE("line numbers never decrease") {
    const TokenStream ts = tokenize("class A {\n /* x\n y */ int a;\n String s = \"q\";\n}\n");
    for (std::size_t i = 1; i < ts.tokens.size(); ++i) CHECK(ts.tokens[i - 1].line <= ts.tokens[i].line);
    CHECK(ts.tokens[4].text == "a");
    CHECK(ts.tokens[4].line == 3);
}

TEST_CASE("unterminated comment and string are reported") {
    CHECK_FALSE(tokenize("class A { /* never closed").diagnostics.empty());
    const TokenStream ts = tokenize("String s = \"open\nint x;");
    CHECK_FALSE(ts.diagnostics.empty());
    CHECK(count_text(ts, "x") == 1);
}

TEST_CASE("join_tokens keeps source spacing") {
    const TokenStream ts = tokenize("execution(void  uas.A.f(int,   String))");
    CHECK(join_tokens(ts.tokens, 0, ts.tokens.size() - 1) == "execution(void uas.A.f(int, String))");
}

TEST_CASE("Logging.aj token count matches the hand count") {
    // 170 tokens, counted once by hand after removing comments and string literals.
    const auto path = testing::fixtures_dir() / "AJ1.1" / "uas" / "aspects" / "Logging.aj";
    const TokenStream ts = tokenize(testing::read_text(path), path);
    CHECK(ts.tokens.size() - 1 == 170);
    CHECK(ts.diagnostics.empty());
}
