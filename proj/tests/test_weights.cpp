#include "doctest.h"

#include "aosce/error.hpp"
#include "aosce/weights.hpp"
#include "support.hpp"

using namespace aosce;

namespace {

ErrorCode override_error(const std::string& json) {
    try {
        parse_weight_overrides(json);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error for " << json);
    return ErrorCode::WriteFailure;
}

Weight sig(const SignaturePattern& p) { return signature_weight(p, default_weights()); }

}  // namespace

TEST_CASE("default tables") {
    const WeightTable& w = default_weights();
    CHECK(w.designator("execution") == 1_w);
    CHECK(w.designator("call") == 2_w);
    CHECK(w.designator("get") == 3_w);
    CHECK(w.designator("set") == 4_w);
    CHECK(w.designator("handler") == 5_w);
    CHECK(w.designator("within") == 0_w);
    CHECK(w.advice(AdviceKind::Before) == 1_w);
    CHECK(w.advice(AdviceKind::After) == 1_w);
    CHECK(w.advice(AdviceKind::AfterReturning) == 1_w);
    CHECK(w.advice(AdviceKind::AfterThrowing) == 1_w);
    CHECK(w.advice(AdviceKind::Around) == 2_w);
    for (std::size_t i = 0; i < kJoinPointCategoryCount; ++i) {
        CHECK(w.joinpoint_type(static_cast<JoinPointCategory>(i)) == Weight::from_tenths(i + 1));
    }
    CHECK(w.joinpoint_type(JoinPointCategory::ControlFlow) == 9_w);
    for (std::size_t i = 0; i < kSpecificityLevelCount; ++i) {
        CHECK(w.signature_level(static_cast<SpecificityLevel>(i)) == Weight::from_tenths(i + 1));
    }
    CHECK(default_weights() == default_weights());
}

TEST_CASE("weight rendering and exact sums") {
    CHECK(Weight{}.str() == "0.0");
    CHECK((1_w + 4_w).str() == "0.5");
    CHECK(Weight::from_tenths(1000).str() == "100.0");
    CHECK(((1_w + 2_w) + 3_w) == (1_w + (2_w + 3_w)));
}

TEST_CASE("signature levels") {
    CHECK(sig({"void||int", "*", "func", ".."}) == 5_w);
    CHECK(sig({"void", "pkg.A", "save", "int"}) == 1_w);
    CHECK(sig({"*", "pkg.A", "save", ".."}) == 3_w);
    CHECK(sig({"void", "pkg.A", "save", ".."}) == 2_w);
    CHECK(sig({"void", "pkg.A", "save", "String, *"}) == 2_w);
    CHECK(sig({"void", "pkg.A", "sa*", "int"}) == 4_w);
    CHECK(sig({"void", "A", "save", "int"}) == 5_w);
    CHECK(specificity_level({"int", "uas.Student", "year", ""}) == SpecificityLevel::FullyQualified);
}

TEST_CASE("adding a wildcard never lowers the signature weight") {
    const SignaturePattern base{"void", "pkg.A", "save", "int"};
    const auto variants = [](const SignaturePattern& p) {
        std::vector<SignaturePattern> out;
        SignaturePattern q = p;
        q.return_pattern = "*";
        out.push_back(q);
        q = p;
        q.declaring_type_pattern = p.declaring_type_pattern + "*";
        out.push_back(q);
        q = p;
        q.name_pattern = "*" + p.name_pattern;
        out.push_back(q);
        q = p;
        q.params_pattern = "..";
        out.push_back(q);
        return out;
    };
    std::vector<SignaturePattern> frontier{base};
    for (int depth = 0; depth < 3; ++depth) {
        std::vector<SignaturePattern> next;
        for (const SignaturePattern& p : frontier) {
            for (const SignaturePattern& v : variants(p)) {
                CHECK(sig(v) >= sig(p));
                next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
}

TEST_CASE("overrides") {
    CHECK(parse_weight_overrides("") == default_weights());
    CHECK(parse_weight_overrides("{}") == default_weights());
    WeightTable expected = default_weights();
    expected.designator_weights["call"] = 3_w;
    CHECK(parse_weight_overrides(R"({"designator":{"call":0.3}})") == expected);

    const WeightTable t = parse_weight_overrides(
        R"({"designator":{"within":0.2},"advice":{"after_throwing":0.3},
            "joinpoint_type":{"control_flow":1.5},"signature_level":{"wildcard_params":0}})");
    CHECK(t.designator("within") == 2_w);
    CHECK(t.advice(AdviceKind::AfterThrowing) == 3_w);
    CHECK(t.advice(AdviceKind::After) == 1_w);
    CHECK(t.joinpoint_type(JoinPointCategory::ControlFlow) == 15_w);
    CHECK(t.signature_level(SpecificityLevel::WildcardParams) == 0_w);
}

TEST_CASE("override errors") {
    CHECK(override_error(R"({"advice":{"around":-1}})") == ErrorCode::NegativeWeight);
    CHECK(override_error(R"({"advice":{"sometimes":0.1}})") == ErrorCode::UnknownWeightKey);
    CHECK(override_error(R"({"colour":{}})") == ErrorCode::UnknownWeightKey);
    CHECK(override_error(R"({"designator":{"call":0.25}})") == ErrorCode::MalformedConfig);
    CHECK(override_error(R"({"designator":{"call":"high"}})") == ErrorCode::MalformedConfig);
    CHECK(override_error("{not json") == ErrorCode::MalformedConfig);
    try {
        load_weight_overrides(testing::data_dir() / "no-such-weights.json");
        FAIL("expected ConfigNotFound");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ConfigNotFound);
    }
}

TEST_CASE("override file on disk") {
    testing::TempDir tmp("weights");
    testing::write_text(tmp.path() / "w.json", R"({"advice": {"around": 0.5}})");
    CHECK(load_weight_overrides(tmp.path() / "w.json").advice(AdviceKind::Around) == 5_w);
}
