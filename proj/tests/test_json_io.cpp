#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "brmt/json_io.hpp"

using namespace brmt;

TEST_CASE("rational json forms") {
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK(rational_from_json(Json("3/4")) == Rational(3, 4));
    CHECK(rational_from_json(Json::parse("[-2, 6]")) == Rational(-1, 3));
    CHECK(rational_to_json(Rational(7, 2)) == Json("7/2"));
    CHECK(rational_to_json(Rational(4)) == Json("4"));
    CHECK_THROWS_AS(rational_from_json(Json("x")), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), std::invalid_argument);
}

TEST_CASE("partition json") {
    const auto p = IntervalPartition({2, 5});
    CHECK(partition_from_json(partition_to_json(p)) == p);
    CHECK_THROWS_AS(partition_from_json(Json::parse("[3,2]")), std::invalid_argument);
}

TEST_CASE("law and entry model documents") {
    const auto law = law_from_json(Json::parse(R"({"alpha": ["1/2", 3], "beta": [2]})"));
    CHECK(law.alpha(1) == Rational(1, 2));
    CHECK(law.alpha(2) == 3);
    CHECK(law.beta(1) == 2);
    CHECK(law.beta(2) == 0);
    CHECK(law_from_json(law_to_json(law)).alpha(2) == 3);

    const auto bd = entry_model_from_json(
        Json::parse(R"({"kind": "bdiag_family", "a": [3], "b": ["5/2"]})"));
    CHECK(bd.kind() == EntryKind::bdiag_family);
    CHECK(bd.numerator_moment(SignPattern::parse("x*x")) == Rational(5, 2));

    const auto sa = entry_model_from_json(
        Json::parse(R"({"kind": "selfadjoint_family", "alpha": 2, "beta": 1})"));
    CHECK(sa.selfadjoint_params() == std::pair<Rational, Rational>{2, 1});

    const auto gen = entry_model_from_json(
        Json::parse(R"({"kind": "general", "moments": [["xx*", 1, 4], ["xxx", 7]]})"));
    CHECK(gen.numerator_moment(SignPattern::parse("xx*")) == Rational(1, 4));
    CHECK(gen.numerator_moment(SignPattern::parse("xxx")) == 7);

    CHECK_THROWS_AS(entry_model_from_json(Json::parse(R"({"kind": "nope"})")),
                    std::invalid_argument);
}

TEST_CASE("moment functional document") {
    const auto doc = Json::parse(R"({
        "alphabet": ["a", "a*", "b"],
        "involution": [["a", "a*"]],
        "tags": {"a": 0, "a*": 0, "b": 1},
        "max_order": 4,
        "moments": [[["a", "a*"], 1, 2], [["b"], 3]]
    })");
    const auto m = moment_functional_from_json(doc);
    const int a = m.alphabet().find("a"), as = m.alphabet().find("a*"), b = m.alphabet().find("b");
    REQUIRE(a >= 0);
    CHECK(m.alphabet().adjoint_of(a) == as);
    CHECK(m.alphabet().adjoint_of(b) == b);  // unlisted symbols stay self-adjoint
    CHECK(m.alphabet().symbol(b).tag == 1);
    CHECK(m.value(Word{a, as}) == Rational(1, 2));
    CHECK(m.value(Word{b}) == 3);
    CHECK(m.value(Word{a}) == 0);
    CHECK_FALSE(m.is_specified(Word{a}));

    auto bad = doc;
    bad["moments"].push_back(Json::parse(R"([["zz"], 1])"));
    CHECK_THROWS_AS(moment_functional_from_json(bad), std::invalid_argument);
}
