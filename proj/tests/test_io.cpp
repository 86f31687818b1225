#include <gtest/gtest.h>

#include "lol/verify.hpp"
#include "support.hpp"

using namespace lol;

#ifndef LOL_FIXTURES
#define LOL_FIXTURES "fixtures"
#endif

namespace {

std::string fixture(const std::string& name) { return std::string(LOL_FIXTURES) + "/" + name; }

json parse(const char* text) { return json::parse(text); }

}  // namespace

// ---- operators ------------------------------------------------------------------

TEST(OperatorJson, RealAndComplexEntries) {
    const auto a = operator_from_json(parse(R"({"dim": 2, "entries": [[1, [0, -1]], [[0, 1], 2]]})"));
    EXPECT_EQ(a.dim(), 2u);
    EXPECT_EQ(a.matrix()(0, 1), Complex(0, -1));
    EXPECT_EQ(a.matrix()(1, 0), Complex(0, 1));
    const auto b = operator_from_json(parse(R"({"entries": [[2]]})"));
    EXPECT_TRUE(lt::same_op(b, lt::diag({2})));
}

TEST(OperatorJson, RoundTrip) {
    Rng rng(4);
    for (int i = 0; i < 10; ++i) {
        const auto a = random_hermitian(4, rng);
        const auto back = operator_from_json(json::parse(operator_to_json(a).dump()));
        EXPECT_LT((back.matrix() - a.matrix()).norm(), 1e-13);
    }
}

TEST(OperatorJson, WritesPairsAndCleansNoise) {
    const auto j = operator_to_json(lt::diag({1, 1e-16}));
    EXPECT_EQ(j.dump(), R"({"dim":2,"entries":[[[1.0,0.0],[0.0,0.0]],[[0.0,0.0],[0.0,0.0]]]})");
}

TEST(OperatorJson, Errors) {
    EXPECT_THROW(operator_from_json(parse(R"({"dim": 2})")), ParseError);
    EXPECT_THROW(operator_from_json(parse(R"({"entries": []})")), ParseError);
    EXPECT_THROW(operator_from_json(parse(R"({"entries": [[1, 2]]})")), DimMismatch);
    EXPECT_THROW(operator_from_json(parse(R"({"dim": 3, "entries": [[1]]})")), DimMismatch);
    EXPECT_THROW(operator_from_json(parse(R"({"entries": [["x"]]})")), ParseError);
    EXPECT_THROW(operator_from_json(parse(R"({"entries": [[[1, 2, 3]]]})")), ParseError);
    EXPECT_THROW(operator_from_json(parse(R"({"entries": [[1, 2], [0, 1]]})")), NotHermitian);
    EXPECT_THROW(operator_from_json(parse(R"([1, 2])")), ParseError);
}

TEST(OperatorJson, NotHermitianMessageIsReadable) {
    try {
        operator_from_json(parse(R"({"entries": [[1, 2], [0, 1]]})"));
        FAIL();
    } catch (const NotHermitian& e) {
        EXPECT_NE(std::string(e.what()).find("defect 1.41"), std::string::npos) << e.what();
    }
}

// ---- files -----------------------------------------------------------------------

TEST(Files, LoadFixtures) {
    EXPECT_TRUE(lt::same_op(operator_from_json(load_json_file(fixture("a.json"))), lt::diag({1, 2, 0})));
    const auto c = operator_from_json(load_json_file(fixture("complex2.json")));
    EXPECT_EQ(c.dim(), 2u);
    EXPECT_THROW(load_json_file(fixture("malformed.json")), ParseError);
    EXPECT_THROW(load_json_file(fixture("does-not-exist.json")), ParseError);
    EXPECT_THROW(operator_from_json(load_json_file(fixture("not_hermitian.json"))), NotHermitian);
}

TEST(Files, PosetFixtures) {
    const auto o6 = poset_from_json(load_json_file(fixture("o6.json")));
    EXPECT_EQ(o6.size(), 6u);
    EXPECT_TRUE(o6.has_complement());
    EXPECT_EQ(brute_lub(o6, "a", "b'"), std::optional<std::string>("1"));
    EXPECT_TRUE(poset_from_json(load_json_file(fixture("mo2.json"))).has_ortho());
    EXPECT_FALSE(has_ubp(poset_from_json(load_json_file(fixture("bowtie.json")))).holds);
    EXPECT_THROW(poset_from_json(load_json_file(fixture("cycle.json"))), InvalidPoset);
    EXPECT_THROW(poset_from_json(load_json_file(fixture("bad_ortho.json"))), InvalidPoset);
}

// ---- partial functions, random variables, posets ---------------------------------------

TEST(PfJson, RoundTripAndErrors) {
    const auto f = pf_from_json(parse(R"({"universe": ["1", "2", 3], "map": {"1": "a", "3": 7}})"));
    EXPECT_EQ(f.mapping().at("3"), "7");
    EXPECT_EQ(pf_from_json(json::parse(pf_to_json(f).dump())), f);
    EXPECT_TRUE(pf_from_json(parse(R"({"universe": ["1"]})")).mapping().empty());
    EXPECT_THROW(pf_from_json(parse(R"({"map": {}})")), ParseError);
    EXPECT_THROW(pf_from_json(parse(R"({"universe": ["1"], "map": {"2": "a"}})")), UnknownElement);
    EXPECT_THROW(pf_from_json(parse(R"({"universe": ["1"], "map": [1]})")), ParseError);
    EXPECT_THROW(pf_from_json(parse(R"({"universe": [true]})")), ParseError);
}

TEST(RvJson, RoundTripAndErrors) {
    const auto f = rv_from_json(parse(R"({"values": [1, 2.5, 0]})"));
    EXPECT_EQ(f.values(), (std::vector<double>{1, 2.5, 0}));
    EXPECT_EQ(rv_to_json(f).dump(), R"({"values":[1.0,2.5,0.0]})");
    EXPECT_THROW(rv_from_json(parse(R"({"values": ["x"]})")), ParseError);
    EXPECT_THROW(rv_from_json(parse(R"({"values": []})")), InputError);
    EXPECT_THROW(rv_from_json(parse(R"({})")), ParseError);
}

TEST(PosetJson, RoundTrip) {
    for (const auto& p : {fixtures::boolean_cube(3), fixtures::mo2(), fixtures::o6(), fixtures::bowtie()}) {
        const auto q = poset_from_json(json::parse(poset_to_json(p).dump()));
        ASSERT_EQ(q.labels(), p.labels());
        EXPECT_EQ(q.has_ortho(), p.has_ortho());
        for (std::size_t x = 0; x < p.size(); ++x)
            for (std::size_t y = 0; y < p.size(); ++y) {
                EXPECT_EQ(q.le(x, y), p.le(x, y));
                if (p.has_ortho()) {
                    EXPECT_EQ(q.ortho(x, y), p.ortho(x, y));
                }
            }
    }
}

TEST(PosetJson, Errors) {
    EXPECT_THROW(poset_from_json(parse(R"({"le": [], "zero": "0"})")), ParseError);
    EXPECT_THROW(poset_from_json(parse(R"({"elements": ["0"]})")), ParseError);
    EXPECT_THROW(poset_from_json(parse(R"({"elements": ["0"], "zero": "0", "le": [["0"]]})")), ParseError);
    EXPECT_THROW(poset_from_json(parse(R"({"elements": ["0"], "zero": "0", "ortho": {}})")), ParseError);
    EXPECT_THROW(poset_from_json(parse(R"({"elements": ["0"], "zero": "1"})")), UnknownElement);
    EXPECT_NO_THROW(poset_from_json(parse(R"({"elements": [0, 1], "zero": 0, "le": [[0, 1]]})")));
}

// ---- verify ---------------------------------------------------------------------------

TEST(Verify, SuiteSelection) {
    EXPECT_EQ(parse_suites("all").size(), 9u);
    EXPECT_EQ(parse_suites("qom,goa,qom"), (std::vector<std::string>{"qom", "goa"}));
    EXPECT_THROW(parse_suites("qom,nope"), InputError);
    EXPECT_THROW(parse_suites(""), InputError);
}

TEST(Verify, ConfigValidation) {
    RunConfig rc;
    EXPECT_NO_THROW(rc.validate());
    rc.samples = 0;
    EXPECT_THROW(rc.validate(), InputError);
    rc = {};
    rc.dim = 0;
    EXPECT_THROW(rc.validate(), InputError);
    rc = {};
    rc.format = "xml";
    EXPECT_THROW(rc.validate(), InputError);
    EXPECT_THROW(run_verify("no-such-model", "all", RunConfig{}), InputError);
}

TEST(Verify, AllSkipsUnavailableSuites) {
    const auto r = run_verify("bowtie", "all", RunConfig{});
    bool skipped = false;
    for (const auto& j : r.reports)
        if (j["stats"]["mode"] == "skipped") {
            skipped = true;
            EXPECT_EQ(j["verdict"], "informational");
        }
    EXPECT_TRUE(skipped);  // the bowtie has no orthogonality
    EXPECT_THROW(run_verify("bowtie", "qom", RunConfig{}), OrthogonalityUnavailable);
}

TEST(Verify, OutcomesByTarget) {
    EXPECT_TRUE(run_verify("rv", "all", RunConfig{}).ok);
    EXPECT_TRUE(run_verify("boolean3", "all", RunConfig{}).ok);
    EXPECT_FALSE(run_verify("mo2", "absorption", RunConfig{}).ok);
    EXPECT_FALSE(run_verify(fixture("o6.json"), "qom", RunConfig{}).ok);
    RunConfig rc;
    rc.dim = 3;
    rc.samples = 60;
    rc.seed = 7;
    const auto m = run_verify("matrix", "goa", rc);
    EXPECT_TRUE(m.ok);
    for (const auto& j : m.reports) EXPECT_EQ(j["stats"]["seed"], 7);
}

TEST(Verify, TableHasOneRowPerReport) {
    const auto r = run_verify("mo2", "riesz", RunConfig{});
    const auto t = reports_table(r.reports);
    EXPECT_EQ(static_cast<std::size_t>(std::count(t.begin(), t.end(), '\n')), r.reports.size() + 1);
    EXPECT_NE(t.find("riesz<->distributive"), std::string::npos);
}
