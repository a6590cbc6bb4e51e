#include "qbrauer/report.hpp"
#include "qbrauer/verify.hpp"

#include <doctest.h>

using namespace qbrauer;

TEST_CASE("verdict names") {
    for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::skipped, Verdict::observed})
        CHECK(parse_verdict(verdict_name(v)) == v);
    CHECK_FALSE(parse_verdict("maybe").has_value());
}

TEST_CASE("json round trip") {
    std::vector<RelationReport> all;
    for (SuiteId s : {SuiteId::def_2_3, SuiteId::derived_2_4, SuiteId::s_shape}) {
        auto rs = verify_relation_suite(s, 2, 4);
        all.insert(all.end(), rs.begin(), rs.end());
    }
    SuiteOptions shifted;
    shifted.z_shift = 1;
    auto failing = verify_relation_suite(SuiteId::def_2_3, 2, 3, shifted);
    all.insert(all.end(), failing.begin(), failing.end());
    CHECK(reports_from_json(to_json(all)) == all);
    CHECK(reports_from_json("[]").empty());
    CHECK_THROWS_AS(reports_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(reports_from_json(R"([{"suite": 3}])"), std::invalid_argument);
}

TEST_CASE("text form") {
    RelationReport r;
    r.suite = "def_2_3";
    r.relation_id = "braid[i=1]";
    r.n = 2;
    r.l = 3;
    r.verdict = Verdict::fail;
    r.residual_nonzeros = 4;
    r.residual_sample = "(1,1)=1*q^0";
    const std::string t = to_text({r});
    CHECK(t.rfind("def_2_3 braid[i=1] n=2 l=3 fail residual_nonzeros=4", 0) == 0);
    CHECK(any_failure({r}));
    r.verdict = Verdict::observed;
    CHECK_FALSE(any_failure({r}));
}
