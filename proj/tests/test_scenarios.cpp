#include "cohocalc/errors.hpp"
#include "cohocalc/grr_lambda.hpp"
#include "cohocalc/scenarios.hpp"

#include <doctest.h>

#include <future>

using namespace cohocalc;

namespace {

const Step* find_step(const Report& r, std::string_view label_part) {
    for (const Step& s : r.steps)
        if (s.label.find(label_part) != std::string::npos)
            return &s;
    return nullptr;
}

} // namespace

TEST_SUITE_BEGIN("scenarios");

TEST_CASE("every scenario passes") {
    for (const std::string& name : repro_scenario_names()) {
        Report r = repro(name);
        CHECK(r.scenario == name);
        CHECK(r.passed());
        CHECK_FALSE(r.steps.empty());
        for (const Step& s : r.steps)
            CHECK_FALSE(s.citation.empty());
    }
}

TEST_CASE("unknown scenario") {
    CHECK_THROWS_AS(repro("nonsense"), UnknownScenario);
}

TEST_CASE("repro all aggregates every scenario") {
    Report all = repro("all");
    CHECK(all.passed());
    std::size_t total = 0;
    for (const std::string& name : repro_scenario_names())
        total += repro(name).steps.size();
    CHECK(all.steps.size() == total);
}

TEST_CASE("assumption steps are recorded, not computed") {
    Report m = repro("multiplicities");
    bool has_assumption = false;
    for (const Step& s : m.steps)
        has_assumption |= s.verdict == Verdict::assumption;
    CHECK(has_assumption);
    CHECK(m.passed());

    const Step* chosen = find_step(m, "multiplicities (m0, m1)");
    REQUIRE(chosen != nullptr);
    CHECK(chosen->computed == "(8,2)");

    const Step* solutions = find_step(m, "positive solutions");
    REQUIRE(solutions != nullptr);
    CHECK(solutions->computed == "{(28,1),(8,2)}");
}

TEST_CASE("key step values") {
    Report fiber = repro("fiber");
    const Step* deg_f = find_step(fiber, "deg F");
    REQUIRE(deg_f != nullptr);
    CHECK(deg_f->computed == "122880");

    Report n0 = repro("n0");
    const Step* deg_n0 = find_step(n0, "deg N0 = 2^5 * 80");
    REQUIRE(deg_n0 != nullptr);
    CHECK(deg_n0->computed == "2560");

    Report n1 = repro("n1");
    const Step* deg_n1 = find_step(n1, "deg N1 with c.H = -2");
    REQUIRE(deg_n1 != nullptr);
    CHECK(deg_n1->computed == "51200");

    Report thm2 = repro("thm2");
    CHECK(find_step(thm2, "coefficient of [F] in [N0]")->computed == "1/48");
    CHECK(find_step(thm2, "coefficient of [F] in [N1]")->computed == "5/12");
    CHECK(find_step(thm2, "beta-scaling")->computed == "-4");

    Report ind = repro("independence");
    CHECK(find_step(ind, "obstruction integral")->computed == "384");
}

TEST_CASE("reports are byte-identical across runs") {
    for (const char* name : {"fiber", "n1", "thm2", "lambda-check"}) {
        Report a = repro(name);
        Report b = repro(name);
        CHECK(report_to_json(a) == report_to_json(b));
        CHECK(report_to_text(a) == report_to_text(b));
    }
    CHECK(report_to_json(selfcheck()) == report_to_json(selfcheck()));
}

TEST_CASE("selfcheck passes and covers the required suites") {
    Report s = selfcheck();
    CHECK(s.passed());
    CHECK(find_step(s, "presentation wbar") != nullptr);
    CHECK(find_step(s, "ring axioms") != nullptr);
    CHECK(find_step(s, "exp(x) exp(-x) = 1") != nullptr);
    CHECK(find_step(s, "Segre-Chern duality") != nullptr);
    CHECK(find_step(s, "tensor-product integral factorizes") != nullptr);
    CHECK(find_step(s, "GRR grid") != nullptr);
    CHECK(find_step(s, "injected contradictory rule") != nullptr);
}

TEST_CASE("scenarios run concurrently") {
    auto f1 = std::async(std::launch::async, [] { return repro("n1"); });
    auto f2 = std::async(std::launch::async, [] { return repro("n0"); });
    auto f3 = std::async(std::launch::async, [] { return repro("fiber"); });
    Report r1 = f1.get();
    Report r2 = f2.get();
    Report r3 = f3.get();
    CHECK(r1.passed());
    CHECK(r2.passed());
    CHECK(r3.passed());
    // shared immutable rings: concurrent reads of the same presentation
    auto g1 = std::async(std::launch::async, [] { return assemble_n1(1).value.str(); });
    auto g2 = std::async(std::launch::async, [] { return assemble_n1(-2).value.str(); });
    CHECK(g1.get() == "-zeta + 2*gamma - 4*theta - 5*rho");
    CHECK(g2.get() == "2*zeta - 4*gamma + 8*theta + 10*rho");
}

TEST_CASE("report pass/fail logic") {
    Report r;
    r.scenario = "demo";
    r.check("good", "1", "1", "c");
    CHECK(r.passed());
    r.assume("assumed", "fact", "c");
    CHECK(r.passed());
    r.check("bad", "1", "2", "c");
    CHECK_FALSE(r.passed());
    CHECK(r.verdict_string() == "fail");
}

TEST_SUITE_END();
