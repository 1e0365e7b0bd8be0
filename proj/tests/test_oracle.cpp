#include "doctest.h"
#include "support.hpp"

#include "pbes/error.hpp"
#include "pbes/oracle.hpp"

using namespace pbes;

TEST_CASE("concrete successors")
{
    const auto p2 = testing::load("e2");
    const auto s1 = concrete_successors(p2, {0, {1}});
    REQUIRE(s1.size() == 2);
    CHECK(s1[0].k == 0);
    CHECK(s1[0].target == SigElement{0, {2}});
    CHECK(s1[1].k == 1);
    CHECK(s1[1].target == SigElement{1, {1}});
    const auto s0 = concrete_successors(p2, {0, {0}});
    REQUIRE(s0.size() == 1);
    CHECK(s0[0].target == SigElement{0, {1}});
    CHECK(concrete_successors(testing::load("e3"), {0, {5}}).empty());
    CHECK_THROWS_AS(concrete_successors(p2, {0, {-1}}), DomainError);
}

TEST_CASE("concretization follows the witness")
{
    const auto p2 = testing::load("e2");
    const auto a = analyze(p2);
    const auto m = decide(p2, a, {1, {0}});
    REQUIRE(m.witness);
    const ProofGraph g = to_proof_graph(*a.rds, *m.witness);
    const auto path = concretize(p2, g, {0}, 5);
    std::vector<std::string> shown;
    for (const auto& s : path)
        shown.push_back(to_string(p2, s));
    CHECK(shown == std::vector<std::string>{"X2(0)", "X1(0)", "X1(1)", "X1(2)", "X1(3)", "X1(4)"});
    CHECK(concretize(p2, g, {0}, 0).size() == 1);

    ProofGraph tampered = g;
    tampered.edges[0].k = 0;
    try {
        concretize(p2, tampered, {0}, 5);
        FAIL("expected a step violation");
    } catch (const StepViolation& e) {
        CHECK(e.step() == 1);
    }
    CHECK_THROWS_AS(concretize(p2, g, {3}, 1), StepViolation);
}

TEST_CASE("bounded lasso search")
{
    const auto self = testing::load("selfloop");
    const auto t = bounded_lasso_search(self, {0, {7}});
    CHECK(t.verdict == Answer::True);
    CHECK(t.lasso == std::vector<SigElement>{{0, {7}}});

    const auto f = bounded_lasso_search(testing::load("e3"), {0, {5}});
    CHECK(f.verdict == Answer::False);
    CHECK(f.explored == 1);
    CHECK(f.pruned == 0);

    const auto u = bounded_lasso_search(testing::load("e2"), {0, {0}}, 10000, 100);
    CHECK(u.verdict == Answer::Unknown);
    CHECK(u.pruned > 0);

    const auto capped = bounded_lasso_search(testing::load("e2"), {0, {0}}, 5, 1000);
    CHECK(capped.verdict == Answer::Unknown);
    CHECK(capped.explored <= 5);
}
