#include "doctest.h"
#include "support.hpp"

#include "pbes/depspace.hpp"
#include "pbes/error.hpp"
#include "pbes/solver.hpp"

#include <algorithm>
#include <set>

using namespace pbes;

namespace {

using EdgeSet = std::set<std::tuple<std::string, std::string, std::size_t>>;

EdgeSet edges_of(const NormalPbes& p, const Rds& rds)
{
    EdgeSet out;
    for (const auto& e : rds.edges)
        out.emplace(rds.vertex_name(p, e.from), rds.vertex_name(p, e.to), e.k + 1);
    return out;
}

std::set<std::string> names(const NormalPbes& p, const Rds& rds, const std::vector<bool>& mask)
{
    std::set<std::string> out;
    for (std::size_t v = 0; v < mask.size(); ++v)
        if (mask[v])
            out.insert(rds.vertex_name(p, v));
    return out;
}

Rds rds_of(const NormalPbes& p)
{
    return build_rds(p, refine_to_fixpoint(p, 100).tuple);
}

} // namespace

TEST_CASE("quotient graphs of the small examples")
{
    const auto p2 = testing::load("e2");
    const Rds r2 = rds_of(p2);
    CHECK(r2.vertices.size() == 4);
    CHECK(edges_of(p2, r2) == EdgeSet{{"X1[d >= 1]", "X1[d >= 1]", 1},
                                      {"X1[d >= 1]", "X2[d >= 1]", 2},
                                      {"X1[d <= 0]", "X1[d >= 1]", 1},
                                      {"X2[d <= 0]", "X2[d >= 1]", 1},
                                      {"X2[d <= 0]", "X1[d <= 0]", 2},
                                      {"X2[d >= 1]", "X2[d >= 1]", 1}});
    const auto p3 = testing::load("e3");
    const Rds r3 = rds_of(p3);
    CHECK(r3.vertices.size() == 3);
    CHECK(edges_of(p3, r3) == EdgeSet{{"X[d mod 3 = 1]", "X[d mod 3 = 2]", 1},
                                      {"X[d mod 3 = 1]", "X[d mod 3 = 0]", 2},
                                      {"X[d mod 3 = 0]", "X[d mod 3 = 1]", 1}});
    const auto p4 = testing::load("e4");
    const Rds r4 = rds_of(p4);
    CHECK(r4.vertices.size() == 5);
    CHECK(r4.edges.size() == 8);
}

TEST_CASE("quotient construction refuses unstable tuples")
{
    const auto p = testing::load("e4");
    CHECK_THROWS_AS(build_rds(p, initial_partitions(p)), NotCongruent);
}

TEST_CASE("locating blocks")
{
    const auto p4 = testing::load("e4");
    const Rds r4 = rds_of(p4);
    CHECK(r4.vertex_name(p4, locate_block(p4, r4, 1, {0})) == "X2[d <= 0]");
    const auto p3 = testing::load("e3");
    const Rds r3 = rds_of(p3);
    CHECK(r3.vertex_name(p3, locate_block(p3, r3, 0, {7})) == "X[d mod 3 = 1]");
    const auto p2 = testing::load("e2");
    const Rds r2 = rds_of(p2);
    CHECK(r2.vertex_name(p2, locate_block(p2, r2, 0, {0})) == "X1[d <= 0]");
    CHECK_THROWS_AS(locate_block(p2, r2, 0, {-1}), DomainError);
    Rds broken = r2;
    broken.vertices.erase(broken.vertices.begin());
    CHECK_THROWS_AS(locate_block(p2, broken, 0, {5}), Unreachable);
}

TEST_CASE("good cycle vertices")
{
    const auto p2 = testing::load("e2");
    const Rds r2 = rds_of(p2);
    CHECK(names(p2, r2, good_cycle_vertices(r2)) == std::set<std::string>{"X1[d >= 1]"});
    const auto p3 = testing::load("e3");
    const Rds r3 = rds_of(p3);
    CHECK(names(p3, r3, good_cycle_vertices(r3)) == std::set<std::string>{"X[d mod 3 = 0]", "X[d mod 3 = 1]"});
    const auto acyclic = parse_pbes("nu X(d:Nat) = d <= 0 && Y(d); nu Y(d:Nat) = d >= 1 && X(d);");
    const Rds ra = rds_of(acyclic);
    const auto good = good_cycle_vertices(ra);
    CHECK(std::none_of(good.begin(), good.end(), [](bool b) { return b; }));
}

TEST_CASE("extraction")
{
    const auto p2 = testing::load("e2");
    const Rds r2 = rds_of(p2);
    const auto w = extract(r2, locate_block(p2, r2, 1, {0}));
    REQUIRE(w);
    CHECK(render_witness(p2, r2, *w) == "stem: X2[d <= 0] -k2-> X1[d <= 0] -k1-> X1[d >= 1]\n"
                                        "cycle: X1[d >= 1] -k1-> X1[d >= 1]\n");
    const auto p3 = testing::load("e3");
    const Rds r3 = rds_of(p3);
    CHECK_FALSE(extract(r3, locate_block(p3, r3, 0, {2})));
    const auto p4 = testing::load("e4");
    const Rds r4 = rds_of(p4);
    CHECK_FALSE(extract(r4, locate_block(p4, r4, 1, {5})));
}

TEST_CASE("validation of proof graphs")
{
    const auto p2 = testing::load("e2");
    const Rds r2 = rds_of(p2);
    const auto w = extract(r2, locate_block(p2, r2, 1, {0}));
    REQUIRE(w);
    const ProofGraph g = to_proof_graph(r2, *w);
    CHECK(validate(p2, g).accepted);

    const auto p1 = testing::load("e1");
    const ProofGraph y = parse_graph_file(p1, "vertex y Y true\nedge y y k=1\nroot y\n");
    const Verdict vy = validate(p1, y);
    CHECK_FALSE(vy.accepted);
    CHECK(vy.condition == 3);

    ProofGraph two = g;
    two.edges.push_back(ProofEdge{0, 0, 0});
    CHECK(validate(p2, two).condition == 1);

    ProofGraph wrong_k = g;
    wrong_k.edges[0].k = 0;
    CHECK(validate(p2, wrong_k).condition == 2);

    const ProofGraph loose = parse_graph_file(p2, "vertex a X1 true\nedge a a k=2\nroot a\n");
    CHECK(validate(p2, loose).condition == 2);
    const ProofGraph leak = parse_graph_file(p2, "vertex a X1 d >= 1\nvertex b X2 d <= 3\nedge a b k=2\n"
                                                 "edge b b k=1\nroot a\n");
    CHECK(validate(p2, leak).condition == 2);
}

TEST_CASE("graph files")
{
    const auto p2 = testing::load("e2");
    const Rds r2 = rds_of(p2);
    const auto w = extract(r2, locate_block(p2, r2, 1, {0}));
    const ProofGraph g = to_proof_graph(r2, *w);
    const std::string text = to_graph_file(p2, g);
    CHECK(text == "vertex v1 X2 d <= 0\nvertex v2 X1 d <= 0\nvertex v3 X1 d >= 1\n"
                  "edge v1 v2 k=2\nedge v2 v3 k=1\nedge v3 v3 k=1\nroot v1\n");
    const ProofGraph back = parse_graph_file(p2, text);
    CHECK(to_graph_file(p2, back) == text);
    CHECK_THROWS_AS(parse_graph_file(p2, "vertex a X9 true\nroot a\n"), GraphFormatError);
    CHECK_THROWS_AS(parse_graph_file(p2, "vertex a X1 true\nedge a b k=1\nroot a\n"), GraphFormatError);
    CHECK_THROWS_AS(parse_graph_file(p2, "vertex a X1 true\nedge a a k=x\nroot a\n"), GraphFormatError);
    CHECK_THROWS_AS(parse_graph_file(p2, "vertex a X1 d >=\nroot a\n"), GraphFormatError);
    CHECK_THROWS_AS(parse_graph_file(p2, "vertex a X1 true\n"), GraphFormatError);
    CHECK_THROWS_AS(parse_graph_file(p2, "node a X1 true\nroot a\n"), GraphFormatError);
}

TEST_CASE("membership decisions")
{
    const auto p2 = testing::load("e2");
    CHECK(decide_membership(p2, {1, {0}}).verdict == Answer::True);
    CHECK(decide_membership(p2, {1, {5}}).verdict == Answer::False);
    const auto p3 = testing::load("e3");
    CHECK(decide_membership(p3, {0, {5}}).verdict == Answer::False);
    const auto pn = testing::load("noterm");
    const auto m = decide_membership(pn, {1, {0}}, 20);
    CHECK(m.verdict == Answer::Unknown);
    CHECK(m.reason == "refinement capped at 20 sweeps");
    CHECK_THROWS_AS(decide_membership(p2, {1, {-2}}), DomainError);
}
