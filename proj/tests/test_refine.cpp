#include "doctest.h"
#include "support.hpp"

#include "pbes/error.hpp"
#include "pbes/oracle.hpp"
#include "pbes/refine.hpp"

using namespace pbes;
namespace pb = pbes::presburger;

namespace {

std::vector<std::string> blocks_of(const Partition& p)
{
    std::vector<std::string> out;
    for (const auto& b : p.blocks)
        out.push_back(b.to_string());
    return out;
}

Partition nat_partition(std::vector<std::string> blocks)
{
    Partition p{{"d"}, SortKind::Nat, {}};
    for (const auto& b : blocks)
        p.blocks.push_back(pb::canonicalize(parse_formula(b, p.params, p.kind), p.scope()));
    return p;
}

} // namespace

TEST_CASE("division splits blocks in place")
{
    const Partition top = nat_partition({"true"});
    bool split = false;
    const auto p = divide(top, parse_formula("d >= 1", {"d"}, SortKind::Nat), &split);
    CHECK(split);
    CHECK(blocks_of(p) == std::vector<std::string>{"d >= 1", "d <= 0"});
    const auto q = divide(p, parse_formula("d - 1 <= 0", {"d"}, SortKind::Nat));
    CHECK(blocks_of(q) == std::vector<std::string>{"d = 1", "d >= 2", "d <= 0"});
    split = false;
    CHECK(blocks_of(divide(q, Formula::truth(), &split)) == blocks_of(q));
    CHECK_FALSE(split);
}

TEST_CASE("division by a set")
{
    const Partition top = nat_partition({"true"});
    const auto p = divide_set(top, std::vector<Formula>{parse_formula("d mod 3 < 2", {"d"}, SortKind::Nat),
                                                        parse_formula("d mod 3 = 1", {"d"}, SortKind::Nat)});
    CHECK(blocks_of(p) == std::vector<std::string>{"d mod 3 = 1", "d mod 3 = 0", "d mod 3 = 2"});
    CHECK(blocks_of(divide_set(top, std::vector<Formula>{})) == std::vector<std::string>{"true"});
}

TEST_CASE("initial partitions")
{
    const auto t4 = initial_partitions(testing::load("e4"));
    CHECK(blocks_of(t4[0]) == std::vector<std::string>{"d >= 1", "d <= 0"});
    CHECK(blocks_of(t4[1]) == std::vector<std::string>{"d <= 0", "d >= 1"});
    const auto t2 = initial_partitions(testing::load("e2"));
    CHECK(blocks_of(t2[0]) == std::vector<std::string>{"d >= 1", "d <= 0"});
    CHECK(blocks_of(t2[1]) == std::vector<std::string>{"d <= 0", "d >= 1"});
    CHECK_FALSE(enumerate_check_partition(t2, 100));
    CHECK(blocks_of(initial_partitions(testing::load("selfloop"))[0]) == std::vector<std::string>{"true"});
}

TEST_CASE("single partition steps on the worked trace")
{
    const auto p = testing::load("e4");
    const auto omega = initial_partitions(p);
    bool split = false;
    const auto after_k2 = apply_hik(omega, 0, 1, p, &split);
    CHECK(split);
    CHECK(blocks_of(after_k2[0]) == std::vector<std::string>{"d = 1", "d >= 2", "d <= 0"});
    CHECK(blocks_of(after_k2[1]) == blocks_of(omega[1]));
    split = false;
    const auto after_k1 = apply_hik(omega, 0, 0, p, &split);
    CHECK_FALSE(split);
    CHECK(blocks_of(after_k1[0]) == blocks_of(omega[0]));

    const auto h = apply_h(omega, p);
    CHECK(blocks_of(h[0]) == std::vector<std::string>{"d = 1", "d >= 2", "d <= 0"});
    CHECK(blocks_of(h[1]) == std::vector<std::string>{"d <= 0", "d >= 1"});
    split = false;
    const auto again = apply_h(h, p, &split);
    CHECK_FALSE(split);
    CHECK(blocks_of(again[0]) == blocks_of(h[0]));
}

TEST_CASE("a guard that excludes every block changes nothing")
{
    const auto p = parse_pbes("nu X(d:Nat) = (d >= 5 && d <= 2 && X(d + 1)) || (d <= 4 && X(d));");
    const PartitionTuple t{nat_partition({"d <= 4", "d >= 5"})};
    bool split = false;
    const auto u = apply_hik(t, 0, 0, p, &split);
    CHECK_FALSE(split);
    CHECK(blocks_of(u[0]) == blocks_of(t[0]));
}

TEST_CASE("blocks that straddle a guard are rejected")
{
    const auto p = testing::load("e4");
    PartitionTuple t{nat_partition({"true"}), nat_partition({"true"})};
    CHECK_THROWS_AS(apply_hik(t, 0, 1, p), InvariantBroken);
}

TEST_CASE("fixpoints and caps")
{
    const auto r4 = refine_to_fixpoint(testing::load("e4"), 50);
    CHECK(r4.status == RefineStatus::Fixpoint);
    CHECK(r4.sweeps == 2);
    CHECK(r4.trace == std::vector<std::size_t>{5, 5});

    const auto r3 = refine_to_fixpoint(testing::load("e3"), 50);
    CHECK(r3.status == RefineStatus::Fixpoint);
    CHECK(blocks_of(r3.tuple[0]) == std::vector<std::string>{"d mod 3 = 1", "d mod 3 = 0", "d mod 3 = 2"});

    const auto rn = refine_to_fixpoint(testing::load("noterm"), 20);
    CHECK(rn.status == RefineStatus::Capped);
    CHECK(rn.sweeps == 20);
    CHECK(rn.tuple[1].blocks.size() >= 20);
    CHECK_THROWS_AS(refine_to_fixpoint(testing::load("e4"), 0), Error);
}

TEST_CASE("stability checks")
{
    const auto p = testing::load("e4");
    const auto r = refine_to_fixpoint(p, 50);
    CHECK_FALSE(check_stable(p, r.tuple));
    CHECK(check_stable(p, initial_partitions(p)));
    for (const auto& part : r.tuple)
        CHECK_FALSE(check_partition(part));
    CHECK(check_partition(nat_partition({"d >= 1"})));
    CHECK(check_partition(nat_partition({"d >= 0", "d >= 1"})));
}

TEST_CASE("enumeration check of partitions")
{
    CHECK_FALSE(enumerate_check_partition(refine_to_fixpoint(testing::load("e4"), 50).tuple, 100));
    const auto cover = enumerate_check_partition(nat_partition({"d >= 1"}), 10);
    REQUIRE(cover);
    CHECK(*cover == "cover violation at d=0");
    const auto overlap = enumerate_check_partition(nat_partition({"d >= 0", "d >= 1"}), 10);
    REQUIRE(overlap);
    CHECK(*overlap == "disjointness violation at d=1");
}
