#include "doctest.h"

#include "pbes/error.hpp"
#include "pbes/presburger.hpp"

using namespace pbes;
using namespace pbes::presburger;

namespace {

const Scope nat_d{{"d", SortKind::Nat}};
const Scope int_d{{"d", SortKind::Int}};

AffineTerm d(std::int64_t c = 1) { return AffineTerm::variable("d", c); }
AffineTerm k(std::int64_t c) { return AffineTerm::constant(c); }

} // namespace

TEST_CASE("canonical printing of simple blocks")
{
    CHECK(canonicalize(Formula::negation(Formula::compare(d(), CmpOp::Ge, k(1))), nat_d).to_string() == "d <= 0");
    CHECK(canonicalize(Formula::conj(Formula::compare(d(), CmpOp::Ge, k(1)), Formula::compare(d(), CmpOp::Ge, k(0))),
                       nat_d)
              .to_string() == "d >= 1");
    CHECK(canonicalize(Formula::conj(Formula::compare(d(), CmpOp::Ge, k(1)),
                                     Formula::negation(Formula::compare(d(), CmpOp::Ge, k(2)))),
                       nat_d)
              .to_string() == "d = 1");
}

TEST_CASE("quantifier elimination")
{
    const auto even = Formula::exists("y", SortKind::Int, Formula::compare(d(), CmpOp::Eq, AffineTerm::variable("y", 2)));
    CHECK(canonicalize(even, int_d).to_string() == "d mod 2 = 0");
    const auto taut = Formula::forall(
        "e", SortKind::Nat, Formula::compare(AffineTerm::variable("e") + d(), CmpOp::Ge, d()));
    CHECK(canonicalize(taut, nat_d).is_true());
    const auto empty = Formula::exists("y", SortKind::Nat,
                                       Formula::conj(Formula::compare(AffineTerm::variable("y"), CmpOp::Ge, k(1)),
                                                     Formula::compare(AffineTerm::variable("y"), CmpOp::Le, k(0))));
    CHECK(canonicalize(empty, nat_d).is_false());
}

TEST_CASE("entailment and satisfiability")
{
    CHECK(entails(Formula::compare(d(), CmpOp::Gt, k(1)), Formula::compare(d() - k(1), CmpOp::Gt, k(0)), nat_d));
    CHECK(entails(Formula::compare(d(), CmpOp::Eq, k(1)), Formula::compare(d(), CmpOp::Ge, k(1)), nat_d));
    CHECK_FALSE(entails(Formula::compare(d(), CmpOp::Ge, k(1)), Formula::compare(d(), CmpOp::Eq, k(1)), nat_d));
    CHECK_FALSE(is_satisfiable(
        Formula::conj(Formula::compare(d(), CmpOp::Ge, k(1)), Formula::compare(d(), CmpOp::Lt, k(1))), nat_d));
    const auto two = Formula::congruence(d(), 3, 2);
    const auto low = Formula::disj(Formula::congruence(d(), 3, 0), Formula::congruence(d(), 3, 1));
    CHECK_FALSE(is_satisfiable(Formula::conj(two, low), nat_d));
    CHECK(canonicalize(Formula::disj(two, low), nat_d).is_true());
}

TEST_CASE("multi-variable blocks")
{
    const Scope xy{{"x", SortKind::Nat}, {"y", SortKind::Nat}};
    const auto x = AffineTerm::variable("x");
    const auto y = AffineTerm::variable("y");
    const auto c1 = Formula::conj(Formula::compare(x, CmpOp::Ge, k(1)), Formula::compare(y, CmpOp::Ge, k(1)));
    CHECK(canonicalize(c1, xy).to_string() == "x >= 1 && y >= 1");
    CHECK(canonicalize(Formula::negation(c1), xy).to_string() == "x <= 0 || y <= 0");
    CHECK(evaluate(c1, xy, {{"x", 1}, {"y", 0}}) == false);
    CHECK_THROWS_AS(evaluate(c1, xy, {{"x", -1}, {"y", 0}}), DomainError);
    CHECK_FALSE(is_satisfiable(Formula::conj(Formula::compare(x + y, CmpOp::Le, k(1)),
                                             Formula::compare(x.scaled(2) + y.scaled(2), CmpOp::Eq, k(3))),
                               xy));
}

TEST_CASE("substitution of updates")
{
    const std::vector<std::string> params{"d"};
    const auto f = Formula::compare(d(), CmpOp::Le, k(0));
    const auto g = substitute(f, params, AffineUpdate{d() + k(1)});
    CHECK(g == Formula::compare(d() + k(1), CmpOp::Le, k(0)));
    CHECK(substitute(f, params, AffineUpdate{d()}) == f);
    const auto m = Formula::congruence(d(), 3, 1);
    const auto shifted = substitute(m, params, AffineUpdate{d() + k(2)});
    for (std::int64_t v = 0; v <= 20; ++v)
        CHECK(shifted.evaluate_ground({{"d", v}}) == ((v + 2) % 3 == 1));
    CHECK_THROWS_AS(substitute(f, params, AffineUpdate{}), SortMismatch);
}

TEST_CASE("canonical substitution drops into the result scope")
{
    const auto block = canonicalize(Formula::compare(d(), CmpOp::Le, k(0)), nat_d);
    const auto image = substitute(block, Substitution{{"d", d() - k(1)}}, nat_d);
    CHECK(image.to_string() == "d <= 1");
}

TEST_CASE("evaluation")
{
    CHECK(evaluate(Formula::congruence(d(), 3, 1), nat_d, {{"d", 4}}));
    CHECK(evaluate(Formula::truth(), nat_d, {{"d", 9}}));
    CHECK_THROWS_AS(evaluate(Formula::truth(), nat_d, {{"d", -1}}), DomainError);
    CHECK_THROWS_AS(evaluate(Formula::compare(d(), CmpOp::Ge), nat_d, {}), DomainError);
}

TEST_CASE("canonical forms are deterministic")
{
    const auto a = canonicalize(Formula::disj(Formula::compare(d(), CmpOp::Ge, k(5)), Formula::compare(d(), CmpOp::Le, k(2))),
                                int_d);
    const auto b = canonicalize(Formula::disj(Formula::compare(d(), CmpOp::Le, k(2)), Formula::compare(d(), CmpOp::Ge, k(5))),
                                int_d);
    CHECK(a == b);
    CHECK(a.to_string() == "d <= 2 || d >= 5");
    // Adjacent intervals merge.
    const auto c = canonicalize(Formula::disj(Formula::compare(d(), CmpOp::Le, k(2)), Formula::compare(d(), CmpOp::Ge, k(3))),
                                int_d);
    CHECK(c.is_true());
    CHECK(canonicalize(Formula::compare(d().scaled(2), CmpOp::Le, k(3)), int_d).to_string() == "d <= 1");
    CHECK(canonicalize(Formula::compare(d().scaled(2), CmpOp::Eq, k(3)), int_d).is_false());
    CHECK(canonicalize(Formula::congruence(d().scaled(2), 4, 2), int_d).to_string() == "d mod 2 = 1");
}

TEST_CASE("canonical formulas print in the guard grammar")
{
    const Scope xy{{"x", SortKind::Int}, {"y", SortKind::Int}};
    const auto x = AffineTerm::variable("x");
    const auto y = AffineTerm::variable("y");
    const auto f = canonicalize(Formula::disj(Formula::compare(x - y.scaled(2), CmpOp::Le, k(3)),
                                              Formula::congruence(x + y, 3, 2)),
                                xy);
    const auto g = canonicalize(f.to_formula(), xy);
    CHECK(g == f);
    CHECK(equivalent(f, g, xy));
}
