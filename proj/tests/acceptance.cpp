// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"
#include "support.hpp"

#include "pbes/cli.hpp"
#include "pbes/oracle.hpp"
#include "pbes/presburger.hpp"
#include "pbes/refine.hpp"
#include "pbes/solver.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pbes;
namespace pb = pbes::presburger;
using namespace pbes::cli;

namespace {

// Collects failed checks for one criterion.
struct Report {
    std::vector<std::string> failures;
    std::vector<std::string> notes;

    void expect(bool ok, const std::string& what)
    {
        if (!ok)
            failures.push_back(what);
    }
};

pb::CanonicalFormula block(const NormalPbes& p, std::size_t eq, const std::string& text)
{
    return pb::canonicalize(parse_formula(text, p.equation(eq).params, p.sort().kind), p.scope(eq));
}

// Same blocks up to equivalence, in any order.
bool same_blocks(const NormalPbes& p, const Partition& part, std::size_t eq, const std::vector<std::string>& want)
{
    if (part.blocks.size() != want.size())
        return false;
    for (const auto& w : want) {
        const auto b = block(p, eq, w);
        if (std::none_of(part.blocks.begin(), part.blocks.end(),
                         [&](const auto& x) { return pb::equivalent(x, b, p.scope(eq)); }))
            return false;
    }
    return true;
}

int run_cli(Command cmd, const std::string& name, const std::string& query, std::size_t max_sweeps,
            std::string* output = nullptr)
{
    RunConfig c;
    c.command = cmd;
    c.input = testing::data_path(name + ".pbes");
    c.query = query;
    c.max_sweeps = max_sweeps;
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(c, out, err);
    if (output)
        *output = out.str();
    return code;
}

Answer answer(const NormalPbes& p, const Analysis& a, std::size_t eq, std::vector<std::int64_t> v)
{
    return decide(p, a, SigElement{eq, std::move(v)}).verdict;
}

void ac1(Report& r)
{
    const auto p = testing::load("e2");
    const auto out = refine_to_fixpoint(p);
    r.expect(out.status == RefineStatus::Fixpoint && out.sweeps <= 2, "fixpoint within 2 sweeps");
    r.expect(same_blocks(p, out.tuple[0], 0, {"d < 1", "d >= 1"}), "X1 partition");
    r.expect(same_blocks(p, out.tuple[1], 1, {"d = 0", "d >= 1"}), "X2 partition");
    const Rds rds = build_rds(p, out.tuple);
    r.expect(rds.vertices.size() == 4 && rds.edges.size() == 6, "4 vertices and 6 edges");

    const Analysis a = analyze(p);
    const auto m = decide(p, a, {1, {0}});
    r.expect(m.verdict == Answer::True && m.witness.has_value(), "X2(0) true");
    if (m.witness) {
        // X2{0} -> X1{0} -> X1{d >= 1}, looping on the last vertex.
        const std::vector<std::pair<std::size_t, std::string>> lasso{{1, "d = 0"}, {0, "d = 0"}, {0, "d >= 1"}};
        const auto& w = *m.witness;
        bool same = w.vertices.size() == lasso.size() && w.cycle_start == 2;
        for (std::size_t q = 0; same && q < lasso.size(); ++q) {
            const RdsVertex& v = a.rds->vertices[w.vertices[q]];
            same = v.eq == lasso[q].first &&
                   pb::equivalent(v.block, block(p, v.eq, lasso[q].second), p.scope(v.eq));
        }
        r.expect(same, "witness lasso");
    }
    r.expect(answer(p, a, 1, {5}) == Answer::False, "X2(5) false");
    r.expect(run_cli(Command::Solve, "e2", "X2(0)", 100) == exit_conclusive, "solve X2(0) exit 0");
}

void ac2(Report& r)
{
    const auto p = testing::load("e3");
    const auto out = refine_to_fixpoint(p);
    r.expect(out.status == RefineStatus::Fixpoint, "fixpoint");
    r.expect(same_blocks(p, out.tuple[0], 0, {"d mod 3 = 0", "d mod 3 = 1", "d mod 3 = 2"}), "residue blocks");
    const Rds rds = build_rds(p, out.tuple);
    r.expect(rds.vertices.size() == 3 && rds.edges.size() == 3, "3 vertices and 3 edges");
    const Analysis a = analyze(p);
    for (std::int64_t d = 0; d <= 30; ++d) {
        const Answer want = d % 3 < 2 ? Answer::True : Answer::False;
        r.expect(answer(p, a, 0, {d}) == want, "X(" + std::to_string(d) + ")");
    }
}

void ac3(Report& r)
{
    const auto p = testing::load("e4");
    const auto out = refine_to_fixpoint(p);
    r.expect(out.status == RefineStatus::Fixpoint, "fixpoint");
    r.expect(same_blocks(p, out.tuple[0], 0, {"d < 1", "d = 1", "d > 1"}), "X1 partition");
    r.expect(same_blocks(p, out.tuple[1], 1, {"d <= 0", "d > 0"}), "X2 partition");
    const Rds rds = build_rds(p, out.tuple);
    r.expect(rds.vertices.size() == 5 && rds.edges.size() == 8, "5 vertices and 8 edges");
    const Analysis a = analyze(p);
    r.expect(answer(p, a, 1, {0}) == Answer::True, "X2(0) true");
    r.expect(answer(p, a, 1, {5}) == Answer::False, "X2(5) false");
}

void ac4(Report& r)
{
    const auto p = testing::load("noterm");
    const auto out = refine_to_fixpoint(p, 20);
    r.expect(out.status == RefineStatus::Capped, "capped");
    r.expect(out.tuple[1].blocks.size() >= 20, "X2 has at least 20 blocks");
    const auto m = decide_membership(p, {1, {0}}, 20);
    r.expect(m.verdict == Answer::Unknown, "X2(0) unknown");
    std::string text;
    r.expect(run_cli(Command::Solve, "noterm", "X2(0)", 20, &text) == exit_unknown, "solve exit 2");
    r.expect(text.rfind("unknown", 0) == 0, "solve prints unknown");
}

void ac5(Report& r)
{
    const auto p = testing::load("trading");
    const auto out = refine_to_fixpoint(p);
    r.expect(out.status == RefineStatus::Fixpoint, "fixpoint");
    const std::vector<std::vector<std::string>> reference{
        {"x >= 1 && y >= 1", "!(x >= 1 && y >= 1)"},
        {"!(x >= 1 && y >= 1)", "(x >= 1 && y >= 1) && !(x >= 2 && y >= 2)", "x >= 2 && y >= 2"},
        {"true"},
    };
    for (std::size_t i = 0; i < p.size(); ++i)
        for (const auto& b : out.tuple[i].blocks) {
            const bool refines = std::any_of(reference[i].begin(), reference[i].end(), [&](const std::string& t) {
                return pb::entails(b, block(p, i, t), p.scope(i));
            });
            r.expect(refines, p.equation(i).name + " block " + b.to_string());
        }

    // Golden answers on (x, y) in 0..4 x 0..3, per predicate.
    const auto golden = [](std::size_t eq, std::int64_t x, std::int64_t y) {
        if (eq == 0)
            return x >= 1 && y >= 1;
        return true;
    };
    const Analysis a = analyze(p);
    std::size_t conclusive = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::int64_t x = 0; x <= 4; ++x)
            for (std::int64_t y = 0; y <= 3; ++y) {
                const SigElement q{i, {x, y}};
                const std::string at = to_string(p, q);
                const Answer want = golden(i, x, y) ? Answer::True : Answer::False;
                const Answer got = decide(p, a, q).verdict;
                r.expect(got == want, at + " golden");
                const auto o = bounded_lasso_search(p, q);
                r.expect(o.verdict == Answer::Unknown || o.verdict == got, at + " oracle");
                conclusive += o.verdict == Answer::Unknown ? 0 : 1;
            }
    r.notes.push_back("oracle conclusive on " + std::to_string(conclusive) + " of 60 grid queries");
}

bool run_suite(const char* test_case)
{
    doctest::Context ctx;
    ctx.setOption("test-case", test_case);
    ctx.setOption("minimal", true);
    ctx.setOption("no-intro", true);
    return ctx.run() == 0 && !ctx.shouldExit();
}

void ac6(Report& r)
{
    const std::vector<std::pair<const char*, const char*>> suites{
        {"(a) partition invariants", "generated systems keep partition invariants after every sweep"},
        {"(b) fixpoint stability", "fixpoints are stable"},
        {"(c) extract/validate round trip", "extracted witnesses validate and concretize"},
        {"(d) mutation rejection", "validation rejects mutated witnesses"},
        {"(e) quantifier elimination", "quantifier elimination agrees with bounded witness search"},
    };
    for (const auto& [label, name] : suites)
        r.expect(run_suite(name), label);
}

void ac7(Report& r)
{
    std::size_t compared = 0;
    std::size_t queries = 0;
    for (const char* name :
         {"e1", "e2", "e3", "e4", "noterm", "trading", "selfloop", "mirror", "parity", "quantified"}) {
        const auto p = testing::load(name);
        const Analysis a = analyze(p, 20);
        std::vector<std::vector<std::int64_t>> values;
        if (p.sort().arity == 2) {
            for (std::int64_t x = 0; x <= 4; ++x)
                for (std::int64_t y = 0; y <= 4; ++y)
                    values.push_back({x, y});
        } else {
            const std::int64_t lo = p.sort().kind == SortKind::Int ? -15 : 0;
            for (std::int64_t d = lo; d <= 15; ++d)
                values.push_back({d});
        }
        for (std::size_t i = 0; i < p.size(); ++i)
            for (const auto& v : values) {
                const SigElement q{i, v};
                const Answer o = bounded_lasso_search(p, q).verdict;
                const Answer s = decide(p, a, q).verdict;
                ++queries;
                compared += o != Answer::Unknown && s != Answer::Unknown ? 1 : 0;
                r.expect(o == Answer::Unknown || s == Answer::Unknown || o == s,
                         std::string(name) + " " + to_string(p, q));
            }
    }
    r.notes.push_back("both conclusive on " + std::to_string(compared) + " of " + std::to_string(queries) +
                      " corpus queries");
    const auto p = testing::load("e2");
    const Analysis a = analyze(p);
    const auto m = decide(p, a, {1, {0}});
    if (!m.witness) {
        r.expect(false, "e2 witness");
        return;
    }
    try {
        const auto steps = concretize(p, to_proof_graph(*a.rds, *m.witness), {0}, 1000);
        r.expect(steps.size() >= 1000, "1000 concrete steps");
    } catch (const std::exception& e) {
        r.expect(false, std::string("concretize: ") + e.what());
    }
}

struct Criterion {
    const char* id;
    const char* title;
    double limit_seconds;  // 0 when not timed
    std::function<void(Report&)> body;
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {"AC1", "two-equation example end to end", 1.0, ac1},
        {"AC2", "mod-3 example", 1.0, ac2},
        {"AC3", "worked refinement trace", 1.0, ac3},
        {"AC4", "non-terminating refinement", 5.0, ac4},
        {"AC5", "trading problem", 10.0, ac5},
        {"AC6", "property suites", 0.0, ac6},
        {"AC7", "oracle soundness", 0.0, ac7},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Report r;
        const auto start = std::chrono::steady_clock::now();
        try {
            c.body(r);
        } catch (const std::exception& e) {
            r.failures.push_back(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0 && secs >= c.limit_seconds)
            r.failures.push_back("took " + std::to_string(secs) + " s");
        const bool ok = r.failures.empty();
        failed += ok ? 0 : 1;
        std::ostringstream line;
        line.precision(3);
        line << c.id << " " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  (" << std::fixed << secs << " s";
        if (c.limit_seconds > 0)
            line << ", limit " << c.limit_seconds << " s";
        line << ")";
        std::cout << line.str() << "\n";
        for (const auto& n : r.notes)
            std::cout << "    " << n << "\n";
        for (const auto& f : r.failures)
            std::cout << "    failed: " << f << "\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed;
}
