#include "pbes/solver.hpp"

#include "pbes/error.hpp"

#include <charconv>
#include <map>
#include <sstream>

namespace pbes {

namespace pb = presburger;

std::vector<bool> good_cycle_vertices(const Rds& rds)
{
    return graph::cycle_vertices_with_min_parity(rds.digraph(), rds.ranks(), 0);
}

std::optional<ReducedProofGraph> extract(const Rds& rds, std::size_t start)
{
    const auto lasso = graph::find_even_lasso(rds.digraph(), rds.ranks(), start);
    if (!lasso)
        return std::nullopt;
    return ReducedProofGraph{lasso->vertices, lasso->labels, lasso->cycle_start};
}

ProofGraph to_proof_graph(const Rds& rds, const ReducedProofGraph& g)
{
    ProofGraph out;
    for (std::size_t p = 0; p < g.vertices.size(); ++p) {
        const RdsVertex& v = rds.vertices.at(g.vertices[p]);
        out.vertices.push_back(ProofVertex{"v" + std::to_string(p + 1), v.eq, v.block});
    }
    for (std::size_t p = 0; p < g.vertices.size(); ++p)
        out.edges.push_back(ProofEdge{p, g.successor(p), g.clauses[p]});
    return out;
}

namespace {

std::string describe(const NormalPbes& pbes, const ProofGraph& g, std::size_t v)
{
    const ProofVertex& x = g.vertices[v];
    return x.id + " " + pbes.equation(x.eq).name + "[" + x.block.to_string() + "]";
}

} // namespace

Verdict validate(const NormalPbes& pbes, const ProofGraph& g)
{
    const std::size_t n = g.vertices.size();
    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : g.edges)
        ++degree.at(e.from);
    for (std::size_t v = 0; v < n; ++v)
        if (degree[v] != 1)
            return {false, 1, "vertex " + describe(pbes, g, v) + " has " + std::to_string(degree[v]) + " successors"};

    for (const auto& e : g.edges) {
        const ProofVertex& from = g.vertices.at(e.from);
        const ProofVertex& to = g.vertices.at(e.to);
        const std::string edge = g.vertices[e.from].id + " -> " + g.vertices[e.to].id + " (k=" +
                                 std::to_string(e.k + 1) + ")";
        const Equation& eq = pbes.equation(from.eq);
        if (e.k >= eq.clauses.size())
            return {false, 2, "edge " + edge + ": " + eq.name + " has no such clause"};
        if (eq.clauses[e.k].target != to.eq)
            return {false, 2, "edge " + edge + ": clause calls " + pbes.equation(eq.clauses[e.k].target).name +
                                  ", not " + pbes.equation(to.eq).name};
        const Scope& scope = pbes.scope(from.eq);
        if (!pb::entails(from.block, pbes.guard(from.eq, e.k), scope))
            return {false, 2, "edge " + edge + ": guard does not hold on all of " + describe(pbes, g, e.from)};
        const auto image = pb::substitute(to.block, pbes.clause_substitution(from.eq, e.k), scope);
        if (!pb::entails(from.block, image, scope))
            return {false, 2, "edge " + edge + ": update leaves " + describe(pbes, g, e.to)};
    }

    graph::Digraph d(n);
    std::vector<unsigned> ranks;
    for (const auto& v : g.vertices)
        ranks.push_back(pbes.rank(v.eq));
    for (const auto& e : g.edges)
        d.add_edge(e.from, e.to, e.k);
    const auto bad = graph::cycle_vertices_with_min_parity(d, ranks, 1);
    for (std::size_t v = 0; v < n; ++v)
        if (bad[v]) {
            const auto w = graph::min_parity_cycle(d, ranks, v, 1);
            return {false, 3, "vertex " + describe(pbes, g, v) + " lies on a cycle with odd minimum rank " +
                                  std::to_string(w->rank)};
        }
    return {true, 0, "accepted"};
}

ProofGraph parse_graph_file(const NormalPbes& pbes, std::string_view text)
{
    ProofGraph g;
    std::map<std::string, std::size_t> ids;
    std::vector<std::tuple<std::string, std::string, std::size_t, std::size_t>> pending;
    std::optional<std::string> root;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    auto fail = [&](const std::string& msg) {
        throw GraphFormatError("line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto c = line.find("//"); c != std::string::npos)
            line.erase(c);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw))
            continue;
        if (kw == "vertex") {
            std::string id;
            std::string pred;
            if (!(ls >> id >> pred))
                fail("expected 'vertex <id> <predicate> <formula>'");
            std::string formula;
            std::getline(ls, formula);
            const auto eq = pbes.find(pred);
            if (!eq)
                fail("unknown predicate '" + pred + "'");
            if (ids.count(id) != 0)
                fail("duplicate vertex '" + id + "'");
            Formula f = Formula::truth();
            try {
                f = parse_formula(formula, pbes.equation(*eq).params, pbes.sort().kind);
            } catch (const Error& e) {
                fail(std::string("bad formula: ") + e.what());
            }
            ids.emplace(id, g.vertices.size());
            g.vertices.push_back(ProofVertex{id, *eq, pb::canonicalize(f, pbes.scope(*eq))});
        } else if (kw == "edge") {
            std::string a;
            std::string b;
            std::string label;
            std::string extra;
            if (!(ls >> a >> b >> label) || (ls >> extra) || label.rfind("k=", 0) != 0)
                fail("expected 'edge <id> <id> k=<n>'");
            std::size_t k = 0;
            const auto [ptr, ec] = std::from_chars(label.data() + 2, label.data() + label.size(), k);
            if (ec != std::errc{} || ptr != label.data() + label.size() || k == 0)
                fail("bad clause label '" + label + "'");
            pending.emplace_back(a, b, k - 1, lineno);
        } else if (kw == "root") {
            std::string id;
            std::string extra;
            if (!(ls >> id) || (ls >> extra))
                fail("expected 'root <id>'");
            if (root)
                fail("duplicate root");
            root = id;
        } else {
            fail("unknown item '" + kw + "'");
        }
    }
    for (const auto& [a, b, k, at] : pending) {
        lineno = at;
        if (ids.count(a) == 0 || ids.count(b) == 0)
            fail("edge refers to an unknown vertex");
        g.edges.push_back(ProofEdge{ids.at(a), ids.at(b), k});
    }
    if (!root)
        throw GraphFormatError("missing root");
    if (ids.count(*root) == 0)
        throw GraphFormatError("root refers to an unknown vertex");
    g.root = ids.at(*root);
    return g;
}

std::string to_graph_file(const NormalPbes& pbes, const ProofGraph& g)
{
    std::string out;
    for (const auto& v : g.vertices)
        out += "vertex " + v.id + " " + pbes.equation(v.eq).name + " " + v.block.to_string() + "\n";
    for (const auto& e : g.edges)
        out += "edge " + g.vertices[e.from].id + " " + g.vertices[e.to].id + " k=" + std::to_string(e.k + 1) + "\n";
    out += "root " + g.vertices.at(g.root).id + "\n";
    return out;
}

std::string render_witness(const NormalPbes& pbes, const Rds& rds, const ReducedProofGraph& g)
{
    auto name = [&](std::size_t p) { return rds.vertex_name(pbes, g.vertices[p]); };
    std::string stem = "stem: " + name(0);
    for (std::size_t p = 0; p < g.cycle_start; ++p)
        stem += " -k" + std::to_string(g.clauses[p] + 1) + "-> " + name(p + 1);
    std::string cycle = "cycle: " + name(g.cycle_start);
    for (std::size_t p = g.cycle_start; p < g.vertices.size(); ++p)
        cycle += " -k" + std::to_string(g.clauses[p] + 1) + "-> " + name(g.successor(p));
    return stem + "\n" + cycle + "\n";
}

Analysis analyze(const NormalPbes& pbes, std::size_t max_sweeps)
{
    Analysis a;
    a.refinement = refine_to_fixpoint(pbes, max_sweeps);
    if (a.refinement.status == RefineStatus::Fixpoint) {
        a.rds = build_rds(pbes, a.refinement.tuple);
        a.good = good_cycle_vertices(*a.rds);
    }
    return a;
}

std::string_view to_string(Answer a)
{
    switch (a) {
    case Answer::True: return "true";
    case Answer::False: return "false";
    case Answer::Unknown: return "unknown";
    }
    return "unknown";
}

MembershipAnswer decide(const NormalPbes& pbes, const Analysis& analysis, const SigElement& query)
{
    pbes.check_value(query.value);
    MembershipAnswer m;
    if (!analysis.rds) {
        m.verdict = Answer::Unknown;
        m.reason = "refinement capped at " + std::to_string(analysis.refinement.sweeps) + " sweeps";
        return m;
    }
    m.vertex = locate_block(pbes, *analysis.rds, query.index, query.value);
    m.witness = extract(*analysis.rds, m.vertex);
    if (m.witness) {
        m.verdict = Answer::True;
        m.reason = "reduced proof graph found";
    } else {
        m.verdict = Answer::False;
        m.reason = "no even lasso from " + analysis.rds->vertex_name(pbes, m.vertex) + " in the complete quotient graph";
    }
    return m;
}

MembershipAnswer decide_membership(const NormalPbes& pbes, const SigElement& query, std::size_t max_sweeps)
{
    return decide(pbes, analyze(pbes, max_sweeps), query);
}

} // namespace pbes
