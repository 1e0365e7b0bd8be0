#include "pbes/oracle.hpp"

#include "pbes/digraph.hpp"
#include "pbes/error.hpp"

#include <deque>
#include <map>

namespace pbes {

std::vector<ConcreteStep> concrete_successors(const NormalPbes& pbes, const SigElement& s)
{
    std::vector<ConcreteStep> out;
    for (std::size_t k = 0; k < pbes.equation(s.index).clauses.size(); ++k)
        if (concrete_clause_enabled(pbes, s, k))
            out.push_back(ConcreteStep{k, apply_clause(pbes, s, k)});
    return out;
}

std::vector<SigElement> concretize(const NormalPbes& pbes, const ProofGraph& g, const std::vector<std::int64_t>& value,
                                   std::size_t steps)
{
    std::vector<std::size_t> succ(g.vertices.size(), graph::npos);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (succ.at(g.edges[e].from) != graph::npos)
            throw StepViolation(0, "successor", "vertex " + g.vertices[g.edges[e].from].id + " has several successors");
        succ[g.edges[e].from] = e;
    }
    auto in_block = [&](std::size_t v, const SigElement& s) {
        const ProofVertex& x = g.vertices[v];
        return x.eq == s.index && x.block.evaluate(make_valuation(pbes.equation(x.eq).params, s.value));
    };
    std::size_t v = g.root;
    SigElement cur{g.vertices.at(v).eq, value};
    pbes.check_value(value);
    if (!in_block(v, cur))
        throw StepViolation(0, "block", to_string(pbes, cur) + " is not in the root block");
    std::vector<SigElement> path{cur};
    for (std::size_t step = 1; step <= steps; ++step) {
        if (succ[v] == graph::npos)
            throw StepViolation(step, "successor", "vertex " + g.vertices[v].id + " has no successor");
        const ProofEdge& e = g.edges[succ[v]];
        const Equation& eq = pbes.equation(cur.index);
        if (e.k >= eq.clauses.size() || !concrete_clause_enabled(pbes, cur, e.k))
            throw StepViolation(step, "guard", "clause " + std::to_string(e.k + 1) + " is disabled at " +
                                                   to_string(pbes, cur));
        SigElement next = apply_clause(pbes, cur, e.k);
        if (next.index != g.vertices[e.to].eq)
            throw StepViolation(step, "target", "clause " + std::to_string(e.k + 1) + " calls " +
                                                    pbes.equation(next.index).name);
        pbes.check_value(next.value);
        if (!in_block(e.to, next))
            throw StepViolation(step, "block", to_string(pbes, next) + " is not in the block of " + g.vertices[e.to].id);
        cur = std::move(next);
        v = e.to;
        path.push_back(cur);
    }
    return path;
}

OracleResult bounded_lasso_search(const NormalPbes& pbes, const SigElement& s, std::size_t max_states,
                                  std::int64_t max_component)
{
    if (max_states == 0 || max_component < 1)
        throw Error("oracle bounds must be at least 1");
    pbes.check_value(s.value);
    OracleResult r;
    std::map<SigElement, std::size_t> index;
    std::vector<SigElement> states;
    graph::Digraph g;
    auto intern = [&](const SigElement& x) {
        const auto it = index.find(x);
        if (it != index.end())
            return it->second;
        if (states.size() >= max_states)
            return graph::npos;
        index.emplace(x, states.size());
        states.push_back(x);
        g.out.emplace_back();
        return states.size() - 1;
    };
    auto too_large = [&](const SigElement& x) {
        for (auto c : x.value)
            if (c > max_component || c < -max_component)
                return true;
        return false;
    };

    intern(s);
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t v = queue.front();
        queue.pop_front();
        if (too_large(states[v])) {
            ++r.pruned;
            continue;
        }
        ++r.explored;
        for (const auto& step : concrete_successors(pbes, states[v])) {
            const std::size_t before = states.size();
            const std::size_t w = intern(step.target);
            if (w == graph::npos) {
                ++r.pruned;
                continue;
            }
            g.add_edge(v, w, step.k);
            if (w == before)
                queue.push_back(w);
        }
    }
    // Pruned states keep no outgoing edges, so any lasso found uses only
    // fully expanded states.
    std::vector<unsigned> ranks;
    for (const auto& x : states)
        ranks.push_back(pbes.rank(x.index));
    if (const auto lasso = graph::find_even_lasso(g, ranks, 0)) {
        r.verdict = Answer::True;
        r.reason = "lasso with even minimum rank";
        for (auto v : lasso->vertices)
            r.lasso.push_back(states[v]);
        r.lasso_clauses = lasso->labels;
        r.cycle_start = lasso->cycle_start;
        return r;
    }
    if (r.pruned == 0) {
        r.verdict = Answer::False;
        r.reason = "finite reachable set, no even lasso";
    } else {
        r.verdict = Answer::Unknown;
        r.reason = "exploration pruned at " + std::to_string(max_states) + " states or components beyond " +
                   std::to_string(max_component);
    }
    return r;
}

std::optional<std::string> enumerate_check_partition(const Partition& p, std::int64_t bound)
{
    const std::int64_t lo = p.kind == SortKind::Nat ? 0 : -bound;
    std::vector<std::int64_t> point(p.params.size(), lo);
    while (true) {
        const Valuation values = make_valuation(p.params, point);
        std::size_t hits = 0;
        for (const auto& b : p.blocks)
            hits += b.evaluate(values) ? 1 : 0;
        if (hits != 1) {
            std::string where;
            for (std::size_t j = 0; j < point.size(); ++j)
                where += (j ? ", " : "") + p.params[j] + "=" + std::to_string(point[j]);
            return std::string(hits == 0 ? "cover" : "disjointness") + " violation at " + where;
        }
        std::size_t j = 0;
        while (j < point.size() && point[j] == bound)
            point[j++] = lo;
        if (j == point.size())
            return std::nullopt;
        ++point[j];
    }
}

std::optional<std::string> enumerate_check_partition(const PartitionTuple& t, std::int64_t bound)
{
    for (std::size_t i = 0; i < t.size(); ++i)
        if (auto v = enumerate_check_partition(t[i], bound))
            return "partition " + std::to_string(i + 1) + ": " + *v;
    return std::nullopt;
}

} // namespace pbes
