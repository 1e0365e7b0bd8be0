#include "pbes/depspace.hpp"

#include "pbes/error.hpp"

namespace pbes {

namespace pb = presburger;

graph::Digraph Rds::digraph() const
{
    graph::Digraph g(vertices.size());
    for (const auto& e : edges)
        g.add_edge(e.from, e.to, e.k);
    return g;
}

std::vector<unsigned> Rds::ranks() const
{
    std::vector<unsigned> out;
    for (const auto& v : vertices)
        out.push_back(v.rank);
    return out;
}

std::string Rds::vertex_name(const NormalPbes& pbes, std::size_t v) const
{
    const RdsVertex& x = vertices.at(v);
    return pbes.equation(x.eq).name + "[" + x.block.to_string() + "]";
}

Rds build_rds(const NormalPbes& pbes, const PartitionTuple& t)
{
    if (t.size() != pbes.size())
        throw NotCongruent("partition tuple has the wrong number of components");
    Rds rds;
    std::vector<std::size_t> first(pbes.size(), 0);
    for (std::size_t i = 0; i < pbes.size(); ++i) {
        first[i] = rds.vertices.size();
        for (std::size_t b = 0; b < t[i].blocks.size(); ++b)
            rds.vertices.push_back(RdsVertex{i, b, t[i].blocks[b], pbes.rank(i)});
    }
    for (std::size_t v = 0; v < rds.vertices.size(); ++v) {
        const RdsVertex& x = rds.vertices[v];
        const Scope& scope = pbes.scope(x.eq);
        const Equation& eq = pbes.equation(x.eq);
        for (std::size_t k = 0; k < eq.clauses.size(); ++k) {
            if (pb::conj(x.block, pbes.guard(x.eq, k), scope).is_false())
                continue;
            if (!pb::conj(x.block, pbes.negated_guard(x.eq, k), scope).is_false())
                throw NotCongruent(rds.vertex_name(pbes, v) + " does not decide the guard of clause " +
                                   std::to_string(k + 1));
            const std::size_t target = eq.clauses[k].target;
            const Substitution sub = pbes.clause_substitution(x.eq, k);
            std::size_t found = graph::npos;
            for (std::size_t b = 0; b < t[target].blocks.size(); ++b) {
                if (!pb::entails(x.block, pb::substitute(t[target].blocks[b], sub, scope), scope))
                    continue;
                if (found != graph::npos)
                    throw NotCongruent("image of " + rds.vertex_name(pbes, v) + " lies in two blocks");
                found = first[target] + b;
            }
            if (found == graph::npos)
                throw NotCongruent("image of " + rds.vertex_name(pbes, v) + " under clause " + std::to_string(k + 1) +
                                   " is split between blocks");
            rds.edges.push_back(RdsEdge{v, found, k});
        }
    }
    return rds;
}

std::size_t locate_block(const NormalPbes& pbes, const Rds& rds, std::size_t eq, const std::vector<std::int64_t>& value)
{
    pbes.check_value(value);
    const Valuation values = make_valuation(pbes.equation(eq).params, value);
    for (std::size_t v = 0; v < rds.vertices.size(); ++v)
        if (rds.vertices[v].eq == eq && rds.vertices[v].block.evaluate(values))
            return v;
    throw Unreachable("no block of " + pbes.equation(eq).name + " contains the value");
}

} // namespace pbes
