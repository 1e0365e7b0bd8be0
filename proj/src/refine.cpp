#include "pbes/refine.hpp"

#include "pbes/error.hpp"

namespace pbes {

namespace pb = presburger;

std::string Partition::to_string() const
{
    std::string out = "{ ";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b != 0)
            out += " ; ";
        out += blocks[b].to_string();
    }
    return out + " }";
}

Partition divide(const Partition& p, const pb::CanonicalFormula& psi, bool* split)
{
    const Scope scope = p.scope();
    const pb::CanonicalFormula complement = pb::negate(psi, scope);
    Partition out{p.params, p.kind, {}};
    for (const auto& block : p.blocks) {
        auto inside = pb::conj(block, psi, scope);
        auto outside = pb::conj(block, complement, scope);
        if (!inside.is_false() && !outside.is_false() && split)
            *split = true;
        if (!inside.is_false())
            out.blocks.push_back(std::move(inside));
        if (!outside.is_false())
            out.blocks.push_back(std::move(outside));
    }
    return out;
}

Partition divide(const Partition& p, const Formula& psi, bool* split)
{
    return divide(p, pb::canonicalize(psi, p.scope()), split);
}

Partition divide_set(const Partition& p, const std::vector<pb::CanonicalFormula>& psis, bool* split)
{
    Partition out = p;
    for (const auto& psi : psis)
        out = divide(out, psi, split);
    return out;
}

Partition divide_set(const Partition& p, const std::vector<Formula>& psis, bool* split)
{
    Partition out = p;
    for (const auto& psi : psis)
        out = divide(out, psi, split);
    return out;
}

PartitionTuple initial_partitions(const NormalPbes& pbes)
{
    PartitionTuple t;
    for (std::size_t i = 0; i < pbes.size(); ++i) {
        const Equation& eq = pbes.equation(i);
        Partition p{eq.params, pbes.sort().kind, {pb::CanonicalFormula::truth()}};
        for (std::size_t k = 0; k < eq.clauses.size(); ++k)
            p = divide(p, pbes.guard(i, k));
        t.push_back(std::move(p));
    }
    return t;
}

PartitionTuple apply_hik(const PartitionTuple& t, std::size_t i, std::size_t k, const NormalPbes& pbes, bool* split)
{
    const Scope& scope = pbes.scope(i);
    const Clause& clause = pbes.clause(i, k);
    const Substitution sub = pbes.clause_substitution(i, k);

    std::vector<pb::CanonicalFormula> images;
    for (const auto& target : t.at(clause.target).blocks)
        images.push_back(pb::substitute(target, sub, scope));

    PartitionTuple out = t;
    Partition& p = out.at(i);
    std::vector<pb::CanonicalFormula> blocks;
    for (const auto& block : t.at(i).blocks) {
        if (pb::conj(block, pbes.guard(i, k), scope).is_false()) {
            blocks.push_back(block);
            continue;
        }
        if (!pb::conj(block, pbes.negated_guard(i, k), scope).is_false())
            throw InvariantBroken("block '" + block.to_string() + "' of " + pbes.equation(i).name +
                                  " is split by the guard of clause " + std::to_string(k + 1));
        Partition single{p.params, p.kind, {block}};
        for (auto& b : divide_set(single, images, split).blocks)
            blocks.push_back(std::move(b));
    }
    p.blocks = std::move(blocks);
    return out;
}

PartitionTuple apply_h(const PartitionTuple& t, const NormalPbes& pbes, bool* split)
{
    PartitionTuple out = t;
    for (std::size_t i = 0; i < pbes.size(); ++i)
        for (std::size_t k = 0; k < pbes.equation(i).clauses.size(); ++k)
            out = apply_hik(out, i, k, pbes, split);
    return out;
}

RefinementOutcome refine_to_fixpoint(const NormalPbes& pbes, std::size_t max_sweeps)
{
    if (max_sweeps == 0)
        throw Error("the sweep limit must be at least 1");
    RefinementOutcome r;
    r.tuple = initial_partitions(pbes);
    for (std::size_t sweep = 1; sweep <= max_sweeps; ++sweep) {
        bool split = false;
        r.tuple = apply_h(r.tuple, pbes, &split);
        std::size_t total = 0;
        for (const auto& p : r.tuple)
            total += p.blocks.size();
        r.trace.push_back(total);
        r.sweeps = sweep;
        if (!split) {
            r.status = RefineStatus::Fixpoint;
            return r;
        }
    }
    r.status = RefineStatus::Capped;
    return r;
}

std::optional<std::string> check_stable(const NormalPbes& pbes, const PartitionTuple& t)
{
    for (std::size_t i = 0; i < pbes.size(); ++i) {
        const Scope& scope = pbes.scope(i);
        const Equation& eq = pbes.equation(i);
        for (std::size_t k = 0; k < eq.clauses.size(); ++k) {
            const Substitution sub = pbes.clause_substitution(i, k);
            for (const auto& block : t.at(i).blocks) {
                const bool enabled = pb::entails(block, pbes.guard(i, k), scope);
                const bool disabled = pb::entails(block, pbes.negated_guard(i, k), scope);
                if (enabled == disabled)
                    return eq.name + " block '" + block.to_string() + "' does not decide the guard of clause " +
                           std::to_string(k + 1);
                if (!enabled)
                    continue;
                std::size_t hits = 0;
                for (const auto& target : t.at(eq.clauses[k].target).blocks)
                    if (pb::entails(block, pb::substitute(target, sub, scope), scope))
                        ++hits;
                if (hits != 1)
                    return eq.name + " block '" + block.to_string() + "' maps into " + std::to_string(hits) +
                           " blocks via clause " + std::to_string(k + 1);
            }
        }
    }
    return std::nullopt;
}

std::optional<std::string> check_partition(const Partition& p)
{
    const Scope scope = p.scope();
    pb::CanonicalFormula cover;
    for (std::size_t a = 0; a < p.blocks.size(); ++a) {
        if (p.blocks[a].is_false())
            return "block " + std::to_string(a + 1) + " is empty";
        for (std::size_t b = a + 1; b < p.blocks.size(); ++b)
            if (!pb::conj(p.blocks[a], p.blocks[b], scope).is_false())
                return "blocks " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " overlap";
        cover = pb::disj(cover, p.blocks[a], scope);
    }
    if (!pb::is_valid(cover, scope))
        return "blocks do not cover the domain";
    return std::nullopt;
}

} // namespace pbes
