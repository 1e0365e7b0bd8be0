#pragma once

// The finite quotient of the dependency space induced by a stable
// partition tuple.

#include "pbes/digraph.hpp"
#include "pbes/pbes.hpp"
#include "pbes/refine.hpp"

#include <vector>

namespace pbes {

struct RdsVertex {
    std::size_t eq = 0;
    std::size_t block_index = 0;  // position in the equation's partition
    presburger::CanonicalFormula block;
    unsigned rank = 0;
};

struct RdsEdge {
    std::size_t from = 0;
    std::size_t to = 0;
    std::size_t k = 0;  // clause index, 0-based
};

struct Rds {
    std::vector<RdsVertex> vertices;  // ordered by (equation, block)
    std::vector<RdsEdge> edges;       // ordered by (from, clause)

    [[nodiscard]] graph::Digraph digraph() const;
    [[nodiscard]] std::vector<unsigned> ranks() const;
    /// `X1[d >= 1]`
    [[nodiscard]] std::string vertex_name(const NormalPbes& pbes, std::size_t v) const;
};

/// Throws NotCongruent when the tuple is not stable.
Rds build_rds(const NormalPbes& pbes, const PartitionTuple& t);

/// Index of the vertex of equation `eq` whose block contains `value`.
/// Throws DomainError for values outside the domain and Unreachable when no
/// block matches.
std::size_t locate_block(const NormalPbes& pbes, const Rds& rds, std::size_t eq, const std::vector<std::int64_t>& value);

} // namespace pbes
