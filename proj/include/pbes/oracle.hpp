#pragma once

// Bounded checks on the concrete dependency space, independent of the
// symbolic pipeline.

#include "pbes/pbes.hpp"
#include "pbes/refine.hpp"
#include "pbes/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbes {

struct ConcreteStep {
    std::size_t k = 0;
    SigElement target;
};

/// Enabled clauses at `s` with their targets, in clause order.
std::vector<ConcreteStep> concrete_successors(const NormalPbes& pbes, const SigElement& s);

/// Follows g from `value` for `steps` transitions, checking at each step
/// that the guard holds, the target predicate matches and the new value
/// lies in the next block. Throws StepViolation (steps numbered from 1;
/// step 0 is the start value).
std::vector<SigElement> concretize(const NormalPbes& pbes, const ProofGraph& g, const std::vector<std::int64_t>& value,
                                   std::size_t steps);

struct OracleResult {
    Answer verdict = Answer::Unknown;
    std::string reason;
    std::vector<SigElement> lasso;  // stem then cycle
    std::vector<std::size_t> lasso_clauses;  // lasso[p] moves along lasso_clauses[p]
    std::size_t cycle_start = 0;
    std::size_t explored = 0;
    std::size_t pruned = 0;
};

/// Breadth-first exploration from s. States with a component of absolute
/// value above max_component are not expanded, and no new states are added
/// once max_states are known; both count as pruned.
OracleResult bounded_lasso_search(const NormalPbes& pbes, const SigElement& s, std::size_t max_states = 10000,
                                  std::int64_t max_component = 1000);

/// Grid check that exactly one block contains each point of [0, bound]^n
/// (or [-bound, bound]^n for Int). Returns the first violation.
std::optional<std::string> enumerate_check_partition(const Partition& p, std::int64_t bound);
std::optional<std::string> enumerate_check_partition(const PartitionTuple& t, std::int64_t bound);

} // namespace pbes
