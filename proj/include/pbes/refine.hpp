#pragma once

// Partition refinement of the data domain until every clause map respects
// the partition of each equation.

#include "pbes/pbes.hpp"
#include "pbes/presburger.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pbes {

struct Partition {
    std::vector<std::string> params;
    SortKind kind = SortKind::Nat;
    std::vector<presburger::CanonicalFormula> blocks;

    [[nodiscard]] Scope scope() const { return make_scope(params, kind); }
    /// `{ b1 ; b2 ; ... }`
    [[nodiscard]] std::string to_string() const;
};

using PartitionTuple = std::vector<Partition>;

enum class RefineStatus { Fixpoint, Capped };

struct RefinementOutcome {
    PartitionTuple tuple;
    RefineStatus status = RefineStatus::Fixpoint;
    std::size_t sweeps = 0;
    /// Total block count after each sweep.
    std::vector<std::size_t> trace;
};

/// Splits every block b into b && psi and b && !psi, in place, dropping
/// empty sides. `split` is set when some block yields two non-empty sides.
Partition divide(const Partition& p, const presburger::CanonicalFormula& psi, bool* split = nullptr);
Partition divide(const Partition& p, const Formula& psi, bool* split = nullptr);
Partition divide_set(const Partition& p, const std::vector<presburger::CanonicalFormula>& psis, bool* split = nullptr);
Partition divide_set(const Partition& p, const std::vector<Formula>& psis, bool* split = nullptr);

/// { true } divided by every guard of each equation.
PartitionTuple initial_partitions(const NormalPbes& pbes);

/// Refines partition i with respect to clause k. Throws InvariantBroken
/// when a block entails neither the guard nor its negation.
PartitionTuple apply_hik(const PartitionTuple& t, std::size_t i, std::size_t k, const NormalPbes& pbes,
                         bool* split = nullptr);

/// One sweep: every clause of every equation in index order.
PartitionTuple apply_h(const PartitionTuple& t, const NormalPbes& pbes, bool* split = nullptr);

RefinementOutcome refine_to_fixpoint(const NormalPbes& pbes, std::size_t max_sweeps = 100);

/// Checks both stability properties of a tuple: every block entails each
/// guard or its negation, and every guard-entailing block maps into exactly
/// one target block. Returns a description of the first violation.
std::optional<std::string> check_stable(const NormalPbes& pbes, const PartitionTuple& t);

/// Checks that blocks are pairwise disjoint and cover the domain.
std::optional<std::string> check_partition(const Partition& p);

} // namespace pbes
