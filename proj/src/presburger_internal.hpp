#pragma once

// Raw atom layer shared by the canonical form and Cooper elimination.

#include "pbes/presburger.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pbes::presburger::detail {

/// Conjunction of `e <= 0` and `m | e` atoms.
struct RawConj {
    std::vector<AffineTerm> le;
    std::vector<std::pair<std::int64_t, AffineTerm>> div;

    void append(const RawConj& other);
    [[nodiscard]] RawConj substitute(const Substitution& sub) const;
};

RawConj to_raw(const Conjunction& c);

/// Normalizes atoms into a Conjunction. Returns nullopt when unsatisfiability
/// is detected. Single-variable atoms are decided exactly; atoms over several
/// variables are not checked here.
std::optional<Conjunction> normalize_core(const RawConj& raw, const Scope& scope);

/// Exact normalization: nullopt iff the conjunction has no model in the domain.
std::optional<Conjunction> normalize(const RawConj& raw, const Scope& scope);

bool has_multivariable_atoms(const Conjunction& c);

/// Cooper elimination of `exists var` from a conjunction over the integers.
/// The caller adds `-var <= 0` first for Nat variables.
std::vector<RawConj> cooper_exists(const std::string& var, const RawConj& raw);

/// Exact satisfiability of a normalized conjunction with multi-variable atoms.
bool satisfiable_by_elimination(const Conjunction& c, const Scope& scope);

/// Negation of a single conjunction as a list of single-atom conjunctions.
std::vector<RawConj> negate_atoms(const Conjunction& c);

/// `a` implies every atom of `b`.
bool conjunction_entails(const Conjunction& a, const Conjunction& b, const Scope& scope);

} // namespace pbes::presburger::detail
