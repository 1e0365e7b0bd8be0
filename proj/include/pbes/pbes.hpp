#pragma once

// Parameterised Boolean equation systems in disjunctive normal form:
//
//   sigma_i X_i(d) = OR_k (phi_ik(d) && X_{a_ik}(f_ik(d)))
//
// Indices (equations, clauses) are 0-based in the API and 1-based in
// user-facing output.

#include "pbes/affine.hpp"
#include "pbes/formula.hpp"
#include "pbes/presburger.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pbes {

enum class Sign { Mu, Nu };

std::string_view to_string(Sign sign);

struct Clause {
    Formula guard;
    std::size_t target = 0;
    AffineUpdate update;
};

struct Equation {
    Sign sign = Sign::Nu;
    std::string name;
    std::vector<std::string> params;
    std::vector<Clause> clauses;
};

/// An instantiated predicate X_i(v).
struct SigElement {
    std::size_t index = 0;
    std::vector<std::int64_t> value;

    friend auto operator<=>(const SigElement&, const SigElement&) = default;
};

/// ranks[i] is the number of alternations in `nu sigma_1 ... sigma_i`.
std::vector<unsigned> compute_ranks(const std::vector<Sign>& signs);

class NormalPbes {
public:
    /// Validates closedness, sorts, clause shape and the Nat range of
    /// updates, then computes ranks and canonical guards.
    static NormalPbes create(SortKind kind, std::vector<Equation> equations, std::string name = {});

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] const Sort& sort() const noexcept { return sort_; }
    [[nodiscard]] std::size_t size() const noexcept { return equations_.size(); }
    [[nodiscard]] const std::vector<Equation>& equations() const noexcept { return equations_; }
    [[nodiscard]] const Equation& equation(std::size_t i) const { return equations_.at(i); }
    [[nodiscard]] const Clause& clause(std::size_t i, std::size_t k) const { return equations_.at(i).clauses.at(k); }
    [[nodiscard]] const std::vector<unsigned>& ranks() const noexcept { return ranks_; }
    [[nodiscard]] unsigned rank(std::size_t i) const { return ranks_.at(i); }
    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;

    [[nodiscard]] const Scope& scope(std::size_t i) const { return scopes_.at(i); }
    /// Quantifier-free canonical guard of clause k of equation i.
    [[nodiscard]] const presburger::CanonicalFormula& guard(std::size_t i, std::size_t k) const
    {
        return guards_.at(i).at(k);
    }
    [[nodiscard]] const presburger::CanonicalFormula& negated_guard(std::size_t i, std::size_t k) const
    {
        return negated_guards_.at(i).at(k);
    }
    /// Maps the target equation's parameters to the update of clause (i, k),
    /// so that `psi[sub]` is psi(f_ik(d)) over the parameters of i.
    [[nodiscard]] Substitution clause_substitution(std::size_t i, std::size_t k) const;

    /// Throws DomainError for values outside the domain and SortMismatch on
    /// an arity mismatch.
    void check_value(const std::vector<std::int64_t>& value) const;

private:
    std::string name_;
    Sort sort_{SortKind::Nat, 1};
    std::vector<Equation> equations_;
    std::vector<unsigned> ranks_;
    std::vector<Scope> scopes_;
    std::vector<std::vector<presburger::CanonicalFormula>> guards_;
    std::vector<std::vector<presburger::CanonicalFormula>> negated_guards_;
};

NormalPbes parse_pbes(std::string_view text);

/// Parses a guard-language formula over the given parameters.
Formula parse_formula(std::string_view text, const std::vector<std::string>& params, SortKind kind);

/// `Name(v1, ..., vn)` with decimal integers.
SigElement parse_query(const NormalPbes& pbes, std::string_view text);

std::string print_pbes(const NormalPbes& pbes);

/// `X2(0)` style rendering.
std::string to_string(const NormalPbes& pbes, const SigElement& s);

bool concrete_clause_enabled(const NormalPbes& pbes, const SigElement& s, std::size_t k);

/// Applies the update of clause k of equation s.index to s.value.
SigElement apply_clause(const NormalPbes& pbes, const SigElement& s, std::size_t k);

} // namespace pbes
