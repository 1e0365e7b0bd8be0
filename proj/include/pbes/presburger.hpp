#pragma once

// Decision procedure for the Presburger fragment used by guards and
// partition blocks: linear comparisons and constant-modulus congruences
// under boolean connectives and quantifiers.
//
// Formulas are brought into a canonical disjunctive normal form
// (CanonicalFormula). Every conjunction kept in a canonical formula is
// satisfiable over the variable domains given by the Scope, so a canonical
// formula is unsatisfiable exactly when it has no disjuncts. Quantifiers are
// removed with Cooper's method; natural-number variables are relativized by
// conjoining `x >= 0` before elimination.
//
// Domain constraints of Nat variables are implicit: a canonical formula
// denotes the set of its models *within* the domain, and redundant lower
// bounds implied by the domain are not stored. `d <= 0` over a Nat `d`
// therefore denotes {0}.

#include "pbes/affine.hpp"
#include "pbes/formula.hpp"

#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pbes::presburger {

/// Sorted (variable, coefficient) pairs without zero coefficients.
using LinearForm = std::vector<std::pair<std::string, std::int64_t>>;

std::string to_string(const LinearForm& form);

/// `lower <= form <= upper`. For bounds the form has coprime coefficients and
/// a positive leading coefficient. A missing side is unconstrained (or
/// implied by the domain).
struct Bound {
    LinearForm form;
    std::optional<std::int64_t> lower;
    std::optional<std::int64_t> upper;

    friend auto operator<=>(const Bound&, const Bound&) = default;
};

/// `form = residue (mod modulus)`, coefficients reduced into [1, modulus).
struct Congruence {
    LinearForm form;
    std::int64_t modulus = 2;
    std::int64_t residue = 0;

    friend auto operator<=>(const Congruence&, const Congruence&) = default;
};

struct Conjunction {
    std::vector<Bound> bounds;            // one per form, sorted by form
    std::vector<Congruence> congruences;  // one per form, sorted by form

    [[nodiscard]] bool empty() const noexcept { return bounds.empty() && congruences.empty(); }
    [[nodiscard]] bool evaluate(const Valuation& values) const;
    /// Atoms joined by ` && `; the empty conjunction prints as `true`.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] std::set<std::string> variables() const;

    friend auto operator<=>(const Conjunction&, const Conjunction&) = default;
};

class CanonicalFormula {
public:
    /// The unsatisfiable formula.
    CanonicalFormula() = default;

    static CanonicalFormula truth();
    static CanonicalFormula falsity() { return {}; }

    [[nodiscard]] bool is_true() const noexcept { return disjuncts_.size() == 1 && disjuncts_.front().empty(); }
    [[nodiscard]] bool is_false() const noexcept { return disjuncts_.empty(); }
    [[nodiscard]] const std::vector<Conjunction>& disjuncts() const noexcept { return disjuncts_; }

    /// Value at a point of the domain. Does not check domain membership.
    [[nodiscard]] bool evaluate(const Valuation& values) const;
    [[nodiscard]] std::set<std::string> variables() const;
    /// Deterministic rendering, e.g. `d = 1`, `x <= 0 || y <= 0`, `false`.
    [[nodiscard]] std::string to_string() const;
    /// Equivalent quantifier-free AST.
    [[nodiscard]] Formula to_formula() const;

    friend bool operator==(const CanonicalFormula&, const CanonicalFormula&) = default;

    /// Builds a canonical formula from satisfiable, normalized conjunctions.
    static CanonicalFormula from_disjuncts(std::vector<Conjunction> disjuncts, const Scope& scope);
    /// As from_disjuncts, without collapsing valid disjunctions to `true`.
    static CanonicalFormula from_disjuncts_unchecked(std::vector<Conjunction> disjuncts, const Scope& scope);

private:
    std::vector<Conjunction> disjuncts_;
};

/// Quantifier-free canonical equivalent of `f` over the domains in `scope`.
CanonicalFormula canonicalize(const Formula& f, const Scope& scope);

/// Same as canonicalize; the name states the intent at quantified call sites.
inline CanonicalFormula eliminate_quantifiers(const Formula& f, const Scope& scope)
{
    return canonicalize(f, scope);
}

CanonicalFormula conj(const CanonicalFormula& a, const CanonicalFormula& b, const Scope& scope);
CanonicalFormula disj(const CanonicalFormula& a, const CanonicalFormula& b, const Scope& scope);
/// Complement relative to the domain.
CanonicalFormula negate(const CanonicalFormula& a, const Scope& scope);

/// `f` with each parameter replaced by the matching update component.
Formula substitute(const Formula& f, std::span<const std::string> params, const AffineUpdate& update);
/// Canonical image of `f[sub]`, interpreted over `result_scope`.
CanonicalFormula substitute(const CanonicalFormula& f, const Substitution& sub, const Scope& result_scope);

bool is_satisfiable(const Formula& f, const Scope& scope);
/// Canonical formulas are satisfiable unless they are `false`.
inline bool is_satisfiable(const CanonicalFormula& f) { return !f.is_false(); }

bool entails(const Formula& f, const Formula& g, const Scope& scope);
bool entails(const CanonicalFormula& f, const CanonicalFormula& g, const Scope& scope);
bool is_valid(const CanonicalFormula& f, const Scope& scope);
/// Both formulas denote the same subset of the domain.
bool equivalent(const CanonicalFormula& f, const CanonicalFormula& g, const Scope& scope);

/// Truth value of `f` at `values`. Throws DomainError when a Nat variable
/// of the scope is negative or a free variable has no value.
bool evaluate(const Formula& f, const Scope& scope, const Valuation& values);

} // namespace pbes::presburger
