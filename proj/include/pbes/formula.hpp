#pragma once

#include "pbes/affine.hpp"

#include <memory>
#include <set>
#include <string>

namespace pbes {

enum class CmpOp { Lt, Le, Eq, Ne, Ge, Gt };

std::string_view to_string(CmpOp op);

/// Immutable first-order Presburger formula over named integer variables.
///
/// Leaves are `term op 0` comparisons and `term = r (mod m)` congruences;
/// inner nodes are the boolean connectives and the two quantifiers. Nodes
/// are shared, so copying a Formula is cheap.
class Formula {
public:
    enum class Kind { True, False, Cmp, Cong, And, Or, Not, Forall, Exists };

    /// Default-constructs `true`.
    Formula();

    static Formula truth();
    static Formula falsity();
    static Formula compare(AffineTerm term, CmpOp op);
    /// `lhs op rhs`, stored as `(lhs - rhs) op 0`.
    static Formula compare(const AffineTerm& lhs, CmpOp op, const AffineTerm& rhs);
    /// `term = residue (mod modulus)`; requires modulus >= 2 and 0 <= residue < modulus.
    static Formula congruence(AffineTerm term, std::int64_t modulus, std::int64_t residue);
    static Formula conj(Formula lhs, Formula rhs);
    static Formula disj(Formula lhs, Formula rhs);
    static Formula negation(Formula operand);
    static Formula forall(std::string var, SortKind kind, Formula body);
    static Formula exists(std::string var, SortKind kind, Formula body);

    [[nodiscard]] Kind kind() const noexcept;

    // Cmp / Cong
    [[nodiscard]] const AffineTerm& term() const;
    [[nodiscard]] CmpOp op() const;
    [[nodiscard]] std::int64_t modulus() const;
    [[nodiscard]] std::int64_t residue() const;
    // And / Or
    [[nodiscard]] const Formula& lhs() const;
    [[nodiscard]] const Formula& rhs() const;
    // Not, Forall, Exists
    [[nodiscard]] const Formula& operand() const;
    // Forall, Exists
    [[nodiscard]] const std::string& bound_var() const;
    [[nodiscard]] SortKind bound_kind() const;

    [[nodiscard]] bool has_quantifiers() const;
    [[nodiscard]] std::set<std::string> free_variables() const;

    /// Replaces free occurrences of variables. Bound variables must not occur
    /// in the substituted terms.
    [[nodiscard]] Formula substitute(const Substitution& sub) const;

    /// Evaluates a quantifier-free formula; throws for quantifiers.
    [[nodiscard]] bool evaluate_ground(const Valuation& values) const;

    /// Text in the guard grammar; parsing it back gives a structurally equal formula.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

} // namespace pbes
