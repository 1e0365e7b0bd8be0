#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pbes {

enum class SortKind { Nat, Int };

std::string_view to_string(SortKind kind);

/// The data sort shared by every equation: a tuple of `arity` integers,
/// all natural or all integer.
struct Sort {
    SortKind kind = SortKind::Nat;
    std::size_t arity = 1;

    friend bool operator==(const Sort&, const Sort&) = default;
};

/// Overflow-checked integer helpers. Every operation throws
/// ArithmeticOverflow instead of wrapping.
namespace arith {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);
std::int64_t abs(std::int64_t a);
std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t floor_div(std::int64_t a, std::int64_t b);
std::int64_t ceil_div(std::int64_t a, std::int64_t b);
/// Remainder in [0, |m|).
std::int64_t mod(std::int64_t a, std::int64_t m);
/// Inverse of a modulo m; requires gcd(a, m) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

struct Residue {
    std::int64_t residue;
    std::int64_t modulus;
};

/// Chinese remaindering of x = r1 (mod m1) and x = r2 (mod m2).
std::optional<Residue> combine(Residue a, Residue b);

} // namespace arith

using Valuation = std::map<std::string, std::int64_t>;

/// A linear integer expression sum(c_i * x_i) + c over named variables.
/// Zero coefficients are never stored.
class AffineTerm {
public:
    AffineTerm() = default;

    static AffineTerm constant(std::int64_t value);
    static AffineTerm variable(const std::string& name, std::int64_t coefficient = 1);

    [[nodiscard]] const std::map<std::string, std::int64_t>& coefficients() const noexcept { return coeffs_; }
    [[nodiscard]] std::int64_t constant_term() const noexcept { return constant_; }
    [[nodiscard]] std::int64_t coefficient(const std::string& name) const;
    [[nodiscard]] bool is_constant() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] bool mentions(const std::string& name) const { return coeffs_.count(name) != 0; }

    AffineTerm& operator+=(const AffineTerm& other);
    AffineTerm& operator-=(const AffineTerm& other);
    friend AffineTerm operator+(AffineTerm a, const AffineTerm& b) { return a += b; }
    friend AffineTerm operator-(AffineTerm a, const AffineTerm& b) { return a -= b; }
    [[nodiscard]] AffineTerm scaled(std::int64_t factor) const;
    [[nodiscard]] AffineTerm negated() const { return scaled(-1); }
    [[nodiscard]] AffineTerm plus_constant(std::int64_t c) const;
    /// Term with the given variable removed.
    [[nodiscard]] AffineTerm without(const std::string& name) const;

    /// Replaces every variable that has an entry in `sub` by the mapped term.
    [[nodiscard]] AffineTerm substitute(const std::map<std::string, AffineTerm>& sub) const;

    /// Throws DomainError when a variable has no value.
    [[nodiscard]] std::int64_t evaluate(const Valuation& values) const;

    /// Renders as `2*x - y + 3`; the zero term renders as `0`.
    [[nodiscard]] std::string to_string() const;
    /// Renders only the variable part (`0` when constant).
    [[nodiscard]] std::string linear_part_string() const;

    friend bool operator==(const AffineTerm&, const AffineTerm&) = default;
    friend auto operator<=>(const AffineTerm&, const AffineTerm&) = default;

private:
    std::map<std::string, std::int64_t> coeffs_;
    std::int64_t constant_ = 0;
};

using Substitution = std::map<std::string, AffineTerm>;

/// Vector-valued update f(d); one component per tuple position.
using AffineUpdate = std::vector<AffineTerm>;

/// Kinds of the variables in scope (parameter components plus bound variables).
using Scope = std::map<std::string, SortKind>;

Scope make_scope(std::span<const std::string> params, SortKind kind);
Valuation make_valuation(std::span<const std::string> params, std::span<const std::int64_t> values);
/// Maps each parameter name to the corresponding update component.
Substitution make_substitution(std::span<const std::string> params, const AffineUpdate& update);

} // namespace pbes
