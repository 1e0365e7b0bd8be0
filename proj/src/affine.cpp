#include "pbes/affine.hpp"

#include "pbes/error.hpp"

#include <limits>
#include <sstream>

namespace pbes {

std::string_view to_string(SortKind kind)
{
    return kind == SortKind::Nat ? "Nat" : "Int";
}

namespace arith {

std::int64_t add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in addition");
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in subtraction");
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw ArithmeticOverflow("integer overflow in multiplication");
    return r;
}

std::int64_t neg(std::int64_t a)
{
    return sub(0, a);
}

std::int64_t abs(std::int64_t a)
{
    return a < 0 ? neg(a) : a;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        const std::int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    return mul(abs(a) / gcd(a, b), abs(b));
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    if (b == 0)
        throw ArithmeticOverflow("division by zero");
    if (a == std::numeric_limits<std::int64_t>::min() && b == -1)
        throw ArithmeticOverflow("integer overflow in division");
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b)
{
    return neg(floor_div(neg(a), b));
}

std::int64_t mod(std::int64_t a, std::int64_t m)
{
    m = abs(m);
    if (m == 0)
        throw ArithmeticOverflow("modulus zero");
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m)
{
    // extended Euclid on (a mod m, m)
    std::int64_t old_r = mod(a, m), r = m;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        std::int64_t t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_s - q * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1)
        throw ArithmeticOverflow("no modular inverse");
    return mod(old_s, m);
}

std::optional<Residue> combine(Residue a, Residue b)
{
    // x = a.r + a.m * t ; a.m * t = b.r - a.r (mod b.m)
    const std::int64_t g = gcd(a.modulus, b.modulus);
    const std::int64_t diff = sub(b.residue, a.residue);
    if (mod(diff, g) != 0)
        return std::nullopt;
    const std::int64_t m2 = b.modulus / g;
    const std::int64_t t = m2 == 1 ? 0 : mod(mul(diff / g, inverse_mod(a.modulus / g, m2)), m2);
    const std::int64_t modulus = mul(a.modulus, m2);
    return Residue{mod(add(a.residue, mul(a.modulus, t)), modulus), modulus};
}

} // namespace arith

AffineTerm AffineTerm::constant(std::int64_t value)
{
    AffineTerm t;
    t.constant_ = value;
    return t;
}

AffineTerm AffineTerm::variable(const std::string& name, std::int64_t coefficient)
{
    AffineTerm t;
    if (coefficient != 0)
        t.coeffs_.emplace(name, coefficient);
    return t;
}

std::int64_t AffineTerm::coefficient(const std::string& name) const
{
    const auto it = coeffs_.find(name);
    return it == coeffs_.end() ? 0 : it->second;
}

AffineTerm& AffineTerm::operator+=(const AffineTerm& other)
{
    for (const auto& [name, c] : other.coeffs_) {
        const std::int64_t sum = arith::add(coefficient(name), c);
        if (sum == 0)
            coeffs_.erase(name);
        else
            coeffs_[name] = sum;
    }
    constant_ = arith::add(constant_, other.constant_);
    return *this;
}

AffineTerm& AffineTerm::operator-=(const AffineTerm& other)
{
    return *this += other.negated();
}

AffineTerm AffineTerm::scaled(std::int64_t factor) const
{
    if (factor == 0)
        return {};
    AffineTerm t;
    for (const auto& [name, c] : coeffs_)
        t.coeffs_.emplace(name, arith::mul(c, factor));
    t.constant_ = arith::mul(constant_, factor);
    return t;
}

AffineTerm AffineTerm::plus_constant(std::int64_t c) const
{
    AffineTerm t = *this;
    t.constant_ = arith::add(t.constant_, c);
    return t;
}

AffineTerm AffineTerm::without(const std::string& name) const
{
    AffineTerm t = *this;
    t.coeffs_.erase(name);
    return t;
}

AffineTerm AffineTerm::substitute(const std::map<std::string, AffineTerm>& sub) const
{
    AffineTerm result = AffineTerm::constant(constant_);
    for (const auto& [name, c] : coeffs_) {
        const auto it = sub.find(name);
        if (it == sub.end())
            result += AffineTerm::variable(name, c);
        else
            result += it->second.scaled(c);
    }
    return result;
}

std::int64_t AffineTerm::evaluate(const Valuation& values) const
{
    std::int64_t acc = constant_;
    for (const auto& [name, c] : coeffs_) {
        const auto it = values.find(name);
        if (it == values.end())
            throw DomainError("no value for variable '" + name + "'");
        acc = arith::add(acc, arith::mul(c, it->second));
    }
    return acc;
}

std::string AffineTerm::linear_part_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, c] : coeffs_) {
        const std::int64_t mag = c < 0 ? -c : c;
        if (first)
            out << (c < 0 ? "-" : "");
        else
            out << (c < 0 ? " - " : " + ");
        if (mag != 1)
            out << mag << '*';
        out << name;
        first = false;
    }
    return out.str();
}

std::string AffineTerm::to_string() const
{
    if (coeffs_.empty())
        return std::to_string(constant_);
    std::string s = linear_part_string();
    if (constant_ > 0)
        s += " + " + std::to_string(constant_);
    else if (constant_ < 0)
        s += " - " + std::to_string(-constant_);
    return s;
}

Scope make_scope(std::span<const std::string> params, SortKind kind)
{
    Scope scope;
    for (const auto& p : params)
        scope.emplace(p, kind);
    return scope;
}

Valuation make_valuation(std::span<const std::string> params, std::span<const std::int64_t> values)
{
    if (params.size() != values.size())
        throw SortMismatch("value has " + std::to_string(values.size()) + " components, expected " +
                           std::to_string(params.size()));
    Valuation v;
    for (std::size_t i = 0; i < params.size(); ++i)
        v.emplace(params[i], values[i]);
    return v;
}

Substitution make_substitution(std::span<const std::string> params, const AffineUpdate& update)
{
    if (params.size() != update.size())
        throw SortMismatch("update has " + std::to_string(update.size()) + " components, expected " +
                           std::to_string(params.size()));
    Substitution sub;
    for (std::size_t i = 0; i < params.size(); ++i)
        sub.emplace(params[i], update[i]);
    return sub;
}

} // namespace pbes
