#include "pbes/formula.hpp"

#include "pbes/error.hpp"

#include <cassert>
#include <utility>

namespace pbes {

std::string_view to_string(CmpOp op)
{
    switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Eq: return "=";
    case CmpOp::Ne: return "!=";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
    }
    return "?";
}

struct Formula::Node {
    Kind kind = Kind::True;
    AffineTerm term;
    CmpOp op = CmpOp::Eq;
    std::int64_t modulus = 0;
    std::int64_t residue = 0;
    Formula a{nullptr};
    Formula b{nullptr};
    std::string var;
    SortKind var_kind = SortKind::Int;
};

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula::Formula() : Formula(truth()) {}

Formula Formula::truth()
{
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::True;
        return std::shared_ptr<const Node>(n);
    }();
    return Formula(node);
}

Formula Formula::falsity()
{
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = Kind::False;
        return std::shared_ptr<const Node>(n);
    }();
    return Formula(node);
}

Formula Formula::compare(AffineTerm term, CmpOp op)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Cmp;
    n->term = std::move(term);
    n->op = op;
    return Formula(std::move(n));
}

Formula Formula::compare(const AffineTerm& lhs, CmpOp op, const AffineTerm& rhs)
{
    return compare(lhs - rhs, op);
}

Formula Formula::congruence(AffineTerm term, std::int64_t modulus, std::int64_t residue)
{
    if (modulus < 2 || residue < 0 || residue >= modulus)
        throw Error("congruence requires m >= 2 and 0 <= r < m");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Cong;
    n->term = std::move(term);
    n->modulus = modulus;
    n->residue = residue;
    return Formula(std::move(n));
}

Formula Formula::conj(Formula lhs, Formula rhs)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::And;
    n->a = std::move(lhs);
    n->b = std::move(rhs);
    return Formula(std::move(n));
}

Formula Formula::disj(Formula lhs, Formula rhs)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Or;
    n->a = std::move(lhs);
    n->b = std::move(rhs);
    return Formula(std::move(n));
}

Formula Formula::negation(Formula operand)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Not;
    n->a = std::move(operand);
    return Formula(std::move(n));
}

Formula Formula::forall(std::string var, SortKind kind, Formula body)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Forall;
    n->var = std::move(var);
    n->var_kind = kind;
    n->a = std::move(body);
    return Formula(std::move(n));
}

Formula Formula::exists(std::string var, SortKind kind, Formula body)
{
    auto n = std::make_shared<Node>();
    n->kind = Kind::Exists;
    n->var = std::move(var);
    n->var_kind = kind;
    n->a = std::move(body);
    return Formula(std::move(n));
}

Formula::Kind Formula::kind() const noexcept
{
    return node_->kind;
}

const AffineTerm& Formula::term() const
{
    assert(kind() == Kind::Cmp || kind() == Kind::Cong);
    return node_->term;
}

CmpOp Formula::op() const
{
    assert(kind() == Kind::Cmp);
    return node_->op;
}

std::int64_t Formula::modulus() const
{
    assert(kind() == Kind::Cong);
    return node_->modulus;
}

std::int64_t Formula::residue() const
{
    assert(kind() == Kind::Cong);
    return node_->residue;
}

const Formula& Formula::lhs() const
{
    assert(kind() == Kind::And || kind() == Kind::Or);
    return node_->a;
}

const Formula& Formula::rhs() const
{
    assert(kind() == Kind::And || kind() == Kind::Or);
    return node_->b;
}

const Formula& Formula::operand() const
{
    assert(kind() == Kind::Not || kind() == Kind::Forall || kind() == Kind::Exists);
    return node_->a;
}

const std::string& Formula::bound_var() const
{
    assert(kind() == Kind::Forall || kind() == Kind::Exists);
    return node_->var;
}

SortKind Formula::bound_kind() const
{
    assert(kind() == Kind::Forall || kind() == Kind::Exists);
    return node_->var_kind;
}

bool Formula::has_quantifiers() const
{
    switch (kind()) {
    case Kind::Forall:
    case Kind::Exists: return true;
    case Kind::And:
    case Kind::Or: return lhs().has_quantifiers() || rhs().has_quantifiers();
    case Kind::Not: return operand().has_quantifiers();
    default: return false;
    }
}

std::set<std::string> Formula::free_variables() const
{
    std::set<std::string> out;
    switch (kind()) {
    case Kind::Cmp:
    case Kind::Cong:
        for (const auto& [name, c] : term().coefficients())
            out.insert(name);
        break;
    case Kind::And:
    case Kind::Or: {
        out = lhs().free_variables();
        auto r = rhs().free_variables();
        out.insert(r.begin(), r.end());
        break;
    }
    case Kind::Not: out = operand().free_variables(); break;
    case Kind::Forall:
    case Kind::Exists:
        out = operand().free_variables();
        out.erase(bound_var());
        break;
    default: break;
    }
    return out;
}

Formula Formula::substitute(const Substitution& sub) const
{
    switch (kind()) {
    case Kind::True:
    case Kind::False: return *this;
    case Kind::Cmp: return compare(term().substitute(sub), op());
    case Kind::Cong: return congruence(term().substitute(sub), modulus(), residue());
    case Kind::And: return conj(lhs().substitute(sub), rhs().substitute(sub));
    case Kind::Or: return disj(lhs().substitute(sub), rhs().substitute(sub));
    case Kind::Not: return negation(operand().substitute(sub));
    case Kind::Forall:
    case Kind::Exists: {
        Substitution inner = sub;
        inner.erase(bound_var());
        for (const auto& [name, t] : inner)
            if (t.mentions(bound_var()))
                throw Error("substitution would capture bound variable '" + bound_var() + "'");
        Formula body = operand().substitute(inner);
        return kind() == Kind::Forall ? forall(bound_var(), bound_kind(), std::move(body))
                                      : exists(bound_var(), bound_kind(), std::move(body));
    }
    }
    return *this;
}

bool Formula::evaluate_ground(const Valuation& values) const
{
    switch (kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Cmp: {
        const std::int64_t v = term().evaluate(values);
        switch (op()) {
        case CmpOp::Lt: return v < 0;
        case CmpOp::Le: return v <= 0;
        case CmpOp::Eq: return v == 0;
        case CmpOp::Ne: return v != 0;
        case CmpOp::Ge: return v >= 0;
        case CmpOp::Gt: return v > 0;
        }
        return false;
    }
    case Kind::Cong: return arith::mod(term().evaluate(values), modulus()) == residue();
    case Kind::And: return lhs().evaluate_ground(values) && rhs().evaluate_ground(values);
    case Kind::Or: return lhs().evaluate_ground(values) || rhs().evaluate_ground(values);
    case Kind::Not: return !operand().evaluate_ground(values);
    case Kind::Forall:
    case Kind::Exists: throw Error("evaluate_ground called on a quantified formula");
    }
    return false;
}

namespace {

// Precedence levels: 0 = disjunction operand, 1 = conjunction operand, 2 = tight.
void print(const Formula& f, int level, bool top, std::string& out)
{
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::True: out += "true"; break;
    case K::False: out += "false"; break;
    case K::Cmp: {
        out += f.term().linear_part_string();
        out += ' ';
        out += to_string(f.op());
        out += ' ';
        out += std::to_string(-f.term().constant_term());
        break;
    }
    case K::Cong:
        out += f.term().to_string();
        out += " mod " + std::to_string(f.modulus()) + " = " + std::to_string(f.residue());
        break;
    case K::Or: {
        const bool paren = level > 0;
        if (paren)
            out += '(';
        print(f.lhs(), 0, false, out);
        out += " || ";
        print(f.rhs(), f.rhs().kind() == K::Or ? 1 : 0, false, out);
        if (paren)
            out += ')';
        break;
    }
    case K::And: {
        const bool paren = level > 1;
        if (paren)
            out += '(';
        print(f.lhs(), 1, false, out);
        out += " && ";
        print(f.rhs(), f.rhs().kind() == K::And ? 2 : 1, false, out);
        if (paren)
            out += ')';
        break;
    }
    case K::Not:
        out += "!(";
        print(f.operand(), 0, true, out);
        out += ')';
        break;
    case K::Forall:
    case K::Exists: {
        if (!top)
            out += '(';
        out += f.kind() == K::Forall ? "forall " : "exists ";
        out += f.bound_var();
        out += ':';
        out += to_string(f.bound_kind());
        out += ". ";
        print(f.operand(), 0, true, out);
        if (!top)
            out += ')';
        break;
    }
    }
}

} // namespace

std::string Formula::to_string() const
{
    std::string out;
    print(*this, 0, true, out);
    return out;
}

bool operator==(const Formula& a, const Formula& b)
{
    if (a.node_ == b.node_)
        return true;
    if (a.kind() != b.kind())
        return false;
    using K = Formula::Kind;
    switch (a.kind()) {
    case K::True:
    case K::False: return true;
    case K::Cmp: return a.op() == b.op() && a.term() == b.term();
    case K::Cong: return a.modulus() == b.modulus() && a.residue() == b.residue() && a.term() == b.term();
    case K::And:
    case K::Or: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case K::Not: return a.operand() == b.operand();
    case K::Forall:
    case K::Exists:
        return a.bound_var() == b.bound_var() && a.bound_kind() == b.bound_kind() && a.operand() == b.operand();
    }
    return false;
}

} // namespace pbes
