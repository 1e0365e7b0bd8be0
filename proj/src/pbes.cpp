#include "pbes/pbes.hpp"

#include "pbes/error.hpp"

#include <set>

namespace pbes {

std::string_view to_string(Sign sign)
{
    return sign == Sign::Mu ? "mu" : "nu";
}

std::vector<unsigned> compute_ranks(const std::vector<Sign>& signs)
{
    std::vector<unsigned> ranks;
    Sign previous = Sign::Nu;
    unsigned rank = 0;
    for (Sign s : signs) {
        if (s != previous)
            ++rank;
        previous = s;
        ranks.push_back(rank);
    }
    return ranks;
}

NormalPbes NormalPbes::create(SortKind kind, std::vector<Equation> equations, std::string name)
{
    if (equations.empty())
        throw Error("a PBES needs at least one equation");
    NormalPbes p;
    p.name_ = std::move(name);
    p.sort_ = Sort{kind, equations.front().params.size()};
    if (p.sort_.arity == 0)
        throw SortMismatch("equation '" + equations.front().name + "' has no parameters");

    std::set<std::string> names;
    for (const auto& eq : equations) {
        if (!names.insert(eq.name).second)
            throw Error("predicate '" + eq.name + "' is defined twice");
        if (eq.params.size() != p.sort_.arity)
            throw SortMismatch("predicate '" + eq.name + "' has " + std::to_string(eq.params.size()) +
                               " parameters, expected " + std::to_string(p.sort_.arity));
        if (std::set<std::string>(eq.params.begin(), eq.params.end()).size() != eq.params.size())
            throw Error("predicate '" + eq.name + "' repeats a parameter name");
        if (eq.clauses.empty())
            throw NotDisjunctive("predicate '" + eq.name + "' has no clauses");
    }

    std::vector<Sign> signs;
    for (const auto& eq : equations) {
        signs.push_back(eq.sign);
        p.scopes_.push_back(make_scope(eq.params, kind));
    }
    p.ranks_ = compute_ranks(signs);
    p.equations_ = std::move(equations);

    for (std::size_t i = 0; i < p.equations_.size(); ++i) {
        const Equation& eq = p.equations_[i];
        const Scope& scope = p.scopes_[i];
        std::vector<presburger::CanonicalFormula> guards;
        std::vector<presburger::CanonicalFormula> negated;
        for (std::size_t k = 0; k < eq.clauses.size(); ++k) {
            const Clause& c = eq.clauses[k];
            if (c.target >= p.equations_.size())
                throw NotClosed("clause " + std::to_string(k + 1) + " of '" + eq.name + "' calls an unknown predicate");
            if (c.update.size() != p.sort_.arity)
                throw SortMismatch("clause " + std::to_string(k + 1) + " of '" + eq.name + "' passes " +
                                   std::to_string(c.update.size()) + " arguments, expected " +
                                   std::to_string(p.sort_.arity));
            for (const auto& v : c.guard.free_variables())
                if (scope.count(v) == 0)
                    throw NotClosed("unknown variable '" + v + "' in guard of '" + eq.name + "'");
            for (const auto& term : c.update)
                for (const auto& [v, coef] : term.coefficients())
                    if (scope.count(v) == 0)
                        throw NotClosed("unknown variable '" + v + "' in update of '" + eq.name + "'");
            auto g = presburger::canonicalize(c.guard, scope);
            if (kind == SortKind::Nat) {
                for (std::size_t j = 0; j < c.update.size(); ++j) {
                    const auto nonneg = presburger::canonicalize(Formula::compare(c.update[j], CmpOp::Ge), scope);
                    if (!presburger::entails(g, nonneg, scope))
                        throw DomainError("clause " + std::to_string(k + 1) + " of '" + eq.name + "': argument '" +
                                          c.update[j].to_string() + "' may become negative under its guard");
                }
            }
            negated.push_back(presburger::negate(g, scope));
            guards.push_back(std::move(g));
        }
        p.guards_.push_back(std::move(guards));
        p.negated_guards_.push_back(std::move(negated));
    }
    return p;
}

std::optional<std::size_t> NormalPbes::find(std::string_view name) const
{
    for (std::size_t i = 0; i < equations_.size(); ++i)
        if (equations_[i].name == name)
            return i;
    return std::nullopt;
}

Substitution NormalPbes::clause_substitution(std::size_t i, std::size_t k) const
{
    const Clause& c = clause(i, k);
    return make_substitution(equations_.at(c.target).params, c.update);
}

void NormalPbes::check_value(const std::vector<std::int64_t>& value) const
{
    if (value.size() != sort_.arity)
        throw SortMismatch("expected " + std::to_string(sort_.arity) + " values, got " + std::to_string(value.size()));
    if (sort_.kind == SortKind::Nat)
        for (auto v : value)
            if (v < 0)
                throw DomainError("negative value " + std::to_string(v) + " for a Nat parameter");
}

std::string to_string(const NormalPbes& pbes, const SigElement& s)
{
    std::string out = pbes.equation(s.index).name + "(";
    for (std::size_t j = 0; j < s.value.size(); ++j) {
        if (j != 0)
            out += ",";
        out += std::to_string(s.value[j]);
    }
    return out + ")";
}

bool concrete_clause_enabled(const NormalPbes& pbes, const SigElement& s, std::size_t k)
{
    pbes.check_value(s.value);
    const Equation& eq = pbes.equation(s.index);
    const Valuation values = make_valuation(eq.params, s.value);
    const Clause& c = eq.clauses.at(k);
    if (c.guard.has_quantifiers())
        return pbes.guard(s.index, k).evaluate(values);
    return c.guard.evaluate_ground(values);
}

SigElement apply_clause(const NormalPbes& pbes, const SigElement& s, std::size_t k)
{
    const Equation& eq = pbes.equation(s.index);
    const Valuation values = make_valuation(eq.params, s.value);
    const Clause& c = eq.clauses.at(k);
    SigElement next{c.target, {}};
    for (const auto& term : c.update)
        next.value.push_back(term.evaluate(values));
    return next;
}

namespace {

std::string print_guard(const Formula& g)
{
    const auto kind = g.kind();
    const bool wrap = kind == Formula::Kind::Or || kind == Formula::Kind::Forall || kind == Formula::Kind::Exists;
    return wrap ? "(" + g.to_string() + ")" : g.to_string();
}

} // namespace

std::string print_pbes(const NormalPbes& pbes)
{
    std::string out;
    if (!pbes.name().empty())
        out += "pbes " + pbes.name() + ";\n\n";
    const std::string kind(to_string(pbes.sort().kind));
    for (const auto& eq : pbes.equations()) {
        out += std::string(to_string(eq.sign)) + " " + eq.name + "(";
        for (std::size_t j = 0; j < eq.params.size(); ++j) {
            if (j != 0)
                out += ", ";
            out += eq.params[j] + ":" + kind;
        }
        out += ") =";
        for (std::size_t k = 0; k < eq.clauses.size(); ++k) {
            const Clause& c = eq.clauses[k];
            out += k == 0 ? "\n    " : "\n  || ";
            out += "(" + print_guard(c.guard) + " && " + pbes.equation(c.target).name + "(";
            for (std::size_t j = 0; j < c.update.size(); ++j) {
                if (j != 0)
                    out += ", ";
                out += c.update[j].to_string();
            }
            out += "))";
        }
        out += ";\n";
    }
    return out;
}

} // namespace pbes
