#include "pbes/presburger.hpp"

#include "presburger_internal.hpp"

#include "pbes/error.hpp"

#include <algorithm>
#include <tuple>

namespace pbes::presburger {

using detail::RawConj;

std::string to_string(const LinearForm& form)
{
    AffineTerm t;
    for (const auto& [name, c] : form)
        t += AffineTerm::variable(name, c);
    return t.linear_part_string();
}

namespace {

struct PrintedAtom {
    std::vector<std::string> vars;
    int op_rank;
    std::int64_t constant;
    std::string text;

    friend bool operator<(const PrintedAtom& a, const PrintedAtom& b)
    {
        return std::tie(a.vars, a.op_rank, a.constant, a.text) < std::tie(b.vars, b.op_rank, b.constant, b.text);
    }
};

std::vector<std::string> vars_of(const LinearForm& form)
{
    std::vector<std::string> v;
    for (const auto& entry : form)
        v.push_back(entry.first);
    return v;
}

std::int64_t evaluate_form(const LinearForm& form, const Valuation& values)
{
    std::int64_t acc = 0;
    for (const auto& [name, c] : form) {
        const auto it = values.find(name);
        if (it == values.end())
            throw DomainError("no value for variable '" + name + "'");
        acc = arith::add(acc, arith::mul(c, it->second));
    }
    return acc;
}

} // namespace

bool Conjunction::evaluate(const Valuation& values) const
{
    for (const auto& b : bounds) {
        const std::int64_t v = evaluate_form(b.form, values);
        if ((b.lower && v < *b.lower) || (b.upper && v > *b.upper))
            return false;
    }
    for (const auto& g : congruences)
        if (arith::mod(evaluate_form(g.form, values), g.modulus) != g.residue)
            return false;
    return true;
}

std::string Conjunction::to_string() const
{
    if (empty())
        return "true";
    std::vector<PrintedAtom> atoms;
    for (const auto& b : bounds) {
        const std::string f = presburger::to_string(b.form);
        if (b.lower && b.upper && *b.lower == *b.upper) {
            atoms.push_back({vars_of(b.form), 0, *b.lower, f + " = " + std::to_string(*b.lower)});
            continue;
        }
        if (b.lower)
            atoms.push_back({vars_of(b.form), 1, *b.lower, f + " >= " + std::to_string(*b.lower)});
        if (b.upper)
            atoms.push_back({vars_of(b.form), 2, *b.upper, f + " <= " + std::to_string(*b.upper)});
    }
    for (const auto& g : congruences)
        atoms.push_back({vars_of(g.form), 3, g.residue,
                         presburger::to_string(g.form) + " mod " + std::to_string(g.modulus) + " = " +
                             std::to_string(g.residue)});
    std::sort(atoms.begin(), atoms.end());
    std::string out;
    for (const auto& a : atoms) {
        if (!out.empty())
            out += " && ";
        out += a.text;
    }
    return out;
}

std::set<std::string> Conjunction::variables() const
{
    std::set<std::string> out;
    for (const auto& b : bounds)
        for (const auto& entry : b.form)
            out.insert(entry.first);
    for (const auto& g : congruences)
        for (const auto& entry : g.form)
            out.insert(entry.first);
    return out;
}

CanonicalFormula CanonicalFormula::truth()
{
    CanonicalFormula f;
    f.disjuncts_.emplace_back();
    return f;
}

bool CanonicalFormula::evaluate(const Valuation& values) const
{
    return std::any_of(disjuncts_.begin(), disjuncts_.end(),
                       [&](const Conjunction& c) { return c.evaluate(values); });
}

std::set<std::string> CanonicalFormula::variables() const
{
    std::set<std::string> out;
    for (const auto& c : disjuncts_) {
        auto v = c.variables();
        out.insert(v.begin(), v.end());
    }
    return out;
}

std::string CanonicalFormula::to_string() const
{
    if (disjuncts_.empty())
        return "false";
    std::string out;
    for (const auto& c : disjuncts_) {
        if (!out.empty())
            out += " || ";
        out += c.to_string();
    }
    return out;
}

Formula CanonicalFormula::to_formula() const
{
    auto term_of = [](const LinearForm& form) {
        AffineTerm t;
        for (const auto& [name, c] : form)
            t += AffineTerm::variable(name, c);
        return t;
    };
    std::optional<Formula> result;
    for (const auto& c : disjuncts_) {
        std::optional<Formula> conj;
        auto add = [&](Formula atom) { conj = conj ? Formula::conj(*conj, std::move(atom)) : std::move(atom); };
        for (const auto& b : c.bounds) {
            const AffineTerm f = term_of(b.form);
            if (b.lower && b.upper && *b.lower == *b.upper) {
                add(Formula::compare(f.plus_constant(-*b.lower), CmpOp::Eq));
                continue;
            }
            if (b.lower)
                add(Formula::compare(f.plus_constant(-*b.lower), CmpOp::Ge));
            if (b.upper)
                add(Formula::compare(f.plus_constant(-*b.upper), CmpOp::Le));
        }
        for (const auto& g : c.congruences)
            add(Formula::congruence(term_of(g.form), g.modulus, g.residue));
        Formula disjunct = conj ? *conj : Formula::truth();
        result = result ? Formula::disj(*result, std::move(disjunct)) : std::move(disjunct);
    }
    return result ? *result : Formula::falsity();
}

namespace {

struct Cleanup {
    const Scope& scope;
    bool check_validity;

    std::vector<Conjunction> run(std::vector<Conjunction> v) const
    {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        if (std::any_of(v.begin(), v.end(), [](const Conjunction& c) { return c.empty(); }))
            return {Conjunction{}};

        bool changed = true;
        while (changed) {
            changed = remove_subsumed(v) || merge_intervals(v) || merge_residues(v);
            if (std::any_of(v.begin(), v.end(), [](const Conjunction& c) { return c.empty(); }))
                return {Conjunction{}};
        }
        if (check_validity && v.size() >= 2 && v.size() <= 8) {
            CanonicalFormula f;
            auto negated = CanonicalFormula::truth();
            for (const auto& c : v) {
                std::vector<Conjunction> next;
                for (const auto& d : negated.disjuncts())
                    for (const auto& atom : detail::negate_atoms(c)) {
                        RawConj raw = detail::to_raw(d);
                        raw.append(atom);
                        if (auto n = detail::normalize(raw, scope))
                            next.push_back(std::move(*n));
                    }
                negated = CanonicalFormula::from_disjuncts_unchecked(std::move(next), scope);
                if (negated.is_false())
                    return {Conjunction{}};
            }
        }
        std::sort(v.begin(), v.end(), [](const Conjunction& a, const Conjunction& b) {
            return a.to_string() < b.to_string();
        });
        return v;
    }

    bool remove_subsumed(std::vector<Conjunction>& v) const
    {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j)
                if (i != j && detail::conjunction_entails(v[i], v[j], scope)) {
                    v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                    return true;
                }
        return false;
    }

    static bool bounds_adjacent(const Bound& a, const Bound& b, std::optional<std::int64_t> implicit_lo)
    {
        auto lo = [&](const Bound& x) { return x.lower ? x.lower : implicit_lo; };
        // a.hi + 1 >= b.lo and b.hi + 1 >= a.lo, with missing sides infinite
        auto reaches = [](std::optional<std::int64_t> hi, std::optional<std::int64_t> lo2) {
            return !hi || !lo2 || arith::add(*hi, 1) >= *lo2;
        };
        return reaches(a.upper, lo(b)) && reaches(b.upper, lo(a));
    }

    std::optional<std::int64_t> implicit_lower(const LinearForm& form) const
    {
        const bool nonneg = std::all_of(form.begin(), form.end(), [&](const auto& entry) {
            const auto it = scope.find(entry.first);
            return entry.second > 0 && it != scope.end() && it->second == SortKind::Nat;
        });
        return nonneg ? std::optional<std::int64_t>(0) : std::nullopt;
    }

    // Two conjunctions equal except for one bound whose intervals touch.
    bool merge_intervals(std::vector<Conjunction>& v) const
    {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                const Conjunction& a = v[i];
                const Conjunction& b = v[j];
                if (a.congruences != b.congruences)
                    continue;
                auto merged = try_merge_bounds(a, b);
                if (!merged)
                    continue;
                auto n = detail::normalize(detail::to_raw(*merged), scope);
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
                v[i] = n ? std::move(*n) : Conjunction{};
                return true;
            }
        return false;
    }

    std::optional<Conjunction> try_merge_bounds(const Conjunction& a, const Conjunction& b) const
    {
        // Align by form; allow a form present on only one side only if it
        // merges to unbounded, which subsumption already covers.
        if (a.bounds.size() != b.bounds.size())
            return std::nullopt;
        std::optional<std::size_t> diff;
        for (std::size_t k = 0; k < a.bounds.size(); ++k) {
            if (a.bounds[k].form != b.bounds[k].form)
                return std::nullopt;
            if (a.bounds[k] != b.bounds[k]) {
                if (diff)
                    return std::nullopt;
                diff = k;
            }
        }
        if (!diff)
            return std::nullopt;
        const Bound& x = a.bounds[*diff];
        const Bound& y = b.bounds[*diff];
        if (!bounds_adjacent(x, y, implicit_lower(x.form)))
            return std::nullopt;
        Conjunction out = a;
        Bound& m = out.bounds[*diff];
        m.lower = (x.lower && y.lower) ? std::optional(std::min(*x.lower, *y.lower)) : std::nullopt;
        m.upper = (x.upper && y.upper) ? std::optional(std::max(*x.upper, *y.upper)) : std::nullopt;
        if (!m.lower && !m.upper)
            out.bounds.erase(out.bounds.begin() + static_cast<std::ptrdiff_t>(*diff));
        return out;
    }

    // Conjunctions equal except for the residue of one congruence and
    // covering every residue collapse into one without that congruence.
    bool merge_residues(std::vector<Conjunction>& v) const
    {
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t q = 0; q < v[i].congruences.size(); ++q) {
                const Congruence& g = v[i].congruences[q];
                std::vector<std::size_t> group{i};
                std::set<std::int64_t> residues{g.residue};
                for (std::size_t j = 0; j < v.size(); ++j) {
                    if (j == i || v[j].bounds != v[i].bounds ||
                        v[j].congruences.size() != v[i].congruences.size())
                        continue;
                    bool match = true;
                    for (std::size_t p = 0; p < v[j].congruences.size() && match; ++p) {
                        const Congruence& h = v[j].congruences[p];
                        if (p == q)
                            match = h.form == g.form && h.modulus == g.modulus;
                        else
                            match = h == v[i].congruences[p];
                    }
                    if (match && residues.insert(v[j].congruences[q].residue).second)
                        group.push_back(j);
                }
                if (static_cast<std::int64_t>(residues.size()) != g.modulus)
                    continue;
                Conjunction merged = v[i];
                merged.congruences.erase(merged.congruences.begin() + static_cast<std::ptrdiff_t>(q));
                std::sort(group.rbegin(), group.rend());
                for (std::size_t idx : group)
                    v.erase(v.begin() + static_cast<std::ptrdiff_t>(idx));
                auto n = detail::normalize(detail::to_raw(merged), scope);
                v.push_back(n ? std::move(*n) : Conjunction{});
                return true;
            }
        return false;
    }
};

std::vector<RawConj> atom_disjuncts(const Formula& f)
{
    const AffineTerm& t = f.term();
    auto single = [](AffineTerm e) {
        RawConj r;
        r.le.push_back(std::move(e));
        return r;
    };
    switch (f.op()) {
    case CmpOp::Lt: return {single(t.plus_constant(1))};
    case CmpOp::Le: return {single(t)};
    case CmpOp::Ge: return {single(t.negated())};
    case CmpOp::Gt: return {single(t.negated().plus_constant(1))};
    case CmpOp::Eq: {
        RawConj r;
        r.le.push_back(t);
        r.le.push_back(t.negated());
        return {r};
    }
    case CmpOp::Ne: return {single(t.plus_constant(1)), single(t.negated().plus_constant(1))};
    }
    return {};
}

void check_closed(const AffineTerm& t, const Scope& scope)
{
    for (const auto& [name, c] : t.coefficients())
        if (scope.find(name) == scope.end())
            throw NotClosed("unknown variable '" + name + "'");
}

CanonicalFormula from_raw(const std::vector<RawConj>& raws, const Scope& scope)
{
    std::vector<Conjunction> out;
    for (const auto& r : raws)
        if (auto n = detail::normalize(r, scope))
            out.push_back(std::move(*n));
    return CanonicalFormula::from_disjuncts(std::move(out), scope);
}

CanonicalFormula eliminate_exists(const std::string& var, SortKind kind, const CanonicalFormula& body,
                                  const Scope& outer)
{
    std::vector<RawConj> raws;
    for (const auto& c : body.disjuncts()) {
        RawConj raw = detail::to_raw(c);
        if (kind == SortKind::Nat)
            raw.le.push_back(AffineTerm::variable(var, -1));
        for (auto& r : detail::cooper_exists(var, raw))
            raws.push_back(std::move(r));
    }
    return from_raw(raws, outer);
}

} // namespace

CanonicalFormula CanonicalFormula::from_disjuncts(std::vector<Conjunction> disjuncts, const Scope& scope)
{
    CanonicalFormula f;
    f.disjuncts_ = Cleanup{scope, true}.run(std::move(disjuncts));
    return f;
}

CanonicalFormula CanonicalFormula::from_disjuncts_unchecked(std::vector<Conjunction> disjuncts, const Scope& scope)
{
    CanonicalFormula f;
    f.disjuncts_ = Cleanup{scope, false}.run(std::move(disjuncts));
    return f;
}

CanonicalFormula canonicalize(const Formula& f, const Scope& scope)
{
    using K = Formula::Kind;
    switch (f.kind()) {
    case K::True: return CanonicalFormula::truth();
    case K::False: return CanonicalFormula::falsity();
    case K::Cmp:
        check_closed(f.term(), scope);
        return from_raw(atom_disjuncts(f), scope);
    case K::Cong: {
        check_closed(f.term(), scope);
        RawConj r;
        r.div.emplace_back(f.modulus(), f.term().plus_constant(-f.residue()));
        return from_raw({r}, scope);
    }
    case K::And: {
        const auto lhs = canonicalize(f.lhs(), scope);
        if (lhs.is_false())
            return lhs;
        return conj(lhs, canonicalize(f.rhs(), scope), scope);
    }
    case K::Or: return disj(canonicalize(f.lhs(), scope), canonicalize(f.rhs(), scope), scope);
    case K::Not: return negate(canonicalize(f.operand(), scope), scope);
    case K::Exists:
    case K::Forall: {
        if (scope.count(f.bound_var()) != 0)
            throw Error("quantified variable '" + f.bound_var() + "' shadows a variable in scope");
        Scope inner = scope;
        inner.emplace(f.bound_var(), f.bound_kind());
        if (f.kind() == K::Exists)
            return eliminate_exists(f.bound_var(), f.bound_kind(), canonicalize(f.operand(), inner), scope);
        const auto negated_body = negate(canonicalize(f.operand(), inner), inner);
        return negate(eliminate_exists(f.bound_var(), f.bound_kind(), negated_body, scope), scope);
    }
    }
    return CanonicalFormula::falsity();
}

CanonicalFormula conj(const CanonicalFormula& a, const CanonicalFormula& b, const Scope& scope)
{
    if (a.is_false() || b.is_true())
        return a;
    if (b.is_false() || a.is_true())
        return b;
    std::vector<Conjunction> out;
    for (const auto& x : a.disjuncts())
        for (const auto& y : b.disjuncts()) {
            RawConj raw = detail::to_raw(x);
            raw.append(detail::to_raw(y));
            if (auto n = detail::normalize(raw, scope))
                out.push_back(std::move(*n));
        }
    return CanonicalFormula::from_disjuncts(std::move(out), scope);
}

CanonicalFormula disj(const CanonicalFormula& a, const CanonicalFormula& b, const Scope& scope)
{
    if (a.is_false() || b.is_true())
        return b;
    if (b.is_false() || a.is_true())
        return a;
    std::vector<Conjunction> out = a.disjuncts();
    out.insert(out.end(), b.disjuncts().begin(), b.disjuncts().end());
    return CanonicalFormula::from_disjuncts(std::move(out), scope);
}

CanonicalFormula negate(const CanonicalFormula& a, const Scope& scope)
{
    CanonicalFormula acc = CanonicalFormula::truth();
    for (const auto& c : a.disjuncts()) {
        std::vector<RawConj> atoms = detail::negate_atoms(c);
        std::vector<Conjunction> next;
        for (const auto& d : acc.disjuncts())
            for (const auto& atom : atoms) {
                RawConj raw = detail::to_raw(d);
                raw.append(atom);
                if (auto n = detail::normalize(raw, scope))
                    next.push_back(std::move(*n));
            }
        acc = CanonicalFormula::from_disjuncts(std::move(next), scope);
        if (acc.is_false())
            break;
    }
    return acc;
}

Formula substitute(const Formula& f, std::span<const std::string> params, const AffineUpdate& update)
{
    return f.substitute(make_substitution(params, update));
}

CanonicalFormula substitute(const CanonicalFormula& f, const Substitution& sub, const Scope& result_scope)
{
    std::vector<RawConj> raws;
    for (const auto& c : f.disjuncts())
        raws.push_back(detail::to_raw(c).substitute(sub));
    return from_raw(raws, result_scope);
}

bool is_satisfiable(const Formula& f, const Scope& scope)
{
    return !canonicalize(f, scope).is_false();
}

bool entails(const CanonicalFormula& f, const CanonicalFormula& g, const Scope& scope)
{
    if (f.is_false() || g.is_true())
        return true;
    if (g.disjuncts().size() == 1) {
        return std::all_of(f.disjuncts().begin(), f.disjuncts().end(), [&](const Conjunction& c) {
            return detail::conjunction_entails(c, g.disjuncts().front(), scope);
        });
    }
    return conj(f, negate(g, scope), scope).is_false();
}

bool entails(const Formula& f, const Formula& g, const Scope& scope)
{
    return entails(canonicalize(f, scope), canonicalize(g, scope), scope);
}

bool is_valid(const CanonicalFormula& f, const Scope& scope)
{
    return f.is_true() || negate(f, scope).is_false();
}

bool equivalent(const CanonicalFormula& f, const CanonicalFormula& g, const Scope& scope)
{
    return f == g || (entails(f, g, scope) && entails(g, f, scope));
}

bool evaluate(const Formula& f, const Scope& scope, const Valuation& values)
{
    for (const auto& [name, kind] : scope) {
        const auto it = values.find(name);
        if (kind == SortKind::Nat && it != values.end() && it->second < 0)
            throw DomainError("negative value " + std::to_string(it->second) + " for Nat variable '" + name + "'");
    }
    if (!f.has_quantifiers())
        return f.evaluate_ground(values);
    return canonicalize(f, scope).evaluate(values);
}

} // namespace pbes::presburger
