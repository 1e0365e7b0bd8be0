#include "presburger_internal.hpp"

#include "pbes/error.hpp"

#include <algorithm>
#include <map>

namespace pbes::presburger::detail {

void RawConj::append(const RawConj& other)
{
    le.insert(le.end(), other.le.begin(), other.le.end());
    div.insert(div.end(), other.div.begin(), other.div.end());
}

RawConj RawConj::substitute(const Substitution& sub) const
{
    RawConj out;
    out.le.reserve(le.size());
    for (const auto& e : le)
        out.le.push_back(e.substitute(sub));
    out.div.reserve(div.size());
    for (const auto& [m, e] : div)
        out.div.emplace_back(m, e.substitute(sub));
    return out;
}

namespace {

AffineTerm term_of(const LinearForm& form)
{
    AffineTerm t;
    for (const auto& [name, c] : form)
        t += AffineTerm::variable(name, c);
    return t;
}

bool implicitly_nonnegative(const LinearForm& form, const Scope& scope)
{
    return std::all_of(form.begin(), form.end(), [&](const auto& entry) {
        const auto it = scope.find(entry.first);
        return entry.second > 0 && it != scope.end() && it->second == SortKind::Nat;
    });
}

struct Interval {
    std::optional<std::int64_t> lo;
    std::optional<std::int64_t> hi;
};

void tighten_upper(Interval& iv, std::int64_t value)
{
    iv.hi = iv.hi ? std::min(*iv.hi, value) : value;
}

void tighten_lower(Interval& iv, std::int64_t value)
{
    iv.lo = iv.lo ? std::max(*iv.lo, value) : value;
}

} // namespace

RawConj to_raw(const Conjunction& c)
{
    RawConj raw;
    for (const auto& b : c.bounds) {
        const AffineTerm f = term_of(b.form);
        if (b.lower)
            raw.le.push_back(f.negated().plus_constant(*b.lower));
        if (b.upper)
            raw.le.push_back(f.plus_constant(arith::neg(*b.upper)));
    }
    for (const auto& g : c.congruences)
        raw.div.emplace_back(g.modulus, term_of(g.form).plus_constant(arith::neg(g.residue)));
    return raw;
}

std::optional<Conjunction> normalize_core(const RawConj& raw, const Scope& scope)
{
    std::map<LinearForm, Interval> bounds;
    std::map<LinearForm, arith::Residue> congs;

    for (const auto& e : raw.le) {
        if (e.is_constant()) {
            if (e.constant_term() > 0)
                return std::nullopt;
            continue;
        }
        std::int64_t g = 0;
        for (const auto& [name, c] : e.coefficients())
            g = arith::gcd(g, c);
        LinearForm form;
        for (const auto& [name, c] : e.coefficients())
            form.emplace_back(name, c / g);
        // form <= k
        const std::int64_t k = arith::floor_div(arith::neg(e.constant_term()), g);
        if (form.front().second < 0) {
            for (auto& entry : form)
                entry.second = -entry.second;
            tighten_lower(bounds[form], arith::neg(k));
        } else {
            tighten_upper(bounds[form], k);
        }
    }

    for (const auto& [m_in, e] : raw.div) {
        std::int64_t m = arith::abs(m_in);
        if (m == 0)
            throw Error("divisibility by zero");
        if (m == 1)
            continue;
        LinearForm form;
        for (const auto& [name, c] : e.coefficients()) {
            const std::int64_t a = arith::mod(c, m);
            if (a != 0)
                form.emplace_back(name, a);
        }
        std::int64_t r = arith::mod(arith::neg(e.constant_term()), m);
        if (form.empty()) {
            if (r != 0)
                return std::nullopt;
            continue;
        }
        std::int64_t g = m;
        for (const auto& entry : form)
            g = arith::gcd(g, entry.second);
        if (r % g != 0)
            return std::nullopt;
        m /= g;
        r /= g;
        for (auto& entry : form)
            entry.second /= g;
        if (m == 1)
            continue;
        if (arith::gcd(form.front().second, m) == 1) {
            const std::int64_t inv = arith::inverse_mod(form.front().second, m);
            for (auto& entry : form)
                entry.second = arith::mod(arith::mul(entry.second, inv), m);
            r = arith::mod(arith::mul(r, inv), m);
        }
        const auto it = congs.find(form);
        if (it == congs.end()) {
            congs.emplace(std::move(form), arith::Residue{r, m});
        } else {
            const auto merged = arith::combine(it->second, arith::Residue{r, m});
            if (!merged)
                return std::nullopt;
            it->second = *merged;
        }
    }

    for (auto& [form, iv] : bounds)
        if (iv.lo && *iv.lo <= 0 && implicitly_nonnegative(form, scope))
            iv.lo.reset();

    // Single-variable forms: tighten bounds onto the residue class and
    // collapse single points.
    for (auto it = congs.begin(); it != congs.end();) {
        const LinearForm& form = it->first;
        if (form.size() != 1) {
            ++it;
            continue;
        }
        const auto [r, m] = it->second;
        Interval& iv = bounds[form];
        if (iv.lo)
            iv.lo = arith::add(*iv.lo, arith::mod(arith::sub(r, *iv.lo), m));
        if (iv.hi)
            iv.hi = arith::sub(*iv.hi, arith::mod(arith::sub(*iv.hi, r), m));
        std::optional<std::int64_t> eff_lo = iv.lo;
        if (!eff_lo && implicitly_nonnegative(form, scope))
            eff_lo = arith::mod(r, m);
        if (eff_lo && iv.hi) {
            const std::int64_t first = arith::add(*eff_lo, arith::mod(arith::sub(r, *eff_lo), m));
            if (first > *iv.hi)
                return std::nullopt;
            if (first == *iv.hi) {
                if (first == 0 && implicitly_nonnegative(form, scope))
                    iv.lo.reset();
                else
                    iv.lo = first;
                it = congs.erase(it);
                continue;
            }
        }
        ++it;
    }

    Conjunction out;
    for (auto& [form, iv] : bounds) {
        std::optional<std::int64_t> eff_lo = iv.lo;
        if (!eff_lo && implicitly_nonnegative(form, scope))
            eff_lo = 0;
        if (eff_lo && iv.hi && *eff_lo > *iv.hi)
            return std::nullopt;
        if (!iv.lo && !iv.hi)
            continue;
        out.bounds.push_back(Bound{form, iv.lo, iv.hi});
    }
    for (auto& [form, res] : congs)
        out.congruences.push_back(Congruence{form, res.modulus, res.residue});
    return out;
}

bool has_multivariable_atoms(const Conjunction& c)
{
    return std::any_of(c.bounds.begin(), c.bounds.end(), [](const Bound& b) { return b.form.size() > 1; }) ||
           std::any_of(c.congruences.begin(), c.congruences.end(),
                       [](const Congruence& g) { return g.form.size() > 1; });
}

std::optional<Conjunction> normalize(const RawConj& raw, const Scope& scope)
{
    auto c = normalize_core(raw, scope);
    if (!c)
        return std::nullopt;
    if (has_multivariable_atoms(*c) && !satisfiable_by_elimination(*c, scope))
        return std::nullopt;
    return c;
}

namespace {

// Domain constraints are explicit in `raw`, so normalization runs over Int.
bool satisfiable_rec(const RawConj& raw)
{
    static const Scope unconstrained;
    const auto c = normalize_core(raw, unconstrained);
    if (!c)
        return false;
    if (!has_multivariable_atoms(*c))
        return true;

    // Eliminate the variable that occurs in the fewest atoms.
    std::map<std::string, std::size_t> occurrences;
    for (const auto& b : c->bounds)
        if (b.form.size() > 1)
            for (const auto& [name, coeff] : b.form)
                occurrences[name] += (b.lower ? 1 : 0) + (b.upper ? 1 : 0);
    for (const auto& g : c->congruences)
        if (g.form.size() > 1)
            for (const auto& [name, coeff] : g.form)
                ++occurrences[name];
    const auto best = std::min_element(occurrences.begin(), occurrences.end(),
                                       [](const auto& a, const auto& b) { return a.second < b.second; });
    for (const auto& next : cooper_exists(best->first, to_raw(*c)))
        if (satisfiable_rec(next))
            return true;
    return false;
}

} // namespace

bool satisfiable_by_elimination(const Conjunction& c, const Scope& scope)
{
    RawConj raw = to_raw(c);
    for (const auto& name : c.variables()) {
        const auto it = scope.find(name);
        if (it != scope.end() && it->second == SortKind::Nat)
            raw.le.push_back(AffineTerm::variable(name, -1));
    }
    return satisfiable_rec(raw);
}

std::vector<RawConj> negate_atoms(const Conjunction& c)
{
    std::vector<RawConj> out;
    for (const auto& b : c.bounds) {
        const AffineTerm f = term_of(b.form);
        if (b.lower) {
            RawConj r;  // f <= lower - 1
            r.le.push_back(f.plus_constant(arith::neg(arith::sub(*b.lower, 1))));
            out.push_back(std::move(r));
        }
        if (b.upper) {
            RawConj r;  // f >= upper + 1
            r.le.push_back(f.negated().plus_constant(arith::add(*b.upper, 1)));
            out.push_back(std::move(r));
        }
    }
    for (const auto& g : c.congruences) {
        const AffineTerm f = term_of(g.form);
        for (std::int64_t r = 0; r < g.modulus; ++r) {
            if (r == g.residue)
                continue;
            RawConj raw;
            raw.div.emplace_back(g.modulus, f.plus_constant(-r));
            out.push_back(std::move(raw));
        }
    }
    return out;
}

bool conjunction_entails(const Conjunction& a, const Conjunction& b, const Scope& scope)
{
    const RawConj base = to_raw(a);
    for (const auto& negated : negate_atoms(b)) {
        RawConj probe = base;
        probe.append(negated);
        if (normalize(probe, scope))
            return false;
    }
    return true;
}

} // namespace pbes::presburger::detail
