// Cooper's quantifier elimination for a single existential over a
// conjunction of `e <= 0` and `m | e` atoms.
//
// With l the lcm of the coefficients of x, every atom is scaled so x occurs
// with coefficient +-l, and l*x is renamed to x under the side condition
// l | x. Bounds then read x >= t (lower) or x <= u (upper). With delta the
// lcm of the divisibility moduli mentioning x,
//
//   exists x. phi  ==  OR_{t in lowers, 0 <= j < delta} phi[t + j / x]
//
// when there are lower bounds, symmetrically with the upper bounds, and
// OR_{0 <= j < delta} phi_divs[j / x] when x is unbounded on the chosen side.

#include "presburger_internal.hpp"

#include "pbes/error.hpp"

namespace pbes::presburger::detail {

namespace {

bool trivially_false(const RawConj& r)
{
    for (const auto& e : r.le)
        if (e.is_constant() && e.constant_term() > 0)
            return true;
    for (const auto& [m, e] : r.div)
        if (e.is_constant() && arith::mod(e.constant_term(), m) != 0)
            return true;
    return false;
}

constexpr std::int64_t max_instances = 1'000'000;

} // namespace

std::vector<RawConj> cooper_exists(const std::string& var, const RawConj& raw)
{
    RawConj rest;
    std::vector<AffineTerm> with_le;
    std::vector<std::pair<std::int64_t, AffineTerm>> with_div;
    for (const auto& e : raw.le) {
        if (e.mentions(var))
            with_le.push_back(e);
        else
            rest.le.push_back(e);
    }
    for (const auto& d : raw.div) {
        if (d.second.mentions(var))
            with_div.push_back(d);
        else
            rest.div.push_back(d);
    }
    if (with_le.empty() && with_div.empty())
        return {raw};

    // x = value when both e <= 0 and -e <= 0 hold and x has a unit coefficient.
    for (std::size_t i = 0; i < with_le.size(); ++i) {
        const std::int64_t a = with_le[i].coefficient(var);
        if (a != 1 && a != -1)
            continue;
        for (std::size_t j = 0; j < with_le.size(); ++j) {
            if (i == j || !(with_le[i] + with_le[j]).coefficients().empty() ||
                (with_le[i] + with_le[j]).constant_term() != 0)
                continue;
            const Substitution s{{var, with_le[i].without(var).scaled(-a)}};
            RawConj out = raw.substitute(s);
            if (trivially_false(out))
                return {};
            return {out};
        }
    }

    std::int64_t l = 1;
    for (const auto& e : with_le)
        l = arith::lcm(l, e.coefficient(var));
    for (const auto& [m, e] : with_div)
        l = arith::lcm(l, e.coefficient(var));

    std::vector<AffineTerm> lowers;  // x >= t
    std::vector<AffineTerm> uppers;  // x <= u
    std::vector<std::pair<std::int64_t, AffineTerm>> divs;
    for (const auto& e : with_le) {
        const std::int64_t a = e.coefficient(var);
        const AffineTerm scaled = e.without(var).scaled(l / arith::abs(a));
        if (a > 0)
            uppers.push_back(scaled.negated());
        else
            lowers.push_back(scaled);
    }
    for (const auto& [m, e] : with_div) {
        const std::int64_t a = e.coefficient(var);
        const std::int64_t factor = l / arith::abs(a);
        divs.emplace_back(arith::mul(arith::abs(m), factor),
                          AffineTerm::variable(var, a > 0 ? 1 : -1) + e.without(var).scaled(factor));
    }
    if (l > 1)
        divs.emplace_back(l, AffineTerm::variable(var));

    std::int64_t delta = 1;
    for (const auto& d : divs)
        delta = arith::lcm(delta, d.first);

    std::vector<RawConj> results;
    auto instantiate = [&](const AffineTerm& value, bool with_bounds) {
        RawConj r = rest;
        const Substitution s{{var, value}};
        if (with_bounds) {
            for (const auto& t : lowers)
                r.le.push_back(t - value);
            for (const auto& u : uppers)
                r.le.push_back(value - u);
        }
        for (const auto& [m, term] : divs)
            r.div.emplace_back(m, term.substitute(s));
        if (!trivially_false(r))
            results.push_back(std::move(r));
    };

    const bool use_lowers = lowers.size() <= uppers.size();
    const auto& chosen = use_lowers ? lowers : uppers;
    if (arith::mul(delta, std::max<std::int64_t>(1, static_cast<std::int64_t>(chosen.size()))) > max_instances)
        throw ArithmeticOverflow("quantifier elimination instance too large");

    if (chosen.empty()) {
        for (std::int64_t j = 0; j < delta; ++j)
            instantiate(AffineTerm::constant(j), false);
    } else {
        for (const auto& b : chosen)
            for (std::int64_t j = 0; j < delta; ++j)
                instantiate(b.plus_constant(use_lowers ? j : -j), true);
    }
    return results;
}

} // namespace pbes::presburger::detail
