// Recursive-descent parser for PBES files, guard formulas and queries.

#include "pbes/pbes.hpp"

#include "pbes/error.hpp"

#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <set>

namespace pbes {

namespace {

enum class Tok {
    Ident,
    Num,
    LParen,
    RParen,
    Comma,
    Colon,
    Semi,
    Dot,
    Star,
    Plus,
    Minus,
    Not,
    And,
    Or,
    Lt,
    Le,
    Eq,
    Ne,
    Ge,
    Gt,
    End,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view src)
{
    std::vector<Token> out;
    std::size_t line = 1;
    std::size_t col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t j = 0; j < n; ++j, ++i) {
            if (src[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
    };
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
            while (i < src.size() && src[i] != '\n')
                advance(1);
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_' ||
                                      src[j] == '\''))
                ++j;
            t.kind = Tok::Ident;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
            out.push_back(std::move(t));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            t.kind = Tok::Num;
            t.text = std::string(src.substr(i, j - i));
            advance(j - i);
            out.push_back(std::move(t));
            continue;
        }
        const std::string_view two = src.substr(i, 2);
        static const std::pair<std::string_view, Tok> pairs[] = {
            {"&&", Tok::And}, {"||", Tok::Or}, {"<=", Tok::Le}, {">=", Tok::Ge}, {"!=", Tok::Ne},
        };
        bool matched = false;
        for (const auto& [s, k] : pairs)
            if (two == s) {
                t.kind = k;
                t.text = std::string(s);
                advance(2);
                matched = true;
                break;
            }
        if (!matched) {
            switch (c) {
            case '(': t.kind = Tok::LParen; break;
            case ')': t.kind = Tok::RParen; break;
            case ',': t.kind = Tok::Comma; break;
            case ':': t.kind = Tok::Colon; break;
            case ';': t.kind = Tok::Semi; break;
            case '.': t.kind = Tok::Dot; break;
            case '*': t.kind = Tok::Star; break;
            case '+': t.kind = Tok::Plus; break;
            case '-': t.kind = Tok::Minus; break;
            case '!': t.kind = Tok::Not; break;
            case '<': t.kind = Tok::Lt; break;
            case '=': t.kind = Tok::Eq; break;
            case '>': t.kind = Tok::Gt; break;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", line, col);
            }
            t.text = std::string(1, c);
            advance(1);
        }
        out.push_back(std::move(t));
    }
    Token end;
    end.line = line;
    end.column = col;
    out.push_back(end);
    return out;
}

bool is_keyword(const std::string& s)
{
    static const std::set<std::string> keywords{"mu", "nu", "pbes", "forall", "exists", "mod",
                                                "true", "false", "Nat", "Int"};
    return keywords.count(s) != 0;
}

// Right-hand side tree before the clause shape is checked.
struct Rhs {
    enum class Kind { Leaf, Call, And, Or, Not, Quant };
    Kind kind = Kind::Leaf;
    Formula leaf;
    std::string callee;
    std::size_t line = 0;
    std::size_t column = 0;
    AffineUpdate args;
    bool forall = false;
    std::string var;
    SortKind var_kind = SortKind::Nat;
    std::shared_ptr<Rhs> a;
    std::shared_ptr<Rhs> b;
};

using RhsPtr = std::shared_ptr<Rhs>;

class Parser {
public:
    explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

    NormalPbes parse_file()
    {
        std::string name;
        if (peek_ident("pbes")) {
            next();
            name = expect_ident("PBES name");
            expect(Tok::Semi, "';'");
        }
        std::vector<RawEquation> raw;
        std::optional<SortKind> kind;
        while (!at(Tok::End)) {
            RawEquation eq = parse_equation();
            for (const auto& [p, k] : eq.param_kinds) {
                if (kind && *kind != k)
                    throw SortMismatch("predicate '" + eq.name + "' mixes Nat and Int parameters with other equations");
                kind = k;
            }
            raw.push_back(std::move(eq));
        }
        if (raw.empty())
            throw SyntaxError("expected an equation", cur().line, cur().column);

        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < raw.size(); ++i)
            if (!index.emplace(raw[i].name, i).second)
                throw SyntaxError("predicate '" + raw[i].name + "' is defined twice", raw[i].line, raw[i].column);

        std::vector<Equation> equations;
        for (auto& r : raw) {
            Equation eq;
            eq.sign = r.sign;
            eq.name = r.name;
            for (const auto& [p, k] : r.param_kinds)
                eq.params.push_back(p);
            for (const auto& rhs : flatten_or(r.rhs))
                eq.clauses.push_back(to_clause(rhs, index, r.name));
            equations.push_back(std::move(eq));
        }
        return NormalPbes::create(*kind, std::move(equations), std::move(name));
    }

    Formula parse_standalone(const std::vector<std::string>& params, SortKind kind)
    {
        bound_.clear();
        for (const auto& p : params)
            params_.emplace(p, kind);
        RhsPtr r = parse_or();
        if (!at(Tok::End))
            throw SyntaxError("unexpected '" + cur().text + "'", cur().line, cur().column);
        return to_guard(r);
    }

    std::pair<std::string, std::vector<std::int64_t>> parse_query()
    {
        std::string name = expect_ident("predicate name");
        expect(Tok::LParen, "'('");
        std::vector<std::int64_t> values;
        do {
            bool negative = false;
            if (at(Tok::Minus)) {
                next();
                negative = true;
            }
            const Token& t = expect(Tok::Num, "integer");
            std::int64_t v = to_number(t);
            values.push_back(negative ? -v : v);
        } while (accept(Tok::Comma));
        expect(Tok::RParen, "')'");
        if (!at(Tok::End))
            throw SyntaxError("unexpected '" + cur().text + "'", cur().line, cur().column);
        return {std::move(name), std::move(values)};
    }

private:
    struct RawEquation {
        Sign sign = Sign::Nu;
        std::string name;
        std::size_t line = 0;
        std::size_t column = 0;
        std::vector<std::pair<std::string, SortKind>> param_kinds;
        RhsPtr rhs;
    };

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    std::map<std::string, SortKind> params_;
    std::set<std::string> bound_;

    const Token& cur() const { return toks_[pos_]; }
    bool at(Tok k) const { return cur().kind == k; }
    bool peek_ident(std::string_view s) const { return at(Tok::Ident) && cur().text == s; }
    const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

    bool accept(Tok k)
    {
        if (!at(k))
            return false;
        next();
        return true;
    }

    [[noreturn]] void fail(const std::string& expected) const
    {
        const std::string found = at(Tok::End) ? "end of input" : "'" + cur().text + "'";
        throw SyntaxError("expected " + expected + ", found " + found, cur().line, cur().column);
    }

    const Token& expect(Tok k, const std::string& what)
    {
        if (!at(k))
            fail(what);
        return next();
    }

    std::string expect_ident(const std::string& what)
    {
        if (!at(Tok::Ident) || is_keyword(cur().text))
            fail(what);
        return next().text;
    }

    static std::int64_t to_number(const Token& t)
    {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc{})
            throw SyntaxError("integer literal out of range", t.line, t.column);
        return v;
    }

    SortKind parse_sort_kind()
    {
        if (peek_ident("Nat")) {
            next();
            return SortKind::Nat;
        }
        if (peek_ident("Int")) {
            next();
            return SortKind::Int;
        }
        fail("'Nat' or 'Int'");
    }

    RawEquation parse_equation()
    {
        RawEquation eq;
        if (peek_ident("mu"))
            eq.sign = Sign::Mu;
        else if (peek_ident("nu"))
            eq.sign = Sign::Nu;
        else
            fail("'mu' or 'nu'");
        next();
        eq.line = cur().line;
        eq.column = cur().column;
        eq.name = expect_ident("predicate name");
        expect(Tok::LParen, "'('");
        params_.clear();
        bound_.clear();
        do {
            const Token& t = cur();
            std::string p = expect_ident("parameter name");
            expect(Tok::Colon, "':'");
            SortKind k = parse_sort_kind();
            if (!params_.emplace(p, k).second)
                throw SyntaxError("parameter '" + p + "' declared twice", t.line, t.column);
            eq.param_kinds.emplace_back(std::move(p), k);
        } while (accept(Tok::Comma));
        std::optional<SortKind> kind;
        for (const auto& [p, k] : eq.param_kinds) {
            if (kind && *kind != k)
                throw SortMismatch("predicate '" + eq.name + "' mixes Nat and Int parameters");
            kind = k;
        }
        expect(Tok::RParen, "')'");
        expect(Tok::Eq, "'='");
        eq.rhs = parse_or();
        expect(Tok::Semi, "';'");
        return eq;
    }

    RhsPtr node(Rhs::Kind k, RhsPtr a, RhsPtr b = nullptr)
    {
        auto n = std::make_shared<Rhs>();
        n->kind = k;
        n->a = std::move(a);
        n->b = std::move(b);
        return n;
    }

    RhsPtr leaf(Formula f)
    {
        auto n = std::make_shared<Rhs>();
        n->leaf = std::move(f);
        return n;
    }

    RhsPtr parse_or()
    {
        RhsPtr lhs = parse_and();
        while (accept(Tok::Or))
            lhs = node(Rhs::Kind::Or, lhs, parse_and());
        return lhs;
    }

    RhsPtr parse_and()
    {
        RhsPtr lhs = parse_unary();
        while (accept(Tok::And))
            lhs = node(Rhs::Kind::And, lhs, parse_unary());
        return lhs;
    }

    RhsPtr parse_unary()
    {
        if (accept(Tok::Not))
            return node(Rhs::Kind::Not, parse_unary());
        if (accept(Tok::LParen)) {
            RhsPtr inner = parse_or();
            expect(Tok::RParen, "')'");
            return inner;
        }
        if (peek_ident("true")) {
            next();
            return leaf(Formula::truth());
        }
        if (peek_ident("false")) {
            next();
            return leaf(Formula::falsity());
        }
        if (peek_ident("forall") || peek_ident("exists")) {
            const bool forall = cur().text == "forall";
            next();
            const Token& t = cur();
            std::string var = expect_ident("bound variable");
            if (params_.count(var) != 0 || bound_.count(var) != 0)
                throw SyntaxError("bound variable '" + var + "' shadows another variable", t.line, t.column);
            expect(Tok::Colon, "':'");
            SortKind k = parse_sort_kind();
            expect(Tok::Dot, "'.'");
            bound_.insert(var);
            RhsPtr body = parse_or();
            bound_.erase(var);
            auto n = node(Rhs::Kind::Quant, body);
            n->forall = forall;
            n->var = std::move(var);
            n->var_kind = k;
            return n;
        }
        if (at(Tok::Ident) && !is_keyword(cur().text) && toks_[pos_ + 1].kind == Tok::LParen &&
            params_.count(cur().text) == 0 && bound_.count(cur().text) == 0) {
            auto n = std::make_shared<Rhs>();
            n->kind = Rhs::Kind::Call;
            n->line = cur().line;
            n->column = cur().column;
            n->callee = next().text;
            expect(Tok::LParen, "'('");
            do {
                n->args.push_back(parse_affine(false));
            } while (accept(Tok::Comma));
            expect(Tok::RParen, "')'");
            return n;
        }
        return leaf(parse_atom());
    }

    Formula parse_atom()
    {
        AffineTerm lhs = parse_affine(true);
        if (peek_ident("mod")) {
            next();
            const Token& mt = expect(Tok::Num, "modulus");
            const std::int64_t m = to_number(mt);
            if (m < 2)
                throw SyntaxError("modulus must be at least 2", mt.line, mt.column);
            const CmpOp op = parse_cmp();
            bool negative = accept(Tok::Minus);
            const Token& rt = expect(Tok::Num, "residue");
            std::int64_t r = to_number(rt);
            if (negative)
                r = -r;
            if (op == CmpOp::Eq) {
                if (r < 0 || r >= m)
                    throw SyntaxError("residue must lie in [0, modulus)", rt.line, rt.column);
                return Formula::congruence(std::move(lhs), m, r);
            }
            // `t mod m op r` as a disjunction over the residues satisfying op.
            std::optional<Formula> out;
            for (std::int64_t v = 0; v < m; ++v) {
                if (!Formula::compare(AffineTerm::constant(v - r), op).evaluate_ground({}))
                    continue;
                Formula atom = Formula::congruence(lhs, m, v);
                out = out ? Formula::disj(*out, std::move(atom)) : std::move(atom);
            }
            return out ? *out : Formula::falsity();
        }
        const CmpOp op = parse_cmp();
        AffineTerm rhs = parse_affine(true);
        return Formula::compare(lhs, op, rhs);
    }

    CmpOp parse_cmp()
    {
        switch (cur().kind) {
        case Tok::Lt: next(); return CmpOp::Lt;
        case Tok::Le: next(); return CmpOp::Le;
        case Tok::Eq: next(); return CmpOp::Eq;
        case Tok::Ne: next(); return CmpOp::Ne;
        case Tok::Ge: next(); return CmpOp::Ge;
        case Tok::Gt: next(); return CmpOp::Gt;
        default: fail("comparison operator");
        }
    }

    AffineTerm parse_affine(bool allow_bound)
    {
        AffineTerm out;
        bool first = true;
        while (true) {
            bool negative = false;
            if (first) {
                negative = accept(Tok::Minus);
            } else if (accept(Tok::Minus)) {
                negative = true;
            } else if (!accept(Tok::Plus)) {
                break;
            }
            first = false;
            AffineTerm t = parse_affine_atom(allow_bound);
            out += negative ? t.negated() : t;
        }
        return out;
    }

    AffineTerm parse_affine_atom(bool allow_bound)
    {
        if (at(Tok::Num)) {
            const std::int64_t v = to_number(next());
            if (accept(Tok::Star))
                return AffineTerm::variable(variable_name(allow_bound), v);
            return AffineTerm::constant(v);
        }
        return AffineTerm::variable(variable_name(allow_bound));
    }

    std::string variable_name(bool allow_bound)
    {
        const Token& t = cur();
        if (!at(Tok::Ident) || is_keyword(t.text))
            fail("number or variable");
        next();
        if (params_.count(t.text) == 0 && !(allow_bound && bound_.count(t.text) != 0)) {
            if (at(Tok::Star))
                throw SyntaxError("non-linear term", cur().line, cur().column);
            throw NotClosed("unknown variable '" + t.text + "' at " + std::to_string(t.line) + ":" +
                            std::to_string(t.column));
        }
        if (at(Tok::Star))
            throw SyntaxError("non-linear term", cur().line, cur().column);
        return t.text;
    }

    static std::vector<RhsPtr> flatten_or(const RhsPtr& r)
    {
        if (r->kind != Rhs::Kind::Or)
            return {r};
        auto out = flatten_or(r->a);
        auto rest = flatten_or(r->b);
        out.insert(out.end(), rest.begin(), rest.end());
        return out;
    }

    static bool has_call(const RhsPtr& r)
    {
        if (!r)
            return false;
        return r->kind == Rhs::Kind::Call || has_call(r->a) || has_call(r->b);
    }

    static Formula to_guard(const RhsPtr& r)
    {
        switch (r->kind) {
        case Rhs::Kind::Leaf: return r->leaf;
        case Rhs::Kind::Call: throw NotDisjunctive("predicate call '" + r->callee + "' inside a guard");
        case Rhs::Kind::And: return Formula::conj(to_guard(r->a), to_guard(r->b));
        case Rhs::Kind::Or: return Formula::disj(to_guard(r->a), to_guard(r->b));
        case Rhs::Kind::Not: return Formula::negation(to_guard(r->a));
        case Rhs::Kind::Quant:
            return r->forall ? Formula::forall(r->var, r->var_kind, to_guard(r->a))
                             : Formula::exists(r->var, r->var_kind, to_guard(r->a));
        }
        return Formula::falsity();
    }

    static Clause to_clause(const RhsPtr& r, const std::map<std::string, std::size_t>& index, const std::string& eq)
    {
        if (r->kind != Rhs::Kind::And || r->b->kind != Rhs::Kind::Call) {
            if (has_call(r) && r->kind == Rhs::Kind::Call)
                throw NotDisjunctive("clause of '" + eq + "' has no guard; write 'true && " + r->callee + "(...)'");
            throw NotDisjunctive("clause of '" + eq + "' is not of the form 'guard && call'");
        }
        if (has_call(r->a))
            throw NotDisjunctive("clause of '" + eq + "' has more than one predicate call");
        const auto it = index.find(r->b->callee);
        if (it == index.end())
            throw NotClosed("unknown predicate '" + r->b->callee + "' at " + std::to_string(r->b->line) + ":" +
                            std::to_string(r->b->column));
        return Clause{to_guard(r->a), it->second, r->b->args};
    }
};

} // namespace

NormalPbes parse_pbes(std::string_view text)
{
    return Parser(text).parse_file();
}

Formula parse_formula(std::string_view text, const std::vector<std::string>& params, SortKind kind)
{
    return Parser(text).parse_standalone(params, kind);
}

SigElement parse_query(const NormalPbes& pbes, std::string_view text)
{
    auto [name, values] = Parser(text).parse_query();
    const auto index = pbes.find(name);
    if (!index)
        throw NotClosed("unknown predicate '" + name + "'");
    pbes.check_value(values);
    return SigElement{*index, std::move(values)};
}

} // namespace pbes
