#include "cohocalc/dsl.hpp"

#include "cohocalc/errors.hpp"
#include "cohocalc/grr_lambda.hpp"
#include "cohocalc/mukai.hpp"
#include "cohocalc/ring.hpp"
#include "cohocalc/spaces.hpp"
#include "cohocalc/verlinde.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <sstream>

namespace cohocalc {

namespace {

// --- lexer -------------------------------------------------------------------

enum class Tok { ident, number, punct, eof };

struct Token {
    Tok kind = Tok::eof;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_ws();
        Token t;
        t.pos = {line_, col_};
        if (eof()) {
            t.kind = Tok::eof;
            return t;
        }
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Tok::ident;
            while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
                t.text += take();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::number;
            while (!eof() && std::isdigit(static_cast<unsigned char>(peek())))
                t.text += take();
            return t;
        }
        static const std::string punct = ":;=()^*+-/[],";
        if (punct.find(c) != std::string::npos) {
            t.kind = Tok::punct;
            t.text = take();
            return t;
        }
        throw SyntaxError("a token", line_, col_);
    }

private:
    bool eof() const { return i_ >= text_.size(); }
    char peek() const { return text_[i_]; }
    char take() {
        char c = text_[i_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (!eof()) {
            char c = peek();
            if (c == '#') {
                while (!eof() && peek() != '\n')
                    take();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                take();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t i_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// --- parser ------------------------------------------------------------------

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) { advance(); }

    DslProgram parse_program() {
        DslProgram p;
        while (cur_.kind != Tok::eof)
            p.statements.push_back(parse_statement());
        return p;
    }

private:
    void advance() { cur_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& expected) const {
        throw SyntaxError(expected, cur_.pos.line, cur_.pos.col);
    }

    bool is_punct(std::string_view s) const { return cur_.kind == Tok::punct && cur_.text == s; }

    void expect_punct(std::string_view s) {
        if (!is_punct(s))
            fail("'" + std::string(s) + "'");
        advance();
    }

    std::string expect_ident() {
        if (cur_.kind != Tok::ident)
            fail("an identifier");
        std::string s = cur_.text;
        advance();
        return s;
    }

    long long expect_uint() {
        if (cur_.kind != Tok::number)
            fail("an integer");
        long long v = std::stoll(cur_.text);
        advance();
        return v;
    }

    long long expect_int() {
        bool neg = false;
        if (is_punct("-")) {
            neg = true;
            advance();
        }
        long long v = expect_uint();
        return neg ? -v : v;
    }

    Rational expect_rational() {
        SourcePos pos = cur_.pos;
        long long num = expect_int();
        if (is_punct("/")) {
            advance();
            long long den = expect_uint();
            if (den == 0)
                throw SyntaxError("a nonzero denominator", pos.line, pos.col);
            return Rational(num, den);
        }
        return Rational(num);
    }

    MonomialLit parse_monomial() {
        MonomialLit m;
        m.pos = cur_.pos;
        while (true) {
            std::string name = expect_ident();
            int e = 1;
            if (is_punct("^")) {
                advance();
                e = static_cast<int>(expect_uint());
            }
            m.factors.emplace_back(std::move(name), e);
            if (!is_punct("*"))
                break;
            advance();
        }
        return m;
    }

    Statement parse_statement() {
        if (cur_.kind != Tok::ident)
            fail("a statement keyword");
        SourcePos pos = cur_.pos;
        std::string kw = cur_.text;
        if (kw == "gen") {
            advance();
            GenStmt s;
            s.pos = pos;
            s.name = expect_ident();
            expect_punct(":");
            SourcePos dpos = cur_.pos;
            s.degree = static_cast<int>(expect_uint());
            if (s.degree <= 0 || s.degree % 2 != 0)
                throw DegreeMismatch("generator degree must be a positive even integer",
                                     dpos.line, dpos.col);
            expect_punct(";");
            return s;
        }
        if (kw == "rel") {
            advance();
            RelStmt s;
            s.pos = pos;
            s.lhs = parse_monomial();
            expect_punct("=");
            s.rhs = parse_poly();
            expect_punct(";");
            return s;
        }
        if (kw == "top") {
            advance();
            TopStmt s;
            s.pos = pos;
            s.value = static_cast<int>(expect_uint());
            expect_punct(";");
            return s;
        }
        if (kw == "integral") {
            advance();
            IntegralStmt s;
            s.pos = pos;
            s.lhs = parse_monomial();
            expect_punct("=");
            s.value = expect_rational();
            expect_punct(";");
            return s;
        }
        if (kw == "space") {
            advance();
            SpaceStmt s;
            s.pos = pos;
            s.builder = expect_ident();
            expect_punct("(");
            if (!is_punct(")")) {
                s.args.push_back(expect_int());
                while (is_punct(",") || is_punct(";")) {
                    advance();
                    s.args.push_back(expect_int());
                }
            }
            expect_punct(")");
            expect_punct(";");
            return s;
        }
        if (kw == "let") {
            advance();
            LetStmt s;
            s.pos = pos;
            s.name = expect_ident();
            expect_punct("=");
            s.value = parse_poly();
            expect_punct(";");
            return s;
        }
        if (kw == "eval") {
            advance();
            EvalStmt s;
            s.pos = pos;
            std::string mode = expect_ident();
            if (mode == "integrate") {
                s.kind = EvalKind::integrate;
            } else if (mode == "normal") {
                s.kind = EvalKind::normal;
            } else if (mode == "coeff") {
                s.kind = EvalKind::coeff;
                expect_punct("[");
                s.coeff_monomial = parse_monomial();
                expect_punct("]");
            } else {
                throw SyntaxError("'integrate', 'normal' or 'coeff'", pos.line, pos.col);
            }
            expect_punct("(");
            s.arg = parse_poly();
            expect_punct(")");
            expect_punct(";");
            return s;
        }
        fail("a statement keyword (gen, rel, top, integral, space, let, eval)");
    }

    // poly := ["-"] term (("+"|"-") term)*
    Expr parse_poly() {
        SourcePos pos = cur_.pos;
        Expr lhs;
        if (is_punct("-")) {
            advance();
            lhs.kind = Expr::Kind::neg;
            lhs.pos = pos;
            lhs.args.push_back(parse_term());
        } else {
            lhs = parse_term();
        }
        while (is_punct("+") || is_punct("-")) {
            Expr node;
            node.kind = cur_.text == "+" ? Expr::Kind::add : Expr::Kind::sub;
            node.pos = cur_.pos;
            advance();
            node.args.push_back(std::move(lhs));
            node.args.push_back(parse_term());
            lhs = std::move(node);
        }
        return lhs;
    }

    // term := atom ("*" atom)*
    Expr parse_term() {
        Expr lhs = parse_atom();
        while (is_punct("*")) {
            Expr node;
            node.kind = Expr::Kind::mul;
            node.pos = cur_.pos;
            advance();
            node.args.push_back(std::move(lhs));
            node.args.push_back(parse_atom());
            lhs = std::move(node);
        }
        return lhs;
    }

    // atom := rational | IDENT [call] ["^" INT] | "(" poly ")" ["^" INT]
    Expr parse_atom() {
        SourcePos pos = cur_.pos;
        if (cur_.kind == Tok::number) {
            Expr e;
            e.kind = Expr::Kind::number;
            e.pos = pos;
            e.number = expect_rational();
            return e;
        }
        if (cur_.kind == Tok::ident) {
            Expr e;
            e.pos = pos;
            e.name = expect_ident();
            if (is_punct("(")) {
                e.kind = Expr::Kind::call;
                advance();
                if (!is_punct(")")) {
                    e.args.push_back(parse_poly());
                    while (is_punct(",") || is_punct(";")) {
                        advance();
                        e.args.push_back(parse_poly());
                    }
                }
                expect_punct(")");
            } else {
                e.kind = Expr::Kind::ident;
            }
            return parse_power_suffix(std::move(e));
        }
        if (is_punct("(")) {
            advance();
            Expr inner = parse_poly();
            expect_punct(")");
            return parse_power_suffix(std::move(inner));
        }
        fail("a number, identifier or '('");
    }

    Expr parse_power_suffix(Expr base) {
        if (!is_punct("^"))
            return base;
        Expr e;
        e.kind = Expr::Kind::pow;
        e.pos = cur_.pos;
        advance();
        e.exponent = static_cast<int>(expect_uint());
        e.args.push_back(std::move(base));
        return e;
    }

    Lexer lexer_;
    Token cur_;
};

// --- printer -----------------------------------------------------------------

// Precedence: add/sub 1, mul 2, neg 1 (head position), pow/atom 3.
void print_expr_rec(std::ostream& os, const Expr& e, int parent_prec) {
    switch (e.kind) {
    case Expr::Kind::number:
        os << e.number.str();
        return;
    case Expr::Kind::ident:
        os << e.name;
        return;
    case Expr::Kind::call: {
        os << e.name << "(";
        for (std::size_t i = 0; i < e.args.size(); ++i) {
            if (i)
                os << ", ";
            print_expr_rec(os, e.args[i], 0);
        }
        os << ")";
        return;
    }
    case Expr::Kind::pow: {
        const Expr& base = e.args[0];
        bool parens = base.kind != Expr::Kind::ident && base.kind != Expr::Kind::number &&
                      base.kind != Expr::Kind::call;
        if (parens)
            os << "(";
        print_expr_rec(os, base, parens ? 0 : 3);
        if (parens)
            os << ")";
        os << "^" << e.exponent;
        return;
    }
    case Expr::Kind::neg: {
        bool parens = parent_prec > 1;
        if (parens)
            os << "(";
        os << "-";
        print_expr_rec(os, e.args[0], 2);
        if (parens)
            os << ")";
        return;
    }
    case Expr::Kind::add:
    case Expr::Kind::sub: {
        bool parens = parent_prec > 1;
        if (parens)
            os << "(";
        print_expr_rec(os, e.args[0], 1);
        os << (e.kind == Expr::Kind::add ? " + " : " - ");
        print_expr_rec(os, e.args[1], 2);
        if (parens)
            os << ")";
        return;
    }
    case Expr::Kind::mul: {
        bool parens = parent_prec > 2;
        if (parens)
            os << "(";
        print_expr_rec(os, e.args[0], 2);
        os << "*";
        print_expr_rec(os, e.args[1], 3);
        if (parens)
            os << ")";
        return;
    }
    }
}

std::string print_monomial_lit(const MonomialLit& m) {
    std::string s;
    for (std::size_t i = 0; i < m.factors.size(); ++i) {
        if (i)
            s += "*";
        s += m.factors[i].first;
        if (m.factors[i].second != 1)
            s += "^" + std::to_string(m.factors[i].second);
    }
    return s;
}

// --- evaluator ---------------------------------------------------------------

struct Value {
    std::variant<Rational, Element, MukaiVector, CurveKClass> v;

    bool is_rational() const { return std::holds_alternative<Rational>(v); }
    bool is_element() const { return std::holds_alternative<Element>(v); }
};

std::string value_str(const Value& val) {
    if (auto* r = std::get_if<Rational>(&val.v))
        return r->str();
    if (auto* e = std::get_if<Element>(&val.v))
        return e->str();
    if (auto* m = std::get_if<MukaiVector>(&val.v)) {
        return "(" + std::to_string(m->r) + "," + std::to_string(m->m) + "," +
               std::to_string(m->s) + ";H2=" + std::to_string(m->H2) + ")";
    }
    const CurveKClass& k = std::get<CurveKClass>(val.v);
    return "(" + std::to_string(k.r) + "," + std::to_string(k.d) + ")";
}

long long to_integer(const Value& val, const SourcePos& pos) {
    const Rational* r = std::get_if<Rational>(&val.v);
    if (!r || !r->is_integer())
        throw EvalTypeError("expected an integer argument", pos.line, pos.col);
    return r->numerator().convert_to<long long>();
}

class Evaluator {
public:
    Report run(const DslProgram& p, std::string scenario_name) {
        Report rep;
        rep.scenario = std::move(scenario_name);
        for (const Statement& stmt : p.statements) {
            last_pos_ = std::visit([](const auto& s) { return s.pos; }, stmt);
            std::visit([&](const auto& s) { handle(s, rep); }, stmt);
        }
        // A declared ring is validated even when nothing is evaluated.
        if (!ring_ && saw_ring_stmt_)
            finalize_ring(last_pos_);
        return rep;
    }

private:
    // ring under construction
    std::vector<Generator> gens_;
    std::vector<std::pair<MonomialLit, Expr>> rels_;
    std::vector<std::pair<MonomialLit, Rational>> integrals_;
    int top_ = 0;
    bool saw_ring_stmt_ = false;

    SpacePtr space_;
    RingPtr ring_;
    SourcePos last_pos_;
    std::map<std::string, Value, std::less<>> lets_;

    void handle(const GenStmt& s, Report&) {
        require_open(s.pos, "gen");
        for (const Generator& g : gens_)
            if (g.name == s.name)
                throw DslError("duplicate generator '" + s.name + "'", s.pos.line, s.pos.col);
        gens_.push_back({s.name, s.degree, 0});
        saw_ring_stmt_ = true;
    }

    void handle(const RelStmt& s, Report&) {
        require_open(s.pos, "rel");
        rels_.emplace_back(s.lhs, s.rhs);
        saw_ring_stmt_ = true;
    }

    void handle(const TopStmt& s, Report&) {
        require_open(s.pos, "top");
        top_ = s.value;
        saw_ring_stmt_ = true;
    }

    void handle(const IntegralStmt& s, Report&) {
        require_open(s.pos, "integral");
        integrals_.emplace_back(s.lhs, s.value);
        saw_ring_stmt_ = true;
    }

    void handle(const SpaceStmt& s, Report&) {
        if (saw_ring_stmt_)
            throw DslError("cannot mix 'space' with explicit ring statements", s.pos.line,
                           s.pos.col);
        if (space_ || ring_)
            throw DslError("the ring is already fixed", s.pos.line, s.pos.col);
        auto argc = [&](std::size_t lo, std::size_t hi) {
            if (s.args.size() < lo || s.args.size() > hi)
                throw DslError("wrong number of arguments to space " + s.builder, s.pos.line,
                               s.pos.col);
        };
        try {
            if (s.builder == "abelian") {
                argc(1, 1);
                space_ = abelian_ring(static_cast<int>(s.args[0]));
            } else if (s.builder == "curve") {
                argc(1, 1);
                space_ = curve_even_ring(static_cast<int>(s.args[0]));
            } else if (s.builder == "jac_x_curve") {
                argc(2, 3);
                bool with_mu = s.args.size() == 3 && s.args[2] != 0;
                space_ = jac_x_curve_ring(static_cast<int>(s.args[0]),
                                          static_cast<int>(s.args[1]), with_mu);
            } else if (s.builder == "wbar") {
                argc(0, 0);
                space_ = wbar_ring();
            } else {
                throw UnknownIdentifier("unknown space builder '" + s.builder + "'", s.pos.line,
                                        s.pos.col);
            }
        } catch (const DslError&) {
            throw;
        } catch (const Error& e) {
            throw DslError(e.what(), s.pos.line, s.pos.col);
        }
        ring_ = space_->ring;
    }

    void handle(const LetStmt& s, Report&) {
        finalize_ring(s.pos);
        if (lets_.count(s.name))
            throw DslError("duplicate let binding '" + s.name + "'", s.pos.line, s.pos.col);
        lets_.emplace(s.name, eval_expr(s.value));
    }

    void handle(const EvalStmt& s, Report& rep) {
        finalize_ring(s.pos);
        Value val = eval_expr(s.arg);
        std::string label;
        std::string computed;
        try {
            switch (s.kind) {
            case EvalKind::integrate: {
                label = "integrate(" + print_expr(s.arg) + ")";
                const Element* e = std::get_if<Element>(&val.v);
                if (!e)
                    throw EvalTypeError("integrate expects a ring element", s.pos.line,
                                        s.pos.col);
                computed = integrate(*e).str();
                break;
            }
            case EvalKind::normal: {
                label = "normal(" + print_expr(s.arg) + ")";
                if (auto* e = std::get_if<Element>(&val.v))
                    computed = normalize(*e).str();
                else
                    computed = value_str(val);
                break;
            }
            case EvalKind::coeff: {
                label = "coeff[" + print_monomial_lit(s.coeff_monomial) + "](" +
                        print_expr(s.arg) + ")";
                const Element* e = std::get_if<Element>(&val.v);
                if (!e)
                    throw EvalTypeError("coeff expects a ring element", s.pos.line, s.pos.col);
                Element c = *e;
                for (const auto& [name, exp] : s.coeff_monomial.factors)
                    c = coeff_of(c, name, exp);
                computed = normalize(c).str();
                break;
            }
            }
        } catch (const DslError&) {
            throw;
        } catch (const Error& e) {
            throw DslError(e.what(), s.pos.line, s.pos.col);
        }
        rep.add({label, computed, computed, "", Verdict::pass});
    }

    void require_open(const SourcePos& pos, const std::string& what) {
        if (space_)
            throw DslError("'" + what + "' cannot follow a 'space' statement", pos.line, pos.col);
        if (ring_)
            throw DslError("'" + what + "' must precede the first let/eval", pos.line, pos.col);
    }

    Monomial resolve_monomial(const MonomialLit& lit) const {
        Monomial m(gens_.size());
        for (const auto& [name, exp] : lit.factors) {
            int idx = -1;
            for (std::size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i].name == name)
                    idx = static_cast<int>(i);
            if (idx < 0)
                throw UnknownIdentifier("unknown generator '" + name + "'", lit.pos.line,
                                        lit.pos.col);
            m.set_exp(static_cast<std::size_t>(idx), m.exp(static_cast<std::size_t>(idx)) + exp);
        }
        return m;
    }

    int raw_degree(const Monomial& m) const {
        int d = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            d += m.exp(i) * gens_[i].degree;
        return d;
    }

    // Polynomial over the generators of the not-yet-built ring; only
    // generator identifiers, numbers and + - * ^ are allowed here.
    TermMap eval_raw_poly(const Expr& e) const {
        switch (e.kind) {
        case Expr::Kind::number:
            if (e.number.is_zero())
                return {};
            return {{Monomial(gens_.size()), e.number}};
        case Expr::Kind::ident: {
            MonomialLit lit;
            lit.pos = e.pos;
            lit.factors.emplace_back(e.name, 1);
            return {{resolve_monomial(lit), Rational(1)}};
        }
        case Expr::Kind::call:
            throw EvalTypeError("calls are not allowed in relations", e.pos.line, e.pos.col);
        case Expr::Kind::pow: {
            TermMap base = eval_raw_poly(e.args[0]);
            TermMap acc{{Monomial(gens_.size()), Rational(1)}};
            for (int i = 0; i < e.exponent; ++i)
                acc = raw_mul(acc, base);
            return acc;
        }
        case Expr::Kind::neg: {
            TermMap t = eval_raw_poly(e.args[0]);
            for (auto& [m, c] : t)
                c = -c;
            return t;
        }
        case Expr::Kind::add:
        case Expr::Kind::sub: {
            TermMap a = eval_raw_poly(e.args[0]);
            TermMap b = eval_raw_poly(e.args[1]);
            for (const auto& [m, c] : b) {
                Rational v = e.kind == Expr::Kind::add ? c : -c;
                auto [it, inserted] = a.emplace(m, v);
                if (!inserted) {
                    it->second += v;
                    if (it->second.is_zero())
                        a.erase(it);
                }
            }
            return a;
        }
        case Expr::Kind::mul:
            return raw_mul(eval_raw_poly(e.args[0]), eval_raw_poly(e.args[1]));
        }
        return {};
    }

    static TermMap raw_mul(const TermMap& a, const TermMap& b) {
        TermMap out;
        for (const auto& [ma, ca] : a)
            for (const auto& [mb, cb] : b) {
                Monomial m = ma.times(mb);
                auto [it, inserted] = out.emplace(m, ca * cb);
                if (!inserted) {
                    it->second += ca * cb;
                    if (it->second.is_zero())
                        out.erase(it);
                }
            }
        return out;
    }

    void finalize_ring(const SourcePos& pos) {
        if (ring_)
            return;
        std::vector<RewriteRule> rules;
        for (const auto& [lit, rhs] : rels_) {
            RewriteRule r;
            r.lhs = resolve_monomial(lit);
            r.rhs = eval_raw_poly(rhs);
            int lhs_deg = raw_degree(r.lhs);
            for (const auto& [m, c] : r.rhs)
                if (raw_degree(m) != lhs_deg)
                    throw DegreeMismatch("relation is not degree-homogeneous", lit.pos.line,
                                         lit.pos.col);
            rules.push_back(std::move(r));
        }
        TermMap ints;
        for (const auto& [lit, value] : integrals_)
            ints.emplace(resolve_monomial(lit), value);
        try {
            ring_ = make_ring(gens_, std::move(rules), top_, std::move(ints));
        } catch (const Error& e) {
            throw DslError(e.what(), pos.line, pos.col);
        }
    }

    Value lookup(const std::string& name, const SourcePos& pos) const {
        auto it = lets_.find(name);
        if (it != lets_.end())
            return it->second;
        if (space_) {
            auto nit = space_->named.find(name);
            if (nit != space_->named.end())
                return Value{nit->second};
        }
        if (ring_ && ring_->generator_index(name) >= 0)
            return Value{ring_->generator_element(name)};
        throw UnknownIdentifier("unknown identifier '" + name + "'", pos.line, pos.col);
    }

    Value call_builtin(const Expr& e) {
        const auto& a = e.args;
        auto want = [&](std::size_t n) {
            if (a.size() != n)
                throw EvalTypeError(e.name + " expects " + std::to_string(n) + " arguments",
                                    e.pos.line, e.pos.col);
        };
        try {
            if (e.name == "mukai") {
                want(4);
                return Value{MukaiVector{to_integer(eval_expr(a[0]), e.pos),
                                         to_integer(eval_expr(a[1]), e.pos),
                                         to_integer(eval_expr(a[2]), e.pos),
                                         static_cast<int>(to_integer(eval_expr(a[3]), e.pos))}};
            }
            if (e.name == "chi_k3" || e.name == "bb" || e.name == "mukai_pairing") {
                want(2);
                Value x = eval_expr(a[0]);
                Value y = eval_expr(a[1]);
                auto* mx = std::get_if<MukaiVector>(&x.v);
                auto* my = std::get_if<MukaiVector>(&y.v);
                if (!mx || !my)
                    throw EvalTypeError(e.name + " expects Mukai vectors", e.pos.line, e.pos.col);
                long long r = e.name == "chi_k3"   ? chi_k3(*mx, *my)
                              : e.name == "bb"     ? bb_pairing(*mx, *my)
                                                   : mukai_pairing(*mx, *my);
                return Value{Rational(r)};
            }
            if (e.name == "restrict") {
                want(2);
                Value x = eval_expr(a[0]);
                auto* mx = std::get_if<MukaiVector>(&x.v);
                if (!mx)
                    throw EvalTypeError("restrict expects a Mukai vector", e.pos.line, e.pos.col);
                return Value{restrict_to_curve(*mx, static_cast<int>(to_integer(eval_expr(a[1]),
                                                                                e.pos)))};
            }
            if (e.name == "bernoulli") {
                want(1);
                return Value{bernoulli(static_cast<int>(to_integer(eval_expr(a[0]), e.pos)))};
            }
            if (e.name == "verlinde2") {
                want(1);
                return Value{theta_top_rank2(static_cast<int>(to_integer(eval_expr(a[0]),
                                                                         e.pos)))};
            }
            if (e.name == "lambda_closed" || e.name == "lambda_grr") {
                want(4);
                int g = static_cast<int>(to_integer(eval_expr(a[0]), e.pos));
                int k = static_cast<int>(to_integer(eval_expr(a[1]), e.pos));
                KClass x{to_integer(eval_expr(a[2]), e.pos), to_integer(eval_expr(a[3]), e.pos)};
                LambdaResult r =
                    e.name == "lambda_closed" ? lambda_closed(g, k, x) : lambda_grr(g, k, x);
                return Value{r.value};
            }
        } catch (const DslError&) {
            throw;
        } catch (const Error& err) {
            throw DslError(err.what(), e.pos.line, e.pos.col);
        }
        throw UnknownIdentifier("unknown function '" + e.name + "'", e.pos.line, e.pos.col);
    }

    Value eval_expr(const Expr& e) {
        switch (e.kind) {
        case Expr::Kind::number:
            return Value{e.number};
        case Expr::Kind::ident:
            return lookup(e.name, e.pos);
        case Expr::Kind::call:
            return call_builtin(e);
        case Expr::Kind::pow: {
            Value base = eval_expr(e.args[0]);
            try {
                if (auto* r = std::get_if<Rational>(&base.v))
                    return Value{r->pow(e.exponent)};
                if (auto* el = std::get_if<Element>(&base.v))
                    return Value{pow(*el, static_cast<unsigned>(e.exponent))};
            } catch (const Error& err) {
                throw DslError(err.what(), e.pos.line, e.pos.col);
            }
            throw EvalTypeError("cannot exponentiate this value", e.pos.line, e.pos.col);
        }
        case Expr::Kind::neg: {
            Value v = eval_expr(e.args[0]);
            if (auto* r = std::get_if<Rational>(&v.v))
                return Value{-*r};
            if (auto* el = std::get_if<Element>(&v.v))
                return Value{-*el};
            throw EvalTypeError("cannot negate this value", e.pos.line, e.pos.col);
        }
        case Expr::Kind::add:
        case Expr::Kind::sub:
        case Expr::Kind::mul:
            return binary(e);
        }
        throw EvalTypeError("malformed expression", e.pos.line, e.pos.col);
    }

    Value binary(const Expr& e) {
        Value lhs = eval_expr(e.args[0]);
        Value rhs = eval_expr(e.args[1]);
        auto* lr = std::get_if<Rational>(&lhs.v);
        auto* rr = std::get_if<Rational>(&rhs.v);
        auto* le = std::get_if<Element>(&lhs.v);
        auto* re = std::get_if<Element>(&rhs.v);
        try {
            if (e.kind == Expr::Kind::mul) {
                if (lr && rr)
                    return Value{*lr * *rr};
                if (lr && re)
                    return Value{*lr * *re};
                if (le && rr)
                    return Value{*rr * *le};
                if (le && re)
                    return Value{mul(*le, *re)};
            } else {
                bool add = e.kind == Expr::Kind::add;
                if (lr && rr)
                    return Value{add ? *lr + *rr : *lr - *rr};
                if (le && re)
                    return Value{add ? *le + *re : *le - *re};
                // scalar +- element: lift the scalar to a constant element
                if (lr && re) {
                    Element c = *lr * re->ring()->one();
                    return Value{add ? c + *re : c - *re};
                }
                if (le && rr) {
                    Element c = *rr * le->ring()->one();
                    return Value{add ? *le + c : *le - c};
                }
            }
        } catch (const Error& err) {
            throw DslError(err.what(), e.pos.line, e.pos.col);
        }
        throw EvalTypeError("operands cannot be combined", e.pos.line, e.pos.col);
    }
};

} // namespace

std::size_t DslProgram::count_gens() const {
    std::size_t n = 0;
    for (const auto& s : statements)
        n += std::holds_alternative<GenStmt>(s);
    return n;
}
std::size_t DslProgram::count_rels() const {
    std::size_t n = 0;
    for (const auto& s : statements)
        n += std::holds_alternative<RelStmt>(s);
    return n;
}
std::size_t DslProgram::count_integrals() const {
    std::size_t n = 0;
    for (const auto& s : statements)
        n += std::holds_alternative<IntegralStmt>(s);
    return n;
}
std::size_t DslProgram::count_evals() const {
    std::size_t n = 0;
    for (const auto& s : statements)
        n += std::holds_alternative<EvalStmt>(s);
    return n;
}

DslProgram parse(std::string_view text) {
    return Parser(text).parse_program();
}

std::string print_expr(const Expr& e) {
    std::ostringstream os;
    print_expr_rec(os, e, 0);
    return os.str();
}

std::string print_program(const DslProgram& p) {
    std::ostringstream os;
    for (const Statement& stmt : p.statements) {
        std::visit(
            [&](const auto& s) {
                using T = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<T, GenStmt>) {
                    os << "gen " << s.name << ": " << s.degree << ";\n";
                } else if constexpr (std::is_same_v<T, RelStmt>) {
                    os << "rel " << print_monomial_lit(s.lhs) << " = " << print_expr(s.rhs)
                       << ";\n";
                } else if constexpr (std::is_same_v<T, TopStmt>) {
                    os << "top " << s.value << ";\n";
                } else if constexpr (std::is_same_v<T, IntegralStmt>) {
                    os << "integral " << print_monomial_lit(s.lhs) << " = " << s.value.str()
                       << ";\n";
                } else if constexpr (std::is_same_v<T, SpaceStmt>) {
                    os << "space " << s.builder << "(";
                    for (std::size_t i = 0; i < s.args.size(); ++i)
                        os << (i ? ", " : "") << s.args[i];
                    os << ");\n";
                } else if constexpr (std::is_same_v<T, LetStmt>) {
                    os << "let " << s.name << " = " << print_expr(s.value) << ";\n";
                } else if constexpr (std::is_same_v<T, EvalStmt>) {
                    os << "eval ";
                    switch (s.kind) {
                    case EvalKind::integrate: os << "integrate"; break;
                    case EvalKind::normal: os << "normal"; break;
                    case EvalKind::coeff:
                        os << "coeff[" << print_monomial_lit(s.coeff_monomial) << "]";
                        break;
                    }
                    os << "(" << print_expr(s.arg) << ");\n";
                }
            },
            stmt);
    }
    return os.str();
}

Report eval_program(const DslProgram& p, std::string scenario_name) {
    return Evaluator().run(p, std::move(scenario_name));
}

} // namespace cohocalc
