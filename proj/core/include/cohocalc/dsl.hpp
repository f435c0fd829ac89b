#pragma once

#include "cohocalc/rational.hpp"
#include "cohocalc/report.hpp"

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cohocalc {

struct SourcePos {
    int line = 1;
    int col = 1;
};

/// Expression tree for polynomial formulas and builtin calls.
struct Expr {
    enum class Kind { number, ident, call, pow, neg, add, sub, mul };
    Kind kind = Kind::number;
    SourcePos pos;
    Rational number;           // number
    std::string name;          // ident, call
    std::vector<Expr> args;    // call arguments or operands
    int exponent = 1;          // pow
};

/// Product of generator powers, e.g. zeta^2*theta^2*rho.
struct MonomialLit {
    SourcePos pos;
    std::vector<std::pair<std::string, int>> factors;
};

struct GenStmt {
    SourcePos pos;
    std::string name;
    int degree = 2;
};
struct RelStmt {
    SourcePos pos;
    MonomialLit lhs;
    Expr rhs;
};
struct TopStmt {
    SourcePos pos;
    int value = 0;
};
struct IntegralStmt {
    SourcePos pos;
    MonomialLit lhs;
    Rational value;
};
struct SpaceStmt {
    SourcePos pos;
    std::string builder;
    std::vector<long long> args;
};
struct LetStmt {
    SourcePos pos;
    std::string name;
    Expr value;
};
enum class EvalKind { integrate, normal, coeff };
struct EvalStmt {
    SourcePos pos;
    EvalKind kind = EvalKind::integrate;
    MonomialLit coeff_monomial;  // coeff only
    Expr arg;
};

using Statement =
    std::variant<GenStmt, RelStmt, TopStmt, IntegralStmt, SpaceStmt, LetStmt, EvalStmt>;

struct DslProgram {
    std::vector<Statement> statements;

    std::size_t count_gens() const;
    std::size_t count_rels() const;
    std::size_t count_integrals() const;
    std::size_t count_evals() const;
};

/// Parses a program; throws SyntaxError / DegreeMismatch with line and
/// column on malformed input.
DslProgram parse(std::string_view text);

/// Canonical printer; parse(print(parse(t))) equals parse(t).
std::string print_program(const DslProgram& p);
std::string print_expr(const Expr& e);

/// Builds the declared ring (or space), evaluates the statements in order
/// and returns one report step per eval statement. Kernel errors are
/// rethrown with the statement's location.
Report eval_program(const DslProgram& p, std::string scenario_name = "eval");

} // namespace cohocalc
