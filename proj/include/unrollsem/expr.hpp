#ifndef UNROLLSEM_EXPR_HPP
#define UNROLLSEM_EXPR_HPP

#include <memory>
#include <string>
#include <variant>

#include "unrollsem/state.hpp"

namespace unrollsem {

// 1-based source position; {0,0} for synthetic nodes.
struct SourcePos {
    int line = 0;
    int col = 0;
};

enum class ExprKind {
    IntLit,
    BoolLit,
    Var,
    Add,
    Sub,
    Mul,
    Eq,
    Ne,
    Lt,
    Le,
    Gt,
    Ge,
    And,
    Or,
    Not,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expression AST node. Integer arithmetic and boolean connectives only:
// no division, so evaluation is total over any state.
struct Expr {
    ExprKind kind = ExprKind::IntLit;
    long long int_value = 0;     // IntLit
    bool bool_value = false;     // BoolLit
    std::string var_name;        // Var
    ExprPtr lhs;                 // binary ops, Not
    ExprPtr rhs;                 // binary ops
    SourcePos pos;
};

// Builders.
ExprPtr int_lit(long long v);
ExprPtr bool_lit(bool v);
ExprPtr var_ref(std::string name);
ExprPtr make_binary(ExprKind k, ExprPtr l, ExprPtr r);
ExprPtr make_not(ExprPtr e);

inline ExprPtr add(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Add, std::move(l), std::move(r)); }
inline ExprPtr sub(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Sub, std::move(l), std::move(r)); }
inline ExprPtr mul(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Mul, std::move(l), std::move(r)); }
inline ExprPtr eq(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Eq, std::move(l), std::move(r)); }
inline ExprPtr ne(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Ne, std::move(l), std::move(r)); }
inline ExprPtr lt(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Lt, std::move(l), std::move(r)); }
inline ExprPtr le(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Le, std::move(l), std::move(r)); }
inline ExprPtr gt(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Gt, std::move(l), std::move(r)); }
inline ExprPtr ge(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Ge, std::move(l), std::move(r)); }
inline ExprPtr land(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::And, std::move(l), std::move(r)); }
inline ExprPtr lor(ExprPtr l, ExprPtr r) { return make_binary(ExprKind::Or, std::move(l), std::move(r)); }
inline ExprPtr lnot(ExprPtr e) { return make_not(std::move(e)); }

enum class ExprType { Int, Bool };

// Static validation: every variable declared, operand types consistent.
// Throws ParseError. Run at parse/validation time, never during evaluation.
ExprType typecheck(const Expr& e, const VarLayout& layout);

// The value of e in state s. Total: typecheck must have passed.
using Value = std::variant<long long, bool>;
Value eval_expr(const State& s, const Expr& e);
long long eval_int(const State& s, const Expr& e);
bool eval_bool(const State& s, const Expr& e);

bool expr_equal(const Expr& a, const Expr& b);

// Canonical source form with minimal parentheses.
std::string to_source(const Expr& e);

}  // namespace unrollsem

#endif
