#include "unrollsem/expr.hpp"

#include <cassert>

#include "unrollsem/errors.hpp"

namespace unrollsem {

namespace {

ExprPtr node(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

}  // namespace

ExprPtr int_lit(long long v) {
    Expr e;
    e.kind = ExprKind::IntLit;
    e.int_value = v;
    return node(std::move(e));
}

ExprPtr bool_lit(bool v) {
    Expr e;
    e.kind = ExprKind::BoolLit;
    e.bool_value = v;
    return node(std::move(e));
}

ExprPtr var_ref(std::string name) {
    Expr e;
    e.kind = ExprKind::Var;
    e.var_name = std::move(name);
    return node(std::move(e));
}

ExprPtr make_binary(ExprKind k, ExprPtr l, ExprPtr r) {
    Expr e;
    e.kind = k;
    e.lhs = std::move(l);
    e.rhs = std::move(r);
    return node(std::move(e));
}

ExprPtr make_not(ExprPtr operand) {
    Expr e;
    e.kind = ExprKind::Not;
    e.lhs = std::move(operand);
    return node(std::move(e));
}

ExprType typecheck(const Expr& e, const VarLayout& layout) {
    auto require = [&](const Expr& sub, ExprType want, const char* what) {
        if (typecheck(sub, layout) != want)
            throw ParseError(std::string(what) + " in '" + to_source(e) + "'",
                             e.pos.line, e.pos.col);
    };
    switch (e.kind) {
        case ExprKind::IntLit:
            return ExprType::Int;
        case ExprKind::BoolLit:
            return ExprType::Bool;
        case ExprKind::Var:
            if (!layout.index_of(e.var_name))
                throw ParseError("undeclared variable '" + e.var_name + "'",
                                 e.pos.line, e.pos.col);
            return ExprType::Int;
        case ExprKind::Add:
        case ExprKind::Sub:
        case ExprKind::Mul:
            require(*e.lhs, ExprType::Int, "arithmetic needs integer operands");
            require(*e.rhs, ExprType::Int, "arithmetic needs integer operands");
            return ExprType::Int;
        case ExprKind::Eq:
        case ExprKind::Ne:
        case ExprKind::Lt:
        case ExprKind::Le:
        case ExprKind::Gt:
        case ExprKind::Ge:
            require(*e.lhs, ExprType::Int, "comparison needs integer operands");
            require(*e.rhs, ExprType::Int, "comparison needs integer operands");
            return ExprType::Bool;
        case ExprKind::And:
        case ExprKind::Or:
            require(*e.lhs, ExprType::Bool, "connective needs boolean operands");
            require(*e.rhs, ExprType::Bool, "connective needs boolean operands");
            return ExprType::Bool;
        case ExprKind::Not:
            require(*e.lhs, ExprType::Bool, "'not' needs a boolean operand");
            return ExprType::Bool;
    }
    throw Error("unreachable expression kind");
}

Value eval_expr(const State& s, const Expr& e) {
    switch (e.kind) {
        case ExprKind::IntLit:
            return e.int_value;
        case ExprKind::BoolLit:
            return e.bool_value;
        case ExprKind::Var: {
            auto idx = s.layout()->index_of(e.var_name);
            assert(idx && "evaluation after successful typecheck");
            return s.value(*idx);
        }
        case ExprKind::Add:
            return eval_int(s, *e.lhs) + eval_int(s, *e.rhs);
        case ExprKind::Sub:
            return eval_int(s, *e.lhs) - eval_int(s, *e.rhs);
        case ExprKind::Mul:
            return eval_int(s, *e.lhs) * eval_int(s, *e.rhs);
        case ExprKind::Eq:
            return eval_int(s, *e.lhs) == eval_int(s, *e.rhs);
        case ExprKind::Ne:
            return eval_int(s, *e.lhs) != eval_int(s, *e.rhs);
        case ExprKind::Lt:
            return eval_int(s, *e.lhs) < eval_int(s, *e.rhs);
        case ExprKind::Le:
            return eval_int(s, *e.lhs) <= eval_int(s, *e.rhs);
        case ExprKind::Gt:
            return eval_int(s, *e.lhs) > eval_int(s, *e.rhs);
        case ExprKind::Ge:
            return eval_int(s, *e.lhs) >= eval_int(s, *e.rhs);
        case ExprKind::And:
            return eval_bool(s, *e.lhs) && eval_bool(s, *e.rhs);
        case ExprKind::Or:
            return eval_bool(s, *e.lhs) || eval_bool(s, *e.rhs);
        case ExprKind::Not:
            return !eval_bool(s, *e.lhs);
    }
    throw Error("unreachable expression kind");
}

long long eval_int(const State& s, const Expr& e) {
    Value v = eval_expr(s, e);
    assert(std::holds_alternative<long long>(v));
    return std::get<long long>(v);
}

bool eval_bool(const State& s, const Expr& e) {
    Value v = eval_expr(s, e);
    assert(std::holds_alternative<bool>(v));
    return std::get<bool>(v);
}

bool expr_equal(const Expr& a, const Expr& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case ExprKind::IntLit:
            return a.int_value == b.int_value;
        case ExprKind::BoolLit:
            return a.bool_value == b.bool_value;
        case ExprKind::Var:
            return a.var_name == b.var_name;
        case ExprKind::Not:
            return expr_equal(*a.lhs, *b.lhs);
        default:
            return expr_equal(*a.lhs, *b.lhs) && expr_equal(*a.rhs, *b.rhs);
    }
}

namespace {

// Binding strength, loosest to tightest.
int precedence(ExprKind k) {
    switch (k) {
        case ExprKind::Or: return 1;
        case ExprKind::And: return 2;
        case ExprKind::Eq:
        case ExprKind::Ne:
        case ExprKind::Lt:
        case ExprKind::Le:
        case ExprKind::Gt:
        case ExprKind::Ge: return 3;
        case ExprKind::Add:
        case ExprKind::Sub: return 4;
        case ExprKind::Mul: return 5;
        case ExprKind::Not: return 6;
        default: return 7;
    }
}

const char* op_text(ExprKind k) {
    switch (k) {
        case ExprKind::Add: return "+";
        case ExprKind::Sub: return "-";
        case ExprKind::Mul: return "*";
        case ExprKind::Eq: return "=";
        case ExprKind::Ne: return "/=";
        case ExprKind::Lt: return "<";
        case ExprKind::Le: return "<=";
        case ExprKind::Gt: return ">";
        case ExprKind::Ge: return ">=";
        case ExprKind::And: return "and";
        case ExprKind::Or: return "or";
        default: return "?";
    }
}

void print(const Expr& e, int wanted, std::string& out) {
    int prec = precedence(e.kind);
    bool parens = prec < wanted;
    if (parens) out += "(";
    switch (e.kind) {
        case ExprKind::IntLit:
            out += std::to_string(e.int_value);
            break;
        case ExprKind::BoolLit:
            out += e.bool_value ? "True" : "False";
            break;
        case ExprKind::Var:
            out += e.var_name;
            break;
        case ExprKind::Not:
            out += "not ";
            print(*e.lhs, 7, out);  // operand parenthesized unless atomic
            break;
        default:
            // Left-associative chains print flat; right operands one level up.
            print(*e.lhs, prec, out);
            out += " ";
            out += op_text(e.kind);
            out += " ";
            print(*e.rhs, prec + 1, out);
            break;
    }
    if (parens) out += ")";
}

}  // namespace

std::string to_source(const Expr& e) {
    std::string out;
    print(e, 0, out);
    return out;
}

}  // namespace unrollsem
