#include "unrollsem/ast.hpp"

#include <set>

#include "unrollsem/errors.hpp"

namespace unrollsem {

namespace {

InstrPtr node(Instr i) { return std::make_shared<const Instr>(std::move(i)); }

// Fallback labels for programmatically built assignments.
std::string synthetic_label() {
    static thread_local unsigned long long counter = 0;
    return "a" + std::to_string(counter++);
}

}  // namespace

InstrPtr make_skip() {
    Instr i;
    i.kind = InstrKind::Skip;
    return node(std::move(i));
}

InstrPtr make_fail() {
    Instr i;
    i.kind = InstrKind::Fail;
    return node(std::move(i));
}

InstrPtr make_check(ExprPtr cond) {
    Instr i;
    i.kind = InstrKind::Check;
    i.cond = std::move(cond);
    return node(std::move(i));
}

InstrPtr make_assign(std::string var, ExprPtr rhs, std::string label, bool explicit_label) {
    Instr i;
    i.kind = InstrKind::Assign;
    i.assign_var = std::move(var);
    i.assign_expr = std::move(rhs);
    i.label = StepLabel{label.empty() ? synthetic_label() : std::move(label)};
    i.explicit_label = explicit_label;
    return node(std::move(i));
}

InstrPtr make_seq(std::vector<InstrPtr> items) {
    std::vector<InstrPtr> flat;
    for (auto& item : items) {
        if (item->kind == InstrKind::Seq)
            flat.insert(flat.end(), item->children.begin(), item->children.end());
        else
            flat.push_back(std::move(item));
    }
    if (flat.size() == 1) return flat.front();
    Instr i;
    i.kind = InstrKind::Seq;
    i.children = std::move(flat);
    return node(std::move(i));
}

InstrPtr make_if(ExprPtr cond, InstrPtr then_branch, InstrPtr else_branch) {
    Instr i;
    i.kind = InstrKind::If;
    i.cond = std::move(cond);
    i.children.push_back(std::move(then_branch));
    if (else_branch) i.children.push_back(std::move(else_branch));
    return node(std::move(i));
}

InstrPtr make_choice(InstrPtr a, InstrPtr b) {
    Instr i;
    i.kind = InstrKind::Choice;
    i.children = {std::move(a), std::move(b)};
    return node(std::move(i));
}

InstrPtr make_until(ExprPtr exit_cond, InstrPtr body) {
    Instr i;
    i.kind = InstrKind::Until;
    i.cond = std::move(exit_cond);
    i.children.push_back(std::move(body));
    return node(std::move(i));
}

InstrPtr make_repeat_until(InstrPtr body, ExprPtr exit_cond) {
    Instr i;
    i.kind = InstrKind::RepeatUntil;
    i.cond = std::move(exit_cond);
    i.children.push_back(std::move(body));
    return node(std::move(i));
}

bool instr_equal(const Instr& a, const Instr& b, bool exact_labels) {
    if (a.kind != b.kind) return false;
    if ((a.cond == nullptr) != (b.cond == nullptr)) return false;
    if (a.cond && !expr_equal(*a.cond, *b.cond)) return false;
    if (a.kind == InstrKind::Assign) {
        if (a.assign_var != b.assign_var) return false;
        if (!expr_equal(*a.assign_expr, *b.assign_expr)) return false;
        if (a.explicit_label != b.explicit_label) return false;
        if ((exact_labels || a.explicit_label) && a.label != b.label) return false;
    }
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!instr_equal(*a.children[i], *b.children[i], exact_labels)) return false;
    return true;
}

bool program_equal(const Program& a, const Program& b, bool exact_labels) {
    if (a.decls.size() != b.decls.size()) return false;
    for (std::size_t i = 0; i < a.decls.size(); ++i) {
        if (a.decls[i].name != b.decls[i].name || a.decls[i].lo != b.decls[i].lo ||
            a.decls[i].hi != b.decls[i].hi)
            return false;
    }
    return instr_equal(*a.body, *b.body, exact_labels);
}

namespace {

void validate_instr(const Instr& i, const VarLayout& layout, std::set<std::string>& labels) {
    auto require = [&](const ExprPtr& e, ExprType want, const char* what) {
        if (typecheck(*e, layout) != want)
            throw ParseError(std::string(what), e->pos.line ? e->pos.line : i.pos.line,
                             e->pos.col ? e->pos.col : i.pos.col);
    };
    switch (i.kind) {
        case InstrKind::Skip:
        case InstrKind::Fail:
            break;
        case InstrKind::Check:
            require(i.cond, ExprType::Bool, "check needs a boolean condition");
            break;
        case InstrKind::Assign: {
            if (!layout.index_of(i.assign_var))
                throw ParseError("undeclared variable '" + i.assign_var + "'", i.pos.line,
                                 i.pos.col);
            require(i.assign_expr, ExprType::Int,
                    "assignment needs an integer right-hand side");
            if (!labels.insert(i.label.id).second)
                throw ParseError("duplicate step label '" + i.label.id + "'", i.pos.line,
                                 i.pos.col);
            break;
        }
        case InstrKind::If:
        case InstrKind::Until:
        case InstrKind::RepeatUntil:
            require(i.cond, ExprType::Bool, "condition must be boolean");
            break;
        case InstrKind::Seq:
        case InstrKind::Choice:
            break;
    }
    for (const auto& child : i.children) validate_instr(*child, layout, labels);
}

}  // namespace

void validate(const Program& p) {
    std::set<std::string> names;
    for (const VarDomain& d : p.decls) {
        if (!names.insert(d.name).second)
            throw ParseError("duplicate declaration of '" + d.name + "'");
        if (d.lo > d.hi)
            throw ParseError("empty domain " + std::to_string(d.lo) + ".." +
                             std::to_string(d.hi) + " for '" + d.name + "'");
    }
    VarLayout layout(p.decls);
    std::set<std::string> labels;
    validate_instr(*p.body, layout, labels);
}

namespace {

void collect(const InstrPtr& i, std::vector<LoopRef>& out, int& ordinal) {
    if (i->kind == InstrKind::Until || i->kind == InstrKind::RepeatUntil) {
        std::string id = i->pos.line > 0 ? "until@" + std::to_string(i->pos.line) + ":" +
                                               std::to_string(i->pos.col)
                                         : "until#" + std::to_string(ordinal);
        ++ordinal;
        out.push_back(LoopRef{std::move(id), i->cond, i->children.front()});
    }
    for (const auto& child : i->children) collect(child, out, ordinal);
}

}  // namespace

std::vector<LoopRef> collect_loops(const Program& p) {
    std::vector<LoopRef> out;
    int ordinal = 0;
    collect(p.body, out, ordinal);
    return out;
}

}  // namespace unrollsem
