#ifndef UNROLLSEM_AST_HPP
#define UNROLLSEM_AST_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unrollsem/expr.hpp"
#include "unrollsem/trace.hpp"

namespace unrollsem {

enum class InstrKind {
    Skip,
    Fail,
    Check,
    Assign,
    Seq,
    If,
    Choice,
    Until,
    RepeatUntil,
};

struct Instr;
using InstrPtr = std::shared_ptr<const Instr>;

struct Instr {
    InstrKind kind = InstrKind::Skip;
    SourcePos pos;

    ExprPtr cond;                   // Check predicate, If/Until/RepeatUntil condition
    std::string assign_var;         // Assign target
    ExprPtr assign_expr;            // Assign right-hand side
    StepLabel label;                // Assign step label
    bool explicit_label = false;    // label written in source (printed back)
    std::vector<InstrPtr> children; // Seq items; If then/[else]; Choice both;
                                    // Until/RepeatUntil body
};

struct Program {
    std::vector<VarDomain> decls;
    InstrPtr body;
};

// Builders (synthetic positions; assign labels auto-generated when empty).
InstrPtr make_skip();
InstrPtr make_fail();
InstrPtr make_check(ExprPtr cond);
InstrPtr make_assign(std::string var, ExprPtr rhs, std::string label = "",
                     bool explicit_label = false);
InstrPtr make_seq(std::vector<InstrPtr> items);  // flattens nested Seq nodes
InstrPtr make_if(ExprPtr cond, InstrPtr then_branch, InstrPtr else_branch = nullptr);
InstrPtr make_choice(InstrPtr a, InstrPtr b);
InstrPtr make_until(ExprPtr exit_cond, InstrPtr body);
InstrPtr make_repeat_until(InstrPtr body, ExprPtr exit_cond);

// Structural equality; labels on assignments are compared only when
// exact_labels is set (auto-generated labels are positional metadata).
bool instr_equal(const Instr& a, const Instr& b, bool exact_labels = false);
bool program_equal(const Program& a, const Program& b, bool exact_labels = false);

// Static checks: declared variables, expression types, boolean conditions,
// integer assignment right-hand sides, unique step labels, unique
// declarations. Throws ParseError.
void validate(const Program& p);

// A loop occurrence: an Until node, or the Until implied by a RepeatUntil.
struct LoopRef {
    std::string id;       // "until@line:col", or "until#k" for synthetics
    ExprPtr exit_cond;
    InstrPtr body;
};

// Every loop of the program, outermost first, in source order.
std::vector<LoopRef> collect_loops(const Program& p);

}  // namespace unrollsem

#endif
