#ifndef UNROLLSEM_PARSER_HPP
#define UNROLLSEM_PARSER_HPP

#include <string>
#include <vector>

#include "unrollsem/ast.hpp"

namespace unrollsem {

// Grammar (canonical wire format):
//
//   program := decl* instr
//   decl    := "var" ID ":" INT ".." INT ";"
//   instr   := choice
//   choice  := seq ("|" seq)*
//   seq     := atom (";" atom)*
//   atom    := "skip" | "fail" | "check" expr "end"
//            | [ID ":"] ID ":=" expr
//            | "if" expr "then" instr ["else" instr] "end"
//            | "until" expr "loop" instr "end"
//            | "repeat" instr "until" expr
//            | "(" instr ")"
//   expr    := or; or := and ("or" and)*; and := cmp ("and" cmp)*
//   cmp     := sum [("="|"/="|"<"|"<="|">"|">=") sum]
//   sum     := prod (("+"|"-") prod)*; prod := unary ("*" unary)*
//   unary   := "not" unary | INT | "true" | "false" | ID | "(" expr ")"
//
// "--" starts a comment running to end of line. Sequencing binds tighter
// than "|". Assignment labels default to L<line>_<col> of the target.
Program parse_program(const std::string& source);

// An instruction in the context of existing declarations (used to read
// emitted unrollings back in).
InstrPtr parse_instr(const std::string& source, const std::vector<VarDomain>& decls);

// "expr" or "at LABEL: expr"; the predicate must be boolean.
TestSpec parse_test(const std::string& text, const VarLayout& layout);

// "x=3,y=0" as a conjunction of equalities; nullptr for an empty string.
ExprPtr parse_input_condition(const std::string& text, const VarLayout& layout);

// A boolean expression over the layout's variables.
ExprPtr parse_condition(const std::string& text, const VarLayout& layout);

}  // namespace unrollsem

#endif
