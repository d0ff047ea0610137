#ifndef UNROLLSEM_PRINTER_HPP
#define UNROLLSEM_PRINTER_HPP

#include <string>

#include "unrollsem/ast.hpp"

namespace unrollsem {

enum class LabelStyle {
    Explicit,  // print labels the source spelled out
    None,      // label-free output (emitted unrollings)
};

// Canonical source: one "var" declaration per line, then the body on a
// single line. parse(pretty(p)) is structurally identical to p.
std::string pretty(const Program& p, LabelStyle style = LabelStyle::Explicit);

std::string pretty_instr(const Instr& instr, LabelStyle style = LabelStyle::Explicit);

}  // namespace unrollsem

#endif
