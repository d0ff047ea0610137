#include "unrollsem/printer.hpp"

namespace unrollsem {

namespace {

void print_instr(const Instr& i, LabelStyle style, std::string& out) {
    switch (i.kind) {
        case InstrKind::Skip:
            out += "skip";
            break;
        case InstrKind::Fail:
            out += "fail";
            break;
        case InstrKind::Check:
            out += "check " + to_source(*i.cond) + " end";
            break;
        case InstrKind::Assign:
            if (style == LabelStyle::Explicit && i.explicit_label)
                out += i.label.id + ": ";
            out += i.assign_var + " := " + to_source(*i.assign_expr);
            break;
        case InstrKind::Seq:
            for (std::size_t k = 0; k < i.children.size(); ++k) {
                if (k) out += "; ";
                print_instr(*i.children[k], style, out);
            }
            break;
        case InstrKind::If:
            out += "if " + to_source(*i.cond) + " then ";
            print_instr(*i.children[0], style, out);
            if (i.children.size() > 1) {
                out += " else ";
                print_instr(*i.children[1], style, out);
            }
            out += " end";
            break;
        case InstrKind::Choice:
            out += "(";
            print_instr(*i.children[0], style, out);
            out += " | ";
            print_instr(*i.children[1], style, out);
            out += ")";
            break;
        case InstrKind::Until:
            out += "until " + to_source(*i.cond) + " loop ";
            print_instr(*i.children[0], style, out);
            out += " end";
            break;
        case InstrKind::RepeatUntil:
            out += "repeat ";
            print_instr(*i.children[0], style, out);
            out += " until " + to_source(*i.cond);
            break;
    }
}

}  // namespace

std::string pretty_instr(const Instr& instr, LabelStyle style) {
    std::string out;
    print_instr(instr, style, out);
    return out;
}

std::string pretty(const Program& p, LabelStyle style) {
    std::string out;
    for (const VarDomain& d : p.decls)
        out += "var " + d.name + ": " + std::to_string(d.lo) + ".." +
               std::to_string(d.hi) + ";\n";
    out += pretty_instr(*p.body, style);
    out += "\n";
    return out;
}

}  // namespace unrollsem
