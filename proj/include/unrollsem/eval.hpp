#ifndef UNROLLSEM_EVAL_HPP
#define UNROLLSEM_EVAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "unrollsem/ast.hpp"
#include "unrollsem/trace_set.hpp"

namespace unrollsem {

struct EvalConfig {
    int fuel = 8;                       // max loop power index
    std::size_t state_cap = kDefaultStateCap;
    std::size_t traceset_cap = 100000;
    bool strict_domain = false;         // error on out-of-domain assignment
};

struct LoopRecord {
    std::string id;
    int fuel = 0;
    std::optional<int> saturated_at;  // first empty power term; nullopt = truncated
};

struct EvalDiagnostics {
    std::size_t dropped_out_of_domain = 0;
    std::vector<LoopRecord> loops;
};

struct DenoteResult {
    TraceSet set;
    EvalDiagnostics diagnostics;
};

// Compositional trace-set denotation of an instruction over a finite
// universe. Loops take the union of their guarded-body powers up to
// cfg.fuel; the result is exact iff some power term at index <= fuel is
// empty (emptiness is absorbing under sequencing).
DenoteResult denote(const Instr& instr, const StateUniverse& universe,
                    const EvalConfig& cfg = {});

DenoteResult denote(const Program& p, const EvalConfig& cfg = {});

// The loop "until exit_cond loop body end" on its own.
TraceSet denote_loop(const ExprPtr& exit_cond, const Instr& body,
                     const StateUniverse& universe, const EvalConfig& cfg = {},
                     EvalDiagnostics* diagnostics = nullptr);

}  // namespace unrollsem

#endif
