#ifndef UNROLLSEM_TESTS_ORACLE_INTERP_HPP
#define UNROLLSEM_TESTS_ORACLE_INTERP_HPP

#include <vector>

#include "unrollsem/ast.hpp"
#include "unrollsem/trace_set.hpp"

// Direct-simulation interpreter used as an independent oracle: it executes
// instructions state by state, branching on nondeterminism, with a budget of
// body runs per loop. It never touches the trace-set algebra or the
// denotational engine.
namespace oracle {

// Every run of the instruction starting at s. Loops may take at most
// loop_budget body runs per activation; runs needing more are dropped.
std::vector<unrollsem::Trace> runs_from(const unrollsem::Instr& instr,
                                        const unrollsem::State& s, int loop_budget);

// Every run from every start state, as a canonical set.
unrollsem::TraceSet all_runs(const unrollsem::Instr& instr,
                             const unrollsem::StateUniverse& universe, int loop_budget);

}  // namespace oracle

#endif
