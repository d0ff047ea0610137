#ifndef UNROLLSEM_UNROLL_HPP
#define UNROLLSEM_UNROLL_HPP

#include <optional>
#include <string>
#include <vector>

#include "unrollsem/eval.hpp"

namespace unrollsem {

// Level set computed along the power route: the executions that reach the
// exit by running the guarded body strictly fewer than `level` times.
// Level 0 is the empty set; level i+1 adds the i-th guarded power.
TraceSet power_unrolling(const ExprPtr& exit_cond, const Instr& body,
                         const StateUniverse& universe, int level,
                         const EvalConfig& cfg = {});

// The same level set along the fixpoint route: level 0 is fail, and each
// next level wraps the body in one more conditional around the previous one.
TraceSet fixpoint_unrolling(const ExprPtr& exit_cond, const Instr& body,
                            const StateUniverse& universe, int level,
                            const EvalConfig& cfg = {});

struct EquivalenceVerdict {
    int level = 0;
    bool equal = false;
    std::size_t power_cardinality = 0;
    std::size_t fixpoint_cardinality = 0;
};

// Compares the two routes level by level for every level <= max_level.
std::vector<EquivalenceVerdict> check_unrolling_equivalence(
    const ExprPtr& exit_cond, const Instr& body, const StateUniverse& universe,
    int max_level, const EvalConfig& cfg = {});

// AST form of the i-unrolling: i nested "if not e then B; ... end" around
// "check False end". Step labels of the body are preserved in every copy,
// so anchored tests keep matching their source instructions.
InstrPtr unroll_instr_level(const ExprPtr& exit_cond, const InstrPtr& body, int level);

// The program with every loop (innermost first) replaced by its
// level-unrolling; repeat-until contributes its leading body run unchanged.
Program unroll_program(const Program& p, int level);

// Canonical label-free source text of the i-unrolling of one loop.
std::string emit_unrolled(const Instr& until_node, int level);
std::string emit_unrolled(const ExprPtr& exit_cond, const InstrPtr& body, int level);

struct MinLevelResult {
    std::optional<int> level;          // absent: not found within fuel
    int fuel = 0;
    bool search_exact = false;         // level sequence saturated within fuel
    std::optional<int> saturated_at;
};

// Smallest level whose set (restricted to the optional initial condition)
// satisfies the test; search stops at cfg.fuel or when the sequence
// saturates. With an exact search and no hit, no unrolling level can ever
// satisfy the test.
MinLevelResult min_unroll_level(const ExprPtr& exit_cond, const Instr& body,
                                const StateUniverse& universe, const TestSpec& test,
                                const EvalConfig& cfg = {}, ExprPtr init = nullptr);

// Uniform-level search over a whole program (the CLI entry point): the
// denotation of the level-unrolled program replaces the single-loop set.
MinLevelResult min_unroll_level(const Program& p, const TestSpec& test,
                                const EvalConfig& cfg = {}, ExprPtr init = nullptr);

struct BugSpec {
    std::string name;
    TestSpec test;
};

struct BugMatrix {
    std::vector<int> levels;                       // strictly increasing
    std::vector<std::string> bug_names;
    std::vector<std::vector<bool>> rows;           // rows[bug][level index]
};

// Satisfaction of each bug's test by the program unrolled uniformly at each
// level. Rows must come out monotone non-decreasing; a violation means the
// unrolling machinery itself is broken and raises ConsistencyError.
BugMatrix bug_matrix(const Program& p, const std::vector<BugSpec>& bugs,
                     std::vector<int> levels, const EvalConfig& cfg = {});

// Exposed for direct testing of the matrix consistency check.
void validate_monotone(const BugMatrix& m);

struct LevelRecord {
    int level = 0;
    std::size_t cardinality = 0;
    std::size_t new_traces = 0;
    bool exact = true;
    bool equivalent = true;  // power route == fixpoint route at this level
};

struct LoopUnrollReport {
    std::string loop_id;
    std::string exit_source;
    std::vector<LevelRecord> levels;
    std::optional<int> saturation_level;
    bool all_equivalent = true;
};

// Per-loop level-by-level report up to max_level.
std::vector<LoopUnrollReport> unroll_report(const Program& p, int max_level,
                                            const EvalConfig& cfg = {});

}  // namespace unrollsem

#endif
