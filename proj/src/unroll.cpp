#include "unrollsem/unroll.hpp"

#include <algorithm>

#include "unrollsem/errors.hpp"
#include "unrollsem/printer.hpp"

namespace unrollsem {

namespace {

// Incremental computation of the power-route level sets:
//   levels_0 = fail,  levels_{i+1} = levels_i  U  (guarded^i \ e)
// where guarded = (not e) / B. The running power term makes each advance one
// sequencing step; once a term comes up empty every later one is empty too.
class LevelSequence {
public:
    LevelSequence(const ExprPtr& exit_cond, const Instr& body, const StateUniverse& universe,
                  const EvalConfig& cfg)
        : exit_cond_(exit_cond),
          cfg_(cfg),
          guarded_(restrict_set(lnot(exit_cond), denote(body, universe, cfg).set)),
          term_(skip_over(universe)),
          levels_(fail_set()) {}

    int level() const { return level_; }
    const TraceSet& levels() const { return levels_; }
    std::optional<int> saturated_at() const { return saturated_at_; }

    void advance() {
        if (saturated_at_) {
            ++level_;
            return;
        }
        levels_ = set_union(levels_, corestrict_set(term_, exit_cond_));
        term_ = seq(guarded_, term_, cfg_.traceset_cap);
        if (term_.empty()) saturated_at_ = level_ + 1;
        ++level_;
    }

private:
    ExprPtr exit_cond_;
    const EvalConfig& cfg_;
    TraceSet guarded_;
    TraceSet term_;
    TraceSet levels_;
    int level_ = 0;
    std::optional<int> saturated_at_;
};

}  // namespace

TraceSet power_unrolling(const ExprPtr& exit_cond, const Instr& body,
                         const StateUniverse& universe, int level, const EvalConfig& cfg) {
    LevelSequence seq_state(exit_cond, body, universe, cfg);
    for (int i = 0; i < level; ++i) seq_state.advance();
    return seq_state.levels();
}

TraceSet fixpoint_unrolling(const ExprPtr& exit_cond, const Instr& body,
                            const StateUniverse& universe, int level, const EvalConfig& cfg) {
    TraceSet body_set = denote(body, universe, cfg).set;
    TraceSet exit_now = restrict_set(exit_cond, skip_over(universe));
    ExprPtr guard = lnot(exit_cond);
    TraceSet acc = fail_set();
    for (int i = 0; i < level; ++i)
        acc = set_union(exit_now, restrict_set(guard, seq(body_set, acc, cfg.traceset_cap)));
    return acc;
}

std::vector<EquivalenceVerdict> check_unrolling_equivalence(const ExprPtr& exit_cond,
                                                            const Instr& body,
                                                            const StateUniverse& universe,
                                                            int max_level,
                                                            const EvalConfig& cfg) {
    std::vector<EquivalenceVerdict> out;
    LevelSequence power_route(exit_cond, body, universe, cfg);
    for (int i = 0; i <= max_level; ++i) {
        TraceSet fix_route = fixpoint_unrolling(exit_cond, body, universe, i, cfg);
        out.push_back(EquivalenceVerdict{i, set_eq(power_route.levels(), fix_route),
                                         power_route.levels().size(), fix_route.size()});
        power_route.advance();
    }
    return out;
}

InstrPtr unroll_instr_level(const ExprPtr& exit_cond, const InstrPtr& body, int level) {
    InstrPtr acc = make_check(bool_lit(false));
    for (int i = 0; i < level; ++i)
        acc = make_if(lnot(exit_cond), make_seq({body, acc}));
    return acc;
}

namespace {

InstrPtr unroll_rec(const InstrPtr& i, int level) {
    switch (i->kind) {
        case InstrKind::Until:
            return unroll_instr_level(i->cond, unroll_rec(i->children[0], level), level);
        case InstrKind::RepeatUntil: {
            InstrPtr body = unroll_rec(i->children[0], level);
            return make_seq({body, unroll_instr_level(i->cond, body, level)});
        }
        default: {
            if (i->children.empty()) return i;
            Instr copy = *i;
            for (auto& child : copy.children) child = unroll_rec(child, level);
            return std::make_shared<const Instr>(std::move(copy));
        }
    }
}

}  // namespace

Program unroll_program(const Program& p, int level) {
    return Program{p.decls, unroll_rec(p.body, level)};
}

std::string emit_unrolled(const ExprPtr& exit_cond, const InstrPtr& body, int level) {
    return pretty_instr(*unroll_instr_level(exit_cond, body, level), LabelStyle::None);
}

std::string emit_unrolled(const Instr& until_node, int level) {
    if (until_node.kind != InstrKind::Until && until_node.kind != InstrKind::RepeatUntil)
        throw Error("emit_unrolled expects a loop node");
    return emit_unrolled(until_node.cond, until_node.children[0], level);
}

MinLevelResult min_unroll_level(const ExprPtr& exit_cond, const Instr& body,
                                const StateUniverse& universe, const TestSpec& test,
                                const EvalConfig& cfg, ExprPtr init) {
    LevelSequence seq_state(exit_cond, body, universe, cfg);
    for (int i = 0; i <= cfg.fuel; ++i) {
        if (i > 0) seq_state.advance();
        TraceSet candidate =
            init ? restrict_set(init, seq_state.levels()) : seq_state.levels();
        if (tests_set(candidate, test))
            return MinLevelResult{i, cfg.fuel, true, seq_state.saturated_at()};
        // Once saturated the level sets stop growing: no later level can hit.
        if (seq_state.saturated_at() && *seq_state.saturated_at() <= i)
            return MinLevelResult{std::nullopt, cfg.fuel, true, seq_state.saturated_at()};
    }
    return MinLevelResult{std::nullopt, cfg.fuel, seq_state.saturated_at().has_value(),
                          seq_state.saturated_at()};
}

MinLevelResult min_unroll_level(const Program& p, const TestSpec& test,
                                const EvalConfig& cfg, ExprPtr init) {
    if (collect_loops(p).empty()) throw Error("program has no loop to unroll");
    if (p.body->kind == InstrKind::Until) {
        StateUniverse universe = state_space(p.decls, cfg.state_cap);
        return min_unroll_level(p.body->cond, *p.body->children[0], universe, test, cfg,
                                std::move(init));
    }
    // Uniform level over every loop of a composite program.
    DenoteResult full = denote(p, cfg);
    for (int i = 0; i <= cfg.fuel; ++i) {
        TraceSet level_set = denote(unroll_program(p, i), cfg).set;
        TraceSet candidate = init ? restrict_set(init, level_set) : level_set;
        if (tests_set(candidate, test))
            return MinLevelResult{i, cfg.fuel, true, std::nullopt};
    }
    return MinLevelResult{std::nullopt, cfg.fuel, full.set.exact(), std::nullopt};
}

void validate_monotone(const BugMatrix& m) {
    for (std::size_t b = 0; b < m.rows.size(); ++b)
        for (std::size_t l = 1; l < m.rows[b].size(); ++l)
            if (m.rows[b][l - 1] && !m.rows[b][l])
                throw ConsistencyError("bug '" + m.bug_names[b] +
                                       "' satisfied at level " +
                                       std::to_string(m.levels[l - 1]) +
                                       " but not at level " + std::to_string(m.levels[l]) +
                                       ": unrolling lost traces");
}

BugMatrix bug_matrix(const Program& p, const std::vector<BugSpec>& bugs,
                     std::vector<int> levels, const EvalConfig& cfg) {
    if (collect_loops(p).empty()) throw Error("program has no loop to unroll");
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    BugMatrix m;
    m.levels = levels;
    for (const BugSpec& bug : bugs) m.bug_names.push_back(bug.name);
    m.rows.assign(bugs.size(), std::vector<bool>(levels.size(), false));

    for (std::size_t l = 0; l < levels.size(); ++l) {
        TraceSet level_set = denote(unroll_program(p, levels[l]), cfg).set;
        for (std::size_t b = 0; b < bugs.size(); ++b)
            m.rows[b][l] = tests_set(level_set, bugs[b].test);
    }
    validate_monotone(m);
    return m;
}

std::vector<LoopUnrollReport> unroll_report(const Program& p, int max_level,
                                            const EvalConfig& cfg) {
    StateUniverse universe = state_space(p.decls, cfg.state_cap);
    std::vector<LoopUnrollReport> out;
    for (const LoopRef& loop : collect_loops(p)) {
        LoopUnrollReport report;
        report.loop_id = loop.id;
        report.exit_source = to_source(*loop.exit_cond);

        LevelSequence power_route(loop.exit_cond, *loop.body, universe, cfg);
        std::size_t previous = 0;
        for (int i = 0; i <= max_level; ++i) {
            if (i > 0) power_route.advance();
            TraceSet fix_route = fixpoint_unrolling(loop.exit_cond, *loop.body, universe, i, cfg);
            LevelRecord rec;
            rec.level = i;
            rec.cardinality = power_route.levels().size();
            rec.new_traces = rec.cardinality - previous;
            rec.exact = power_route.levels().exact();
            rec.equivalent = set_eq(power_route.levels(), fix_route);
            report.all_equivalent = report.all_equivalent && rec.equivalent;
            report.levels.push_back(rec);
            previous = rec.cardinality;
        }
        report.saturation_level = power_route.saturated_at();
        out.push_back(std::move(report));
    }
    return out;
}

}  // namespace unrollsem
