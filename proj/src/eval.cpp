#include "unrollsem/eval.hpp"

#include "unrollsem/errors.hpp"

namespace unrollsem {

namespace {

class Evaluator {
public:
    Evaluator(const StateUniverse& universe, const EvalConfig& cfg)
        : universe_(universe), cfg_(cfg) {}

    EvalDiagnostics& diagnostics() { return diagnostics_; }

    TraceSet eval(const Instr& i) {
        switch (i.kind) {
            case InstrKind::Skip:
                return skip_over(universe_);
            case InstrKind::Fail:
                return fail_set();
            case InstrKind::Check:
                return restrict_set(i.cond, skip_over(universe_));
            case InstrKind::Assign:
                return eval_assign(i);
            case InstrKind::Seq: {
                TraceSet acc = skip_over(universe_);
                for (const auto& child : i.children)
                    acc = capped(seq(acc, eval(*child), cfg_.traceset_cap));
                return acc;
            }
            case InstrKind::If: {
                TraceSet then_set = restrict_set(i.cond, eval(*i.children[0]));
                ExprPtr negated = lnot(i.cond);
                TraceSet else_set =
                    i.children.size() > 1
                        ? restrict_set(negated, eval(*i.children[1]))
                        : restrict_set(negated, skip_over(universe_));
                return capped(set_union(else_set, then_set));
            }
            case InstrKind::Choice:
                return capped(set_union(eval(*i.children[0]), eval(*i.children[1])));
            case InstrKind::Until:
                return eval_loop(loop_id(i), i.cond, *i.children[0]);
            case InstrKind::RepeatUntil: {
                // repeat B until e  ==  B; until e loop B end
                TraceSet first = eval(*i.children[0]);
                TraceSet rest = eval_loop(loop_id(i), i.cond, *i.children[0]);
                return capped(seq(first, rest, cfg_.traceset_cap));
            }
        }
        throw Error("unreachable instruction kind");
    }

    TraceSet eval_loop(std::string id, const ExprPtr& exit_cond, const Instr& body) {
        // union over i <= fuel of ((not e / B)^i \ e), exact iff some power
        // term at index <= fuel is empty.
        ExprPtr guard = lnot(exit_cond);
        TraceSet guarded_body = restrict_set(guard, eval(body));
        TraceSet acc = fail_set();
        std::optional<int> saturated_at;
        for (int i = 0; i <= cfg_.fuel; ++i) {
            TraceSet term = power(guarded_body, i, universe_, cfg_.traceset_cap);
            if (term.empty()) {
                saturated_at = i;
                break;
            }
            acc = capped(set_union(acc, corestrict_set(term, exit_cond)));
        }
        if (!saturated_at)
            acc = acc.with_flag(merge_flags(acc.truncated_fuel(), cfg_.fuel));
        diagnostics_.loops.push_back(LoopRecord{std::move(id), cfg_.fuel, saturated_at});
        return acc;
    }

private:
    TraceSet eval_assign(const Instr& i) {
        auto idx = universe_.layout()->index_of(i.assign_var);
        if (!idx) throw Error("undeclared variable '" + i.assign_var + "'");
        const VarDomain& domain = universe_.layout()->var(*idx);
        std::vector<Trace> traces;
        traces.reserve(universe_.size());
        for (const State& s : universe_.states()) {
            long long v = eval_int(s, *i.assign_expr);
            if (v < domain.lo || v > domain.hi) {
                if (cfg_.strict_domain)
                    throw DomainError("assignment " + i.assign_var + " := " +
                                      to_source(*i.assign_expr) + " leaves " +
                                      std::to_string(v) + " outside " +
                                      std::to_string(domain.lo) + ".." +
                                      std::to_string(domain.hi));
                ++diagnostics_.dropped_out_of_domain;
                continue;
            }
            traces.push_back(Trace({s, s.with_value(*idx, v)}, {i.label}));
        }
        return TraceSet::from_traces(std::move(traces));
    }

    TraceSet capped(TraceSet s) const {
        if (s.size() > cfg_.traceset_cap)
            throw ResourceError("trace set of " + std::to_string(s.size()) +
                                " traces exceeds the cap of " +
                                std::to_string(cfg_.traceset_cap));
        return s;
    }

    std::string loop_id(const Instr& i) {
        if (i.pos.line > 0)
            return "until@" + std::to_string(i.pos.line) + ":" + std::to_string(i.pos.col);
        return "until#" + std::to_string(synthetic_loop_ordinal_++);
    }

    const StateUniverse& universe_;
    const EvalConfig& cfg_;
    EvalDiagnostics diagnostics_;
    int synthetic_loop_ordinal_ = 0;
};

}  // namespace

DenoteResult denote(const Instr& instr, const StateUniverse& universe, const EvalConfig& cfg) {
    Evaluator evaluator(universe, cfg);
    TraceSet set = evaluator.eval(instr);
    return DenoteResult{std::move(set), std::move(evaluator.diagnostics())};
}

DenoteResult denote(const Program& p, const EvalConfig& cfg) {
    StateUniverse universe = state_space(p.decls, cfg.state_cap);
    return denote(*p.body, universe, cfg);
}

TraceSet denote_loop(const ExprPtr& exit_cond, const Instr& body,
                     const StateUniverse& universe, const EvalConfig& cfg,
                     EvalDiagnostics* diagnostics) {
    Evaluator evaluator(universe, cfg);
    TraceSet result = evaluator.eval_loop("until#0", exit_cond, body);
    if (diagnostics) *diagnostics = std::move(evaluator.diagnostics());
    return result;
}

}  // namespace unrollsem
