#include "oracle_interp.hpp"

#include <stdexcept>

namespace oracle {

using namespace unrollsem;

namespace {

Trace append_run(const Trace& t, const Trace& u) {
    if (t.last() != u.first()) throw std::logic_error("oracle runs must chain");
    std::vector<State> states = t.states();
    states.insert(states.end(), u.states().begin() + 1, u.states().end());
    std::vector<std::optional<StepLabel>> annotations = t.annotations();
    annotations.insert(annotations.end(), u.annotations().begin(), u.annotations().end());
    return Trace(std::move(states), std::move(annotations));
}

std::vector<Trace> loop_runs(const ExprPtr& exit_cond, const Instr& body, const State& s,
                             int remaining, int loop_budget);

std::vector<Trace> run(const Instr& instr, const State& s, int loop_budget) {
    switch (instr.kind) {
        case InstrKind::Skip:
            return {Trace::stationary(s)};
        case InstrKind::Fail:
            return {};
        case InstrKind::Check:
            if (eval_bool(s, *instr.cond)) return {Trace::stationary(s)};
            return {};
        case InstrKind::Assign: {
            auto idx = s.layout()->index_of(instr.assign_var);
            long long v = eval_int(s, *instr.assign_expr);
            const VarDomain& domain = s.layout()->var(*idx);
            if (v < domain.lo || v > domain.hi) return {};
            return {Trace({s, s.with_value(*idx, v)}, {instr.label})};
        }
        case InstrKind::Seq: {
            std::vector<Trace> runs = {Trace::stationary(s)};
            for (const auto& child : instr.children) {
                std::vector<Trace> next;
                for (const Trace& t : runs)
                    for (const Trace& u : run(*child, t.last(), loop_budget))
                        next.push_back(append_run(t, u));
                runs = std::move(next);
            }
            return runs;
        }
        case InstrKind::If:
            if (eval_bool(s, *instr.cond)) return run(*instr.children[0], s, loop_budget);
            if (instr.children.size() > 1) return run(*instr.children[1], s, loop_budget);
            return {Trace::stationary(s)};
        case InstrKind::Choice: {
            std::vector<Trace> runs = run(*instr.children[0], s, loop_budget);
            std::vector<Trace> second = run(*instr.children[1], s, loop_budget);
            runs.insert(runs.end(), second.begin(), second.end());
            return runs;
        }
        case InstrKind::Until:
            return loop_runs(instr.cond, *instr.children[0], s, loop_budget, loop_budget);
        case InstrKind::RepeatUntil: {
            std::vector<Trace> out;
            for (const Trace& t : run(*instr.children[0], s, loop_budget))
                for (const Trace& u :
                     loop_runs(instr.cond, *instr.children[0], t.last(), loop_budget, loop_budget))
                    out.push_back(append_run(t, u));
            return out;
        }
    }
    throw std::logic_error("unreachable instruction kind");
}

std::vector<Trace> loop_runs(const ExprPtr& exit_cond, const Instr& body, const State& s,
                             int remaining, int loop_budget) {
    if (eval_bool(s, *exit_cond)) return {Trace::stationary(s)};
    if (remaining <= 0) return {};
    std::vector<Trace> out;
    for (const Trace& t : run(body, s, loop_budget))
        for (const Trace& u : loop_runs(exit_cond, body, t.last(), remaining - 1, loop_budget))
            out.push_back(append_run(t, u));
    return out;
}

}  // namespace

std::vector<Trace> runs_from(const Instr& instr, const State& s, int loop_budget) {
    return run(instr, s, loop_budget);
}

TraceSet all_runs(const Instr& instr, const StateUniverse& universe, int loop_budget) {
    std::vector<Trace> all;
    for (const State& s : universe.states())
        for (Trace& t : runs_from(instr, s, loop_budget)) all.push_back(std::move(t));
    return TraceSet::from_traces(std::move(all));
}

}  // namespace oracle
