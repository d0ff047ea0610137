#ifndef UNROLLSEM_TRACE_HPP
#define UNROLLSEM_TRACE_HPP

#include <optional>
#include <string>
#include <vector>

#include "unrollsem/expr.hpp"
#include "unrollsem/state.hpp"

namespace unrollsem {

// Identifies one atomic instruction occurrence in a program's source.
struct StepLabel {
    std::string id;

    friend bool operator==(const StepLabel& a, const StepLabel& b) { return a.id == b.id; }
    friend bool operator!=(const StepLabel& a, const StepLabel& b) { return a.id != b.id; }
    friend bool operator<(const StepLabel& a, const StepLabel& b) { return a.id < b.id; }
};

// A finite, non-empty sequence of states. Step j (producing state j+1 from
// state j) may carry the label of the instruction that performed it, so a
// trace of n states has n-1 annotations.
class Trace {
public:
    explicit Trace(std::vector<State> states,
                   std::vector<std::optional<StepLabel>> annotations = {});

    static Trace stationary(State s) { return Trace({std::move(s)}); }

    const std::vector<State>& states() const { return states_; }
    const std::vector<std::optional<StepLabel>>& annotations() const { return annotations_; }

    std::size_t length() const { return states_.size(); }
    bool is_stationary() const { return states_.size() == 1; }
    const State& first() const { return states_.front(); }
    const State& last() const { return states_.back(); }

    Trace without_labels() const;

    friend bool operator==(const Trace& a, const Trace& b) {
        return a.states_ == b.states_ && a.annotations_ == b.annotations_;
    }
    friend bool operator!=(const Trace& a, const Trace& b) { return !(a == b); }
    // Canonical order: state sequences first, then annotation sequences.
    friend bool operator<(const Trace& a, const Trace& b);

    std::string to_string() const;

private:
    std::vector<State> states_;
    std::vector<std::optional<StepLabel>> annotations_;
};

// A boolean condition on states; anchored tests additionally require the
// matching state to have been produced by the labelled step.
struct TestSpec {
    ExprPtr predicate;
    std::optional<StepLabel> anchor;

    std::string to_string() const;
};

// z = x + y with the duplicated border state removed. Defined only when
// x ends in the state y starts in; nullopt otherwise, and set-level
// sequencing skips such pairs.
std::optional<Trace> concat_traces(const Trace& x, const Trace& y);

// x <= z: some y with z = x + y.
bool is_prefix(const Trace& x, const Trace& z);
// x < z: prefix with |z| > |x|.
bool is_proper_prefix(const Trace& x, const Trace& z);

// Unanchored: some state of x satisfies the predicate. Anchored at L: some
// step labelled L produces a state satisfying the predicate.
bool satisfies(const Trace& x, const TestSpec& t);

}  // namespace unrollsem

#endif
