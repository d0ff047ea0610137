#ifndef UNROLLSEM_TRACE_SET_HPP
#define UNROLLSEM_TRACE_SET_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "unrollsem/trace.hpp"

namespace unrollsem {

inline constexpr std::size_t kDefaultStateCap = 4096;
inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

// The enumerated set of all states permitted by the declared domains,
// in deterministic (sorted) order.
class StateUniverse {
public:
    StateUniverse() = default;
    StateUniverse(VarLayoutPtr layout, std::vector<State> states)
        : layout_(std::move(layout)), states_(std::move(states)) {}

    const VarLayoutPtr& layout() const { return layout_; }
    const std::vector<State>& states() const { return states_; }
    std::size_t size() const { return states_.size(); }
    bool empty() const { return states_.empty(); }

    std::optional<State> find(const std::vector<long long>& values) const;

private:
    VarLayoutPtr layout_;
    std::vector<State> states_;
};

// Cartesian product of the declared domains. Throws ResourceError naming the
// product size when it exceeds the cap; throws Error if there are no
// declarations (an empty universe would make skip meaningless).
StateUniverse state_space(const std::vector<VarDomain>& decls,
                          std::size_t cap = kDefaultStateCap);

// A finite, duplicate-free set of traces held in canonical order, plus an
// exactness flag. A set is truncated when a fuel-bounded loop evaluation did
// not saturate; truncation propagates through every operation.
class TraceSet {
public:
    TraceSet() = default;

    // Sorts and deduplicates.
    static TraceSet from_traces(std::vector<Trace> traces,
                                std::optional<int> truncated_fuel = std::nullopt);

    const std::vector<Trace>& traces() const { return traces_; }
    std::size_t size() const { return traces_.size(); }
    bool empty() const { return traces_.empty(); }
    bool contains(const Trace& t) const;

    bool exact() const { return !truncated_fuel_.has_value(); }
    std::optional<int> truncated_fuel() const { return truncated_fuel_; }

    TraceSet with_flag(std::optional<int> truncated_fuel) const;

    std::string to_string() const;

private:
    std::vector<Trace> traces_;
    std::optional<int> truncated_fuel_;
};

// skip: the stationary trace of every state of the universe.
TraceSet skip_over(const StateUniverse& universe);

// fail: the empty trace set.
TraceSet fail_set();

// A ; B — all concatenations of a trace of A with a compatible trace of B.
// Throws ResourceError if the result would exceed cap.
TraceSet seq(const TraceSet& a, const TraceSet& b, std::size_t cap = kNoCap);

TraceSet set_union(const TraceSet& a, const TraceSet& b);

// c / A — traces whose initial state satisfies c.
TraceSet restrict_set(const ExprPtr& c, const TraceSet& a);

// A \ c — traces whose final state satisfies c.
TraceSet corestrict_set(const TraceSet& a, const ExprPtr& c);

// A^i with A^0 = skip and A^{i+1} = A ; A^i.
TraceSet power(const TraceSet& a, int i, const StateUniverse& universe,
               std::size_t cap = kNoCap);

// A <= B: every trace of A has an extension in B (and the strict variant).
bool set_prefix_le(const TraceSet& a, const TraceSet& b);
bool set_prefix_lt(const TraceSet& a, const TraceSet& b);

// Some trace of A satisfies t.
bool tests_set(const TraceSet& a, const TestSpec& t);

// Plain set semantics on traces; exactness flags do not participate.
bool set_eq(const TraceSet& a, const TraceSet& b);
bool subset(const TraceSet& a, const TraceSet& b);
TraceSet difference(const TraceSet& a, const TraceSet& b);

// Strips every step label (merging traces that differ only in labels).
TraceSet erase_labels(const TraceSet& a);

// Flag combination rule used by every operation.
std::optional<int> merge_flags(const std::optional<int>& a, const std::optional<int>& b);

}  // namespace unrollsem

#endif
