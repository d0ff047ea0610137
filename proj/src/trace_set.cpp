#include "unrollsem/trace_set.hpp"

#include <algorithm>

#include "unrollsem/errors.hpp"

namespace unrollsem {

std::optional<State> StateUniverse::find(const std::vector<long long>& values) const {
    for (const State& s : states_)
        if (s.values() == values) return s;
    return std::nullopt;
}

StateUniverse state_space(const std::vector<VarDomain>& decls, std::size_t cap) {
    if (decls.empty())
        throw Error("a program must declare at least one variable");
    unsigned __int128 product = 1;
    bool overflow = false;
    for (const VarDomain& d : decls) {
        if (d.lo > d.hi)
            throw Error("empty domain for variable '" + d.name + "'");
        unsigned __int128 width =
            static_cast<unsigned __int128>(static_cast<__int128>(d.hi) - d.lo + 1);
        if (product > (static_cast<unsigned __int128>(1) << 100) / width) overflow = true;
        product *= width;
        if (overflow || product > cap)
            throw ResourceError("state space of " +
                                (overflow ? std::string("more than 2^100")
                                          : std::to_string(static_cast<unsigned long long>(product))) +
                                " states exceeds the cap of " + std::to_string(cap));
    }

    auto layout = std::make_shared<const VarLayout>(decls);
    std::vector<State> states;
    states.reserve(static_cast<std::size_t>(product));
    std::vector<long long> values(decls.size());
    for (std::size_t i = 0; i < decls.size(); ++i) values[i] = decls[i].lo;
    for (;;) {
        states.emplace_back(layout, values);
        // Odometer step, last variable fastest: keeps the list sorted.
        std::size_t i = decls.size();
        while (i > 0) {
            --i;
            if (values[i] < decls[i].hi) {
                ++values[i];
                break;
            }
            values[i] = decls[i].lo;
            if (i == 0) return StateUniverse(std::move(layout), std::move(states));
        }
    }
}

std::optional<int> merge_flags(const std::optional<int>& a, const std::optional<int>& b) {
    if (a && b) return std::min(*a, *b);
    return a ? a : b;
}

TraceSet TraceSet::from_traces(std::vector<Trace> traces, std::optional<int> truncated_fuel) {
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    TraceSet out;
    out.traces_ = std::move(traces);
    out.truncated_fuel_ = truncated_fuel;
    return out;
}

bool TraceSet::contains(const Trace& t) const {
    return std::binary_search(traces_.begin(), traces_.end(), t);
}

TraceSet TraceSet::with_flag(std::optional<int> truncated_fuel) const {
    TraceSet out = *this;
    out.truncated_fuel_ = truncated_fuel;
    return out;
}

std::string TraceSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < traces_.size(); ++i) {
        if (i) out += ", ";
        out += traces_[i].to_string();
    }
    out += "}";
    if (!exact()) out += " truncated(" + std::to_string(*truncated_fuel_) + ")";
    return out;
}

TraceSet skip_over(const StateUniverse& universe) {
    if (universe.empty()) throw Error("skip over an empty universe");
    std::vector<Trace> traces;
    traces.reserve(universe.size());
    for (const State& s : universe.states()) traces.push_back(Trace::stationary(s));
    return TraceSet::from_traces(std::move(traces));
}

TraceSet fail_set() { return TraceSet(); }

TraceSet seq(const TraceSet& a, const TraceSet& b, std::size_t cap) {
    std::vector<Trace> out;
    for (const Trace& x : a.traces())
        for (const Trace& y : b.traces())
            if (auto z = concat_traces(x, y)) {
                out.push_back(std::move(*z));
                if (out.size() > cap)
                    throw ResourceError("sequencing produced more than " +
                                        std::to_string(cap) + " traces");
            }
    return TraceSet::from_traces(std::move(out),
                                 merge_flags(a.truncated_fuel(), b.truncated_fuel()));
}

TraceSet set_union(const TraceSet& a, const TraceSet& b) {
    std::vector<Trace> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.traces().begin(), a.traces().end(), b.traces().begin(),
                   b.traces().end(), std::back_inserter(out));
    return TraceSet::from_traces(std::move(out),
                                 merge_flags(a.truncated_fuel(), b.truncated_fuel()));
}

TraceSet restrict_set(const ExprPtr& c, const TraceSet& a) {
    std::vector<Trace> out;
    for (const Trace& x : a.traces())
        if (eval_bool(x.first(), *c)) out.push_back(x);
    return TraceSet::from_traces(std::move(out), a.truncated_fuel());
}

TraceSet corestrict_set(const TraceSet& a, const ExprPtr& c) {
    std::vector<Trace> out;
    for (const Trace& x : a.traces())
        if (eval_bool(x.last(), *c)) out.push_back(x);
    return TraceSet::from_traces(std::move(out), a.truncated_fuel());
}

TraceSet power(const TraceSet& a, int i, const StateUniverse& universe, std::size_t cap) {
    TraceSet acc = skip_over(universe);
    for (int k = 0; k < i; ++k) acc = seq(a, acc, cap);
    return acc;
}

bool set_prefix_le(const TraceSet& a, const TraceSet& b) {
    for (const Trace& x : a.traces()) {
        bool extended = false;
        for (const Trace& y : b.traces())
            if (is_prefix(x, y)) {
                extended = true;
                break;
            }
        if (!extended) return false;
    }
    return true;
}

bool set_prefix_lt(const TraceSet& a, const TraceSet& b) {
    for (const Trace& x : a.traces()) {
        bool extended = false;
        for (const Trace& y : b.traces())
            if (is_proper_prefix(x, y)) {
                extended = true;
                break;
            }
        if (!extended) return false;
    }
    return true;
}

bool tests_set(const TraceSet& a, const TestSpec& t) {
    for (const Trace& x : a.traces())
        if (satisfies(x, t)) return true;
    return false;
}

bool set_eq(const TraceSet& a, const TraceSet& b) { return a.traces() == b.traces(); }

bool subset(const TraceSet& a, const TraceSet& b) {
    return std::includes(b.traces().begin(), b.traces().end(), a.traces().begin(),
                         a.traces().end());
}

TraceSet difference(const TraceSet& a, const TraceSet& b) {
    std::vector<Trace> out;
    std::set_difference(a.traces().begin(), a.traces().end(), b.traces().begin(),
                        b.traces().end(), std::back_inserter(out));
    return TraceSet::from_traces(std::move(out),
                                 merge_flags(a.truncated_fuel(), b.truncated_fuel()));
}

TraceSet erase_labels(const TraceSet& a) {
    std::vector<Trace> out;
    out.reserve(a.size());
    for (const Trace& x : a.traces()) out.push_back(x.without_labels());
    return TraceSet::from_traces(std::move(out), a.truncated_fuel());
}

}  // namespace unrollsem
