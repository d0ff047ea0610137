#include "unrollsem/trace.hpp"

#include <algorithm>

#include "unrollsem/errors.hpp"

namespace unrollsem {

std::string State::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i) out += ",";
        if (layout_ && i < layout_->size()) {
            out += layout_->var(i).name;
            out += "=";
        }
        out += std::to_string(values_[i]);
    }
    out += "}";
    return out;
}

Trace::Trace(std::vector<State> states, std::vector<std::optional<StepLabel>> annotations)
    : states_(std::move(states)), annotations_(std::move(annotations)) {
    if (states_.empty()) throw Error("a trace must have at least one state");
    if (annotations_.empty()) annotations_.resize(states_.size() - 1);
    if (annotations_.size() != states_.size() - 1)
        throw Error("a trace of n states carries n-1 step annotations");
}

Trace Trace::without_labels() const {
    return Trace(states_, std::vector<std::optional<StepLabel>>(states_.size() - 1));
}

bool operator<(const Trace& a, const Trace& b) {
    if (a.states_ != b.states_)
        return std::lexicographical_compare(a.states_.begin(), a.states_.end(),
                                            b.states_.begin(), b.states_.end());
    auto label_less = [](const std::optional<StepLabel>& x,
                         const std::optional<StepLabel>& y) {
        if (x.has_value() != y.has_value()) return y.has_value();
        return x.has_value() && *x < *y;
    };
    return std::lexicographical_compare(a.annotations_.begin(), a.annotations_.end(),
                                        b.annotations_.begin(), b.annotations_.end(),
                                        label_less);
}

std::string Trace::to_string() const {
    std::string out = "<";
    for (std::size_t i = 0; i < states_.size(); ++i) {
        if (i) {
            const auto& a = annotations_[i - 1];
            out += a ? " -" + a->id + "-> " : " -> ";
        }
        out += states_[i].to_string();
    }
    out += ">";
    return out;
}

std::string TestSpec::to_string() const {
    std::string out;
    if (anchor) out += "at " + anchor->id + ": ";
    out += to_source(*predicate);
    return out;
}

std::optional<Trace> concat_traces(const Trace& x, const Trace& y) {
    if (x.last() != y.first()) return std::nullopt;
    std::vector<State> states = x.states();
    states.insert(states.end(), y.states().begin() + 1, y.states().end());
    std::vector<std::optional<StepLabel>> annotations = x.annotations();
    annotations.insert(annotations.end(), y.annotations().begin(), y.annotations().end());
    return Trace(std::move(states), std::move(annotations));
}

bool is_prefix(const Trace& x, const Trace& z) {
    if (x.length() > z.length()) return false;
    return std::equal(x.states().begin(), x.states().end(), z.states().begin()) &&
           std::equal(x.annotations().begin(), x.annotations().end(),
                      z.annotations().begin());
}

bool is_proper_prefix(const Trace& x, const Trace& z) {
    return x.length() < z.length() && is_prefix(x, z);
}

bool satisfies(const Trace& x, const TestSpec& t) {
    if (!t.anchor) {
        for (const State& s : x.states())
            if (eval_bool(s, *t.predicate)) return true;
        return false;
    }
    for (std::size_t j = 1; j < x.length(); ++j) {
        const auto& a = x.annotations()[j - 1];
        if (a && *a == *t.anchor && eval_bool(x.states()[j], *t.predicate)) return true;
    }
    return false;
}

}  // namespace unrollsem
