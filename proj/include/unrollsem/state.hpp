#ifndef UNROLLSEM_STATE_HPP
#define UNROLLSEM_STATE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace unrollsem {

// An integer variable with inclusive bounds.
struct VarDomain {
    std::string name;
    long long lo = 0;
    long long hi = 0;
};

// The declared variables of a program, in declaration order. Shared by every
// State of one universe so that states stay self-describing.
class VarLayout {
public:
    VarLayout() = default;
    explicit VarLayout(std::vector<VarDomain> vars) : vars_(std::move(vars)) {}

    std::size_t size() const { return vars_.size(); }
    const std::vector<VarDomain>& vars() const { return vars_; }
    const VarDomain& var(std::size_t i) const { return vars_[i]; }

    std::optional<std::size_t> index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == name) return i;
        return std::nullopt;
    }

private:
    std::vector<VarDomain> vars_;
};

using VarLayoutPtr = std::shared_ptr<const VarLayout>;

// A total assignment of values to the declared variables. Immutable;
// updates go through with_value which returns a fresh state.
class State {
public:
    State() = default;
    State(VarLayoutPtr layout, std::vector<long long> values)
        : layout_(std::move(layout)), values_(std::move(values)) {}

    const VarLayoutPtr& layout() const { return layout_; }
    const std::vector<long long>& values() const { return values_; }
    long long value(std::size_t i) const { return values_[i]; }
    std::size_t size() const { return values_.size(); }

    State with_value(std::size_t i, long long v) const {
        std::vector<long long> next = values_;
        next[i] = v;
        return State(layout_, std::move(next));
    }

    friend bool operator==(const State& a, const State& b) {
        return a.values_ == b.values_;
    }
    friend bool operator!=(const State& a, const State& b) { return !(a == b); }
    friend bool operator<(const State& a, const State& b) {
        return a.values_ < b.values_;
    }

    std::string to_string() const;

private:
    VarLayoutPtr layout_;
    std::vector<long long> values_;
};

}  // namespace unrollsem

#endif
