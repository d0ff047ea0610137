#ifndef UNROLLSEM_LAWCHECK_HPP
#define UNROLLSEM_LAWCHECK_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unrollsem/json_io.hpp"
#include "unrollsem/trace_set.hpp"

namespace unrollsem {

struct GenConfig {
    int universe_size = 3;     // states of the single-variable random universe
    int max_trace_len = 3;
    int max_cardinality = 8;
    int cases_per_law = 1000;
    std::uint64_t seed = 42;

    void check_valid() const;  // throws Error on nonsensical bounds
};

// Deterministic stream: identical seeds give identical case sequences.
class CaseRng {
public:
    explicit CaseRng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    bool one_in(std::uint64_t n) { return below(n) == 0; }

private:
    std::mt19937_64 engine_;
};

struct Operands {
    std::vector<TraceSet> sets;
    std::vector<ExprPtr> preds;
    std::vector<Trace> traces;
    std::vector<TestSpec> tests;
};

enum class GenHint {
    None,
    TracePrefix,  // traces = {x, z}; half the cases build x as a prefix of z
    SetPrefix,    // sets = {A, B}; half the cases build A from prefixes of B
};

struct LawDef {
    std::string name;
    std::string category;  // table | neutrality | assoc | trace | flags | loop | equivalence | control
    int n_sets = 0;
    int n_preds = 0;
    int n_traces = 0;
    int n_tests = 0;
    GenHint hint = GenHint::None;
    bool negative_control = false;  // passes when a counterexample IS found
    bool corpus_based = false;      // checked over the built-in loop corpus

    // Violation details on failure; operand-driven laws get the universe the
    // operands were drawn from.
    std::function<std::optional<Json>(const Operands&, const StateUniverse&)> check;
    // Corpus-driven laws run once and report how many cases they covered.
    std::function<std::optional<Json>(std::size_t& cases)> corpus_check;
};

struct LawResult {
    std::string name;
    std::string category;
    bool negative_control = false;
    std::size_t exhaustive_cases = 0;
    std::size_t randomized_cases = 0;
    bool pass = false;
    std::optional<Json> counterexample;
};

// Every law the library asserts, in report order. The table category holds
// the sixteen restriction/corestriction/sequencing identities; neutrality,
// associativity, the two trace-level properties, flag propagation, the loop
// laws and the two-route unrolling equivalence follow; the final entry is
// the deliberately false left-sequencing distribution kept as a negative
// control for harness sensitivity.
const std::vector<LawDef>& law_registry();

// One case of a named law. Throws Error for unknown names.
std::optional<Json> check_law(const std::string& name, const Operands& operands,
                              const StateUniverse& universe);

// Exhaustive sweep (2-state universe) then cfg.cases_per_law randomized
// cases (cfg.universe_size states), stopping at the first counterexample.
LawResult run_law(const LawDef& law, const GenConfig& cfg);

std::vector<LawResult> run_all(const GenConfig& cfg);

bool all_pass(const std::vector<LawResult>& results);

Json law_results_json(const std::vector<LawResult>& results);

// Generator surface (reused by the property tests).
StateUniverse lawcheck_universe(int n_states);
const std::vector<ExprPtr>& predicate_pool(const StateUniverse& universe);
Trace gen_trace(const GenConfig& cfg, const StateUniverse& universe, CaseRng& rng);
TraceSet gen_trace_set(const GenConfig& cfg, const StateUniverse& universe, CaseRng& rng);
// All 64 sets of traces of length <= 2 over a 2-state universe.
const std::vector<TraceSet>& exhaustive_trace_sets();
// All 14 traces of length <= 3 over a 2-state universe.
const std::vector<Trace>& exhaustive_traces();

}  // namespace unrollsem

#endif
