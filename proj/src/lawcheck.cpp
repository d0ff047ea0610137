#include "unrollsem/lawcheck.hpp"

#include <map>

#include "unrollsem/corpus.hpp"
#include "unrollsem/errors.hpp"
#include "unrollsem/eval.hpp"
#include "unrollsem/parser.hpp"
#include "unrollsem/unroll.hpp"

namespace unrollsem {

void GenConfig::check_valid() const {
    if (universe_size < 1 || max_trace_len < 1 || max_cardinality < 1 || cases_per_law < 1)
        throw Error("generator bounds must all be at least 1");
}

StateUniverse lawcheck_universe(int n_states) {
    return state_space({VarDomain{"x", 0, n_states - 1}});
}

const std::vector<ExprPtr>& predicate_pool(const StateUniverse& universe) {
    static std::map<int, std::vector<ExprPtr>> pools;
    int n = static_cast<int>(universe.size());
    auto it = pools.find(n);
    if (it != pools.end()) return it->second;

    // True, False, one indicator per state, and indicator conjunctions
    // (degenerate by construction, kept for the corner cases they hit).
    std::vector<ExprPtr> pool;
    pool.push_back(bool_lit(true));
    pool.push_back(bool_lit(false));
    for (int v = 0; v < n; ++v) pool.push_back(eq(var_ref("x"), int_lit(v)));
    for (int v = 0; v < n; ++v)
        for (int w = v + 1; w < n; ++w)
            pool.push_back(land(eq(var_ref("x"), int_lit(v)), eq(var_ref("x"), int_lit(w))));
    return pools.emplace(n, std::move(pool)).first->second;
}

namespace {

const StateUniverse& exhaustive_universe() {
    static const StateUniverse universe = lawcheck_universe(2);
    return universe;
}

std::vector<Trace> traces_up_to(const StateUniverse& universe, int max_len) {
    std::vector<Trace> out;
    std::vector<std::vector<State>> current;
    for (const State& s : universe.states()) current.push_back({s});
    for (int len = 1; len <= max_len; ++len) {
        for (const auto& states : current) out.emplace_back(states);
        std::vector<std::vector<State>> next;
        for (const auto& states : current)
            for (const State& s : universe.states()) {
                auto extended = states;
                extended.push_back(s);
                next.push_back(std::move(extended));
            }
        current = std::move(next);
    }
    return out;
}

}  // namespace

const std::vector<Trace>& exhaustive_traces() {
    static const std::vector<Trace> traces = traces_up_to(exhaustive_universe(), 3);
    return traces;
}

const std::vector<TraceSet>& exhaustive_trace_sets() {
    static const std::vector<TraceSet> sets = [] {
        std::vector<Trace> base = traces_up_to(exhaustive_universe(), 2);
        std::vector<TraceSet> out;
        out.reserve(std::size_t{1} << base.size());
        for (std::size_t mask = 0; mask < (std::size_t{1} << base.size()); ++mask) {
            std::vector<Trace> traces;
            for (std::size_t b = 0; b < base.size(); ++b)
                if (mask & (std::size_t{1} << b)) traces.push_back(base[b]);
            out.push_back(TraceSet::from_traces(std::move(traces)));
        }
        return out;
    }();
    return sets;
}

Trace gen_trace(const GenConfig& cfg, const StateUniverse& universe, CaseRng& rng) {
    std::size_t len = 1 + rng.below(cfg.max_trace_len);
    std::vector<State> states;
    states.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        states.push_back(universe.states()[rng.below(universe.size())]);
    std::vector<std::optional<StepLabel>> annotations(len - 1);
    for (auto& a : annotations)
        if (rng.one_in(4)) a = StepLabel{rng.one_in(2) ? "p" : "q"};
    return Trace(std::move(states), std::move(annotations));
}

TraceSet gen_trace_set(const GenConfig& cfg, const StateUniverse& universe, CaseRng& rng) {
    std::size_t cardinality = rng.below(cfg.max_cardinality + 1);
    std::vector<Trace> traces;
    traces.reserve(cardinality);
    for (std::size_t i = 0; i < cardinality; ++i)
        traces.push_back(gen_trace(cfg, universe, rng));
    std::optional<int> flag;
    if (rng.one_in(8)) flag = static_cast<int>(rng.below(9));
    return TraceSet::from_traces(std::move(traces), flag);
}

namespace {

Trace random_prefix(const Trace& z, CaseRng& rng) {
    std::size_t len = 1 + rng.below(z.length());
    std::vector<State> states(z.states().begin(), z.states().begin() + len);
    std::vector<std::optional<StepLabel>> annotations(z.annotations().begin(),
                                                      z.annotations().begin() + (len - 1));
    return Trace(std::move(states), std::move(annotations));
}

TestSpec gen_test(const StateUniverse& universe, CaseRng& rng) {
    const auto& pool = predicate_pool(universe);
    TestSpec t;
    t.predicate = pool[rng.below(pool.size())];
    if (rng.one_in(4)) t.anchor = StepLabel{rng.one_in(2) ? "p" : "q"};
    return t;
}

Operands gen_operands(const LawDef& law, const GenConfig& cfg, const StateUniverse& universe,
                      CaseRng& rng) {
    Operands ops;
    for (int i = 0; i < law.n_sets; ++i) ops.sets.push_back(gen_trace_set(cfg, universe, rng));
    if (law.hint == GenHint::SetPrefix && law.n_sets == 2 && rng.one_in(2)) {
        // Build A from prefixes of B's traces so A <= B holds by construction.
        std::vector<Trace> prefixes;
        for (const Trace& y : ops.sets[1].traces())
            if (rng.one_in(2)) prefixes.push_back(random_prefix(y, rng));
        ops.sets[0] = TraceSet::from_traces(std::move(prefixes));
    }
    const auto& pool = predicate_pool(universe);
    for (int i = 0; i < law.n_preds; ++i) ops.preds.push_back(pool[rng.below(pool.size())]);
    for (int i = 0; i < law.n_traces; ++i) ops.traces.push_back(gen_trace(cfg, universe, rng));
    if (law.hint == GenHint::TracePrefix && law.n_traces == 2 && rng.one_in(2))
        ops.traces[0] = random_prefix(ops.traces[1], rng);
    for (int i = 0; i < law.n_tests; ++i) ops.tests.push_back(gen_test(universe, rng));
    return ops;
}

Json operands_json(const Operands& ops) {
    Json out;
    if (!ops.sets.empty()) {
        Json sets = Json::array();
        for (const TraceSet& s : ops.sets) sets.push_back(trace_set_json(s));
        out["sets"] = std::move(sets);
    }
    if (!ops.preds.empty()) {
        Json preds = Json::array();
        for (const ExprPtr& p : ops.preds) preds.push_back(to_source(*p));
        out["predicates"] = std::move(preds);
    }
    if (!ops.traces.empty()) {
        Json traces = Json::array();
        for (const Trace& t : ops.traces) traces.push_back(trace_json(t));
        out["traces"] = std::move(traces);
    }
    if (!ops.tests.empty()) {
        Json tests = Json::array();
        for (const TestSpec& t : ops.tests) tests.push_back(t.to_string());
        out["tests"] = std::move(tests);
    }
    return out;
}

std::optional<Json> expect_eq(const TraceSet& lhs, const TraceSet& rhs,
                              const char* lhs_text, const char* rhs_text) {
    if (set_eq(lhs, rhs)) return std::nullopt;
    Json d;
    d["violated"] = std::string(lhs_text) + " = " + rhs_text;
    d["lhs"] = trace_set_json(lhs);
    d["rhs"] = trace_set_json(rhs);
    return d;
}

std::optional<Json> expect_subset(const TraceSet& lhs, const TraceSet& rhs,
                                  const char* lhs_text, const char* rhs_text) {
    if (subset(lhs, rhs)) return std::nullopt;
    Json d;
    d["violated"] = std::string(lhs_text) + " subset of " + rhs_text;
    d["lhs"] = trace_set_json(lhs);
    d["rhs"] = trace_set_json(rhs);
    return d;
}

// ---- corpus-driven checks ----------------------------------------------

struct CorpusLoop {
    std::string program;
    std::string loop_id;
    Program parsed;
    LoopRef loop;
};

const std::vector<CorpusLoop>& corpus_loops() {
    static const std::vector<CorpusLoop> loops = [] {
        std::vector<CorpusLoop> out;
        for (const CorpusEntry& entry : builtin_corpus()) {
            Program p = parse_program(entry.source);
            for (const LoopRef& loop : collect_loops(p))
                out.push_back(CorpusLoop{entry.name, loop.id, p, loop});
        }
        return out;
    }();
    return loops;
}

Json corpus_failure(const CorpusLoop& cl, int level, Json detail) {
    Json d;
    d["program"] = cl.program;
    d["loop"] = cl.loop_id;
    if (level >= 0) d["level"] = level;
    d["detail"] = std::move(detail);
    return d;
}

std::optional<Json> check_loop_skip1(std::size_t& cases) {
    for (const CorpusLoop& cl : corpus_loops()) {
        StateUniverse universe = state_space(cl.parsed.decls);
        TraceSet level_one = power_unrolling(cl.loop.exit_cond, *cl.loop.body, universe, 1);
        TraceSet via_restrict = restrict_set(cl.loop.exit_cond, skip_over(universe));
        TraceSet via_corestrict = corestrict_set(skip_over(universe), cl.loop.exit_cond);
        ++cases;
        if (auto d = expect_eq(level_one, via_restrict, "level 1", "e / skip"))
            return corpus_failure(cl, 1, std::move(*d));
        if (auto d = expect_eq(via_restrict, via_corestrict, "e / skip", "skip \\ e"))
            return corpus_failure(cl, 1, std::move(*d));
    }
    return std::nullopt;
}

std::optional<Json> check_loop_union_consistency(std::size_t& cases) {
    EvalConfig cfg;
    cfg.fuel = 6;
    for (const CorpusLoop& cl : corpus_loops()) {
        StateUniverse universe = state_space(cl.parsed.decls);
        TraceSet loop_set = denote_loop(cl.loop.exit_cond, *cl.loop.body, universe, cfg);
        TraceSet by_levels =
            power_unrolling(cl.loop.exit_cond, *cl.loop.body, universe, cfg.fuel + 1, cfg);
        ++cases;
        if (auto d = expect_eq(loop_set, by_levels, "loop denotation",
                               "union of levels 0..fuel+1"))
            return corpus_failure(cl, cfg.fuel, std::move(*d));
    }
    return std::nullopt;
}

std::optional<Json> check_unroll_equiv_corpus(std::size_t& cases) {
    EvalConfig cfg;
    for (const CorpusLoop& cl : corpus_loops()) {
        StateUniverse universe = state_space(cl.parsed.decls);
        auto verdicts =
            check_unrolling_equivalence(cl.loop.exit_cond, *cl.loop.body, universe, 8, cfg);
        for (const EquivalenceVerdict& v : verdicts) {
            ++cases;
            if (!v.equal) {
                Json d;
                d["violated"] = "power route = fixpoint route";
                d["power_cardinality"] = v.power_cardinality;
                d["fixpoint_cardinality"] = v.fixpoint_cardinality;
                return corpus_failure(cl, v.level, std::move(d));
            }
        }
    }
    return std::nullopt;
}

// ---- registry ------------------------------------------------------------

std::vector<LawDef> build_registry() {
    std::vector<LawDef> laws;

    auto table = [&](std::string name, int n_sets, int n_preds,
                     std::function<std::optional<Json>(const Operands&, const StateUniverse&)>
                         check) {
        laws.push_back(LawDef{std::move(name), "table", n_sets, n_preds, 0, 0, GenHint::None,
                              false, false, std::move(check), nullptr});
    };

    table("RESTRICT_FALSE", 1, 0, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(restrict_set(bool_lit(false), ops.sets[0]), fail_set(),
                         "False / A", "fail");
    });
    table("RESTRICT_TRUE", 1, 0, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(restrict_set(bool_lit(true), ops.sets[0]), ops.sets[0],
                         "True / A", "A");
    });
    table("CORESTRICT_FALSE", 1, 0, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(corestrict_set(ops.sets[0], bool_lit(false)), fail_set(),
                         "A \\ False", "fail");
    });
    table("CORESTRICT_TRUE", 1, 0, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(corestrict_set(ops.sets[0], bool_lit(true)), ops.sets[0],
                         "A \\ True", "A");
    });
    table("RESTRICT_CHAIN", 1, 2, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(restrict_set(ops.preds[0], restrict_set(ops.preds[1], ops.sets[0])),
                         restrict_set(land(ops.preds[0], ops.preds[1]), ops.sets[0]),
                         "c / (d / A)", "(c and d) / A");
    });
    table("CORESTRICT_CHAIN", 1, 2, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(
            corestrict_set(corestrict_set(ops.sets[0], ops.preds[0]), ops.preds[1]),
            corestrict_set(ops.sets[0], land(ops.preds[0], ops.preds[1])),
            "(A \\ c) \\ d", "A \\ (c and d)");
    });
    table("BORDER_CONTRA", 2, 1, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(seq(corestrict_set(ops.sets[0], ops.preds[0]),
                             restrict_set(lnot(ops.preds[0]), ops.sets[1])),
                         fail_set(), "(A \\ c) ; (not c / B)", "fail");
    });
    table("BORDER_SUBSET", 2, 2, [](const Operands& ops, const StateUniverse&) {
        return expect_subset(seq(corestrict_set(ops.sets[0], ops.preds[0]),
                                 restrict_set(ops.preds[1], ops.sets[1])),
                             seq(ops.sets[0], ops.sets[1]), "(A \\ c) ; (d / B)", "A ; B");
    });
    table("COMBINE_DROP_RESTRICT", 2, 1, [](const Operands& ops, const StateUniverse&) {
        TraceSet both = seq(corestrict_set(ops.sets[0], ops.preds[0]),
                            restrict_set(ops.preds[0], ops.sets[1]));
        return expect_eq(both, seq(corestrict_set(ops.sets[0], ops.preds[0]), ops.sets[1]),
                         "(A \\ c) ; (c / B)", "(A \\ c) ; B");
    });
    table("COMBINE_DROP_CORESTRICT", 2, 1, [](const Operands& ops, const StateUniverse&) {
        TraceSet both = seq(corestrict_set(ops.sets[0], ops.preds[0]),
                            restrict_set(ops.preds[0], ops.sets[1]));
        return expect_eq(both, seq(ops.sets[0], restrict_set(ops.preds[0], ops.sets[1])),
                         "(A \\ c) ; (c / B)", "A ; (c / B)");
    });
    table("MOVE1", 2, 1, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(seq(restrict_set(ops.preds[0], ops.sets[0]), ops.sets[1]),
                         restrict_set(ops.preds[0], seq(ops.sets[0], ops.sets[1])),
                         "(v / A) ; B", "v / (A ; B)");
    });
    table("MOVE2", 2, 1, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(seq(ops.sets[0], corestrict_set(ops.sets[1], ops.preds[0])),
                         corestrict_set(seq(ops.sets[0], ops.sets[1]), ops.preds[0]),
                         "A ; (B \\ v)", "(A ; B) \\ v");
    });
    table("DIST1", 2, 1, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(restrict_set(ops.preds[0], set_union(ops.sets[0], ops.sets[1])),
                         set_union(restrict_set(ops.preds[0], ops.sets[0]),
                                   restrict_set(ops.preds[0], ops.sets[1])),
                         "v / (A u B)", "(v / A) u (v / B)");
    });
    table("DIST2", 2, 1, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(corestrict_set(set_union(ops.sets[0], ops.sets[1]), ops.preds[0]),
                         set_union(corestrict_set(ops.sets[0], ops.preds[0]),
                                   corestrict_set(ops.sets[1], ops.preds[0])),
                         "(A u B) \\ v", "(A \\ v) u (B \\ v)");
    });
    table("DIST3", 3, 0, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(seq(ops.sets[0], set_union(ops.sets[1], ops.sets[2])),
                         set_union(seq(ops.sets[0], ops.sets[1]), seq(ops.sets[0], ops.sets[2])),
                         "A ; (B u C)", "(A ; B) u (A ; C)");
    });
    table("DIST3_LEFT", 3, 0, [](const Operands& ops, const StateUniverse&) {
        return expect_eq(seq(set_union(ops.sets[0], ops.sets[1]), ops.sets[2]),
                         set_union(seq(ops.sets[0], ops.sets[2]), seq(ops.sets[1], ops.sets[2])),
                         "(A u B) ; C", "(A ; C) u (B ; C)");
    });

    laws.push_back(LawDef{
        "SKIP_NEUTRAL", "neutrality", 1, 0, 0, 0, GenHint::None, false, false,
        [](const Operands& ops, const StateUniverse& universe) -> std::optional<Json> {
            TraceSet skip = skip_over(universe);
            if (auto d = expect_eq(seq(ops.sets[0], skip), ops.sets[0], "A ; skip", "A"))
                return d;
            return expect_eq(seq(skip, ops.sets[0]), ops.sets[0], "skip ; A", "A");
        },
        nullptr});
    laws.push_back(LawDef{
        "FAIL_ABSORB", "neutrality", 1, 0, 0, 0, GenHint::None, false, false,
        [](const Operands& ops, const StateUniverse&) -> std::optional<Json> {
            if (auto d = expect_eq(seq(ops.sets[0], fail_set()), fail_set(), "A ; fail", "fail"))
                return d;
            return expect_eq(seq(fail_set(), ops.sets[0]), fail_set(), "fail ; A", "fail");
        },
        nullptr});

    laws.push_back(LawDef{
        "SEQ_ASSOC", "assoc", 3, 0, 0, 0, GenHint::None, false, false,
        [](const Operands& ops, const StateUniverse&) {
            return expect_eq(seq(seq(ops.sets[0], ops.sets[1]), ops.sets[2]),
                             seq(ops.sets[0], seq(ops.sets[1], ops.sets[2])), "(A ; B) ; C",
                             "A ; (B ; C)");
        },
        nullptr});

    laws.push_back(LawDef{
        "SATISFIES_EXTENSION", "trace", 0, 0, 2, 1, GenHint::TracePrefix, false, false,
        [](const Operands& ops, const StateUniverse&) -> std::optional<Json> {
            const Trace& x = ops.traces[0];
            const Trace& z = ops.traces[1];
            const TestSpec& t = ops.tests[0];
            if (!(is_prefix(x, z) && satisfies(x, t)) || satisfies(z, t)) return std::nullopt;
            Json d;
            d["violated"] = "x satisfies t and x <= z implies z satisfies t";
            return d;
        },
        nullptr});
    laws.push_back(LawDef{
        "TEST_OF_MONOTONE", "trace", 2, 0, 0, 1, GenHint::SetPrefix, false, false,
        [](const Operands& ops, const StateUniverse&) -> std::optional<Json> {
            if (!(set_prefix_le(ops.sets[0], ops.sets[1]) && tests_set(ops.sets[0], ops.tests[0])) ||
                tests_set(ops.sets[1], ops.tests[0]))
                return std::nullopt;
            Json d;
            d["violated"] = "t tests A and A <= B implies t tests B";
            return d;
        },
        nullptr});

    laws.push_back(LawDef{
        "FLAG_PROPAGATION", "flags", 2, 1, 0, 0, GenHint::None, false, false,
        [](const Operands& ops, const StateUniverse&) -> std::optional<Json> {
            const TraceSet& a = ops.sets[0];
            const TraceSet& b = ops.sets[1];
            bool either = !a.exact() || !b.exact();
            auto bad = [&](const char* op, const TraceSet& result, bool expect) -> std::optional<Json> {
                if (!result.exact() == expect) return std::nullopt;
                Json d;
                d["violated"] = std::string("truncation propagation through ") + op;
                d["result"] = trace_set_json(result);
                return d;
            };
            if (auto d = bad("union", set_union(a, b), either)) return d;
            if (auto d = bad("seq", seq(a, b), either)) return d;
            if (auto d = bad("difference", difference(a, b), either)) return d;
            if (auto d = bad("restrict", restrict_set(ops.preds[0], a), !a.exact())) return d;
            if (auto d = bad("corestrict", corestrict_set(a, ops.preds[0]), !a.exact())) return d;
            return std::nullopt;
        },
        nullptr});

    laws.push_back(LawDef{"LOOP_SKIP1", "loop", 0, 0, 0, 0, GenHint::None, false, true, nullptr,
                          check_loop_skip1});
    laws.push_back(LawDef{"LOOP_UNION_CONSISTENCY", "loop", 0, 0, 0, 0, GenHint::None, false,
                          true, nullptr, check_loop_union_consistency});
    laws.push_back(LawDef{"UNROLL_EQUIVALENCE", "equivalence", 0, 0, 0, 0, GenHint::None, false,
                          true, nullptr, check_unroll_equiv_corpus});

    // The table's literal second sequencing distribution is not an identity;
    // kept as a negative control that must produce a counterexample.
    laws.push_back(LawDef{
        "DIST3_LITERAL", "control", 3, 0, 0, 0, GenHint::None, true, false,
        [](const Operands& ops, const StateUniverse&) {
            return expect_eq(seq(seq(ops.sets[0], ops.sets[1]), ops.sets[2]),
                             set_union(seq(ops.sets[0], ops.sets[2]), seq(ops.sets[1], ops.sets[2])),
                             "(A ; B) ; C", "(A ; C) u (B ; C)");
        },
        nullptr});

    return laws;
}

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace

const std::vector<LawDef>& law_registry() {
    static const std::vector<LawDef> registry = build_registry();
    return registry;
}

std::optional<Json> check_law(const std::string& name, const Operands& operands,
                              const StateUniverse& universe) {
    for (const LawDef& law : law_registry())
        if (law.name == name) {
            if (!law.check) throw Error("law '" + name + "' runs over the corpus only");
            return law.check(operands, universe);
        }
    throw Error("unknown law '" + name + "'");
}

namespace {

// Mixed-radix sweep over every combination of exhaustive operands.
struct ExhaustiveSpace {
    const LawDef& law;
    std::size_t n_set_choices = exhaustive_trace_sets().size();
    std::size_t n_trace_choices = exhaustive_traces().size();
    std::size_t n_pred_choices = predicate_pool(exhaustive_universe()).size();

    std::size_t total() const {
        std::size_t t = 1;
        for (int i = 0; i < law.n_sets; ++i) t *= n_set_choices;
        for (int i = 0; i < law.n_preds; ++i) t *= n_pred_choices;
        for (int i = 0; i < law.n_traces; ++i) t *= n_trace_choices;
        for (int i = 0; i < law.n_tests; ++i) t *= n_pred_choices;
        return t;
    }

    Operands decode(std::size_t index) const {
        Operands ops;
        for (int i = 0; i < law.n_sets; ++i) {
            ops.sets.push_back(exhaustive_trace_sets()[index % n_set_choices]);
            index /= n_set_choices;
        }
        const auto& pool = predicate_pool(exhaustive_universe());
        for (int i = 0; i < law.n_preds; ++i) {
            ops.preds.push_back(pool[index % n_pred_choices]);
            index /= n_pred_choices;
        }
        for (int i = 0; i < law.n_traces; ++i) {
            ops.traces.push_back(exhaustive_traces()[index % n_trace_choices]);
            index /= n_trace_choices;
        }
        for (int i = 0; i < law.n_tests; ++i) {
            ops.tests.push_back(TestSpec{pool[index % n_pred_choices], std::nullopt});
            index /= n_pred_choices;
        }
        return ops;
    }
};

Json wrap_counterexample(const char* mode, std::size_t index, const Operands& ops, Json detail) {
    Json out;
    out["mode"] = mode;
    out["case"] = index;
    out["operands"] = operands_json(ops);
    out["detail"] = std::move(detail);
    return out;
}

}  // namespace

LawResult run_law(const LawDef& law, const GenConfig& cfg) {
    cfg.check_valid();
    LawResult result;
    result.name = law.name;
    result.category = law.category;
    result.negative_control = law.negative_control;

    std::optional<Json> found;

    if (law.corpus_based) {
        std::size_t cases = 0;
        if (auto d = law.corpus_check(cases)) {
            Json wrapped;
            wrapped["mode"] = "corpus";
            wrapped["detail"] = std::move(*d);
            found = std::move(wrapped);
        }
        result.exhaustive_cases = cases;
    } else {
        ExhaustiveSpace space{law};
        std::size_t total = space.total();
        for (std::size_t i = 0; i < total && !found; ++i) {
            Operands ops = space.decode(i);
            if (auto d = law.check(ops, exhaustive_universe()))
                found = wrap_counterexample("exhaustive", i, ops, std::move(*d));
            ++result.exhaustive_cases;
        }

        StateUniverse universe = lawcheck_universe(cfg.universe_size);
        CaseRng rng(cfg.seed ^ fnv1a(law.name));
        for (int i = 0; i < cfg.cases_per_law && !found; ++i) {
            Operands ops = gen_operands(law, cfg, universe, rng);
            if (auto d = law.check(ops, universe))
                found = wrap_counterexample("randomized", static_cast<std::size_t>(i), ops,
                                            std::move(*d));
            ++result.randomized_cases;
        }
    }

    result.counterexample = std::move(found);
    result.pass = law.negative_control ? result.counterexample.has_value()
                                       : !result.counterexample.has_value();
    return result;
}

std::vector<LawResult> run_all(const GenConfig& cfg) {
    std::vector<LawResult> out;
    for (const LawDef& law : law_registry()) out.push_back(run_law(law, cfg));
    return out;
}

bool all_pass(const std::vector<LawResult>& results) {
    for (const LawResult& r : results)
        if (!r.pass) return false;
    return true;
}

Json law_results_json(const std::vector<LawResult>& results) {
    Json laws = Json::array();
    for (const LawResult& r : results) {
        Json law;
        law["name"] = r.name;
        law["category"] = r.category;
        law["negative_control"] = r.negative_control;
        law["exhaustive_cases"] = r.exhaustive_cases;
        law["randomized_cases"] = r.randomized_cases;
        law["verdict"] = r.pass ? "pass" : "fail";
        law["counterexample"] = r.counterexample ? *r.counterexample : Json(nullptr);
        laws.push_back(std::move(law));
    }
    Json out;
    out["all_pass"] = all_pass(results);
    out["laws"] = std::move(laws);
    return out;
}

}  // namespace unrollsem
