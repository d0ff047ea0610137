#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "unrollsem/errors.hpp"
#include "unrollsem/lawcheck.hpp"
#include "unrollsem/trace.hpp"
#include "unrollsem/trace_set.hpp"

using namespace unrollsem;

namespace {

StateUniverse two_vars() {
    return state_space({VarDomain{"x", 0, 9}, VarDomain{"y", 0, 9}});
}

State st(const StateUniverse& u, std::vector<long long> values) {
    auto s = u.find(values);
    REQUIRE(s);
    return *s;
}

// Single-variable states m,n,o,p over 0..3.
struct Small {
    StateUniverse u = state_space({VarDomain{"v", 0, 3}});
    State m = *u.find({0});
    State n = *u.find({1});
    State o = *u.find({2});
    State p = *u.find({3});
};

}  // namespace

TEST_CASE("expression evaluation over a state") {
    StateUniverse u = two_vars();
    // state after x := 2; y := 5
    State s = st(u, {2, 5});
    CHECK(eval_int(s, *mul(var_ref("x"), var_ref("y"))) == 10);

    State zero = st(u, {0, 0});
    CHECK(eval_bool(zero, *eq(var_ref("x"), int_lit(0))));

    State three = st(u, {3, 0});
    CHECK(eval_int(three, *sub(var_ref("x"), int_lit(1))) == 2);
}

TEST_CASE("typecheck rejects ill-formed expressions") {
    VarLayout layout({VarDomain{"x", 0, 3}});
    CHECK_THROWS_AS(typecheck(*var_ref("nope"), layout), ParseError);
    CHECK_THROWS_AS(typecheck(*add(var_ref("x"), bool_lit(true)), layout), ParseError);
    CHECK_THROWS_AS(typecheck(*lnot(var_ref("x")), layout), ParseError);
    CHECK(typecheck(*ge(var_ref("x"), int_lit(1)), layout) == ExprType::Bool);
}

TEST_CASE("concatenation merges at the border") {
    Small s;
    Trace left({s.m, s.n});
    Trace right({s.n, s.o, s.p});
    auto z = concat_traces(left, right);
    REQUIRE(z);
    CHECK(*z == Trace({s.m, s.n, s.o, s.p}));

    SUBCASE("stationary traces are neutral") {
        auto from_stationary = concat_traces(Trace::stationary(s.m), Trace({s.m, s.n}));
        REQUIRE(from_stationary);
        CHECK(*from_stationary == Trace({s.m, s.n}));
        auto to_stationary = concat_traces(Trace({s.m, s.n}), Trace::stationary(s.n));
        REQUIRE(to_stationary);
        CHECK(*to_stationary == Trace({s.m, s.n}));
    }

    SUBCASE("border mismatch has no witness") {
        CHECK(!concat_traces(Trace::stationary(s.m), Trace::stationary(s.n)));
    }

    SUBCASE("annotations travel with their steps") {
        Trace labelled({s.m, s.n}, {StepLabel{"a"}});
        auto combined = concat_traces(labelled, Trace({s.n, s.o}, {StepLabel{"b"}}));
        REQUIRE(combined);
        REQUIRE(combined->annotations().size() == 2);
        CHECK(combined->annotations()[0] == StepLabel{"a"});
        CHECK(combined->annotations()[1] == StepLabel{"b"});
    }
}

TEST_CASE("prefix order") {
    Small s;
    Trace mn({s.m, s.n});
    Trace mnop({s.m, s.n, s.o, s.p});
    Trace mo({s.m, s.o});

    CHECK(is_prefix(mn, mnop));
    CHECK(is_proper_prefix(mn, mnop));
    CHECK(is_prefix(mn, mn));
    CHECK(!is_proper_prefix(mn, mn));
    CHECK(!is_prefix(mn, mo));

    SUBCASE("prefix compares annotations too") {
        Trace labelled({s.m, s.n}, {StepLabel{"a"}});
        CHECK(!is_prefix(labelled, mnop));
        Trace extended({s.m, s.n, s.o}, {StepLabel{"a"}, std::nullopt});
        CHECK(is_prefix(labelled, extended));
    }
}

TEST_CASE("prefix order is a partial order") {
    // All traces of length <= 3 over a 2-state universe.
    const auto& traces = exhaustive_traces();
    REQUIRE(traces.size() == 14);
    for (const Trace& x : traces) {
        CHECK(is_prefix(x, x));
        for (const Trace& z : traces) {
            if (is_prefix(x, z) && is_prefix(z, x)) CHECK(x == z);
            for (const Trace& w : traces)
                if (is_prefix(x, z) && is_prefix(z, w)) CHECK(is_prefix(x, w));
        }
    }
}

TEST_CASE("concat is associative where defined") {
    const auto& traces = exhaustive_traces();
    for (const Trace& x : traces)
        for (const Trace& y : traces)
            for (const Trace& w : traces) {
                auto xy = concat_traces(x, y);
                auto yw = concat_traces(y, w);
                if (!xy || !yw) continue;
                auto left = concat_traces(*xy, w);
                auto right = concat_traces(x, *yw);
                REQUIRE(left);
                REQUIRE(right);
                CHECK(*left == *right);
            }
}

TEST_CASE("test satisfaction") {
    StateUniverse u = state_space({VarDomain{"x", 0, 3}});
    State one = *u.find({1});
    State zero = *u.find({0});
    TestSpec zero_test{eq(var_ref("x"), int_lit(0)), std::nullopt};

    CHECK(satisfies(Trace({one, zero}), zero_test));
    CHECK(!satisfies(Trace::stationary(one), zero_test));

    SUBCASE("anchored tests discriminate on the step label") {
        Trace labelled({one, zero}, {StepLabel{"L1"}});
        CHECK(satisfies(labelled, TestSpec{zero_test.predicate, StepLabel{"L1"}}));
        CHECK(!satisfies(labelled, TestSpec{zero_test.predicate, StepLabel{"L2"}}));
        // The anchored state must satisfy the predicate as well.
        CHECK(!satisfies(labelled, TestSpec{eq(var_ref("x"), int_lit(3)), StepLabel{"L1"}}));
        // Anchors never match the initial state.
        CHECK(!satisfies(Trace::stationary(zero), TestSpec{zero_test.predicate, StepLabel{"L1"}}));
    }
}

TEST_CASE("satisfaction extends along prefixes, exhaustively") {
    const auto& traces = exhaustive_traces();
    const auto& pool = predicate_pool(lawcheck_universe(2));
    for (const Trace& x : traces)
        for (const Trace& z : traces) {
            if (!is_prefix(x, z)) continue;
            for (const ExprPtr& pred : pool) {
                TestSpec t{pred, std::nullopt};
                if (satisfies(x, t)) CHECK(satisfies(z, t));
            }
        }
}

TEST_CASE("traces with identical states but different labels are distinct") {
    Small s;
    Trace plain({s.m, s.n});
    Trace labelled({s.m, s.n}, {StepLabel{"a"}});
    CHECK(plain != labelled);
    CHECK((plain < labelled || labelled < plain));
    CHECK(labelled.without_labels() == plain);
}

TEST_CASE("trace construction rejects bad shapes") {
    Small s;
    CHECK_THROWS_AS(Trace({}), Error);
    CHECK_THROWS_AS(Trace({s.m, s.n}, {StepLabel{"a"}, StepLabel{"b"}}), Error);
}
