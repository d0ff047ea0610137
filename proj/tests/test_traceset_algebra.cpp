#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "unrollsem/errors.hpp"
#include "unrollsem/lawcheck.hpp"
#include "unrollsem/trace_set.hpp"

using namespace unrollsem;

namespace {

struct Fixture {
    StateUniverse u = state_space({VarDomain{"x", 0, 3}});
    State s0 = *u.find({0});
    State s1 = *u.find({1});
    State s2 = *u.find({2});
    State s3 = *u.find({3});

    TraceSet set(std::vector<Trace> traces) { return TraceSet::from_traces(std::move(traces)); }
};

}  // namespace

TEST_CASE("state_space enumerates the cartesian product in order") {
    StateUniverse u = state_space({VarDomain{"x", 0, 1}, VarDomain{"y", 0, 2}});
    REQUIRE(u.size() == 6);
    CHECK(u.states().front().values() == std::vector<long long>{0, 0});
    CHECK(u.states().back().values() == std::vector<long long>{1, 2});
    for (std::size_t i = 1; i < u.size(); ++i) CHECK(u.states()[i - 1] < u.states()[i]);

    CHECK_THROWS_AS(state_space({VarDomain{"x", 0, 100}, VarDomain{"y", 0, 100}}),
                    ResourceError);
    try {
        state_space({VarDomain{"x", 0, 100}, VarDomain{"y", 0, 100}});
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("10201") != std::string::npos);
    }
    CHECK_THROWS_AS(state_space({}), Error);
}

TEST_CASE("skip is the stationary trace of every state") {
    StateUniverse u = state_space({VarDomain{"x", 0, 2}});
    TraceSet skip = skip_over(u);
    CHECK(skip.size() == 3);
    for (const Trace& t : skip.traces()) CHECK(t.is_stationary());
    CHECK(skip.exact());
}

TEST_CASE("fail is empty and absorbing under sequencing") {
    Fixture f;
    TraceSet a = f.set({Trace({f.s0, f.s1}), Trace::stationary(f.s2)});
    CHECK(fail_set().empty());
    CHECK(set_eq(seq(fail_set(), a), fail_set()));
    CHECK(set_eq(seq(a, fail_set()), fail_set()));
    CHECK(set_eq(set_union(fail_set(), a), a));
    CHECK(!tests_set(fail_set(), TestSpec{bool_lit(true), std::nullopt}));
}

TEST_CASE("skip is neutral for sequencing") {
    Fixture f;
    TraceSet a = f.set({Trace({f.s3, f.s2}), Trace({f.s1, f.s0, f.s0})});
    CHECK(set_eq(seq(a, skip_over(f.u)), a));
    CHECK(set_eq(seq(skip_over(f.u), a), a));
}

TEST_CASE("sequencing concatenates compatible pairs only") {
    Fixture f;
    TraceSet singleton_mn = f.set({Trace({f.s0, f.s1})});
    TraceSet singleton_no = f.set({Trace({f.s1, f.s2})});
    TraceSet mismatched = f.set({Trace({f.s3, f.s2})});

    TraceSet joined = seq(singleton_mn, singleton_no);
    REQUIRE(joined.size() == 1);
    CHECK(joined.traces()[0] == Trace({f.s0, f.s1, f.s2}));
    CHECK(seq(singleton_mn, mismatched).empty());
}

TEST_CASE("sequencing respects the cardinality cap") {
    Fixture f;
    TraceSet a = skip_over(f.u);
    CHECK_THROWS_AS(seq(a, a, 2), ResourceError);
    CHECK_NOTHROW(seq(a, a, 4));
}

TEST_CASE("union merges duplicates") {
    Fixture f;
    TraceSet a = f.set({Trace({f.s0, f.s1}), Trace::stationary(f.s3)});
    CHECK(set_eq(set_union(a, a), a));
    CHECK(set_union(a, f.set({Trace({f.s0, f.s1})})).size() == 2);
}

TEST_CASE("restriction filters on the initial state") {
    Fixture f;
    ExprPtr x_is_1 = eq(var_ref("x"), int_lit(1));
    TraceSet a = f.set({Trace({f.s1, f.s0}), Trace::stationary(f.s0)});
    TraceSet restricted = restrict_set(x_is_1, a);
    REQUIRE(restricted.size() == 1);
    CHECK(restricted.traces()[0] == Trace({f.s1, f.s0}));

    CHECK(set_eq(restrict_set(bool_lit(false), a), fail_set()));
    CHECK(set_eq(restrict_set(bool_lit(true), a), a));
    CHECK(set_eq(restrict_set(bool_lit(true), skip_over(f.u)), skip_over(f.u)));
}

TEST_CASE("corestriction filters on the final state") {
    Fixture f;
    ExprPtr x_is_0 = eq(var_ref("x"), int_lit(0));
    TraceSet a = f.set({Trace({f.s1, f.s0}), Trace({f.s0, f.s1})});
    TraceSet corestricted = corestrict_set(a, x_is_0);
    REQUIRE(corestricted.size() == 1);
    CHECK(corestricted.traces()[0] == Trace({f.s1, f.s0}));

    CHECK(set_eq(corestrict_set(a, bool_lit(false)), fail_set()));
    CHECK(set_eq(corestrict_set(a, bool_lit(true)), a));
}

TEST_CASE("power iterates sequencing from skip") {
    Fixture f;
    // countdown body traces: x decremented where possible
    TraceSet body =
        f.set({Trace({f.s3, f.s2}), Trace({f.s2, f.s1}), Trace({f.s1, f.s0})});
    CHECK(set_eq(power(body, 0, f.u), skip_over(f.u)));
    CHECK(set_eq(power(body, 1, f.u), body));

    TraceSet squared = power(body, 2, f.u);
    // brute-force expectation: all compatible pairs of body traces
    TraceSet expected = f.set({Trace({f.s3, f.s2, f.s1}), Trace({f.s2, f.s1, f.s0})});
    CHECK(set_eq(squared, expected));

    CHECK(power(body, 4, f.u).empty());
}

TEST_CASE("set-level prefix order") {
    Fixture f;
    TraceSet a = f.set({Trace({f.s0, f.s1})});
    TraceSet b = f.set({Trace({f.s0, f.s1, f.s2})});
    CHECK(set_prefix_le(a, a));
    CHECK(set_prefix_le(fail_set(), a));
    CHECK(set_prefix_le(a, b));
    CHECK(!set_prefix_le(b, a));
    CHECK(set_prefix_lt(a, b));
    CHECK(!set_prefix_lt(a, a));
}

TEST_CASE("set-level testing") {
    Fixture f;
    TestSpec zero{eq(var_ref("x"), int_lit(0)), std::nullopt};
    TraceSet a = f.set({Trace({f.s1, f.s0})});
    CHECK(tests_set(a, zero));
    CHECK(!tests_set(f.set({Trace::stationary(f.s1)}), zero));
}

TEST_CASE("set equality, subset and difference") {
    Fixture f;
    TraceSet a = f.set({Trace({f.s0, f.s1}), Trace::stationary(f.s2)});
    CHECK(set_eq(a, a));
    CHECK(subset(f.set({Trace::stationary(f.s2)}), a));
    CHECK(!subset(a, f.set({Trace::stationary(f.s2)})));
    CHECK(set_eq(difference(a, fail_set()), a));
    CHECK(set_eq(difference(a, a), fail_set()));

    // countdown level sets: difference(levels_2, levels_1) = {<1,0>}
    TraceSet levels1 = f.set({Trace::stationary(f.s0)});
    TraceSet levels2 = f.set({Trace::stationary(f.s0), Trace({f.s1, f.s0})});
    TraceSet diff = difference(levels2, levels1);
    REQUIRE(diff.size() == 1);
    CHECK(diff.traces()[0] == Trace({f.s1, f.s0}));
}

TEST_CASE("canonical ordering and deduplication") {
    Fixture f;
    TraceSet a = TraceSet::from_traces(
        {Trace({f.s1, f.s0}), Trace::stationary(f.s0), Trace({f.s1, f.s0})});
    REQUIRE(a.size() == 2);
    CHECK(a.traces()[0] == Trace::stationary(f.s0));
    CHECK(a.traces()[1] == Trace({f.s1, f.s0}));
    CHECK(a.contains(Trace({f.s1, f.s0})));
    CHECK(!a.contains(Trace::stationary(f.s1)));
}

TEST_CASE("truncation propagates through every operation") {
    Fixture f;
    TraceSet exact = f.set({Trace({f.s0, f.s1})});
    TraceSet truncated = exact.with_flag(3);
    CHECK(!truncated.exact());
    CHECK(*truncated.truncated_fuel() == 3);

    CHECK(!set_union(exact, truncated).exact());
    CHECK(!seq(truncated, skip_over(f.u)).exact());
    CHECK(!restrict_set(bool_lit(true), truncated).exact());
    CHECK(!corestrict_set(truncated, bool_lit(true)).exact());
    CHECK(!difference(truncated, exact).exact());
    CHECK(set_union(exact, exact).exact());

    // the earliest truncation bound wins
    CHECK(*set_union(truncated, exact.with_flag(5)).truncated_fuel() == 3);
    // erasure keeps the flag
    CHECK(!erase_labels(truncated).exact());
}

TEST_CASE("label erasure merges label-variants of a trace") {
    Fixture f;
    TraceSet a = f.set({Trace({f.s0, f.s1}, {StepLabel{"a"}}), Trace({f.s0, f.s1})});
    REQUIRE(a.size() == 2);
    CHECK(erase_labels(a).size() == 1);
}
