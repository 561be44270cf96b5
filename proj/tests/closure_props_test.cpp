#include <doctest.h>

#include "closures/closure_props.hpp"
#include "closures/generators.hpp"
#include "test_support.hpp"

using namespace closures;
using namespace closures::test;

namespace {

Dfa a_plus_dfa() {
    Alphabet s = ab();
    return minimize(determinize(
        closure(nfa_from_words(s, {w(s, "a")}), ClosureKind::Positive)));
}

Dfa ab_concat_dfa() {
    Alphabet s = ab();
    Nfa cat = concatenate(closure(nfa_from_words(s, {w(s, "a")}), ClosureKind::Positive),
                          closure(nfa_from_words(s, {w(s, "b")}), ClosureKind::Positive));
    return minimize(determinize(cat));
}

bool verifies(const Dfa& d, const Counterexample& c) {
    return run(d, c.u) && run(d, c.v) && !run(d, c.uv());
}

}  // namespace

TEST_CASE("counterexample NFA accepts exactly the counterexample words") {
    Alphabet s = ab();
    CHECK(is_empty(determinize(build_counterexample_nfa(a_plus_dfa()))));
    CHECK(is_empty(determinize(build_counterexample_nfa(dfa_all(s)))));

    Nfa cex = build_counterexample_nfa(ab_concat_dfa());
    auto shortest = shortest_accepted(cex);
    REQUIRE(shortest.has_value());
    CHECK(shortest->dotted() == "a.b.a.b");

    // semantic cross-check on random DFAs: w accepted iff some split has
    // u, v in L and w outside L
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        Dfa d = random_dfa(4, s, Rational(1, 2), seed);
        Nfa m = build_counterexample_nfa(d);
        CHECK(m.num_states() == d.num_states() + d.num_states() * d.num_states());
        for (const Word& word : all_words(s, 7)) {
            bool expect = false;
            if (!run(d, word)) {
                for (int i = 1; i < word.size() && !expect; ++i)
                    expect = run(d, word.subword(0, i)) && run(d, word.subword(i, word.size()));
            }
            CHECK(run(m, word) == expect);
        }
    }
}

TEST_CASE("check_property: positive closed") {
    CHECK(check_property(a_plus_dfa(), Property::PositiveClosed).holds);

    Verdict v = check_property(ab_concat_dfa(), Property::PositiveClosed);
    CHECK_FALSE(v.holds);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->u.dotted() == "a.b");
    CHECK(v.certificate->v.dotted() == "a.b");
    CHECK(verifies(ab_concat_dfa(), *v.certificate));
}

TEST_CASE("check_property: open variants") {
    // Pref({ab}) = {eps, a, ab} is positive-open
    Alphabet s = ab();
    Dfa pref = dfa_of_words(s, {w(s, "eps"), w(s, "a"), w(s, "a.b")});
    CHECK(check_property(pref, Property::PositiveOpen).holds);

    // open fails for {a}+{b}+ with a complement-side certificate
    Verdict v = check_property(ab_concat_dfa(), Property::PositiveOpen);
    CHECK_FALSE(v.holds);
    REQUIRE(v.certificate.has_value());
    CHECK(verifies(complement(ab_concat_dfa()), *v.certificate));
}

TEST_CASE("check_property: kleene and the epsilon flag") {
    Dfa ap = a_plus_dfa();
    Verdict v = check_property(ap, Property::KleeneClosed);
    CHECK_FALSE(v.holds);
    CHECK(v.epsilon_missing);
    CHECK_FALSE(v.certificate.has_value());

    Alphabet s = ab();
    Dfa a_star = minimize(determinize(
        closure(nfa_from_words(s, {w(s, "a")}), ClosureKind::Kleene)));
    CHECK(check_property(a_star, Property::KleeneClosed).holds);

    // {a}+ is both positive-closed and positive-open hence clopen
    CHECK(check_property(ap, Property::ClopenPositive).holds);
    // no language is clopen under Kleene closure: closed needs eps in L,
    // open needs eps outside it
    CHECK_FALSE(check_property(a_star, Property::ClopenKleene).holds);
    CHECK_FALSE(check_property(dfa_all(s), Property::ClopenKleene).holds);
}

TEST_CASE("positive-open equals positive-closed on the complement") {
    Alphabet s = ab();
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Dfa d = random_dfa(4, s, Rational(1, 2), seed);
        CHECK(check_property(d, Property::PositiveOpen).holds ==
              check_property(complement(d), Property::PositiveClosed).holds);
    }
}

TEST_CASE("shortest_counterexample basics") {
    CHECK_FALSE(shortest_counterexample(a_plus_dfa()).has_value());

    auto c = shortest_counterexample(ab_concat_dfa());
    REQUIRE(c.has_value());
    CHECK(c->u.dotted() == "a.b");
    CHECK(c->v.dotted() == "a.b");
    CHECK(c->uv().size() == 4);

    Dfa m2 = witness_automaton(2, WitnessKind::M);
    auto wc = shortest_counterexample(m2);
    REQUIRE(wc.has_value());
    CHECK(wc->uv().size() == 10);
}

TEST_CASE("shortest_counterexample: bound, certificate, independent length") {
    Alphabet s = ab();
    int failing = 0;
    for (std::uint64_t seed = 0; failing < 60 && seed < 400; ++seed) {
        int states = 2 + static_cast<int>(seed % 5);
        Dfa d = random_dfa(states, s, Rational(1, 2), seed);
        auto c = shortest_counterexample(d);
        if (!c) {
            CHECK(check_property(d, Property::PositiveClosed).holds);
            continue;
        }
        ++failing;
        CHECK(verifies(d, *c));
        CHECK(c->uv().size() <= d.num_states() * d.num_states() + d.num_states() - 1);

        // independent route: shortest word of (L.L) \ L
        Nfa ll = concatenate(nfa_from(d), nfa_from(d));
        Dfa gap = boolean_combine(determinize(ll), d, BoolOp::Diff);
        auto indep = shortest_accepted(gap);
        REQUIRE(indep.has_value());
        CHECK(indep->size() == c->uv().size());
        // both routes break length ties lexicographically
        CHECK(indep->dotted() == c->uv().dotted());
    }
    CHECK(failing == 60);
}

TEST_CASE("check_nfa_closed") {
    Alphabet s = ab();
    Nfa all = nfa_from(dfa_all(s));
    CHECK(check_nfa_closed(all).holds);

    Nfa cat = concatenate(closure(nfa_from_words(s, {w(s, "a")}), ClosureKind::Positive),
                          closure(nfa_from_words(s, {w(s, "b")}), ClosureKind::Positive));
    Verdict v = check_nfa_closed(cat);
    CHECK_FALSE(v.holds);
    REQUIRE(v.certificate.has_value());
    CHECK(run(cat, v.certificate->u));
    CHECK(run(cat, v.certificate->v));
    CHECK_FALSE(run(cat, v.certificate->uv()));

    CHECK_THROWS_AS(check_nfa_closed(cat, 1), BudgetExceededError);
}

TEST_CASE("check_nfa_closed agrees with determinize-then-check") {
    Alphabet s = ab();
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Nfa a = random_nfa(1 + static_cast<int>(seed % 5), s, seed * 31 + 7);
        Verdict direct = check_nfa_closed(a);
        Verdict via_dfa = check_property(determinize(a), Property::PositiveClosed);
        CHECK(direct.holds == via_dfa.holds);
        if (direct.certificate) {
            CHECK(run(a, direct.certificate->u));
            CHECK(run(a, direct.certificate->v));
            CHECK_FALSE(run(a, direct.certificate->uv()));
        }
    }
}

TEST_CASE("interior") {
    Alphabet s = ab();
    CHECK(equivalent(interior(dfa_all(s), ClosureKind::Positive), dfa_all(s)));
    Dfa ap = a_plus_dfa();
    CHECK(equivalent(interior(ap, ClosureKind::Positive), ap));

    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        Dfa d = random_dfa(4, s, Rational(1, 2), seed);
        Dfa inner = interior(d, ClosureKind::Positive);
        CHECK(subset_of(inner, d));
        CHECK(check_property(inner, Property::PositiveOpen).holds);
    }

    // closed L, M covering everything: the interiors cover everything too
    Dfa l = minimize(determinize(
        closure(nfa_from_words(s, {w(s, "a"), w(s, "b.b")}), ClosureKind::Positive)));
    Dfa m = minimize(determinize(closure(nfa_from(complement(l)), ClosureKind::Positive)));
    REQUIRE(check_property(m, Property::PositiveClosed).holds);
    REQUIRE(equivalent(boolean_combine(l, m, BoolOp::Or), dfa_all(s)));
    Dfa li = interior(l, ClosureKind::Positive);
    Dfa mi = interior(m, ClosureKind::Positive);
    CHECK(equivalent(boolean_combine(li, mi, BoolOp::Or), dfa_all(s)));
}
