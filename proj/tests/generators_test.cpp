#include <doctest.h>

#include "closures/aut_format.hpp"
#include "closures/closure_props.hpp"
#include "closures/generators.hpp"
#include "closures/lang_expr.hpp"
#include "closures/oracle.hpp"
#include "test_support.hpp"

using namespace closures;
using namespace closures::test;

TEST_CASE("witness automaton structure") {
    for (int n = 2; n <= 6; ++n) {
        Dfa m = witness_automaton(n, WitnessKind::MPrime);
        CHECK(m.num_states() == 2 * n + 5);

        const StateId r = static_cast<StateId>(n + 1);
        const StateId p0 = static_cast<StateId>(n + 2);
        const StateId s = static_cast<StateId>(2 * n + 3);
        const StateId d = static_cast<StateId>(2 * n + 4);
        CHECK(m.step(static_cast<StateId>(n), 1) == r);
        CHECK(m.step(r, 0) == d);
        CHECK(m.step(r, 1) == p0);
        CHECK(m.step(p0 + n, 1) == s);
        CHECK(m.step(0, 0) == d);
        CHECK_FALSE(m.is_final(r));
        CHECK_FALSE(m.is_final(d));
        CHECK(m.is_final(0));
        CHECK(m.is_final(s));

        Dfa mn = witness_automaton(n, WitnessKind::M);
        CHECK(equivalent(mn, complement(m)));
    }
    CHECK_THROWS_AS(witness_automaton(1, WitnessKind::M), Error);
}

TEST_CASE("witness runs from the transition table") {
    Dfa m5 = witness_automaton(5, WitnessKind::MPrime);
    Alphabet s = m5.alphabet();
    CHECK_FALSE(run(m5, w(s, "1.0.0.0.0.1")));  // path ends at r
    CHECK(run(m5, w(s, "eps")));                // q0 is accepting
    CHECK(shortest_accepted(m5)->dotted() == "eps");
}

TEST_CASE("witness proof words") {
    for (int n = 2; n <= 5; ++n) {
        Dfa mp = witness_automaton(n, WitnessKind::MPrime);
        Alphabet s = mp.alphabet();
        auto zeros = [&](int count) {
            std::vector<SymId> syms;
            syms.push_back(1);
            for (int i = 0; i < count; ++i) syms.push_back(0);
            syms.push_back(1);
            return Word(s, syms);  // 1 0^count 1
        };
        Word u = zeros(n - 1);
        Word v = zeros(n * n + n - 1);
        CHECK_FALSE(run(mp, u));
        CHECK_FALSE(run(mp, v));
        CHECK(run(mp, u.concat(v)));
        CHECK(u.concat(v).size() == n * n + 2 * n + 2);
    }
}

TEST_CASE("witness M2 shortest counterexample, brute forced") {
    Dfa m2 = witness_automaton(2, WitnessKind::M);
    auto c = shortest_counterexample(m2);
    REQUIRE(c.has_value());
    CHECK(c->uv().size() == 10);
    CHECK(c->u.dotted() == "1.0.1");
    CHECK(c->v.dotted() == "1.0.0.0.0.0.1");

    // brute force over all words up to length 10, in length-lex order
    Alphabet s = m2.alphabet();
    bool found = false;
    for (const Word& word : all_words(s, 10)) {
        if (run(m2, word)) continue;
        for (int i = 1; i < word.size() && !found; ++i) {
            if (run(m2, word.subword(0, i)) && run(m2, word.subword(i, word.size()))) {
                found = true;
                CHECK(word.size() == 10);
                CHECK(word == c->uv());
                CHECK(i == c->u.size());  // minimal split
            }
        }
        if (found) break;
    }
    CHECK(found);
}

TEST_CASE("witness serialization round trips bit-identically") {
    Dfa m3 = witness_automaton(3, WitnessKind::MPrime);
    std::string text = serialize(m3, witness_state_names(3));
    std::vector<std::string> names;
    Dfa back = parse_dfa(text, &names);
    CHECK(serialize(back, names) == text);
}

TEST_CASE("random_dfa") {
    Alphabet s = ab();
    Dfa d1 = random_dfa(5, s, Rational(1, 2), 99);
    Dfa d2 = random_dfa(5, s, Rational(1, 2), 99);
    CHECK(equivalent(d1, d2));
    for (StateId q = 0; q < d1.num_states(); ++q) {
        CHECK(d1.is_final(q) == d2.is_final(q));
        for (SymId a = 0; a < s.size(); ++a) CHECK(d1.step(q, a) == d2.step(q, a));
    }

    CHECK(equivalent(random_dfa(4, s, Rational(1, 1), 7), dfa_all(s)));
    CHECK(is_empty(random_dfa(4, s, Rational(0, 1), 7)));
}

TEST_CASE("random_nfa is reproducible") {
    Alphabet s = ab();
    Nfa a1 = random_nfa(4, s, 123);
    Nfa a2 = random_nfa(4, s, 123);
    for (const Word& word : all_words(s, 5)) CHECK(run(a1, word) == run(a2, word));
}

TEST_CASE("random_finite_language") {
    Alphabet s = ab();
    auto tiny = random_finite_language(1, 2, s, 5);
    REQUIRE(tiny.size() == 2);
    CHECK(((tiny[0].dotted() == "a" && tiny[1].dotted() == "b") ||
           (tiny[0].dotted() == "b" && tiny[1].dotted() == "a")));

    auto ws = random_finite_language(3, 5, s, 11);
    auto again = random_finite_language(3, 5, s, 11);
    REQUIRE(ws.size() == 5);
    for (size_t i = 0; i < ws.size(); ++i) {
        CHECK(ws[i] == again[i]);
        CHECK(ws[i].size() >= 1);
        CHECK(ws[i].size() <= 3);
    }
    CHECK_THROWS_AS(random_finite_language(1, 3, s, 5), Error);
}

TEST_CASE("prefix_language") {
    Alphabet s = ab();
    auto pref = prefix_language(w(s, "a.b"));
    REQUIRE(pref.size() == 3);
    CHECK(pref[0].dotted() == "eps");
    CHECK(pref[1].dotted() == "a");
    CHECK(pref[2].dotted() == "a.b");

    CHECK(prefix_language(w(s, "a")).size() == 2);
    CHECK(prefix_language(w(s, "b.a.b.a")).size() == 5);
    CHECK_THROWS_AS(prefix_language(w(s, "eps")), EmptyWordError);

    LangExpr fin = LangExpr::finite(s, pref);
    OracleOptions opt;
    opt.max_len = 6;
    opt.parallel = false;
    CHECK(oracle_check(fin, OracleProp::Open, opt).holds);
}

TEST_CASE("derive_seed gives distinct reproducible streams") {
    CHECK(derive_seed(1, 0) == derive_seed(1, 0));
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
}
