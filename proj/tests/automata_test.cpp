#include <doctest.h>

#include <algorithm>

#include "closures/aut_format.hpp"
#include "closures/automata.hpp"
#include "closures/generators.hpp"
#include "test_support.hpp"

using namespace closures;
using namespace closures::test;

namespace {

// {a}+ over {a,b}
Dfa a_plus() {
    Alphabet s = ab();
    // states: 0 start, 1 in a+, 2 sink
    std::vector<StateId> delta = {1, 2, 1, 2, 2, 2};
    return Dfa(s, 3, 0, {0, 1, 0}, delta);
}

// {a}+{b}+ over {a,b}
Dfa ab_concat() {
    Alphabet s = ab();
    // 0 start, 1 saw a+, 2 saw a+b+, 3 sink
    std::vector<StateId> delta = {1, 3, 1, 2, 3, 2, 3, 3};
    return Dfa(s, 4, 0, {0, 0, 1, 0}, delta);
}

}  // namespace

TEST_CASE("run on DFAs") {
    Alphabet s = unary();
    Dfa all = dfa_all(s);
    CHECK(run(all, w(s, "a.a.a")));
    CHECK(run(all, w(s, "eps")));

    Dfa none = dfa_none(s);
    CHECK_FALSE(run(none, w(s, "eps")));

    CHECK(run(a_plus(), w(ab(), "a.a")));
    CHECK_FALSE(run(a_plus(), w(ab(), "a.b")));
    CHECK_FALSE(run(a_plus(), w(ab(), "eps")));
}

TEST_CASE("run rejects the wrong alphabet") {
    Dfa d = dfa_all(unary());
    CHECK_THROWS_AS(run(d, w(ab(), "a")), AlphabetMismatchError);
    CHECK_THROWS_AS(Word::from_dotted(unary(), "a.c"), SymbolError);
}

TEST_CASE("boolean_combine") {
    Dfa ap = a_plus();
    Dfa none = dfa_none(ab());
    CHECK(is_empty(boolean_combine(ap, none, BoolOp::And)));
    CHECK(is_empty(boolean_combine(ap, ap, BoolOp::Xor)));
    CHECK(equivalent(boolean_combine(ap, none, BoolOp::Or), ap));
    CHECK(boolean_combine(ap, ap, BoolOp::And).num_states() <=
          ap.num_states() * ap.num_states());

    // L^2 within L for the closed language {a}+
    Nfa sq = concatenate(nfa_from(ap), nfa_from(ap));
    Dfa sq_dfa = determinize(sq);
    CHECK(is_empty(boolean_combine(sq_dfa, ap, BoolOp::Diff)));
}

TEST_CASE("complement") {
    Dfa all = dfa_all(ab());
    CHECK(is_empty(complement(all)));
    Dfa ap = a_plus();
    CHECK(equivalent(complement(complement(ap)), ap));
}

TEST_CASE("complement agrees with run everywhere (exhaustive to length 8)") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Dfa d = random_dfa(4, ab(), Rational(1, 2), seed);
        Dfa dc = complement(d);
        for (const Word& word : all_words(ab(), 8)) CHECK(run(dc, word) == !run(d, word));
    }
}

TEST_CASE("concatenate") {
    Alphabet s = ab();
    Nfa ap = nfa_from(a_plus());
    Nfa bp = nfa_from_words(s, {w(s, "b")});
    Nfa bplus = closure(bp, ClosureKind::Positive);

    Nfa cat = concatenate(ap, bplus);
    CHECK(run(cat, w(s, "a.b")));
    CHECK_FALSE(run(cat, w(s, "a.b.a.b")));

    // right identity and annihilator
    Nfa eps_only = nfa_from_words(s, {w(s, "eps")});
    CHECK(language_upto(determinize(concatenate(ap, eps_only)), 5) ==
          language_upto(a_plus(), 5));
    Nfa none = nfa_from(dfa_none(s));
    CHECK(is_empty(determinize(concatenate(none, ap))));
}

TEST_CASE("concatenation matches the split oracle to length 6") {
    Alphabet s = ab();
    for (std::uint64_t seed : {11u, 12u}) {
        Dfa d1 = random_dfa(3, s, Rational(1, 2), seed);
        Dfa d2 = random_dfa(3, s, Rational(1, 2), seed + 100);
        Nfa cat = concatenate(nfa_from(d1), nfa_from(d2));
        for (const Word& word : all_words(s, 6)) {
            bool expect = false;
            for (int i = 0; i <= word.size() && !expect; ++i)
                expect = run(d1, word.subword(0, i)) && run(d2, word.subword(i, word.size()));
            CHECK(run(cat, word) == expect);
        }
    }
}

TEST_CASE("closure") {
    Alphabet s = ab();
    Nfa ab_word = nfa_from_words(s, {w(s, "a.b")});
    Nfa pos = closure(ab_word, ClosureKind::Positive);
    CHECK(run(pos, w(s, "a.b.a.b")));
    CHECK_FALSE(run(pos, w(s, "eps")));

    Nfa none = nfa_from(dfa_none(s));
    Nfa kleene_none = closure(none, ClosureKind::Kleene);
    CHECK(language_upto(determinize(kleene_none), 3) == std::set<std::string>{"eps"});

    Nfa two = nfa_from_words(s, {w(s, "a"), w(s, "b")});
    CHECK(equivalent(determinize(closure(two, ClosureKind::Positive)), dfa_sigma_plus(s)));
}

TEST_CASE("positive closure matches a factorization oracle to length 8") {
    Alphabet s = ab();
    std::vector<Word> words = {w(s, "a.b"), w(s, "b.b"), w(s, "a")};
    Nfa base = nfa_from_words(s, words);
    Dfa closed = determinize(closure(base, ClosureKind::Positive));

    // dynamic program over prefixes: reachable[i] = prefix of length i is a
    // concatenation of one or more base words
    for (const Word& word : all_words(s, 8)) {
        std::vector<char> reach(static_cast<size_t>(word.size()) + 1, 0);
        reach[0] = 1;
        for (int i = 0; i <= word.size(); ++i) {
            if (!reach[static_cast<size_t>(i)]) continue;
            for (const Word& piece : words) {
                int j = i + piece.size();
                if (j > word.size()) continue;
                if (word.subword(i, j) == piece) reach[static_cast<size_t>(j)] = 1;
            }
        }
        bool expect = word.size() > 0 && reach[static_cast<size_t>(word.size())] != 0;
        CHECK(run(closed, word) == expect);
    }
}

TEST_CASE("determinize") {
    Alphabet s = ab();
    Dfa ap = a_plus();
    CHECK(equivalent(determinize(nfa_from(ap)), ap));

    Nfa cat = concatenate(closure(nfa_from_words(s, {w(s, "a")}), ClosureKind::Positive),
                          closure(nfa_from_words(s, {w(s, "b")}), ClosureKind::Positive));
    Dfa det = determinize(cat);
    CHECK(det.num_states() <= 5);
    CHECK(run(det, w(s, "a.a.b")));
    CHECK_FALSE(run(det, w(s, "a.b.a")));

    // membership preserved exhaustively
    for (const Word& word : all_words(s, 8)) CHECK(run(det, word) == run(cat, word));
}

TEST_CASE("determinize stays within the subset bound and honors its budget") {
    Alphabet s = ab();
    Nfa a = random_nfa(5, s, 42);
    Dfa det = determinize(a);
    CHECK(det.num_states() <= 32 + 1);  // 2^5 subsets plus a possible sink
    CHECK_THROWS_AS(determinize(a, 1), BudgetExceededError);
    for (const Word& word : all_words(s, 6)) CHECK(run(det, word) == run(a, word));
}

TEST_CASE("shortest_accepted") {
    Alphabet s = ab();
    CHECK_FALSE(shortest_accepted(dfa_none(s)).has_value());

    Nfa abp = closure(nfa_from_words(s, {w(s, "a.b")}), ClosureKind::Positive);
    auto shortest = shortest_accepted(abp);
    REQUIRE(shortest.has_value());
    CHECK(shortest->dotted() == "a.b");

    // lexicographic tie-break: {b, ab, aa} has two length-2 words; "b" wins
    Dfa d = dfa_of_words(s, {w(s, "b"), w(s, "a.b"), w(s, "a.a")});
    CHECK(shortest_accepted(d)->dotted() == "b");
    CHECK(shortest_accepted(nfa_from(d))->dotted() == "b");

    // length is bounded by the state count minus one
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Dfa r = random_dfa(5, s, Rational(1, 4), seed);
        auto word = shortest_accepted(r);
        if (word) CHECK(word->size() <= r.num_states() - 1);
        CHECK(word.has_value() == !is_empty(r));
    }
}

TEST_CASE("equivalent") {
    Dfa ap = a_plus();
    CHECK(equivalent(ap, ap));
    CHECK_FALSE(equivalent(dfa_all(ab()), dfa_none(ab())));

    // closure is idempotent
    Alphabet s = ab();
    std::vector<Word> base = {w(s, "a.b"), w(s, "b")};
    Dfa once = determinize(closure(nfa_from_words(s, base), ClosureKind::Positive));
    Dfa twice = determinize(closure(nfa_from(once), ClosureKind::Positive));
    CHECK(equivalent(once, twice));
}

TEST_CASE("minimize") {
    Alphabet s = ab();
    // accept-all with redundant states
    std::vector<StateId> delta = {1, 2, 2, 0, 1, 1};
    Dfa redundant(s, 3, 0, {1, 1, 1}, delta);
    Dfa m = minimize(redundant);
    CHECK(m.num_states() == 1);
    CHECK(equivalent(m, dfa_all(s)));

    Dfa mm = minimize(m);
    CHECK(mm.num_states() == m.num_states());

    Dfa witness = witness_automaton(3, WitnessKind::MPrime);
    Dfa small = minimize(witness);
    CHECK(equivalent(small, witness));
    SplitMix64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        int len = static_cast<int>(rng.below(12));
        std::vector<SymId> syms(static_cast<size_t>(len));
        for (auto& sym : syms) sym = static_cast<SymId>(rng.below(2));
        Word word(witness.alphabet(), syms);
        CHECK(run(small, word) == run(witness, word));
    }
}

TEST_CASE("aut format round trip") {
    std::string text =
        "alphabet: 0 1\n"
        "states: q0 q1 r d\n"
        "initial: q0\n"
        "finals: q0 q1\n"
        "q0 0 q1\n"
        "q0 1 r\n"
        "q1 0 q1\n"
        "q1 1 d\n"
        "r 0 d\n"
        "r 1 d\n"
        "d 0 d\n"
        "d 1 d\n";
    Dfa d = parse_dfa(text);
    CHECK(d.num_states() == 4);
    std::string again = serialize(parse_dfa(serialize(d)));
    CHECK(serialize(d) == again);
}

TEST_CASE("aut parser completes partial tables with a sink") {
    std::string text =
        "alphabet: a b\n"
        "states: s0 s1\n"
        "initial: s0\n"
        "finals: s1\n"
        "s0 a s1\n";
    Dfa d = parse_dfa(text);
    CHECK(d.num_states() == 3);  // implicit sink added
    CHECK(run(d, w(d.alphabet(), "a")));
    CHECK_FALSE(run(d, w(d.alphabet(), "b")));
    CHECK_FALSE(run(d, w(d.alphabet(), "a.a")));
}

TEST_CASE("aut parser rejects nondeterminism in DFAs and reads it as NFA") {
    std::string text =
        "alphabet: a\n"
        "states: s0 s1\n"
        "initial: s0\n"
        "finals: s1\n"
        "s0 a s0\n"
        "s0 a s1\n";
    CHECK_THROWS_AS(parse_dfa(text), ParseError);
    CHECK(looks_nondeterministic(text));
    Nfa a = parse_nfa(text);
    CHECK(run(a, w(a.alphabet(), "a.a")));

    std::string eps_text =
        "alphabet: a\n"
        "states: s0 s1\n"
        "initial: s0\n"
        "finals: s1\n"
        "s0 eps s1\n"
        "s1 a s1\n";
    CHECK_THROWS_AS(parse_dfa(eps_text), ParseError);
    Nfa b = parse_nfa(eps_text);
    CHECK(run(b, w(b.alphabet(), "eps")));
}

TEST_CASE("word list files") {
    std::string text = "a.b\nb\n# comment\neps\n";
    std::vector<Word> words = parse_word_list(text);
    REQUIRE(words.size() == 3);
    CHECK(words[0].dotted() == "a.b");
    CHECK(words[2].dotted() == "eps");
    CHECK(serialize_word_list(words) == "a.b\nb\neps\n");
}
