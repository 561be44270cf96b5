#include <doctest.h>

#include <cmath>

#include "closures/closure_props.hpp"
#include "closures/generators.hpp"
#include "closures/oracle.hpp"
#include "closures/separation.hpp"
#include "test_support.hpp"

using namespace closures;
using namespace closures::test;

namespace {

std::string dotted_all(const std::vector<Word>& ws) {
    std::string out;
    for (const Word& x : ws) out += x.dotted() + " ";
    return out;
}

}  // namespace

TEST_CASE("separate_clopen fixtures") {
    Alphabet s = ab();
    CHECK(serialize_expr(separate_clopen(w(s, "a"), w(s, "b")).first) == "(sig+ a)");
    CHECK(serialize_expr(separate_clopen(w(s, "a.a.b"), w(s, "a.b")).first) ==
          "(freq a >= 2/3)");
    CHECK(serialize_expr(separate_clopen(w(s, "a.b"), w(s, "b.a")).first) ==
          "(union (inter (image 2 (sig+ <a.b>)) (freq a = 1/2)) (freq a < 1/2))");

    CHECK_THROWS_AS(separate_clopen(w(s, "a.b"), w(s, "a.b.a.b")), CommuteError);
    CHECK_THROWS_AS(separate_clopen(w(s, "eps"), w(s, "a")), EmptyWordError);
}

TEST_CASE("separate_clopen trace replays to the result") {
    Alphabet s = ab();
    SplitMix64 rng(5150);
    int done = 0;
    while (done < 40) {
        auto draw = [&] {
            int len = 1 + static_cast<int>(rng.below(5));
            std::vector<SymId> syms(static_cast<size_t>(len));
            for (auto& sym : syms) sym = static_cast<SymId>(rng.below(2));
            return Word(s, syms);
        };
        Word u = draw(), v = draw();
        if (commutes(u, v)) continue;
        ++done;
        auto [expr, trace] = separate_clopen(u, v);
        CHECK(replay_trace(u, v, trace) == expr);
        CHECK(expr.member(u));
        CHECK_FALSE(expr.member(v));
        // each block descent divides the combined length by at least two
        int descents = 0;
        for (const SeparationStep& step : trace.steps)
            if (step.kind == SeparationStep::Kind::BlockDescent) ++descents;
        CHECK(descents <= static_cast<int>(std::log2(u.size() + v.size())));
    }
}

TEST_CASE("separate_clopen output is clopen on both sides (exhaustive, small)") {
    Alphabet s = ab();
    std::vector<Word> words = all_words(s, 5);
    OracleOptions opt;
    opt.max_len = 10;
    opt.parallel = false;
    for (const Word& u : words) {
        if (u.empty()) continue;
        for (const Word& v : words) {
            if (v.empty() || u.size() + v.size() > 6) continue;
            if (commutes(u, v)) {
                CHECK_THROWS_AS(separate_clopen(u, v), CommuteError);
                continue;
            }
            LangExpr e = separate_clopen(u, v).first;
            CHECK(e.member(u));
            CHECK_FALSE(e.member(v));

            WordIndex index(s, opt.max_len, opt.word_budget);
            auto memb = membership_table(index, e, false);
            CHECK(scan_table_serial(index, memb, OracleProp::Closed).holds);
            CHECK(scan_table_serial(index, memb, OracleProp::Open).holds);
            for (auto& bit : memb) bit = bit ? 0 : 1;  // pointwise complement
            CHECK(scan_table_serial(index, memb, OracleProp::Closed).holds);
            CHECK(scan_table_serial(index, memb, OracleProp::Open).holds);
        }
    }
}

TEST_CASE("separate_open") {
    Alphabet s = ab();
    auto set = separate_open(w(s, "a.b"), w(s, "a"));
    CHECK(dotted_all(set) == "b a.b b.a b.b ");

    CHECK_THROWS_AS(separate_open(w(s, "a.a"), w(s, "a")), PowerError);
    CHECK_THROWS_AS(separate_open(w(s, "a"), w(s, "a")), PowerError);

    auto tiny = separate_open(w(s, "b"), w(s, "a"));
    CHECK(dotted_all(tiny) == "b ");

    // u inside, v outside, and the set passes the bounded open check
    Word u = w(s, "b.a.b"), v = w(s, "b.a");
    auto m = separate_open(u, v);
    bool has_u = false, has_v = false;
    for (const Word& x : m) {
        has_u = has_u || x == u;
        has_v = has_v || x == v;
    }
    CHECK(has_u);
    CHECK_FALSE(has_v);
    LangExpr fin = LangExpr::finite(s, m);
    OracleOptions opt;
    opt.max_len = u.size() + 2;
    opt.parallel = false;
    CHECK(oracle_check(fin, OracleProp::Open, opt).holds);
}

TEST_CASE("distinguish_open") {
    Alphabet s = ab();
    auto [set1, which1] = distinguish_open(w(s, "a.b"), w(s, "a.b.b"));
    CHECK(dotted_all(set1) == "eps a a.b ");
    CHECK(which1 == WhichWord::U);

    auto [set2, which2] = distinguish_open(w(s, "a.a.b"), w(s, "a.b"));
    CHECK(dotted_all(set2) == "eps a a.b ");
    CHECK(which2 == WhichWord::V);

    CHECK_THROWS_AS(distinguish_open(w(s, "a.b"), w(s, "a.b")), EqualWordsError);

    // equal length, distinct: the lexicographically smaller word is kept
    auto [set3, which3] = distinguish_open(w(s, "b.a"), w(s, "a.b"));
    CHECK(which3 == WhichWord::V);
    CHECK(dotted_all(set3) == "eps a a.b ");
}

TEST_CASE("separate_open_pair") {
    Alphabet s = ab();
    auto [l1, m1] = separate_open_pair(w(s, "a"), w(s, "b"));
    CHECK(dotted_all(l1) == "a ");
    CHECK(dotted_all(m1) == "b ");

    auto [l2, m2] = separate_open_pair(w(s, "a.b"), w(s, "b.a"));
    CHECK(dotted_all(l2) == "b a.b b.b ");
    CHECK(dotted_all(m2) == "a a.a b.a ");

    CHECK_THROWS_AS(separate_open_pair(w(s, "a.b"), w(s, "a.b.a.b")), CommuteError);
}

TEST_CASE("separate_open_pair outputs are disjoint, open, with disjoint closures") {
    Alphabet s = ab();
    SplitMix64 rng(77);
    int done = 0;
    while (done < 25) {
        auto draw = [&] {
            int len = 1 + static_cast<int>(rng.below(4));
            std::vector<SymId> syms(static_cast<size_t>(len));
            for (auto& sym : syms) sym = static_cast<SymId>(rng.below(2));
            return Word(s, syms);
        };
        Word u = draw(), v = draw();
        if (commutes(u, v)) continue;
        ++done;
        auto [left, right] = separate_open_pair(u, v);

        bool u_in = false, v_in = false;
        for (const Word& x : left) u_in = u_in || x == u;
        for (const Word& x : right) v_in = v_in || x == v;
        CHECK(u_in);
        CHECK(v_in);
        for (const Word& x : left)
            for (const Word& y : right) CHECK(x != y);

        Dfa l_dfa = dfa_of_words(s, left);
        Dfa r_dfa = dfa_of_words(s, right);
        CHECK(check_property(l_dfa, Property::PositiveOpen).holds);
        CHECK(check_property(r_dfa, Property::PositiveOpen).holds);

        Dfa l_plus = minimize(determinize(closure(nfa_from(l_dfa), ClosureKind::Positive)));
        Dfa r_plus = minimize(determinize(closure(nfa_from(r_dfa), ClosureKind::Positive)));
        CHECK(is_empty(boolean_combine(l_plus, r_plus, BoolOp::And)));
    }
}
