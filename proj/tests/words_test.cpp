#include <doctest.h>

#include <numeric>

#include "closures/generators.hpp"
#include "closures/words.hpp"
#include "test_support.hpp"

using namespace closures;
using namespace closures::test;

TEST_CASE("commutes") {
    Alphabet s = ab();
    CHECK(commutes(w(s, "a.a"), w(s, "a.a.a")));
    CHECK_FALSE(commutes(w(s, "a.b"), w(s, "b.a")));
    CHECK(commutes(w(s, "a.b"), w(s, "eps")));
    CHECK(commutes(w(s, "eps"), w(s, "eps")));
}

TEST_CASE("primitive_root") {
    Alphabet s = ab();
    auto d = primitive_root(w(s, "a.b.a.b"));
    CHECK(d.root.dotted() == "a.b");
    CHECK(d.exponent == 2);

    CHECK(primitive_root(w(s, "a")).exponent == 1);
    CHECK(primitive_root(w(s, "a.a.a.a")).root.dotted() == "a");
    CHECK(primitive_root(w(s, "a.a.a.a")).exponent == 4);

    // idempotent: the root of a root is itself
    auto again = primitive_root(d.root);
    CHECK(again.root == d.root);
    CHECK(again.exponent == 1);

    CHECK_THROWS_AS(primitive_root(w(s, "eps")), EmptyWordError);
}

TEST_CASE("power_exponent") {
    Alphabet s = ab();
    CHECK(power_exponent(w(s, "a.a.a.a"), w(s, "a.a")) == 2);
    CHECK_FALSE(power_exponent(w(s, "a.b"), w(s, "a")).has_value());
    CHECK(power_exponent(w(s, "eps"), w(s, "a")) == 0);
    CHECK_THROWS_AS(power_exponent(w(s, "a"), w(s, "eps")), EmptyWordError);
}

TEST_CASE("connected") {
    Alphabet s = ab();
    CHECK(connected(w(s, "a.b"), w(s, "a.b.a.b")));
    CHECK_FALSE(connected(w(s, "a.b"), w(s, "b.a")));
    CHECK(connected(w(s, "a.b.a"), w(s, "a.b.a")));
    CHECK_THROWS_AS(connected(w(s, "eps"), w(s, "a")), EmptyWordError);
}

TEST_CASE("connected_components") {
    Alphabet s = ab();
    auto groups = connected_components(
        {w(s, "a"), w(s, "a.a"), w(s, "a.b"), w(s, "a.b.a.b"), w(s, "b")});
    REQUIRE(groups.size() == 3);
    CHECK(groups[0][0].dotted() == "a");
    CHECK(groups[0][1].dotted() == "a.a");
    CHECK(groups[1][0].dotted() == "a.b");
    CHECK(groups[1][1].dotted() == "a.b.a.b");
    CHECK(groups[2][0].dotted() == "b");

    CHECK(connected_components({w(s, "b.a")}).size() == 1);
    CHECK(connected_components({w(s, "a"), w(s, "b")}).size() == 2);
}

namespace {

// The four characterizations of commuting words, each computed on its own.
bool form1(const Word& u, const Word& v) { return u.concat(v) == v.concat(u); }

bool form2(const Word& u, const Word& v) {
    // common primitive root x with u = x^p, v = x^q
    Word x = primitive_root(u).root;
    return power_exponent(v, x).has_value();
}

bool form3(const Word& u, const Word& v) {
    // common power y = u^p = v^q, smallest candidate via the gcd of lengths
    int g = std::gcd(u.size(), v.size());
    return u.repeat(v.size() / g) == v.repeat(u.size() / g);
}

bool form4(const Word& u, const Word& v) {
    return primitive_root(u).root == primitive_root(v).root;
}

void check_all_forms_agree(const Word& u, const Word& v) {
    bool c1 = form1(u, v), c2 = form2(u, v), c3 = form3(u, v), c4 = form4(u, v);
    CHECK(c1 == c2);
    CHECK(c1 == c3);
    CHECK(c1 == c4);
    CHECK(connected(u, v) == c1);
    CHECK(commutes(u, v) == c1);
}

}  // namespace

TEST_CASE("commutation characterizations agree exhaustively to |u|+|v| = 10") {
    Alphabet s = ab();
    std::vector<Word> words = all_words(s, 9);
    for (const Word& u : words) {
        if (u.empty()) continue;
        for (const Word& v : words) {
            if (v.empty() || u.size() + v.size() > 10) continue;
            check_all_forms_agree(u, v);
        }
    }
}

TEST_CASE("commutation characterizations agree on random long pairs") {
    Alphabet s = ab();
    SplitMix64 rng(99);
    for (int i = 0; i < 1000; ++i) {
        // bias towards commuting pairs: half the draws are powers of a root
        Word u(s), v(s);
        if (i % 2 == 0) {
            int len = 1 + static_cast<int>(rng.below(4));
            std::vector<SymId> syms(static_cast<size_t>(len));
            for (auto& sym : syms) sym = static_cast<SymId>(rng.below(2));
            Word x(s, syms);
            u = x.repeat(1 + static_cast<int>(rng.below(5)));
            v = x.repeat(1 + static_cast<int>(rng.below(5)));
        } else {
            auto draw = [&](int max_len) {
                int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
                std::vector<SymId> syms(static_cast<size_t>(len));
                for (auto& sym : syms) sym = static_cast<SymId>(rng.below(2));
                return Word(s, syms);
            };
            u = draw(20);
            v = draw(20);
        }
        check_all_forms_agree(u, v);
    }
}
