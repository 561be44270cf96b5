#include <doctest.h>

#include "closures/generators.hpp"
#include "closures/laws.hpp"
#include "test_support.hpp"

using namespace closures;
using namespace closures::test;

namespace {

Dfa closure_of(const Alphabet& s, const std::vector<Word>& basis,
               ClosureKind kind = ClosureKind::Positive) {
    return minimize(determinize(closure(nfa_from_words(s, basis), kind)));
}

}  // namespace

TEST_CASE("meet") {
    Alphabet s = ab();
    Dfa ap = closure_of(s, {w(s, "a")});
    Dfa bp = closure_of(s, {w(s, "b")});
    CHECK(equivalent(meet(ap, dfa_all(s)), ap));
    CHECK(is_empty(meet(ap, bp)));

    // meet of closed languages stays closed
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SplitMix64 rng(seed);
        Dfa l = closure_of(s, random_finite_language(3, 2, s, rng.next()));
        Dfa r = closure_of(s, random_finite_language(3, 2, s, rng.next()));
        CHECK(check_property(meet(l, r), Property::PositiveClosed).holds);
    }
}

TEST_CASE("join") {
    Alphabet s = ab();
    Dfa ap = closure_of(s, {w(s, "a")});
    Dfa bp = closure_of(s, {w(s, "b")});
    CHECK(equivalent(join(ap, ap, ClosureKind::Positive), ap));
    CHECK(equivalent(join(ap, bp, ClosureKind::Positive), dfa_sigma_plus(s)));

    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SplitMix64 rng(seed + 1000);
        Dfa l = closure_of(s, random_finite_language(3, 2, s, rng.next()));
        Dfa r = closure_of(s, random_finite_language(3, 2, s, rng.next()));
        Dfa j = join(l, r, ClosureKind::Positive);
        CHECK(subset_of(l, j));
        CHECK(subset_of(r, j));
        CHECK(check_property(j, Property::PositiveClosed).holds);
    }
}

TEST_CASE("compact_union") {
    Alphabet s = ab();
    CompactLang ca{s, {w(s, "a")}, ClosureKind::Positive};
    CompactLang cb{s, {w(s, "b")}, ClosureKind::Positive};
    CompactLang cu = compact_union(ca, cb);
    REQUIRE(cu.basis.size() == 2);
    CHECK(equivalent(compact_automaton(cu), dfa_sigma_plus(s)));
    CHECK(equivalent(compact_automaton(cu),
                     join(compact_automaton(ca), compact_automaton(cb), ClosureKind::Positive)));

    CompactLang same = compact_union(ca, ca);
    CHECK(same.basis.size() == 1);
    CompactLang empty{s, {}, ClosureKind::Positive};
    CHECK(equivalent(compact_automaton(compact_union(empty, cb)), compact_automaton(cb)));

    CompactLang kleene{s, {w(s, "b")}, ClosureKind::Kleene};
    CHECK_THROWS_AS(compact_union(ca, kleene), Error);
}

TEST_CASE("is_compact") {
    Alphabet s = ab();
    CompactAnswer sigma = is_compact(dfa_sigma_plus(s), ClosureKind::Positive, 3);
    REQUIRE(sigma.known);
    REQUIRE(sigma.basis.size() == 2);
    CHECK(sigma.basis[0].dotted() == "a");
    CHECK(sigma.basis[1].dotted() == "b");

    Dfa ap = closure_of(s, {w(s, "a")});
    CompactAnswer aplus = is_compact(ap, ClosureKind::Positive, 3);
    REQUIRE(aplus.known);
    REQUIRE(aplus.basis.size() == 1);
    CHECK(aplus.basis[0].dotted() == "a");

    // "contains at least one a" is closed but escapes every finite basis:
    // b^m a needs a basis word longer than m
    Dfa has_a = minimize(boolean_combine(
        dfa_all(s), closure_of(s, {w(s, "b")}, ClosureKind::Kleene), BoolOp::Diff));
    REQUIRE(check_property(has_a, Property::PositiveClosed).holds);
    CHECK_FALSE(is_compact(has_a, ClosureKind::Positive, 8).known);

    Dfa not_closed = dfa_of_words(s, {w(s, "a")});
    CHECK_THROWS_AS(is_compact(not_closed, ClosureKind::Positive, 3), NotClosedError);
}

TEST_CASE("law suites: smoke runs stay violation free") {
    for (const char* suite : {"T1a", "T1d", "T3a", "T7"}) {
        LawReport report = run_law_suite(suite, 25, 7);
        CHECK(report.qualifying == 25);
        CHECK(report.violations.empty());
    }
}

TEST_CASE("law suite fixtures") {
    LawReport t3d = run_law_suite("T3d", 1, 1);
    CHECK(t3d.qualifying == 1);
    CHECK(t3d.violations.empty());

    LawReport t4c = run_law_suite("T4c", 1, 1);
    CHECK(t4c.qualifying == 1);
    CHECK(t4c.violations.empty());
}

TEST_CASE("law reports are deterministic and scheduling independent") {
    LawReport serial = run_law_suite("T2a", 30, 42, {}, false);
    LawReport parallel = run_law_suite("T2a", 30, 42, {}, true);
    CHECK(serialize_report(serial) == serialize_report(parallel));
    CHECK(serial.qualifying == 30);

    std::string line = serialize_report(serial);
    CHECK(line.substr(0, 13) == "suite T2a see");
}

TEST_CASE("unknown suite") {
    CHECK_THROWS_AS(run_law_suite("T99", 5, 1), Error);
}
