#ifndef CLOSURES_LAWS_HPP
#define CLOSURES_LAWS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "closures/automata.hpp"
#include "closures/closure_props.hpp"

namespace closures {

// Lattice meet: plain intersection.
Dfa meet(const Dfa& l, const Dfa& r);
// Lattice join: closure of the union, determinized and minimized.
Dfa join(const Dfa& l, const Dfa& r, ClosureKind kind,
         std::uint64_t budget = kDefaultDeterminizeBudget);

// A compact language: the closure of a finite basis.
struct CompactLang {
    Alphabet alphabet;
    std::vector<Word> basis;
    ClosureKind kind;
};

Dfa compact_automaton(const CompactLang& c, std::uint64_t budget = kDefaultDeterminizeBudget);

// Basis union; the language equals the join of the inputs' languages.
CompactLang compact_union(const CompactLang& a, const CompactLang& b);

struct CompactAnswer {
    bool known = false;           // found a finite basis
    std::vector<Word> basis;      // K restricted to length <= m for the found m
};

// Searches m = 1..m_max for a basis (K cut at length m) whose closure equals
// K. `unknown` only means no basis of that word length exists; it does not
// disprove compactness. Requires K closed under `kind`.
CompactAnswer is_compact(const Dfa& k, ClosureKind kind, int m_max,
                         std::uint64_t budget = kDefaultDeterminizeBudget);

struct LawBounds {
    std::uint64_t det_budget = kDefaultDeterminizeBudget;
    int oracle_max_len = 10;
    std::uint64_t oracle_word_budget = std::uint64_t{1} << 22;
    // Generation gives up after trials * attempt_multiplier draws.
    int attempt_multiplier = 64;
};

struct LawViolation {
    int trial = 0;
    std::uint64_t attempt_seed = 0;
    std::string detail;  // payload sufficient to replay the instance
};

struct LawWarning {
    int trial = -1;  // -1: suite-level
    std::string detail;
};

struct LawReport {
    std::string suite;
    std::uint64_t seed = 0;
    int requested_trials = 0;
    int qualifying = 0;  // hypothesis-satisfying trials checked
    int discarded = 0;   // draws that failed the hypotheses
    int skipped = 0;     // trials lost to budget limits
    std::vector<LawViolation> violations;
    std::vector<LawWarning> warnings;
};

const std::vector<std::string>& law_suite_ids();

// Generates seeded instances satisfying the suite's hypotheses and checks the
// law's conclusion on each. Trial i draws from a seed derived from (seed, i),
// so reports do not depend on scheduling.
LawReport run_law_suite(std::string_view suite, int trials, std::uint64_t seed,
                        const LawBounds& bounds = {}, bool parallel = true);

std::string serialize_report(const LawReport& report);

}  // namespace closures

#endif  // CLOSURES_LAWS_HPP
