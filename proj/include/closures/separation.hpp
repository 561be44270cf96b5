#ifndef CLOSURES_SEPARATION_HPP
#define CLOSURES_SEPARATION_HPP

#include <string>
#include <utility>
#include <vector>

#include "closures/lang_expr.hpp"
#include "closures/words.hpp"

namespace closures {

// One step of the clopen separator construction.
struct SeparationStep {
    enum class Kind { DisjointAlphabets, FreqSplit, BlockDescent };
    Kind kind;
    // DisjointAlphabets: the symbols of u.
    std::vector<std::string> gamma;
    // FreqSplit and BlockDescent: the chosen common symbol.
    std::string symbol;
    // FreqSplit: both relative frequencies; BlockDescent: the shared one.
    Rational lambda_u;
    Rational lambda_v;
    // BlockDescent: the lowest-terms denominator, i.e. the block length.
    int block_len = 0;

    std::string describe() const;
};

struct SeparationTrace {
    std::vector<SeparationStep> steps;
};

// Clopen language containing u but not v. Errors with CommuteError when
// uv = vu (no separator exists). Recursion: disjoint symbol sets give a
// sub-alphabet language; a frequency gap gives a one-sided frequency
// language; equal frequencies descend to length-n blocks.
std::pair<LangExpr, SeparationTrace> separate_clopen(const Word& u, const Word& v);

// Rebuilds the separator expression from a trace; test hook for the
// invariant that traces replay to their result.
LangExpr replay_trace(const Word& u, const Word& v, const SeparationTrace& trace);

// Finite open language containing u and disjoint from {v}+ : all non-empty
// words of length <= |u| outside {v}+. Errors with PowerError when u is a
// power of v.
std::vector<Word> separate_open(const Word& u, const Word& v);

enum class WhichWord { U, V };

// Prefix language of the shorter word (ties: lexicographically smaller);
// contains exactly one of the two distinct inputs.
std::pair<std::vector<Word>, WhichWord> distinguish_open(const Word& u, const Word& v);

// Disjoint finite open languages L, M with u in L, v in M, cut out of a
// clopen separator by length bounds.
std::pair<std::vector<Word>, std::vector<Word>> separate_open_pair(const Word& u, const Word& v);

}  // namespace closures

#endif  // CLOSURES_SEPARATION_HPP
