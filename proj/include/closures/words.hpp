#ifndef CLOSURES_WORDS_HPP
#define CLOSURES_WORDS_HPP

#include <optional>
#include <vector>

#include "closures/alphabet.hpp"

namespace closures {

struct PrimitiveDecomposition {
    Word root;     // primitive
    int exponent;  // >= 1, root^exponent == input
};

// True iff uv == vu. Accepts the empty word.
bool commutes(const Word& u, const Word& v);

// Smallest x with w == x^k; x is primitive. Rejects the empty word.
PrimitiveDecomposition primitive_root(const Word& w);

// k >= 0 with u == v^k if one exists (k == 0 iff u is empty). Rejects empty v.
std::optional<int> power_exponent(const Word& u, const Word& v);

// Words are connected iff they share a primitive root; for non-empty words
// this coincides with commuting.
bool connected(const Word& u, const Word& v);

// Groups words by primitive root. Groups are ordered by lexicographically
// least root; within a group words are in length order.
std::vector<std::vector<Word>> connected_components(const std::vector<Word>& words);

}  // namespace closures

#endif  // CLOSURES_WORDS_HPP
