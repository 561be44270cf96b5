#ifndef CLOSURES_TEST_SUPPORT_HPP
#define CLOSURES_TEST_SUPPORT_HPP

#include <set>
#include <string>
#include <vector>

#include "closures/automata.hpp"
#include "closures/oracle.hpp"

namespace closures::test {

inline Alphabet ab() { return Alphabet({"a", "b"}); }
inline Alphabet unary() { return Alphabet({"a"}); }

inline Word w(const Alphabet& alphabet, const std::string& dotted) {
    return Word::from_dotted(alphabet, dotted);
}

// All words up to max_len in length-lex order.
inline std::vector<Word> all_words(const Alphabet& alphabet, int max_len) {
    WordIndex index(alphabet, max_len, std::uint64_t{1} << 24);
    std::vector<Word> out;
    for (std::uint64_t r = 0; r < index.total(); ++r) out.push_back(index.word_at(r));
    return out;
}

// Language slice of an automaton as dotted strings, for blunt comparisons.
template <typename Automaton>
std::set<std::string> language_upto(const Automaton& a, int max_len) {
    std::set<std::string> out;
    for (const Word& word : all_words(a.alphabet(), max_len))
        if (run(a, word)) out.insert(word.dotted());
    return out;
}

// DFA for a finite word set, via the library construction chain.
inline Dfa dfa_of_words(const Alphabet& alphabet, const std::vector<Word>& words) {
    return minimize(determinize(nfa_from_words(alphabet, words)));
}

}  // namespace closures::test

#endif  // CLOSURES_TEST_SUPPORT_HPP
