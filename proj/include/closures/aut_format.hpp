#ifndef CLOSURES_AUT_FORMAT_HPP
#define CLOSURES_AUT_FORMAT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "closures/automata.hpp"

namespace closures {

// Line-oriented automaton format, `#` starts a comment:
//
//   alphabet: 0 1
//   states: q0 q1 r d
//   initial: q0          # NFAs may list several ids
//   finals: q0 q1
//   q0 0 q1
//   q1 eps r             # epsilon move, NFA only
//
// The DFA loader rejects eps lines, duplicate (state, symbol) pairs and
// multiple initials, and completes a partial table with an implicit sink.
// `names_out`, when given, receives the state names in id order (including
// a generated sink name).
Dfa parse_dfa(std::string_view text, std::vector<std::string>* names_out = nullptr);
Nfa parse_nfa(std::string_view text, std::vector<std::string>* names_out = nullptr);

// True when the text needs the NFA reading (eps moves, several initials, or
// duplicate (state, symbol) lines).
bool looks_nondeterministic(std::string_view text);

std::string serialize(const Dfa& d, const std::vector<std::string>& state_names = {});
std::string serialize(const Nfa& a, const std::vector<std::string>& state_names = {});

// Word list files: one word per line, dotted symbols, bare `eps` for the
// empty word, `#` comments. The alphabet is taken from the words in order of
// first appearance unless one is supplied.
std::vector<Word> parse_word_list(std::string_view text, const Alphabet& alphabet);
std::vector<Word> parse_word_list(std::string_view text);
std::string serialize_word_list(const std::vector<Word>& words);

// Alphabet from dotted word texts, order of first appearance.
Alphabet infer_alphabet(const std::vector<std::string>& dotted_words);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace closures

#endif  // CLOSURES_AUT_FORMAT_HPP
