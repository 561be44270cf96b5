#ifndef CLOSURES_AUTOMATA_HPP
#define CLOSURES_AUTOMATA_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "closures/alphabet.hpp"

namespace closures {

using StateId = std::int32_t;

inline constexpr std::uint64_t kDefaultDeterminizeBudget = std::uint64_t{1} << 20;

// Total deterministic automaton: delta is defined for every (state, symbol).
// Immutable after construction.
class Dfa {
public:
    Dfa(Alphabet alphabet, StateId num_states, StateId initial,
        std::vector<std::uint8_t> finals, std::vector<StateId> delta);

    const Alphabet& alphabet() const { return alphabet_; }
    StateId num_states() const { return num_states_; }
    StateId initial() const { return initial_; }
    bool is_final(StateId s) const { return finals_[static_cast<size_t>(s)] != 0; }
    const std::vector<std::uint8_t>& finals() const { return finals_; }

    StateId step(StateId s, SymId a) const {
        return delta_[static_cast<size_t>(s) * static_cast<size_t>(alphabet_.size()) +
                      static_cast<size_t>(a)];
    }
    StateId walk(StateId s, const Word& w) const;

private:
    Alphabet alphabet_;
    StateId num_states_;
    StateId initial_;
    std::vector<std::uint8_t> finals_;
    std::vector<StateId> delta_;  // row-major by state
};

// Nondeterministic automaton with epsilon moves and multiple initial states.
class Nfa {
public:
    Nfa(Alphabet alphabet, StateId num_states, std::vector<StateId> initials,
        std::vector<std::uint8_t> finals,
        std::vector<std::vector<StateId>> moves,  // (state * k + sym) -> targets
        std::vector<std::vector<StateId>> eps);   // state -> targets

    const Alphabet& alphabet() const { return alphabet_; }
    StateId num_states() const { return num_states_; }
    const std::vector<StateId>& initials() const { return initials_; }
    bool is_final(StateId s) const { return finals_[static_cast<size_t>(s)] != 0; }
    const std::vector<std::uint8_t>& finals() const { return finals_; }

    const std::vector<StateId>& moves(StateId s, SymId a) const {
        return moves_[static_cast<size_t>(s) * static_cast<size_t>(alphabet_.size()) +
                      static_cast<size_t>(a)];
    }
    const std::vector<StateId>& eps(StateId s) const { return eps_[static_cast<size_t>(s)]; }

    // Epsilon closure of a set of states, returned sorted.
    std::vector<StateId> closure_of(const std::vector<StateId>& states) const;

private:
    Alphabet alphabet_;
    StateId num_states_;
    std::vector<StateId> initials_;
    std::vector<std::uint8_t> finals_;
    std::vector<std::vector<StateId>> moves_;
    std::vector<std::vector<StateId>> eps_;
};

// Incremental construction helper; build() validates and freezes.
class NfaBuilder {
public:
    explicit NfaBuilder(Alphabet alphabet, StateId num_states = 0);

    StateId add_state();
    void set_initial(StateId s);
    void set_final(StateId s);
    void add_move(StateId from, SymId sym, StateId to);
    void add_eps(StateId from, StateId to);
    StateId num_states() const { return num_states_; }

    Nfa build() &&;

private:
    Alphabet alphabet_;
    StateId num_states_;
    std::vector<StateId> initials_;
    std::vector<std::uint8_t> finals_;
    std::vector<std::vector<StateId>> moves_;
    std::vector<std::vector<StateId>> eps_;
};

enum class BoolOp { And, Or, Diff, Xor };
enum class ClosureKind { Positive, Kleene };

bool run(const Dfa& d, const Word& w);
bool run(const Nfa& a, const Word& w);

// Product construction restricted to reachable pairs; result has at most
// n1 * n2 states.
Dfa boolean_combine(const Dfa& d1, const Dfa& d2, BoolOp op);

Dfa complement(const Dfa& d);

Nfa nfa_from(const Dfa& d);

// Automaton for a finite set of words (one branch per word, merged initial).
Nfa nfa_from_words(const Alphabet& alphabet, const std::vector<Word>& words);

// L(a1) . L(a2) via epsilon moves from a1 finals to a2 initials.
Nfa concatenate(const Nfa& a1, const Nfa& a2);

// Positive closure adds eps moves finals -> initials; Kleene additionally
// accepts epsilon through a fresh accepting initial state.
Nfa closure(const Nfa& a, ClosureKind kind);

// Subset construction over epsilon closures, completed with a sink.
// Throws BudgetExceededError when the reachable subset count passes budget.
Dfa determinize(const Nfa& a, std::uint64_t budget = kDefaultDeterminizeBudget);

// Minimum-length accepted word; ties broken lexicographically by alphabet
// order. Empty optional iff the language is empty.
std::optional<Word> shortest_accepted(const Dfa& d);
std::optional<Word> shortest_accepted(const Nfa& a);

bool is_empty(const Dfa& d);
bool equivalent(const Dfa& d1, const Dfa& d2);
// True iff L(d1) is a subset of L(d2).
bool subset_of(const Dfa& d1, const Dfa& d2);

// Language-preserving minimization; states renumbered canonically in BFS
// order from the initial state.
Dfa minimize(const Dfa& d);

// Convenience: minimize(determinize(a)).
Dfa canonical_dfa(const Nfa& a, std::uint64_t budget = kDefaultDeterminizeBudget);

// Fixed languages over a given alphabet.
Dfa dfa_all(const Alphabet& alphabet);    // Sigma*
Dfa dfa_none(const Alphabet& alphabet);   // empty language
Dfa dfa_sigma_plus(const Alphabet& alphabet);

}  // namespace closures

#endif  // CLOSURES_AUTOMATA_HPP
