#ifndef CLOSURES_GENERATORS_HPP
#define CLOSURES_GENERATORS_HPP

#include <cstdint>
#include <vector>

#include "closures/automata.hpp"
#include "closures/rational.hpp"

namespace closures {

// SplitMix64; the one generator behind every seeded draw in the project, so
// instances reproduce across platforms. Bounded draws use rejection
// sampling, never a bare modulus.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        for (;;) {
            std::uint64_t r = next();
            if (r < limit) return r % bound;
        }
    }

    bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
};

// Independent stream for trial i of a suite seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 rng(seed ^ (0xD1B54A32D192ED03ULL * (index + 1)));
    return rng.next();
}

enum class WitnessKind { M, MPrime };

// The 2n+5 state family over {0, 1} whose shortest counterexample length
// grows quadratically: states q0..qn, r, p0..pn, s, d; every transition not
// placed by the construction goes to the dead state d. MPrime accepts
// everything except r and d; M is its complement.
Dfa witness_automaton(int n, WitnessKind which);
std::vector<std::string> witness_state_names(int n);

Dfa random_dfa(int states, const Alphabet& alphabet, Rational accept_prob, std::uint64_t seed);

// Sparse random NFA for cross-checks: roughly one move per (state, symbol)
// on average, occasional eps moves, state 0 always initial.
Nfa random_nfa(int states, const Alphabet& alphabet, std::uint64_t seed);

// `count` distinct non-empty words of length <= max_len.
std::vector<Word> random_finite_language(int max_len, int count, const Alphabet& alphabet,
                                         std::uint64_t seed);

// {eps} plus every non-empty prefix of w.
std::vector<Word> prefix_language(const Word& w);

}  // namespace closures

#endif  // CLOSURES_GENERATORS_HPP
