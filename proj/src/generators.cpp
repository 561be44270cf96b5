#include "closures/generators.hpp"

#include <set>
#include <string>

namespace closures {

std::vector<std::string> witness_state_names(int n) {
    std::vector<std::string> names;
    for (int i = 0; i <= n; ++i) names.push_back("q" + std::to_string(i));
    names.push_back("r");
    for (int i = 0; i <= n; ++i) names.push_back("p" + std::to_string(i));
    names.push_back("s");
    names.push_back("d");
    return names;
}

Dfa witness_automaton(int n, WitnessKind which) {
    if (n < 2) throw Error("witness_automaton needs n >= 2");
    Alphabet alphabet({"0", "1"});
    const StateId q0 = 0;                      // q_i = i for 0 <= i <= n
    const StateId r = static_cast<StateId>(n + 1);
    const StateId p0 = static_cast<StateId>(n + 2);  // p_i = p0 + i
    const StateId s = static_cast<StateId>(2 * n + 3);
    const StateId d = static_cast<StateId>(2 * n + 4);
    const StateId total = static_cast<StateId>(2 * n + 5);

    std::vector<StateId> delta(static_cast<size_t>(total) * 2, d);
    auto set = [&](StateId from, int sym, StateId to) {
        delta[static_cast<size_t>(from) * 2 + static_cast<size_t>(sym)] = to;
    };

    // Symbol 0: q1..q_{n-1} advance, q_n wraps to q_1; p_i advance mod n+1.
    for (int i = 1; i < n; ++i) set(static_cast<StateId>(i), 0, static_cast<StateId>(i + 1));
    set(static_cast<StateId>(n), 0, 1);
    for (int i = 0; i < n; ++i) set(p0 + i, 0, p0 + i + 1);
    set(p0 + n, 0, p0);

    // Symbol 1: q0 -> q1, q_1..q_{n-1} -> s, q_n -> r, r -> p0, p_n -> s.
    set(q0, 1, 1);
    for (int i = 1; i < n; ++i) set(static_cast<StateId>(i), 1, s);
    set(static_cast<StateId>(n), 1, r);
    set(r, 1, p0);
    set(p0 + n, 1, s);

    std::vector<std::uint8_t> finals(static_cast<size_t>(total), 1);
    finals[static_cast<size_t>(r)] = 0;
    finals[static_cast<size_t>(d)] = 0;
    if (which == WitnessKind::M)
        for (auto& f : finals) f = f ? 0 : 1;
    return Dfa(std::move(alphabet), total, q0, std::move(finals), std::move(delta));
}

Dfa random_dfa(int states, const Alphabet& alphabet, Rational accept_prob, std::uint64_t seed) {
    if (states < 1) throw Error("random_dfa needs at least one state");
    if (accept_prob.num < 0 || accept_prob.num > accept_prob.den)
        throw Error("accept_prob must lie in [0, 1]");
    SplitMix64 rng(seed);
    const int k = alphabet.size();
    std::vector<StateId> delta(static_cast<size_t>(states) * static_cast<size_t>(k));
    for (auto& cell : delta) cell = static_cast<StateId>(rng.below(static_cast<std::uint64_t>(states)));
    std::vector<std::uint8_t> finals(static_cast<size_t>(states));
    for (auto& f : finals)
        f = rng.chance(static_cast<std::uint64_t>(accept_prob.num),
                       static_cast<std::uint64_t>(accept_prob.den))
                ? 1
                : 0;
    return Dfa(alphabet, static_cast<StateId>(states), 0, std::move(finals), std::move(delta));
}

Nfa random_nfa(int states, const Alphabet& alphabet, std::uint64_t seed) {
    if (states < 1) throw Error("random_nfa needs at least one state");
    SplitMix64 rng(seed);
    NfaBuilder b(alphabet, static_cast<StateId>(states));
    const int k = alphabet.size();
    for (StateId s = 0; s < static_cast<StateId>(states); ++s)
        for (SymId a = 0; a < k; ++a)
            for (StateId t = 0; t < static_cast<StateId>(states); ++t)
                if (rng.chance(1, static_cast<std::uint64_t>(states)))
                    b.add_move(s, a, t);
    for (StateId s = 0; s < static_cast<StateId>(states); ++s)
        for (StateId t = 0; t < static_cast<StateId>(states); ++t)
            if (s != t && rng.chance(1, 16)) b.add_eps(s, t);
    b.set_initial(0);
    for (StateId s = 1; s < static_cast<StateId>(states); ++s)
        if (rng.chance(1, 4)) b.set_initial(s);
    for (StateId s = 0; s < static_cast<StateId>(states); ++s)
        if (rng.chance(1, 2)) b.set_final(s);
    return std::move(b).build();
}

std::vector<Word> random_finite_language(int max_len, int count, const Alphabet& alphabet,
                                         std::uint64_t seed) {
    if (max_len < 1) throw Error("random_finite_language needs max_len >= 1");
    if (count < 0) throw Error("negative word count");
    const std::uint64_t k = static_cast<std::uint64_t>(alphabet.size());
    std::uint64_t available = 0, pow = 1;
    for (int l = 1; l <= max_len; ++l) {
        if (k != 0 && pow > (std::uint64_t{1} << 40)) {
            available = std::uint64_t{1} << 40;  // plenty; stop counting
            break;
        }
        pow *= k;
        available += pow;
    }
    if (static_cast<std::uint64_t>(count) > available)
        throw Error("count exceeds the number of distinct words available");

    SplitMix64 rng(seed);
    std::set<std::vector<SymId>> seen;
    std::vector<Word> out;
    while (out.size() < static_cast<size_t>(count)) {
        int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
        std::vector<SymId> syms(static_cast<size_t>(len));
        for (auto& s : syms) s = static_cast<SymId>(rng.below(k));
        if (seen.insert(syms).second) out.emplace_back(alphabet, std::move(syms));
    }
    return out;
}

std::vector<Word> prefix_language(const Word& w) {
    if (w.empty()) throw EmptyWordError("prefix_language of the empty word");
    std::vector<Word> out;
    for (int i = 0; i <= w.size(); ++i) out.push_back(w.subword(0, i));
    return out;
}

}  // namespace closures
