#include "closures/laws.hpp"

#include <algorithm>
#include <sstream>

#include "closures/generators.hpp"
#include "closures/lang_expr.hpp"
#include "closures/oracle.hpp"
#include "closures/separation.hpp"
#include "closures/words.hpp"

namespace closures {

Dfa meet(const Dfa& l, const Dfa& r) {
    return boolean_combine(l, r, BoolOp::And);
}

Dfa join(const Dfa& l, const Dfa& r, ClosureKind kind, std::uint64_t budget) {
    Dfa both = boolean_combine(l, r, BoolOp::Or);
    return minimize(determinize(closure(nfa_from(both), kind), budget));
}

Dfa compact_automaton(const CompactLang& c, std::uint64_t budget) {
    Nfa words = nfa_from_words(c.alphabet, c.basis);
    return minimize(determinize(closure(words, c.kind), budget));
}

CompactLang compact_union(const CompactLang& a, const CompactLang& b) {
    if (a.kind != b.kind) throw Error("compact_union: closure kind mismatch");
    require_same_alphabet(a.alphabet, b.alphabet, "compact_union");
    CompactLang out{a.alphabet, a.basis, a.kind};
    out.basis.insert(out.basis.end(), b.basis.begin(), b.basis.end());
    std::sort(out.basis.begin(), out.basis.end(), length_lex_less);
    out.basis.erase(std::unique(out.basis.begin(), out.basis.end()), out.basis.end());
    return out;
}

CompactAnswer is_compact(const Dfa& k, ClosureKind kind, int m_max, std::uint64_t budget) {
    Property closed_prop =
        kind == ClosureKind::Positive ? Property::PositiveClosed : Property::KleeneClosed;
    if (!check_property(k, closed_prop).holds)
        throw NotClosedError("is_compact requires a closed language");
    if (m_max < 1) return {};

    WordIndex index(k.alphabet(), m_max, std::uint64_t{1} << 24);
    std::vector<std::uint8_t> memb = membership_table(index, k, false);
    std::vector<Word> basis;
    std::uint64_t next_rank = 0;
    for (int m = 1; m <= m_max; ++m) {
        std::uint64_t end = m == index.max_len() ? index.total() : index.first_of_length(m + 1);
        for (std::uint64_t r = next_rank; r < end; ++r)
            if (memb[static_cast<size_t>(r)]) basis.push_back(index.word_at(r));
        next_rank = end;
        CompactLang cand{k.alphabet(), basis, kind};
        if (equivalent(compact_automaton(cand, budget), k)) return {true, basis};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Law suites
// ---------------------------------------------------------------------------

namespace {

struct TrialOutcome {
    bool qualified = false;
    bool skipped = false;
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
};

std::string words_payload(const char* tag, const std::vector<Word>& ws) {
    std::string out = std::string(tag) + "=";
    if (ws.empty()) return out + "(none)";
    for (size_t i = 0; i < ws.size(); ++i) {
        if (i) out += ',';
        out += ws[i].dotted();
    }
    return out;
}

Alphabet binary_alphabet() { return Alphabet({"a", "b"}); }
Alphabet unary_alphabet() { return Alphabet({"a"}); }

Dfa closure_dfa(const Alphabet& alphabet, const std::vector<Word>& basis, ClosureKind kind,
                std::uint64_t budget) {
    return minimize(determinize(closure(nfa_from_words(alphabet, basis), kind), budget));
}

Dfa finite_dfa(const Alphabet& alphabet, const std::vector<Word>& words, std::uint64_t budget) {
    return minimize(determinize(nfa_from_words(alphabet, words), budget));
}

Dfa concat_dfa(const std::vector<const Dfa*>& parts, std::uint64_t budget) {
    Nfa cur = nfa_from(*parts.front());
    for (size_t i = 1; i < parts.size(); ++i) cur = concatenate(cur, nfa_from(*parts[i]));
    return minimize(determinize(cur, budget));
}

std::vector<Word> rand_basis(SplitMix64& rng, const Alphabet& alphabet, int max_len,
                             int max_count) {
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_count)));
    return random_finite_language(max_len, count, alphabet, rng.next());
}

Word rand_word(SplitMix64& rng, const Alphabet& alphabet, int max_len) {
    int len = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_len)));
    std::vector<SymId> syms(static_cast<size_t>(len));
    for (auto& s : syms)
        s = static_cast<SymId>(rng.below(static_cast<std::uint64_t>(alphabet.size())));
    return Word(alphabet, std::move(syms));
}

struct Instance {
    std::string payload;
    Dfa dfa;
};

// Closed language: the positive (or Kleene) closure of a small random basis.
Instance draw_closed(SplitMix64& rng, const Alphabet& alphabet, ClosureKind kind,
                     const LawBounds& bounds) {
    std::vector<Word> basis = rand_basis(rng, alphabet, 3, 3);
    Dfa dfa = closure_dfa(alphabet, basis, kind, bounds.det_budget);
    return {words_payload("basis", basis), std::move(dfa)};
}

// Open language containing eps: the complement of a positive closure.
Instance draw_open_with_eps(SplitMix64& rng, const Alphabet& alphabet, const LawBounds& bounds) {
    std::vector<Word> basis = rand_basis(rng, alphabet, 3, 3);
    Dfa dfa = minimize(
        complement(closure_dfa(alphabet, basis, ClosureKind::Positive, bounds.det_budget)));
    return {words_payload("complement-of-closure-of", basis), std::move(dfa)};
}

// Open eps-free language: Sigma+ minus a positive closure, or a Lemma-1
// style finite set. nullopt when the draw degenerates to the empty language.
std::optional<Instance> draw_open_eps_free(SplitMix64& rng, const Alphabet& alphabet,
                                           const LawBounds& bounds) {
    if (rng.chance(1, 2)) {
        std::vector<Word> basis = rand_basis(rng, alphabet, 2, 2);
        Dfa closure_b = closure_dfa(alphabet, basis, ClosureKind::Positive, bounds.det_budget);
        Dfa dfa = minimize(boolean_combine(dfa_sigma_plus(alphabet), closure_b, BoolOp::Diff));
        if (is_empty(dfa)) return std::nullopt;
        return Instance{"sigma-plus-minus " + words_payload("basis", basis), std::move(dfa)};
    }
    Word u = rand_word(rng, alphabet, 3);
    Word v = rand_word(rng, alphabet, 3);
    if (power_exponent(u, v).has_value()) return std::nullopt;
    std::vector<Word> set = separate_open(u, v);
    Dfa dfa = finite_dfa(alphabet, set, bounds.det_budget);
    return Instance{words_payload("finite", set), std::move(dfa)};
}

// Regular clopen language over {a, b}: a sub-alphabet plus language, its
// complement, all, none, or a rejection-sampled random DFA.
std::optional<Instance> draw_clopen(SplitMix64& rng, const Alphabet& alphabet,
                                    const LawBounds& bounds) {
    switch (rng.below(6)) {
        case 0:
        case 1: {
            std::vector<std::string> gamma;
            for (const std::string& tok : alphabet.tokens())
                if (rng.chance(1, 2)) gamma.push_back(tok);
            if (gamma.empty()) gamma.push_back(alphabet.token(0));
            std::vector<Word> words;
            for (const std::string& tok : gamma) words.push_back(Word::from_dotted(alphabet, tok));
            Dfa dfa = closure_dfa(alphabet, words, ClosureKind::Positive, bounds.det_budget);
            std::string payload = "gamma-plus {";
            for (size_t i = 0; i < gamma.size(); ++i) payload += (i ? " " : "") + gamma[i];
            return Instance{payload + "}", std::move(dfa)};
        }
        case 2: {
            auto inner = draw_clopen(rng, alphabet, bounds);
            if (!inner) return std::nullopt;
            return Instance{"complement-of " + inner->payload,
                            minimize(complement(inner->dfa))};
        }
        case 3:
            return Instance{"all", dfa_all(alphabet)};
        case 4:
            return Instance{"none", dfa_none(alphabet)};
        default: {
            std::uint64_t s = rng.next();
            Dfa dfa = minimize(random_dfa(2 + static_cast<int>(rng.below(2)), alphabet,
                                          Rational(1, 2), s));
            if (!check_property(dfa, Property::ClopenPositive).holds) return std::nullopt;
            return Instance{"random-dfa seed=" + std::to_string(s), std::move(dfa)};
        }
    }
}

bool contains_eps(const Dfa& d) { return d.is_final(d.initial()); }

// --- individual suites ---------------------------------------------------

TrialOutcome suite_t1a(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    Instance l = draw_closed(rng, binary_alphabet(), ClosureKind::Positive, bounds);
    if (!check_property(l.dfa, Property::PositiveClosed).holds) {
        out.qualified = true;
        out.violations.push_back("closure not closed: " + l.payload);
        return out;
    }
    out.qualified = true;
    Nfa base = nfa_from(l.dfa);
    Nfa power = base;
    for (int k = 2; k <= 3; ++k) {
        power = concatenate(power, base);
        Dfa lk = minimize(determinize(power, bounds.det_budget));
        if (!subset_of(lk, l.dfa))
            out.violations.push_back("L^" + std::to_string(k) + " not within L: " + l.payload);
        if (!check_property(lk, Property::PositiveClosed).holds)
            out.violations.push_back("L^" + std::to_string(k) + " not closed: " + l.payload);
    }
    return out;
}

TrialOutcome suite_t1b(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    Instance l = draw_closed(rng, binary_alphabet(), ClosureKind::Kleene, bounds);
    if (!check_property(l.dfa, Property::KleeneClosed).holds) {
        out.qualified = true;
        out.violations.push_back("kleene closure not kleene-closed: " + l.payload);
        return out;
    }
    out.qualified = true;
    Nfa base = nfa_from(l.dfa);
    Nfa power = base;
    for (int k = 2; k <= 3; ++k) {
        power = concatenate(power, base);
        Dfa lk = minimize(determinize(power, bounds.det_budget));
        if (!equivalent(lk, l.dfa))
            out.violations.push_back("L^" + std::to_string(k) + " != L: " + l.payload);
    }
    return out;
}

TrialOutcome suite_t1c(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    std::uint64_t strategy = rng.below(4);
    Alphabet alphabet = strategy <= 1 ? unary_alphabet() : binary_alphabet();
    Instance l = draw_closed(rng, alphabet, ClosureKind::Positive, bounds);
    Instance m = strategy == 2 ? l : draw_closed(rng, alphabet, ClosureKind::Positive, bounds);

    Dfa lm = concat_dfa({&l.dfa, &m.dfa}, bounds.det_budget);
    Dfa ml = concat_dfa({&m.dfa, &l.dfa}, bounds.det_budget);
    if (!equivalent(lm, ml)) return out;  // hypothesis LM = ML not met
    out.qualified = true;
    if (!check_property(lm, Property::PositiveClosed).holds)
        out.violations.push_back("LM not closed though LM=ML: " + l.payload + " " + m.payload);
    return out;
}

TrialOutcome suite_t1d(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    Instance l = draw_closed(rng, unary_alphabet(), ClosureKind::Positive, bounds);
    Instance m = draw_closed(rng, unary_alphabet(), ClosureKind::Positive, bounds);
    out.qualified = true;
    Dfa lm = concat_dfa({&l.dfa, &m.dfa}, bounds.det_budget);
    if (!check_property(lm, Property::PositiveClosed).holds)
        out.violations.push_back("unary LM not closed: " + l.payload + " " + m.payload);
    return out;
}

// Closed pair with closed union: a sub-basis of L, or L = Sigma+, or a
// rejection-sampled independent pair.
std::optional<std::pair<Instance, Instance>> draw_union_closed_pair(SplitMix64& rng,
                                                                    const LawBounds& bounds) {
    Alphabet alphabet = binary_alphabet();
    std::uint64_t strategy = rng.below(3);
    if (strategy == 0) {
        std::vector<Word> basis = rand_basis(rng, alphabet, 3, 3);
        std::vector<Word> sub;
        for (const Word& w : basis)
            if (rng.chance(1, 2)) sub.push_back(w);
        if (sub.empty()) sub.push_back(basis[0]);
        Instance l{words_payload("basis", basis),
                   closure_dfa(alphabet, basis, ClosureKind::Positive, bounds.det_budget)};
        Instance m{words_payload("basis", sub),
                   closure_dfa(alphabet, sub, ClosureKind::Positive, bounds.det_budget)};
        return std::make_pair(std::move(l), std::move(m));
    }
    if (strategy == 1) {
        Instance l{"sigma-plus", dfa_sigma_plus(alphabet)};
        Instance m = draw_closed(rng, alphabet, ClosureKind::Positive, bounds);
        return std::make_pair(std::move(l), std::move(m));
    }
    Instance l = draw_closed(rng, alphabet, ClosureKind::Positive, bounds);
    Instance m = draw_closed(rng, alphabet, ClosureKind::Positive, bounds);
    Dfa both = minimize(boolean_combine(l.dfa, m.dfa, BoolOp::Or));
    if (!check_property(both, Property::PositiveClosed).holds) return std::nullopt;
    return std::make_pair(std::move(l), std::move(m));
}

TrialOutcome suite_t2a(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    auto pair = draw_union_closed_pair(rng, bounds);
    if (!pair) return out;
    out.qualified = true;
    Dfa lm = concat_dfa({&pair->first.dfa, &pair->second.dfa}, bounds.det_budget);
    if (!check_property(lm, Property::PositiveClosed).holds)
        out.violations.push_back("LM not closed though union closed: " + pair->first.payload +
                                 " " + pair->second.payload);
    return out;
}

TrialOutcome suite_t2b(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    auto pair = draw_union_closed_pair(rng, bounds);
    if (!pair) return out;
    out.qualified = true;
    for (int len = 1; len <= 4; ++len) {
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<const Dfa*> parts;
            std::string shape;
            for (int i = 0; i < len; ++i) {
                bool is_l = (mask >> i) & 1;
                parts.push_back(is_l ? &pair->first.dfa : &pair->second.dfa);
                shape += is_l ? 'L' : 'M';
            }
            Dfa w = concat_dfa(parts, bounds.det_budget);
            if (!check_property(w, Property::PositiveClosed).holds)
                out.violations.push_back("W=" + shape + " not closed: " + pair->first.payload +
                                         " " + pair->second.payload);
        }
    }
    return out;
}

TrialOutcome suite_t3a(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    Instance l = draw_open_with_eps(rng, binary_alphabet(), bounds);
    Instance m = draw_open_with_eps(rng, binary_alphabet(), bounds);
    if (!check_property(l.dfa, Property::PositiveOpen).holds || !contains_eps(l.dfa) ||
        !check_property(m.dfa, Property::PositiveOpen).holds || !contains_eps(m.dfa)) {
        out.qualified = true;
        out.violations.push_back("generator produced a non-open or eps-free instance: " +
                                 l.payload + " " + m.payload);
        return out;
    }
    out.qualified = true;
    Dfa lm = concat_dfa({&l.dfa, &m.dfa}, bounds.det_budget);
    if (!check_property(lm, Property::PositiveOpen).holds)
        out.violations.push_back("LM not open: " + l.payload + " " + m.payload);
    return out;
}

TrialOutcome suite_t3b(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    auto l = draw_open_eps_free(rng, binary_alphabet(), bounds);
    auto m = draw_open_eps_free(rng, binary_alphabet(), bounds);
    if (!l || !m) return out;
    if (!check_property(l->dfa, Property::PositiveOpen).holds || contains_eps(l->dfa) ||
        !check_property(m->dfa, Property::PositiveOpen).holds || contains_eps(m->dfa)) {
        out.qualified = true;
        out.violations.push_back("generator produced a bad eps-free open instance: " +
                                 l->payload + " " + m->payload);
        return out;
    }
    out.qualified = true;
    Dfa lm = concat_dfa({&l->dfa, &m->dfa}, bounds.det_budget);
    if (check_property(lm, Property::PositiveOpen).holds)
        out.violations.push_back("LM open despite eps-free non-empty factors: " + l->payload +
                                 " " + m->payload);
    return out;
}

TrialOutcome suite_t3d(const LawBounds& bounds) {
    TrialOutcome out;
    out.qualified = true;
    Alphabet a = unary_alphabet();
    auto w = [&](const char* dotted) { return Word::from_dotted(a, dotted); };
    std::vector<Word> l1 = {w("eps"), w("a"), w("a.a.a"), w("a.a.a.a.a")};
    std::vector<Word> m1 = {w("a")};
    Dfa l1_dfa = finite_dfa(a, l1, bounds.det_budget);
    Dfa m1_dfa = finite_dfa(a, m1, bounds.det_budget);
    if (!check_property(l1_dfa, Property::PositiveOpen).holds ||
        !check_property(m1_dfa, Property::PositiveOpen).holds)
        out.violations.push_back("fixture factors not open");
    Dfa lm1 = concat_dfa({&l1_dfa, &m1_dfa}, bounds.det_budget);
    if (!run(lm1, w("a.a.a.a.a.a"))) out.violations.push_back("a^6 missing from LM");
    if (run(lm1, w("a.a.a"))) out.violations.push_back("a^3 unexpectedly in LM");
    if (check_property(lm1, Property::PositiveOpen).holds)
        out.violations.push_back("LM open for the non-open fixture");

    std::vector<Word> l2 = {w("eps"), w("a"), w("a.a.a")};
    Dfa l2_dfa = finite_dfa(a, l2, bounds.det_budget);
    Dfa lm2 = concat_dfa({&l2_dfa, &m1_dfa}, bounds.det_budget);
    Dfa expect = finite_dfa(a, {w("a"), w("a.a"), w("a.a.a.a")}, bounds.det_budget);
    if (!equivalent(lm2, expect)) out.violations.push_back("LM mismatch for the open fixture");
    if (!check_property(lm2, Property::PositiveOpen).holds)
        out.violations.push_back("LM not open for the open fixture");
    return out;
}

// Clopen pair covering Sigma*: partner is the complement, everything, or a
// rejection-sampled clopen language.
std::optional<std::pair<Instance, Instance>> draw_clopen_cover(SplitMix64& rng,
                                                               const LawBounds& bounds) {
    Alphabet alphabet = binary_alphabet();
    auto l = draw_clopen(rng, alphabet, bounds);
    if (!l) return std::nullopt;
    std::uint64_t strategy = rng.below(4);
    std::optional<Instance> m;
    if (strategy <= 1) {
        m = Instance{"complement-of " + l->payload, minimize(complement(l->dfa))};
    } else if (strategy == 2) {
        m = Instance{"all", dfa_all(alphabet)};
    } else {
        m = draw_clopen(rng, alphabet, bounds);
        if (!m) return std::nullopt;
    }
    Dfa both = boolean_combine(l->dfa, m->dfa, BoolOp::Or);
    if (!equivalent(both, dfa_all(alphabet))) return std::nullopt;
    if (!check_property(l->dfa, Property::ClopenPositive).holds ||
        !check_property(m->dfa, Property::ClopenPositive).holds)
        return std::nullopt;
    return std::make_pair(std::move(*l), std::move(*m));
}

TrialOutcome suite_t4a(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    auto pair = draw_clopen_cover(rng, bounds);
    if (!pair) return out;
    out.qualified = true;
    Dfa lm = concat_dfa({&pair->first.dfa, &pair->second.dfa}, bounds.det_budget);
    if (!check_property(lm, Property::ClopenPositive).holds)
        out.violations.push_back("LM not clopen: " + pair->first.payload + " " +
                                 pair->second.payload);
    return out;
}

TrialOutcome suite_t4b(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    auto pair = draw_clopen_cover(rng, bounds);
    if (!pair) return out;
    out.qualified = true;
    for (int len = 1; len <= 4; ++len) {
        for (int mask = 0; mask < (1 << len); ++mask) {
            std::vector<const Dfa*> parts;
            std::string shape;
            int eps_free = 0;
            for (int i = 0; i < len; ++i) {
                const Dfa* part = ((mask >> i) & 1) ? &pair->first.dfa : &pair->second.dfa;
                parts.push_back(part);
                shape += ((mask >> i) & 1) ? 'L' : 'M';
                if (!contains_eps(*part)) ++eps_free;
            }
            Dfa w = concat_dfa(parts, bounds.det_budget);
            bool clopen = check_property(w, Property::ClopenPositive).holds;
            bool predicted = is_empty(w) || eps_free <= 1;
            if (clopen != predicted)
                out.violations.push_back("W=" + shape + " clopen=" +
                                         (clopen ? "yes" : "no") + " predicted=" +
                                         (predicted ? "yes" : "no") + ": " +
                                         pair->first.payload + " " + pair->second.payload);
        }
    }
    return out;
}

TrialOutcome suite_t4c(const LawBounds& bounds) {
    TrialOutcome out;
    out.qualified = true;
    Alphabet alphabet = binary_alphabet();
    LangExpr eps_only = LangExpr::finite(alphabet, {Word(alphabet)});
    LangExpr l = LangExpr::union_of(eps_only, LangExpr::freq_cmp(alphabet, "a", Cmp::Lt,
                                                                 Rational(1, 2)));
    LangExpr m = LangExpr::union_of(eps_only, LangExpr::freq_cmp(alphabet, "a", Cmp::Gt,
                                                                 Rational(1, 2)));

    MemberFn lm_member = [&](const Word& w) {
        for (int i = 0; i <= w.size(); ++i)
            if (l.member(w.subword(0, i)) && m.member(w.subword(i, w.size()))) return true;
        return false;
    };
    OracleOptions opt;
    opt.max_len = bounds.oracle_max_len;
    opt.word_budget = bounds.oracle_word_budget;
    opt.parallel = false;
    if (!oracle_check(lm_member, alphabet, OracleProp::Closed, opt).holds)
        out.violations.push_back("LM failed the bounded closed check");
    if (!oracle_check(lm_member, alphabet, OracleProp::Open, opt).holds)
        out.violations.push_back("LM failed the bounded open check");

    LangExpr lum = LangExpr::union_of(l, m);
    OracleOptions small = opt;
    small.max_len = 4;
    if (oracle_check(lum, OracleProp::Closed, small).holds)
        out.violations.push_back("L union M passed the closed check unexpectedly");
    Word b = Word::from_dotted(alphabet, "b");
    Word a = Word::from_dotted(alphabet, "a");
    if (!(lum.member(b) && lum.member(a) && !lum.member(b.concat(a))))
        out.violations.push_back("witness ba does not verify against L union M");
    return out;
}

TrialOutcome suite_t7(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    Alphabet alphabet = binary_alphabet();
    std::vector<Word> left, right;
    std::string payload;
    if (rng.chance(1, 2)) {
        Word u = rand_word(rng, alphabet, 3);
        Word v = rand_word(rng, alphabet, 3);
        if (commutes(u, v)) return out;
        auto pair = separate_open_pair(u, v);
        left = std::move(pair.first);
        right = std::move(pair.second);
        payload = "separated u=" + u.dotted() + " v=" + v.dotted();
    } else {
        left = rand_basis(rng, alphabet, 3, 3);
        right = rand_basis(rng, alphabet, 3, 3);
        payload = words_payload("L", left) + " " + words_payload("M", right);
    }
    Dfa l_dfa = finite_dfa(alphabet, left, bounds.det_budget);
    Dfa r_dfa = finite_dfa(alphabet, right, bounds.det_budget);
    if (!is_empty(boolean_combine(l_dfa, r_dfa, BoolOp::And))) return out;
    if (!check_property(l_dfa, Property::PositiveOpen).holds ||
        !check_property(r_dfa, Property::PositiveOpen).holds)
        return out;
    out.qualified = true;
    Dfa l_plus = minimize(determinize(closure(nfa_from(l_dfa), ClosureKind::Positive),
                                      bounds.det_budget));
    Dfa r_plus = minimize(determinize(closure(nfa_from(r_dfa), ClosureKind::Positive),
                                      bounds.det_budget));
    if (!is_empty(boolean_combine(l_plus, r_plus, BoolOp::And)))
        out.violations.push_back("closures intersect: " + payload);
    return out;
}

TrialOutcome suite_c2(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    Alphabet alphabet = binary_alphabet();
    Instance l = draw_closed(rng, alphabet, ClosureKind::Positive, bounds);
    Instance m{"", dfa_all(alphabet)};
    if (rng.chance(7, 10)) {
        Dfa rest = minimize(complement(l.dfa));
        m = Instance{"closure-of-complement of " + l.payload,
                     minimize(determinize(closure(nfa_from(rest), ClosureKind::Positive),
                                          bounds.det_budget))};
    } else {
        m.payload = "all";
    }
    if (!check_property(m.dfa, Property::PositiveClosed).holds) return out;
    if (!equivalent(boolean_combine(l.dfa, m.dfa, BoolOp::Or), dfa_all(alphabet))) return out;
    out.qualified = true;
    Dfa li = interior(l.dfa, ClosureKind::Positive, bounds.det_budget);
    Dfa mi = interior(m.dfa, ClosureKind::Positive, bounds.det_budget);
    if (!equivalent(boolean_combine(li, mi, BoolOp::Or), dfa_all(alphabet)))
        out.violations.push_back("interiors do not cover: " + l.payload + " | " + m.payload);
    return out;
}

int max_word_len(const std::vector<Word>& ws) {
    int m = 0;
    for (const Word& w : ws) m = std::max(m, w.size());
    return m;
}

void check_compact_iff_closed(const Dfa& lang, int m_max, const std::string& label,
                              const std::string& payload, const LawBounds& bounds,
                              TrialOutcome& out) {
    bool closed = check_property(lang, Property::PositiveClosed).holds;
    if (!closed) return;  // not closed, hence not compact; nothing further to test
    CompactAnswer ans = is_compact(lang, ClosureKind::Positive, m_max, bounds.det_budget);
    if (!ans.known) {
        out.warnings.push_back(label + " closed but no basis found up to m_max=" +
                               std::to_string(m_max) + " (" + payload + ")");
        return;
    }
    CompactLang cand{lang.alphabet(), ans.basis, ClosureKind::Positive};
    if (!equivalent(compact_automaton(cand, bounds.det_budget), lang))
        out.violations.push_back(label + " returned basis fails re-verification (" + payload +
                                 ")");
}

TrialOutcome suite_t12(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    Alphabet alphabet = binary_alphabet();
    std::vector<Word> basis = rand_basis(rng, alphabet, 3, 3);
    Dfa l = closure_dfa(alphabet, basis, ClosureKind::Positive, bounds.det_budget);
    std::vector<Word> m_words = rand_basis(rng, alphabet, 3, 2);
    if (rng.chance(1, 4)) m_words.push_back(Word(alphabet));  // sometimes include eps
    Dfa m_dfa = finite_dfa(alphabet, m_words, bounds.det_budget);
    out.qualified = true;

    int m_max = max_word_len(basis) + max_word_len(m_words) + 2;
    std::string payload = words_payload("basis", basis) + " " + words_payload("M", m_words);

    Dfa united = minimize(boolean_combine(l, m_dfa, BoolOp::Or));
    check_compact_iff_closed(united, m_max, "L|M", payload, bounds, out);
    Dfa strip = minimize(boolean_combine(l, m_dfa, BoolOp::Diff));
    check_compact_iff_closed(strip, m_max, "L\\M", payload, bounds, out);
    return out;
}

TrialOutcome suite_t13(SplitMix64& rng, const LawBounds& bounds) {
    TrialOutcome out;
    Alphabet alphabet = binary_alphabet();
    auto l = draw_open_eps_free(rng, alphabet, bounds);
    std::vector<Word> words;
    std::string payload;
    if (l && shortest_accepted(l->dfa).has_value()) {
        // keep only truly finite draws: cut at a generous bound and compare
        WordIndex index(alphabet, 8, std::uint64_t{1} << 20);
        std::vector<std::uint8_t> memb = membership_table(index, l->dfa, false);
        for (std::uint64_t r = 0; r < index.total(); ++r)
            if (memb[static_cast<size_t>(r)]) words.push_back(index.word_at(r));
        Dfa cut = finite_dfa(alphabet, words, bounds.det_budget);
        if (!equivalent(cut, l->dfa)) return out;  // infinite open language; redraw
        payload = l->payload;
    } else {
        return out;
    }
    if (!check_property(l->dfa, Property::PositiveOpen).holds) return out;
    out.qualified = true;

    Dfa k = minimize(complement(l->dfa));
    if (!check_property(k, Property::PositiveClosed).holds) {
        out.violations.push_back("complement of a finite open language not closed: " + payload);
        return out;
    }
    int m_max = 2 * std::max(1, max_word_len(words)) + 2;
    CompactAnswer ans = is_compact(k, ClosureKind::Positive, m_max, bounds.det_budget);
    if (!ans.known) {
        out.warnings.push_back("complement closed but no basis up to m_max=" +
                               std::to_string(m_max) + " (" + payload + ")");
        return out;
    }
    CompactLang cand{alphabet, ans.basis, ClosureKind::Positive};
    if (!equivalent(compact_automaton(cand, bounds.det_budget), k))
        out.violations.push_back("basis fails re-verification: " + payload);
    return out;
}

TrialOutcome run_attempt(std::string_view suite, std::uint64_t attempt_seed,
                         const LawBounds& bounds) {
    SplitMix64 rng(attempt_seed);
    try {
        if (suite == "T1a") return suite_t1a(rng, bounds);
        if (suite == "T1b") return suite_t1b(rng, bounds);
        if (suite == "T1c") return suite_t1c(rng, bounds);
        if (suite == "T1d") return suite_t1d(rng, bounds);
        if (suite == "T2a") return suite_t2a(rng, bounds);
        if (suite == "T2b") return suite_t2b(rng, bounds);
        if (suite == "T3a") return suite_t3a(rng, bounds);
        if (suite == "T3b") return suite_t3b(rng, bounds);
        if (suite == "T3d") return suite_t3d(bounds);
        if (suite == "T4a") return suite_t4a(rng, bounds);
        if (suite == "T4b") return suite_t4b(rng, bounds);
        if (suite == "T4c") return suite_t4c(bounds);
        if (suite == "T7") return suite_t7(rng, bounds);
        if (suite == "C2") return suite_c2(rng, bounds);
        if (suite == "T12") return suite_t12(rng, bounds);
        if (suite == "T13") return suite_t13(rng, bounds);
    } catch (const BudgetExceededError& e) {
        TrialOutcome out;
        out.skipped = true;
        out.warnings.push_back(std::string("budget exceeded: ") + e.what());
        return out;
    } catch (const Error& e) {
        TrialOutcome out;
        out.qualified = true;
        out.violations.push_back(std::string("unexpected error: ") + e.what());
        return out;
    }
    throw Error("unknown law suite: " + std::string(suite));
}

}  // namespace

const std::vector<std::string>& law_suite_ids() {
    static const std::vector<std::string> ids = {"T1a", "T1b", "T1c", "T1d", "T2a", "T2b",
                                                 "T3a", "T3b", "T3d", "T4a", "T4b", "T4c",
                                                 "T7",  "C2",  "T12", "T13"};
    return ids;
}

LawReport run_law_suite(std::string_view suite, int trials, std::uint64_t seed,
                        const LawBounds& bounds, bool parallel) {
    const auto& ids = law_suite_ids();
    if (std::find(ids.begin(), ids.end(), std::string(suite)) == ids.end())
        throw Error("unknown law suite: " + std::string(suite));
    if (trials < 1) throw Error("trials must be >= 1");

    LawReport report;
    report.suite = std::string(suite);
    report.seed = seed;
    report.requested_trials = trials;

    const std::int64_t cap =
        static_cast<std::int64_t>(trials) * static_cast<std::int64_t>(bounds.attempt_multiplier);
    const std::int64_t chunk = std::max<std::int64_t>(trials, 64);
    for (std::int64_t base = 0; base < cap && report.qualifying < trials; base += chunk) {
        const std::int64_t hi = std::min(base + chunk, cap);
        std::vector<TrialOutcome> outcomes(static_cast<size_t>(hi - base));
        std::vector<std::uint64_t> seeds(static_cast<size_t>(hi - base));
        for (std::int64_t j = base; j < hi; ++j)
            seeds[static_cast<size_t>(j - base)] = derive_seed(seed, static_cast<std::uint64_t>(j));
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (std::int64_t j = base; j < hi; ++j)
            outcomes[static_cast<size_t>(j - base)] =
                run_attempt(suite, seeds[static_cast<size_t>(j - base)], bounds);
        for (std::int64_t j = base; j < hi && report.qualifying < trials; ++j) {
            TrialOutcome& o = outcomes[static_cast<size_t>(j - base)];
            std::uint64_t attempt_seed = seeds[static_cast<size_t>(j - base)];
            if (o.skipped) {
                ++report.skipped;
                for (std::string& w : o.warnings)
                    report.warnings.push_back({-1, std::move(w)});
                continue;
            }
            if (!o.qualified) {
                ++report.discarded;
                continue;
            }
            int trial_index = report.qualifying++;
            for (std::string& v : o.violations)
                report.violations.push_back({trial_index, attempt_seed, std::move(v)});
            for (std::string& w : o.warnings)
                report.warnings.push_back({trial_index, std::move(w)});
        }
    }
    if (report.qualifying < trials)
        report.warnings.push_back(
            {-1, "generation exhausted " + std::to_string(cap) + " attempts with only " +
                     std::to_string(report.qualifying) + " qualifying trials"});
    return report;
}

std::string serialize_report(const LawReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << " seed " << report.seed << " requested "
        << report.requested_trials << " qualifying " << report.qualifying << " discarded "
        << report.discarded << " skipped " << report.skipped << " violations "
        << report.violations.size() << " warnings " << report.warnings.size() << "\n";
    for (const LawViolation& v : report.violations)
        out << "violation " << report.suite << " trial=" << v.trial << " seed=" << v.attempt_seed
            << " " << v.detail << "\n";
    for (const LawWarning& w : report.warnings) {
        out << "warning " << report.suite;
        if (w.trial >= 0) out << " trial=" << w.trial;
        out << " " << w.detail << "\n";
    }
    return out.str();
}

}  // namespace closures
