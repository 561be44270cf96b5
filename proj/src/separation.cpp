#include "closures/separation.hpp"

#include <algorithm>
#include <set>

#include "closures/oracle.hpp"

namespace closures {

std::string SeparationStep::describe() const {
    switch (kind) {
        case Kind::DisjointAlphabets: {
            std::string out = "disjoint-alphabets {";
            for (size_t i = 0; i < gamma.size(); ++i) {
                if (i) out += ' ';
                out += gamma[i];
            }
            return out + "}";
        }
        case Kind::FreqSplit:
            return "freq-split " + symbol + " lambda_u=" + lambda_u.str() +
                   " lambda_v=" + lambda_v.str();
        case Kind::BlockDescent:
            return "block-descent " + symbol + " lambda=" + lambda_u.str() +
                   " n=" + std::to_string(block_len);
    }
    return "?";
}

namespace {

Rational frequency(const Word& w, SymId sym) {
    return Rational(w.count(sym), w.size());
}

// |a - b| comparison for rationals without leaving integers.
__int128 abs_diff_num(const Rational& a, const Rational& b) {
    __int128 d = static_cast<__int128>(a.num) * b.den - static_cast<__int128>(b.num) * a.den;
    return d < 0 ? -d : d;
}

bool diff_greater(const Rational& a1, const Rational& b1, const Rational& a2,
                  const Rational& b2) {
    // |a1 - b1| > |a2 - b2|, cross-multiplied onto a common denominator
    return abs_diff_num(a1, b1) * (static_cast<__int128>(a2.den) * b2.den) >
           abs_diff_num(a2, b2) * (static_cast<__int128>(a1.den) * b1.den);
}

struct BlockImage {
    Alphabet block_alphabet;
    Word p, q;
};

// Decomposes u and v into length-n blocks over a fresh alphabet of block
// tokens, in order of first appearance scanning u then v.
BlockImage block_decompose(const Word& u, const Word& v, int n) {
    const Alphabet& sigma = u.alphabet();
    auto spell = [&](const Word& w, int start) {
        std::string tok = "<";
        for (int i = 0; i < n; ++i) {
            if (i) tok += '.';
            tok += sigma.token(w[start + i]);
        }
        return tok + ">";
    };
    std::vector<std::string> tokens;
    std::set<std::string> seen;
    std::vector<std::string> p_toks, q_toks;
    for (int i = 0; i + n <= u.size(); i += n) {
        std::string tok = spell(u, i);
        if (seen.insert(tok).second) tokens.push_back(tok);
        p_toks.push_back(tok);
    }
    for (int i = 0; i + n <= v.size(); i += n) {
        std::string tok = spell(v, i);
        if (seen.insert(tok).second) tokens.push_back(tok);
        q_toks.push_back(tok);
    }
    Alphabet block_alphabet(tokens);
    return {block_alphabet, Word::from_tokens(block_alphabet, p_toks),
            Word::from_tokens(block_alphabet, q_toks)};
}

LangExpr separate_rec(const Word& u, const Word& v, std::vector<SeparationStep>& steps) {
    const Alphabet& sigma = u.alphabet();

    std::vector<std::uint8_t> in_u(static_cast<size_t>(sigma.size()), 0);
    std::vector<std::uint8_t> in_v(static_cast<size_t>(sigma.size()), 0);
    for (SymId s : u.syms()) in_u[static_cast<size_t>(s)] = 1;
    for (SymId s : v.syms()) in_v[static_cast<size_t>(s)] = 1;

    std::vector<SymId> common;
    for (SymId s = 0; s < sigma.size(); ++s)
        if (in_u[static_cast<size_t>(s)] && in_v[static_cast<size_t>(s)]) common.push_back(s);

    if (common.empty()) {
        SeparationStep step;
        step.kind = SeparationStep::Kind::DisjointAlphabets;
        std::vector<std::string> gamma;
        for (SymId s = 0; s < sigma.size(); ++s)
            if (in_u[static_cast<size_t>(s)]) gamma.push_back(sigma.token(s));
        step.gamma = gamma;
        steps.push_back(step);
        return LangExpr::subalphabet_plus(sigma, gamma);
    }

    // Pick the common symbol with the largest frequency gap, ties by
    // alphabet order. A gap gives the cheap one-sided frequency language.
    SymId chosen = common[0];
    Rational lu = frequency(u, chosen), lv = frequency(v, chosen);
    for (size_t i = 1; i < common.size(); ++i) {
        Rational cu = frequency(u, common[i]), cv = frequency(v, common[i]);
        if (diff_greater(cu, cv, lu, lv)) {
            chosen = common[i];
            lu = cu;
            lv = cv;
        }
    }

    if (!(lu == lv)) {
        SeparationStep step;
        step.kind = SeparationStep::Kind::FreqSplit;
        step.symbol = sigma.token(chosen);
        step.lambda_u = lu;
        step.lambda_v = lv;
        steps.push_back(step);
        bool greater = compare(lu, lv) > 0;
        return LangExpr::freq_cmp(sigma, sigma.token(chosen), greater ? Cmp::Ge : Cmp::Le, lu);
    }

    // Equal frequencies: descend to blocks of the denominator length.
    Rational lambda = lu;
    int n = static_cast<int>(lambda.den);
    if (n < 2 || lambda.num <= 0 || lambda.num >= lambda.den)
        throw Error("separate_clopen: commuting words slipped through");
    BlockImage img = block_decompose(u, v, n);

    SeparationStep step;
    step.kind = SeparationStep::Kind::BlockDescent;
    step.symbol = sigma.token(chosen);
    step.lambda_u = lambda;
    step.lambda_v = lambda;
    step.block_len = n;
    steps.push_back(step);

    LangExpr inner = separate_rec(img.p, img.q, steps);
    LangExpr phi = LangExpr::image(n, inner, sigma);
    LangExpr a_eq = LangExpr::freq_cmp(sigma, sigma.token(chosen), Cmp::Eq, lambda);
    LangExpr a_lt = LangExpr::freq_cmp(sigma, sigma.token(chosen), Cmp::Lt, lambda);
    return LangExpr::union_of(LangExpr::intersect(phi, a_eq), a_lt);
}

void require_separable(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw EmptyWordError("separation needs non-empty words");
    require_same_alphabet(u.alphabet(), v.alphabet(), "separation");
    if (commutes(u, v))
        throw CommuteError("words commute (uv = vu): no clopen separator exists");
}

}  // namespace

std::pair<LangExpr, SeparationTrace> separate_clopen(const Word& u, const Word& v) {
    require_separable(u, v);
    SeparationTrace trace;
    LangExpr expr = separate_rec(u, v, trace.steps);
    return {std::move(expr), std::move(trace)};
}

namespace {

LangExpr replay_rec(const Word& u, const Word& v, const SeparationTrace& trace, size_t& pos) {
    if (pos >= trace.steps.size()) throw Error("trace too short for replay");
    const SeparationStep& step = trace.steps[pos++];
    const Alphabet& sigma = u.alphabet();
    switch (step.kind) {
        case SeparationStep::Kind::DisjointAlphabets:
            return LangExpr::subalphabet_plus(sigma, step.gamma);
        case SeparationStep::Kind::FreqSplit: {
            bool greater = compare(step.lambda_u, step.lambda_v) > 0;
            return LangExpr::freq_cmp(sigma, step.symbol, greater ? Cmp::Ge : Cmp::Le,
                                      step.lambda_u);
        }
        case SeparationStep::Kind::BlockDescent: {
            BlockImage img = block_decompose(u, v, step.block_len);
            LangExpr inner = replay_rec(img.p, img.q, trace, pos);
            LangExpr phi = LangExpr::image(step.block_len, inner, sigma);
            LangExpr a_eq = LangExpr::freq_cmp(sigma, step.symbol, Cmp::Eq, step.lambda_u);
            LangExpr a_lt = LangExpr::freq_cmp(sigma, step.symbol, Cmp::Lt, step.lambda_u);
            return LangExpr::union_of(LangExpr::intersect(phi, a_eq), a_lt);
        }
    }
    throw Error("unknown trace step");
}

}  // namespace

LangExpr replay_trace(const Word& u, const Word& v, const SeparationTrace& trace) {
    size_t pos = 0;
    LangExpr e = replay_rec(u, v, trace, pos);
    if (pos != trace.steps.size()) throw Error("trace too long for replay");
    return e;
}

std::vector<Word> separate_open(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw EmptyWordError("separate_open needs non-empty words");
    require_same_alphabet(u.alphabet(), v.alphabet(), "separate_open");
    if (power_exponent(u, v).has_value())
        throw PowerError("u is a power of v: every open language containing u contains v");
    WordIndex index(u.alphabet(), u.size(), std::uint64_t{1} << 24);
    std::vector<Word> out;
    for (std::uint64_t r = index.first_of_length(1); r < index.total(); ++r) {
        Word x = index.word_at(r);
        if (!power_exponent(x, v).has_value()) out.push_back(std::move(x));
    }
    return out;
}

std::pair<std::vector<Word>, WhichWord> distinguish_open(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw EmptyWordError("distinguish_open needs non-empty words");
    require_same_alphabet(u.alphabet(), v.alphabet(), "distinguish_open");
    if (u == v) throw EqualWordsError("equal words cannot be distinguished");
    bool pick_u;
    if (u.size() != v.size())
        pick_u = u.size() < v.size();
    else
        pick_u = lex_less(u, v);
    const Word& w = pick_u ? u : v;
    std::vector<Word> prefixes;
    for (int i = 0; i <= w.size(); ++i) prefixes.push_back(w.subword(0, i));
    return {std::move(prefixes), pick_u ? WhichWord::U : WhichWord::V};
}

std::pair<std::vector<Word>, std::vector<Word>> separate_open_pair(const Word& u, const Word& v) {
    auto [k_expr, trace] = separate_clopen(u, v);
    (void)trace;
    int bound = std::max(u.size(), v.size());
    WordIndex index(u.alphabet(), bound, std::uint64_t{1} << 24);
    std::vector<Word> left, right;
    for (std::uint64_t r = index.first_of_length(1); r < index.total(); ++r) {
        Word x = index.word_at(r);
        bool in_k = k_expr.member(x);
        if (in_k && x.size() <= u.size()) left.push_back(std::move(x));
        else if (!in_k && x.size() <= v.size()) right.push_back(std::move(x));
    }
    return {std::move(left), std::move(right)};
}

}  // namespace closures
