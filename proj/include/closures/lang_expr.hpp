#ifndef CLOSURES_LANG_EXPR_HPP
#define CLOSURES_LANG_EXPR_HPP

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "closures/alphabet.hpp"
#include "closures/rational.hpp"

namespace closures {

enum class Cmp { Lt, Le, Eq, Ge, Gt };

std::string cmp_text(Cmp c);

// Symbolic language over a fixed alphabet, with decidable membership.
// Nodes: sub-alphabet plus (Gamma+), symbol-frequency comparison against an
// exact rational, finite word set, union, intersection, and the image of a
// block morphism (each inner symbol names a block of `n` outer symbols).
// Expressions are immutable; copies share structure.
class LangExpr {
public:
    enum class Kind { SubalphabetPlus, FreqCmp, Finite, Union, Intersect, Image };

    static LangExpr subalphabet_plus(const Alphabet& alphabet,
                                     const std::vector<std::string>& symbols);
    static LangExpr freq_cmp(const Alphabet& alphabet, const std::string& symbol, Cmp cmp,
                             Rational lambda);
    static LangExpr finite(const Alphabet& alphabet, std::vector<Word> words);
    static LangExpr union_of(const LangExpr& l, const LangExpr& r);
    static LangExpr intersect(const LangExpr& l, const LangExpr& r);
    // inner is over an alphabet of block tokens, each spelling a word of
    // length block_len over `outer`.
    static LangExpr image(int block_len, const LangExpr& inner, const Alphabet& outer);

    Kind kind() const;
    const Alphabet& alphabet() const;

    // SubalphabetPlus
    const std::vector<SymId>& gamma() const;
    // FreqCmp
    SymId freq_symbol() const;
    Cmp freq_cmp_kind() const;
    const Rational& freq_lambda() const;
    // Finite
    const std::vector<Word>& finite_words() const;
    // Union / Intersect
    LangExpr left() const;
    LangExpr right() const;
    // Image
    int block_len() const;
    LangExpr inner() const;

    bool member(const Word& w) const;
    // Evaluation on raw symbol ids over alphabet(); no validation. Ids at or
    // past the alphabet size act as unknown tokens.
    bool member_syms(const std::vector<SymId>& syms) const;

    // Structural comparison over kinds, tokens, rationals and block sizes;
    // the ambient alphabet is not part of the comparison.
    friend bool operator==(const LangExpr& a, const LangExpr& b);
    friend bool operator!=(const LangExpr& a, const LangExpr& b) { return !(a == b); }

    struct Node;
    const Node& node() const { return *node_; }

private:
    explicit LangExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Expression text, e.g. "(union (inter (image 2 (sig+ <a.b>)) (freq a = 1/2)) (freq a < 1/2))".
std::string serialize_expr(const LangExpr& e);
// Expression with a leading "(alphabet ...)" declaration; the `.lang` file form.
std::string serialize_lang_file(const LangExpr& e);

// Accepts an optional leading "(alphabet ...)" form; without one the alphabet
// is inferred from the symbols mentioned, in order of first appearance.
LangExpr parse_expr(std::string_view text);
LangExpr parse_expr(std::string_view text, const Alphabet& alphabet);

// Splits a block token such as "<a.b>" or "<<a.b>.<b.a>>" into its component
// tokens. Throws ParseError when the token is not block-shaped.
std::vector<std::string> split_block_token(const std::string& token);

}  // namespace closures

#endif  // CLOSURES_LANG_EXPR_HPP
