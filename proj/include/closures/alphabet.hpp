#ifndef CLOSURES_ALPHABET_HPP
#define CLOSURES_ALPHABET_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "closures/errors.hpp"

namespace closures {

using SymId = std::int32_t;

// An ordered set of distinct symbol tokens. The declared order is total and
// fixed; every lexicographic tie-break in the library derives from it.
// Tokens are opaque non-empty strings without whitespace; block tokens such
// as <a.b> are ordinary tokens here.
class Alphabet {
public:
    Alphabet() : impl_(empty_impl()) {}
    explicit Alphabet(std::vector<std::string> tokens);

    int size() const { return static_cast<int>(impl_->tokens.size()); }
    const std::string& token(SymId i) const { return impl_->tokens[static_cast<size_t>(i)]; }
    const std::vector<std::string>& tokens() const { return impl_->tokens; }

    std::optional<SymId> index_of(std::string_view tok) const {
        auto it = impl_->index.find(std::string(tok));
        if (it == impl_->index.end()) return std::nullopt;
        return it->second;
    }

    // Value equality: same tokens in the same order.
    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.impl_ == b.impl_ || a.impl_->tokens == b.impl_->tokens;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }

private:
    struct Impl {
        std::vector<std::string> tokens;
        std::unordered_map<std::string, SymId> index;
    };
    static std::shared_ptr<const Impl> empty_impl();
    std::shared_ptr<const Impl> impl_;
};

inline void require_same_alphabet(const Alphabet& a, const Alphabet& b, const char* what) {
    if (a != b) throw AlphabetMismatchError(std::string("alphabet mismatch in ") + what);
}

// A finite sequence of symbols over one alphabet; may be empty (epsilon).
class Word {
public:
    Word() = default;
    explicit Word(Alphabet alphabet, std::vector<SymId> syms = {});

    static Word from_tokens(const Alphabet& alphabet, const std::vector<std::string>& tokens);
    // Dotted form: "a.b.a"; the token "eps" denotes the empty word.
    static Word from_dotted(const Alphabet& alphabet, std::string_view text);

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<SymId>& syms() const { return syms_; }
    int size() const { return static_cast<int>(syms_.size()); }
    bool empty() const { return syms_.empty(); }
    SymId operator[](int i) const { return syms_[static_cast<size_t>(i)]; }

    std::string dotted() const;

    Word concat(const Word& other) const;
    Word subword(int begin, int end) const;  // [begin, end)
    Word repeat(int times) const;

    // Count of occurrences of one symbol.
    std::int64_t count(SymId sym) const;

    friend bool operator==(const Word& a, const Word& b) {
        return a.syms_ == b.syms_ && a.alphabet_ == b.alphabet_;
    }
    friend bool operator!=(const Word& a, const Word& b) { return !(a == b); }

private:
    Alphabet alphabet_;
    std::vector<SymId> syms_;
};

// Plain lexicographic order by declared symbol order (prefix sorts first).
bool lex_less(const Word& a, const Word& b);
// Length first, then lexicographic; the enumeration order used everywhere.
bool length_lex_less(const Word& a, const Word& b);

}  // namespace closures

#endif  // CLOSURES_ALPHABET_HPP
