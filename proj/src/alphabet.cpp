#include "closures/alphabet.hpp"

#include <algorithm>

namespace closures {

std::shared_ptr<const Alphabet::Impl> Alphabet::empty_impl() {
    static const auto impl = std::make_shared<const Impl>();
    return impl;
}

Alphabet::Alphabet(std::vector<std::string> tokens) {
    auto impl = std::make_shared<Impl>();
    impl->tokens = std::move(tokens);
    for (size_t i = 0; i < impl->tokens.size(); ++i) {
        const std::string& tok = impl->tokens[i];
        if (tok.empty()) throw Error("empty symbol token");
        for (char c : tok)
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r')
                throw Error("symbol token contains whitespace: '" + tok + "'");
        auto [it, inserted] = impl->index.emplace(tok, static_cast<SymId>(i));
        (void)it;
        if (!inserted) throw Error("duplicate symbol token: '" + tok + "'");
    }
    impl_ = std::move(impl);
}

Word::Word(Alphabet alphabet, std::vector<SymId> syms)
    : alphabet_(std::move(alphabet)), syms_(std::move(syms)) {
    for (SymId s : syms_)
        if (s < 0 || s >= alphabet_.size())
            throw SymbolError("symbol id out of range");
}

Word Word::from_tokens(const Alphabet& alphabet, const std::vector<std::string>& tokens) {
    std::vector<SymId> syms;
    syms.reserve(tokens.size());
    for (const std::string& tok : tokens) {
        auto id = alphabet.index_of(tok);
        if (!id) throw SymbolError("symbol not in alphabet: '" + tok + "'");
        syms.push_back(*id);
    }
    return Word(alphabet, std::move(syms));
}

Word Word::from_dotted(const Alphabet& alphabet, std::string_view text) {
    if (text == "eps") return Word(alphabet);
    std::vector<std::string> tokens;
    std::string cur;
    int depth = 0;  // dots inside <...> block tokens do not split
    for (char c : text) {
        if (c == '<') ++depth;
        if (c == '>') --depth;
        if (c == '.' && depth == 0) {
            tokens.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    tokens.push_back(cur);
    return from_tokens(alphabet, tokens);
}

std::string Word::dotted() const {
    if (syms_.empty()) return "eps";
    std::string out;
    for (size_t i = 0; i < syms_.size(); ++i) {
        if (i) out.push_back('.');
        out += alphabet_.token(syms_[i]);
    }
    return out;
}

Word Word::concat(const Word& other) const {
    require_same_alphabet(alphabet_, other.alphabet_, "Word::concat");
    std::vector<SymId> syms = syms_;
    syms.insert(syms.end(), other.syms_.begin(), other.syms_.end());
    return Word(alphabet_, std::move(syms));
}

Word Word::subword(int begin, int end) const {
    return Word(alphabet_, std::vector<SymId>(syms_.begin() + begin, syms_.begin() + end));
}

Word Word::repeat(int times) const {
    std::vector<SymId> syms;
    syms.reserve(syms_.size() * static_cast<size_t>(times));
    for (int i = 0; i < times; ++i) syms.insert(syms.end(), syms_.begin(), syms_.end());
    return Word(alphabet_, std::move(syms));
}

std::int64_t Word::count(SymId sym) const {
    return std::count(syms_.begin(), syms_.end(), sym);
}

bool lex_less(const Word& a, const Word& b) {
    return std::lexicographical_compare(a.syms().begin(), a.syms().end(),
                                        b.syms().begin(), b.syms().end());
}

bool length_lex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

}  // namespace closures
