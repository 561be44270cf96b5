#include "closures/lang_expr.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace closures {

std::string cmp_text(Cmp c) {
    switch (c) {
        case Cmp::Lt: return "<";
        case Cmp::Le: return "<=";
        case Cmp::Eq: return "=";
        case Cmp::Ge: return ">=";
        case Cmp::Gt: return ">";
    }
    return "?";
}

struct LangExpr::Node {
    Kind kind;
    Alphabet alphabet;

    // SubalphabetPlus
    std::vector<SymId> gamma;
    std::vector<std::uint8_t> in_gamma;  // indexed by symbol id

    // FreqCmp
    SymId freq_sym = -1;
    Cmp cmp = Cmp::Eq;
    Rational lambda;

    // Finite
    std::vector<Word> words;                 // sorted length-lex
    std::set<std::vector<SymId>> word_set;

    // Union / Intersect / Image
    std::shared_ptr<const Node> left, right, inner;

    // Image
    int block_len = 0;
    // Encoded outer block -> inner symbol id. Blocks are encoded in base
    // |outer alphabet|; any block not in the map acts as a fresh token that
    // fails every membership test that names symbols.
    std::unordered_map<std::uint64_t, SymId> block_codes;
    bool encodable = true;  // k^n fits in 64 bits
    std::unordered_map<std::string, SymId> block_tokens;  // fallback by spelling
};

namespace {

using Node = LangExpr::Node;

// Sentinel id for "token outside the alphabet" during evaluation.
SymId sentinel(const Alphabet& a) { return a.size(); }

bool eval_node(const Node& node, const std::vector<SymId>& word) {
    switch (node.kind) {
        case LangExpr::Kind::SubalphabetPlus: {
            if (word.empty()) return false;
            for (SymId s : word)
                if (s >= static_cast<SymId>(node.in_gamma.size()) || !node.in_gamma[static_cast<size_t>(s)])
                    return false;
            return true;
        }
        case LangExpr::Kind::FreqCmp: {
            std::int64_t count = std::count(word.begin(), word.end(), node.freq_sym);
            int sign = compare_scaled(count, node.lambda, static_cast<std::int64_t>(word.size()));
            switch (node.cmp) {
                case Cmp::Lt: return sign < 0;
                case Cmp::Le: return sign <= 0;
                case Cmp::Eq: return sign == 0;
                case Cmp::Ge: return sign >= 0;
                case Cmp::Gt: return sign > 0;
            }
            return false;
        }
        case LangExpr::Kind::Finite:
            return node.word_set.count(word) != 0;
        case LangExpr::Kind::Union:
            return eval_node(*node.left, word) || eval_node(*node.right, word);
        case LangExpr::Kind::Intersect:
            return eval_node(*node.left, word) && eval_node(*node.right, word);
        case LangExpr::Kind::Image: {
            const int n = node.block_len;
            if (static_cast<int>(word.size()) % n != 0) return false;
            const std::uint64_t k = static_cast<std::uint64_t>(node.alphabet.size());
            const SymId unknown = sentinel(node.inner->alphabet);
            std::vector<SymId> blocks;
            blocks.reserve(word.size() / static_cast<size_t>(n));
            for (size_t i = 0; i < word.size(); i += static_cast<size_t>(n)) {
                SymId id = unknown;
                bool clean = true;
                std::uint64_t code = 0;
                std::string spelled;
                for (int j = 0; j < n; ++j) {
                    SymId s = word[i + static_cast<size_t>(j)];
                    if (s < 0 || s >= static_cast<SymId>(k)) {
                        clean = false;
                        break;
                    }
                    if (node.encodable) {
                        code = code * k + static_cast<std::uint64_t>(s);
                    } else {
                        if (j) spelled.push_back('.');
                        spelled += node.alphabet.token(s);
                    }
                }
                if (clean) {
                    if (node.encodable) {
                        auto it = node.block_codes.find(code);
                        if (it != node.block_codes.end()) id = it->second;
                    } else {
                        auto it = node.block_tokens.find('<' + spelled + '>');
                        if (it != node.block_tokens.end()) id = it->second;
                    }
                }
                blocks.push_back(id);
            }
            return eval_node(*node.inner, blocks);
        }
    }
    return false;
}

}  // namespace

LangExpr LangExpr::subalphabet_plus(const Alphabet& alphabet,
                                    const std::vector<std::string>& symbols) {
    if (symbols.empty()) throw Error("sig+ needs at least one symbol");
    auto node = std::make_shared<Node>();
    node->kind = Kind::SubalphabetPlus;
    node->alphabet = alphabet;
    node->in_gamma.assign(static_cast<size_t>(alphabet.size()), 0);
    for (const std::string& tok : symbols) {
        auto id = alphabet.index_of(tok);
        if (!id) throw SymbolError("sig+ symbol not in alphabet: '" + tok + "'");
        if (!node->in_gamma[static_cast<size_t>(*id)]) {
            node->in_gamma[static_cast<size_t>(*id)] = 1;
            node->gamma.push_back(*id);
        }
    }
    std::sort(node->gamma.begin(), node->gamma.end());
    return LangExpr(std::move(node));
}

LangExpr LangExpr::freq_cmp(const Alphabet& alphabet, const std::string& symbol, Cmp cmp,
                            Rational lambda) {
    auto id = alphabet.index_of(symbol);
    if (!id) throw SymbolError("freq symbol not in alphabet: '" + symbol + "'");
    if (lambda.num < 0 || compare_scaled(1, lambda, 1) < 0)
        throw Error("freq lambda must lie in [0, 1]");
    auto node = std::make_shared<Node>();
    node->kind = Kind::FreqCmp;
    node->alphabet = alphabet;
    node->freq_sym = *id;
    node->cmp = cmp;
    node->lambda = lambda;
    return LangExpr(std::move(node));
}

LangExpr LangExpr::finite(const Alphabet& alphabet, std::vector<Word> words) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Finite;
    node->alphabet = alphabet;
    for (const Word& w : words) {
        require_same_alphabet(alphabet, w.alphabet(), "LangExpr::finite");
        node->word_set.insert(w.syms());
    }
    std::sort(words.begin(), words.end(), length_lex_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    node->words = std::move(words);
    return LangExpr(std::move(node));
}

LangExpr LangExpr::union_of(const LangExpr& l, const LangExpr& r) {
    require_same_alphabet(l.alphabet(), r.alphabet(), "LangExpr::union_of");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Union;
    node->alphabet = l.alphabet();
    node->left = l.node_;
    node->right = r.node_;
    return LangExpr(std::move(node));
}

LangExpr LangExpr::intersect(const LangExpr& l, const LangExpr& r) {
    require_same_alphabet(l.alphabet(), r.alphabet(), "LangExpr::intersect");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Intersect;
    node->alphabet = l.alphabet();
    node->left = l.node_;
    node->right = r.node_;
    return LangExpr(std::move(node));
}

LangExpr LangExpr::image(int block_len, const LangExpr& inner, const Alphabet& outer) {
    if (block_len < 2) throw Error("image block length must be >= 2");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Image;
    node->alphabet = outer;
    node->block_len = block_len;
    node->inner = inner.node_;

    const std::uint64_t k = static_cast<std::uint64_t>(outer.size());
    std::uint64_t limit = 1;
    for (int i = 0; i < block_len && node->encodable; ++i) {
        if (k > 1 && limit > (std::uint64_t{1} << 62) / k) node->encodable = false;
        limit *= k ? k : 1;
    }
    const Alphabet& inner_alpha = inner.alphabet();
    for (SymId id = 0; id < inner_alpha.size(); ++id) {
        const std::string& tok = inner_alpha.token(id);
        std::vector<std::string> parts = split_block_token(tok);
        if (static_cast<int>(parts.size()) != block_len)
            throw Error("block token '" + tok + "' does not name a length-" +
                        std::to_string(block_len) + " word");
        std::uint64_t code = 0;
        for (const std::string& part : parts) {
            auto sid = outer.index_of(part);
            if (!sid)
                throw SymbolError("block component not in outer alphabet: '" + part + "'");
            code = code * k + static_cast<std::uint64_t>(*sid);
        }
        if (node->encodable) node->block_codes.emplace(code, id);
        node->block_tokens.emplace(tok, id);
    }
    return LangExpr(std::move(node));
}

LangExpr::Kind LangExpr::kind() const { return node_->kind; }
const Alphabet& LangExpr::alphabet() const { return node_->alphabet; }
const std::vector<SymId>& LangExpr::gamma() const { return node_->gamma; }
SymId LangExpr::freq_symbol() const { return node_->freq_sym; }
Cmp LangExpr::freq_cmp_kind() const { return node_->cmp; }
const Rational& LangExpr::freq_lambda() const { return node_->lambda; }
const std::vector<Word>& LangExpr::finite_words() const { return node_->words; }
LangExpr LangExpr::left() const { return LangExpr(node_->left); }
LangExpr LangExpr::right() const { return LangExpr(node_->right); }
int LangExpr::block_len() const { return node_->block_len; }
LangExpr LangExpr::inner() const { return LangExpr(node_->inner); }

bool LangExpr::member(const Word& w) const {
    require_same_alphabet(node_->alphabet, w.alphabet(), "LangExpr::member");
    return eval_node(*node_, w.syms());
}

bool LangExpr::member_syms(const std::vector<SymId>& syms) const {
    return eval_node(*node_, syms);
}

bool operator==(const LangExpr& a, const LangExpr& b) {
    const Node& x = *a.node_;
    const Node& y = *b.node_;
    if (x.kind != y.kind) return false;
    switch (x.kind) {
        case LangExpr::Kind::SubalphabetPlus: {
            std::vector<std::string> xs, ys;
            for (SymId s : x.gamma) xs.push_back(x.alphabet.token(s));
            for (SymId s : y.gamma) ys.push_back(y.alphabet.token(s));
            std::sort(xs.begin(), xs.end());
            std::sort(ys.begin(), ys.end());
            return xs == ys;
        }
        case LangExpr::Kind::FreqCmp:
            return x.alphabet.token(x.freq_sym) == y.alphabet.token(y.freq_sym) &&
                   x.cmp == y.cmp && x.lambda == y.lambda;
        case LangExpr::Kind::Finite: {
            if (x.words.size() != y.words.size()) return false;
            for (size_t i = 0; i < x.words.size(); ++i)
                if (x.words[i].dotted() != y.words[i].dotted()) return false;
            return true;
        }
        case LangExpr::Kind::Union:
        case LangExpr::Kind::Intersect:
            return LangExpr(x.left) == LangExpr(y.left) && LangExpr(x.right) == LangExpr(y.right);
        case LangExpr::Kind::Image:
            return x.block_len == y.block_len && LangExpr(x.inner) == LangExpr(y.inner);
    }
    return false;
}

std::vector<std::string> split_block_token(const std::string& token) {
    if (token.size() < 2 || token.front() != '<' || token.back() != '>')
        throw ParseError("not a block token: '" + token + "'", 1, 1);
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (size_t i = 1; i + 1 < token.size(); ++i) {
        char c = token[i];
        if (c == '<') ++depth;
        if (c == '>') --depth;
        if (c == '.' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    parts.push_back(cur);
    for (const std::string& p : parts)
        if (p.empty()) throw ParseError("malformed block token: '" + token + "'", 1, 1);
    return parts;
}

// ---------------------------------------------------------------------------
// Serialization
// ---------------------------------------------------------------------------

namespace {

void serialize_node(const Node& n, std::ostringstream& out) {
    switch (n.kind) {
        case LangExpr::Kind::SubalphabetPlus: {
            out << "(sig+";
            for (SymId s : n.gamma) out << ' ' << n.alphabet.token(s);
            out << ')';
            return;
        }
        case LangExpr::Kind::FreqCmp:
            out << "(freq " << n.alphabet.token(n.freq_sym) << ' ' << cmp_text(n.cmp) << ' '
                << n.lambda.str() << ')';
            return;
        case LangExpr::Kind::Finite: {
            out << "(finite";
            for (const Word& w : n.words) out << ' ' << w.dotted();
            out << ')';
            return;
        }
        case LangExpr::Kind::Union:
        case LangExpr::Kind::Intersect:
            out << (n.kind == LangExpr::Kind::Union ? "(union " : "(inter ");
            serialize_node(*n.left, out);
            out << ' ';
            serialize_node(*n.right, out);
            out << ')';
            return;
        case LangExpr::Kind::Image:
            out << "(image " << n.block_len << ' ';
            serialize_node(*n.inner, out);
            out << ')';
            return;
    }
}

}  // namespace

std::string serialize_expr(const LangExpr& e) {
    std::ostringstream out;
    serialize_node(e.node(), out);
    return out.str();
}

std::string serialize_lang_file(const LangExpr& e) {
    std::ostringstream out;
    out << "(alphabet";
    for (const std::string& t : e.alphabet().tokens()) out << ' ' << t;
    out << ")\n" << serialize_expr(e) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

struct SExpr {
    bool is_atom = false;
    std::string atom;
    std::vector<SExpr> items;
    size_t line = 1, col = 1;
};

struct Lexer {
    std::string_view text;
    size_t pos = 0, line = 1, col = 1;

    void advance() {
        if (pos < text.size() && text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (pos < text.size() &&
               (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\n' || text[pos] == '\r'))
            advance();
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
};

SExpr parse_sexpr(Lexer& lx) {
    lx.skip_ws();
    if (lx.pos >= lx.text.size()) throw ParseError("unexpected end of input", lx.line, lx.col);
    SExpr out;
    out.line = lx.line;
    out.col = lx.col;
    if (lx.text[lx.pos] == '(') {
        lx.advance();
        for (;;) {
            lx.skip_ws();
            if (lx.pos >= lx.text.size())
                throw ParseError("missing closing parenthesis", lx.line, lx.col);
            if (lx.text[lx.pos] == ')') {
                lx.advance();
                return out;
            }
            out.items.push_back(parse_sexpr(lx));
        }
    }
    if (lx.text[lx.pos] == ')') throw ParseError("unexpected ')'", lx.line, lx.col);
    out.is_atom = true;
    while (lx.pos < lx.text.size()) {
        char c = lx.text[lx.pos];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '(' || c == ')') break;
        out.atom.push_back(c);
        lx.advance();
    }
    return out;
}

const std::string& head(const SExpr& sx) {
    if (sx.is_atom || sx.items.empty() || !sx.items[0].is_atom)
        throw ParseError("expected a (head ...) form", sx.line, sx.col);
    return sx.items[0].atom;
}

// Symbols mentioned at the current alphabet level, in order of first
// appearance; block tokens under an image are decomposed into components.
void collect_symbols(const SExpr& sx, std::vector<std::string>& out,
                     std::set<std::string>& seen) {
    auto push = [&](const std::string& tok) {
        if (seen.insert(tok).second) out.push_back(tok);
    };
    auto push_word_tokens = [&](const std::string& dotted) {
        if (dotted == "eps") return;
        std::string cur;
        int depth = 0;
        for (char c : dotted) {
            if (c == '<') ++depth;
            if (c == '>') --depth;
            if (c == '.' && depth == 0) {
                push(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        push(cur);
    };
    const std::string& h = head(sx);
    if (h == "sig+") {
        for (size_t i = 1; i < sx.items.size(); ++i) push(sx.items[i].atom);
    } else if (h == "freq") {
        if (sx.items.size() >= 2 && sx.items[1].is_atom) push(sx.items[1].atom);
    } else if (h == "finite") {
        for (size_t i = 1; i < sx.items.size(); ++i) push_word_tokens(sx.items[i].atom);
    } else if (h == "union" || h == "inter") {
        for (size_t i = 1; i < sx.items.size(); ++i) collect_symbols(sx.items[i], out, seen);
    } else if (h == "image") {
        if (sx.items.size() >= 3) {
            std::vector<std::string> inner_syms;
            std::set<std::string> inner_seen;
            collect_symbols(sx.items[2], inner_syms, inner_seen);
            for (const std::string& block : inner_syms)
                for (const std::string& part : split_block_token(block)) push(part);
        }
    } else {
        throw ParseError("unknown form '" + h + "'", sx.line, sx.col);
    }
}

Rational parse_rational(const SExpr& sx) {
    if (!sx.is_atom) throw ParseError("expected a rational", sx.line, sx.col);
    const std::string& s = sx.atom;
    try {
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s), 1);
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + s + "'", sx.line, sx.col);
    }
}

Cmp parse_cmp(const SExpr& sx) {
    if (sx.is_atom) {
        if (sx.atom == "<") return Cmp::Lt;
        if (sx.atom == "<=") return Cmp::Le;
        if (sx.atom == "=") return Cmp::Eq;
        if (sx.atom == ">=") return Cmp::Ge;
        if (sx.atom == ">") return Cmp::Gt;
    }
    throw ParseError("expected one of < <= = >= >", sx.line, sx.col);
}

LangExpr build_expr(const SExpr& sx, const Alphabet& alphabet) {
    const std::string& h = head(sx);
    auto need = [&](size_t n, const char* what) {
        if (sx.items.size() != n) throw ParseError(std::string("malformed ") + what, sx.line, sx.col);
    };
    try {
        if (h == "sig+") {
            if (sx.items.size() < 2) throw ParseError("sig+ needs symbols", sx.line, sx.col);
            std::vector<std::string> symbols;
            for (size_t i = 1; i < sx.items.size(); ++i) {
                if (!sx.items[i].is_atom) throw ParseError("sig+ takes symbols", sx.line, sx.col);
                symbols.push_back(sx.items[i].atom);
            }
            return LangExpr::subalphabet_plus(alphabet, symbols);
        }
        if (h == "freq") {
            need(4, "freq: (freq SYMBOL CMP RATIONAL)");
            return LangExpr::freq_cmp(alphabet, sx.items[1].atom, parse_cmp(sx.items[2]),
                                      parse_rational(sx.items[3]));
        }
        if (h == "finite") {
            std::vector<Word> words;
            for (size_t i = 1; i < sx.items.size(); ++i)
                words.push_back(Word::from_dotted(alphabet, sx.items[i].atom));
            return LangExpr::finite(alphabet, std::move(words));
        }
        if (h == "union" || h == "inter") {
            need(3, "union/inter: two sub-expressions");
            LangExpr l = build_expr(sx.items[1], alphabet);
            LangExpr r = build_expr(sx.items[2], alphabet);
            return h == "union" ? LangExpr::union_of(l, r) : LangExpr::intersect(l, r);
        }
        if (h == "image") {
            need(3, "image: (image N EXPR)");
            int n = 0;
            try {
                n = std::stoi(sx.items[1].atom);
            } catch (const std::exception&) {
                throw ParseError("image needs an integer block length", sx.line, sx.col);
            }
            std::vector<std::string> block_syms;
            std::set<std::string> seen;
            collect_symbols(sx.items[2], block_syms, seen);
            Alphabet block_alphabet(block_syms);
            LangExpr inner = build_expr(sx.items[2], block_alphabet);
            return LangExpr::image(n, inner, alphabet);
        }
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError(e.what(), sx.line, sx.col);
    }
    throw ParseError("unknown form '" + h + "'", sx.line, sx.col);
}

}  // namespace

LangExpr parse_expr(std::string_view text, const Alphabet& alphabet) {
    Lexer lx{text};
    SExpr sx = parse_sexpr(lx);
    if (!sx.is_atom && !sx.items.empty() && sx.items[0].is_atom && sx.items[0].atom == "alphabet")
        sx = parse_sexpr(lx);  // explicit declaration overridden by the caller's alphabet
    if (!lx.done()) throw ParseError("trailing input after expression", lx.line, lx.col);
    return build_expr(sx, alphabet);
}

LangExpr parse_expr(std::string_view text) {
    Lexer lx{text};
    SExpr first = parse_sexpr(lx);
    if (!first.is_atom && !first.items.empty() && first.items[0].is_atom &&
        first.items[0].atom == "alphabet") {
        std::vector<std::string> tokens;
        for (size_t i = 1; i < first.items.size(); ++i) {
            if (!first.items[i].is_atom)
                throw ParseError("alphabet takes symbol tokens", first.line, first.col);
            tokens.push_back(first.items[i].atom);
        }
        SExpr body = parse_sexpr(lx);
        if (!lx.done()) throw ParseError("trailing input after expression", lx.line, lx.col);
        return build_expr(body, Alphabet(std::move(tokens)));
    }
    if (!lx.done()) throw ParseError("trailing input after expression", lx.line, lx.col);
    std::vector<std::string> symbols;
    std::set<std::string> seen;
    collect_symbols(first, symbols, seen);
    return build_expr(first, Alphabet(std::move(symbols)));
}

}  // namespace closures
