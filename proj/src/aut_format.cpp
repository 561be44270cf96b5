#include "closures/aut_format.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace closures {

namespace {

struct RawAut {
    std::vector<std::string> alphabet;
    std::vector<std::string> states;
    std::vector<std::string> initials;
    std::vector<std::string> finals;
    // (from, symbol-or-"eps", to), with source line for diagnostics
    std::vector<std::tuple<std::string, std::string, std::string, size_t>> transitions;
};

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

RawAut parse_raw(std::string_view text) {
    RawAut raw;
    bool saw_alphabet = false, saw_states = false, saw_initial = false, saw_finals = false;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        auto section = [&](const char* name, bool& seen) {
            if (seen) throw ParseError(std::string("duplicate ") + name + " line", lineno, 1);
            seen = true;
            return std::vector<std::string>(toks.begin() + 1, toks.end());
        };
        if (toks[0] == "alphabet:") {
            raw.alphabet = section("alphabet:", saw_alphabet);
        } else if (toks[0] == "states:") {
            raw.states = section("states:", saw_states);
        } else if (toks[0] == "initial:") {
            raw.initials = section("initial:", saw_initial);
        } else if (toks[0] == "finals:") {
            raw.finals = section("finals:", saw_finals);
        } else if (toks.size() == 3) {
            raw.transitions.emplace_back(toks[0], toks[1], toks[2], lineno);
        } else {
            throw ParseError("expected `from symbol to` transition line", lineno, 1);
        }
    }
    if (!saw_alphabet) throw ParseError("missing alphabet: line", lineno, 1);
    if (!saw_states) throw ParseError("missing states: line", lineno, 1);
    if (!saw_initial) throw ParseError("missing initial: line", lineno, 1);
    if (!saw_finals) throw ParseError("missing finals: line", lineno, 1);
    if (raw.initials.empty()) throw ParseError("initial: needs at least one state", lineno, 1);
    return raw;
}

StateId state_index(const std::unordered_map<std::string, StateId>& ids, const std::string& name,
                    size_t lineno) {
    auto it = ids.find(name);
    if (it == ids.end()) throw ParseError("unknown state '" + name + "'", lineno, 1);
    return it->second;
}

std::unordered_map<std::string, StateId> state_ids(const RawAut& raw) {
    std::unordered_map<std::string, StateId> ids;
    for (size_t i = 0; i < raw.states.size(); ++i) {
        auto [it, ins] = ids.emplace(raw.states[i], static_cast<StateId>(i));
        (void)it;
        if (!ins) throw ParseError("duplicate state name '" + raw.states[i] + "'", 1, 1);
    }
    return ids;
}

}  // namespace

bool looks_nondeterministic(std::string_view text) {
    RawAut raw = parse_raw(text);
    if (raw.initials.size() > 1) return true;
    std::set<std::pair<std::string, std::string>> seen;
    for (auto& [from, sym, to, lineno] : raw.transitions) {
        (void)to;
        (void)lineno;
        if (sym == "eps") return true;
        if (!seen.emplace(from, sym).second) return true;
    }
    return false;
}

Dfa parse_dfa(std::string_view text, std::vector<std::string>* names_out) {
    RawAut raw = parse_raw(text);
    Alphabet alphabet(raw.alphabet);
    auto ids = state_ids(raw);
    if (raw.initials.size() != 1) throw ParseError("DFA needs exactly one initial state", 1, 1);

    StateId n = static_cast<StateId>(raw.states.size());
    const int k = alphabet.size();
    std::vector<StateId> delta(static_cast<size_t>(n) * static_cast<size_t>(k), -1);
    for (auto& [from, sym, to, lineno] : raw.transitions) {
        if (sym == "eps") throw ParseError("eps move not allowed in a DFA", lineno, 1);
        auto a = alphabet.index_of(sym);
        if (!a) throw ParseError("unknown symbol '" + sym + "'", lineno, 1);
        StateId f = state_index(ids, from, lineno);
        StateId t = state_index(ids, to, lineno);
        StateId& cell = delta[static_cast<size_t>(f) * static_cast<size_t>(k) +
                              static_cast<size_t>(*a)];
        if (cell >= 0) throw ParseError("duplicate transition for (" + from + ", " + sym + ")",
                                        lineno, 1);
        cell = t;
    }

    // Complete a partial table with an implicit sink.
    bool partial = std::find(delta.begin(), delta.end(), -1) != delta.end();
    if (partial) {
        std::string sink_name = "sink";
        for (int i = 1; ids.count(sink_name); ++i) sink_name = "sink_" + std::to_string(i);
        StateId sink = n++;
        ids.emplace(sink_name, sink);
        raw.states.push_back(sink_name);
        for (StateId& cell : delta)
            if (cell < 0) cell = sink;
        for (int a = 0; a < k; ++a) delta.push_back(sink);
    }

    std::vector<std::uint8_t> finals(static_cast<size_t>(n), 0);
    for (const std::string& name : raw.finals)
        finals[static_cast<size_t>(state_index(ids, name, 1))] = 1;
    StateId initial = state_index(ids, raw.initials[0], 1);
    if (names_out) *names_out = raw.states;
    return Dfa(std::move(alphabet), n, initial, std::move(finals), std::move(delta));
}

Nfa parse_nfa(std::string_view text, std::vector<std::string>* names_out) {
    RawAut raw = parse_raw(text);
    Alphabet alphabet(raw.alphabet);
    auto ids = state_ids(raw);
    if (names_out) *names_out = raw.states;
    NfaBuilder b(alphabet, static_cast<StateId>(raw.states.size()));
    for (const std::string& name : raw.initials) b.set_initial(state_index(ids, name, 1));
    for (const std::string& name : raw.finals) b.set_final(state_index(ids, name, 1));
    for (auto& [from, sym, to, lineno] : raw.transitions) {
        StateId f = state_index(ids, from, lineno);
        StateId t = state_index(ids, to, lineno);
        if (sym == "eps") {
            b.add_eps(f, t);
        } else {
            auto a = alphabet.index_of(sym);
            if (!a) throw ParseError("unknown symbol '" + sym + "'", lineno, 1);
            b.add_move(f, *a, t);
        }
    }
    return std::move(b).build();
}

namespace {

std::vector<std::string> make_names(StateId n, const std::vector<std::string>& given) {
    if (!given.empty()) {
        if (given.size() != static_cast<size_t>(n)) throw Error("state name count mismatch");
        return given;
    }
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (StateId i = 0; i < n; ++i) names.push_back("q" + std::to_string(i));
    return names;
}

void write_header(std::ostringstream& out, const Alphabet& alphabet,
                  const std::vector<std::string>& names, const std::vector<StateId>& initials,
                  const std::vector<std::uint8_t>& finals) {
    out << "alphabet:";
    for (const std::string& t : alphabet.tokens()) out << ' ' << t;
    out << "\nstates:";
    for (const std::string& s : names) out << ' ' << s;
    out << "\ninitial:";
    for (StateId s : initials) out << ' ' << names[static_cast<size_t>(s)];
    out << "\nfinals:";
    for (size_t s = 0; s < finals.size(); ++s)
        if (finals[s]) out << ' ' << names[s];
    out << '\n';
}

}  // namespace

std::string serialize(const Dfa& d, const std::vector<std::string>& state_names) {
    auto names = make_names(d.num_states(), state_names);
    std::ostringstream out;
    write_header(out, d.alphabet(), names, {d.initial()}, d.finals());
    for (StateId s = 0; s < d.num_states(); ++s)
        for (SymId a = 0; a < d.alphabet().size(); ++a)
            out << names[static_cast<size_t>(s)] << ' ' << d.alphabet().token(a) << ' '
                << names[static_cast<size_t>(d.step(s, a))] << '\n';
    return out.str();
}

std::string serialize(const Nfa& a, const std::vector<std::string>& state_names) {
    auto names = make_names(a.num_states(), state_names);
    std::ostringstream out;
    write_header(out, a.alphabet(), names, a.initials(), a.finals());
    for (StateId s = 0; s < a.num_states(); ++s) {
        for (SymId sym = 0; sym < a.alphabet().size(); ++sym)
            for (StateId t : a.moves(s, sym))
                out << names[static_cast<size_t>(s)] << ' ' << a.alphabet().token(sym) << ' '
                    << names[static_cast<size_t>(t)] << '\n';
        for (StateId t : a.eps(s))
            out << names[static_cast<size_t>(s)] << " eps " << names[static_cast<size_t>(t)]
                << '\n';
    }
    return out.str();
}

namespace {

std::vector<std::string> word_lines(std::string_view text) {
    std::vector<std::string> out;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::vector<std::string> toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 1) throw Error("word list lines hold one dotted word each");
        out.push_back(toks[0]);
    }
    return out;
}

}  // namespace

Alphabet infer_alphabet(const std::vector<std::string>& dotted_words) {
    std::vector<std::string> tokens;
    std::set<std::string> seen;
    for (const std::string& dotted : dotted_words) {
        if (dotted == "eps") continue;
        std::string cur;
        int depth = 0;
        auto flush = [&]() {
            if (seen.insert(cur).second) tokens.push_back(cur);
            cur.clear();
        };
        for (char c : dotted) {
            if (c == '<') ++depth;
            if (c == '>') --depth;
            if (c == '.' && depth == 0) {
                flush();
            } else {
                cur.push_back(c);
            }
        }
        flush();
    }
    return Alphabet(tokens);
}

std::vector<Word> parse_word_list(std::string_view text, const Alphabet& alphabet) {
    std::vector<Word> words;
    for (const std::string& dotted : word_lines(text))
        words.push_back(Word::from_dotted(alphabet, dotted));
    return words;
}

std::vector<Word> parse_word_list(std::string_view text) {
    auto lines = word_lines(text);
    Alphabet alphabet = infer_alphabet(lines);
    std::vector<Word> words;
    for (const std::string& dotted : lines) words.push_back(Word::from_dotted(alphabet, dotted));
    return words;
}

std::string serialize_word_list(const std::vector<Word>& words) {
    std::string out;
    for (const Word& w : words) {
        out += w.dotted();
        out += '\n';
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

}  // namespace closures
