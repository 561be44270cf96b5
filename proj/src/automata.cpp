#include "closures/automata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace closures {

namespace {

void check_state(StateId s, StateId n, const char* what) {
    if (s < 0 || s >= n) throw Error(std::string("state id out of range in ") + what);
}

void sort_unique(std::vector<StateId>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

Dfa::Dfa(Alphabet alphabet, StateId num_states, StateId initial,
         std::vector<std::uint8_t> finals, std::vector<StateId> delta)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initial_(initial),
      finals_(std::move(finals)),
      delta_(std::move(delta)) {
    if (num_states_ <= 0) throw Error("Dfa needs at least one state");
    check_state(initial_, num_states_, "Dfa initial");
    if (finals_.size() != static_cast<size_t>(num_states_))
        throw Error("Dfa finals size mismatch");
    size_t expect = static_cast<size_t>(num_states_) * static_cast<size_t>(alphabet_.size());
    if (delta_.size() != expect) throw Error("Dfa delta is not total");
    for (StateId t : delta_) check_state(t, num_states_, "Dfa delta target");
}

StateId Dfa::walk(StateId s, const Word& w) const {
    for (SymId a : w.syms()) s = step(s, a);
    return s;
}

Nfa::Nfa(Alphabet alphabet, StateId num_states, std::vector<StateId> initials,
         std::vector<std::uint8_t> finals, std::vector<std::vector<StateId>> moves,
         std::vector<std::vector<StateId>> eps)
    : alphabet_(std::move(alphabet)),
      num_states_(num_states),
      initials_(std::move(initials)),
      finals_(std::move(finals)),
      moves_(std::move(moves)),
      eps_(std::move(eps)) {
    if (num_states_ < 0) throw Error("negative state count");
    for (StateId s : initials_) check_state(s, num_states_, "Nfa initial");
    if (finals_.size() != static_cast<size_t>(num_states_))
        throw Error("Nfa finals size mismatch");
    size_t expect = static_cast<size_t>(num_states_) * static_cast<size_t>(alphabet_.size());
    if (moves_.size() != expect) throw Error("Nfa moves size mismatch");
    if (eps_.size() != static_cast<size_t>(num_states_)) throw Error("Nfa eps size mismatch");
    for (auto& targets : moves_)
        for (StateId t : targets) check_state(t, num_states_, "Nfa move target");
    for (auto& targets : eps_)
        for (StateId t : targets) check_state(t, num_states_, "Nfa eps target");
    sort_unique(initials_);
}

std::vector<StateId> Nfa::closure_of(const std::vector<StateId>& states) const {
    std::vector<std::uint8_t> seen(static_cast<size_t>(num_states_), 0);
    std::vector<StateId> stack(states.begin(), states.end());
    std::vector<StateId> out;
    for (StateId s : stack) seen[static_cast<size_t>(s)] = 1;
    while (!stack.empty()) {
        StateId s = stack.back();
        stack.pop_back();
        out.push_back(s);
        for (StateId t : eps(s)) {
            if (!seen[static_cast<size_t>(t)]) {
                seen[static_cast<size_t>(t)] = 1;
                stack.push_back(t);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

NfaBuilder::NfaBuilder(Alphabet alphabet, StateId num_states)
    : alphabet_(std::move(alphabet)), num_states_(num_states) {
    finals_.resize(static_cast<size_t>(num_states_), 0);
    moves_.resize(static_cast<size_t>(num_states_) * static_cast<size_t>(alphabet_.size()));
    eps_.resize(static_cast<size_t>(num_states_));
}

StateId NfaBuilder::add_state() {
    StateId s = num_states_++;
    finals_.push_back(0);
    for (int a = 0; a < alphabet_.size(); ++a) moves_.emplace_back();
    eps_.emplace_back();
    return s;
}

void NfaBuilder::set_initial(StateId s) {
    check_state(s, num_states_, "NfaBuilder::set_initial");
    initials_.push_back(s);
}

void NfaBuilder::set_final(StateId s) {
    check_state(s, num_states_, "NfaBuilder::set_final");
    finals_[static_cast<size_t>(s)] = 1;
}

void NfaBuilder::add_move(StateId from, SymId sym, StateId to) {
    check_state(from, num_states_, "NfaBuilder::add_move");
    check_state(to, num_states_, "NfaBuilder::add_move");
    if (sym < 0 || sym >= alphabet_.size()) throw SymbolError("symbol id out of range");
    moves_[static_cast<size_t>(from) * static_cast<size_t>(alphabet_.size()) +
           static_cast<size_t>(sym)]
        .push_back(to);
}

void NfaBuilder::add_eps(StateId from, StateId to) {
    check_state(from, num_states_, "NfaBuilder::add_eps");
    check_state(to, num_states_, "NfaBuilder::add_eps");
    eps_[static_cast<size_t>(from)].push_back(to);
}

Nfa NfaBuilder::build() && {
    for (auto& v : moves_) sort_unique(v);
    for (auto& v : eps_) sort_unique(v);
    return Nfa(std::move(alphabet_), num_states_, std::move(initials_), std::move(finals_),
               std::move(moves_), std::move(eps_));
}

bool run(const Dfa& d, const Word& w) {
    require_same_alphabet(d.alphabet(), w.alphabet(), "run");
    return d.is_final(d.walk(d.initial(), w));
}

bool run(const Nfa& a, const Word& w) {
    require_same_alphabet(a.alphabet(), w.alphabet(), "run");
    std::vector<StateId> cur = a.closure_of(a.initials());
    for (SymId sym : w.syms()) {
        std::vector<StateId> next;
        for (StateId s : cur)
            for (StateId t : a.moves(s, sym)) next.push_back(t);
        sort_unique(next);
        cur = a.closure_of(next);
        if (cur.empty()) return false;
    }
    for (StateId s : cur)
        if (a.is_final(s)) return true;
    return false;
}

Dfa boolean_combine(const Dfa& d1, const Dfa& d2, BoolOp op) {
    require_same_alphabet(d1.alphabet(), d2.alphabet(), "boolean_combine");
    const int k = d1.alphabet().size();
    const StateId n2 = d2.num_states();

    auto combine = [op](bool f1, bool f2) {
        switch (op) {
            case BoolOp::And: return f1 && f2;
            case BoolOp::Or: return f1 || f2;
            case BoolOp::Diff: return f1 && !f2;
            case BoolOp::Xor: return f1 != f2;
        }
        return false;
    };

    std::unordered_map<std::uint64_t, StateId> ids;
    std::vector<std::pair<StateId, StateId>> pairs;
    auto intern = [&](StateId s1, StateId s2) {
        std::uint64_t key = static_cast<std::uint64_t>(s1) * static_cast<std::uint64_t>(n2) +
                            static_cast<std::uint64_t>(s2);
        auto it = ids.find(key);
        if (it != ids.end()) return it->second;
        StateId id = static_cast<StateId>(pairs.size());
        ids.emplace(key, id);
        pairs.emplace_back(s1, s2);
        return id;
    };

    intern(d1.initial(), d2.initial());
    std::vector<StateId> delta;
    std::vector<std::uint8_t> finals;
    for (StateId id = 0; id < static_cast<StateId>(pairs.size()); ++id) {
        auto [s1, s2] = pairs[static_cast<size_t>(id)];
        finals.push_back(combine(d1.is_final(s1), d2.is_final(s2)) ? 1 : 0);
        for (SymId a = 0; a < k; ++a)
            delta.push_back(intern(d1.step(s1, a), d2.step(s2, a)));
    }
    return Dfa(d1.alphabet(), static_cast<StateId>(pairs.size()), 0, std::move(finals),
               std::move(delta));
}

Dfa complement(const Dfa& d) {
    std::vector<std::uint8_t> finals(static_cast<size_t>(d.num_states()));
    for (StateId s = 0; s < d.num_states(); ++s)
        finals[static_cast<size_t>(s)] = d.is_final(s) ? 0 : 1;
    std::vector<StateId> delta;
    delta.reserve(static_cast<size_t>(d.num_states()) * static_cast<size_t>(d.alphabet().size()));
    for (StateId s = 0; s < d.num_states(); ++s)
        for (SymId a = 0; a < d.alphabet().size(); ++a) delta.push_back(d.step(s, a));
    return Dfa(d.alphabet(), d.num_states(), d.initial(), std::move(finals), std::move(delta));
}

Nfa nfa_from(const Dfa& d) {
    NfaBuilder b(d.alphabet(), d.num_states());
    b.set_initial(d.initial());
    for (StateId s = 0; s < d.num_states(); ++s) {
        if (d.is_final(s)) b.set_final(s);
        for (SymId a = 0; a < d.alphabet().size(); ++a) b.add_move(s, a, d.step(s, a));
    }
    return std::move(b).build();
}

Nfa nfa_from_words(const Alphabet& alphabet, const std::vector<Word>& words) {
    NfaBuilder b(alphabet);
    StateId root = b.add_state();
    b.set_initial(root);
    for (const Word& w : words) {
        require_same_alphabet(alphabet, w.alphabet(), "nfa_from_words");
        if (w.empty()) {
            b.set_final(root);
            continue;
        }
        StateId cur = root;
        for (int i = 0; i < w.size(); ++i) {
            StateId next = b.add_state();
            b.add_move(cur, w[i], next);
            cur = next;
        }
        b.set_final(cur);
    }
    return std::move(b).build();
}

Nfa concatenate(const Nfa& a1, const Nfa& a2) {
    require_same_alphabet(a1.alphabet(), a2.alphabet(), "concatenate");
    const int k = a1.alphabet().size();
    NfaBuilder b(a1.alphabet(), a1.num_states() + a2.num_states());
    const StateId off = a1.num_states();
    for (StateId s = 0; s < a1.num_states(); ++s) {
        for (SymId a = 0; a < k; ++a)
            for (StateId t : a1.moves(s, a)) b.add_move(s, a, t);
        for (StateId t : a1.eps(s)) b.add_eps(s, t);
    }
    for (StateId s = 0; s < a2.num_states(); ++s) {
        for (SymId a = 0; a < k; ++a)
            for (StateId t : a2.moves(s, a)) b.add_move(off + s, a, off + t);
        for (StateId t : a2.eps(s)) b.add_eps(off + s, off + t);
        if (a2.is_final(s)) b.set_final(off + s);
    }
    for (StateId s : a1.initials()) b.set_initial(s);
    for (StateId s = 0; s < a1.num_states(); ++s)
        if (a1.is_final(s))
            for (StateId t : a2.initials()) b.add_eps(s, off + t);
    return std::move(b).build();
}

Nfa closure(const Nfa& a, ClosureKind kind) {
    const int k = a.alphabet().size();
    NfaBuilder b(a.alphabet(), a.num_states());
    for (StateId s = 0; s < a.num_states(); ++s) {
        for (SymId sym = 0; sym < k; ++sym)
            for (StateId t : a.moves(s, sym)) b.add_move(s, sym, t);
        for (StateId t : a.eps(s)) b.add_eps(s, t);
        if (a.is_final(s)) b.set_final(s);
    }
    for (StateId s : a.initials()) b.set_initial(s);
    for (StateId s = 0; s < a.num_states(); ++s)
        if (a.is_final(s))
            for (StateId t : a.initials()) b.add_eps(s, t);
    if (kind == ClosureKind::Kleene) {
        StateId fresh = b.add_state();
        b.set_initial(fresh);
        b.set_final(fresh);
    }
    return std::move(b).build();
}

Dfa determinize(const Nfa& a, std::uint64_t budget) {
    if (budget < 1) throw Error("determinize budget must be >= 1");
    const int k = a.alphabet().size();

    // Per-state epsilon closures, computed once.
    std::vector<std::vector<StateId>> ecl(static_cast<size_t>(a.num_states()));
    for (StateId s = 0; s < a.num_states(); ++s) ecl[static_cast<size_t>(s)] = a.closure_of({s});

    std::map<std::vector<StateId>, StateId> ids;
    std::vector<const std::vector<StateId>*> subsets;
    std::vector<std::uint8_t> finals;
    auto intern = [&](std::vector<StateId> subset) {
        auto [it, inserted] = ids.emplace(std::move(subset), static_cast<StateId>(ids.size()));
        if (inserted) {
            if (ids.size() > budget) throw BudgetExceededError("determinize: subset budget exceeded");
            subsets.push_back(&it->first);
            bool fin = false;
            for (StateId s : it->first) fin = fin || a.is_final(s);
            finals.push_back(fin ? 1 : 0);
        }
        return it->second;
    };

    intern(a.closure_of(a.initials()));
    std::vector<StateId> delta;
    std::vector<std::uint8_t> mark(static_cast<size_t>(a.num_states()));
    for (StateId id = 0; id < static_cast<StateId>(subsets.size()); ++id) {
        // subsets may grow while we iterate; index stays valid
        for (SymId sym = 0; sym < k; ++sym) {
            const std::vector<StateId>& cur = *subsets[static_cast<size_t>(id)];
            std::fill(mark.begin(), mark.end(), 0);
            std::vector<StateId> next;
            for (StateId s : cur)
                for (StateId t : a.moves(s, sym))
                    for (StateId u : ecl[static_cast<size_t>(t)])
                        if (!mark[static_cast<size_t>(u)]) {
                            mark[static_cast<size_t>(u)] = 1;
                            next.push_back(u);
                        }
            std::sort(next.begin(), next.end());
            delta.push_back(intern(std::move(next)));
        }
    }
    // Rows are appended per state in one pass, so delta is already row-major
    // for the states present when their row was emitted; states interned later
    // got rows of their own in subsequent iterations of the outer loop.
    return Dfa(a.alphabet(), static_cast<StateId>(subsets.size()), 0, std::move(finals),
               std::move(delta));
}

std::optional<Word> shortest_accepted(const Dfa& d) {
    const int k = d.alphabet().size();
    if (d.is_final(d.initial())) return Word(d.alphabet());
    std::vector<StateId> parent(static_cast<size_t>(d.num_states()), -1);
    std::vector<SymId> via(static_cast<size_t>(d.num_states()), -1);
    std::vector<std::uint8_t> seen(static_cast<size_t>(d.num_states()), 0);
    std::queue<StateId> q;
    seen[static_cast<size_t>(d.initial())] = 1;
    q.push(d.initial());
    while (!q.empty()) {
        StateId s = q.front();
        q.pop();
        for (SymId a = 0; a < k; ++a) {
            StateId t = d.step(s, a);
            if (seen[static_cast<size_t>(t)]) continue;
            seen[static_cast<size_t>(t)] = 1;
            parent[static_cast<size_t>(t)] = s;
            via[static_cast<size_t>(t)] = a;
            if (d.is_final(t)) {
                std::vector<SymId> syms;
                for (StateId c = t; c != d.initial(); c = parent[static_cast<size_t>(c)])
                    syms.push_back(via[static_cast<size_t>(c)]);
                std::reverse(syms.begin(), syms.end());
                return Word(d.alphabet(), std::move(syms));
            }
            q.push(t);
        }
    }
    return std::nullopt;
}

namespace {

// 0-1 BFS distances over an NFA graph: symbol moves cost 1, eps moves cost 0.
// `forward` selects edge direction; sources seed at distance 0.
std::vector<std::int64_t> nfa_distances(const Nfa& a, const std::vector<StateId>& sources,
                                        bool forward) {
    const int k = a.alphabet().size();
    const StateId n = a.num_states();
    std::vector<std::vector<StateId>> rev_eps;
    std::vector<std::vector<std::vector<StateId>>> rev_moves;
    if (!forward) {
        rev_eps.resize(static_cast<size_t>(n));
        rev_moves.assign(static_cast<size_t>(n),
                         std::vector<std::vector<StateId>>(static_cast<size_t>(k)));
        for (StateId s = 0; s < n; ++s) {
            for (SymId sym = 0; sym < k; ++sym)
                for (StateId t : a.moves(s, sym))
                    rev_moves[static_cast<size_t>(t)][static_cast<size_t>(sym)].push_back(s);
            for (StateId t : a.eps(s)) rev_eps[static_cast<size_t>(t)].push_back(s);
        }
    }

    constexpr std::int64_t kInf = -1;
    std::vector<std::int64_t> dist(static_cast<size_t>(n), kInf);
    std::deque<StateId> dq;
    for (StateId s : sources) {
        if (dist[static_cast<size_t>(s)] == kInf) {
            dist[static_cast<size_t>(s)] = 0;
            dq.push_back(s);
        }
    }
    std::vector<std::uint8_t> done(static_cast<size_t>(n), 0);
    while (!dq.empty()) {
        StateId s = dq.front();
        dq.pop_front();
        if (done[static_cast<size_t>(s)]) continue;
        done[static_cast<size_t>(s)] = 1;
        std::int64_t base = dist[static_cast<size_t>(s)];
        auto relax = [&](StateId t, std::int64_t cost) {
            std::int64_t nd = base + cost;
            std::int64_t& cur = dist[static_cast<size_t>(t)];
            if (cur == kInf || nd < cur) {
                cur = nd;
                if (cost == 0)
                    dq.push_front(t);
                else
                    dq.push_back(t);
            }
        };
        if (forward) {
            for (StateId t : a.eps(s)) relax(t, 0);
            for (SymId sym = 0; sym < k; ++sym)
                for (StateId t : a.moves(s, sym)) relax(t, 1);
        } else {
            for (StateId t : rev_eps[static_cast<size_t>(s)]) relax(t, 0);
            for (SymId sym = 0; sym < k; ++sym)
                for (StateId t : rev_moves[static_cast<size_t>(s)][static_cast<size_t>(sym)])
                    relax(t, 1);
        }
    }
    return dist;
}

}  // namespace

std::optional<Word> shortest_accepted(const Nfa& a) {
    if (a.num_states() == 0 || a.initials().empty()) return std::nullopt;
    const int k = a.alphabet().size();
    std::vector<StateId> fins;
    for (StateId s = 0; s < a.num_states(); ++s)
        if (a.is_final(s)) fins.push_back(s);
    if (fins.empty()) return std::nullopt;

    std::vector<std::int64_t> dist = nfa_distances(a, a.initials(), true);
    std::vector<std::int64_t> bdist = nfa_distances(a, fins, false);

    std::int64_t best = -1;
    for (StateId f : fins) {
        std::int64_t df = dist[static_cast<size_t>(f)];
        if (df >= 0 && (best < 0 || df < best)) best = df;
    }
    if (best < 0) return std::nullopt;

    // Greedy reconstruction of the lexicographically least word of length
    // `best`: keep the set of states that can still finish in exactly the
    // remaining number of symbols, try symbols in alphabet order.
    auto filter = [&](std::vector<StateId>& set, std::int64_t remaining) {
        std::erase_if(set, [&](StateId s) { return bdist[static_cast<size_t>(s)] != remaining; });
    };
    std::vector<StateId> cur = a.closure_of(a.initials());
    filter(cur, best);
    std::vector<SymId> syms;
    for (std::int64_t step = 1; step <= best; ++step) {
        bool advanced = false;
        for (SymId sym = 0; sym < k && !advanced; ++sym) {
            std::vector<StateId> next;
            for (StateId s : cur)
                for (StateId t : a.moves(s, sym)) next.push_back(t);
            sort_unique(next);
            next = a.closure_of(next);
            filter(next, best - step);
            if (!next.empty()) {
                syms.push_back(sym);
                cur = std::move(next);
                advanced = true;
            }
        }
        if (!advanced) throw Error("shortest_accepted: reconstruction lost the path");
    }
    return Word(a.alphabet(), std::move(syms));
}

bool is_empty(const Dfa& d) {
    return !shortest_accepted(d).has_value();
}

bool equivalent(const Dfa& d1, const Dfa& d2) {
    require_same_alphabet(d1.alphabet(), d2.alphabet(), "equivalent");
    const int k = d1.alphabet().size();
    const std::uint64_t n2 = static_cast<std::uint64_t>(d2.num_states());
    std::unordered_set<std::uint64_t> seen;
    std::queue<std::pair<StateId, StateId>> q;
    auto visit = [&](StateId s1, StateId s2) {
        std::uint64_t key = static_cast<std::uint64_t>(s1) * n2 + static_cast<std::uint64_t>(s2);
        if (!seen.insert(key).second) return;
        q.emplace(s1, s2);
    };
    visit(d1.initial(), d2.initial());
    while (!q.empty()) {
        auto [s1, s2] = q.front();
        q.pop();
        if (d1.is_final(s1) != d2.is_final(s2)) return false;
        for (SymId a = 0; a < k; ++a) visit(d1.step(s1, a), d2.step(s2, a));
    }
    return true;
}

bool subset_of(const Dfa& d1, const Dfa& d2) {
    return is_empty(boolean_combine(d1, d2, BoolOp::Diff));
}

Dfa minimize(const Dfa& d) {
    const int k = d.alphabet().size();

    // Reachable restriction, BFS order from the initial state.
    std::vector<StateId> order;
    std::vector<StateId> remap(static_cast<size_t>(d.num_states()), -1);
    {
        std::queue<StateId> q;
        remap[static_cast<size_t>(d.initial())] = 0;
        order.push_back(d.initial());
        q.push(d.initial());
        while (!q.empty()) {
            StateId s = q.front();
            q.pop();
            for (SymId a = 0; a < k; ++a) {
                StateId t = d.step(s, a);
                if (remap[static_cast<size_t>(t)] < 0) {
                    remap[static_cast<size_t>(t)] = static_cast<StateId>(order.size());
                    order.push_back(t);
                    q.push(t);
                }
            }
        }
    }
    const StateId n = static_cast<StateId>(order.size());

    // Moore refinement on the reachable part.
    std::vector<StateId> cls(static_cast<size_t>(n));
    for (StateId i = 0; i < n; ++i)
        cls[static_cast<size_t>(i)] = d.is_final(order[static_cast<size_t>(i)]) ? 1 : 0;
    StateId num_classes = 2;
    for (;;) {
        std::map<std::vector<StateId>, StateId> sig_ids;
        std::vector<StateId> next_cls(static_cast<size_t>(n));
        for (StateId i = 0; i < n; ++i) {
            std::vector<StateId> sig;
            sig.reserve(static_cast<size_t>(k) + 1);
            sig.push_back(cls[static_cast<size_t>(i)]);
            for (SymId a = 0; a < k; ++a) {
                StateId t = d.step(order[static_cast<size_t>(i)], a);
                sig.push_back(cls[static_cast<size_t>(remap[static_cast<size_t>(t)])]);
            }
            auto [it, ins] = sig_ids.emplace(std::move(sig), static_cast<StateId>(sig_ids.size()));
            (void)ins;
            next_cls[static_cast<size_t>(i)] = it->second;
        }
        StateId next_count = static_cast<StateId>(sig_ids.size());
        cls = std::move(next_cls);
        if (next_count == num_classes) break;
        num_classes = next_count;
    }

    // Canonical numbering: BFS over classes from the initial class.
    std::vector<StateId> canon(static_cast<size_t>(num_classes), -1);
    std::vector<StateId> class_rep;  // index in `order`
    {
        std::queue<StateId> q;
        StateId c0 = cls[0];
        canon[static_cast<size_t>(c0)] = 0;
        class_rep.push_back(0);
        q.push(0);
        while (!q.empty()) {
            StateId i = q.front();
            q.pop();
            for (SymId a = 0; a < k; ++a) {
                StateId t = d.step(order[static_cast<size_t>(i)], a);
                StateId tc = cls[static_cast<size_t>(remap[static_cast<size_t>(t)])];
                if (canon[static_cast<size_t>(tc)] < 0) {
                    canon[static_cast<size_t>(tc)] = static_cast<StateId>(class_rep.size());
                    class_rep.push_back(remap[static_cast<size_t>(t)]);
                    q.push(remap[static_cast<size_t>(t)]);
                }
            }
        }
    }
    const StateId m = static_cast<StateId>(class_rep.size());
    std::vector<std::uint8_t> finals(static_cast<size_t>(m));
    std::vector<StateId> delta(static_cast<size_t>(m) * static_cast<size_t>(k));
    for (StateId c = 0; c < m; ++c) {
        StateId rep = class_rep[static_cast<size_t>(c)];
        finals[static_cast<size_t>(c)] = d.is_final(order[static_cast<size_t>(rep)]) ? 1 : 0;
        for (SymId a = 0; a < k; ++a) {
            StateId t = d.step(order[static_cast<size_t>(rep)], a);
            StateId tc = cls[static_cast<size_t>(remap[static_cast<size_t>(t)])];
            delta[static_cast<size_t>(c) * static_cast<size_t>(k) + static_cast<size_t>(a)] =
                canon[static_cast<size_t>(tc)];
        }
    }
    return Dfa(d.alphabet(), m, 0, std::move(finals), std::move(delta));
}

Dfa canonical_dfa(const Nfa& a, std::uint64_t budget) {
    return minimize(determinize(a, budget));
}

Dfa dfa_all(const Alphabet& alphabet) {
    return Dfa(alphabet, 1, 0, {1}, std::vector<StateId>(static_cast<size_t>(alphabet.size()), 0));
}

Dfa dfa_none(const Alphabet& alphabet) {
    return Dfa(alphabet, 1, 0, {0}, std::vector<StateId>(static_cast<size_t>(alphabet.size()), 0));
}

Dfa dfa_sigma_plus(const Alphabet& alphabet) {
    const int k = alphabet.size();
    std::vector<StateId> delta;
    for (StateId s = 0; s < 2; ++s)
        for (int a = 0; a < k; ++a) delta.push_back(1);
    return Dfa(alphabet, 2, 0, {0, 1}, std::move(delta));
}

}  // namespace closures
