#ifndef CLOSURES_CLOSURE_PROPS_HPP
#define CLOSURES_CLOSURE_PROPS_HPP

#include <optional>
#include <string>

#include "closures/automata.hpp"

namespace closures {

enum class Property {
    PositiveClosed,
    KleeneClosed,
    PositiveOpen,
    KleeneOpen,
    ClopenPositive,
    ClopenKleene,
};

std::optional<Property> parse_property(std::string_view name);
std::string property_name(Property p);

// A pair u, v in L with uv not in L; checkable by three run() calls against
// the automaton the check analyzed (for open properties, its complement).
struct Counterexample {
    Word u;
    Word v;
    Word uv() const { return u.concat(v); }
};

struct Verdict {
    bool holds = false;
    std::optional<Counterexample> certificate;
    // Kleene check failed only because of the empty word; no (u, v) pair can
    // witness that, so no certificate is attached.
    bool epsilon_missing = false;
    // For clopen properties: which half produced the certificate.
    enum class Part { None, Closed, Open };
    Part failed_part = Part::None;
};

// The counterexample automaton: n + n^2 states realizing Q and Q x Q.
// Accepts exactly { uv : u, v in L(d), uv not in L(d) }. Ids below n are the
// plain simulation states; id n + p*n + q is the pair [p, q], entered only
// through the epsilon split, so the u/v boundary is visible in any run.
Nfa build_counterexample_nfa(const Dfa& d);

Verdict check_property(const Dfa& d, Property p);

// Minimal |uv|, ties broken lexicographically on uv and then by minimal |u|.
// Absent iff L(d) is positive-closed. |uv| <= n^2 + n - 1 always.
std::optional<Counterexample> shortest_counterexample(const Dfa& d);

// Positive-closedness for an NFA without determinizing: breadth-first
// exploration of the reachable state sets during u and of (from-initial,
// from-u) set pairs during v. Budget counts distinct configurations.
Verdict check_nfa_closed(const Nfa& a, std::uint64_t budget = kDefaultDeterminizeBudget);

// Interior (opening): complement of the closure of the complement. The
// result is open and contained in L(d).
Dfa interior(const Dfa& d, ClosureKind kind,
             std::uint64_t budget = kDefaultDeterminizeBudget);

}  // namespace closures

#endif  // CLOSURES_CLOSURE_PROPS_HPP
