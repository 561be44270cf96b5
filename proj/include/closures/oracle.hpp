#ifndef CLOSURES_ORACLE_HPP
#define CLOSURES_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "closures/automata.hpp"
#include "closures/lang_expr.hpp"

namespace closures {

// Length-then-lexicographic indexing of every word of length <= max_len.
// Rank 0 is the empty word; ranks within a length follow alphabet order.
class WordIndex {
public:
    WordIndex(Alphabet alphabet, int max_len, std::uint64_t word_budget);

    const Alphabet& alphabet() const { return alphabet_; }
    int max_len() const { return max_len_; }
    std::uint64_t total() const { return offsets_[static_cast<size_t>(max_len_) + 1]; }
    std::uint64_t first_of_length(int len) const { return offsets_[static_cast<size_t>(len)]; }

    int length_of(std::uint64_t rank) const;
    std::vector<SymId> syms_at(std::uint64_t rank) const;
    Word word_at(std::uint64_t rank) const { return Word(alphabet_, syms_at(rank)); }

private:
    Alphabet alphabet_;
    int max_len_;
    std::vector<std::uint64_t> offsets_;  // offsets_[l] = count of words shorter than l
};

enum class OracleProp { Closed, Open };

struct OracleOptions {
    int max_len = 8;
    std::uint64_t word_budget = std::uint64_t{1} << 22;
    bool parallel = true;
};

// Closed violation: u, v members, uv not. Open violation: uv a member,
// neither u nor v is. Always the first violation in (|uv|, uv lex, |u|) order.
struct OracleViolation {
    Word u;
    Word v;
};

struct OracleVerdict {
    bool holds = false;  // no violation up to max_len; evidence, not proof
    std::optional<OracleViolation> violation;
    int max_len = 0;
};

using MemberFn = std::function<bool(const Word&)>;

// Membership bitmap for every word in the index. The expression and DFA
// variants evaluate in parallel when asked; a MemberFn must be pure.
std::vector<std::uint8_t> membership_table(const WordIndex& index, const LangExpr& e,
                                           bool parallel);
std::vector<std::uint8_t> membership_table(const WordIndex& index, const Dfa& d, bool parallel);
std::vector<std::uint8_t> membership_table(const WordIndex& index, const MemberFn& fn,
                                           bool parallel);

// Scan kernels over a precomputed table. The serial scan is the reference;
// the parallel scan must return the identical verdict.
OracleVerdict scan_table_serial(const WordIndex& index, const std::vector<std::uint8_t>& memb,
                                OracleProp prop);
OracleVerdict scan_table_parallel(const WordIndex& index, const std::vector<std::uint8_t>& memb,
                                  OracleProp prop);

OracleVerdict oracle_check(const LangExpr& e, OracleProp prop, const OracleOptions& opt);
OracleVerdict oracle_check(const Dfa& d, OracleProp prop, const OracleOptions& opt);
OracleVerdict oracle_check(const MemberFn& fn, const Alphabet& alphabet, OracleProp prop,
                           const OracleOptions& opt);

}  // namespace closures

#endif  // CLOSURES_ORACLE_HPP
