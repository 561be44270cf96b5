#include "closures/oracle.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace closures {

WordIndex::WordIndex(Alphabet alphabet, int max_len, std::uint64_t word_budget)
    : alphabet_(std::move(alphabet)), max_len_(max_len) {
    if (max_len_ < 0) throw Error("WordIndex: negative max_len");
    const std::uint64_t k = static_cast<std::uint64_t>(alphabet_.size());
    offsets_.assign(static_cast<size_t>(max_len_) + 2, 0);
    std::uint64_t count = 1;  // words of the current length
    std::uint64_t cum = 0;
    for (int l = 0; l <= max_len_; ++l) {
        offsets_[static_cast<size_t>(l)] = cum;
        if (cum > word_budget || count > word_budget - cum)
            throw BudgetExceededError("word enumeration budget exceeded");
        cum += count;
        if (k == 0) {
            count = 0;
        } else if (count > word_budget / k + 1) {
            count = word_budget + 1;  // saturate; the next loop trips the guard
        } else {
            count *= k;
        }
    }
    offsets_[static_cast<size_t>(max_len_) + 1] = cum;
}

int WordIndex::length_of(std::uint64_t rank) const {
    int l = static_cast<int>(std::upper_bound(offsets_.begin(), offsets_.end(), rank) -
                             offsets_.begin()) -
            1;
    return l;
}

std::vector<SymId> WordIndex::syms_at(std::uint64_t rank) const {
    int l = length_of(rank);
    std::uint64_t idx = rank - offsets_[static_cast<size_t>(l)];
    const std::uint64_t k = static_cast<std::uint64_t>(alphabet_.size());
    std::vector<SymId> syms(static_cast<size_t>(l));
    for (int i = l - 1; i >= 0; --i) {
        syms[static_cast<size_t>(i)] = static_cast<SymId>(idx % k);
        idx /= k;
    }
    return syms;
}

std::vector<std::uint8_t> membership_table(const WordIndex& index, const LangExpr& e,
                                           bool parallel) {
    require_same_alphabet(index.alphabet(), e.alphabet(), "membership_table");
    const std::int64_t total = static_cast<std::int64_t>(index.total());
    std::vector<std::uint8_t> memb(static_cast<size_t>(total));
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t r = 0; r < total; ++r)
        memb[static_cast<size_t>(r)] =
            e.member_syms(index.syms_at(static_cast<std::uint64_t>(r))) ? 1 : 0;
    return memb;
}

std::vector<std::uint8_t> membership_table(const WordIndex& index, const Dfa& d, bool parallel) {
    require_same_alphabet(index.alphabet(), d.alphabet(), "membership_table");
    const std::int64_t total = static_cast<std::int64_t>(index.total());
    std::vector<std::uint8_t> memb(static_cast<size_t>(total));
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t r = 0; r < total; ++r) {
        StateId s = d.initial();
        for (SymId a : index.syms_at(static_cast<std::uint64_t>(r))) s = d.step(s, a);
        memb[static_cast<size_t>(r)] = d.is_final(s) ? 1 : 0;
    }
    return memb;
}

std::vector<std::uint8_t> membership_table(const WordIndex& index, const MemberFn& fn,
                                           bool parallel) {
    const std::int64_t total = static_cast<std::int64_t>(index.total());
    std::vector<std::uint8_t> memb(static_cast<size_t>(total));
#pragma omp parallel for schedule(static) if (parallel)
    for (std::int64_t r = 0; r < total; ++r)
        memb[static_cast<size_t>(r)] = fn(index.word_at(static_cast<std::uint64_t>(r))) ? 1 : 0;
    return memb;
}

namespace {

// Scans one word for a violating split; reports the smallest split index.
// Prefix and suffix ranks are formed positionally in base k.
int violating_split(const WordIndex& index, const std::vector<std::uint8_t>& memb,
                    const std::vector<SymId>& w, OracleProp prop) {
    const int l = static_cast<int>(w.size());
    const std::uint64_t k = static_cast<std::uint64_t>(index.alphabet().size());
    std::vector<std::uint64_t> suffix_val(static_cast<size_t>(l) + 1, 0);
    std::uint64_t pow = 1;
    for (int i = l - 1; i >= 0; --i) {
        suffix_val[static_cast<size_t>(i)] =
            suffix_val[static_cast<size_t>(i) + 1] + static_cast<std::uint64_t>(w[static_cast<size_t>(i)]) * pow;
        pow *= k;
    }
    std::uint64_t prefix_val = 0;
    for (int i = 1; i < l; ++i) {
        prefix_val = prefix_val * k + static_cast<std::uint64_t>(w[static_cast<size_t>(i) - 1]);
        bool u_in = memb[static_cast<size_t>(index.first_of_length(i) + prefix_val)] != 0;
        bool v_in =
            memb[static_cast<size_t>(index.first_of_length(l - i) + suffix_val[static_cast<size_t>(i)])] != 0;
        if (prop == OracleProp::Closed ? (u_in && v_in) : (!u_in && !v_in)) return i;
    }
    return -1;
}

OracleViolation make_violation(const WordIndex& index, std::uint64_t rank, int split) {
    std::vector<SymId> w = index.syms_at(rank);
    Word word(index.alphabet(), w);
    return {word.subword(0, split), word.subword(split, static_cast<int>(w.size()))};
}

}  // namespace

OracleVerdict scan_table_serial(const WordIndex& index, const std::vector<std::uint8_t>& memb,
                                OracleProp prop) {
    OracleVerdict verdict;
    verdict.max_len = index.max_len();
    const std::uint64_t lo = index.max_len() >= 2 ? index.first_of_length(2) : index.total();
    for (std::uint64_t r = lo; r < index.total(); ++r) {
        bool w_in = memb[static_cast<size_t>(r)] != 0;
        // Closed: a non-member that splits into two members.
        // Open: a member with a split into two non-members.
        if (prop == OracleProp::Closed ? w_in : !w_in) continue;
        std::vector<SymId> w = index.syms_at(r);
        int split = violating_split(index, memb, w, prop);
        if (split >= 0) {
            verdict.holds = false;
            verdict.violation = make_violation(index, r, split);
            return verdict;
        }
    }
    verdict.holds = true;
    return verdict;
}

OracleVerdict scan_table_parallel(const WordIndex& index, const std::vector<std::uint8_t>& memb,
                                  OracleProp prop) {
    OracleVerdict verdict;
    verdict.max_len = index.max_len();
    const std::int64_t lo =
        static_cast<std::int64_t>(index.max_len() >= 2 ? index.first_of_length(2) : index.total());
    const std::int64_t hi = static_cast<std::int64_t>(index.total());

    std::uint64_t best_rank = UINT64_MAX;
    int best_split = -1;
#pragma omp parallel
    {
        std::uint64_t my_rank = UINT64_MAX;
        int my_split = -1;
#pragma omp for schedule(static) nowait
        for (std::int64_t r = lo; r < hi; ++r) {
            if (my_rank != UINT64_MAX) continue;  // ranks ascend within a chunk
            bool w_in = memb[static_cast<size_t>(r)] != 0;
            if (prop == OracleProp::Closed ? w_in : !w_in) continue;
            std::vector<SymId> w = index.syms_at(static_cast<std::uint64_t>(r));
            int split = violating_split(index, memb, w, prop);
            if (split >= 0) {
                my_rank = static_cast<std::uint64_t>(r);
                my_split = split;
            }
        }
#pragma omp critical
        {
            if (my_rank < best_rank) {
                best_rank = my_rank;
                best_split = my_split;
            }
        }
    }
    if (best_rank == UINT64_MAX) {
        verdict.holds = true;
    } else {
        verdict.holds = false;
        verdict.violation = make_violation(index, best_rank, best_split);
    }
    return verdict;
}

namespace {

template <typename Source>
OracleVerdict oracle_check_impl(const Source& src, const Alphabet& alphabet, OracleProp prop,
                                const OracleOptions& opt) {
    if (opt.max_len < 1) throw Error("oracle max_len must be >= 1");
    WordIndex index(alphabet, opt.max_len, opt.word_budget);
    std::vector<std::uint8_t> memb = membership_table(index, src, opt.parallel);
    return opt.parallel ? scan_table_parallel(index, memb, prop)
                        : scan_table_serial(index, memb, prop);
}

}  // namespace

OracleVerdict oracle_check(const LangExpr& e, OracleProp prop, const OracleOptions& opt) {
    return oracle_check_impl(e, e.alphabet(), prop, opt);
}

OracleVerdict oracle_check(const Dfa& d, OracleProp prop, const OracleOptions& opt) {
    return oracle_check_impl(d, d.alphabet(), prop, opt);
}

OracleVerdict oracle_check(const MemberFn& fn, const Alphabet& alphabet, OracleProp prop,
                           const OracleOptions& opt) {
    return oracle_check_impl(fn, alphabet, prop, opt);
}

}  // namespace closures
