// Benchmark comparing the OpenMP kernels against their serial references:
// oracle membership + scan, law-suite trials, and the two closedness check
// routes (implicit pair-graph search vs the materialized counterexample NFA).

#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "closures/closure_props.hpp"
#include "closures/generators.hpp"
#include "closures/laws.hpp"
#include "closures/oracle.hpp"
#include "closures/separation.hpp"

using namespace closures;

namespace {

double time_once(const std::function<void()>& fn) {
    auto start = std::chrono::steady_clock::now();
    fn();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

double time_best(const std::function<void()>& fn, int reps = 3) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) best = std::min(best, time_once(fn));
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-32s serial %8.4fs  parallel %8.4fs  speedup %.2fx\n", name, serial, parallel,
                parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel paths run serially\n");
#endif

    // Oracle scan over a separator expression, length 14 over a binary
    // alphabet (32767 words, ~200k split lookups).
    {
        Alphabet ab({"a", "b"});
        Word u = Word::from_dotted(ab, "a.b.a.b.b.a");
        Word v = Word::from_dotted(ab, "b.a.b.a.a.b");
        LangExpr expr = separate_clopen(u, v).first;
        OracleOptions opt;
        opt.max_len = 14;
        opt.word_budget = std::uint64_t{1} << 24;
        WordIndex index(ab, opt.max_len, opt.word_budget);
        double ts = time_best([&] {
            auto memb = membership_table(index, expr, false);
            scan_table_serial(index, memb, OracleProp::Closed);
            scan_table_serial(index, memb, OracleProp::Open);
        });
        double tp = time_best([&] {
            auto memb = membership_table(index, expr, true);
            scan_table_parallel(index, memb, OracleProp::Closed);
            scan_table_parallel(index, memb, OracleProp::Open);
        });
        report("oracle clopen scan (len 14)", ts, tp);
    }

    // Law suite trials.
    {
        LawBounds bounds;
        double ts = time_best([&] { run_law_suite("T2b", 60, 11, bounds, false); }, 2);
        double tp = time_best([&] { run_law_suite("T2b", 60, 11, bounds, true); }, 2);
        report("law suite T2b (60 trials)", ts, tp);
    }

    // Closedness check: implicit pair-graph kernel vs the materialized
    // counterexample NFA reference, on a witness automaton and on a large
    // random DFA.
    {
        Dfa witness = witness_automaton(60, WitnessKind::M);
        double tk = time_best([&] { check_property(witness, Property::PositiveClosed); });
        double tr = time_best([&] {
            Nfa cex = build_counterexample_nfa(witness);
            shortest_accepted(cex);
        });
        report("closed check witness n=60", tk, tr);
        std::printf("%-32s (serial kernel vs materialized-NFA reference)\n", "");

        Alphabet ab({"0", "1"});
        Dfa big = random_dfa(1000, ab, Rational(1, 2), 2024);
        double tb = time_best([&] { check_property(big, Property::PositiveClosed); });
        std::printf("%-32s kernel %8.4fs\n", "closed check random n=1000", tb);
    }
    return 0;
}
