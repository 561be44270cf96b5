#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "closures/aut_format.hpp"
#include "closures/closure_props.hpp"
#include "closures/generators.hpp"
#include "closures/laws.hpp"
#include "closures/oracle.hpp"
#include "closures/separation.hpp"
#include "closures/words.hpp"

using namespace closures;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitError = 2;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Alphabet alphabet_for_words(const std::vector<std::string>& dotted, const std::string& flag) {
    if (!flag.empty()) return Alphabet(split_list(flag));
    return infer_alphabet(dotted);
}

void print_words(const std::vector<Word>& ws) {
    for (size_t i = 0; i < ws.size(); ++i) {
        if (i) std::cout << ' ';
        std::cout << ws[i].dotted();
    }
    std::cout << '\n';
}

int cmd_check(const std::string& path, const std::string& property, bool as_nfa,
              std::uint64_t budget) {
    auto prop = parse_property(property);
    if (!prop) {
        std::cerr << "unknown property: " << property << "\n";
        return kExitError;
    }
    std::string text = read_file(path);
    Verdict verdict;
    if (as_nfa) {
        Nfa a = parse_nfa(text);
        if (*prop == Property::PositiveClosed) {
            verdict = check_nfa_closed(a, budget);
        } else {
            verdict = check_property(determinize(a, budget), *prop);
        }
    } else {
        verdict = check_property(parse_dfa(text), *prop);
    }
    if (verdict.holds) {
        std::cout << "OK\n";
        return kExitHolds;
    }
    std::cout << "FAIL";
    if (verdict.certificate) {
        const Counterexample& c = *verdict.certificate;
        std::cout << " u=" << c.u.dotted() << " v=" << c.v.dotted()
                  << " uv=" << c.uv().dotted();
    }
    if (verdict.epsilon_missing) std::cout << " reason=epsilon-missing";
    bool clopen = *prop == Property::ClopenPositive || *prop == Property::ClopenKleene;
    if (clopen)
        std::cout << " part=" << (verdict.failed_part == Verdict::Part::Open ? "open" : "closed");
    std::cout << '\n';
    return kExitFails;
}

int cmd_separate(const std::string& u_text, const std::string& v_text, const std::string& mode,
                 const std::string& alphabet_flag) {
    Alphabet alphabet = alphabet_for_words({u_text, v_text}, alphabet_flag);
    Word u = Word::from_dotted(alphabet, u_text);
    Word v = Word::from_dotted(alphabet, v_text);
    try {
        if (mode == "clopen") {
            auto [expr, trace] = separate_clopen(u, v);
            std::cout << serialize_expr(expr) << '\n';
            for (const SeparationStep& step : trace.steps)
                std::cout << "  " << step.describe() << '\n';
            return kExitHolds;
        }
        if (mode == "open") {
            print_words(separate_open(u, v));
            return kExitHolds;
        }
        if (mode == "distinguish") {
            auto [set, which] = distinguish_open(u, v);
            print_words(set);
            std::cout << "contains " << (which == WhichWord::U ? "u" : "v") << '\n';
            return kExitHolds;
        }
        if (mode == "pair") {
            auto [left, right] = separate_open_pair(u, v);
            std::cout << "L: ";
            print_words(left);
            std::cout << "M: ";
            print_words(right);
            return kExitHolds;
        }
    } catch (const CommuteError& e) {
        std::cout << "COMMUTE\n" << e.what() << '\n';
        return kExitFails;
    } catch (const PowerError& e) {
        std::cout << "POWER\n" << e.what() << '\n';
        return kExitFails;
    } catch (const EqualWordsError& e) {
        std::cout << "EQUAL\n" << e.what() << '\n';
        return kExitFails;
    }
    std::cerr << "unknown mode: " << mode << "\n";
    return kExitError;
}

int cmd_components(const std::string& path, const std::string& alphabet_flag) {
    std::string text = read_file(path);
    std::vector<Word> words;
    if (alphabet_flag.empty()) {
        words = parse_word_list(text);
    } else {
        words = parse_word_list(text, Alphabet(split_list(alphabet_flag)));
    }
    for (const auto& group : connected_components(words)) print_words(group);
    return kExitHolds;
}

int cmd_witness(int n, const std::string& which, const std::string& out_path) {
    WitnessKind kind;
    if (which == "m") {
        kind = WitnessKind::M;
    } else if (which == "mprime") {
        kind = WitnessKind::MPrime;
    } else {
        std::cerr << "unknown witness kind: " << which << " (use m or mprime)\n";
        return kExitError;
    }
    Dfa d = witness_automaton(n, kind);
    std::string text = serialize(d, witness_state_names(n));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
    return kExitHolds;
}

int cmd_oracle(const std::string& path, const std::string& check, int max_len,
               std::uint64_t word_budget, bool serial) {
    OracleProp prop;
    if (check == "closed") {
        prop = OracleProp::Closed;
    } else if (check == "open") {
        prop = OracleProp::Open;
    } else {
        std::cerr << "unknown check: " << check << " (use closed or open)\n";
        return kExitError;
    }
    LangExpr expr = parse_expr(read_file(path));
    OracleOptions opt;
    opt.max_len = max_len;
    opt.word_budget = word_budget;
    opt.parallel = !serial;
    OracleVerdict verdict = oracle_check(expr, prop, opt);
    if (verdict.holds) {
        std::cout << "OK(bounded " << max_len << ")\n";
        return kExitHolds;
    }
    std::cout << "FAIL(bounded " << max_len << ") u=" << verdict.violation->u.dotted()
              << " v=" << verdict.violation->v.dotted()
              << " uv=" << verdict.violation->u.concat(verdict.violation->v).dotted() << '\n';
    return kExitFails;
}

int cmd_laws(const std::string& suite, int trials, std::uint64_t seed, int oracle_max_len,
             bool serial) {
    LawBounds bounds;
    bounds.oracle_max_len = oracle_max_len;
    std::vector<std::string> suites;
    if (suite == "all") {
        suites = law_suite_ids();
    } else {
        suites.push_back(suite);
    }
    size_t violations = 0;
    for (const std::string& id : suites) {
        LawReport report = run_law_suite(id, trials, seed, bounds, !serial);
        std::cout << serialize_report(report);
        violations += report.violations.size();
    }
    return violations == 0 ? kExitHolds : kExitFails;
}

int cmd_interior(const std::string& path, const std::string& kind_text,
                 const std::string& out_path, std::uint64_t budget) {
    ClosureKind kind;
    if (kind_text == "positive") {
        kind = ClosureKind::Positive;
    } else if (kind_text == "kleene") {
        kind = ClosureKind::Kleene;
    } else {
        std::cerr << "unknown kind: " << kind_text << " (use positive or kleene)\n";
        return kExitError;
    }
    Dfa d = parse_dfa(read_file(path));
    std::string text = serialize(interior(d, kind, budget));
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
    return kExitHolds;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decision procedures and separators for closures of formal languages"};
    app.require_subcommand(1);

    std::string input, property = "pos-closed", mode = "clopen", alphabet_flag, out_path;
    std::string u_text, v_text, which = "mprime", check = "closed", suite, kind_text = "positive";
    std::uint64_t budget = kDefaultDeterminizeBudget;
    std::uint64_t word_budget = std::uint64_t{1} << 22;
    std::uint64_t seed = 1;
    int n = 2, max_len = 8, trials = 200, oracle_max_len = 10;
    bool as_nfa = false, serial = false;

    CLI::App* check_cmd = app.add_subcommand("check", "decide a closure property of an automaton");
    check_cmd->add_option("input", input, "automaton file (.aut)")->required();
    check_cmd->add_option("--property", property,
                          "pos-closed|kleene-closed|pos-open|kleene-open|clopen-pos|clopen-kleene");
    check_cmd->add_flag("--nfa", as_nfa, "read the input as an NFA");
    check_cmd->add_option("--budget", budget, "configuration budget");

    CLI::App* sep_cmd = app.add_subcommand("separate", "construct a separator for two words");
    sep_cmd->add_option("u", u_text, "first word, dotted")->required();
    sep_cmd->add_option("v", v_text, "second word, dotted")->required();
    sep_cmd->add_option("--mode", mode, "clopen|open|distinguish|pair");
    sep_cmd->add_option("--alphabet", alphabet_flag, "comma separated symbol tokens");

    CLI::App* comp_cmd = app.add_subcommand("components", "group words by primitive root");
    comp_cmd->add_option("input", input, "word list file")->required();
    comp_cmd->add_option("--alphabet", alphabet_flag, "comma separated symbol tokens");

    CLI::App* wit_cmd = app.add_subcommand("witness", "emit a quadratic witness automaton");
    wit_cmd->add_option("n", n, "family parameter, n >= 2")->required();
    wit_cmd->add_option("--which", which, "m|mprime");
    wit_cmd->add_option("--out", out_path, "output path (stdout when absent)");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "bounded closed/open verification");
    oracle_cmd->add_option("input", input, "language expression file (.lang)")->required();
    oracle_cmd->add_option("--check", check, "closed|open");
    oracle_cmd->add_option("--max-len", max_len, "word length bound");
    oracle_cmd->add_option("--budget", word_budget, "enumeration budget");
    oracle_cmd->add_flag("--serial", serial, "disable the parallel scan");

    CLI::App* laws_cmd = app.add_subcommand("laws", "run a law suite on random instances");
    laws_cmd->add_option("--suite", suite, "suite id or `all`")->required();
    laws_cmd->add_option("--trials", trials, "qualifying trials");
    laws_cmd->add_option("--seed", seed, "suite seed");
    laws_cmd->add_option("--oracle-max-len", oracle_max_len, "bounded oracle length");
    laws_cmd->add_flag("--serial", serial, "disable parallel trials");

    CLI::App* int_cmd = app.add_subcommand("interior", "interior of a DFA language");
    int_cmd->add_option("input", input, "automaton file (.aut)")->required();
    int_cmd->add_option("--kind", kind_text, "positive|kleene");
    int_cmd->add_option("--out", out_path, "output path (stdout when absent)");
    int_cmd->add_option("--budget", budget, "determinization budget");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (check_cmd->parsed()) return cmd_check(input, property, as_nfa, budget);
        if (sep_cmd->parsed()) return cmd_separate(u_text, v_text, mode, alphabet_flag);
        if (comp_cmd->parsed()) return cmd_components(input, alphabet_flag);
        if (wit_cmd->parsed()) return cmd_witness(n, which, out_path);
        if (oracle_cmd->parsed())
            return cmd_oracle(input, check, max_len, word_budget, serial);
        if (laws_cmd->parsed()) return cmd_laws(suite, trials, seed, oracle_max_len, serial);
        if (int_cmd->parsed()) return cmd_interior(input, kind_text, out_path, budget);
    } catch (const BudgetExceededError& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kExitError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
