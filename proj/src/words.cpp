#include "closures/words.hpp"

#include <algorithm>
#include <map>

namespace closures {

bool commutes(const Word& u, const Word& v) {
    require_same_alphabet(u.alphabet(), v.alphabet(), "commutes");
    return u.concat(v) == v.concat(u);
}

PrimitiveDecomposition primitive_root(const Word& w) {
    if (w.empty()) throw EmptyWordError("primitive_root of the empty word");
    const int n = w.size();
    for (int d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        bool period = true;
        for (int i = d; i < n && period; ++i) period = w[i] == w[i - d];
        if (period) return {w.subword(0, d), n / d};
    }
    return {w, 1};  // unreachable: d == n always matches
}

std::optional<int> power_exponent(const Word& u, const Word& v) {
    if (v.empty()) throw EmptyWordError("power_exponent with empty base");
    require_same_alphabet(u.alphabet(), v.alphabet(), "power_exponent");
    if (u.empty()) return 0;
    if (u.size() % v.size() != 0) return std::nullopt;
    int k = u.size() / v.size();
    for (int i = 0; i < u.size(); ++i)
        if (u[i] != v[i % v.size()]) return std::nullopt;
    return k;
}

bool connected(const Word& u, const Word& v) {
    if (u.empty() || v.empty()) throw EmptyWordError("connected needs non-empty words");
    require_same_alphabet(u.alphabet(), v.alphabet(), "connected");
    return primitive_root(u).root == primitive_root(v).root;
}

std::vector<std::vector<Word>> connected_components(const std::vector<Word>& words) {
    auto root_less = [](const Word& a, const Word& b) { return lex_less(a, b); };
    std::map<Word, std::vector<Word>, decltype(root_less)> groups(root_less);
    for (const Word& w : words) groups[primitive_root(w).root].push_back(w);
    std::vector<std::vector<Word>> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end(), length_lex_less);
        members.erase(std::unique(members.begin(), members.end()), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

}  // namespace closures
