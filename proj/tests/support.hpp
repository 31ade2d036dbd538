#pragma once

// Shared test utilities: deterministic random code generation and literal
// brute-force oracles, kept independent of the library's implementation
// paths (no signature packing, no hashing, no incremental state).

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "sepb2/code.hpp"
#include "sepb2/phimap.hpp"

namespace testsupport {

using sepb2::Code;
using sepb2::CodeParams;
using sepb2::Symbol;
using sepb2::Word;

inline Code make_code(int q, int n, const std::vector<std::vector<int>>& rows) {
    std::vector<Word> words;
    words.reserve(rows.size());
    for (const auto& r : rows) words.emplace_back(r.begin(), r.end());
    return Code(CodeParams{q, n}, std::move(words));
}

inline Code random_code(std::mt19937& rng, int q, int n, int m) {
    double space = 1;
    for (int i = 0; i < n && space <= 1e9; ++i) space *= q;
    m = std::min<int>(m, static_cast<int>(std::min(space, 1e9)));
    std::set<Word> seen;
    std::uniform_int_distribution<int> sym(0, q - 1);
    while (static_cast<int>(seen.size()) < m) {
        Word w(n);
        for (auto& s : w) s = static_cast<Symbol>(sym(rng));
        seen.insert(std::move(w));
    }
    return Code(CodeParams{q, n}, std::vector<Word>(seen.begin(), seen.end()));
}

// All subsets of {0..m-1} of size 1..t, as index vectors.
inline std::vector<std::vector<int>> index_subsets(int m, int t) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        for (int i = start; i < m; ++i) {
            cur.push_back(i);
            out.push_back(cur);
            if (static_cast<int>(cur.size()) < t) self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// The per-coordinate symbol unions of a subset, as sorted symbol lists.
inline std::vector<std::vector<Symbol>> coordinate_unions(const Code& code,
                                                          const std::vector<int>& subset) {
    std::vector<std::set<Symbol>> sets(code.n());
    for (int idx : subset)
        for (int c = 0; c < code.n(); ++c) sets[c].insert(code.words()[idx][c]);
    std::vector<std::vector<Symbol>> out(code.n());
    for (int c = 0; c < code.n(); ++c) out[c].assign(sets[c].begin(), sets[c].end());
    return out;
}

inline bool brute_is_separable(const Code& code, int t, bool require_disjoint = false) {
    const auto subsets = index_subsets(static_cast<int>(code.size()), t);
    std::vector<std::vector<std::vector<Symbol>>> unions;
    unions.reserve(subsets.size());
    for (const auto& s : subsets) unions.push_back(coordinate_unions(code, s));
    for (std::size_t a = 0; a < subsets.size(); ++a) {
        for (std::size_t b = a + 1; b < subsets.size(); ++b) {
            if (require_disjoint) {
                bool overlap = false;
                for (int x : subsets[a])
                    for (int y : subsets[b])
                        if (x == y) overlap = true;
                if (overlap) continue;
            }
            if (unions[a] == unions[b]) return false;
        }
    }
    return true;
}

inline bool brute_is_frameproof(const Code& code, int t) {
    const int m = static_cast<int>(code.size());
    const auto subsets = index_subsets(m, t);
    for (const auto& s : subsets) {
        const auto u = coordinate_unions(code, s);
        for (int c = 0; c < m; ++c) {
            if (std::find(s.begin(), s.end(), c) != s.end()) continue;
            bool covered = true;
            for (int coord = 0; coord < code.n() && covered; ++coord) {
                const auto& set = u[coord];
                covered = std::find(set.begin(), set.end(), code.words()[c][coord]) != set.end();
            }
            if (covered) return false;
        }
    }
    return true;
}

inline bool brute_is_b2(const Code& code) {
    const int m = static_cast<int>(code.size());
    std::vector<std::vector<int>> sums;
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            std::vector<int> s(code.n());
            for (int c = 0; c < code.n(); ++c)
                s[c] = static_cast<int>(code.words()[i][c]) + code.words()[j][c];
            sums.push_back(std::move(s));
        }
    }
    for (std::size_t a = 0; a < sums.size(); ++a)
        for (std::size_t b = a + 1; b < sums.size(); ++b)
            if (sums[a] == sums[b]) return false;
    return true;
}

// Enumerates every code over [0,q-1]^n whose word-index set is a subset of
// mask universe 2^(q^n); only usable for tiny q^n.
inline std::vector<Word> all_words(int q, int n) {
    std::vector<Word> words;
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= q;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Word w(n);
        std::uint64_t v = idx;
        for (int i = n - 1; i >= 0; --i) {
            w[i] = static_cast<Symbol>(v % q);
            v /= q;
        }
        words.push_back(std::move(w));
    }
    return words;
}

}  // namespace testsupport
