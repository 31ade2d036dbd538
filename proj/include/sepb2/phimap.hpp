#pragma once

#include <array>
#include <cstring>
#include <optional>
#include <span>
#include <unordered_map>

#include "sepb2/code.hpp"
#include "sepb2/rational.hpp"

namespace sepb2 {

enum class PhiKind { Separable, B2Diff };

// The difference-detecting alphabet D. The separable variant maps unequal
// symbol pairs to distinct non-zero marks, |D| = q(q-1)+1; the B2 variant maps
// to integer differences, |D| = 2q-1.
struct PhiVariant {
    PhiKind kind = PhiKind::Separable;
    int q = 2;

    static PhiVariant separable(int q) {
        if (q < 2) throw std::invalid_argument("PhiVariant: q must be >= 2");
        return {PhiKind::Separable, q};
    }
    static PhiVariant b2diff(int q) {
        if (q < 2) throw std::invalid_argument("PhiVariant: q must be >= 2");
        return {PhiKind::B2Diff, q};
    }

    int alphabet_size() const { return kind == PhiKind::Separable ? q * (q - 1) + 1 : 2 * q - 1; }

    std::string name() const { return kind == PhiKind::Separable ? "sep" : "b2diff"; }
};

using PhiSymbol = std::int32_t;
using PhiWord = std::vector<PhiSymbol>;

// Separable variant: 0 if x == y, else the pair (x, y) encoded by the fixed
// row-major bijection onto [1, q^2-q] that skips the diagonal. B2 variant: the
// integer difference x - y. The encoding is part of the module contract so
// that image histograms are reproducible.
inline PhiSymbol phi(const PhiVariant& variant, int x, int y) {
    if (x < 0 || x >= variant.q || y < 0 || y >= variant.q)
        throw std::out_of_range("phi: symbol out of range for q=" + std::to_string(variant.q));
    if (variant.kind == PhiKind::B2Diff) return x - y;
    if (x == y) return 0;
    return 1 + x * (variant.q - 1) + (y < x ? y : y - 1);
}

inline PhiWord phi_word(const PhiVariant& variant, const Word& w1, const Word& w2) {
    if (w1.size() != w2.size())
        throw std::invalid_argument("phi_word: length mismatch (" + std::to_string(w1.size()) +
                                    " vs " + std::to_string(w2.size()) + ")");
    PhiWord out(w1.size());
    for (std::size_t i = 0; i < w1.size(); ++i) out[i] = phi(variant, w1[i], w2[i]);
    return out;
}

struct InjectivityWitness {
    // Phi(suffix(codewords[0]), suffix(codewords[1])) ==
    // Phi(suffix(codewords[2]), suffix(codewords[3])); the first pair is the
    // earlier one in enumeration order (classes by prefix, pairs by suffix
    // position).
    std::array<Word, 4> codewords;
    PhiWord image;
};

struct InjectivityResult {
    bool injective = true;
    std::optional<InjectivityWitness> witness;
};

namespace detail {

inline std::string phi_word_key(const PhiWord& w) {
    std::string key(w.size() * sizeof(PhiSymbol), '\0');
    if (!w.empty()) std::memcpy(key.data(), w.data(), key.size());
    return key;
}

}  // namespace detail

// Checks that Phi is injective on ordered pairs of different suffixes within
// the same class, globally across classes. On failure reports the earliest
// collision found in enumeration order, as four full codewords.
inline InjectivityResult check_injectivity(const PrefixPartition& partition,
                                           const PhiVariant& variant) {
    if (variant.q != partition.params().q)
        throw std::invalid_argument("check_injectivity: variant q does not match partition q");

    struct PairRef {
        int cls, j, k;
    };
    std::unordered_map<std::string, PairRef> seen;

    auto full_word = [&](int cls, int suffix_idx) {
        const auto& c = partition.classes()[cls];
        Word w = c.prefix;
        const Word& s = c.suffixes[suffix_idx];
        w.insert(w.end(), s.begin(), s.end());
        return w;
    };

    for (int ci = 0; ci < static_cast<int>(partition.classes().size()); ++ci) {
        const auto& suffixes = partition.classes()[ci].suffixes;
        const int m = static_cast<int>(suffixes.size());
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < m; ++k) {
                if (j == k) continue;
                const PhiWord image = phi_word(variant, suffixes[j], suffixes[k]);
                auto [it, fresh] = seen.try_emplace(detail::phi_word_key(image), PairRef{ci, j, k});
                if (!fresh) {
                    const PairRef& first = it->second;
                    return {false,
                            InjectivityWitness{{full_word(first.cls, first.j),
                                                full_word(first.cls, first.k), full_word(ci, j),
                                                full_word(ci, k)},
                                               image}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

// Multiplicities of the Phi images over all ordered same-class suffix pairs,
// equal pairs included (the distribution of Z in the entropy argument).
inline std::vector<std::uint64_t> phi_image_multiplicities(const PrefixPartition& partition,
                                                           const PhiVariant& variant) {
    std::unordered_map<std::string, std::uint64_t> hist;
    for (const auto& cls : partition.classes()) {
        const int m = static_cast<int>(cls.suffixes.size());
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k)
                ++hist[detail::phi_word_key(phi_word(variant, cls.suffixes[j], cls.suffixes[k]))];
    }
    std::vector<std::uint64_t> counts;
    counts.reserve(hist.size());
    for (const auto& [key, count] : hist) counts.push_back(count);
    return counts;
}

// Sum over symbols s of f_s^2, where f_s is the fraction of suffixes in the
// class carrying s at the coordinate. Equals the frequency of 0 at that
// coordinate of Phi over all ordered pairs, and is never below 1/q.
inline Rational zero_frequency(std::span<const Word> class_suffixes, int coordinate) {
    if (class_suffixes.empty()) throw std::invalid_argument("zero_frequency: empty class");
    const int f = static_cast<int>(class_suffixes.front().size());
    if (coordinate < 0 || coordinate >= f)
        throw std::out_of_range("zero_frequency: coordinate " + std::to_string(coordinate) +
                                " out of range for suffix length " + std::to_string(f));
    std::unordered_map<Symbol, std::int64_t> counts;
    for (const Word& w : class_suffixes) ++counts[w[coordinate]];
    std::int64_t num = 0;
    const std::int64_t m = static_cast<std::int64_t>(class_suffixes.size());
    for (const auto& [sym, c] : counts) num += c * c;
    return Rational(num, m * m);
}

inline Rational zero_frequency(const std::vector<Word>& class_suffixes, int coordinate) {
    return zero_frequency(std::span<const Word>(class_suffixes), coordinate);
}

}  // namespace sepb2
