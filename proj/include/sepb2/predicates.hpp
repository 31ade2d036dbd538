#pragma once

#include <bit>
#include <cstring>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>

#include "sepb2/code.hpp"

namespace sepb2 {

enum class PropertyKind { Frameproof, SeparableBar, B2 };

struct CodeProperty {
    PropertyKind kind = PropertyKind::B2;
    int t = 0;  // meaningful for Frameproof (t >= 1) and SeparableBar (t >= 2)

    static CodeProperty frameproof(int t) {
        if (t < 1) throw std::invalid_argument("frameproof: t must be >= 1");
        return {PropertyKind::Frameproof, t};
    }
    static CodeProperty separable_bar(int t) {
        if (t < 2) throw std::invalid_argument("separable: t must be >= 2");
        return {PropertyKind::SeparableBar, t};
    }
    static CodeProperty b2() { return {PropertyKind::B2, 0}; }

    std::string name() const {
        switch (kind) {
            case PropertyKind::Frameproof: return "fp:" + std::to_string(t);
            case PropertyKind::SeparableBar:
                return t == 2 ? std::string("sep2") : "sep:" + std::to_string(t);
            case PropertyKind::B2: return "b2";
        }
        return "?";
    }

    // Flag grammar: `sep2`, `sep:<t>`, `fp:<t>`, `b2`.
    static CodeProperty parse(const std::string& text) {
        if (text == "b2") return b2();
        if (text == "sep2") return separable_bar(2);
        auto from_int = [&](const std::string& s) {
            std::size_t pos = 0;
            const int v = std::stoi(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing text");
            return v;
        };
        try {
            if (text.rfind("sep:", 0) == 0) return separable_bar(from_int(text.substr(4)));
            if (text.rfind("fp:", 0) == 0) return frameproof(from_int(text.substr(3)));
        } catch (const std::invalid_argument&) {
        } catch (const std::out_of_range&) {
        }
        throw std::invalid_argument("unknown property '" + text +
                                    "' (expected sep2, sep:<t>, fp:<t>, or b2)");
    }

    friend bool operator==(const CodeProperty& a, const CodeProperty& b) {
        return a.kind == b.kind && a.t == b.t;
    }
};

// Definition reading for separable codes: the standard reading requires the two
// subsets to be distinct (overlap allowed); the alternative requires them
// disjoint. The theorems use the standard reading.
enum class SeparableReading { DistinctSubsets, DisjointSubsets };

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::uint64_t kDefaultSubsetBudget = 1'000'000'000;

namespace detail {

// Per-coordinate symbol-set signatures, one q-bit mask per coordinate. Packed
// into a single u64 when n*q <= 64 (covers everything the exhaustive search
// guard admits at small q); otherwise a flat multi-word bitset.
inline bool sig_packable(const CodeParams& p) {
    return static_cast<long long>(p.q) * p.n <= 64;
}

inline std::uint64_t word_sig_packed(const Word& w, int q) {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        s |= std::uint64_t(1) << (i * static_cast<std::size_t>(q) + w[i]);
    return s;
}

using WideSig = std::vector<std::uint64_t>;

inline WideSig word_sig_wide(const Word& w, int q) {
    WideSig s((w.size() * static_cast<std::size_t>(q) + 63) / 64, 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        const std::size_t bit = i * static_cast<std::size_t>(q) + w[i];
        s[bit / 64] |= std::uint64_t(1) << (bit % 64);
    }
    return s;
}

struct PackedSigOps {
    using Sig = std::uint64_t;
    static Sig word_sig(const Word& w, int q) { return word_sig_packed(w, q); }
    static void or_into(Sig& a, const Sig& b) { a |= b; }
    static bool covers(const Sig& set, const Sig& w) { return (w & set) == w; }
};

struct WideSigOps {
    using Sig = WideSig;
    static Sig word_sig(const Word& w, int q) { return word_sig_wide(w, q); }
    static void or_into(Sig& a, const Sig& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] |= b[i];
    }
    static bool covers(const Sig& set, const Sig& w) {
        for (std::size_t i = 0; i < w.size(); ++i)
            if ((w[i] & set[i]) != w[i]) return false;
        return true;
    }
};

// Sum over k=1..t of C(M, k), saturating.
inline std::uint64_t subset_count(std::uint64_t m, int t) {
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max();
    unsigned __int128 total = 0;
    unsigned __int128 binom = 1;
    for (int k = 1; k <= t; ++k) {
        if (static_cast<std::uint64_t>(k) > m) break;
        binom = binom * (m - k + 1) / k;
        total += binom;
        if (total > cap) return cap;
    }
    return static_cast<std::uint64_t>(total > cap ? cap : total);
}

inline void check_subset_budget(const char* op, std::uint64_t work, std::uint64_t budget) {
    if (work > budget)
        throw BudgetError(std::string(op) + ": subset enumeration budget exceeded (work ~" +
                          std::to_string(work) + ", budget " + std::to_string(budget) +
                          "); raise the budget or shrink the code");
}

// Enumerates all index subsets of {0..M-1} of size 1..t in lexicographic
// order, passing the composed signature to the visitor. Visitor returns false
// to abort.
template <class Ops, class Visit>
bool for_each_subset(const std::vector<typename Ops::Sig>& wsigs, int t, Visit&& visit) {
    std::vector<int> idx;
    std::vector<typename Ops::Sig> sig_stack;
    const int m = static_cast<int>(wsigs.size());
    auto rec = [&](auto&& self, int start) -> bool {
        for (int i = start; i < m; ++i) {
            idx.push_back(i);
            typename Ops::Sig s = sig_stack.empty() ? wsigs[i] : sig_stack.back();
            if (!sig_stack.empty()) Ops::or_into(s, wsigs[i]);
            sig_stack.push_back(s);
            if (!visit(std::as_const(idx), sig_stack.back())) return false;
            if (static_cast<int>(idx.size()) < t)
                if (!self(self, i + 1)) return false;
            sig_stack.pop_back();
            idx.pop_back();
        }
        return true;
    };
    return rec(rec, 0);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Separable codes
// ---------------------------------------------------------------------------

struct SeparabilityWitness {
    std::vector<int> set1, set2;  // index sets into code.words(), equal unions
};

struct SeparabilityResult {
    bool separable = true;
    std::optional<SeparabilityWitness> witness;
};

namespace detail {

template <class Ops>
SeparabilityResult check_separable_impl(const std::vector<Word>& words, int q, int t,
                                        SeparableReading reading) {
    std::vector<typename Ops::Sig> wsigs;
    wsigs.reserve(words.size());
    for (const Word& w : words) wsigs.push_back(Ops::word_sig(w, q));

    std::vector<std::pair<typename Ops::Sig, std::vector<int>>> entries;
    for_each_subset<Ops>(wsigs, t, [&](const std::vector<int>& idx, const typename Ops::Sig& s) {
        entries.emplace_back(s, idx);
        return true;
    });
    std::sort(entries.begin(), entries.end());

    auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b)
                if (x == y) return false;
        return true;
    };

    for (std::size_t lo = 0; lo < entries.size();) {
        std::size_t hi = lo + 1;
        while (hi < entries.size() && entries[hi].first == entries[lo].first) ++hi;
        if (hi - lo > 1) {
            if (reading == SeparableReading::DistinctSubsets)
                return {false, SeparabilityWitness{entries[lo].second, entries[lo + 1].second}};
            for (std::size_t a = lo; a < hi; ++a)
                for (std::size_t b = a + 1; b < hi; ++b)
                    if (disjoint(entries[a].second, entries[b].second))
                        return {false, SeparabilityWitness{entries[a].second, entries[b].second}};
        }
        lo = hi;
    }
    return {true, std::nullopt};
}

}  // namespace detail

// Exhaustive check of the \bar{t}-separability property: no two distinct
// subsets of size at most t may have equal per-coordinate symbol unions.
inline SeparabilityResult check_separable(const Code& code, int t,
                                          SeparableReading reading = SeparableReading::DistinctSubsets,
                                          std::uint64_t budget = kDefaultSubsetBudget) {
    if (t < 2) throw std::invalid_argument("check_separable: t must be >= 2");
    const std::uint64_t k = detail::subset_count(code.size(), t);
    const unsigned __int128 pairs = static_cast<unsigned __int128>(k) * k;
    detail::check_subset_budget(
        "check_separable",
        pairs > std::numeric_limits<std::uint64_t>::max()
            ? std::numeric_limits<std::uint64_t>::max()
            : static_cast<std::uint64_t>(pairs),
        budget);
    if (detail::sig_packable(code.params()))
        return detail::check_separable_impl<detail::PackedSigOps>(code.words(), code.q(), t, reading);
    return detail::check_separable_impl<detail::WideSigOps>(code.words(), code.q(), t, reading);
}

inline bool is_separable(const Code& code, int t,
                         SeparableReading reading = SeparableReading::DistinctSubsets,
                         std::uint64_t budget = kDefaultSubsetBudget) {
    return check_separable(code, t, reading, budget).separable;
}

// ---------------------------------------------------------------------------
// Frameproof codes
// ---------------------------------------------------------------------------

struct FrameproofWitness {
    std::vector<int> subset;  // covers words()[covered] in every coordinate
    int covered = -1;
};

struct FrameproofResult {
    bool frameproof = true;
    std::optional<FrameproofWitness> witness;
};

namespace detail {

template <class Ops>
FrameproofResult check_frameproof_impl(const std::vector<Word>& words, int q, int t) {
    std::vector<typename Ops::Sig> wsigs;
    wsigs.reserve(words.size());
    for (const Word& w : words) wsigs.push_back(Ops::word_sig(w, q));

    FrameproofResult result;
    detail::for_each_subset<Ops>(
        wsigs, t, [&](const std::vector<int>& idx, const typename Ops::Sig& s) {
            for (int c = 0; c < static_cast<int>(words.size()); ++c) {
                if (std::find(idx.begin(), idx.end(), c) != idx.end()) continue;
                if (Ops::covers(s, wsigs[c])) {
                    result = {false, FrameproofWitness{idx, c}};
                    return false;
                }
            }
            return true;
        });
    return result;
}

}  // namespace detail

// t-frameproof: no subset of at most t codewords covers, coordinate by
// coordinate, any codeword outside the subset.
inline FrameproofResult check_frameproof(const Code& code, int t,
                                         std::uint64_t budget = kDefaultSubsetBudget) {
    if (t < 1) throw std::invalid_argument("check_frameproof: t must be >= 1");
    const std::uint64_t k = detail::subset_count(code.size(), t);
    const unsigned __int128 work = static_cast<unsigned __int128>(k) * code.size();
    detail::check_subset_budget(
        "check_frameproof",
        work > std::numeric_limits<std::uint64_t>::max()
            ? std::numeric_limits<std::uint64_t>::max()
            : static_cast<std::uint64_t>(work),
        budget);
    if (detail::sig_packable(code.params()))
        return detail::check_frameproof_impl<detail::PackedSigOps>(code.words(), code.q(), t);
    return detail::check_frameproof_impl<detail::WideSigOps>(code.words(), code.q(), t);
}

inline bool is_frameproof(const Code& code, int t, std::uint64_t budget = kDefaultSubsetBudget) {
    return check_frameproof(code, t, budget).frameproof;
}

// ---------------------------------------------------------------------------
// B2 codes
// ---------------------------------------------------------------------------

struct B2Witness {
    int i = -1, j = -1, k = -1, l = -1;  // words i+j == k+l as integer vectors
};

struct B2Result {
    bool b2 = true;
    std::optional<B2Witness> witness;
};

// Set of pairwise codeword sums, keyed by the packed sum vector. Coordinates
// of a sum lie in [0, 2q-2]; the packing width is ceil(log2(2q-1)) bits. Falls
// back to byte-string keys when n coordinates do not fit in 64 bits.
class B2SumSet {
public:
    explicit B2SumSet(const CodeParams& params)
        : n_(params.n),
          width_(std::bit_width(static_cast<unsigned>(2 * params.q - 2))),
          packed_(static_cast<long long>(n_) * width_ <= 64) {}

    static B2SumSet from_code(const Code& code) {
        B2SumSet s(code.params());
        const auto& w = code.words();
        for (std::size_t i = 0; i < w.size(); ++i)
            for (std::size_t j = i; j < w.size(); ++j) s.insert_sum(w[i], w[j]);
        return s;
    }

    std::size_t size() const { return packed_ ? set64_.size() : setstr_.size(); }

    bool contains_sum(const Word& a, const Word& b) const {
        if (packed_) return set64_.count(key64(a, b)) != 0;
        return setstr_.count(keystr(a, b)) != 0;
    }
    void insert_sum(const Word& a, const Word& b) {
        if (packed_)
            set64_.insert(key64(a, b));
        else
            setstr_.insert(keystr(a, b));
    }
    void erase_sum(const Word& a, const Word& b) {
        if (packed_)
            set64_.erase(key64(a, b));
        else
            setstr_.erase(keystr(a, b));
    }

private:
    std::uint64_t key64(const Word& a, const Word& b) const {
        std::uint64_t k = 0;
        for (int i = 0; i < n_; ++i)
            k |= static_cast<std::uint64_t>(a[i] + b[i]) << (i * width_);
        return k;
    }
    std::string keystr(const Word& a, const Word& b) const {
        std::string s(static_cast<std::size_t>(n_) * 3, '\0');
        for (int i = 0; i < n_; ++i) {
            const std::uint32_t v = static_cast<std::uint32_t>(a[i]) + b[i];
            s[i * 3] = static_cast<char>(v & 0xff);
            s[i * 3 + 1] = static_cast<char>((v >> 8) & 0xff);
            s[i * 3 + 2] = static_cast<char>((v >> 16) & 0xff);
        }
        return s;
    }

    int n_;
    int width_;
    bool packed_;
    std::unordered_set<std::uint64_t> set64_;
    std::unordered_set<std::string> setstr_;
};

// All pairwise sums c_i + c_j (i <= j, over the integers, coordinate-wise)
// must be distinct vectors.
inline B2Result check_b2(const Code& code) {
    const auto& words = code.words();
    const int m = static_cast<int>(words.size());
    const int n = code.n();
    std::unordered_map<std::string, std::pair<int, int>> seen;
    seen.reserve(static_cast<std::size_t>(m) * (m + 1) / 2);
    std::string key(static_cast<std::size_t>(n) * 3, '\0');
    for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
            for (int c = 0; c < n; ++c) {
                const std::uint32_t v = static_cast<std::uint32_t>(words[i][c]) + words[j][c];
                key[c * 3] = static_cast<char>(v & 0xff);
                key[c * 3 + 1] = static_cast<char>((v >> 8) & 0xff);
                key[c * 3 + 2] = static_cast<char>((v >> 16) & 0xff);
            }
            auto [it, fresh] = seen.try_emplace(key, i, j);
            if (!fresh) return {false, B2Witness{it->second.first, it->second.second, i, j}};
        }
    }
    return {true, std::nullopt};
}

inline bool is_b2(const Code& code) { return check_b2(code).b2; }

// Incremental form: true iff code + candidate is still B2. `sums` must be
// exactly the sum set of `code`, and candidate must not be in `code`. The sums
// candidate+c over distinct c are automatically pairwise distinct, so only
// freshness against the existing set needs checking.
inline bool b2_extends(const B2SumSet& sums, std::span<const Word> code_words,
                       const Word& candidate) {
    if (sums.contains_sum(candidate, candidate)) return false;
    for (const Word& c : code_words)
        if (sums.contains_sum(candidate, c)) return false;
    return true;
}

inline bool b2_extends(const B2SumSet& sums, const Code& code, const Word& candidate) {
    return b2_extends(sums, std::span<const Word>(code.words()), candidate);
}

// Commits the sums of a successful extension.
inline void b2_commit(B2SumSet& sums, std::span<const Word> code_words, const Word& candidate) {
    sums.insert_sum(candidate, candidate);
    for (const Word& c : code_words) sums.insert_sum(candidate, c);
}

inline void b2_uncommit(B2SumSet& sums, std::span<const Word> code_words, const Word& candidate) {
    sums.erase_sum(candidate, candidate);
    for (const Word& c : code_words) sums.erase_sum(candidate, c);
}

// ---------------------------------------------------------------------------
// Incremental separable / frameproof checks (search support)
// ---------------------------------------------------------------------------

namespace detail {

template <class Ops>
bool separable_extends_impl(const std::vector<Word>& words, const Word& candidate, int q, int t,
                            SeparableReading reading) {
    std::vector<typename Ops::Sig> wsigs;
    wsigs.reserve(words.size() + 1);
    for (const Word& w : words) wsigs.push_back(Ops::word_sig(w, q));
    wsigs.push_back(Ops::word_sig(candidate, q));
    const int cand = static_cast<int>(words.size());

    // Entries: (sig, contains-candidate, indices). The old/old pairs are
    // already known separable, so a violation must involve the candidate.
    std::vector<std::tuple<typename Ops::Sig, bool, std::vector<int>>> entries;
    for_each_subset<Ops>(wsigs, t, [&](const std::vector<int>& idx, const typename Ops::Sig& s) {
        entries.emplace_back(s, !idx.empty() && idx.back() == cand, idx);
        return true;
    });
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });

    auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (int x : a)
            for (int y : b)
                if (x == y) return false;
        return true;
    };

    for (std::size_t lo = 0; lo < entries.size();) {
        std::size_t hi = lo + 1;
        while (hi < entries.size() && std::get<0>(entries[hi]) == std::get<0>(entries[lo])) ++hi;
        if (hi - lo > 1) {
            for (std::size_t a = lo; a < hi; ++a) {
                if (!std::get<1>(entries[a])) continue;
                for (std::size_t b = lo; b < hi; ++b) {
                    if (b == a) continue;
                    if (reading == SeparableReading::DistinctSubsets) return false;
                    if (disjoint(std::get<2>(entries[a]), std::get<2>(entries[b]))) return false;
                }
            }
        }
        lo = hi;
    }
    return true;
}

}  // namespace detail

// True iff words + candidate is \bar{t}-separable, assuming words already is.
// Only subset pairs that involve the candidate are examined.
inline bool separable_extends(const CodeParams& params, const std::vector<Word>& words,
                              const Word& candidate, int t,
                              SeparableReading reading = SeparableReading::DistinctSubsets) {
    if (detail::sig_packable(params))
        return detail::separable_extends_impl<detail::PackedSigOps>(words, candidate, params.q, t,
                                                                    reading);
    return detail::separable_extends_impl<detail::WideSigOps>(words, candidate, params.q, t,
                                                              reading);
}

inline bool sep2_extends(const Code& code, const Word& candidate,
                         SeparableReading reading = SeparableReading::DistinctSubsets) {
    return separable_extends(code.params(), code.words(), candidate, 2, reading);
}

// True iff words + candidate is t-frameproof, assuming words already is.
namespace detail {

template <class Ops>
bool fp_extends_impl(const std::vector<Word>& words, const Word& candidate, int q, int t) {
    std::vector<typename Ops::Sig> wsigs;
    wsigs.reserve(words.size());
    for (const Word& w : words) wsigs.push_back(Ops::word_sig(w, q));
    const typename Ops::Sig cand_sig = Ops::word_sig(candidate, q);

    // {candidate} alone covers an old word only if they are equal, which the
    // precondition excludes, but keep the check aligned with the definition.
    for (const auto& ws : wsigs)
        if (Ops::covers(cand_sig, ws)) return false;

    // Old subsets versus the candidate, and old subsets extended by the
    // candidate versus the remaining old codewords.
    return for_each_subset<Ops>(wsigs, t, [&](const std::vector<int>& idx,
                                              const typename Ops::Sig& s) {
        if (Ops::covers(s, cand_sig)) return false;
        if (static_cast<int>(idx.size()) <= t - 1) {
            typename Ops::Sig with_cand = s;
            Ops::or_into(with_cand, cand_sig);
            for (int c = 0; c < static_cast<int>(words.size()); ++c) {
                if (std::find(idx.begin(), idx.end(), c) != idx.end()) continue;
                if (Ops::covers(with_cand, wsigs[c])) return false;
            }
        }
        return true;
    });
}

}  // namespace detail

inline bool fp_extends(const CodeParams& params, const std::vector<Word>& words,
                       const Word& candidate, int t) {
    if (detail::sig_packable(params))
        return detail::fp_extends_impl<detail::PackedSigOps>(words, candidate, params.q, t);
    return detail::fp_extends_impl<detail::WideSigOps>(words, candidate, params.q, t);
}

inline bool fp_extends(const Code& code, const Word& candidate, int t) {
    return fp_extends(code.params(), code.words(), candidate, t);
}

// ---------------------------------------------------------------------------
// Sep2State: hash-set of subset signatures for the search hot path (t = 2,
// distinct-subsets reading). push/pop maintain the signatures of all subsets
// of size <= 2 of the current code.
// ---------------------------------------------------------------------------

class Sep2State {
public:
    explicit Sep2State(const CodeParams& params)
        : q_(params.q), packed_(detail::sig_packable(params)) {}

    bool can_add(const Word& candidate) const {
        if (packed_) {
            const std::uint64_t cs = detail::word_sig_packed(candidate, q_);
            if (set64_.count(cs)) return false;
            scratch64_.clear();
            for (std::uint64_t ws : wsigs64_) {
                const std::uint64_t pair_sig = cs | ws;
                if (set64_.count(pair_sig)) return false;
                scratch64_.push_back(pair_sig);
            }
            std::sort(scratch64_.begin(), scratch64_.end());
            return std::adjacent_find(scratch64_.begin(), scratch64_.end()) == scratch64_.end();
        }
        const detail::WideSig cs = detail::word_sig_wide(candidate, q_);
        auto key = wide_key(cs);
        if (setstr_.count(key)) return false;
        std::vector<std::string> fresh;
        fresh.reserve(wsigsw_.size());
        for (const auto& ws : wsigsw_) {
            detail::WideSig pair_sig = cs;
            detail::WideSigOps::or_into(pair_sig, ws);
            auto pk = wide_key(pair_sig);
            if (setstr_.count(pk)) return false;
            fresh.push_back(std::move(pk));
        }
        std::sort(fresh.begin(), fresh.end());
        return std::adjacent_find(fresh.begin(), fresh.end()) == fresh.end();
    }

    void push(const Word& candidate) {
        if (packed_) {
            const std::uint64_t cs = detail::word_sig_packed(candidate, q_);
            set64_.insert(cs);
            for (std::uint64_t ws : wsigs64_) set64_.insert(cs | ws);
            wsigs64_.push_back(cs);
        } else {
            const detail::WideSig cs = detail::word_sig_wide(candidate, q_);
            setstr_.insert(wide_key(cs));
            for (const auto& ws : wsigsw_) {
                detail::WideSig pair_sig = cs;
                detail::WideSigOps::or_into(pair_sig, ws);
                setstr_.insert(wide_key(pair_sig));
            }
            wsigsw_.push_back(cs);
        }
    }

    void pop(const Word& candidate) {
        if (packed_) {
            wsigs64_.pop_back();
            const std::uint64_t cs = detail::word_sig_packed(candidate, q_);
            set64_.erase(cs);
            for (std::uint64_t ws : wsigs64_) set64_.erase(cs | ws);
        } else {
            wsigsw_.pop_back();
            const detail::WideSig cs = detail::word_sig_wide(candidate, q_);
            setstr_.erase(wide_key(cs));
            for (const auto& ws : wsigsw_) {
                detail::WideSig pair_sig = cs;
                detail::WideSigOps::or_into(pair_sig, ws);
                setstr_.erase(wide_key(pair_sig));
            }
        }
    }

private:
    static std::string wide_key(const detail::WideSig& s) {
        std::string k(s.size() * sizeof(std::uint64_t), '\0');
        std::memcpy(k.data(), s.data(), k.size());
        return k;
    }

    int q_;
    bool packed_;
    std::vector<std::uint64_t> wsigs64_;
    std::vector<detail::WideSig> wsigsw_;
    std::unordered_set<std::uint64_t> set64_;
    std::unordered_set<std::string> setstr_;
    mutable std::vector<std::uint64_t> scratch64_;
};

}  // namespace sepb2
