#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sepb2 {

using Symbol = std::uint16_t;
using Word = std::vector<Symbol>;

// Alphabet sizes are capped at 2^16 so a symbol always fits in 16 bits.
inline constexpr int kMaxAlphabet = 1 << 16;

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct CodeParams {
    int q = 2;  // alphabet size, symbols are [0, q-1]
    int n = 1;  // word length

    void validate() const {
        if (q < 2) throw std::invalid_argument("CodeParams: alphabet size q must be >= 2");
        if (q > kMaxAlphabet)
            throw std::invalid_argument("CodeParams: alphabet size q exceeds 2^16");
        if (n < 1) throw std::invalid_argument("CodeParams: word length n must be >= 1");
    }

    friend bool operator==(const CodeParams& a, const CodeParams& b) {
        return a.q == b.q && a.n == b.n;
    }
};

namespace detail {

inline std::string word_str(const Word& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(w[i]);
    }
    return s;
}

}  // namespace detail

// A code: an ordered set of distinct words over [0, q-1]^n. Insertion order is
// preserved so that serialization and search witnesses are deterministic.
// Immutable after construction. Construction accepts an empty word list (used
// by incremental search); the text parser rejects empty inputs.
class Code {
public:
    Code(CodeParams params, std::vector<Word> words)
        : params_(params), words_(std::move(words)) {
        params_.validate();
        std::set<Word> seen;
        for (const Word& w : words_) {
            if (static_cast<int>(w.size()) != params_.n)
                throw std::invalid_argument("Code: word '" + detail::word_str(w) +
                                            "' has length " + std::to_string(w.size()) +
                                            ", expected " + std::to_string(params_.n));
            for (Symbol s : w)
                if (static_cast<int>(s) >= params_.q)
                    throw std::invalid_argument("Code: symbol " + std::to_string(s) +
                                                " out of range for q=" + std::to_string(params_.q));
            if (!seen.insert(w).second)
                throw std::invalid_argument("Code: duplicate codeword '" + detail::word_str(w) + "'");
        }
    }

    const CodeParams& params() const { return params_; }
    int q() const { return params_.q; }
    int n() const { return params_.n; }
    const std::vector<Word>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }

private:
    CodeParams params_;
    std::vector<Word> words_;
};

// Text format: first non-comment line is `q=<int> n=<int>`, then one codeword
// per line as n whitespace-separated decimal symbols. Lines starting with `#`
// are comments, blank lines are skipped.
inline Code parse_code(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_header = false;
    CodeParams params;
    std::vector<Word> words;

    auto is_blank_or_comment = [](const std::string& s) {
        const auto pos = s.find_first_not_of(" \t\r");
        return pos == std::string::npos || s[pos] == '#';
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (is_blank_or_comment(line)) continue;
        std::istringstream ls(line);
        if (!have_header) {
            std::string qa, na;
            ls >> qa >> na;
            long q = 0, n = 0;
            if (qa.rfind("q=", 0) != 0 || na.rfind("n=", 0) != 0)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": expected header 'q=<int> n=<int>'");
            try {
                q = std::stol(qa.substr(2));
                n = std::stol(na.substr(2));
            } catch (const std::exception&) {
                throw ParseError("line " + std::to_string(lineno) + ": bad header numbers");
            }
            std::string extra;
            if (ls >> extra)
                throw ParseError("line " + std::to_string(lineno) + ": trailing text after header");
            if (q < 2 || q > kMaxAlphabet)
                throw ParseError("line " + std::to_string(lineno) + ": q=" + std::to_string(q) +
                                 " out of range [2, 2^16]");
            if (n < 1)
                throw ParseError("line " + std::to_string(lineno) + ": n must be >= 1");
            params.q = static_cast<int>(q);
            params.n = static_cast<int>(n);
            have_header = true;
            continue;
        }
        Word w;
        w.reserve(params.n);
        long v = 0;
        while (ls >> v) {
            if (v < 0 || v >= params.q)
                throw ParseError("line " + std::to_string(lineno) + ": symbol " +
                                 std::to_string(v) + " out of range for q=" +
                                 std::to_string(params.q));
            w.push_back(static_cast<Symbol>(v));
        }
        if (!ls.eof()) throw ParseError("line " + std::to_string(lineno) + ": non-numeric symbol");
        if (static_cast<int>(w.size()) != params.n)
            throw ParseError("line " + std::to_string(lineno) + ": expected " +
                             std::to_string(params.n) + " symbols, got " +
                             std::to_string(w.size()));
        words.push_back(std::move(w));
    }
    if (!have_header) throw ParseError("empty input: missing 'q=<int> n=<int>' header");
    if (words.empty()) throw ParseError("empty input: no codewords");

    try {
        return Code(params, std::move(words));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

inline Code parse_code(const std::string& text) {
    std::istringstream in(text);
    return parse_code(in);
}

inline void serialize_code(const Code& code, std::ostream& out) {
    out << "q=" << code.q() << " n=" << code.n() << "\n";
    for (const Word& w : code.words()) out << detail::word_str(w) << "\n";
}

inline std::string serialize_code(const Code& code) {
    std::ostringstream out;
    serialize_code(code, out);
    return out.str();
}

// Split of a code by length-e prefixes. Classes are ordered lexicographically
// by prefix; within a class, suffixes keep their order of appearance. Only
// nonempty classes are materialized; the full class count q^e is arithmetic.
class PrefixPartition {
public:
    struct Class {
        Word prefix;                 // length e
        std::vector<Word> suffixes;  // each of length f = n - e
    };

    PrefixPartition(CodeParams params, int e, std::vector<Class> classes)
        : params_(params), e_(e), classes_(std::move(classes)) {}

    const CodeParams& params() const { return params_; }
    int e() const { return e_; }
    int f() const { return params_.n - e_; }
    const std::vector<Class>& classes() const { return classes_; }

    std::size_t total_words() const {
        std::size_t m = 0;
        for (const auto& c : classes_) m += c.suffixes.size();
        return m;
    }

private:
    CodeParams params_;
    int e_;
    std::vector<Class> classes_;
};

inline PrefixPartition partition_by_prefix(const Code& code, int e) {
    if (e < 0 || e > code.n())
        throw std::out_of_range("partition_by_prefix: e=" + std::to_string(e) +
                                " out of range [0, " + std::to_string(code.n()) + "]");
    std::map<Word, std::vector<Word>> classes;
    for (const Word& w : code.words()) {
        Word prefix(w.begin(), w.begin() + e);
        Word suffix(w.begin() + e, w.end());
        classes[std::move(prefix)].push_back(std::move(suffix));
    }
    std::vector<PrefixPartition::Class> out;
    out.reserve(classes.size());
    for (auto& [prefix, suffixes] : classes)
        out.push_back({prefix, std::move(suffixes)});
    return PrefixPartition(code.params(), e, std::move(out));
}

// Sum over classes of |P_i|^2. Empty classes contribute nothing.
inline std::uint64_t sum_of_squares(const PrefixPartition& partition) {
    std::uint64_t total = 0;
    for (const auto& c : partition.classes()) {
        const std::uint64_t m = c.suffixes.size();
        total += m * m;
    }
    return total;
}

// q^e saturated at 2^64-1. Beyond desk scale only the saturated flag matters
// to the inequality checks, never the exact value.
inline std::uint64_t pow_saturating(std::uint64_t q, int e, bool* saturated = nullptr) {
    if (saturated) *saturated = false;
    unsigned __int128 r = 1;
    for (int i = 0; i < e; ++i) {
        r *= q;
        if (r > std::numeric_limits<std::uint64_t>::max()) {
            if (saturated) *saturated = true;
            return std::numeric_limits<std::uint64_t>::max();
        }
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace sepb2
