#pragma once

#include <atomic>
#include <cmath>
#include <cstdio>
#include <memory>
#include <thread>

#include "sepb2/bounds.hpp"
#include "sepb2/code.hpp"
#include "sepb2/predicates.hpp"

namespace sepb2 {

// Violation of the exhaustive-search size guard.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

struct SearchConfig {
    CodeParams params;
    CodeProperty property;
    std::uint64_t node_limit = 100'000'000;
    bool use_symmetry = false;
    int workers = 1;
    SeparableReading reading = SeparableReading::DistinctSubsets;
    std::uint64_t progress_interval = 1'000'000;  // diagnostic stream period, 0 = silent

    void validate() const {
        params.validate();
        if (node_limit < 1) throw std::invalid_argument("SearchConfig: node_limit must be >= 1");
        if (workers < 1) throw std::invalid_argument("SearchConfig: workers must be >= 1");
    }
};

struct SearchResult {
    int max_size;
    Code witness;
    std::uint64_t nodes_explored;
    bool complete;  // true iff the whole (possibly symmetry-reduced) tree was exhausted
};

namespace detail {

inline Word word_of_index(std::uint64_t idx, int q, int n) {
    Word w(n);
    for (int i = n - 1; i >= 0; --i) {
        w[i] = static_cast<Symbol>(idx % q);
        idx /= q;
    }
    return w;
}

inline void word_of_index_into(std::uint64_t idx, int q, Word& w) {
    for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
        w[i] = static_cast<Symbol>(idx % q);
        idx /= q;
    }
}

// Incremental membership engine: one per worker, owns the partial code.
class IncrementalChecker {
public:
    virtual ~IncrementalChecker() = default;
    virtual bool can_add(const Word& cand) const = 0;
    virtual void push(const Word& cand) = 0;
    virtual void pop() = 0;
    const std::vector<Word>& words() const { return words_; }

protected:
    std::vector<Word> words_;
};

class B2Checker final : public IncrementalChecker {
public:
    explicit B2Checker(const CodeParams& params) : sums_(params) {}
    bool can_add(const Word& cand) const override { return b2_extends(sums_, words_, cand); }
    void push(const Word& cand) override {
        b2_commit(sums_, words_, cand);
        words_.push_back(cand);
    }
    void pop() override {
        const Word w = words_.back();
        words_.pop_back();
        b2_uncommit(sums_, words_, w);
    }

private:
    B2SumSet sums_;
};

class Sep2Checker final : public IncrementalChecker {
public:
    explicit Sep2Checker(const CodeParams& params) : state_(params) {}
    bool can_add(const Word& cand) const override { return state_.can_add(cand); }
    void push(const Word& cand) override {
        state_.push(cand);
        words_.push_back(cand);
    }
    void pop() override {
        const Word w = words_.back();
        words_.pop_back();
        state_.pop(w);
    }

private:
    Sep2State state_;
};

class SepGenericChecker final : public IncrementalChecker {
public:
    SepGenericChecker(const CodeParams& params, int t, SeparableReading reading)
        : params_(params), t_(t), reading_(reading) {}
    bool can_add(const Word& cand) const override {
        return separable_extends(params_, words_, cand, t_, reading_);
    }
    void push(const Word& cand) override { words_.push_back(cand); }
    void pop() override { words_.pop_back(); }

private:
    CodeParams params_;
    int t_;
    SeparableReading reading_;
};

class FpChecker final : public IncrementalChecker {
public:
    FpChecker(const CodeParams& params, int t) : params_(params), t_(t) {}
    bool can_add(const Word& cand) const override {
        return fp_extends(params_, words_, cand, t_);
    }
    void push(const Word& cand) override { words_.push_back(cand); }
    void pop() override { words_.pop_back(); }

private:
    CodeParams params_;
    int t_;
};

inline std::unique_ptr<IncrementalChecker> make_checker(const SearchConfig& cfg) {
    switch (cfg.property.kind) {
        case PropertyKind::B2:
            return std::make_unique<B2Checker>(cfg.params);
        case PropertyKind::SeparableBar:
            if (cfg.property.t == 2 && cfg.reading == SeparableReading::DistinctSubsets)
                return std::make_unique<Sep2Checker>(cfg.params);
            return std::make_unique<SepGenericChecker>(cfg.params, cfg.property.t, cfg.reading);
        case PropertyKind::Frameproof:
            return std::make_unique<FpChecker>(cfg.params, cfg.property.t);
    }
    throw std::invalid_argument("max_code_search: unknown property");
}

struct TaskOutcome {
    int best_size = 0;
    std::vector<Word> best;
    std::uint64_t nodes = 0;
    bool complete = true;
};

struct ExploreCtx {
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    bool out_of_budget = false;
    std::uint64_t progress_interval = 0;
    const std::atomic<std::uint64_t>* shared_abort_count = nullptr;  // parallel early-abort only
    std::atomic<std::uint64_t>* shared_nodes = nullptr;
    std::uint64_t shared_limit = 0;
};

// Depth-first enumeration of canonical (strictly lex-increasing) codes. Every
// visited partial code counts as one node. Returns false when the budget ran
// out and the unwind should stop.
inline bool explore(IncrementalChecker& checker, std::uint64_t last_idx, std::uint64_t word_count,
                    int q, ExploreCtx& ctx, TaskOutcome& out, Word& scratch) {
    if (ctx.nodes + 1 > ctx.budget) {
        ctx.out_of_budget = true;
        out.complete = false;
        return false;
    }
    ++ctx.nodes;
    if (ctx.shared_nodes) {
        const std::uint64_t before = ctx.shared_nodes->fetch_add(1, std::memory_order_relaxed);
        if (before >= ctx.shared_limit) {
            // Combined exploration already crossed the node limit; the merged
            // result will come from the deterministic sequential rerun.
            ctx.out_of_budget = true;
            out.complete = false;
            return false;
        }
    }
    if (ctx.progress_interval && ctx.nodes % ctx.progress_interval == 0)
        std::fprintf(stderr, "search: %llu nodes explored\n",
                     static_cast<unsigned long long>(ctx.nodes));

    if (static_cast<int>(checker.words().size()) > out.best_size) {
        out.best_size = static_cast<int>(checker.words().size());
        out.best = checker.words();
    }
    for (std::uint64_t idx = last_idx + 1; idx < word_count; ++idx) {
        word_of_index_into(idx, q, scratch);
        if (checker.can_add(scratch)) {
            checker.push(scratch);
            const bool keep_going = explore(checker, idx, word_count, q, ctx, out, scratch);
            checker.pop();
            if (!keep_going) return false;
        }
    }
    return true;
}

inline std::vector<std::uint64_t> root_indices(const SearchConfig& cfg, std::uint64_t word_count) {
    std::vector<std::uint64_t> roots;
    if (!cfg.use_symmetry) {
        roots.reserve(word_count);
        for (std::uint64_t i = 0; i < word_count; ++i) roots.push_back(i);
        return roots;
    }
    if (cfg.property.kind == PropertyKind::B2) {
        // B2 is preserved by the symbol reversal s -> q-1-s (it is order-
        // reversing on words), so some maximum code starts at a word w with
        // w <= reversed(w).
        const int q = cfg.params.q;
        const int n = cfg.params.n;
        for (std::uint64_t i = 0; i < word_count; ++i) {
            const Word w = word_of_index(i, q, n);
            Word rev(w.size());
            for (std::size_t c = 0; c < w.size(); ++c)
                rev[c] = static_cast<Symbol>(q - 1 - w[c]);
            if (w <= rev) roots.push_back(i);
        }
        return roots;
    }
    // Separable and frameproof codes are preserved by arbitrary per-coordinate
    // symbol permutations, so some maximum code contains the all-zero word,
    // which is then its lex-minimum.
    roots.push_back(0);
    return roots;
}

inline TaskOutcome run_task(const SearchConfig& cfg, std::uint64_t root_idx,
                            std::uint64_t word_count, ExploreCtx& ctx) {
    TaskOutcome out;
    auto checker = make_checker(cfg);
    Word scratch(cfg.params.n);
    word_of_index_into(root_idx, cfg.params.q, scratch);
    checker->push(scratch);
    explore(*checker, root_idx, word_count, cfg.params.q, ctx, out, scratch);
    return out;
}

// Single pass over all tasks in canonical order with one shared counter;
// defines the reference semantics that the parallel path must reproduce.
inline SearchResult run_sequential(const SearchConfig& cfg,
                                   const std::vector<std::uint64_t>& roots,
                                   std::uint64_t word_count) {
    ExploreCtx ctx;
    ctx.budget = cfg.node_limit;
    ctx.nodes = 1;  // the empty root
    ctx.progress_interval = cfg.progress_interval;

    TaskOutcome merged;
    auto checker = make_checker(cfg);
    Word scratch(cfg.params.n);
    for (std::uint64_t root : roots) {
        if (ctx.out_of_budget) break;
        word_of_index_into(root, cfg.params.q, scratch);
        checker->push(scratch);
        TaskOutcome out;
        explore(*checker, root, word_count, cfg.params.q, ctx, out, scratch);
        checker->pop();
        if (out.best_size > merged.best_size) {
            merged.best_size = out.best_size;
            merged.best = std::move(out.best);
        }
    }
    return {merged.best_size, Code(cfg.params, merged.best),
            ctx.out_of_budget ? cfg.node_limit : ctx.nodes, !ctx.out_of_budget};
}

}  // namespace detail

// Exhaustive depth-first search for a maximum code with the requested
// property. Codewords are enumerated in lexicographic order and a partial
// code only extends with words strictly greater than its last element, so
// each code is visited exactly once and the returned witness is the
// lexicographically smallest maximum code of the enumerated space. The result
// (witness, node count, completeness) is a pure function of the config;
// worker count never changes it.
inline SearchResult max_code_search(const SearchConfig& cfg) {
    cfg.validate();
    bool saturated = false;
    const std::uint64_t word_count = pow_saturating(cfg.params.q, cfg.params.n, &saturated);
    if (saturated || word_count > (1ull << 24))
        throw GuardError("max_code_search: exhaustive search guard violated (q^n > 2^24)");

    const std::vector<std::uint64_t> roots = detail::root_indices(cfg, word_count);
    const int workers = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(cfg.workers), roots.size()));

    if (workers <= 1) return detail::run_sequential(cfg, roots, word_count);

    std::vector<detail::TaskOutcome> outcomes(roots.size());
    std::atomic<std::size_t> next_task{0};
    std::atomic<std::uint64_t> shared_nodes{1};  // the empty root
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            while (true) {
                const std::size_t task = next_task.fetch_add(1, std::memory_order_relaxed);
                if (task >= roots.size()) return;
                detail::ExploreCtx ctx;
                ctx.budget = cfg.node_limit;
                ctx.progress_interval = cfg.progress_interval;
                ctx.shared_nodes = &shared_nodes;
                ctx.shared_limit = cfg.node_limit;
                outcomes[task] = detail::run_task(cfg, roots[task], word_count, ctx);
                outcomes[task].nodes = ctx.nodes;
                if (ctx.out_of_budget) outcomes[task].complete = false;
            }
        });
    }
    for (auto& th : pool) th.join();

    std::uint64_t total = 1;
    bool all_complete = true;
    for (const auto& out : outcomes) {
        total += out.nodes;
        all_complete = all_complete && out.complete;
    }
    if (!all_complete || total > cfg.node_limit) {
        // Node limit reached somewhere: the deterministic answer is whatever
        // the budgeted sequential pass produces.
        return detail::run_sequential(cfg, roots, word_count);
    }

    detail::TaskOutcome merged;
    for (const auto& out : outcomes) {
        if (out.best_size > merged.best_size) {
            merged.best_size = out.best_size;
            merged.best = out.best;
        }
    }
    return {merged.best_size, Code(cfg.params, merged.best), total, true};
}

struct SearchTableRow {
    int n = 0;
    int max_size = 0;
    double rate = 0;       // log_q(max_size) / n
    double bound = 0;      // the matching asymptotic bound, for context
    bool exceeds_bound = false;
    bool complete = false;
    std::uint64_t nodes = 0;
};

// Runs max_code_search for n = 1..n_max and reports the finite-n rates next
// to the asymptotic bound. Small-n rates may legitimately exceed the bound;
// the row is flagged, not failed.
inline std::vector<SearchTableRow> search_table(int q, int n_max, const CodeProperty& property,
                                                SearchConfig proto = {}) {
    if (n_max < 0) throw std::invalid_argument("search_table: n_max must be >= 0");
    double bound = 0;
    switch (property.kind) {
        case PropertyKind::SeparableBar:
            bound = property.t == 2 ? rate_bound_sep2(q).to_double()
                                    : rate_bound_reference(ReferenceBound::SeparableGeneral,
                                                           property.t)
                                          .to_double();
            break;
        case PropertyKind::B2: bound = rate_bound_b2(q); break;
        case PropertyKind::Frameproof:
            bound = rate_bound_reference(ReferenceBound::Frameproof, property.t).to_double();
            break;
    }
    std::vector<SearchTableRow> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        proto.params = CodeParams{q, n};
        proto.property = property;
        const SearchResult result = max_code_search(proto);
        const double rate =
            std::log2(static_cast<double>(result.max_size)) / (n * std::log2(static_cast<double>(q)));
        rows.push_back({n, result.max_size, rate, bound, rate > bound, result.complete,
                        result.nodes_explored});
    }
    return rows;
}

}  // namespace sepb2
