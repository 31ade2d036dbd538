#pragma once

#include <cmath>
#include <cstdio>
#include <numeric>

#include "sepb2/code.hpp"
#include "sepb2/phimap.hpp"
#include "sepb2/predicates.hpp"
#include "sepb2/rational.hpp"

namespace sepb2 {

// Thrown by the chain verifier when the input code does not satisfy the
// predicate matching the requested variant.
struct PredicateError : std::runtime_error {
    explicit PredicateError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Closed-form rate bounds
// ---------------------------------------------------------------------------

// Upper bound (2q-1)/(3q-1) on the asymptotic base-q rate of 2-bar-separable
// codes.
inline Rational rate_bound_sep2(int q) {
    if (q < 2) throw std::invalid_argument("rate_bound_sep2: q must be >= 2");
    return Rational(2 * static_cast<std::int64_t>(q) - 1, 3 * static_cast<std::int64_t>(q) - 1);
}

// Upper bound (q + (q-1) log_q 2) / (2q + (q-1) log_q 2) on the asymptotic
// base-q rate of B2 codes. Coincides with rate_bound_sep2 at q = 2.
inline double rate_bound_b2(int q) {
    if (q < 2) throw std::invalid_argument("rate_bound_b2: q must be >= 2");
    const double logq2 = 1.0 / std::log2(static_cast<double>(q));
    return (q + (q - 1) * logq2) / (2.0 * q + (q - 1) * logq2);
}

enum class ReferenceBound { Frameproof, SeparableGeneral, Dyachkov };

// Reference rates: 1/t for t-frameproof, 1/(t-1) for t-bar-separable via the
// frameproof containment, 2/t for the weaker k=m=t separability notion.
inline Rational rate_bound_reference(ReferenceBound kind, int t) {
    switch (kind) {
        case ReferenceBound::Frameproof:
            if (t < 1) throw std::invalid_argument("rate_bound_reference: frameproof needs t >= 1");
            return Rational(1, t);
        case ReferenceBound::SeparableGeneral:
            if (t < 2) throw std::invalid_argument("rate_bound_reference: separable needs t >= 2");
            return Rational(1, t - 1);
        case ReferenceBound::Dyachkov:
            if (t < 2) throw std::invalid_argument("rate_bound_reference: dyachkov needs t >= 2");
            return Rational(2, t);
    }
    throw std::invalid_argument("rate_bound_reference: unknown kind");
}

// ---------------------------------------------------------------------------
// Entropy
// ---------------------------------------------------------------------------

struct EntropyDistribution {
    std::vector<double> masses;

    static EntropyDistribution from_masses(std::vector<double> masses) {
        double sum = 0;
        for (double m : masses) {
            if (m < 0) throw std::invalid_argument("EntropyDistribution: negative mass");
            sum += m;
        }
        if (std::abs(sum - 1.0) > 1e-12)
            throw std::invalid_argument("EntropyDistribution: masses sum to " +
                                        std::to_string(sum) + ", expected 1");
        return {std::move(masses)};
    }

    // Exact validation; the stored masses are the rounded doubles.
    static EntropyDistribution from_rationals(const std::vector<Rational>& masses) {
        Rational sum(0, 1);
        std::vector<double> out;
        out.reserve(masses.size());
        for (const Rational& m : masses) {
            if (m < Rational(0, 1)) throw std::invalid_argument("EntropyDistribution: negative mass");
            sum = sum + m;
            out.push_back(m.to_double());
        }
        if (sum != Rational(1, 1))
            throw std::invalid_argument("EntropyDistribution: masses sum to " + sum.str() +
                                        ", expected 1");
        return {std::move(out)};
    }
};

// Shannon entropy in bits, with 0 log 0 = 0.
inline double entropy_bits(const EntropyDistribution& dist) {
    double h = 0;
    for (double m : dist.masses)
        if (m > 0) h -= m * std::log2(m);
    return h;
}

struct ConstrainedEntropyMax {
    double bits = 0;
    EntropyDistribution dist;
};

// Maximum entropy over distributions on q^2-q+1 symbols whose first mass is
// at least 1/q: attained at alpha_0 = 1/q and 1/q^2 elsewhere, with value
// log2(q) * (2q-1)/q.
inline ConstrainedEntropyMax max_constrained_entropy(int q) {
    if (q < 2) throw std::invalid_argument("max_constrained_entropy: q must be >= 2");
    const double bits = std::log2(static_cast<double>(q)) * (2.0 * q - 1) / q;
    std::vector<Rational> masses;
    masses.reserve(static_cast<std::size_t>(q) * (q - 1) + 1);
    masses.emplace_back(1, q);
    const Rational rest(1, static_cast<std::int64_t>(q) * q);
    for (int i = 0; i < q * (q - 1); ++i) masses.push_back(rest);
    return {bits, EntropyDistribution::from_rationals(masses)};
}

namespace detail {

// Euclidean projection onto {x >= 0, sum x = total}.
inline void project_simplex(std::vector<double>& v, double total) {
    std::vector<double> u = v;
    std::sort(u.begin(), u.end(), std::greater<double>());
    double prefix = 0, theta = 0;
    int rho = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        prefix += u[i];
        const double t = (prefix - total) / static_cast<double>(i + 1);
        if (u[i] - t > 0) {
            theta = t;
            rho = static_cast<int>(i + 1);
        }
    }
    (void)rho;
    for (double& x : v) x = std::max(x - theta, 0.0);
}

}  // namespace detail

// Numerically maximizes Shannon entropy (bits) over the probability simplex of
// the given support size subject to a lower bound on the first mass, by
// projected gradient ascent with backtracking. Deterministic: starts from the
// uniform distribution projected onto the feasible set.
inline double simplex_max_entropy_numeric(int support, double first_mass_min, double tol,
                                          int max_iter = 100000) {
    if (support < 1) throw std::invalid_argument("simplex_max_entropy_numeric: empty support");
    if (!(tol > 0)) throw std::invalid_argument("simplex_max_entropy_numeric: tol must be > 0");
    if (first_mass_min < 0 || first_mass_min > 1)
        throw std::invalid_argument("simplex_max_entropy_numeric: first_mass_min outside [0, 1]");

    // Shifted coordinates z with x = z + (first_mass_min, 0, ..., 0); the
    // feasible set becomes the scaled simplex {z >= 0, sum z = 1 - fmm}.
    const double scaled_total = 1.0 - first_mass_min;
    const double ln2 = std::log(2.0);

    auto value = [&](const std::vector<double>& z) {
        double h = 0;
        for (std::size_t i = 0; i < z.size(); ++i) {
            const double x = z[i] + (i == 0 ? first_mass_min : 0.0);
            if (x > 0) h -= x * std::log2(x);
        }
        return h;
    };
    auto gradient = [&](const std::vector<double>& z, std::vector<double>& g) {
        for (std::size_t i = 0; i < z.size(); ++i) {
            const double x = z[i] + (i == 0 ? first_mass_min : 0.0);
            g[i] = x > 0 ? -(std::log(x) + 1.0) / ln2 : 1e9;
        }
    };

    std::vector<double> z(support, 1.0 / support);
    z[0] -= first_mass_min;
    detail::project_simplex(z, scaled_total);

    std::vector<double> g(support), trial(support);
    double h = value(z);
    double step = 1.0;
    int stall = 0;
    bool converged = false;
    for (int iter = 0; iter < max_iter && !converged; ++iter) {
        gradient(z, g);
        step = std::min(step * 2.0, 1e6);
        bool accepted = false;
        double h_new = h;
        double move = 0;
        for (int bt = 0; bt < 80; ++bt) {
            for (int i = 0; i < support; ++i) trial[i] = z[i] + step * g[i];
            detail::project_simplex(trial, scaled_total);
            move = 0;
            for (int i = 0; i < support; ++i) move = std::max(move, std::abs(trial[i] - z[i]));
            if (move <= 1e-16) break;  // projection did not move: stationary
            double dir_dot = 0;
            for (int i = 0; i < support; ++i) dir_dot += g[i] * (trial[i] - z[i]);
            h_new = value(trial);
            if (h_new >= h + 1e-4 * dir_dot) {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) {
            converged = true;  // no numerically useful ascent step remains
            break;
        }
        z.swap(trial);
        const double gain = h_new - h;
        h = h_new;
        if (gain <= 1e-15 && move <= 1e-10) {
            if (++stall >= 20) converged = true;
        } else {
            stall = 0;
        }
    }
    if (!converged)
        throw std::runtime_error("simplex_max_entropy_numeric: no convergence within " +
                                 std::to_string(max_iter) + " iterations");
    return h;
}

// Numeric cross-check of max_constrained_entropy over the q^2-q+1 simplex.
inline double max_constrained_entropy_numeric(int q, double tol) {
    if (q < 2) throw std::invalid_argument("max_constrained_entropy_numeric: q must be >= 2");
    return simplex_max_entropy_numeric(q * (q - 1) + 1, 1.0 / q, tol);
}

// Per-coordinate entropy cap of the Phi image: the constrained maximum over
// the variant alphabet with zero-symbol mass at least 1/q. Separable variant:
// log2(q) (2q-1)/q. B2 variant: log2(q) + (q-1)/q.
inline double phi_entropy_cap_bits(const PhiVariant& variant) {
    const double q = variant.q;
    if (variant.kind == PhiKind::Separable) return std::log2(q) * (2.0 * q - 1) / q;
    return std::log2(q) + (q - 1) / q;
}

// The prefix length e = floor(log_q(2M) - log_q(log2 M)) from the bound
// assembly, clamped to 0 for M = 1 where the expression is undefined.
inline int choose_prefix_length(std::uint64_t m, int q) {
    if (m < 1) throw std::invalid_argument("choose_prefix_length: M must be >= 1");
    if (q < 2) throw std::invalid_argument("choose_prefix_length: q must be >= 2");
    if (m == 1) return 0;
    const double x = (std::log2(2.0 * static_cast<double>(m)) -
                      std::log2(std::log2(static_cast<double>(m)))) /
                     std::log2(static_cast<double>(q));
    const double e = std::floor(x + 1e-9);
    return e < 0 ? 0 : static_cast<int>(e);
}

// ---------------------------------------------------------------------------
// Proof-chain verifier
// ---------------------------------------------------------------------------

struct ChainStep {
    std::string name;
    double lhs = 0;
    std::string relation;  // "<=" or "=="
    double rhs = 0;
    bool pass = false;
};

struct ChainReport {
    std::uint64_t m = 0;  // code size
    int e = 0;
    std::uint64_t r = 0;  // q^e, saturated at 2^64-1
    bool r_saturated = false;
    int f = 0;
    std::uint64_t sum_sq = 0;
    double h_xy = 0;           // log2 sum_sq
    double h_z_cap = 0;        // f * per-coordinate cap
    double h_z_empirical = 0;  // measured entropy of the Phi image (informational)
    Rational pr_zero;          // M / sum_sq
    double h_cond = 0;         // log2 M
    bool injective = false;
    std::vector<ChainStep> steps;
    bool pass = false;
};

namespace detail {

inline std::string witness_words_str(const std::vector<Word>& words, const std::vector<int>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ", ";
        s += word_str(words[idx[i]]);
    }
    return s + "}";
}

// M^2 <= r * sum_sq with saturation awareness; sum_sq >= M always, so a
// saturated r decides immediately.
inline bool cauchy_schwarz_holds(std::uint64_t m, std::uint64_t r, bool r_saturated,
                                 std::uint64_t sum_sq) {
    if (r_saturated || r >= m) return true;
    return static_cast<unsigned __int128>(m) * m <=
           static_cast<unsigned __int128>(r) * sum_sq;
}

}  // namespace detail

// Evaluates the finite-n inequality chain of the entropy proof on a concrete
// code: Cauchy-Schwarz over the prefix classes, pair entropy, injectivity of
// Phi, the zero-probability bound, the conditional entropy, and the combined
// entropy-cap inequality. Throws PredicateError when the code does not
// satisfy the predicate matching the variant.
inline ChainReport verify_proof_chain(const Code& code, int e, const PhiVariant& variant) {
    if (e < 0 || e > code.n())
        throw std::out_of_range("verify_proof_chain: e=" + std::to_string(e) +
                                " out of range [0, " + std::to_string(code.n()) + "]");
    if (variant.q != code.q())
        throw std::invalid_argument("verify_proof_chain: variant q != code q");

    if (variant.kind == PhiKind::Separable) {
        const auto check = check_separable(code, 2);
        if (!check.separable)
            throw PredicateError(
                "verify_proof_chain: code is not 2-bar-separable; subsets " +
                detail::witness_words_str(code.words(), check.witness->set1) + " and " +
                detail::witness_words_str(code.words(), check.witness->set2) +
                " have equal coordinate unions");
    } else {
        const auto check = check_b2(code);
        if (!check.b2) {
            const auto& w = *check.witness;
            throw PredicateError("verify_proof_chain: code is not B2; " +
                                 detail::word_str(code.words()[w.i]) + " + " +
                                 detail::word_str(code.words()[w.j]) + " = " +
                                 detail::word_str(code.words()[w.k]) + " + " +
                                 detail::word_str(code.words()[w.l]));
        }
    }

    ChainReport report;
    report.m = code.size();
    report.e = e;
    report.f = code.n() - e;
    report.r = pow_saturating(code.q(), e, &report.r_saturated);

    const PrefixPartition partition = partition_by_prefix(code, e);
    report.sum_sq = sum_of_squares(partition);
    report.h_xy = std::log2(static_cast<double>(report.sum_sq));
    report.pr_zero = Rational(static_cast<std::int64_t>(report.m),
                              static_cast<std::int64_t>(report.sum_sq));
    report.h_cond = std::log2(static_cast<double>(report.m));
    report.h_z_cap = report.f * phi_entropy_cap_bits(variant);

    const auto inj = check_injectivity(partition, variant);
    report.injective = inj.injective;

    {
        std::vector<double> masses;
        const auto counts = phi_image_multiplicities(partition, variant);
        masses.reserve(counts.size());
        for (std::uint64_t c : counts)
            masses.push_back(static_cast<double>(c) / static_cast<double>(report.sum_sq));
        report.h_z_empirical = entropy_bits(EntropyDistribution{std::move(masses)});
    }

    const bool cs = detail::cauchy_schwarz_holds(report.m, report.r, report.r_saturated,
                                                 report.sum_sq);
    const double r_over_m = report.r_saturated
                                ? std::numeric_limits<double>::infinity()
                                : static_cast<double>(report.r) / static_cast<double>(report.m);

    report.steps.push_back({"eq2.cauchy_schwarz",
                            static_cast<double>(report.m) * static_cast<double>(report.m) /
                                static_cast<double>(report.r),
                            "<=", static_cast<double>(report.sum_sq), cs});
    report.steps.push_back({"eq3.pair_entropy", report.h_xy, "==",
                            std::log2(static_cast<double>(report.sum_sq)), true});
    report.steps.push_back(
        {"injectivity", report.injective ? 1.0 : 0.0, "==", 1.0, report.injective});
    report.steps.push_back({"eq5.zero_prob", report.pr_zero.to_double(), "<=", r_over_m, cs});
    report.steps.push_back({"eq6.conditional_entropy", report.h_cond, "==", report.h_cond, true});

    const double cap_rhs = report.h_z_cap + report.pr_zero.to_double() * report.h_cond;
    report.steps.push_back(
        {"eq4.entropy_cap", report.h_xy, "<=", cap_rhs, report.h_xy <= cap_rhs + 1e-9});

    report.pass = true;
    for (const auto& s : report.steps) report.pass = report.pass && s.pass;
    return report;
}

// ---------------------------------------------------------------------------
// Figure data
// ---------------------------------------------------------------------------

inline constexpr const char* kBoundTableHeader = "q,rate_sep2,rate_b2,ref_sep_t2,ref_dyachkov_t2";

namespace detail {

inline std::string fmt12(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

}  // namespace detail

// One CSV row per q: the two theorem bounds plus the constant t=2 reference
// lines 1/(t-1) and 2/t. Values at 12 significant digits, '.' decimal
// separator.
inline std::vector<std::string> emit_bound_table(int q_min, int q_max) {
    if (q_min < 2 || q_max < q_min)
        throw std::invalid_argument("emit_bound_table: need 2 <= q_min <= q_max");
    std::vector<std::string> rows;
    rows.reserve(q_max - q_min + 1);
    const double ref_sep = rate_bound_reference(ReferenceBound::SeparableGeneral, 2).to_double();
    const double ref_dy = rate_bound_reference(ReferenceBound::Dyachkov, 2).to_double();
    for (int q = q_min; q <= q_max; ++q) {
        rows.push_back(std::to_string(q) + "," + detail::fmt12(rate_bound_sep2(q).to_double()) +
                       "," + detail::fmt12(rate_bound_b2(q)) + "," + detail::fmt12(ref_sep) + "," +
                       detail::fmt12(ref_dy));
    }
    return rows;
}

}  // namespace sepb2
