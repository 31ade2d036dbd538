// Command-line front end: verify, search, bounds, prove-chain, entropy.
// Machine output goes to stdout, diagnostics to stderr. Exit codes: 0 for a
// positive result, 1 for negative results and predicate/guard/data errors,
// 2 for usage errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "sepb2/bounds.hpp"
#include "sepb2/code.hpp"
#include "sepb2/phimap.hpp"
#include "sepb2/predicates.hpp"
#include "sepb2/search.hpp"

namespace {

using namespace sepb2;

Code load_code(const std::string& path) {
    if (path == "-") return parse_code(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
    return parse_code(in);
}

std::string words_list(const Code& code, const std::vector<int>& idx) {
    std::string s = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) s += ", ";
        s += detail::word_str(code.words()[idx[i]]);
    }
    return s + "}";
}

int run_verify(const std::string& input, const std::string& property_str, bool disjoint,
               std::uint64_t budget) {
    const CodeProperty property = CodeProperty::parse(property_str);
    const Code code = load_code(input);
    const SeparableReading reading =
        disjoint ? SeparableReading::DisjointSubsets : SeparableReading::DistinctSubsets;

    bool ok = false;
    std::string witness;
    switch (property.kind) {
        case PropertyKind::SeparableBar: {
            const auto r = check_separable(code, property.t, reading, budget);
            ok = r.separable;
            if (!ok)
                witness = "witness: subsets " + words_list(code, r.witness->set1) + " and " +
                          words_list(code, r.witness->set2) + " have equal coordinate unions";
            break;
        }
        case PropertyKind::Frameproof: {
            const auto r = check_frameproof(code, property.t, budget);
            ok = r.frameproof;
            if (!ok)
                witness = "witness: " + words_list(code, r.witness->subset) + " covers " +
                          detail::word_str(code.words()[r.witness->covered]);
            break;
        }
        case PropertyKind::B2: {
            const auto r = check_b2(code);
            ok = r.b2;
            if (!ok) {
                const auto& w = *r.witness;
                witness = "witness: " + detail::word_str(code.words()[w.i]) + " + " +
                          detail::word_str(code.words()[w.j]) + " = " +
                          detail::word_str(code.words()[w.k]) + " + " +
                          detail::word_str(code.words()[w.l]);
            }
            break;
        }
    }
    std::cout << (ok ? "true" : "false") << "\n";
    if (!ok) std::cout << witness << "\n";
    return ok ? 0 : 1;
}

int run_search(int q, int n, const std::string& property_str, std::uint64_t node_limit,
               bool symmetry, int workers, bool disjoint, std::uint64_t progress) {
    SearchConfig config;
    config.params = CodeParams{q, n};
    config.property = CodeProperty::parse(property_str);
    config.node_limit = node_limit;
    config.use_symmetry = symmetry;
    config.workers = workers;
    config.reading = disjoint ? SeparableReading::DisjointSubsets
                              : SeparableReading::DistinctSubsets;
    config.progress_interval = progress;

    const SearchResult result = max_code_search(config);
    serialize_code(result.witness, std::cout);
    std::cout << "max_size=" << result.max_size << " nodes=" << result.nodes_explored
              << " complete=" << (result.complete ? "true" : "false") << "\n";
    return 0;
}

int run_bounds(int q_min, int q_max, const std::string& out_path) {
    const auto rows = emit_bound_table(q_min, q_max);
    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open output file '" + out_path + "'");
        out = &file;
    }
    *out << kBoundTableHeader << "\n";
    for (const auto& row : rows) *out << row << "\n";
    return 0;
}

int run_prove_chain(const std::string& input, const std::string& variant_str,
                    const std::string& e_str) {
    const Code code = load_code(input);
    PhiVariant variant = variant_str == "sep" ? PhiVariant::separable(code.q())
                                              : PhiVariant::b2diff(code.q());
    int e = 0;
    if (e_str == "auto") {
        e = std::min(choose_prefix_length(code.size(), code.q()), code.n());
        std::cerr << "prove-chain: auto prefix length e=" << e << "\n";
    } else {
        e = std::stoi(e_str);
    }

    const ChainReport report = verify_proof_chain(code, e, variant);

    char line[160];
    std::snprintf(line, sizeof(line), "chain report: M=%llu e=%d r=%llu%s f=%d sum_sq=%llu",
                  static_cast<unsigned long long>(report.m), report.e,
                  static_cast<unsigned long long>(report.r), report.r_saturated ? "(sat)" : "",
                  report.f, static_cast<unsigned long long>(report.sum_sq));
    std::cout << line << "\n";
    std::snprintf(line, sizeof(line), "%-24s %16s %-3s %-16s %s", "step", "lhs", "rel", "rhs",
                  "result");
    std::cout << line << "\n";
    for (const auto& step : report.steps) {
        std::snprintf(line, sizeof(line), "%-24s %16.10g %-3s %-16.10g %s", step.name.c_str(),
                      step.lhs, step.relation.c_str(), step.rhs, step.pass ? "pass" : "FAIL");
        std::cout << line << "\n";
    }

    std::cout << "M=" << report.m << "\n"
              << "e=" << report.e << "\n"
              << "r=" << report.r << "\n"
              << "f=" << report.f << "\n"
              << "sum_sq=" << report.sum_sq << "\n"
              << "h_xy=" << detail::fmt12(report.h_xy) << "\n"
              << "h_z_cap=" << detail::fmt12(report.h_z_cap) << "\n"
              << "h_z_empirical=" << detail::fmt12(report.h_z_empirical) << "\n"
              << "pr_zero=" << report.pr_zero.str() << "\n"
              << "h_cond=" << detail::fmt12(report.h_cond) << "\n"
              << "injective=" << (report.injective ? "true" : "false") << "\n";
    for (const auto& step : report.steps)
        std::cout << "step." << step.name << "=" << (step.pass ? "pass" : "fail") << "\n";
    std::cout << "pass=" << (report.pass ? "true" : "false") << "\n";
    return report.pass ? 0 : 1;
}

int run_entropy(int q, const std::string& mode, double tol) {
    const double value = mode == "numeric" ? max_constrained_entropy_numeric(q, tol)
                                           : max_constrained_entropy(q).bits;
    std::cout << detail::fmt12(value) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for separable / frameproof / B2 code verification, rate bounds,\n"
                 "entropy-chain checking, and exhaustive maximum-code search"};
    app.require_subcommand(1);

    std::string input, property_str = "sep2", variant_str = "sep", e_str = "auto", out_path;
    int q = 2, n = 1, q_min = 2, q_max = 17, workers = 1;
    std::uint64_t node_limit = 100'000'000, budget = kDefaultSubsetBudget;
    std::uint64_t progress = 1'000'000;
    bool symmetry = false, disjoint = false;
    std::string mode = "analytic";
    double tol = 1e-9;

    auto* verify = app.add_subcommand("verify", "Check a code file against a property");
    verify->add_option("--input", input, "code file, or - for stdin")->required();
    verify->add_option("--property", property_str, "sep2 | sep:<t> | fp:<t> | b2")->required();
    verify->add_flag("--disjoint-reading", disjoint,
                     "use the disjoint-subsets reading of separability");
    verify->add_option("--budget", budget, "subset-pair work budget");

    auto* search = app.add_subcommand("search", "Exhaustive maximum-code search");
    search->add_option("--q", q, "alphabet size")->required();
    search->add_option("--n", n, "word length")->required();
    search->add_option("--property", property_str, "sep2 | sep:<t> | fp:<t> | b2")->required();
    search->add_option("--node-limit", node_limit, "abort after this many search nodes");
    search->add_flag("--symmetry", symmetry, "restrict roots by sound symmetries");
    search->add_option("--workers", workers, "worker threads");
    search->add_flag("--disjoint-reading", disjoint,
                     "use the disjoint-subsets reading of separability");
    search->add_option("--progress", progress, "progress report period in nodes (0 = silent)");

    auto* bounds = app.add_subcommand("bounds", "Emit the rate-bound CSV table");
    bounds->add_option("--q-min", q_min, "first alphabet size")->required();
    bounds->add_option("--q-max", q_max, "last alphabet size")->required();
    bounds->add_option("--out", out_path, "output file (default stdout)");

    auto* chain = app.add_subcommand("prove-chain", "Evaluate the entropy proof chain on a code");
    chain->add_option("--input", input, "code file, or - for stdin")->required();
    chain->add_option("--variant", variant_str, "sep | b2diff")
        ->check(CLI::IsMember({"sep", "b2diff"}));
    chain->add_option("--e", e_str, "prefix length, or auto");

    auto* entropy = app.add_subcommand("entropy", "Maximum constrained per-coordinate entropy");
    entropy->add_option("--q", q, "alphabet size")->required();
    entropy->add_option("--mode", mode, "analytic | numeric")
        ->check(CLI::IsMember({"analytic", "numeric"}));
    entropy->add_option("--tol", tol, "numeric mode tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(verify)) return run_verify(input, property_str, disjoint, budget);
        if (app.got_subcommand(search))
            return run_search(q, n, property_str, node_limit, symmetry, workers, disjoint,
                              progress);
        if (app.got_subcommand(bounds)) return run_bounds(q_min, q_max, out_path);
        if (app.got_subcommand(chain)) return run_prove_chain(input, variant_str, e_str);
        if (app.got_subcommand(entropy)) return run_entropy(q, mode, tol);
    } catch (const std::invalid_argument& e) {
        // bad property strings or out-of-range flag values are usage errors
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
