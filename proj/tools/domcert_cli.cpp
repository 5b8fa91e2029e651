#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "domcert/catalog.hpp"
#include "domcert/certificate.hpp"
#include "domcert/oracle.hpp"

using namespace domcert;

namespace {

// exit codes: 0 success/verified, 1 refuted/mismatch, 2 resource limit, 3 input error
constexpr int kOk = 0, kRefuted = 1, kLimit = 2, kInput = 3;

struct ProblemFlags {
    std::string sigma = "N", rho = "N", mode = "all";
    Problem make() const { return Problem::make(sigma, rho, mode); }
};

void add_problem_flags(CLI::App *cmd, ProblemFlags &pf) {
    cmd->add_option("--sigma", pf.sigma, "membership-count set, e.g. \"{1}\", \"N+\", \"{0,2+3k}\"");
    cmd->add_option("--rho", pf.rho, "domination-count set for vertices outside the set");
    cmd->add_option("--mode", pf.mode,
                    "all | min | max | special-max-induced-matching | special-min-dom-pw2");
}

int class_width(const std::string &cls) {
    if (cls == "pw1") return 1;
    if (cls == "pw2") return 2;
    return 0;  // tree / forest
}

void check_class(const std::string &cls) {
    if (cls != "pw1" && cls != "pw2" && cls != "tree" && cls != "forest")
        throw InputError("--class must be pw1, pw2, tree or forest");
}

int cmd_bound(const ProblemFlags &pf, const std::string &cls, const std::string &alpha_spec,
              const std::string &seed_file, const std::string &out_path, const Limits &lim) {
    check_class(cls);
    Problem pr = pf.make();
    AlgebraicNumber alpha;
    auto f = parse_alpha(alpha_spec, &alpha);
    std::vector<AlgVector> seeds;
    if (!seed_file.empty()) seeds = load_vector_file(seed_file, f);

    SaturationResult res;
    if (int k = class_width(cls)) {
        res = saturate_pathwidth(canonical_pw_system(pr, k), alpha, seeds, lim);
    } else {
        res = saturate_tree(canonical_tree_system(pr, cls == "forest"), alpha, seeds, lim);
    }
    if (!res.found) {
        std::cerr << "no certificate: " << res.failure << " (rounds=" << res.rounds
                  << ", |X|=" << res.X.size() << ")\n";
        return kLimit;
    }
    Verification v = verify_certificate(res.cert, lim);
    if (!v.verified) {
        std::cerr << "internal check failed: " << v.reason << "\n";
        return kRefuted;
    }
    std::string text = format_certificate(res.cert);
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw InputError("cannot write " + out_path);
        out << text;
    }
    std::cerr << "certificate found: |X|=" << res.X.size() << ", rounds=" << res.rounds
              << ", membership tests=" << res.lp_calls << "\n";
    std::cerr << "bound: count(n) <= " << res.cert.constant.str() << " * alpha^n with alpha = "
              << res.cert.alpha.to_double() << "\n";
    return kOk;
}

int cmd_count(const ProblemFlags &pf, const std::string &cls, const std::string &script_path,
              const std::string &edges_path) {
    Problem pr = pf.make();
    if (!edges_path.empty()) {
        std::ifstream in(edges_path);
        if (!in) throw InputError("cannot open " + edges_path);
        Graph g = Graph::read_edge_list(in);
        std::cout << count_bruteforce(g, pr).get_str() << "\n";
        return kOk;
    }
    if (script_path.empty()) throw InputError("count needs --script or --edges");
    check_class(cls);
    std::ifstream in(script_path);
    if (!in) throw InputError("cannot open " + script_path);
    if (int k = class_width(cls)) {
        ExtensionScript script = parse_extension_script(in, k);
        OperatorSystem sys = build_system(pr, k);
        prune_accessibility(sys);
        std::cout << evaluate_count(sys, script.steps, script.completion_mask).get_str() << "\n";
    } else {
        std::stringstream ss;
        ss << in.rdbuf();
        TreeScript script = parse_tree_script(ss.str());
        TreeSystem sys = build_tree_system(pr, cls == "forest");
        prune_tree_system(sys);
        std::cout << tree_count(sys, script).get_str() << "\n";
    }
    return kOk;
}

int cmd_validate(const ProblemFlags &pf, const std::string &cls, int max_steps, int samples,
                 uint32_t seed) {
    check_class(cls);
    Problem pr = pf.make();
    CrossValidateResult res;
    if (int k = class_width(cls))
        res = cross_validate_pw(pr, k, max_steps, samples, seed);
    else
        res = cross_validate_trees(pr, cls == "forest", max_steps, samples ? samples : 200, seed);
    std::cout << "cases=" << res.cases << " mismatches=" << res.mismatches << "\n";
    if (res.mismatches) {
        std::cout << res.first_mismatch << "\n";
        return kRefuted;
    }
    return kOk;
}

int cmd_verify(const std::string &path, const Limits &lim) {
    Certificate cert = load_certificate(path);
    Verification v = verify_certificate(cert, lim);
    if (v.verified) {
        std::cout << "verified: " << cert.problem.str() << "; class=" << cert.graph_class
                  << "; |X|=" << cert.X.size() << "; alpha=" << cert.alpha.to_double() << "\n";
        return kOk;
    }
    std::cout << "refuted: " << v.reason << "\n";
    return kRefuted;
}

int cmd_lower(const ProblemFlags &pf, const std::string &cls, int depth) {
    if (cls != "pw1" && cls != "pw2") throw InputError("lower supports --class pw1 or pw2");
    OperatorSystem sys = canonical_pw_system(pf.make(), class_width(cls));
    LowerBound lb = lower_bound(sys, depth);
    std::cout << "numeric (non-certified value) lower bound: " << lb.value << "\n";
    std::cout << "exact witness: spectral bound " << rational_str(lb.bound) << " over a length-"
              << lb.length << " product, word =";
    for (int w : lb.word) std::cout << " " << w;
    std::cout << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"domcert: exact counting and certified growth-rate bounds for "
                 "(sigma,rho)-dominating sets on pathwidth-1/2 graphs, trees and forests"};
    app.require_subcommand(1);

    Limits lim;
    app.add_option("--workers", lim.workers, "worker threads (0 = hardware default)");
    app.add_option("--max-x", lim.max_points, "point budget for saturation");
    app.add_option("--max-rounds", lim.max_rounds, "round budget for saturation");
    app.add_option("--time-limit", lim.time_limit, "wall-clock budget in seconds (0 = none)");

    ProblemFlags pf;
    std::string cls = "pw1", alpha_spec, seed_file, out_path, script_path, edges_path, cert_path;
    int max_steps = 5, samples = 0, depth = 3;
    uint32_t seed = 1;
    std::string data_dir = "data";
    bool quick = false, standard = false, longtier = false;

    auto *bound = app.add_subcommand("bound", "compute and write a growth-rate certificate");
    add_problem_flags(bound, pf);
    bound->add_option("--class", cls, "pw1 | pw2 | tree | forest");
    bound->add_option("--alpha", alpha_spec,
                      "growth rate: \"3/2\", \"nthroot(r,n)\" or "
                      "\"root(k, poly x^3-x^2-1 in [1,2])\"")->required();
    bound->add_option("--seed-file", seed_file, "extra start vectors, one per line");
    bound->add_option("--out", out_path, "certificate output path (default stdout)");

    auto *count = app.add_subcommand("count", "count sets on an explicit graph");
    add_problem_flags(count, pf);
    count->add_option("--class", cls, "pw1 | pw2 | tree | forest (for --script)");
    count->add_option("--script", script_path, "extension script or tree expression file");
    count->add_option("--edges", edges_path, "edge-list file (brute force, <= 24 vertices)");

    auto *validate = app.add_subcommand("validate", "cross-check the engine against brute force");
    add_problem_flags(validate, pf);
    validate->add_option("--class", cls, "pw1 | pw2 | tree | forest");
    validate->add_option("--max-steps", max_steps, "max script length / leaves");
    validate->add_option("--samples", samples, "0 = exhaustive (pathwidth only)");
    validate->add_option("--seed", seed, "random seed for sampled runs");

    auto *verify = app.add_subcommand("verify", "re-check a certificate file");
    verify->add_option("certificate", cert_path, "certificate file")->required();

    auto *lower = app.add_subcommand("lower", "numeric spectral lower bound (non-certified)");
    add_problem_flags(lower, pf);
    lower->add_option("--class", cls, "pw1 | pw2");
    lower->add_option("--depth", depth, "max product length");

    auto *catalog = app.add_subcommand("catalog", "run the built-in reproduction suite");
    catalog->add_flag("--quick", quick, "quick items only (default)");
    catalog->add_flag("--standard", standard, "quick + standard items");
    catalog->add_flag("--long", longtier, "all items, including multi-hour runs");
    catalog->add_option("--data-dir", data_dir, "directory with seed files and certificates");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return cmd_bound(pf, cls, alpha_spec, seed_file, out_path, lim);
        if (count->parsed()) return cmd_count(pf, cls, script_path, edges_path);
        if (validate->parsed()) return cmd_validate(pf, cls, max_steps, samples, seed);
        if (verify->parsed()) return cmd_verify(cert_path, lim);
        if (lower->parsed()) return cmd_lower(pf, cls, depth);
        if (catalog->parsed()) {
            Tier tier = longtier ? Tier::Long : standard ? Tier::Standard : Tier::Quick;
            int failures = run_catalog(tier, data_dir, std::cout);
            return failures ? kRefuted : kOk;
        }
    } catch (const LimitError &e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kLimit;
    } catch (const InputError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    }
    return kInput;
}
