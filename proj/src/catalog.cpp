#include "domcert/catalog.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "domcert/certificate.hpp"
#include "domcert/oracle.hpp"

namespace domcert {

namespace {

struct Context {
    std::string data_dir;
    Tier tier = Tier::Quick;
    // certificates produced by earlier items, re-checked by the soundness item
    std::vector<Certificate> produced;
};

using ItemFn = bool (*)(Context &, std::string &);

struct Item {
    const char *id;
    const char *name;
    Tier tier;
    ItemFn fn;
};

// ---- shared helpers ------------------------------------------------------

bool saturate_and_check(Context &ctx, const Problem &pr, int k, const std::string &alpha_spec,
                        const std::vector<AlgVector> &seeds, const Limits &lim,
                        size_t max_x, std::string &detail) {
    AlgebraicNumber alpha;
    parse_alpha(alpha_spec, &alpha);
    OperatorSystem sys = canonical_pw_system(pr, k);
    SaturationResult res = saturate_pathwidth(sys, alpha, seeds, lim);
    if (!res.found) {
        detail += "[" + pr.str() + " @ " + alpha_spec + ": " + res.failure + ", |X|=" +
                  std::to_string(res.X.size()) + "] ";
        return false;
    }
    Verification v = verify_certificate(res.cert);
    if (!v.verified) {
        detail += "[" + pr.str() + ": refuted: " + v.reason + "] ";
        return false;
    }
    if (res.X.size() > max_x) {
        detail += "[" + pr.str() + ": |X|=" + std::to_string(res.X.size()) + " exceeds " +
                  std::to_string(max_x) + "] ";
        return false;
    }
    detail += "[" + pr.str() + " pw" + std::to_string(k) + ": |X|=" +
              std::to_string(res.X.size()) + "] ";
    ctx.produced.push_back(res.cert);
    return true;
}

bool saturate_tree_and_check(Context &ctx, const Problem &pr, bool with_union,
                             const std::string &alpha_spec, const std::vector<AlgVector> &seeds,
                             const Limits &lim, std::string &detail) {
    AlgebraicNumber alpha;
    parse_alpha(alpha_spec, &alpha);
    TreeSystem sys = canonical_tree_system(pr, with_union);
    SaturationResult res = saturate_tree(sys, alpha, seeds, lim);
    std::string cls = with_union ? "forest" : "tree";
    if (!res.found) {
        detail += "[" + pr.str() + " " + cls + " @ " + alpha_spec + ": " + res.failure + "] ";
        return false;
    }
    Verification v = verify_certificate(res.cert);
    if (!v.verified) {
        detail += "[" + pr.str() + " " + cls + ": refuted: " + v.reason + "] ";
        return false;
    }
    detail += "[" + pr.str() + " " + cls + ": |X|=" + std::to_string(res.X.size()) + "] ";
    ctx.produced.push_back(res.cert);
    return true;
}

// exact comparison count <= C * alpha^order in the field
bool within_bound(const BigInt &count, const Certificate &cert, int order) {
    AlgebraicNumber bound = cert.constant * cert.alpha.pow(order);
    AlgebraicNumber c = AlgebraicNumber::from_rational(cert.field, Rational(count));
    return (bound - c).sign() >= 0;
}

TreeScript random_script(std::mt19937 &rng, int leaves, bool with_union) {
    TreeScript t;
    if (leaves <= 1) {
        t.kind = TreeScript::Leaf;
        return t;
    }
    t.kind = with_union && (rng() % 2) ? TreeScript::Union : TreeScript::Compose;
    int left = 1 + (int)(rng() % (leaves - 1));
    t.a = std::make_unique<TreeScript>(random_script(rng, left, with_union));
    t.b = std::make_unique<TreeScript>(random_script(rng, leaves - left, with_union));
    return t;
}

Graph total_perfect_gadget(int l) {
    Graph g;
    g.n = 1 + 6 * l;
    int next = 1;
    for (int i = 0; i < l; i++) {
        int si = next++, ki = next++;
        g.add_edge(0, si);
        g.add_edge(si, ki);
        for (int j = 0; j < 4; j++) g.add_edge(ki, next++);
    }
    return g;
}

Graph spider_gadget() {
    Graph g;
    g.n = 7;
    for (int i = 0; i < 3; i++) {
        g.add_edge(0, 1 + 2 * i);
        g.add_edge(1 + 2 * i, 2 + 2 * i);
    }
    return g;
}

// ---- items ---------------------------------------------------------------

bool item_oracle_agreement(Context &, std::string &detail) {
    const std::tuple<const char *, const char *, const char *> specs[] = {
        {"{1}", "N", "all"},   {"{0}", "N+", "all"},    {"{0}", "{1}", "all"},
        {"{1}", "{1}", "all"}, {"N", "N+", "min"},      {"N", "{1}", "min"},
        {"N+", "N+", "min"},   {"{0}", "{0,1}", "max"}, {"", "", "special-max-induced-matching"},
    };
    bool ok = true;
    uint32_t seed = 1;
    for (auto &[s, r, m] : specs) {
        Problem pr = Problem::make(s, r, m);
        auto pw = cross_validate_pw(pr, 1, 5, 0, 0);
        auto tr = cross_validate_trees(pr, false, 8, 250, seed++);
        auto fo = cross_validate_trees(pr, true, 8, 250, seed++);
        if (!pw.ok() || !tr.ok() || !fo.ok()) {
            ok = false;
            detail += "[" + pr.str() + ": " +
                      (!pw.ok() ? pw.first_mismatch : !tr.ok() ? tr.first_mismatch
                                                               : fo.first_mismatch) +
                      "] ";
        }
    }
    if (ok) detail = "9 problems, exhaustive width-1 length<=5 plus 500 random tree/forest runs each";
    return ok;
}

bool item_induced_matching_pw1(Context &ctx, std::string &detail) {
    Problem pr = Problem::make("{1}", "N", "all");
    Limits lim;
    lim.time_limit = 50;
    if (!saturate_and_check(ctx, pr, 1, "root(1, poly x^3-x^2-1 in [1,2])", {}, lim, 10, detail))
        return false;
    double a = ctx.produced.back().alpha.to_double();
    if (std::abs(a - 1.465571) > 1e-4) {
        detail += "[alpha=" + std::to_string(a) + " off target] ";
        return false;
    }
    // path counts obey a(n) = a(n-1) + a(n-3)
    OperatorSystem sys = build_system(pr, 1);
    prune_accessibility(sys);
    std::vector<BigInt> cnt;
    for (int n = 1; n <= 12; n++) {
        std::vector<Descriptor> seq(n - 1, Descriptor{0, 1});
        cnt.push_back(evaluate_count(sys, seq, 0));
    }
    bool rec = cnt[0] == 1 && cnt[1] == 2 && cnt[2] == 3 && cnt[3] == 4 && cnt[4] == 6;
    for (int n = 3; n < 12; n++) rec = rec && cnt[n] == cnt[n - 1] + cnt[n - 3];
    if (!rec) {
        detail += "[path recurrence broken] ";
        return false;
    }
    detail += "path counts for n<=12 follow a(n)=a(n-1)+a(n-3)";
    return true;
}

bool item_pw1_sharp_constants(Context &ctx, std::string &detail) {
    Limits lim;
    lim.time_limit = 50;
    bool ok = true;
    ok &= saturate_and_check(ctx, Problem::make("{0}", "N+", "all"), 1, "nthroot(2,2)", {}, lim,
                             50, detail);
    ok &= saturate_and_check(ctx, Problem::make("{0}", "{1}", "all"), 1, "nthroot(2,2)", {}, lim,
                             50, detail);
    ok &= saturate_and_check(ctx, Problem::make("N", "N+", "min"), 1, "nthroot(2,2)", {}, lim, 50,
                             detail);
    ok &= saturate_and_check(ctx, Problem::make("{1}", "{1}", "all"), 1, "nthroot(4,5)", {}, lim,
                             50, detail);
    ok &= saturate_and_check(ctx, Problem::make("{0}", "{0,1}", "max"), 1, "nthroot(3,3)", {},
                             lim, 50, detail);
    ok &= saturate_and_check(ctx, Problem::make("N", "{1}", "min"), 1,
                             "root(1, poly x^3-x^2-1 in [1,2])", {}, lim, 50, detail);
    {
        AlgebraicNumber alpha;
        auto f = parse_alpha("root(1, poly x^3-x-1 in [1,2])", &alpha);
        auto seeds = load_vector_file(ctx.data_dir + "/min_total_dom_pw1.seed", f);
        std::string d;
        bool found = saturate_and_check(ctx, Problem::make("N+", "N+", "min"), 1,
                                        "root(1, poly x^3-x-1 in [1,2])", seeds, lim, 23, d);
        detail += d;
        if (found && ctx.produced.back().X.size() != 23) {
            detail += "[expected |X|=23] ";
            found = false;
        }
        ok &= found;
    }
    return ok;
}

bool item_mim_pw1(Context &ctx, std::string &detail) {
    Limits lim;
    lim.time_limit = 50;
    return saturate_and_check(ctx, Problem::make("", "", "special-max-induced-matching"), 1,
                              "nthroot(13,9)", {}, lim, 40, detail);
}

bool item_pw2_bounds(Context &ctx, std::string &detail) {
    Limits lim;
    lim.time_limit = 400;
    lim.max_points = 400;
    bool ok = true;
    ok &= saturate_and_check(ctx, Problem::make("{0}", "N+", "all"), 2, "nthroot(3,3)", {}, lim,
                             200, detail);
    ok &= saturate_and_check(ctx, Problem::make("{1}", "{1}", "all"), 2, "nthroot(3,3)", {}, lim,
                             200, detail);
    ok &= saturate_and_check(ctx, Problem::make("{0}", "{1}", "all"), 2, "nthroot(3,3)", {}, lim,
                             200, detail);
    ok &= saturate_and_check(ctx, Problem::make("{1}", "N", "all"), 2, "nthroot(4,3)", {}, lim,
                             200, detail);
    Graph tri = Graph::cycle(3);
    if (count_bruteforce(tri, Problem::make("{1}", "N", "all")) != 4 ||
        count_bruteforce(tri, Problem::make("{0}", "{1}", "all")) != 3) {
        detail += "[triangle counts off] ";
        ok = false;
    }
    return ok;
}

bool item_min_dom_pw2(Context &ctx, std::string &detail) {
    AlgebraicNumber alpha;
    auto f = parse_alpha("nthroot(6,4)", &alpha);
    auto seeds = load_vector_file(ctx.data_dir + "/min_dom_pw2.seed", f);
    Limits lim;
    lim.time_limit = 1200;
    lim.max_points = 500;
    Problem pr = Problem::make("", "", "special-min-dom-pw2");
    bool ok = saturate_and_check(ctx, pr, 2, "nthroot(6,4)", seeds, lim, 200, detail);
    if (count_bruteforce(Graph::cycle(4), pr) != 6) {
        detail += "[C4 count off] ";
        ok = false;
    }
    return ok;
}

bool item_trees_forests(Context &ctx, std::string &detail) {
    Limits lim;
    lim.time_limit = 120;
    bool ok = true;
    {
        AlgebraicNumber alpha;
        auto f = parse_alpha("nthroot(2,2)", &alpha);
        auto seeds = load_vector_file(ctx.data_dir + "/indep_dom_trees.seed", f);
        ok &= saturate_tree_and_check(ctx, Problem::make("{0}", "N+", "all"), true, "nthroot(2,2)",
                                      seeds, lim, detail);
    }
    ok &= saturate_tree_and_check(ctx, Problem::make("{1}", "N", "all"), true,
                                  "root(1, poly x^3-x^2-1 in [1,2])", {}, lim, detail);
    ok &= saturate_tree_and_check(ctx, Problem::make("{1}", "{1}", "all"), true, "nthroot(4,5)",
                                  {}, lim, detail);
    ok &= saturate_tree_and_check(ctx, Problem::make("{0}", "{1}", "all"), true, "nthroot(2,2)",
                                  {}, lim, detail);
    ok &= saturate_tree_and_check(ctx, Problem::make("{0}", "{1}", "all"), false, "nthroot(3,7)",
                                  {}, lim, detail);
    Problem tpd = Problem::make("{1}", "{1}", "all");
    if (count_bruteforce(spider_gadget(), Problem::make("{0}", "{1}", "all")) != 3 ||
        count_bruteforce(total_perfect_gadget(1), tpd) != 1 ||
        count_bruteforce(total_perfect_gadget(2), tpd) != 8 ||
        count_bruteforce(total_perfect_gadget(3), tpd) != 48) {
        detail += "[gadget counts off] ";
        ok = false;
    }
    return ok;
}

bool item_stored_certificate(Context &ctx, std::string &detail) {
    Certificate cert = load_certificate(ctx.data_dir + "/appendix_b.cert");
    Verification v = verify_certificate(cert);
    if (!v.verified) {
        detail = "refuted: " + v.reason;
        return false;
    }
    detail = "21-point stored certificate verified in a degree-" +
             std::to_string(cert.field->degree()) + " field";
    // sanity: tampering must be caught
    Certificate bad = cert;
    bad.X.erase(bad.X.begin() + 4);
    if (verify_certificate(bad).verified) {
        detail = "tampered certificate was accepted";
        return false;
    }
    return true;
}

bool item_long_runs(Context &ctx, std::string &detail) {
    Limits lim;
    lim.time_limit = 12 * 3600;
    lim.max_points = 5000;
    lim.max_rounds = 200;
    bool ok = saturate_and_check(ctx, Problem::make("", "", "special-max-induced-matching"), 2,
                                 "nthroot(5,4)", {}, lim, 1000, detail);
    // stretch goal; a limit-bounded failure is reported but does not fail the item
    {
        AlgebraicNumber alpha;
        parse_alpha("nthroot(95,13)", &alpha);
        TreeSystem sys = canonical_tree_system(Problem::make("N", "N+", "min"), false);
        Limits tlim;
        tlim.time_limit = 3600;
        tlim.max_points = 2000;
        SaturationResult res = saturate_tree(sys, alpha, {}, tlim);
        if (res.found && verify_certificate(res.cert).verified) {
            detail += "[minimal dominating trees: |X|=" + std::to_string(res.X.size()) + "] ";
            ctx.produced.push_back(res.cert);
        } else {
            detail += "[minimal dominating trees (stretch): " +
                      (res.found ? std::string("refuted") : res.failure) + " after " +
                      std::to_string(res.rounds) + " rounds, |X|=" +
                      std::to_string(res.X.size()) + "] ";
        }
    }
    return ok;
}

bool item_soundness(Context &ctx, std::string &detail) {
    if (ctx.produced.empty()) {
        detail = "no certificates produced in this run";
        return true;
    }
    size_t checked = 0;
    for (const Certificate &cert : ctx.produced) {
        if (cert.graph_class == "pw1" || cert.graph_class == "pw2") {
            int k = cert.graph_class == "pw2" ? 2 : 1;
            OperatorSystem sys = build_system(cert.problem, k);
            prune_accessibility(sys);
            auto descs = all_descriptors(k);
            unsigned cmasks = 1u << (k * (k - 1) / 2);
            auto check = [&](const std::vector<Descriptor> &seq) {
                for (unsigned cm = 0; cm < cmasks; cm++) {
                    BigInt c = evaluate_count(sys, seq, cm);
                    checked++;
                    if (!within_bound(c, cert, k + (int)seq.size())) {
                        detail += "[" + cert.problem.str() + " pw" + std::to_string(k) +
                                  ": count " + c.get_str() + " exceeds bound at order " +
                                  std::to_string(k + seq.size()) + "] ";
                        return false;
                    }
                }
                return true;
            };
            if (k == 1) {
                // exhaustive over all scripts of length <= 5
                std::vector<int> seq;
                for (int len = 0; len <= 5; len++) {
                    seq.assign(len, 0);
                    for (;;) {
                        std::vector<Descriptor> s;
                        for (int i : seq) s.push_back(descs[i]);
                        if (!check(s)) return false;
                        int i = len - 1;
                        while (i >= 0 && ++seq[i] == (int)descs.size()) seq[i--] = 0;
                        if (i < 0) break;
                    }
                }
            } else {
                std::mt19937 rng(99);
                for (int t = 0; t < 500; t++) {
                    std::vector<Descriptor> s;
                    int len = (int)(rng() % 7);
                    for (int i = 0; i < len; i++) s.push_back(descs[rng() % descs.size()]);
                    if (!check(s)) return false;
                }
            }
        } else {
            bool with_union = cert.graph_class == "forest";
            TreeSystem sys = build_tree_system(cert.problem, with_union);
            prune_tree_system(sys);
            std::mt19937 rng(7);
            for (int t = 0; t < 500; t++) {
                int leaves = 1 + (int)(rng() % 8);
                TreeScript s = random_script(rng, leaves, with_union);
                BigInt c = tree_count(sys, s);
                checked++;
                if (!within_bound(c, cert, leaves)) {
                    detail += "[" + cert.problem.str() + " " + cert.graph_class + ": count " +
                              c.get_str() + " exceeds bound at order " + std::to_string(leaves) +
                              "] ";
                    return false;
                }
            }
        }
    }
    detail = std::to_string(checked) + " exact count-vs-bound comparisons over " +
             std::to_string(ctx.produced.size()) + " certificates";
    return true;
}

bool item_lower_bound(Context &, std::string &detail) {
    OperatorSystem sys = canonical_pw_system(Problem::make("{1}", "N", "all"), 1);
    LowerBound lb = lower_bound(sys, 3);
    Rational target(146, 100), tp = 1;
    for (int i = 0; i < lb.length; i++) tp *= target;
    std::ostringstream os;
    os << "numeric lower bound " << lb.value << " from a length-" << lb.length << " product";
    detail = os.str();
    return lb.length > 0 && lb.bound >= tp;
}

const Item items[] = {
    {"criterion-01", "counting engine agrees with brute force", Tier::Quick,
     item_oracle_agreement},
    {"criterion-02", "induced matchings, width 1", Tier::Quick, item_induced_matching_pw1},
    {"criterion-03", "width-1 sharp constants", Tier::Quick, item_pw1_sharp_constants},
    {"criterion-04", "maximal induced matchings, width 1", Tier::Quick, item_mim_pw1},
    {"criterion-05", "width-2 bounds", Tier::Standard, item_pw2_bounds},
    {"criterion-06", "minimal dominating sets, width 2", Tier::Standard, item_min_dom_pw2},
    {"criterion-07", "trees and forests", Tier::Standard, item_trees_forests},
    {"criterion-08", "stored certificate verification", Tier::Standard, item_stored_certificate},
    {"criterion-09", "long-running width-2 bounds", Tier::Long, item_long_runs},
    {"criterion-10", "certified bounds dominate exact counts", Tier::Quick, item_soundness},
    {"criterion-11", "spectral lower bound", Tier::Quick, item_lower_bound},
};

}  // namespace

int run_catalog(Tier max_tier, const std::string &data_dir, std::ostream &out,
                std::vector<CatalogResult> *results) {
    Context ctx;
    ctx.data_dir = data_dir;
    ctx.tier = max_tier;
    int failures = 0;
    for (const Item &item : items) {
        CatalogResult r;
        r.id = item.id;
        r.name = item.name;
        r.tier = item.tier;
        if (item.tier > max_tier) {
            r.skipped = true;
            out << "SKIP " << r.id << " " << r.name << "\n" << std::flush;
            if (results) results->push_back(r);
            continue;
        }
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.passed = item.fn(ctx, r.detail);
        } catch (const std::exception &e) {
            r.passed = false;
            r.detail += std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!r.passed) failures++;
        std::ostringstream sec;
        sec.precision(1);
        sec << std::fixed << r.seconds;
        out << (r.passed ? "PASS " : "FAIL ") << r.id << " " << r.name << " (" << sec.str()
            << "s)" << (r.detail.empty() ? "" : "  -- " + r.detail) << "\n"
            << std::flush;
        if (results) results->push_back(r);
    }
    return failures;
}

}  // namespace domcert
