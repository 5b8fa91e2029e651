#include <random>
#include <sstream>

#include "doctest.h"
#include "domcert/graph.hpp"
#include "domcert/oracle.hpp"

using namespace domcert;

TEST_CASE("extension script parsing and graph building") {
    std::stringstream in(
        "keep=new edges=1\n"
        "keep=0 edges=1\n"
        "complete edges=0\n");
    ExtensionScript s = parse_extension_script(in, 1);
    CHECK(s.steps.size() == 2);
    CHECK(s.steps[0].o == -1);
    CHECK(s.steps[0].edges == 1);
    CHECK(s.steps[1].o == 0);
    BuiltGraph bg = build_graph(s);
    CHECK(bg.completed.n == 3);
    CHECK(bg.completed.edges.size() == 2);
    CHECK(bg.separator == std::vector<int>{2});
    // round trip
    std::stringstream rt(format_extension_script(s));
    ExtensionScript s2 = parse_extension_script(rt, 1);
    CHECK(s2.steps.size() == s.steps.size());
    CHECK(s2.completion_mask == s.completion_mask);
}

TEST_CASE("path counts through the width-1 engine") {
    // P_n via repeated keep=0 edges=1
    OperatorSystem sys = build_system(Problem::make("{1}", "N", "all"), 1);
    auto pr = Problem::make("{1}", "N", "all");
    std::vector<BigInt> a;
    for (int n = 1; n <= 12; n++) {
        std::vector<Descriptor> seq(n - 1, Descriptor{0, 1});
        a.push_back(evaluate_count(sys, seq, 0));
    }
    CHECK(a[0] == 1);
    CHECK(a[1] == 2);
    CHECK(a[2] == 3);
    CHECK(a[3] == 4);
    CHECK(a[4] == 6);
    for (int n = 3; n < 12; n++) CHECK(a[n] == a[n - 1] + a[n - 3]);
}

TEST_CASE("C4 as a width-2 script: minimal dominating sets") {
    std::stringstream in(
        "keep=0 edges=11\n"
        "keep=1 edges=10\n"
        "complete edges=1\n");
    ExtensionScript s = parse_extension_script(in, 2);
    BuiltGraph bg = build_graph(s);
    CHECK(bg.completed.n == 4);
    CHECK(bg.completed.edges.size() == 4);
    // it is really C4: every vertex has degree 2 and it is connected
    auto nb = bg.completed.neighbor_masks();
    for (int v = 0; v < 4; v++) CHECK(std::popcount(nb[v]) == 2);

    OperatorSystem sys = build_system(Problem::make("", "", "special-min-dom-pw2"), 2);
    CHECK(evaluate_count(sys, s.steps, s.completion_mask) == 6);

    OperatorSystem gen = build_system(Problem::make("N", "N+", "min"), 2);
    CHECK(evaluate_count(gen, s.steps, s.completion_mask) == 6);
}

TEST_CASE("triangle as a width-2 script: induced matchings and perfect codes") {
    std::stringstream in(
        "keep=0 edges=11\n"
        "complete edges=1\n");
    ExtensionScript s = parse_extension_script(in, 2);
    BuiltGraph bg = build_graph(s);
    CHECK(bg.completed.n == 3);
    CHECK(bg.completed.edges.size() == 3);
    OperatorSystem im = build_system(Problem::make("{1}", "N", "all"), 2);
    CHECK(evaluate_count(im, s.steps, s.completion_mask) == 4);
    OperatorSystem pc = build_system(Problem::make("{0}", "{1}", "all"), 2);
    CHECK(evaluate_count(pc, s.steps, s.completion_mask) == 3);
}

TEST_CASE("pruning preserves counts and psi relates to the oracle") {
    auto pr = Problem::make("N", "{1}", "min");
    OperatorSystem sys = build_system(pr, 1);
    OperatorSystem pruned = sys;
    prune_accessibility(pruned);
    CHECK(pruned.m < sys.m);
    std::mt19937 rng(11);
    auto descs = all_descriptors(1);
    for (int t = 0; t < 60; t++) {
        std::vector<Descriptor> seq;
        int len = rng() % 6;
        for (int i = 0; i < len; i++) seq.push_back(descs[rng() % descs.size()]);
        CHECK(evaluate_count(sys, seq, 0) == evaluate_count(pruned, seq, 0));
    }
}

TEST_CASE("system fingerprints are stable and sensitive") {
    OperatorSystem a = build_system(Problem::make("{1}", "N", "all"), 1);
    OperatorSystem b = build_system(Problem::make("{1}", "N", "all"), 1);
    CHECK(a.fingerprint() == b.fingerprint());
    OperatorSystem c = build_system(Problem::make("{1}", "{1}", "all"), 1);
    CHECK(a.fingerprint() != c.fingerprint());
    OperatorSystem d = a;
    prune_accessibility(d);
    CHECK(a.fingerprint() != d.fingerprint());
}
