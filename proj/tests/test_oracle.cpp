#include <sstream>

#include "doctest.h"
#include "domcert/oracle.hpp"

using namespace domcert;

namespace {

// root s with l arms: s - s_i - k_i, k_i carrying 4 leaves
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

// spider with three legs of length two
Graph perfect_code_gadget() {
    Graph g;
    g.n = 7;
    for (int i = 0; i < 3; i++) {
        g.add_edge(0, 1 + 2 * i);
        g.add_edge(1 + 2 * i, 2 + 2 * i);
    }
    return g;
}

}  // namespace

TEST_CASE("named sanity counts") {
    CHECK(count_bruteforce(Graph::cycle(3), Problem::make("{1}", "N", "all")) == 4);
    CHECK(count_bruteforce(Graph::path(2), Problem::make("{0}", "{1}", "all")) == 2);
    CHECK(count_bruteforce(Graph::path(2), Problem::make("{0}", "N+", "all")) == 2);
    CHECK(count_bruteforce(Graph::path(3), Problem::make("{0}", "{0,1}", "max")) == 3);
    CHECK(count_bruteforce(Graph::cycle(4), Problem::make("N", "N+", "min")) == 6);
    CHECK(count_bruteforce(Graph::cycle(4), Problem::make("", "", "special-min-dom-pw2")) == 6);
    // 5-star: perfect total dominating sets
    Graph star;
    star.n = 5;
    for (int i = 1; i < 5; i++) star.add_edge(0, i);
    CHECK(count_bruteforce(star, Problem::make("{1}", "{1}", "all")) == 4);
    CHECK(count_bruteforce(total_perfect_gadget(2), Problem::make("{1}", "{1}", "all")) == 8);
    CHECK(count_bruteforce(total_perfect_gadget(3), Problem::make("{1}", "{1}", "all")) == 48);
    CHECK(count_bruteforce(perfect_code_gadget(), Problem::make("{0}", "{1}", "all")) == 3);
}

TEST_CASE("path induced matchings follow a(n) = a(n-1) + a(n-3)") {
    auto pr = Problem::make("{1}", "N", "all");
    std::vector<BigInt> a;
    for (int n = 1; n <= 10; n++) a.push_back(count_bruteforce(Graph::path(n), pr));
    CHECK(a[0] == 1);
    CHECK(a[1] == 2);
    CHECK(a[2] == 3);
    CHECK(a[3] == 4);
    CHECK(a[4] == 6);
    for (int n = 3; n < 10; n++) CHECK(a[n] == a[n - 1] + a[n - 3]);
}

TEST_CASE("edge list io") {
    std::stringstream ss("4 3\n0 1\n1 2\n2 3\n");
    Graph g = Graph::read_edge_list(ss);
    CHECK(g.n == 4);
    CHECK(g.edges.size() == 3);
    std::stringstream out;
    g.write_edge_list(out);
    Graph g2 = Graph::read_edge_list(out);
    CHECK(g2.edges == g.edges);
}

TEST_CASE("width-1 scripts: exhaustive oracle agreement") {
    for (auto spec : {std::tuple{"{1}", "N", "all"}, {"{0}", "N+", "all"}, {"{0}", "{1}", "all"},
                      {"{1}", "{1}", "all"}, {"N", "N+", "min"}, {"N", "{1}", "min"},
                      {"N+", "N+", "min"}, {"{0}", "{0,1}", "max"},
                      {"", "", "special-max-induced-matching"}}) {
        auto pr = Problem::make(std::get<0>(spec), std::get<1>(spec), std::get<2>(spec));
        auto res = cross_validate_pw(pr, 1, 4, 0, 0);
        INFO(pr.str(), " -> ", res.first_mismatch);
        CHECK(res.ok());
    }
}

TEST_CASE("width-2 scripts: sampled oracle agreement") {
    for (auto spec : {std::tuple{"{1}", "N", "all"}, {"{0}", "{1}", "all"},
                      {"N", "N+", "min"}, {"{0}", "{0,1}", "max"},
                      {"", "", "special-max-induced-matching"}}) {
        auto pr = Problem::make(std::get<0>(spec), std::get<1>(spec), std::get<2>(spec));
        auto res = cross_validate_pw(pr, 2, 5, 120, 42);
        INFO(pr.str(), " -> ", res.first_mismatch);
        CHECK(res.ok());
    }
}

TEST_CASE("width-2 minimal dominating machine: exhaustive short + sampled long") {
    auto pr = Problem::make("", "", "special-min-dom-pw2");
    auto res = cross_validate_pw(pr, 2, 3, 0, 0);
    INFO(res.first_mismatch);
    CHECK(res.ok());
    auto res2 = cross_validate_pw(pr, 2, 5, 250, 7);
    INFO(res2.first_mismatch);
    CHECK(res2.ok());
}

TEST_CASE("tree and forest scripts: sampled oracle agreement") {
    for (auto spec : {std::tuple{"{0}", "N+", "all"}, {"{1}", "{1}", "all"}, {"{0}", "{1}", "all"},
                      {"N", "N+", "min"}, {"", "", "special-max-induced-matching"}}) {
        auto pr = Problem::make(std::get<0>(spec), std::get<1>(spec), std::get<2>(spec));
        auto res = cross_validate_trees(pr, false, 7, 80, 3);
        INFO(pr.str(), " trees -> ", res.first_mismatch);
        CHECK(res.ok());
        auto res2 = cross_validate_trees(pr, true, 7, 80, 4);
        INFO(pr.str(), " forests -> ", res2.first_mismatch);
        CHECK(res2.ok());
    }
}
