#include "doctest.h"
#include "domcert/automata.hpp"
#include "domcert/pw_system.hpp"

using namespace domcert;

namespace {
IntMatrix mat(std::initializer_list<std::initializer_list<int>> rows) {
    IntMatrix m;
    for (auto &r : rows) {
        IntVector row;
        for (int x : r) row.push_back(x);
        m.push_back(row);
    }
    return m;
}
IntVector vec(std::initializer_list<int> xs) {
    IntVector v;
    for (int x : xs) v.push_back(x);
    return v;
}
}  // namespace

TEST_CASE("state counts per mode") {
    CHECK(make_vertex_automaton(Problem::make("{1}", "N", "all"))->n() == 4);
    CHECK(make_vertex_automaton(Problem::make("{1}", "{1}", "all"))->n() == 6);
    CHECK(make_vertex_automaton(Problem::make("", "", "special-max-induced-matching"))->n() == 5);
    CHECK(make_tuple_automaton(Problem::make("", "", "special-min-dom-pw2"), 2)->dim() == 37);
}

TEST_CASE("fresh states and acceptance") {
    auto mim = make_vertex_automaton(Problem::make("", "", "special-max-induced-matching"));
    CHECK(mim->fresh() == std::vector<int>{0, 2});
    IntVector acc;
    for (int s = 0; s < 5; s++) acc.push_back(mim->accept(s) ? 1 : 0);
    CHECK(acc == vec({0, 1, 1, 0, 1}));

    auto im = make_vertex_automaton(Problem::make("{1}", "N", "all"));
    CHECK(im->fresh() == std::vector<int>{0, 3});
}

TEST_CASE("induced matching width-1 system matches the worked example") {
    OperatorSystem sys = build_system(Problem::make("{1}", "N", "all"), 1);
    CHECK(sys.m == 4);
    CHECK(sys.v == vec({1, 0, 0, 1}));
    REQUIRE(sys.completions.size() == 1);
    CHECK(sys.completions[0] == vec({0, 1, 0, 1}));
    REQUIRE(sys.mats.size() == 4);
    CHECK(sys.mats[0] == mat({{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 2, 0}, {0, 0, 0, 1}}));
    CHECK(sys.mats[1] == mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}));
    CHECK(sys.mats[2] == mat({{0, 0, 0, 1}, {1, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}}));
    CHECK(sys.mats[3] == mat({{0, 1, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, 1}}));

    prune_accessibility(sys);
    CHECK(sys.m == 3);
    CHECK(sys.v == vec({1, 0, 1}));
    CHECK(sys.index_map == std::vector<int>{0, 1, 3});
    CHECK(sys.mats[0] == mat({{1, 0, 0}, {1, 1, 0}, {0, 0, 1}}));
    CHECK(sys.mats[1] == mat({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    CHECK(sys.mats[2] == mat({{0, 0, 1}, {1, 0, 0}, {0, 1, 1}}));
    CHECK(sys.mats[3] == mat({{0, 1, 1}, {0, 0, 0}, {0, 1, 1}}));
}

TEST_CASE("maximal induced matching width-1 system matches the published operators") {
    OperatorSystem sys = build_system(Problem::make("", "", "special-max-induced-matching"), 1);
    CHECK(sys.m == 5);
    CHECK(sys.v == vec({1, 0, 1, 0, 0}));
    CHECK(sys.completions[0] == vec({0, 1, 1, 0, 1}));
    // descriptor order: new departs (edge, no edge), then old departs
    CHECK(sys.mats[2] == mat({{0, 0, 1, 1, 1},
                              {1, 0, 0, 0, 0},
                              {0, 0, 0, 0, 1},
                              {0, 0, 1, 0, 0},
                              {0, 1, 0, 0, 0}}));
    CHECK(sys.mats[0] == mat({{1, 0, 0, 0, 0},
                              {1, 1, 0, 0, 0},
                              {0, 0, 0, 0, 0},
                              {0, 0, 1, 1, 0},
                              {0, 0, 0, 0, 1}}));
    CHECK(sys.mats[3] == mat({{0, 1, 1, 0, 1},
                              {0, 0, 0, 0, 0},
                              {0, 1, 1, 0, 1},
                              {0, 0, 0, 0, 0},
                              {0, 0, 0, 0, 0}}));
    CHECK(sys.mats[1] == mat({{1, 0, 0, 0, 0},
                              {0, 1, 0, 0, 0},
                              {0, 0, 1, 0, 0},
                              {0, 0, 0, 1, 0},
                              {0, 0, 0, 0, 1}}));
}

TEST_CASE("dominated-matrix pruning keeps counting semantics out") {
    // perfect total dominating, width 1: one of the four operators is
    // entrywise dominated and drops out
    OperatorSystem sys = build_system(Problem::make("{1}", "{1}", "all"), 1);
    prune_accessibility(sys);
    CHECK(sys.m == 4);
    size_t before = sys.mats.size();
    prune_dominated(sys);
    CHECK(sys.mats.size() == 3);
    CHECK(before == 4);
}

TEST_CASE("problem text round trip") {
    auto pr = Problem::make("{1}", "N", "all");
    CHECK(Problem::parse(pr.str()).str() == pr.str());
    auto pr2 = Problem::make("", "", "special-min-dom-pw2");
    CHECK(Problem::parse(pr2.str()).str() == pr2.str());
    CHECK_THROWS_AS(Problem::make("{0}", "N", "special-min-dom-pw2"), InputError);
}
