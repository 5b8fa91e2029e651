#include "doctest.h"
#include "domcert/recognizable.hpp"

using namespace domcert;

TEST_CASE("tau compression") {
    CHECK(tau(2, 1, 0) == 0);
    CHECK(tau(2, 1, 5) == 2);
    CHECK(tau(1, 2, 1) == 1);
    CHECK(tau(1, 2, 2) == 2);
    CHECK(tau(1, 2, 3) == 1);
    // tau(n+m) = tau(tau(n)+m)
    for (int p = 0; p <= 3; p++)
        for (int q = 1; q <= 3; q++)
            for (long n = 0; n < 20; n++)
                for (long m = 0; m < 20; m++)
                    CHECK(tau(p, q, n + m) == tau(p, q, tau(p, q, n) + m));
}

TEST_CASE("parse and canonical forms") {
    auto one = RecognizableSet::parse("{1}");
    CHECK(one.p == 2);
    CHECK(one.q == 1);
    CHECK(one.table == std::vector<char>{0, 1, 0});

    auto nat = RecognizableSet::parse("N");
    CHECK(nat.p == 0);
    CHECK(nat.q == 1);
    CHECK(nat.table == std::vector<char>{1});

    auto pos = RecognizableSet::parse("N+");
    CHECK(pos.p == 1);
    CHECK(pos.q == 1);
    CHECK(!pos.contains(0));
    CHECK(pos.contains(7));

    auto even = RecognizableSet::parse("0+2*k");
    CHECK(even.p == 0);
    CHECK(even.q == 2);
    CHECK(even.contains(0));
    CHECK(!even.contains(3));
    CHECK(even.contains(100));

    auto mixed = RecognizableSet::parse("{0,1}");
    CHECK(mixed.contains(0));
    CHECK(mixed.contains(1));
    CHECK(!mixed.contains(2));
    CHECK(mixed.p == 2);

    auto empty = RecognizableSet::parse("{}");
    CHECK(empty.empty());

    // redundant presentation canonicalizes
    auto r = RecognizableSet::from_bits(3, 4, {1, 1, 1, 1, 1, 1, 1});
    CHECK(r.p == 0);
    CHECK(r.q == 1);
    CHECK(r.is_all_naturals());

    auto r2 = RecognizableSet::from_bits(1, 4, {0, 1, 0, 1, 0});
    CHECK(r2.q == 2);
    CHECK(r2.p <= 1);
    CHECK(r2.contains(1));
    CHECK(!r2.contains(4));
}

TEST_CASE("round trip through str") {
    for (auto s : {"{1}", "N", "N+", "0+2*k", "{0,1}", "{}", "1,2+3*k", "{0,2}"}) {
        auto a = RecognizableSet::parse(s);
        auto b = RecognizableSet::parse(a.str());
        CHECK(a == b);
    }
}

TEST_CASE("joint period") {
    int p, q;
    // sigma = even, rho = {1}
    joint_period(RecognizableSet::parse("0+2*k"), RecognizableSet::parse("{1}"), p, q);
    CHECK(p == 3);
    CHECK(q == 2);
    // sigma = {1}, rho = N
    joint_period(RecognizableSet::parse("{1}"), RecognizableSet::parse("N"), p, q);
    CHECK(p == 3);
    CHECK(q == 1);
    // both N
    joint_period(RecognizableSet::parse("N"), RecognizableSet::parse("N"), p, q);
    CHECK(p == 1);
    CHECK(q == 1);
    // sigma = N, rho = N+
    joint_period(RecognizableSet::parse("N"), RecognizableSet::parse("N+"), p, q);
    CHECK(p == 2);
    CHECK(q == 1);

    // compression respects membership and count-minus-one membership
    auto sets = {RecognizableSet::parse("{1}"), RecognizableSet::parse("0+2*k"),
                 RecognizableSet::parse("1,2+3*k"), RecognizableSet::parse("N+")};
    for (const auto &a : sets)
        for (const auto &b : sets) {
            joint_period(a, b, p, q);
            for (long n = 0; n < 60; n++) {
                int t = tau(p, q, n);
                CHECK(a.contains(n) == a.contains(t));
                CHECK(b.contains(n) == b.contains(t));
                if (n >= 1 && t >= 1) {
                    CHECK(a.contains(n - 1) == a.contains(t - 1));
                    CHECK(b.contains(n - 1) == b.contains(t - 1));
                }
            }
        }
}
