#include <sstream>

#include "doctest.h"
#include "domcert/certificate.hpp"

using namespace domcert;

namespace {

FieldPtr rational_field() { return AlgebraicField::make({Rational(-1), Rational(1)}, 1, 1); }

AlgVector qvec(const FieldPtr &f, std::initializer_list<const char *> xs) {
    AlgVector v;
    for (auto x : xs) v.push_back(AlgebraicNumber::parse(f, x));
    return v;
}

}  // namespace

TEST_CASE("membership in the downward convex hull") {
    auto f = rational_field();
    std::vector<AlgVector> X{qvec(f, {"1", "0"}), qvec(f, {"0", "1"})};
    CHECK(member_conv_le(X, qvec(f, {"1/2", "1/2"})).inside);
    CHECK(member_conv_le(X, qvec(f, {"1", "0"})).inside);
    CHECK_FALSE(member_conv_le(X, qvec(f, {"1", "1"})).inside);
    CHECK_FALSE(member_conv_le({}, qvec(f, {"0", "0"})).inside);
    // singleton: the point is its own witness
    auto m = member_conv_le({qvec(f, {"2", "3"})}, qvec(f, {"2", "3"}));
    CHECK(m.inside);
    CHECK(m.lambda[0] == AlgebraicNumber::from_rational(f, 1));
}

TEST_CASE("membership witnesses are convex and dominate the query") {
    auto f = rational_field();
    std::vector<AlgVector> X{qvec(f, {"1", "0", "0"}), qvec(f, {"0", "1", "0"}),
                             qvec(f, {"0", "0", "1"}), qvec(f, {"1/3", "1/3", "1/3"})};
    auto m = member_conv_le(X, qvec(f, {"1/4", "1/4", "1/4"}));
    REQUIRE(m.inside);
    AlgebraicNumber total = AlgebraicNumber::from_rational(f, 0);
    for (auto &l : m.lambda) {
        CHECK(l.sign() >= 0);
        total = total + l;
    }
    CHECK(total == AlgebraicNumber::from_rational(f, 1));
    for (int i = 0; i < 3; i++) {
        AlgebraicNumber s = AlgebraicNumber::from_rational(f, 0);
        for (size_t j = 0; j < X.size(); j++) s = s + m.lambda[j] * X[j][i];
        CHECK((s - AlgebraicNumber::from_rational(f, Rational(1, 4))).sign() >= 0);
    }
}

TEST_CASE("hull_le removes dominated, duplicated and interior points") {
    auto f = rational_field();
    auto R = hull_le({qvec(f, {"1", "0"}), qvec(f, {"0", "1"}), qvec(f, {"2/5", "2/5"})});
    REQUIRE(R.size() == 2);
    CHECK(alg_vector_eq(R[0], qvec(f, {"1", "0"})));
    CHECK(alg_vector_eq(R[1], qvec(f, {"0", "1"})));
    // duplicates collapse to one copy
    CHECK(hull_le({qvec(f, {"1", "2"}), qvec(f, {"1", "2"})}).size() == 1);
    CHECK(hull_le({qvec(f, {"3", "4"})}).size() == 1);
    // no retained point is removable
    for (size_t i = 0; i < R.size(); i++) {
        std::vector<AlgVector> rest;
        for (size_t j = 0; j < R.size(); j++)
            if (j != i) rest.push_back(R[j]);
        CHECK_FALSE(member_conv_le(rest, R[i]).inside);
    }
}

TEST_CASE("width-1 induced matching saturation reproduces the known 5-point set") {
    auto sys = canonical_pw_system(Problem::make("{1}", "N", "all"), 1);
    AlgebraicNumber alpha;
    auto f = parse_alpha("root(1, poly x^3-x^2-1 in [1,2])", &alpha);
    auto res = saturate_pathwidth(sys, alpha, {}, {});
    REQUIRE(res.found);
    REQUIRE(res.X.size() == 5);
    std::vector<AlgVector> expected = {
        qvec(f, {"-a^2 + a + 1", "-3*a^2 + 3*a + 3", "-a^2 + a + 1"}),
        qvec(f, {"a - 1", "a - 1", "2*a - 2"}),
        qvec(f, {"a - 1", "2*a - 2", "a - 1"}),
        qvec(f, {"a^2 - a", "a^2 - a", "a^2 - a"}),
        qvec(f, {"1", "0", "1"}),
    };
    for (const auto &e : expected) {
        bool present = false;
        for (const auto &x : res.X) present = present || alg_vector_eq(e, x);
        CHECK(present);
    }
    CHECK(verify_certificate(res.cert).verified);
}

TEST_CASE("forest saturation closes the known 3-point set for independent domination") {
    auto sys = canonical_tree_system(Problem::make("{0}", "N+", "all"), true);
    AlgebraicNumber alpha;
    auto f = parse_alpha("nthroot(2,2)", &alpha);
    std::vector<AlgVector> seeds = {qvec(f, {"0", "0", "1/2*a"}), qvec(f, {"1/2", "0", "1/2"})};
    auto res = saturate_tree(sys, alpha, seeds, {});
    REQUIRE(res.found);
    CHECK(res.X.size() == 3);  // v/alpha is the third point
    CHECK(verify_certificate(res.cert).verified);
    CHECK(res.cert.constant == AlgebraicNumber::from_rational(f, 1));
}

TEST_CASE("certificate files round trip and survive re-verification") {
    auto sys = canonical_pw_system(Problem::make("{0}", "{1}", "all"), 1);
    AlgebraicNumber alpha;
    parse_alpha("nthroot(2,2)", &alpha);
    auto res = saturate_pathwidth(sys, alpha, {}, {});
    REQUIRE(res.found);
    std::string text = format_certificate(res.cert);
    std::istringstream in(text);
    Certificate back = parse_certificate(in);
    CHECK(back.system_hash == res.cert.system_hash);
    CHECK(back.X.size() == res.cert.X.size());
    for (size_t i = 0; i < back.X.size(); i++) {
        // reparsed coordinates are in a fresh field object but equal in value
        for (size_t j = 0; j < back.X[i].size(); j++)
            CHECK(back.X[i][j].coeffs() == res.cert.X[i][j].coeffs());
    }
    CHECK(verify_certificate(back).verified);
    // emission is deterministic
    std::istringstream in2(text);
    CHECK(format_certificate(back) == format_certificate(parse_certificate(in2)));
}

TEST_CASE("tampered certificates are refuted") {
    auto sys = canonical_pw_system(Problem::make("{1}", "N", "all"), 1);
    AlgebraicNumber alpha;
    auto f = parse_alpha("root(1, poly x^3-x^2-1 in [1,2])", &alpha);
    auto res = saturate_pathwidth(sys, alpha, {}, {});
    REQUIRE(res.found);
    Certificate bad = res.cert;
    bad.X.pop_back();
    CHECK_FALSE(verify_certificate(bad).verified);
    bad = res.cert;
    bad.system_hash ^= 1;
    CHECK(verify_certificate(bad).reason == "system fingerprint mismatch");
    bad = res.cert;
    bad.constant = AlgebraicNumber::from_rational(f, 2);
    CHECK_FALSE(verify_certificate(bad).verified);
}

TEST_CASE("spectral lower bounds") {
    auto sys = canonical_pw_system(Problem::make("{1}", "N", "all"), 1);
    auto lb = lower_bound(sys, 1);
    CHECK(lb.value > 1.46);
    CHECK(lb.value < 1.47);
    // identity-only system: growth exactly 1
    OperatorSystem id;
    id.problem = Problem::make("N", "N", "all");
    id.k = 1;
    id.m = 2;
    id.mats = {IntMatrix{{1, 0}, {0, 1}}};
    id.descriptors = {{0, 0}};
    id.completions = {IntVector{1, 1}};
    id.v = {1, 1};
    auto one = lower_bound(id, 2);
    CHECK(one.bound == 1);
}

TEST_CASE("malformed certificates raise input errors") {
    std::istringstream empty("");
    CHECK_THROWS_AS(parse_certificate(empty), InputError);
    std::istringstream junk("domcert certificate v1\nFIELD nonsense\n");
    CHECK_THROWS_AS(parse_certificate(junk), InputError);
}
