#include "doctest.h"
#include "domcert/numbers.hpp"

#include <random>

using namespace domcert;

TEST_CASE("rational parsing") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-5/7") == Rational(-5, 7));
    CHECK(parse_rational("1.25") == Rational(5, 4));
    CHECK(parse_rational("-0.5") == Rational(-1, 2));
    CHECK(parse_rational("1.4") == Rational(7, 5));
    CHECK_THROWS_AS(parse_rational("x"), InputError);
}

TEST_CASE("degree-1 field is the rational fast path") {
    auto f = AlgebraicField::make({Rational(-3, 2), Rational(1)}, Rational(1), Rational(2));
    CHECK(f->is_rational());
    CHECK(f->rational_root() == Rational(3, 2));
    auto a = AlgebraicNumber::generator(f);
    CHECK(a.sign() == 1);
    CHECK((a * a).rational_value() == Rational(9, 4));
}

TEST_CASE("plastic-adjacent cubic x^3-x^2-1") {
    auto f = AlgebraicField::make({Rational(-1), Rational(0), Rational(-1), Rational(1)},
                                  parse_rational("1.4"), parse_rational("1.5"));
    CHECK(f->degree() == 3);
    auto a = AlgebraicNumber::generator(f);
    // P(alpha) = 0
    auto p = a.pow(3) - a.pow(2) - AlgebraicNumber::from_rational(f, 1);
    CHECK(p.is_zero());
    // 1/alpha = alpha^2 - alpha  (since alpha^3 = alpha^2 + 1 => alpha(alpha^2-alpha)=1? check)
    auto inv = a.inverse();
    CHECK((inv * a) == AlgebraicNumber::from_rational(f, 1));
    double ad = a.to_double();
    CHECK(ad > 1.4655);
    CHECK(ad < 1.4657);
}

TEST_CASE("nth_root fields and comparisons") {
    auto f = AlgebraicField::nth_root(Rational(2), 2);
    auto a = AlgebraicNumber::generator(f);
    CHECK((a * a).rational_value() == Rational(2));
    CHECK(a.sign() == 1);
    CHECK(AlgebraicNumber::from_rational(f, Rational(141, 100)).compare(a) < 0);
    CHECK(AlgebraicNumber::from_rational(f, Rational(142, 100)).compare(a) > 0);
    auto inv = a.inverse();  // monomial fast path
    CHECK((inv * a) == AlgebraicNumber::from_rational(f, 1));
    CHECK(inv == a.scaled(Rational(1, 2)));

    auto g = AlgebraicField::nth_root(Rational(13), 9);
    auto b = AlgebraicNumber::generator(g);
    CHECK(b.pow(9) == AlgebraicNumber::from_rational(g, 13));
    CHECK((b.pow(5).inverse() * b.pow(5)) == AlgebraicNumber::from_rational(g, 1));
}

TEST_CASE("field arithmetic axioms (randomized)") {
    auto f = AlgebraicField::make({Rational(-1), Rational(-1), Rational(0), Rational(1)},
                                  Rational(1), Rational(2));  // x^3 - x - 1
    std::mt19937 rng(7);
    auto rnd = [&]() {
        std::vector<Rational> c(3);
        for (auto &x : c) x = Rational((int)(rng() % 11) - 5, (int)(rng() % 4) + 1);
        return AlgebraicNumber(f, c);
    };
    for (int t = 0; t < 40; t++) {
        auto x = rnd(), y = rnd(), z = rnd();
        CHECK((x + y) * z == x * z + y * z);
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        if (!y.is_zero()) CHECK((x / y) * y == x);
    }
}

TEST_CASE("comparison is a total order consistent with doubles") {
    auto f = AlgebraicField::nth_root(Rational(6), 4);
    auto a = AlgebraicNumber::generator(f);
    std::vector<AlgebraicNumber> xs;
    for (int i = 0; i < 4; i++)
        for (int q = -2; q <= 2; q++) xs.push_back(a.pow(i).scaled(Rational(q, 3)));
    for (auto &x : xs)
        for (auto &y : xs) {
            int c = x.compare(y);
            CHECK(c == -y.compare(x));
            double dx = x.to_double(), dy = y.to_double();
            if (c < 0) CHECK(dx < dy + 1e-9);
            if (c > 0) CHECK(dx > dy - 1e-9);
        }
}

TEST_CASE("text round-trip") {
    auto f = AlgebraicField::make({Rational(-1), Rational(0), Rational(-1), Rational(1)},
                                  Rational(1), Rational(2));
    AlgebraicNumber x(f, {Rational(1), Rational(-3), Rational(1, 2)});
    CHECK(x.str() == "1/2*a^2 - 3*a + 1");
    CHECK(AlgebraicNumber::parse(f, x.str()) == x);
    CHECK(AlgebraicNumber::parse(f, "0").is_zero());
    CHECK(AlgebraicNumber::parse(f, "-a^2 + 2") ==
          AlgebraicNumber(f, {Rational(2), Rational(0), Rational(-1)}));
}

TEST_CASE("alpha specification parsing") {
    AlgebraicNumber a;
    auto f1 = parse_alpha("root(3, poly x^3-x^2-1 in [1.4,1.5])", &a);
    CHECK(f1->degree() == 3);
    CHECK((a.pow(3) - a.pow(2)).compare(AlgebraicNumber::from_rational(f1, 1)) == 0);
    AlgebraicNumber b;
    auto f2 = parse_alpha("nthroot(2, 2)", &b);
    CHECK((b * b).rational_value() == Rational(2));
    AlgebraicNumber c;
    auto f3 = parse_alpha("root(5, 4)", &c);
    CHECK(c.pow(5).rational_value() == Rational(4));
    AlgebraicNumber d;
    auto f4 = parse_alpha("7/2", &d);
    CHECK(f4->is_rational());
    CHECK(d.rational_value() == Rational(7, 2));
}

TEST_CASE("reducible modulus detected on division") {
    // (x^2-1) is reducible; inverting (x-1) mod it must fail
    auto f = AlgebraicField::make({Rational(-1), Rational(0), Rational(1)},
                                  parse_rational("0.5"), parse_rational("1.5"));
    AlgebraicNumber x(f, {Rational(-1), Rational(1)});
    CHECK_THROWS_AS(x.inverse(), InputError);
}

TEST_CASE("degree-85 field sanity") {
    // alpha = (2^27 * 7)^(1/85)
    Rational r = Rational(mpz_class(1) << 27) * 7;
    auto f = AlgebraicField::nth_root(r, 85);
    auto a = AlgebraicNumber::generator(f);
    CHECK(a.pow(85).rational_value() == r);
    auto inv = a.pow(84).inverse();
    CHECK(inv == a.scaled(Rational(1) / r));  // 1/a^84 = a/(2^27*7)
    CHECK((inv * a.pow(84)).rational_value() == Rational(1));
    CHECK(a.sign() == 1);
    CHECK(a.compare(AlgebraicNumber::from_rational(f, 1)) > 0);
    CHECK(a.compare(AlgebraicNumber::from_rational(f, 2)) < 0);
}
