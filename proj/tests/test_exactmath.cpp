#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "redpair/linalg.hpp"
#include "redpair/mpoly.hpp"

using namespace redpair;

namespace {

std::mt19937_64 rng(20240717);

Rat random_rat() {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    return Rat(num(rng), den(rng));
}

MPoly random_poly(size_t nvars, int max_deg, int max_terms) {
    std::uniform_int_distribution<int> deg(0, max_deg), nterms(1, max_terms);
    MPoly p(nvars);
    int tcount = nterms(rng);
    for (int t = 0; t < tcount; ++t) {
        MPoly::Exps e(nvars);
        for (auto& x : e) x = deg(rng);
        p.add_term(e, random_rat());
    }
    return p;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rat("3/4") == Rat(3, 4));
    CHECK(parse_rat("-6/8") == Rat(-3, 4));
    CHECK(parse_rat("5") == Rat(5));
    CHECK(rat_str(Rat(-3, 4)) == "-3/4");
    CHECK(rat_str(Rat(8, 2)) == "4");
    CHECK(denominator(parse_rat("-6/8")) == 4);
    CHECK_THROWS(parse_rat("1/0"));
    CHECK_THROWS(parse_rat("x"));
}

TEST_CASE("difference of squares") {
    MPoly u1 = MPoly::variable(2, 0), u2 = MPoly::variable(2, 1);
    CHECK((u1 + u2) * (u1 - u2) == u1 * u1 - u2 * u2);
}

TEST_CASE("multiplication by one is the identity") {
    MPoly p = random_poly(2, 3, 6);
    CHECK(p * MPoly::constant(2, 1) == p);
}

TEST_CASE("restriction arithmetic reproduces the expanded square") {
    // (1/2)(x + x)^2 with x = -u1-u2 equals 2u1^2 + 4u1u2 + 2u2^2.
    MPoly x = MPoly::from_linform(LinForm{-1, -1});
    MPoly half_sq = (x + x).pow(2).scaled(Rat(1, 2));
    MPoly expected(2);
    expected.add_term({2, 0}, 2);
    expected.add_term({1, 1}, 4);
    expected.add_term({0, 2}, 2);
    CHECK(half_sq == expected);
}

TEST_CASE("poly arithmetic laws on random inputs") {
    for (int i = 0; i < 25; ++i) {
        MPoly a = random_poly(2, 3, 5), b = random_poly(2, 3, 5), c = random_poly(2, 3, 5);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("mismatched variable counts are rejected") {
    MPoly a = random_poly(2, 2, 3), b = random_poly(3, 2, 3);
    CHECK_THROWS(a + b);
    CHECK_THROWS(a * b);
}

TEST_CASE("no zero terms are stored") {
    MPoly a = random_poly(2, 3, 5);
    MPoly z = a - a;
    CHECK(z.is_zero());
    CHECK(z.terms().empty());
}

TEST_CASE("solve_in_basis on the standard basis") {
    std::vector<LinForm> b{LinForm{1, 0}, LinForm{0, 1}};
    auto s = solve_in_basis(b, {Rat(3), Rat(5)});
    REQUIRE(s);
    CHECK((*s)[0] == 3);
    CHECK((*s)[1] == 5);
}

TEST_CASE("solve_in_basis on a skew basis") {
    std::vector<LinForm> b{LinForm{1, 0}, LinForm{1, 1}};
    auto s = solve_in_basis(b, {Rat(0), Rat(1)});
    REQUIRE(s);
    CHECK((*s)[0] == -1);
    CHECK((*s)[1] == 1);
}

TEST_CASE("dependent forms are flagged singular") {
    std::vector<LinForm> b{LinForm{1, 0}, LinForm{2, 0}};
    CHECK(!solve_in_basis(b, {Rat(1), Rat(1)}));
}

TEST_CASE("solve_in_basis round-trips random coordinates") {
    std::vector<LinForm> b{LinForm{2, 1}, LinForm{-1, 3}};
    for (int i = 0; i < 20; ++i) {
        VecQ s{random_rat(), random_rat()};
        VecQ v(2, Rat(0));
        for (size_t j = 0; j < 2; ++j)
            for (size_t c = 0; c < 2; ++c) v[c] += s[j] * Rat(b[j][c]);
        auto back = solve_in_basis(b, v);
        REQUIRE(back);
        CHECK(*back == s);
    }
}

TEST_CASE("determinants") {
    CHECK(det({LinForm{1, 0}, LinForm{0, 1}}) == 1);
    CHECK(det({LinForm{2, 0}, LinForm{0, 1}}) == 2);
    CHECK(det({LinForm{1, 0}, LinForm{1, 1}}) == 1);
    // Row scaling is multiplicative, permutation flips the sign.
    CHECK(det({LinForm{3, 0}, LinForm{0, 1}}) == 3 * det({LinForm{1, 0}, LinForm{0, 1}}));
    CHECK(det({LinForm{0, 1}, LinForm{1, 0}}) == -det({LinForm{1, 0}, LinForm{0, 1}}));
}

TEST_CASE("positive_functional finds a separating vector") {
    auto xi = positive_functional({LinForm{1}, LinForm{1}, LinForm{1}});
    REQUIRE(xi);
    CHECK((*xi)[0] > 0);

    CHECK(!positive_functional({LinForm{1}, LinForm{-1}}));

    auto xi2 = positive_functional({LinForm{1, 0}, LinForm{1, 1}, LinForm{0, 1}});
    REQUIRE(xi2);
    for (const auto& w : {LinForm{1, 0}, LinForm{1, 1}, LinForm{0, 1}})
        CHECK(w.pair_int(*xi2) > 0);

    // Mixed cone that still admits a polarization.
    auto xi3 = positive_functional({LinForm{1, 0}, LinForm{1, 1}, LinForm{0, 1}, LinForm{-1, 3}});
    REQUIRE(xi3);
    CHECK(LinForm{-1, 3}.pair_int(*xi3) > 0);

    CHECK(!positive_functional({LinForm{1, 0}, LinForm{-1, 0}}));
    CHECK(!positive_functional({LinForm{0, 0}}));
}

TEST_CASE("cone membership") {
    std::vector<LinForm> quad{LinForm{1, 0}, LinForm{0, 1}};
    CHECK(cone_contains(quad, {Rat(2), Rat(3)}));
    CHECK(cone_contains(quad, {Rat(0), Rat(0)}));
    CHECK(!cone_contains(quad, {Rat(-1), Rat(1)}));
    std::vector<LinForm> line{LinForm{1, 1}};
    CHECK(cone_contains(line, {Rat(2), Rat(2)}));
    CHECK(!cone_contains(line, {Rat(2), Rat(1)}));
}

TEST_CASE("substitution composes linearly") {
    MPoly p = random_poly(2, 3, 4);
    // Identity substitution.
    std::vector<MPoly> id{MPoly::variable(2, 0), MPoly::variable(2, 1)};
    CHECK(p.substitute(id) == p);
    // Evaluation agrees with substitution then evaluation.
    std::vector<MPoly> img{MPoly::from_linform(LinForm{1, 2}), MPoly::from_linform(LinForm{3, -1})};
    VecQ x{random_rat(), random_rat()};
    VecQ y{x[0] + 2 * x[1], 3 * x[0] - x[1]};
    CHECK(p.substitute(img).eval(x) == p.eval(y));
}
