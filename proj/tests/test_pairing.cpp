#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "redpair/errors.hpp"
#include "redpair/linalg.hpp"
#include "redpair/oracle.hpp"
#include "redpair/pairing.hpp"

using namespace redpair;

namespace {

EquivariantClass cp2_product_half_square() {
    SpaceModel cp2 = builders::cp2();
    EquivariantClass nu = builders::cp2_nu(cp2);
    EquivariantClass one = class_unit(cp2);
    EquivariantClass sum = class_add(product_class(cp2, cp2, nu, one),
                                     product_class(cp2, cp2, one, nu));
    return class_scale(class_mul(sum, sum), Rat(1, 2));
}

// Monomial class nu^{k_1} x ... x nu^{k_n} on the n-fold sphere power.
EquivariantClass sphere_monomial(const SpaceModel& power, const std::vector<int>& ks) {
    SpaceModel s2 = builders::sphere();
    EquivariantClass nu = builders::sphere_nu(s2);
    SpaceModel acc_space = s2;
    EquivariantClass acc = class_pow(nu, ks[0]);
    for (size_t j = 1; j < ks.size(); ++j) {
        EquivariantClass next = class_pow(nu, (int)ks[j]);
        acc = product_class(acc_space, s2, acc, next);
        acc_space = product_space(acc_space, s2);
    }
    acc.space = power.name();
    return acc;
}

}  // namespace

TEST_CASE("sphere pairing of the unit class") {
    SpaceModel s2 = builders::sphere();
    PairingResult r = pair(s2, class_unit(s2), {Rat(1, 3)});
    REQUIRE(r.regular);
    // Both fixed-point steps are active only below the S apex; the
    // engine's calibrated convention makes the interior value -1 and
    // the value outside the moment segment 0.
    CHECK(*r.value == -1);
    CHECK(*pair(s2, class_unit(s2), {Rat(-1, 2)}).value == -1);
    CHECK(*pair(s2, class_unit(s2), {Rat(2)}).value == 0);
    CHECK(*pair(s2, class_unit(s2), {Rat(-3)}).value == 0);
}

TEST_CASE("projective plane unit pairing is 1 at an interior point") {
    SpaceModel cp2 = builders::cp2();
    PairingResult r = pair(cp2, class_unit(cp2), {Rat(0), Rat(0)});
    REQUIRE(r.regular);
    CHECK(*r.value == 1);
    // Outside the moment triangle everything cancels.
    PairingResult out = pair(cp2, class_unit(cp2), {Rat(5), Rat(5)});
    REQUIRE(out.regular);
    CHECK(*out.value == 0);
}

TEST_CASE("product of projective planes: value 3 with the printed breakdown") {
    SpaceModel cp2 = builders::cp2();
    SpaceModel prod = product_space(cp2, cp2);
    EquivariantClass a = cp2_product_half_square();
    a.space = prod.name();
    PairingResult r = pair(prod, a, {Rat(0), Rat(0)});
    REQUIRE(r.regular);
    CHECK(*r.value == 3);
    CHECK(r.per_point.at("(S,S)") == 4);
    CHECK(r.per_point.at("(S,E)") == Rat(-1, 2));
    CHECK(r.per_point.at("(E,S)") == Rat(-1, 2));
    for (const auto& [id, v] : r.per_point)
        if (id != "(S,S)" && id != "(S,E)" && id != "(E,S)") CHECK(v == 0);
}

TEST_CASE("sphere power monomials match the closed form and the oracle") {
    SpaceModel m3 = builders::sphere_power(3);
    EquivariantClass a = sphere_monomial(m3, {1, 1, 0});
    PairingResult r = pair(m3, a, {Rat(0)});
    REQUIRE(r.regular);
    CHECK(*r.value == -2);
    CHECK(*r.value == sphere_power_closed_form({1, 1, 0}));
    CHECK(*r.value == fixed_point_enumeration(m3, a, Rat(0)));

    EquivariantClass b = sphere_monomial(m3, {2, 0, 0});
    CHECK(*pair(m3, b, {Rat(0)}).value == 2);
    CHECK(sphere_power_closed_form({2, 0, 0}) == 2);
}

TEST_CASE("linear model pairings") {
    SpaceModel v = builders::linear("v111", 1, {LinForm{1}, LinForm{1}, LinForm{1}});
    PairingResult r = pair(v, class_unit(v), {Rat(4)});
    REQUIRE(r.regular);
    CHECK(*r.value == 8);  // t^2/2
    // Below the cone the reduction is empty.
    CHECK(*pair(v, class_unit(v), {Rat(-1)}).value == 0);
}

TEST_CASE("pair is rational-linear in the class") {
    std::mt19937_64 rng(555);
    std::uniform_int_distribution<int> coef(-5, 5), deg(0, 2);
    SpaceModel cp2 = builders::cp2();
    auto random_class = [&] {
        EquivariantClass c;
        c.space = cp2.name();
        for (const auto& p : cp2.points()) {
            MPoly poly(2);
            poly.add_term({deg(rng), deg(rng)}, Rat(coef(rng)));
            c.restrictions[p.id] = poly;
        }
        return c;
    };
    VecQ t{Rat(1, 5), Rat(1, 7)};
    for (int i = 0; i < 10; ++i) {
        EquivariantClass a = random_class(), b = random_class();
        Rat lambda(coef(rng), 3);
        PairingResult ra = pair(cp2, a, t), rb = pair(cp2, b, t);
        PairingResult rc = pair(cp2, class_add(class_scale(a, lambda), b), t);
        REQUIRE(ra.regular);
        REQUIRE(rb.regular);
        REQUIRE(rc.regular);
        CHECK(*rc.value == lambda * *ra.value + *rb.value);
    }
}

TEST_CASE("polarization independence on compact models") {
    SpaceModel s2 = builders::sphere();
    for (const auto& t : {Rat(1, 3), Rat(-2, 5), Rat(1, 7)}) {
        Rat base = *pair(s2, class_unit(s2), {t}).value;
        for (long xi : {1L, -1L, 3L})
            CHECK(*pair(s2, class_unit(s2), {t}, std::vector<Int>{Int(xi)}).value == base);
    }
    SpaceModel cp2 = builders::cp2();
    EquivariantClass nu2 = class_pow(builders::cp2_nu(cp2), 2);
    VecQ t{Rat(1, 5), Rat(1, 7)};
    Rat base = *pair(cp2, nu2, t).value;
    for (auto xi : {std::vector<Int>{Int(1), Int(2)}, std::vector<Int>{Int(2), Int(1)},
                    std::vector<Int>{Int(-3), Int(1)}, std::vector<Int>{Int(5), Int(3)}})
        CHECK(*pair(cp2, nu2, t, xi).value == base);
}

TEST_CASE("polarizable and flip_form") {
    CHECK(polarizable({LinForm{1}, LinForm{1}, LinForm{1}}));
    CHECK(!polarizable({LinForm{1}, LinForm{-1}}));
    auto xi = polarizable({LinForm{1, 0}, LinForm{1, 1}, LinForm{0, 1}});
    REQUIRE(xi);

    auto [flipped, count] = flip_form({LinForm{1}, LinForm{-1}}, {Int(1)});
    CHECK(flipped == std::vector<LinForm>{LinForm{1}, LinForm{1}});
    CHECK(count == 1);

    auto [same, zero] = flip_form({LinForm{1}, LinForm{2}}, {Int(1)});
    CHECK(zero == 0);
    CHECK(same == std::vector<LinForm>{LinForm{1}, LinForm{2}});

    // W flipped by xi=(3,1) joins V in a polarizable system.
    auto [w_flipped, wf] = flip_form({LinForm{0, 1}, LinForm{0, -1}}, {Int(3), Int(1)});
    CHECK(w_flipped == std::vector<LinForm>{LinForm{0, 1}, LinForm{0, 1}});
    CHECK(wf == 1);
    std::vector<LinForm> joint{LinForm{1, 0}, LinForm{1, 1}};
    joint.insert(joint.end(), w_flipped.begin(), w_flipped.end());
    CHECK(polarizable(joint));

    CHECK_THROWS_AS(flip_form({LinForm{0, 1}}, {Int(1), Int(0)}), input_error);
}

TEST_CASE("volume polynomial of the sphere chamber is constant") {
    SpaceModel s2 = builders::sphere();
    ChamberPolynomial cp = dh_polynomial(s2, {Rat(0)});
    CHECK(cp.degree_bound == 0);
    CHECK(cp.poly == MPoly::constant(1, -1));
}

TEST_CASE("volume polynomial of linear models") {
    SpaceModel v3 = builders::linear("v111", 1, {LinForm{1}, LinForm{1}, LinForm{1}});
    ChamberPolynomial cp = dh_polynomial(v3, {Rat(1)});
    MPoly expected(1);
    expected.add_term({2}, Rat(1, 2));
    CHECK(cp.poly == expected);
    CHECK(cp.degree_bound == 2);

    SpaceModel v12 = builders::linear("v12", 1, {LinForm{1}, LinForm{2}});
    ChamberPolynomial cp2 = dh_polynomial(v12, {Rat(1)});
    MPoly half_t(1);
    half_t.add_term({1}, Rat(1, 2));
    CHECK(cp2.poly == half_t);
}

TEST_CASE("volume polynomial of the triple sphere power near zero") {
    SpaceModel m3 = builders::sphere_power(3);
    ChamberPolynomial cp = dh_polynomial(m3, {Rat(0)});
    CHECK(cp.degree_bound == 2);
    MPoly expected(1);  // t^2 - 3 in the engine's convention
    expected.add_term({2}, 1);
    expected.add_term({0}, -3);
    CHECK(cp.poly == expected);
    CHECK(cp.poly.eval({Rat(0)}) == *pair(m3, class_unit(m3), {Rat(0)}).value);
}

TEST_CASE("volume polynomial degree bound on the rank-two product") {
    SpaceModel cp2 = builders::cp2();
    SpaceModel prod = product_space(cp2, cp2);
    ChamberPolynomial cp = dh_polynomial(prod, {Rat(0), Rat(0)});
    CHECK(cp.degree_bound == 2);
    CHECK(cp.poly.total_degree() <= 2);
    CHECK(cp.poly.eval({Rat(0), Rat(0)}) == 3);
    // Independent geometry: the chamber polynomial is the area of the
    // moment triangle intersected with its reflection through t/2,
    // which expands to (2+t1)(2+t2) - (1+t1+t2)^2.
    MPoly expected(2);
    expected.add_term({0, 0}, 3);
    expected.add_term({2, 0}, -1);
    expected.add_term({1, 1}, -1);
    expected.add_term({0, 2}, -1);
    CHECK(cp.poly == expected);
}

TEST_CASE("adjacent chamber of the triple sphere power") {
    // On (1,3) the volume polynomial is -(t-3)^2/2 in the engine's
    // convention (the mirror of the box convolution (3-t)^2/2).
    SpaceModel m3 = builders::sphere_power(3);
    ChamberPolynomial cp = dh_polynomial(m3, {Rat(2)});
    MPoly expected(1);
    expected.add_term({2}, Rat(-1, 2));
    expected.add_term({1}, 3);
    expected.add_term({0}, Rat(-9, 2));
    CHECK(cp.poly == expected);
    // Different chamber, different polynomial.
    CHECK(cp.poly != dh_polynomial(m3, {Rat(0)}).poly);
}

TEST_CASE("triple product of projective planes: direct equals convolved") {
    SpaceModel cp2 = builders::cp2();
    SpaceModel sq = product_space(cp2, cp2);
    SpaceModel cube = product_space(sq, cp2);
    EquivariantClass one_sq = class_unit(sq);
    EquivariantClass one = class_unit(cp2);
    EquivariantClass a = product_class(sq, cp2, one_sq, one);
    a.space = cube.name();

    Polarization pol = choose_generic_xi(cube);
    Polarization psq = polarize(sq, pol.xi), pf = polarize(cp2, pol.xi);
    auto conv = convolve(pushforward_terms(sq, one_sq, psq),
                         pushforward_terms(cp2, one, pf));
    int hits = 0;
    for (int j = 1; j <= 30 && hits < 3; ++j) {
        VecQ t{Rat(j, 17), Rat(-j, 23)};
        PairingResult direct = pair(cube, a, t, pol.xi);
        if (!direct.regular) continue;
        Rat total = 0;
        bool regular = true;
        for (const auto& term : conv) {
            EvalResult e = eval(decompose(term, 2), t);
            if (!e.regular) {
                regular = false;
                break;
            }
            total += e.value;
        }
        if (!regular) continue;
        CHECK(total == *direct.value);
        ++hits;
    }
    CHECK(hits == 3);
    // The origin is itself a moment value here, so fit nearby.
    ChamberPolynomial cp = dh_polynomial(cube, {Rat(1, 5), Rat(1, 7)});
    CHECK(cp.degree_bound == 4);
    CHECK(cp.poly.total_degree() <= 4);
    for (size_t beta : {0u, 1u})
        CHECK(dh_derivative_check(cube, {Rat(1, 5), Rat(1, 7)}, beta).pass);
}

TEST_CASE("fifth sphere power against the box-convolution value") {
    // Five unit boxes convolved at 0 give 115/12 (the Irwin-Hall
    // density at its midpoint, rescaled); the engine's convention
    // carries a sign flip for an odd number of sphere factors.
    SpaceModel m5 = builders::sphere_power(5);
    PairingResult r = pair(m5, class_unit(m5), {Rat(0)});
    REQUIRE(r.regular);
    CHECK(*r.value == Rat(-115, 12));
    ChamberPolynomial cp = dh_polynomial(m5, {Rat(0)});
    MPoly expected(1);
    expected.add_term({0}, Rat(-115, 12));
    expected.add_term({2}, Rat(5, 2));
    expected.add_term({4}, Rat(-1, 4));
    CHECK(cp.poly == expected);
}

TEST_CASE("derivative calibration: the rank-one linear case fixes sigma = +1") {
    SpaceModel v = builders::linear("v11", 1, {LinForm{1}, LinForm{1}});
    DerivativeReport rep = dh_derivative_check(v, {Rat(1)}, 0);
    CHECK(rep.sigma == 1);
    CHECK(rep.poly_derivative == 1);
    CHECK(rep.u_class_pairing == 1);
    CHECK(rep.pass);
}

TEST_CASE("derivative property across models with the same sigma") {
    SpaceModel s2 = builders::sphere();
    DerivativeReport r1 = dh_derivative_check(s2, {Rat(0)}, 0);
    CHECK(r1.pass);
    CHECK(r1.poly_derivative == 0);
    CHECK(r1.u_class_pairing == 0);

    SpaceModel v3 = builders::linear("v111", 1, {LinForm{1}, LinForm{1}, LinForm{1}});
    DerivativeReport r2 = dh_derivative_check(v3, {Rat(2)}, 0);
    CHECK(r2.pass);
    CHECK(r2.poly_derivative == 2);  // d(t^2/2) at t=2

    SpaceModel m3 = builders::sphere_power(3);
    DerivativeReport r3 = dh_derivative_check(m3, {Rat(1, 5)}, 0);
    CHECK(r3.pass);

    SpaceModel cp2 = builders::cp2();
    for (size_t beta : {0u, 1u}) {
        DerivativeReport r4 = dh_derivative_check(cp2, {Rat(1, 5), Rat(1, 7)}, beta);
        CHECK(r4.pass);
    }
}

TEST_CASE("cobordism decomposition on the sphere") {
    SpaceModel s2 = builders::sphere();
    CobordismReport rep = cobordism_check(s2, class_unit(s2), {Rat(1, 3)});
    CHECK(rep.pass);
    CHECK(rep.compact_value == -1);
    REQUIRE(rep.models.size() == 2);
    // Model at N reduces at a point outside its cone.
    for (const auto& m : rep.models) {
        if (m.point_id == "N") {
            CHECK(m.obviously_empty);
            CHECK(m.value == 0);
        } else {
            CHECK(!m.obviously_empty);
            CHECK(m.sign == -1);
            CHECK(m.value == 1);
        }
    }
}

TEST_CASE("cobordism decomposition on compact models at sample points") {
    SpaceModel m3 = builders::sphere_power(3);
    CHECK(cobordism_check(m3, class_unit(m3), {Rat(0)}).pass);
    CHECK(cobordism_check(m3, sphere_monomial(m3, {1, 1, 0}), {Rat(1, 2)}).pass);

    SpaceModel cp2 = builders::cp2();
    CHECK(cobordism_check(cp2, class_unit(cp2), {Rat(0), Rat(0)}).pass);
    CHECK(cobordism_check(cp2, class_pow(builders::cp2_nu(cp2), 2), {Rat(1, 3), Rat(1, 5)}).pass);

    SpaceModel prod = product_space(cp2, cp2);
    EquivariantClass a = cp2_product_half_square();
    a.space = prod.name();
    CobordismReport rep = cobordism_check(prod, a, {Rat(0), Rat(0)});
    CHECK(rep.pass);
    CHECK(rep.linear_total == 3);
    // Only the three contributing corners have nonzero linear models.
    for (const auto& m : rep.models) {
        bool contributing = m.point_id == "(S,S)" || m.point_id == "(S,E)" ||
                            m.point_id == "(E,S)";
        if (!contributing) CHECK(m.value == 0);
    }
}

TEST_CASE("zero class gives an all-zero cobordism report") {
    SpaceModel s2 = builders::sphere();
    EquivariantClass zero;
    zero.space = s2.name();
    zero.restrictions["N"] = MPoly(1);
    zero.restrictions["S"] = MPoly(1);
    CobordismReport rep = cobordism_check(s2, zero, {Rat(1, 3)});
    CHECK(rep.pass);
    CHECK(rep.compact_value == 0);
    for (const auto& m : rep.models) CHECK(m.value == 0);
}

TEST_CASE("nonabelian pairing reduces to the torus case for empty root sets") {
    SpaceModel s2 = builders::sphere();
    PairingResult direct = pair(s2, class_unit(s2), {Rat(1, 3)});
    PairingResult viaG = nonabelian_pair(s2, class_unit(s2), {}, 1, {Rat(1, 3)});
    CHECK(*viaG.value == *direct.value);
}

TEST_CASE("nonabelian pairing on the triple sphere power with rank-one roots") {
    SpaceModel m3 = builders::sphere_power(3);
    PairingResult r =
        nonabelian_pair(m3, class_unit(m3), {LinForm{2}, LinForm{-2}}, 2, {Rat(0)});
    REQUIRE(r.regular);
    // e_Delta = (2u)(-2u) = -4u^2; the inner u^2 pairing is 2 by the
    // enumeration oracle, so the value is (1/2)(-4)(2) = -4.
    EquivariantClass u2 = class_uniform(m3, MPoly::monomial(1, {2}, 1));
    CHECK(fixed_point_enumeration(m3, u2, Rat(0)) == 2);
    CHECK(*r.value == -4);

    EquivariantClass zero;
    zero.space = m3.name();
    for (const auto& p : m3.points()) zero.restrictions[p.id] = MPoly(1);
    CHECK(*nonabelian_pair(m3, zero, {LinForm{2}, LinForm{-2}}, 2, {Rat(0)}).value == 0);
}

TEST_CASE("regularity checks") {
    SpaceModel m3 = builders::sphere_power(3);
    RegularityReport r3 = regularity_check(m3, {Rat(0)});
    CHECK(r3.regular);
    CHECK(!r3.nearest_wall.empty());

    SpaceModel m2 = builders::sphere_power(2);
    RegularityReport r2 = regularity_check(m2, {Rat(0)});
    CHECK(!r2.regular);

    SpaceModel s2 = builders::sphere();
    RegularityReport r1 = regularity_check(s2, {Rat(1)});
    CHECK(!r1.regular);
    CHECK(!r1.witness.empty());
}

TEST_CASE("non-regular pairing carries a wall witness and no value") {
    SpaceModel s2 = builders::sphere();
    PairingResult r = pair(s2, class_unit(s2), {Rat(1)});
    CHECK(!r.regular);
    CHECK(!r.value);
    CHECK(!r.wall_witness.empty());
}

TEST_CASE("doubling one weight halves the linear volume") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> wc(-3, 3), nw(2, 5), kk(1, 2), mix(1, 9);
    int done = 0;
    while (done < 20) {
        size_t k = kk(rng);
        size_t n = std::max<size_t>(nw(rng), k);
        std::vector<LinForm> weights;
        for (size_t i = 0; i < n; ++i) {
            std::vector<Int> c(k);
            bool zero = true;
            for (auto& x : c) {
                x = wc(rng);
                if (x != 0) zero = false;
            }
            if (zero) c[0] = 1;
            weights.emplace_back(std::move(c));
        }
        if (!polarizable(weights) || form_rank(weights) < k) continue;
        VecQ t(k, Rat(0));
        for (const auto& w : weights) {
            Rat r(mix(rng), 5);
            for (size_t c = 0; c < k; ++c) t[c] += r * Rat(w[c]);
        }
        std::uniform_int_distribution<size_t> pick(0, n - 1);
        size_t which = pick(rng);
        std::vector<LinForm> doubled = weights;
        std::vector<Int> dc;
        for (size_t c = 0; c < k; ++c) dc.push_back(weights[which][c] * 2);
        doubled[which] = LinForm{std::move(dc)};

        SpaceModel base = builders::linear("v", k, weights);
        SpaceModel twice = builders::linear("w", k, doubled);
        PairingResult rb = pair(base, class_unit(base), t);
        PairingResult rd = pair(twice, class_unit(twice), t);
        if (!rb.regular || !rd.regular) continue;
        CHECK(*rd.value * 2 == *rb.value);
        ++done;
    }
}

TEST_CASE("convolution route equals the direct product route") {
    SpaceModel s2 = builders::sphere();
    SpaceModel prod = product_space(s2, s2);
    EquivariantClass one2 = class_unit(prod);
    Polarization pol = polarize(prod, {Int(1)});
    Polarization pf = polarize(s2, pol.xi);
    auto conv = convolve(pushforward_terms(s2, class_unit(s2), pf),
                         pushforward_terms(s2, class_unit(s2), pf));
    for (const auto& t : {Rat(1, 2), Rat(-3, 2), Rat(5, 4), Rat(-1, 3)}) {
        PairingResult direct = pair(prod, one2, {t}, pol.xi);
        REQUIRE(direct.regular);
        Rat total = 0;
        for (const auto& term : conv) {
            EvalResult e = eval(decompose(term, 1), {t});
            REQUIRE(e.regular);
            total += e.value;
        }
        CHECK(total == *direct.value);
    }
}
