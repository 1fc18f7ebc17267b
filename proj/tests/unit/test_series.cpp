#include <doctest.h>

#include <random>
#include <stdexcept>

#include <rc/lattice.hpp>
#include <rc/series.hpp>

#include "helpers.hpp"

using rc::JacobiSeries;
using rc::Rational;

TEST_CASE("coefficients are stored sparsely and bounded by trunc")
{
    JacobiSeries f(4, 1, 3);
    f.set(2, 1, Rational(5, 2));
    CHECK(f.coeff(2, 1) == Rational(5, 2));
    CHECK(f.coeff(2, -1) == 0);
    f.add_to(2, 1, Rational(-5, 2));
    CHECK(f.is_zero());
    CHECK_THROWS_AS(f.set(4, 0, 1), std::out_of_range);
    CHECK_THROWS_AS(f.set(-1, 0, 1), std::out_of_range);
}

TEST_CASE("ring laws on random series")
{
    std::mt19937 rng(20261019);
    for (int trial = 0; trial < 5; ++trial) {
        const auto a = rc_test::random_series(rng, 4, 1, 4);
        const auto b = rc_test::random_series(rng, 4, 1, 4);
        const auto c = rc_test::random_series(rng, 6, 2, 4);
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(add(a, b), c) == add(mul(a, c), mul(b, c)));
        CHECK(mul(a, rc::unit_series(4)).coeffs() == a.coeffs());
        CHECK(sub(a, a).is_zero());
        CHECK(add(a, negate(a)).is_zero());
        CHECK(scale(a, Rational(3, 7)) == scale(scale(a, 3), Rational(1, 7)));
    }
}

TEST_CASE("add requires matching weight and index; trunc is the minimum")
{
    CHECK_THROWS_AS(add(JacobiSeries(4, 1, 3), JacobiSeries(6, 1, 3)), std::invalid_argument);
    CHECK_THROWS_AS(add(JacobiSeries(4, 1, 3), JacobiSeries(4, 2, 3)), std::invalid_argument);
    CHECK(add(JacobiSeries(4, 1, 3), JacobiSeries(4, 1, 5)).trunc() == 3);
    const auto p = mul(JacobiSeries(4, 1, 3), JacobiSeries(6, 2, 5));
    CHECK(p.weight() == 10);
    CHECK(p.index() == 3);
    CHECK(p.trunc() == 3);
}

TEST_CASE("E8 Jacobi theta is the index-1 Eisenstein series")
{
    // Coefficients of E_{4,1} depend only on D = 4n - r^2:
    // D = 0, 3, 4, 7, 8 give 1, 56, 126, 576, 756.
    const auto theta = rc_test::e8_theta(3);
    CHECK(theta.weight() == 4);
    CHECK(theta.index() == 1);
    CHECK(theta.coeff(0, 0) == 1);
    CHECK(theta.coeff(1, 0) == 126);
    CHECK(theta.coeff(1, 1) == 56);
    CHECK(theta.coeff(1, -2) == 1);
    CHECK(theta.coeff(2, 0) == 756);
    CHECK(theta.coeff(2, 1) == 576);
    CHECK(theta.coeff(2, 2) == 126);
    CHECK(theta.coeff(2, 4) == 0);
}

TEST_CASE("differential operators scale coefficients")
{
    JacobiSeries f(4, 2, 3);
    f.set(3, 2, 5);
    CHECK(theta_q(f).coeff(3, 2) == 15);
    CHECK(theta_q(f).weight() == 6);
    CHECK(d_z(f).coeff(3, 2) == 10);
    CHECK(d_z(f).weight() == 5);
    CHECK(heat(f).coeff(3, 2) == 5 * (4 * 3 * 2 - 4));
    CHECK(heat(f).weight() == 6);
    CHECK(heat_power(f, 3) == heat(heat(heat(f))));
    CHECK(theta_q_power(f, 2) == theta_q(theta_q(f)));
    CHECK(heat_power(f, 0) == f);
}

TEST_CASE("support predicates")
{
    const auto theta = rc_test::e8_theta(3);
    CHECK(rc::has_holomorphic_support(theta));
    CHECK_FALSE(rc::has_cusp_support(theta));
    const auto bad = rc::find_support_violation(theta, true);
    REQUIRE(bad);
    CHECK(*bad == JacobiSeries::key_type{0, 0});

    JacobiSeries weak(4, 1, 2);
    weak.set(1, 3, 1);
    CHECK_FALSE(rc::has_holomorphic_support(weak));
}

TEST_CASE("disc-class invariance detects a single corrupted coefficient")
{
    auto theta = rc_test::e8_theta(4);
    CHECK(rc::check_disc_class_invariance(theta));
    theta.set(2, 1, 577);
    const auto result = rc::check_disc_class_invariance(theta);
    REQUIRE_FALSE(result.invariant);
    REQUIRE(result.witness);
    CHECK(!result.witness->describe().empty());
    // Absent class members count as zero.
    JacobiSeries lone(4, 1, 4);
    lone.set(1, 0, 1);
    CHECK_FALSE(rc::check_disc_class_invariance(lone));
    CHECK_THROWS_AS(rc::check_disc_class_invariance(JacobiSeries(4, 0, 3)), std::invalid_argument);
}

TEST_CASE("parity follows the weight")
{
    const auto theta = rc_test::e8_theta(3);
    CHECK(rc::check_parity(theta));
    const auto odd = d_z(theta);
    CHECK(rc::check_parity(odd));
    CHECK_FALSE(rc::check_parity(odd.with_weight(6)));
    const auto v = rc::find_parity_violation(odd.with_weight(6));
    REQUIRE(v);
}

TEST_CASE("elliptic forms embed at index 0")
{
    const auto e4 = rc::eisenstein_q(4, 3);
    const auto j = e4.to_jacobi();
    CHECK(j.index() == 0);
    CHECK(j.weight() == 4);
    CHECK(j.coeff(1, 0) == 240);
    CHECK(j.coeff(3, 0) == 240 * 28);
    CHECK(j.restricted(1).coeffs().size() == 2);
}
