#include <doctest.h>

#include <random>
#include <stdexcept>

#include <rc/bracket.hpp>
#include <rc/lattice.hpp>

#include "helpers.hpp"

using rc::BracketParams;
using rc::JacobiSeries;
using rc::Rational;

namespace {

BracketParams params(int k, int kp, int m, int mp, int v, Rational x = 0)
{
    return BracketParams{Rational(k), Rational(kp), m, mp, v, x};
}

} // namespace

TEST_CASE("falling factorial")
{
    CHECK(rc::falling_factorial(Rational(5), 0) == 1);
    CHECK(rc::falling_factorial(Rational(5), 3) == 60);
    CHECK(rc::falling_factorial(Rational(7, 2), 2) == Rational(35, 4));
    CHECK(rc::falling_factorial(Rational(-3, 2), 2) == Rational(15, 4));
}

TEST_CASE("C values at k = k' = 4, v = 2 match hand computation")
{
    // alpha = beta = 5/2, gamma = 13/2, l = 1:
    //   C_{1,0,0} = (beta+1) * (-(gamma+1)) = 7/2 * -15/2
    //   C_{0,0,1} = (alpha+1) * (beta+1)    = 7/2 * 7/2
    const auto p = params(4, 4, 1, 1, 2);
    CHECK(p.alpha() == Rational(5, 2));
    CHECK(p.gamma() == Rational(13, 2));
    CHECK(rc::coeff_C(1, 0, 0, p) == Rational(-105, 4));
    CHECK(rc::coeff_C(0, 1, 0, p) == Rational(-105, 4));
    CHECK(rc::coeff_C(0, 0, 1, p) == Rational(49, 4));
    CHECK(params(4, 4, 1, 1, 3).gamma() == Rational(15, 2));
}

TEST_CASE("D values")
{
    const auto p = params(4, 6, 2, 3, 3, Rational(1, 2));
    // m^j (-m')^i (1 + m X)^s (1 - m' X)^r
    CHECK(rc::coeff_D(0, 0, 1, 0, p) == -3);
    CHECK(rc::coeff_D(0, 0, 0, 1, p) == 2);
    CHECK(rc::coeff_D(1, 0, 0, 1, p) == 2 * Rational(-1, 2));
    CHECK(rc::coeff_D(0, 1, 1, 0, p) == -3 * Rational(2));
    CHECK_THROWS_AS(rc::coeff_D(0, 0, 1, 1, p), std::invalid_argument);
}

TEST_CASE("term enumeration covers r + s + p = floor(v/2), i + j = v mod 2")
{
    CHECK(rc::bracket_terms(params(4, 4, 1, 1, 0)).size() == 1);
    CHECK(rc::bracket_terms(params(4, 4, 1, 1, 1)).size() == 2);
    CHECK(rc::bracket_terms(params(4, 4, 1, 1, 4)).size() == 6);
    CHECK(rc::bracket_terms(params(4, 4, 1, 1, 5)).size() == 12);
}

TEST_CASE("v = 2 bracket equals hand-assembled heat terms")
{
    const auto f = rc_test::e8_theta(5);
    const auto g = mul(rc::eisenstein_q(4, 5).to_jacobi(), f);
    // k = 4, k' = 8: alpha = 5/2, beta = 13/2, gamma = 21/2.
    const Rational c100 = Rational(15, 2) * Rational(-23, 2);
    const Rational c010 = Rational(7, 2) * Rational(-23, 2);
    const Rational c001 = Rational(7, 2) * Rational(15, 2);
    const Rational x(1, 3);
    // D = (1 + m X)^s (1 - m' X)^r with m = m' = 1.
    const auto expected = add(add(scale(mul(heat(f), g), c100 * (1 - x)), scale(mul(f, heat(g)), c010 * (1 + x))),
                              scale(heat(mul(f, g)), c001));
    CHECK(rc::bracket_jacobi(f, g, x, 2) == expected);
}

TEST_CASE("v = 1 bracket is m (f d_z g) - m' (d_z f) g")
{
    std::mt19937 rng(7);
    const auto f = rc_test::random_series(rng, 4, 1, 4);
    const auto g = rc_test::random_series(rng, 6, 2, 4);
    const auto expected = sub(scale(mul(f, d_z(g)), 1), scale(mul(d_z(f), g), 2));
    CHECK(rc::bracket_jacobi(f, g, Rational(5), 1) == expected);
}

TEST_CASE("polynomial coefficients in X reassemble the bracket")
{
    const auto f = rc_test::e8_theta(4);
    const auto g = mul(rc::eisenstein_q(6, 4).to_jacobi(), f);
    for (int v = 0; v <= 5; ++v) {
        const auto poly = rc::bracket_jacobi_poly(f, g, v);
        CHECK(poly.size() == static_cast<std::size_t>(v / 2 + 1));
        const Rational x(-2, 3);
        JacobiSeries sum(f.weight() + g.weight() + v, 2, 4);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            sum = add(sum, scale(poly[d], rc::rational_pow(x, static_cast<unsigned>(d))));
        }
        CHECK(sum == rc::bracket_jacobi(f, g, x, v));
    }
}

TEST_CASE("rank over X")
{
    const auto theta = rc_test::e8_theta(6);
    // Measured: for f = f' the X-linear part vanishes at v = 2.
    CHECK(rc::bracket_rank_over_x(theta, theta, 2) == 1);
    const auto e4t = mul(rc::eisenstein_q(4, 6).to_jacobi(), theta);
    const auto e6t = mul(rc::eisenstein_q(6, 6).to_jacobi(), theta);
    CHECK(rc::bracket_rank_over_x(e4t, e6t, 2) == 2);
    CHECK(rc::bracket_rank_over_x(e4t, e6t, 4) == 3);
    CHECK(rc::bracket_rank_over_x(e4t, e6t, 0) == 1);
    CHECK(rc::default_x_samples(4).size() == 4);
    CHECK_THROWS_AS(rc::bracket_rank_over_x(e4t, e6t, 2, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(rc::bracket_rank_over_x(e4t, e6t, 2, {0, 1, 1}), std::invalid_argument);
}

TEST_CASE("recursion relations hold with the corrected p-factor")
{
    for (int k : {4, 6, 10, 35}) {
        for (int kp : {4, 6, 10, 35}) {
            for (int l = 1; l <= 6; ++l) {
                CHECK(rc::check_recursions(k, kp, l));
            }
        }
    }
    CHECK(rc::check_recursions(Rational(9, 2), Rational(6), 4));
    CHECK(rc::check_recursions(Rational(7, 3), Rational(11, 5), 5));
    CHECK_THROWS_AS(rc::check_recursions(4, 4, 0), std::invalid_argument);
}

TEST_CASE("the factor (p+1)(gamma+l+p+1) leaves a residual")
{
    // At k = k' = 4, l = 1, (r,s,p) = (0,0,0):
    //   (alpha+1) C_{1,0,0} + (gamma+2) C_{0,0,1} = 7/2 * -105/4 + 17/2 * 49/4 = 49/4.
    const auto p = params(4, 4, 1, 1, 2);
    const Rational residual =
        (p.alpha() + 1) * rc::coeff_C(1, 0, 0, p) + (p.gamma() + 1 + 0 + 1) * rc::coeff_C(0, 0, 1, p);
    CHECK(residual == Rational(49, 4));
    const Rational corrected = (p.alpha() + 1) * rc::coeff_C(1, 0, 0, p) + (p.gamma() + 1) * rc::coeff_C(0, 0, 1, p);
    CHECK(corrected == 0);
}

TEST_CASE("perturbing one coefficient is detected with a witness")
{
    const BracketParams p{Rational(6), Rational(10), 0, 0, 6, 0};
    const auto perturbed = [&](int r, int s, int q) {
        const Rational c = rc::coeff_C(r, s, q, p);
        return (r == 1 && s == 1 && q == 1) ? c * 2 : c;
    };
    const auto bad = rc::find_recursion_violation(6, 10, 3, perturbed);
    REQUIRE(bad);
    CHECK(bad->residual != 0);
    CHECK(bad->describe().find("residual") != std::string::npos);
}
