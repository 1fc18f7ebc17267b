#include <doctest.h>

#include <array>
#include <map>
#include <stdexcept>

#include <rc/lattice.hpp>
#include <rc/siegel.hpp>

using rc::LatticeDesc;
using rc::Rational;

TEST_CASE("E8 shell counts agree with a brute-force box search")
{
    // Doubled coordinates of norm <= 4 vectors lie in [-4, 4].
    std::map<int, long> brute;
    std::array<int, 8> c{};
    const auto lattice = LatticeDesc::e8();
    for (long code = 0; code < 43046721L; ++code) { // 9^8
        long rest = code;
        int norm4 = 0;
        for (int i = 0; i < 8; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<int>(rest % 9) - 4;
            rest /= 9;
            norm4 += c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(i)];
        }
        if (norm4 > 16 || !lattice.contains(std::span<const int>(c))) {
            continue;
        }
        ++brute[norm4 / 8];
    }
    CHECK(brute[0] == 1);
    CHECK(brute[1] == 240);
    CHECK(brute[2] == 2160);

    std::map<int, long> enumerated;
    for (const auto &x : rc::enumerate_vectors(lattice, 2)) {
        ++enumerated[rc::half_norm(x)];
    }
    CHECK(enumerated == brute);
}

TEST_CASE("E8 + E8 shells are the coefficients of E8 = E4^2")
{
    const auto e8 = rc::eisenstein_q(8, 3);
    std::map<int, long> counts;
    for (const auto &x : rc::enumerate_vectors(LatticeDesc::e8_e8(), 3)) {
        ++counts[rc::half_norm(x)];
    }
    for (int n = 0; n <= 3; ++n) {
        CHECK(Rational(counts[n]) == e8.coeff(n));
    }
    CHECK(counts[1] == 480);
}

TEST_CASE("membership and coordinate conversion")
{
    const auto lattice = LatticeDesc::e8();
    const Rational h(1, 2);
    CHECK(lattice.vector_from({h, h, h, h, h, h, h, h}).twice[0] == 1);
    CHECK_THROWS_AS(lattice.vector_from({h, h, h, h, h, h, h, -h}), std::invalid_argument);
    CHECK_THROWS_AS(lattice.vector_from({1, 0, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(lattice.vector_from({Rational(1, 3), 0, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
    CHECK(LatticeDesc::by_name("e8e8").rank() == 16);
    CHECK_THROWS_AS(LatticeDesc::by_name("leech"), std::invalid_argument);
    const auto v = rc::default_vector(lattice, 2);
    CHECK(rc::half_norm(v) == 2);
}

TEST_CASE("Bernoulli numbers and Eisenstein series")
{
    CHECK(rc::bernoulli(1) == Rational(-1, 2));
    CHECK(rc::bernoulli(4) == Rational(-1, 30));
    CHECK(rc::bernoulli(12) == Rational(-691, 2730));
    const auto e4 = rc::eisenstein_q(4, 4);
    CHECK(e4.coeff(1) == 240);
    CHECK(e4.coeff(2) == 2160);
    CHECK(e4.coeff(4) == 240 * 73);
    const auto e6 = rc::eisenstein_q(6, 2);
    CHECK(e6.coeff(1) == -504);
    CHECK(e6.coeff(2) == -504 * 33);
    CHECK_THROWS_AS(rc::eisenstein_q(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(rc::eisenstein_q(2, 3), std::invalid_argument);
}

TEST_CASE("Siegel theta of E8 counts root pairs by inner product")
{
    const auto F = rc::siegel_theta(LatticeDesc::e8(), 2);
    CHECK(F.weight() == 4);
    CHECK(F.coeff(0, 0, 0) == 1);
    CHECK(F.coeff(1, 0, 0) == 240);
    CHECK(F.coeff(0, 0, 1) == 240);
    // For a fixed root: 1, 56, 126, 56, 1 roots at inner product 2 .. -2.
    CHECK(F.coeff(1, 2, 1) == 240);
    CHECK(F.coeff(1, 1, 1) == 240 * 56);
    CHECK(F.coeff(1, 0, 1) == 240 * 126);
    CHECK(F.coeff(1, -1, 1) == 240 * 56);
    // The Weyl group acts transitively on roots, so slice 1 is 240 copies of one theta.
    CHECK(F.slice(1) == scale(rc::jacobi_theta(LatticeDesc::e8(), rc::default_vector(LatticeDesc::e8(), 1), 2), 240));
}

TEST_CASE("E8 + E8 Jacobi theta agrees with direct vector counting")
{
    const auto lattice = LatticeDesc::e8_e8();
    const auto v = rc::default_vector(lattice, 2);
    const auto theta = rc::jacobi_theta(lattice, v, 2);
    rc::JacobiSeries counted(8, 2, 2);
    for (const auto &x : rc::enumerate_vectors(lattice, 2)) {
        counted.add_to(rc::half_norm(x), rc::inner_product(x, v), 1);
    }
    CHECK(theta == counted);
    CHECK(rc::check_disc_class_invariance(theta));
}
