#pragma once

#include <random>

#include <rc/lattice.hpp>
#include <rc/series.hpp>

namespace rc_test {

inline rc::JacobiSeries e8_theta(int trunc)
{
    const auto lattice = rc::LatticeDesc::e8();
    return rc::jacobi_theta(lattice, rc::default_vector(lattice, 1), trunc);
}

// Random coefficients on r^2 <= 4nm + slack; no modularity, just data.
inline rc::JacobiSeries random_series(std::mt19937 &rng, int weight, int index, int trunc, int slack = 0)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    rc::JacobiSeries f(weight, index, trunc);
    for (int n = 0; n <= trunc; ++n) {
        for (int r = -2 * trunc - 2; r <= 2 * trunc + 2; ++r) {
            if (r * r <= 4 * n * index + slack) {
                f.set(n, r, rc::make_rational(num(rng), den(rng)));
            }
        }
    }
    return f;
}

} // namespace rc_test
