#pragma once

#include <optional>
#include <string>
#include <vector>

#include <rc/rational.hpp>
#include <rc/series.hpp>

namespace rc {

// Formal power series sum_nu chi_nu W^nu whose coefficients are Jacobi
// series of a common index; chi_nu carries weight base_weight + 2 nu.
struct FormalJet {
    int base_weight = 0;
    int index = 0;
    std::vector<JacobiSeries> chis;

    int max_order() const { return static_cast<int>(chis.size()) - 1; }
};

// 1 / (nu! prod_{i=1..nu} (k - 3/2 + i)).
Rational jet_normalization(int k, int nu);

// chi_nu = jet_normalization(k, nu) heat^nu(f), nu = 0..max_order.
FormalJet jet_of_form(const JacobiSeries &f, int max_order);

// W -> lambda W.
FormalJet jet_scale_W(const FormalJet &jet, const Rational &lambda);

// Cauchy product in W, series product in each coefficient.
FormalJet jet_mul(const FormalJet &a, const FormalJet &b);

// m' (d_z a) b - m a (d_z b), with base weight K_a + K_b + 1.
FormalJet jet_odd_combine(const FormalJet &a, const FormalJet &b, int m, int m_prime);

// sum_{j=0}^{nu} (-(K - 3/2 + nu))_{nu-j} / j! heat^j(chi_{nu-j}), heat at
// the jet's index; weight K + 2 nu.
JacobiSeries zeta_nu(const FormalJet &jet, int nu);

// Builds the order-v bracket out of generating functions alone. The W
// scalings are (1 - m' X) on the jet of f and (1 + m X) on the jet of g,
// which is the parametrization matching bracket_jacobi at the same X.
JacobiSeries genfun_bracket(const JacobiSeries &f, const JacobiSeries &g, const Rational &x, int v);

struct CrosscheckResult {
    enum class Status { proportional, indeterminate, mismatch };

    Status status = Status::indeterminate;
    // genfun_bracket = lambda * bracket_jacobi when proportional.
    Rational lambda;
    std::string witness;

    bool ok() const { return status != Status::mismatch; }
};

// Proportionality test: the first nonzero coefficient of either side fixes
// lambda, every other coefficient must then agree exactly. Both sides zero
// is indeterminate rather than a failure.
CrosscheckResult proportionality(const JacobiSeries &lhs, const JacobiSeries &rhs);

CrosscheckResult crosscheck_bracket(const JacobiSeries &f, const JacobiSeries &g, const Rational &x, int v);

} // namespace rc
