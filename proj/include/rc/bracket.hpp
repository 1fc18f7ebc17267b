#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <rc/rational.hpp>
#include <rc/series.hpp>

namespace rc {

// Parameters of the bracket [f, f']_{X, v}. Weights are rational so the
// coefficient identities can be probed at non-integral weights; the series
// bracket itself only ever passes integers.
struct BracketParams {
    Rational k;
    Rational k_prime;
    int m = 0;
    int m_prime = 0;
    int v = 0;
    Rational x;

    int half_v() const { return v / 2; }
    int parity() const { return v - 2 * (v / 2); }
    Rational alpha() const;
    Rational beta() const;
    // k + k' - 3/2, plus 1 for odd v.
    Rational gamma() const;
};

// One (r, s, p, i, j) summand: r + s + p = floor(v/2), i + j = v mod 2.
struct BracketTerm {
    int r = 0;
    int s = 0;
    int p = 0;
    int i = 0;
    int j = 0;
    Rational c_value;
    Rational d_value;
};

// Falling factorial x (x - 1) ... (x - n + 1); 1 for n = 0.
Rational falling_factorial(const Rational &x, int n);

Rational coeff_C(int r, int s, int p, const BracketParams &params);
// m^j (-m')^i (1 + m X)^s (1 - m' X)^r. Requires i + j <= 1.
Rational coeff_D(int r, int s, int i, int j, const BracketParams &params);

std::vector<BracketTerm> bracket_terms(const BracketParams &params);

// [f, f']_{X, v} divided by (2 pi i)^v: weight k + k' + v, index m + m',
// trunc min(N, N').
JacobiSeries bracket_jacobi(const JacobiSeries &f, const JacobiSeries &g, const Rational &x, int v);

// P_0, ..., P_{floor(v/2)} with bracket_jacobi(f, g, X, v) = sum_d X^d P_d.
std::vector<JacobiSeries> bracket_jacobi_poly(const JacobiSeries &f, const JacobiSeries &g, int v);

// Rank over Q of the brackets at the sample points, viewed as coefficient
// vectors. Needs pairwise distinct samples, at least floor(v/2) + 2 of them.
int bracket_rank_over_x(const JacobiSeries &f, const JacobiSeries &g, int v, const std::vector<Rational> &samples);
// Samples 0, 1, ..., floor(v/2) + 1.
int bracket_rank_over_x(const JacobiSeries &f, const JacobiSeries &g, int v);
std::vector<Rational> default_x_samples(int v);

// Coefficient source for the recursion check, (r, s, p) -> C_{r,s,p}.
using CoefficientSource = std::function<Rational(int, int, int)>;

struct RecursionViolation {
    int r = 0;
    int s = 0;
    int p = 0;
    int relation = 0; // 1: lowers r, 2: lowers s
    Rational residual;

    std::string describe() const;
};

// Checks, for every r + s + p = l - 1 and gamma = k + k' - 3/2,
//   (r+1)(alpha+r+1) C_{r+1,s,p} + (p+1)(gamma+l+r+s) C_{r,s,p+1} = 0,
//   (s+1)(beta+s+1)  C_{r,s+1,p} + (p+1)(gamma+l+r+s) C_{r,s,p+1} = 0.
// These are the relations that make sum_{r+s+p=l} C_{r,s,p} D^r D'^s D''^p
// harmonic in the theta-series picture. Requires l >= 1.
std::optional<RecursionViolation> find_recursion_violation(const Rational &k, const Rational &k_prime, int l,
                                                           const CoefficientSource &coeff);
std::optional<RecursionViolation> find_recursion_violation(const Rational &k, const Rational &k_prime, int l);
bool check_recursions(const Rational &k, const Rational &k_prime, int l);
bool check_recursions(const Rational &k, const Rational &k_prime, int l, const CoefficientSource &coeff);

} // namespace rc
