#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include <rc/rational.hpp>
#include <rc/series.hpp>

namespace rc {

// Truncated degree-2 expansion sum a(n, r, m) q1^n zeta^r q2^m, complete for
// 0 <= n, m <= trunc. Slice m is the index-m Jacobi coefficient f_m.
class SiegelSeries
{
public:
    using key_type = std::tuple<int, int, int>; // (n, r, m)
    using map_type = std::map<key_type, Rational>;

    SiegelSeries() = default;
    SiegelSeries(int weight, int trunc);

    int weight() const { return weight_; }
    int trunc() const { return trunc_; }
    const map_type &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int n, int r, int m) const;
    void set(int n, int r, int m, const Rational &value);
    void add_to(int n, int r, int m, const Rational &value);

    JacobiSeries slice(int m) const;

    friend bool operator==(const SiegelSeries &, const SiegelSeries &) = default;

private:
    int weight_ = 0;
    int trunc_ = 0;
    map_type coeffs_;
};

class SymmetryViolation : public std::invalid_argument
{
public:
    explicit SymmetryViolation(SiegelSeries::key_type key);
    const SiegelSeries::key_type &key() const { return key_; }

private:
    SiegelSeries::key_type key_;
};

// First key with a(n, r, m) != a(m, r, n).
std::optional<SiegelSeries::key_type> find_symmetry_violation(const SiegelSeries &F);

// Component m must have index m and the common weight; T = size - 1 and each
// component needs trunc >= T. Throws SymmetryViolation on asymmetric input.
SiegelSeries siegel_from_components(const std::vector<JacobiSeries> &components);

SiegelSeries add(const SiegelSeries &F, const SiegelSeries &G);
SiegelSeries scale(const SiegelSeries &F, const Rational &lambda);
// Cauchy product in (n, m), convolution in r.
SiegelSeries mul(const SiegelSeries &F, const SiegelSeries &G);

// Delta / (2 pi i)^2: a(n, r, m) -> (4nm - r^2) a(n, r, m), weight + 2.
SiegelSeries delta_op(const SiegelSeries &F);
SiegelSeries delta_power(const SiegelSeries &F, int power);

// sum_{r+s+p=l} C_{r,s,p} Delta^p(Delta^r F . Delta^s G), divided by
// (2 pi i)^{2l}; weight k + k' + 2l.
SiegelSeries bracket_siegel_direct(const SiegelSeries &F, const SiegelSeries &G, int l);

// Slice mu = sum_{m + m' = mu} bracket_jacobi(f_m, g_m', 0, 2l).
SiegelSeries bracket_siegel_via_jacobi(const SiegelSeries &F, const SiegelSeries &G, int l);

struct CheckOutcome {
    std::string name;
    bool passed = true;
    std::string witness;
};

struct ConsistencyReport {
    std::vector<CheckOutcome> checks;

    bool passed() const;
    std::string summary() const;
};

// Symmetry, then disc-class invariance, holomorphic support and parity of
// every slice m >= 1. With require_cusp, also strict support and vanishing
// m = 0 slice.
ConsistencyReport check_siegel_consistency(const SiegelSeries &F, bool require_cusp = false);

} // namespace rc
