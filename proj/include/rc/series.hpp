#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <rc/rational.hpp>

namespace rc {

// Truncated Fourier expansion sum c(n, r) q^n zeta^r of a (possibly weak)
// Jacobi-type function. Every coefficient with 0 <= n <= trunc is known
// exactly; absent keys are zero. Keys iterate in lexicographic (n, r) order.
class JacobiSeries
{
public:
    using key_type = std::pair<int, int>;
    using map_type = std::map<key_type, Rational>;

    JacobiSeries() = default;
    JacobiSeries(int weight, int index, int trunc);

    int weight() const { return weight_; }
    int index() const { return index_; }
    int trunc() const { return trunc_; }
    const map_type &coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    bool is_zero() const { return coeffs_.empty(); }

    Rational coeff(int n, int r) const;

    // Zero values erase the key. n must lie in [0, trunc].
    void set(int n, int r, const Rational &value);
    void add_to(int n, int r, const Rational &value);

    // Same coefficients, relabelled weight. Used where weight bookkeeping
    // is the caller's business (theta_q chains, embedded elliptic factors).
    JacobiSeries with_weight(int weight) const;

    // Drops all q^n with n > trunc.
    JacobiSeries restricted(int trunc) const;

    friend bool operator==(const JacobiSeries &, const JacobiSeries &) = default;

private:
    int weight_ = 0;
    int index_ = 0;
    int trunc_ = 0;
    map_type coeffs_;
};

// q-expansion of an elliptic modular form; dense in n.
class EllipticSeries
{
public:
    EllipticSeries() = default;
    EllipticSeries(int weight, std::vector<Rational> coeffs);

    int weight() const { return weight_; }
    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational &coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<Rational> &coeffs() const { return coeffs_; }

    // Index-0 Jacobi series with all mass at r = 0.
    JacobiSeries to_jacobi() const;

private:
    int weight_ = 0;
    std::vector<Rational> coeffs_;
};

// The constant series 1 (weight 0, index 0).
JacobiSeries unit_series(int trunc);

JacobiSeries add(const JacobiSeries &f, const JacobiSeries &g);
JacobiSeries sub(const JacobiSeries &f, const JacobiSeries &g);
JacobiSeries scale(const JacobiSeries &f, const Rational &lambda);
JacobiSeries negate(const JacobiSeries &f);

// Cauchy product in (n, r); weight and index add, trunc is the minimum.
JacobiSeries mul(const JacobiSeries &f, const JacobiSeries &g);

// Operators in the normalization where every 2*pi*i factor is divided out:
//   theta_q = d/dtau / (2 pi i)      c(n,r) -> n c(n,r),            weight + 2
//   d_z     = d/dz / (2 pi i)        c(n,r) -> r c(n,r),            weight + 1
//   heat    = L_m / (2 pi i)^2       c(n,r) -> (4nm - r^2) c(n,r),  weight + 2
JacobiSeries theta_q(const JacobiSeries &f);
JacobiSeries d_z(const JacobiSeries &f);
JacobiSeries heat(const JacobiSeries &f);
JacobiSeries heat_power(const JacobiSeries &f, int power);
JacobiSeries theta_q_power(const JacobiSeries &f, int power);

// r^2 <= 4nm on every nonzero coefficient.
bool has_holomorphic_support(const JacobiSeries &f);
// r^2 < 4nm on every nonzero coefficient.
bool has_cusp_support(const JacobiSeries &f);
std::optional<JacobiSeries::key_type> find_support_violation(const JacobiSeries &f, bool strict);

struct ClassViolation {
    int n = 0;
    int r = 0;
    int other_n = 0;
    int other_r = 0;
    Rational value;
    Rational other_value;

    std::string describe() const;
};

struct ClassInvarianceResult {
    bool invariant = true;
    std::optional<ClassViolation> witness;

    explicit operator bool() const { return invariant; }
};

// c(n, r) must depend only on (4nm - r^2, r mod 2m). The stored data is
// exact, so every class member with 0 <= n' <= trunc is compared, absent
// ones counting as zero. Requires index >= 1.
ClassInvarianceResult check_disc_class_invariance(const JacobiSeries &f);

// c(n, -r) = (-1)^k c(n, r).
bool check_parity(const JacobiSeries &f);
std::optional<JacobiSeries::key_type> find_parity_violation(const JacobiSeries &f);

} // namespace rc
