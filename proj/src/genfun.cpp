#include <rc/genfun.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <rc/bracket.hpp>

namespace rc {

Rational jet_normalization(int k, int nu)
{
    if (nu < 0) {
        throw std::invalid_argument("jet order must be non-negative");
    }
    Rational denom{1};
    for (int i = 1; i <= nu; ++i) {
        denom *= Rational(i) * (Rational(k) - Rational(3, 2) + i);
    }
    if (denom == 0) {
        throw std::domain_error("jet normalization is singular at weight " + std::to_string(k));
    }
    return 1 / denom;
}

FormalJet jet_of_form(const JacobiSeries &f, int max_order)
{
    if (max_order < 0) {
        throw std::invalid_argument("jet order must be non-negative");
    }
    FormalJet jet{f.weight(), f.index(), {}};
    JacobiSeries power = f;
    for (int nu = 0; nu <= max_order; ++nu) {
        jet.chis.push_back(scale(power, jet_normalization(f.weight(), nu)));
        power = heat(power);
    }
    return jet;
}

FormalJet jet_scale_W(const FormalJet &jet, const Rational &lambda)
{
    FormalJet out{jet.base_weight, jet.index, {}};
    Rational factor{1};
    for (const auto &chi : jet.chis) {
        out.chis.push_back(scale(chi, factor));
        factor *= lambda;
    }
    return out;
}

namespace {

void require_same_trunc(const FormalJet &a, const FormalJet &b)
{
    if (a.chis.empty() || b.chis.empty()) {
        throw std::invalid_argument("empty jet");
    }
    if (a.chis.front().trunc() != b.chis.front().trunc()) {
        throw std::invalid_argument("jet truncation mismatch: " + std::to_string(a.chis.front().trunc()) + " vs "
                                    + std::to_string(b.chis.front().trunc()));
    }
}

FormalJet jet_d_z(const FormalJet &a)
{
    FormalJet out{a.base_weight + 1, a.index, {}};
    for (const auto &chi : a.chis) {
        out.chis.push_back(d_z(chi));
    }
    return out;
}

FormalJet jet_scale(const FormalJet &a, const Rational &lambda)
{
    FormalJet out{a.base_weight, a.index, {}};
    for (const auto &chi : a.chis) {
        out.chis.push_back(scale(chi, lambda));
    }
    return out;
}

FormalJet jet_sub(const FormalJet &a, const FormalJet &b)
{
    FormalJet out{a.base_weight, a.index, {}};
    for (std::size_t nu = 0; nu < a.chis.size(); ++nu) {
        out.chis.push_back(sub(a.chis[nu], b.chis[nu]));
    }
    return out;
}

} // namespace

FormalJet jet_mul(const FormalJet &a, const FormalJet &b)
{
    require_same_trunc(a, b);
    const int order = std::min(a.max_order(), b.max_order());
    FormalJet out{a.base_weight + b.base_weight, a.index + b.index, {}};
    for (int nu = 0; nu <= order; ++nu) {
        JacobiSeries acc(out.base_weight + 2 * nu, out.index,
                         std::min(a.chis.front().trunc(), b.chis.front().trunc()));
        for (int t = 0; t <= nu; ++t) {
            acc = add(acc, mul(a.chis[static_cast<std::size_t>(t)], b.chis[static_cast<std::size_t>(nu - t)]));
        }
        out.chis.push_back(std::move(acc));
    }
    return out;
}

FormalJet jet_odd_combine(const FormalJet &a, const FormalJet &b, int m, int m_prime)
{
    require_same_trunc(a, b);
    return jet_sub(jet_mul(jet_scale(jet_d_z(a), m_prime), b), jet_mul(jet_scale(a, m), jet_d_z(b)));
}

JacobiSeries zeta_nu(const FormalJet &jet, int nu)
{
    if (nu < 0 || nu > jet.max_order()) {
        throw std::invalid_argument("zeta_nu order " + std::to_string(nu) + " outside the jet");
    }
    const Rational shift = -(Rational(jet.base_weight) - Rational(3, 2) + nu);
    const auto &chi0 = jet.chis.front();
    JacobiSeries acc(jet.base_weight + 2 * nu, jet.index, chi0.trunc());
    Rational j_factorial{1};
    for (int j = 0; j <= nu; ++j) {
        if (j > 0) {
            j_factorial *= j;
        }
        const Rational factor = falling_factorial(shift, nu - j) / j_factorial;
        auto term = heat_power(jet.chis[static_cast<std::size_t>(nu - j)], j);
        acc = add(acc, scale(term, factor));
    }
    return acc;
}

JacobiSeries genfun_bracket(const JacobiSeries &f, const JacobiSeries &g, const Rational &x, int v)
{
    if (v < 0) {
        throw std::invalid_argument("bracket order v must be non-negative");
    }
    const int nu = v / 2;
    const Rational m(f.index());
    const Rational m_prime(g.index());
    const auto jf = jet_scale_W(jet_of_form(f, nu), 1 - m_prime * x);
    const auto jg = jet_scale_W(jet_of_form(g, nu), 1 + m * x);
    const auto combined = v % 2 == 0 ? jet_mul(jf, jg) : jet_odd_combine(jf, jg, f.index(), g.index());
    return zeta_nu(combined, nu);
}

CrosscheckResult proportionality(const JacobiSeries &lhs, const JacobiSeries &rhs)
{
    CrosscheckResult result;
    if (lhs.is_zero() && rhs.is_zero()) {
        result.status = CrosscheckResult::Status::indeterminate;
        return result;
    }
    std::set<JacobiSeries::key_type> keys;
    for (const auto &[key, c] : lhs.coeffs()) {
        keys.insert(key);
    }
    for (const auto &[key, c] : rhs.coeffs()) {
        keys.insert(key);
    }
    const auto first = *keys.begin();
    const Rational a = lhs.coeff(first.first, first.second);
    const Rational b = rhs.coeff(first.first, first.second);
    auto fail = [&](const JacobiSeries::key_type &key, const Rational &expected, const Rational &actual) {
        std::ostringstream msg;
        msg << "(n,r) = (" << key.first << "," << key.second << "): expected " << expected.get_str() << ", got "
            << actual.get_str();
        result.status = CrosscheckResult::Status::mismatch;
        result.witness = msg.str();
        return result;
    };
    if (a == 0 || b == 0) {
        std::ostringstream msg;
        msg << "(n,r) = (" << first.first << "," << first.second << "): generating function gives " << a.get_str()
            << ", bracket gives " << b.get_str();
        result.status = CrosscheckResult::Status::mismatch;
        result.witness = msg.str();
        return result;
    }
    const Rational lambda = a / b;
    for (const auto &key : keys) {
        const Rational expected = lambda * rhs.coeff(key.first, key.second);
        const Rational actual = lhs.coeff(key.first, key.second);
        if (expected != actual) {
            return fail(key, expected, actual);
        }
    }
    result.status = CrosscheckResult::Status::proportional;
    result.lambda = lambda;
    return result;
}

CrosscheckResult crosscheck_bracket(const JacobiSeries &f, const JacobiSeries &g, const Rational &x, int v)
{
    return proportionality(genfun_bracket(f, g, x, v), bracket_jacobi(f, g, x, v));
}

} // namespace rc
