#include <rc/series.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <rc/parallel.hpp>

namespace rc {

JacobiSeries::JacobiSeries(int weight, int index, int trunc) : weight_(weight), index_(index), trunc_(trunc)
{
    if (index < 0) {
        throw std::invalid_argument("Jacobi index must be non-negative, got " + std::to_string(index));
    }
    if (trunc < 0) {
        throw std::invalid_argument("truncation must be non-negative, got " + std::to_string(trunc));
    }
}

Rational JacobiSeries::coeff(int n, int r) const
{
    const auto it = coeffs_.find({n, r});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void JacobiSeries::set(int n, int r, const Rational &value)
{
    if (n < 0 || n > trunc_) {
        throw std::out_of_range("q-exponent " + std::to_string(n) + " outside [0, " + std::to_string(trunc_) + "]");
    }
    Rational c(value);
    c.canonicalize();
    if (c == 0) {
        coeffs_.erase({n, r});
    } else {
        coeffs_[{n, r}] = std::move(c);
    }
}

void JacobiSeries::add_to(int n, int r, const Rational &value)
{
    if (value == 0) {
        return;
    }
    set(n, r, coeff(n, r) + value);
}

JacobiSeries JacobiSeries::with_weight(int weight) const
{
    JacobiSeries out = *this;
    out.weight_ = weight;
    return out;
}

JacobiSeries JacobiSeries::restricted(int trunc) const
{
    if (trunc > trunc_) {
        throw std::invalid_argument("cannot extend truncation from " + std::to_string(trunc_) + " to "
                                    + std::to_string(trunc));
    }
    JacobiSeries out(weight_, index_, trunc);
    for (const auto &[key, c] : coeffs_) {
        if (key.first <= trunc) {
            out.coeffs_.emplace_hint(out.coeffs_.end(), key, c);
        }
    }
    return out;
}

EllipticSeries::EllipticSeries(int weight, std::vector<Rational> coeffs) : weight_(weight), coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw std::invalid_argument("elliptic series needs at least the constant term");
    }
}

JacobiSeries EllipticSeries::to_jacobi() const
{
    JacobiSeries out(weight_, 0, trunc());
    for (int n = 0; n <= trunc(); ++n) {
        out.set(n, 0, coeffs_[static_cast<std::size_t>(n)]);
    }
    return out;
}

JacobiSeries unit_series(int trunc)
{
    JacobiSeries one(0, 0, trunc);
    one.set(0, 0, 1);
    return one;
}

namespace {

void require_same_space(const JacobiSeries &f, const JacobiSeries &g, const char *op)
{
    if (f.weight() != g.weight() || f.index() != g.index()) {
        std::ostringstream msg;
        msg << op << ": mismatched (weight, index) (" << f.weight() << ", " << f.index() << ") vs (" << g.weight()
            << ", " << g.index() << ")";
        throw std::invalid_argument(msg.str());
    }
}

// Applies c(n, r) -> mult(n, r) * c(n, r).
template <typename Mult>
JacobiSeries multiply_coefficients(const JacobiSeries &f, int weight, Mult mult)
{
    JacobiSeries out(weight, f.index(), f.trunc());
    for (const auto &[key, c] : f.coeffs()) {
        out.set(key.first, key.second, c * mult(key.first, key.second));
    }
    return out;
}

long isqrt(long x)
{
    long s = static_cast<long>(std::sqrt(static_cast<double>(x)));
    while (s * s > x) {
        --s;
    }
    while ((s + 1) * (s + 1) <= x) {
        ++s;
    }
    return s;
}

using row_t = std::vector<std::pair<int, const Rational *>>;

std::vector<row_t> rows_of(const JacobiSeries &f, int trunc)
{
    std::vector<row_t> rows(static_cast<std::size_t>(trunc) + 1);
    for (const auto &[key, c] : f.coeffs()) {
        if (key.first <= trunc) {
            rows[static_cast<std::size_t>(key.first)].emplace_back(key.second, &c);
        }
    }
    return rows;
}

} // namespace

JacobiSeries add(const JacobiSeries &f, const JacobiSeries &g)
{
    require_same_space(f, g, "add");
    const int trunc = std::min(f.trunc(), g.trunc());
    JacobiSeries out = f.restricted(trunc);
    for (const auto &[key, c] : g.coeffs()) {
        if (key.first <= trunc) {
            out.add_to(key.first, key.second, c);
        }
    }
    return out;
}

JacobiSeries sub(const JacobiSeries &f, const JacobiSeries &g)
{
    return add(f, negate(g));
}

JacobiSeries scale(const JacobiSeries &f, const Rational &lambda)
{
    return multiply_coefficients(f, f.weight(), [&](int, int) { return lambda; });
}

JacobiSeries negate(const JacobiSeries &f)
{
    return scale(f, Rational(-1));
}

JacobiSeries mul(const JacobiSeries &f, const JacobiSeries &g)
{
    const int trunc = std::min(f.trunc(), g.trunc());
    const auto frows = rows_of(f, trunc);
    const auto grows = rows_of(g, trunc);

    // Output rows are computed independently, so the result does not depend
    // on how rows are distributed over threads.
    std::vector<std::vector<std::pair<int, Rational>>> out_rows(static_cast<std::size_t>(trunc) + 1);
    parallel_chunks(out_rows.size(), [&](std::size_t begin, std::size_t end) {
        Rational term;
        for (std::size_t n = begin; n < end; ++n) {
            int rmin = std::numeric_limits<int>::max();
            int rmax = std::numeric_limits<int>::min();
            for (std::size_t n1 = 0; n1 <= n; ++n1) {
                const auto &a = frows[n1];
                const auto &b = grows[n - n1];
                if (a.empty() || b.empty()) {
                    continue;
                }
                rmin = std::min(rmin, a.front().first + b.front().first);
                rmax = std::max(rmax, a.back().first + b.back().first);
            }
            if (rmin > rmax) {
                continue;
            }
            std::vector<Rational> acc(static_cast<std::size_t>(rmax - rmin) + 1);
            for (std::size_t n1 = 0; n1 <= n; ++n1) {
                for (const auto &[r1, c1] : frows[n1]) {
                    for (const auto &[r2, c2] : grows[n - n1]) {
                        mpq_mul(term.get_mpq_t(), c1->get_mpq_t(), c2->get_mpq_t());
                        auto &slot = acc[static_cast<std::size_t>(r1 + r2 - rmin)];
                        slot += term;
                    }
                }
            }
            auto &row = out_rows[n];
            for (std::size_t i = 0; i < acc.size(); ++i) {
                if (acc[i] != 0) {
                    row.emplace_back(rmin + static_cast<int>(i), std::move(acc[i]));
                }
            }
        }
    });

    JacobiSeries out(f.weight() + g.weight(), f.index() + g.index(), trunc);
    for (std::size_t n = 0; n < out_rows.size(); ++n) {
        for (auto &[r, c] : out_rows[n]) {
            out.set(static_cast<int>(n), r, c);
        }
    }
    return out;
}

JacobiSeries theta_q(const JacobiSeries &f)
{
    return multiply_coefficients(f, f.weight() + 2, [](int n, int) { return Rational(n); });
}

JacobiSeries d_z(const JacobiSeries &f)
{
    return multiply_coefficients(f, f.weight() + 1, [](int, int r) { return Rational(r); });
}

JacobiSeries heat(const JacobiSeries &f)
{
    const long m = f.index();
    return multiply_coefficients(f, f.weight() + 2, [m](int n, int r) {
        return Rational(Integer(4 * static_cast<long>(n) * m - static_cast<long>(r) * r));
    });
}

JacobiSeries heat_power(const JacobiSeries &f, int power)
{
    if (power < 0) {
        throw std::invalid_argument("negative heat power");
    }
    JacobiSeries out = f;
    for (int i = 0; i < power; ++i) {
        out = heat(out);
    }
    return out;
}

JacobiSeries theta_q_power(const JacobiSeries &f, int power)
{
    if (power < 0) {
        throw std::invalid_argument("negative theta_q power");
    }
    JacobiSeries out = f;
    for (int i = 0; i < power; ++i) {
        out = theta_q(out);
    }
    return out;
}

std::optional<JacobiSeries::key_type> find_support_violation(const JacobiSeries &f, bool strict)
{
    const long m = f.index();
    for (const auto &[key, c] : f.coeffs()) {
        const long disc = 4L * key.first * m - static_cast<long>(key.second) * key.second;
        if (disc < 0 || (strict && disc == 0)) {
            return key;
        }
    }
    return std::nullopt;
}

bool has_holomorphic_support(const JacobiSeries &f)
{
    return !find_support_violation(f, false);
}

bool has_cusp_support(const JacobiSeries &f)
{
    return !find_support_violation(f, true);
}

std::string ClassViolation::describe() const
{
    std::ostringstream out;
    out << "c(" << n << "," << r << ") = " << value.get_str() << " but c(" << other_n << "," << other_r
        << ") = " << other_value.get_str() << " in the same class";
    return out.str();
}

ClassInvarianceResult check_disc_class_invariance(const JacobiSeries &f)
{
    const long m = f.index();
    if (m < 1) {
        throw std::invalid_argument("disc-class invariance needs index >= 1");
    }
    const long N = f.trunc();
    for (const auto &[key, c] : f.coeffs()) {
        const long n = key.first;
        const long r = key.second;
        // Members of the class are (n + t r + m t^2, r + 2 m t), t in Z, and
        // n' <= N forces |t| <= (|r| + sqrt(r^2 + 4 m N)) / (2 m).
        const long reach = (std::labs(r) + isqrt(r * r + 4 * m * N)) / (2 * m) + 1;
        for (long t = -reach; t <= reach; ++t) {
            const long other_n = n + t * r + m * t * t;
            if (t == 0 || other_n < 0 || other_n > N) {
                continue;
            }
            const long other_r = r + 2 * m * t;
            const auto other = f.coeff(static_cast<int>(other_n), static_cast<int>(other_r));
            if (other != c) {
                return {false, ClassViolation{static_cast<int>(n), static_cast<int>(r), static_cast<int>(other_n),
                                              static_cast<int>(other_r), c, other}};
            }
        }
    }
    return {};
}

std::optional<JacobiSeries::key_type> find_parity_violation(const JacobiSeries &f)
{
    const bool odd = (f.weight() % 2) != 0;
    for (const auto &[key, c] : f.coeffs()) {
        const auto mirror = f.coeff(key.first, -key.second);
        if (mirror != (odd ? Rational(-c) : c)) {
            return key;
        }
    }
    return std::nullopt;
}

bool check_parity(const JacobiSeries &f)
{
    return !find_parity_violation(f);
}

} // namespace rc
