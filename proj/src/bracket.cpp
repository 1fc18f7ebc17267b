#include <rc/bracket.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace rc {

Rational BracketParams::alpha() const
{
    return k - Rational(3, 2);
}

Rational BracketParams::beta() const
{
    return k_prime - Rational(3, 2);
}

Rational BracketParams::gamma() const
{
    return k + k_prime - Rational(3, 2) + parity();
}

Rational falling_factorial(const Rational &x, int n)
{
    if (n < 0) {
        throw std::invalid_argument("falling factorial length must be non-negative");
    }
    Rational out{1};
    for (int i = 0; i < n; ++i) {
        out *= x - i;
    }
    return out;
}

namespace {

Rational factorial(int n)
{
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(out);
}

Rational binomial(int n, int k)
{
    if (k < 0 || k > n) {
        return 0;
    }
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out);
}

} // namespace

Rational coeff_C(int r, int s, int p, const BracketParams &params)
{
    if (r < 0 || s < 0 || p < 0) {
        throw std::invalid_argument("coeff_C indices must be non-negative");
    }
    const int total = r + s + p;
    const Rational a = falling_factorial(params.alpha() + total, s + p) / factorial(r);
    const Rational b = falling_factorial(params.beta() + total, r + p) / factorial(s);
    const Rational c = falling_factorial(-(params.gamma() + total), r + s) / factorial(p);
    return a * b * c;
}

Rational coeff_D(int r, int s, int i, int j, const BracketParams &params)
{
    if (r < 0 || s < 0 || i < 0 || j < 0 || i + j > 1) {
        throw std::invalid_argument("coeff_D needs non-negative indices with i + j <= 1");
    }
    const Rational m(params.m);
    const Rational mp(params.m_prime);
    return rational_pow(m, static_cast<unsigned>(j)) * rational_pow(-mp, static_cast<unsigned>(i))
           * rational_pow(1 + m * params.x, static_cast<unsigned>(s))
           * rational_pow(1 - mp * params.x, static_cast<unsigned>(r));
}

std::vector<BracketTerm> bracket_terms(const BracketParams &params)
{
    if (params.v < 0) {
        throw std::invalid_argument("bracket order v must be non-negative");
    }
    std::vector<BracketTerm> terms;
    const int h = params.half_v();
    const int odd = params.parity();
    for (int r = 0; r <= h; ++r) {
        for (int s = 0; r + s <= h; ++s) {
            const int p = h - r - s;
            const Rational c = coeff_C(r, s, p, params);
            for (int i = 0; i <= odd; ++i) {
                const int j = odd - i;
                terms.push_back({r, s, p, i, j, c, coeff_D(r, s, i, j, params)});
            }
        }
    }
    return terms;
}

namespace {

// heat^p( heat^r(d_z^i f) * heat^s(d_z^j g) ) for every term shape of order v.
struct TermSeries {
    BracketTerm shape;
    JacobiSeries series;
};

std::vector<TermSeries> term_series(const JacobiSeries &f, const JacobiSeries &g, int v)
{
    BracketParams shape_params{f.weight(), g.weight(), f.index(), g.index(), v, 0};
    const int h = v / 2;
    const int odd = v % 2;

    // Cache heat^r(d_z^i f) for r <= h, i <= odd.
    auto powers = [h, odd](const JacobiSeries &base) {
        std::vector<std::vector<JacobiSeries>> out(static_cast<std::size_t>(odd) + 1);
        for (int i = 0; i <= odd; ++i) {
            JacobiSeries cur = i == 0 ? base : d_z(base);
            for (int r = 0; r <= h; ++r) {
                out[static_cast<std::size_t>(i)].push_back(cur);
                cur = heat(cur);
            }
        }
        return out;
    };
    const auto fp = powers(f);
    const auto gp = powers(g);

    std::vector<TermSeries> out;
    for (const auto &term : bracket_terms(shape_params)) {
        const auto product = mul(fp[static_cast<std::size_t>(term.i)][static_cast<std::size_t>(term.r)],
                                 gp[static_cast<std::size_t>(term.j)][static_cast<std::size_t>(term.s)]);
        out.push_back({term, heat_power(product, term.p)});
    }
    return out;
}

JacobiSeries empty_bracket(const JacobiSeries &f, const JacobiSeries &g, int v)
{
    return JacobiSeries(f.weight() + g.weight() + v, f.index() + g.index(), std::min(f.trunc(), g.trunc()));
}

JacobiSeries combine(const std::vector<TermSeries> &terms, const BracketParams &params, JacobiSeries acc)
{
    for (const auto &t : terms) {
        const Rational factor =
            coeff_C(t.shape.r, t.shape.s, t.shape.p, params) * coeff_D(t.shape.r, t.shape.s, t.shape.i, t.shape.j, params);
        if (factor != 0) {
            acc = add(acc, scale(t.series, factor));
        }
    }
    return acc;
}

BracketParams params_for(const JacobiSeries &f, const JacobiSeries &g, const Rational &x, int v)
{
    return BracketParams{f.weight(), g.weight(), f.index(), g.index(), v, x};
}

} // namespace

JacobiSeries bracket_jacobi(const JacobiSeries &f, const JacobiSeries &g, const Rational &x, int v)
{
    if (v < 0) {
        throw std::invalid_argument("bracket order v must be non-negative");
    }
    return combine(term_series(f, g, v), params_for(f, g, x, v), empty_bracket(f, g, v));
}

std::vector<JacobiSeries> bracket_jacobi_poly(const JacobiSeries &f, const JacobiSeries &g, int v)
{
    if (v < 0) {
        throw std::invalid_argument("bracket order v must be non-negative");
    }
    const int h = v / 2;
    const Rational m(f.index());
    const Rational mp(g.index());
    const auto params = params_for(f, g, 0, v);
    std::vector<JacobiSeries> out(static_cast<std::size_t>(h) + 1, empty_bracket(f, g, v));
    for (const auto &t : term_series(f, g, v)) {
        const auto &[r, s, p, i, j, c_unused, d_unused] = t.shape;
        const Rational base = coeff_C(r, s, p, params) * rational_pow(m, static_cast<unsigned>(j))
                              * rational_pow(-mp, static_cast<unsigned>(i));
        // [X^d] (1 + m X)^s (1 - m' X)^r
        for (int d = 0; d <= r + s; ++d) {
            Rational poly_coeff{0};
            for (int a = std::max(0, d - r); a <= std::min(s, d); ++a) {
                poly_coeff += binomial(s, a) * rational_pow(m, static_cast<unsigned>(a)) * binomial(r, d - a)
                              * rational_pow(-mp, static_cast<unsigned>(d - a));
            }
            const Rational factor = base * poly_coeff;
            if (factor != 0) {
                auto &slot = out[static_cast<std::size_t>(d)];
                slot = add(slot, scale(t.series, factor));
            }
        }
    }
    return out;
}

std::vector<Rational> default_x_samples(int v)
{
    std::vector<Rational> out;
    for (int i = 0; i <= v / 2 + 1; ++i) {
        out.emplace_back(i);
    }
    return out;
}

namespace {

int rational_rank(std::vector<std::vector<Rational>> rows)
{
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col] == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
        const auto &prow = rows[static_cast<std::size_t>(rank)];
        for (std::size_t i = static_cast<std::size_t>(rank) + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) {
                continue;
            }
            const Rational factor = rows[i][col] / prow[col];
            for (std::size_t c = col; c < cols; ++c) {
                rows[i][c] -= factor * prow[c];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

int bracket_rank_over_x(const JacobiSeries &f, const JacobiSeries &g, int v, const std::vector<Rational> &samples)
{
    if (static_cast<int>(samples.size()) < v / 2 + 2) {
        throw std::invalid_argument("rank over X needs at least floor(v/2) + 2 samples");
    }
    for (std::size_t a = 0; a < samples.size(); ++a) {
        for (std::size_t b = a + 1; b < samples.size(); ++b) {
            if (samples[a] == samples[b]) {
                throw std::invalid_argument("duplicate X sample " + samples[a].get_str());
            }
        }
    }
    const auto terms = term_series(f, g, v);
    std::vector<JacobiSeries> values;
    std::set<JacobiSeries::key_type> keys;
    for (const auto &x : samples) {
        values.push_back(combine(terms, params_for(f, g, x, v), empty_bracket(f, g, v)));
        for (const auto &[key, c] : values.back().coeffs()) {
            keys.insert(key);
        }
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto &value : values) {
        std::vector<Rational> row;
        row.reserve(keys.size());
        for (const auto &key : keys) {
            row.push_back(value.coeff(key.first, key.second));
        }
        rows.push_back(std::move(row));
    }
    return rational_rank(std::move(rows));
}

int bracket_rank_over_x(const JacobiSeries &f, const JacobiSeries &g, int v)
{
    return bracket_rank_over_x(f, g, v, default_x_samples(v));
}

std::string RecursionViolation::describe() const
{
    std::ostringstream out;
    out << "relation " << relation << " at (r,s,p) = (" << r << "," << s << "," << p << ") leaves residual "
        << residual.get_str();
    return out.str();
}

std::optional<RecursionViolation> find_recursion_violation(const Rational &k, const Rational &k_prime, int l,
                                                           const CoefficientSource &coeff)
{
    if (l < 1) {
        throw std::invalid_argument("recursion check needs l >= 1");
    }
    const Rational alpha = k - Rational(3, 2);
    const Rational beta = k_prime - Rational(3, 2);
    const Rational gamma = k + k_prime - Rational(3, 2);
    for (int r = 0; r <= l - 1; ++r) {
        for (int s = 0; r + s <= l - 1; ++s) {
            const int p = l - 1 - r - s;
            const Rational lowered_p = (p + 1) * (gamma + l + r + s) * coeff(r, s, p + 1);
            const Rational first = (r + 1) * (alpha + r + 1) * coeff(r + 1, s, p) + lowered_p;
            if (first != 0) {
                return RecursionViolation{r, s, p, 1, first};
            }
            const Rational second = (s + 1) * (beta + s + 1) * coeff(r, s + 1, p) + lowered_p;
            if (second != 0) {
                return RecursionViolation{r, s, p, 2, second};
            }
        }
    }
    return std::nullopt;
}

std::optional<RecursionViolation> find_recursion_violation(const Rational &k, const Rational &k_prime, int l)
{
    const BracketParams params{k, k_prime, 0, 0, 2 * l, 0};
    return find_recursion_violation(k, k_prime, l, [&](int r, int s, int p) { return coeff_C(r, s, p, params); });
}

bool check_recursions(const Rational &k, const Rational &k_prime, int l)
{
    return !find_recursion_violation(k, k_prime, l);
}

bool check_recursions(const Rational &k, const Rational &k_prime, int l, const CoefficientSource &coeff)
{
    return !find_recursion_violation(k, k_prime, l, coeff);
}

} // namespace rc
