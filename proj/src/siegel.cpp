#include <rc/siegel.hpp>

#include <algorithm>
#include <sstream>

#include <rc/bracket.hpp>

namespace rc {

SiegelSeries::SiegelSeries(int weight, int trunc) : weight_(weight), trunc_(trunc)
{
    if (trunc < 0) {
        throw std::invalid_argument("truncation must be non-negative, got " + std::to_string(trunc));
    }
}

Rational SiegelSeries::coeff(int n, int r, int m) const
{
    const auto it = coeffs_.find({n, r, m});
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void SiegelSeries::set(int n, int r, int m, const Rational &value)
{
    if (n < 0 || n > trunc_ || m < 0 || m > trunc_) {
        throw std::out_of_range("exponents (" + std::to_string(n) + ", " + std::to_string(m) + ") outside [0, "
                                + std::to_string(trunc_) + "]");
    }
    Rational c(value);
    c.canonicalize();
    if (c == 0) {
        coeffs_.erase({n, r, m});
    } else {
        coeffs_[{n, r, m}] = std::move(c);
    }
}

void SiegelSeries::add_to(int n, int r, int m, const Rational &value)
{
    if (value != 0) {
        set(n, r, m, coeff(n, r, m) + value);
    }
}

JacobiSeries SiegelSeries::slice(int m) const
{
    if (m < 0 || m > trunc_) {
        throw std::out_of_range("slice " + std::to_string(m) + " outside [0, " + std::to_string(trunc_) + "]");
    }
    JacobiSeries out(weight_, m, trunc_);
    for (const auto &[key, c] : coeffs_) {
        const auto &[n, r, mm] = key;
        if (mm == m) {
            out.set(n, r, c);
        }
    }
    return out;
}

namespace {

std::string key_string(const SiegelSeries::key_type &key)
{
    const auto &[n, r, m] = key;
    return "(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m) + ")";
}

const SiegelSeries &require_symmetric(const SiegelSeries &F)
{
    if (const auto bad = find_symmetry_violation(F)) {
        throw SymmetryViolation(*bad);
    }
    return F;
}

} // namespace

SymmetryViolation::SymmetryViolation(SiegelSeries::key_type key)
    : std::invalid_argument("a(n,r,m) != a(m,r,n) at " + key_string(key)), key_(key)
{
}

std::optional<SiegelSeries::key_type> find_symmetry_violation(const SiegelSeries &F)
{
    for (const auto &[key, c] : F.coeffs()) {
        const auto &[n, r, m] = key;
        if (F.coeff(m, r, n) != c) {
            return key;
        }
    }
    return std::nullopt;
}

SiegelSeries siegel_from_components(const std::vector<JacobiSeries> &components)
{
    if (components.empty()) {
        throw std::invalid_argument("need at least the index-0 component");
    }
    const int trunc = static_cast<int>(components.size()) - 1;
    const int weight = components.front().weight();
    SiegelSeries out(weight, trunc);
    for (int m = 0; m <= trunc; ++m) {
        const auto &f = components[static_cast<std::size_t>(m)];
        if (f.index() != m || f.weight() != weight) {
            std::ostringstream msg;
            msg << "component " << m << " has (weight, index) (" << f.weight() << ", " << f.index()
                << "), expected (" << weight << ", " << m << ")";
            throw std::invalid_argument(msg.str());
        }
        if (f.trunc() < trunc) {
            throw std::invalid_argument("component " + std::to_string(m) + " truncated at " + std::to_string(f.trunc())
                                        + " < " + std::to_string(trunc));
        }
        for (const auto &[key, c] : f.coeffs()) {
            if (key.first <= trunc) {
                out.set(key.first, key.second, m, c);
            }
        }
    }
    return require_symmetric(out);
}

SiegelSeries add(const SiegelSeries &F, const SiegelSeries &G)
{
    if (F.weight() != G.weight()) {
        throw std::invalid_argument("add: mismatched weights " + std::to_string(F.weight()) + " and "
                                    + std::to_string(G.weight()));
    }
    const int trunc = std::min(F.trunc(), G.trunc());
    SiegelSeries out(F.weight(), trunc);
    for (const auto *src : {&F, &G}) {
        for (const auto &[key, c] : src->coeffs()) {
            const auto &[n, r, m] = key;
            if (n <= trunc && m <= trunc) {
                out.add_to(n, r, m, c);
            }
        }
    }
    return require_symmetric(out);
}

SiegelSeries scale(const SiegelSeries &F, const Rational &lambda)
{
    SiegelSeries out(F.weight(), F.trunc());
    for (const auto &[key, c] : F.coeffs()) {
        const auto &[n, r, m] = key;
        out.set(n, r, m, c * lambda);
    }
    return out;
}

SiegelSeries mul(const SiegelSeries &F, const SiegelSeries &G)
{
    const int trunc = std::min(F.trunc(), G.trunc());
    SiegelSeries out(F.weight() + G.weight(), trunc);
    std::map<SiegelSeries::key_type, Rational> acc;
    for (const auto &[ka, ca] : F.coeffs()) {
        const auto &[n1, r1, m1] = ka;
        if (n1 > trunc || m1 > trunc) {
            continue;
        }
        for (const auto &[kb, cb] : G.coeffs()) {
            const auto &[n2, r2, m2] = kb;
            if (n1 + n2 > trunc || m1 + m2 > trunc) {
                continue;
            }
            acc[{n1 + n2, r1 + r2, m1 + m2}] += ca * cb;
        }
    }
    for (const auto &[key, c] : acc) {
        const auto &[n, r, m] = key;
        out.set(n, r, m, c);
    }
    return require_symmetric(out);
}

SiegelSeries delta_op(const SiegelSeries &F)
{
    SiegelSeries out(F.weight() + 2, F.trunc());
    for (const auto &[key, c] : F.coeffs()) {
        const auto &[n, r, m] = key;
        out.set(n, r, m, c * Integer(4L * n * m - static_cast<long>(r) * r));
    }
    return out;
}

SiegelSeries delta_power(const SiegelSeries &F, int power)
{
    SiegelSeries out = F;
    for (int i = 0; i < power; ++i) {
        out = delta_op(out);
    }
    return out;
}

SiegelSeries bracket_siegel_direct(const SiegelSeries &F, const SiegelSeries &G, int l)
{
    if (l < 0) {
        throw std::invalid_argument("bracket order l must be non-negative");
    }
    const BracketParams params{F.weight(), G.weight(), 0, 0, 2 * l, 0};
    SiegelSeries acc(F.weight() + G.weight() + 2 * l, std::min(F.trunc(), G.trunc()));
    for (int r = 0; r <= l; ++r) {
        const auto left = delta_power(F, r);
        for (int s = 0; r + s <= l; ++s) {
            const int p = l - r - s;
            const auto term = delta_power(mul(left, delta_power(G, s)), p);
            acc = add(acc, scale(term, coeff_C(r, s, p, params)));
        }
    }
    return acc;
}

SiegelSeries bracket_siegel_via_jacobi(const SiegelSeries &F, const SiegelSeries &G, int l)
{
    if (l < 0) {
        throw std::invalid_argument("bracket order l must be non-negative");
    }
    const int trunc = std::min(F.trunc(), G.trunc());
    const int weight = F.weight() + G.weight() + 2 * l;
    std::vector<JacobiSeries> f_slices;
    std::vector<JacobiSeries> g_slices;
    for (int m = 0; m <= trunc; ++m) {
        f_slices.push_back(F.slice(m).restricted(trunc));
        g_slices.push_back(G.slice(m).restricted(trunc));
    }
    std::vector<JacobiSeries> components;
    for (int mu = 0; mu <= trunc; ++mu) {
        JacobiSeries acc(weight, mu, trunc);
        for (int m = 0; m <= mu; ++m) {
            acc = add(acc, bracket_jacobi(f_slices[static_cast<std::size_t>(m)],
                                          g_slices[static_cast<std::size_t>(mu - m)], 0, 2 * l));
        }
        components.push_back(std::move(acc));
    }
    return siegel_from_components(components);
}

bool ConsistencyReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const auto &c) { return c.passed; });
}

std::string ConsistencyReport::summary() const
{
    std::ostringstream out;
    for (const auto &c : checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.passed) {
            out << ": " << c.witness;
        }
        out << '\n';
    }
    return out.str();
}

ConsistencyReport check_siegel_consistency(const SiegelSeries &F, bool require_cusp)
{
    ConsistencyReport report;
    auto record = [&](std::string name, bool passed, std::string witness) {
        report.checks.push_back({std::move(name), passed, std::move(witness)});
    };
    auto coeff_string = [](const JacobiSeries &f, const JacobiSeries::key_type &key) {
        return "c(" + std::to_string(key.first) + "," + std::to_string(key.second)
               + ") = " + f.coeff(key.first, key.second).get_str();
    };

    const auto asym = find_symmetry_violation(F);
    record("symmetry a(n,r,m) = a(m,r,n)", !asym, asym ? "at " + key_string(*asym) : "");

    if (require_cusp) {
        const auto f0 = F.slice(0);
        record("slice m=0 vanishes", f0.is_zero(), f0.is_zero() ? "" : coeff_string(f0, f0.coeffs().begin()->first));
    }
    for (int m = 1; m <= F.trunc(); ++m) {
        const auto f = F.slice(m);
        const std::string tag = "slice m=" + std::to_string(m) + ": ";
        const auto cls = check_disc_class_invariance(f);
        record(tag + "disc-class invariance", cls.invariant, cls.witness ? cls.witness->describe() : "");
        const auto supp = find_support_violation(f, require_cusp);
        record(tag + (require_cusp ? "cusp support" : "holomorphic support"), !supp,
               supp ? coeff_string(f, *supp) : "");
        const auto par = find_parity_violation(f);
        record(tag + "parity", !par, par ? coeff_string(f, *par) + " vs mirror" : "");
    }
    return report;
}

} // namespace rc
