#include <rc/verify.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <rc/bracket.hpp>
#include <rc/coeff_file.hpp>
#include <rc/genfun.hpp>
#include <rc/lattice.hpp>
#include <rc/parallel.hpp>
#include <rc/series.hpp>
#include <rc/siegel.hpp>

namespace rc {

Suite parse_suite(const std::string &name)
{
    if (name == "core") {
        return Suite::core;
    }
    if (name == "bracket") {
        return Suite::bracket;
    }
    if (name == "genfun") {
        return Suite::genfun;
    }
    if (name == "siegel") {
        return Suite::siegel;
    }
    if (name == "all") {
        return Suite::all;
    }
    throw std::invalid_argument("unknown suite '" + name + "' (core|bracket|genfun|siegel|all)");
}

std::vector<int> criteria_of(Suite suite)
{
    switch (suite) {
    case Suite::core:
        return {4, 8, 9};
    case Suite::bracket:
        return {1, 2, 5, 6};
    case Suite::genfun:
        return {3};
    case Suite::siegel:
        return {7};
    case Suite::all:
        break;
    }
    return {1, 2, 3, 4, 5, 6, 7, 8, 9};
}

namespace {

// Collects the first failure and any notes for one criterion.
class Recorder
{
public:
    explicit Recorder(CriterionResult &result, std::ostream *log) : result_(result), log_(log) {}

    // Returns ok so callers can short-circuit on failure.
    bool expect(bool ok, const std::function<std::string()> &witness)
    {
        if (!ok && result_.witness.empty()) {
            result_.witness = witness();
        }
        failed_ = failed_ || !ok;
        return ok;
    }

    void note(std::string text)
    {
        if (log_ != nullptr) {
            *log_ << "  [" << result_.id << "] " << text << '\n';
        }
        result_.notes.push_back(std::move(text));
    }

    bool failed() const { return failed_; }

private:
    CriterionResult &result_;
    std::ostream *log_;
    bool failed_ = false;
};

struct NamedForm {
    std::string name;
    JacobiSeries series;
};

std::vector<NamedForm> theta_family(int trunc)
{
    const auto lattice = LatticeDesc::e8();
    const auto theta = jacobi_theta(lattice, default_vector(lattice, 1), trunc);
    return {
        {"theta", theta},
        {"E4*theta", mul(eisenstein_q(4, trunc).to_jacobi(), theta)},
        {"E6*theta", mul(eisenstein_q(6, trunc).to_jacobi(), theta)},
    };
}

std::string x_string(const Rational &x)
{
    return x.get_str();
}

std::string first_difference(const JacobiSeries &expected, const JacobiSeries &actual)
{
    std::ostringstream out;
    if (expected.weight() != actual.weight() || expected.index() != actual.index()
        || expected.trunc() != actual.trunc()) {
        out << "(weight, index, trunc) expected (" << expected.weight() << ", " << expected.index() << ", "
            << expected.trunc() << ") actual (" << actual.weight() << ", " << actual.index() << ", "
            << actual.trunc() << ")";
        return out.str();
    }
    auto keys = expected.coeffs();
    for (const auto &[key, c] : actual.coeffs()) {
        keys.emplace(key, 0);
    }
    for (const auto &[key, unused] : keys) {
        const auto a = expected.coeff(key.first, key.second);
        const auto b = actual.coeff(key.first, key.second);
        if (a != b) {
            out << "c(" << key.first << "," << key.second << ") expected " << a.get_str() << " actual " << b.get_str();
            return out.str();
        }
    }
    return "series equal";
}

std::string first_difference(const SiegelSeries &expected, const SiegelSeries &actual)
{
    std::ostringstream out;
    if (expected.weight() != actual.weight() || expected.trunc() != actual.trunc()) {
        out << "(weight, trunc) expected (" << expected.weight() << ", " << expected.trunc() << ") actual ("
            << actual.weight() << ", " << actual.trunc() << ")";
        return out.str();
    }
    auto keys = expected.coeffs();
    for (const auto &[key, c] : actual.coeffs()) {
        keys.emplace(key, 0);
    }
    for (const auto &[key, unused] : keys) {
        const auto &[n, r, m] = key;
        const auto a = expected.coeff(n, r, m);
        const auto b = actual.coeff(n, r, m);
        if (a != b) {
            out << "a(" << n << "," << r << "," << m << ") expected " << a.get_str() << " actual " << b.get_str();
            return out.str();
        }
    }
    return "series equal";
}

std::string pair_label(const NamedForm &f, const NamedForm &g, int v, const Rational &x)
{
    return "[" + f.name + ", " + g.name + "] v=" + std::to_string(v) + " X=" + x_string(x);
}

// Unordered pairs with repetition.
template <typename Body>
void for_each_pair(const std::vector<NamedForm> &forms, Body body)
{
    for (std::size_t a = 0; a < forms.size(); ++a) {
        for (std::size_t b = a; b < forms.size(); ++b) {
            body(forms[a], forms[b]);
        }
    }
}

void criterion_degenerations(Recorder &rec, const VerifyOptions &opt)
{
    const auto forms = theta_family(opt.jacobi_trunc);
    for (const auto &f : forms) {
        for (const auto &g : forms) {
            for (const Rational &x : {Rational(0), Rational(1), Rational(-1, 2)}) {
                const auto b0 = bracket_jacobi(f.series, g.series, x, 0);
                const auto prod = mul(f.series, g.series);
                rec.expect(b0 == prod, [&] { return pair_label(f, g, 0, x) + ": " + first_difference(prod, b0); });
            }
            const auto at0 = export_jacobi(bracket_jacobi(f.series, g.series, 0, 1));
            const auto at1 = export_jacobi(bracket_jacobi(f.series, g.series, 1, 1));
            rec.expect(at0 == at1, [&] { return "[" + f.name + ", " + g.name + "] v=1 differs between X=0 and X=1"; });
        }
        for (const Rational &x : {Rational(0), Rational(1), Rational(-1, 2)}) {
            const auto b1 = bracket_jacobi(f.series, f.series, x, 1);
            rec.expect(b1.is_zero(), [&] {
                return pair_label(f, f, 1, x) + ": " + first_difference(JacobiSeries(b1.weight(), b1.index(), b1.trunc()), b1);
            });
        }
    }
}

void criterion_bracket_outputs(Recorder &rec, const VerifyOptions &opt)
{
    const auto forms = theta_family(opt.jacobi_trunc);
    int checked = 0;
    for_each_pair(forms, [&](const NamedForm &f, const NamedForm &g) {
        for (int v = 0; v <= 5; ++v) {
            for (const Rational &x : {Rational(0), Rational(1), Rational(-1, 2)}) {
                const auto b = bracket_jacobi(f.series, g.series, x, v);
                const auto label = pair_label(f, g, v, x);
                rec.expect(b.weight() == f.series.weight() + g.series.weight() + v
                               && b.index() == f.series.index() + g.series.index(),
                           [&] { return label + ": wrong weight/index bookkeeping"; });
                const auto holo = find_support_violation(b, false);
                rec.expect(!holo, [&] {
                    return label + ": c(" + std::to_string(holo->first) + "," + std::to_string(holo->second)
                           + ") outside r^2 <= 4nm";
                });
                if (v > 1) {
                    const auto cusp = find_support_violation(b, true);
                    rec.expect(!cusp, [&] {
                        return label + ": c(" + std::to_string(cusp->first) + "," + std::to_string(cusp->second)
                               + ") = " + b.coeff(cusp->first, cusp->second).get_str() + " on r^2 = 4nm";
                    });
                }
                const auto cls = check_disc_class_invariance(b);
                rec.expect(cls.invariant, [&] { return label + ": " + cls.witness->describe(); });
                const auto par = find_parity_violation(b);
                rec.expect(!par, [&] {
                    return label + ": c(n,-r) != (-1)^(k+k'+v) c(n,r) at (" + std::to_string(par->first) + ","
                           + std::to_string(par->second) + ")";
                });
                ++checked;
            }
        }
    });
    rec.note(std::to_string(checked) + " brackets checked");
}

void criterion_genfun(Recorder &rec, const VerifyOptions &opt)
{
    const auto forms = theta_family(opt.jacobi_trunc);
    const auto &theta = forms[0];
    // A weight-10 index-1 cusp form built independently of E6 * theta, so
    // (theta, phi10) and (theta, E6*theta) share every bracket parameter.
    const NamedForm phi10{"phi10", bracket_jacobi(theta.series, eisenstein_q(4, opt.jacobi_trunc).to_jacobi(), 0, 2)};

    const std::vector<std::pair<NamedForm, NamedForm>> pairs = {
        {forms[0], forms[0]}, {forms[0], forms[1]}, {forms[1], forms[2]}, {forms[0], forms[2]}, {forms[0], phi10},
    };
    for (int v = 0; v <= 5; ++v) {
        for (const Rational &x : {Rational(0), Rational(1)}) {
            std::vector<Rational> lambdas;
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const auto &[f, g] = pairs[i];
                const auto label = pair_label(f, g, v, x);
                const auto result = crosscheck_bracket(f.series, g.series, x, v);
                rec.expect(result.ok(), [&] { return label + ": not proportional, " + result.witness; });
                if (result.status == CrosscheckResult::Status::proportional) {
                    rec.note(label + ": lambda = " + result.lambda.get_str());
                    if (i >= 3) {
                        lambdas.push_back(result.lambda);
                    }
                } else if (result.status == CrosscheckResult::Status::indeterminate) {
                    rec.note(label + ": both sides vanish");
                }
            }
            // (theta, E6*theta) and (theta, phi10) have identical parameters.
            if (lambdas.size() == 2) {
                rec.expect(lambdas[0] == lambdas[1], [&] {
                    return "v=" + std::to_string(v) + " X=" + x_string(x) + ": lambda " + lambdas[0].get_str()
                           + " for (theta, E6*theta) but " + lambdas[1].get_str() + " for (theta, phi10)";
                });
            }
        }
    }
}

void criterion_leibniz(Recorder &rec, const VerifyOptions &opt)
{
    const int trunc = opt.jacobi_trunc;
    const auto lattice = LatticeDesc::e8();
    const auto g = jacobi_theta(lattice, default_vector(lattice, 1), trunc);
    const Rational four_m(4 * g.index());
    for (int k : {4, 6}) {
        const auto f = eisenstein_q(k, trunc).to_jacobi();
        const auto fg = mul(f, g);
        for (int r = 0; r <= 3; ++r) {
            const auto lhs = heat_power(fg, r);
            JacobiSeries rhs(lhs.weight(), lhs.index(), lhs.trunc());
            Integer binom{1};
            for (int j = 0; j <= r; ++j) {
                const auto term = mul(theta_q_power(f, r - j), heat_power(g, j));
                rhs = add(rhs, scale(term, rational_pow(four_m, static_cast<unsigned>(r - j)) * binom));
                binom = binom * (r - j) / (j + 1);
            }
            rec.expect(lhs == rhs, [&] {
                return "E" + std::to_string(k) + " * theta, r=" + std::to_string(r) + ": " + first_difference(lhs, rhs);
            });
        }
    }
}

void criterion_recursions(Recorder &rec, const VerifyOptions &)
{
    std::vector<std::pair<Rational, Rational>> weights;
    for (int k : {4, 6, 10, 35}) {
        for (int kp : {4, 6, 10, 35}) {
            weights.emplace_back(k, kp);
        }
    }
    weights.emplace_back(Rational(9, 2), Rational(6));
    weights.emplace_back(Rational(7, 3), Rational(11, 5));

    int perturbations = 0;
    for (const auto &[k, kp] : weights) {
        for (int l = 1; l <= 6; ++l) {
            const auto bad = find_recursion_violation(k, kp, l);
            rec.expect(!bad, [&] {
                return "k=" + k.get_str() + " k'=" + kp.get_str() + " l=" + std::to_string(l) + ": " + bad->describe();
            });
            const BracketParams params{k, kp, 0, 0, 2 * l, 0};
            for (int r = 0; r <= l; ++r) {
                for (int s = 0; r + s <= l; ++s) {
                    const int p = l - r - s;
                    const auto perturbed = [&](int rr, int ss, int pp) {
                        const Rational c = coeff_C(rr, ss, pp, params);
                        return (rr == r && ss == s && pp == p) ? c + 1 : c;
                    };
                    rec.expect(!check_recursions(k, kp, l, perturbed), [&] {
                        return "perturbing C_{" + std::to_string(r) + "," + std::to_string(s) + "," + std::to_string(p)
                               + "} at k=" + k.get_str() + " k'=" + kp.get_str() + " went undetected";
                    });
                    ++perturbations;
                }
            }
        }
    }
    rec.note(std::to_string(perturbations) + " single-coefficient perturbations detected");
}

void criterion_rank(Recorder &rec, const VerifyOptions &opt)
{
    const auto forms = theta_family(opt.jacobi_trunc);
    for_each_pair(forms, [&](const NamedForm &f, const NamedForm &g) {
        for (int v = 0; v <= 5; ++v) {
            const int rank = bracket_rank_over_x(f.series, g.series, v);
            rec.expect(rank <= v / 2 + 1, [&] {
                return "[" + f.name + ", " + g.name + "] v=" + std::to_string(v) + ": rank " + std::to_string(rank)
                       + " exceeds floor(v/2)+1";
            });
        }
    });
    const auto &f = forms[1];
    const auto &g = forms[2];
    for (int v = 2; v <= 5; ++v) {
        const int rank = bracket_rank_over_x(f.series, g.series, v);
        const int expected = v / 2 + 1;
        if (rank == expected) {
            rec.note("[E4*theta, E6*theta] v=" + std::to_string(v) + ": rank " + std::to_string(rank)
                     + " = floor(v/2)+1");
        } else {
            rec.note("[E4*theta, E6*theta] v=" + std::to_string(v) + ": rank " + std::to_string(rank) + " < "
                     + std::to_string(expected) + " (small-weight exception)");
        }
    }
}

void criterion_siegel(Recorder &rec, const VerifyOptions &opt)
{
    const auto F = siegel_theta(LatticeDesc::e8(), opt.siegel_trunc);
    for (int l = 0; l <= 2; ++l) {
        const auto tag = "l=" + std::to_string(l) + ": ";
        const auto direct = bracket_siegel_direct(F, F, l);
        const auto via = bracket_siegel_via_jacobi(F, F, l);
        rec.expect(direct == via, [&] { return tag + "direct vs via-jacobi " + first_difference(direct, via); });
        rec.expect(export_siegel(direct) == export_siegel(via), [&] { return tag + "exports differ"; });
        rec.expect(direct.weight() == 2 * F.weight() + 2 * l, [&] {
            return tag + "weight " + std::to_string(direct.weight()) + ", expected " + std::to_string(2 * F.weight() + 2 * l);
        });
        const auto asym = find_symmetry_violation(direct);
        rec.expect(!asym, [&] { return tag + "asymmetric output"; });
        if (l > 0) {
            for (const auto &[key, c] : direct.coeffs()) {
                const auto &[n, r, m] = key;
                rec.expect(n != 0 && m != 0, [&, n = n, r = r, m = m] {
                    return tag + "a(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(m)
                           + ") = " + direct.coeff(n, r, m).get_str() + ", expected 0 on the n=0 / m=0 slice";
                });
            }
            const auto report = check_siegel_consistency(direct, true);
            rec.expect(report.passed(), [&] { return tag + report.summary(); });
        } else {
            const auto report = check_siegel_consistency(direct, false);
            rec.expect(report.passed(), [&] { return tag + report.summary(); });
        }
        rec.note(tag + std::to_string(direct.coeffs().size()) + " nonzero coefficients");
    }
}

void criterion_lattice(Recorder &rec, const VerifyOptions &opt)
{
    const auto lattice = LatticeDesc::e8();
    const auto vectors = enumerate_vectors(lattice, 2);
    std::vector<long> by_norm(3, 0);
    for (const auto &x : vectors) {
        ++by_norm[static_cast<std::size_t>(half_norm(x))];
    }
    rec.expect(by_norm[1] == 240, [&] { return "norm-2 count expected 240 actual " + std::to_string(by_norm[1]); });
    rec.expect(by_norm[2] == 2160, [&] { return "norm-4 count expected 2160 actual " + std::to_string(by_norm[2]); });

    const auto theta = jacobi_theta(lattice, default_vector(lattice, 1), opt.jacobi_trunc);
    const auto cls = check_disc_class_invariance(theta);
    rec.expect(cls.invariant, [&] { return "jacobi_theta: " + cls.witness->describe(); });
    rec.expect(has_holomorphic_support(theta), [] { return "jacobi_theta: support outside r^2 <= 4nm"; });
    rec.expect(check_parity(theta), [] { return "jacobi_theta: parity"; });

    const auto F = siegel_theta(lattice, opt.siegel_trunc);
    const auto report = check_siegel_consistency(F, false);
    rec.expect(report.passed(), [&] { return "siegel_theta: " + report.summary(); });
    rec.expect(F.coeff(1, 0, 0) == 240, [&] { return "siegel_theta a(1,0,0) = " + F.coeff(1, 0, 0).get_str(); });
}

void criterion_io(Recorder &rec, const VerifyOptions &opt)
{
    const auto forms = theta_family(opt.jacobi_trunc);
    for (const auto &f : forms) {
        const auto text = export_jacobi(f.series);
        const auto back = import_jacobi(text);
        rec.expect(back == f.series && export_jacobi(back) == text, [&] { return f.name + ": round trip differs"; });
    }

    int fixtures = 0;
    if (!opt.fixture_dir.empty() && std::filesystem::is_directory(opt.fixture_dir)) {
        std::vector<std::filesystem::path> files;
        for (const auto &entry : std::filesystem::directory_iterator(opt.fixture_dir)) {
            if (entry.path().extension() == ".rcc") {
                files.push_back(entry.path());
            }
        }
        std::sort(files.begin(), files.end());
        for (const auto &path : files) {
            const auto text = read_text_file(path);
            const auto value = import_any(text);
            const auto again =
                std::visit([](const auto &s) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, JacobiSeries>) {
                        return export_jacobi(s);
                    } else {
                        return export_siegel(s);
                    }
                }, value);
            rec.expect(again == text, [&] { return path.filename().string() + ": re-export is not byte-identical"; });
            ++fixtures;
        }
        for (const auto &recipe : fixture_recipes()) {
            const auto path = opt.fixture_dir / recipe.file_name;
            if (!std::filesystem::exists(path)) {
                rec.expect(false, [&] { return "missing fixture " + recipe.file_name; });
                continue;
            }
            rec.expect(recipe.generate() == read_text_file(path),
                       [&] { return recipe.file_name + ": regenerated output differs from checked-in fixture"; });
        }
    }
    rec.note(std::to_string(fixtures) + " fixture files round-tripped");

    const unsigned saved = thread_count();
    std::vector<std::string> outputs;
    for (unsigned threads : {1u, 4u}) {
        set_thread_count(threads);
        const auto F = siegel_theta(LatticeDesc::e8(), std::min(opt.siegel_trunc, 2));
        const auto b = bracket_jacobi(forms[1].series, forms[2].series, Rational(-1, 2), 5);
        outputs.push_back(export_siegel(F) + export_jacobi(b));
    }
    set_thread_count(saved);
    rec.expect(outputs[0] == outputs[1], [] { return "outputs differ between 1 and 4 threads"; });
}

const char *criterion_title(int id)
{
    switch (id) {
    case 1:
        return "bracket degenerations (v=0 product, v=1 antisymmetry, v=1 X-independence)";
    case 2:
        return "bracket outputs: holomorphic, cusp for v>1, disc-class invariant, parity";
    case 3:
        return "generating-function construction proportional to the bracket";
    case 4:
        return "heat operator Leibniz expansion";
    case 5:
        return "coefficient recursions and perturbation detection";
    case 6:
        return "rank over X bounded by floor(v/2)+1";
    case 7:
        return "Siegel bracket: direct = via Jacobi slices, symmetric, cusp for l>0";
    case 8:
        return "lattice gates and theta consistency";
    case 9:
        return "coefficient file round trips and thread-count determinism";
    default:
        return "unknown";
    }
}

} // namespace

CriterionResult run_criterion(int id, const VerifyOptions &options)
{
    CriterionResult result;
    result.id = id;
    result.title = criterion_title(id);
    Recorder rec(result, options.log);
    const auto start = std::chrono::steady_clock::now();
    try {
        switch (id) {
        case 1:
            criterion_degenerations(rec, options);
            break;
        case 2:
            criterion_bracket_outputs(rec, options);
            break;
        case 3:
            criterion_genfun(rec, options);
            break;
        case 4:
            criterion_leibniz(rec, options);
            break;
        case 5:
            criterion_recursions(rec, options);
            break;
        case 6:
            criterion_rank(rec, options);
            break;
        case 7:
            criterion_siegel(rec, options);
            break;
        case 8:
            criterion_lattice(rec, options);
            break;
        case 9:
            criterion_io(rec, options);
            break;
        default:
            throw std::invalid_argument("no acceptance criterion " + std::to_string(id));
        }
        result.passed = !rec.failed();
    } catch (const std::exception &e) {
        result.passed = false;
        result.witness = std::string("exception: ") + e.what();
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<CriterionResult> run_suite(Suite suite, const VerifyOptions &options)
{
    std::vector<CriterionResult> out;
    for (int id : criteria_of(suite)) {
        out.push_back(run_criterion(id, options));
    }
    return out;
}

std::string format_result(const CriterionResult &result, bool with_notes)
{
    std::ostringstream out;
    out << (result.passed ? "PASS" : "FAIL") << " [" << result.id << "] " << result.title << " (";
    out.precision(2);
    out << std::fixed << result.seconds << " s)\n";
    if (!result.passed) {
        out << "    witness: " << result.witness << '\n';
    }
    if (with_notes) {
        for (const auto &note : result.notes) {
            out << "    " << note << '\n';
        }
    }
    return out.str();
}

namespace {

JacobiSeries fixture_theta()
{
    const auto lattice = LatticeDesc::e8();
    return jacobi_theta(lattice, default_vector(lattice, 1), 8);
}

} // namespace

const std::vector<FixtureRecipe> &fixture_recipes()
{
    static const std::vector<FixtureRecipe> recipes = {
        {"jacobi_theta_e8_v2_N8.rcc", "E8 Jacobi theta, v = (1,-1,0,...,0)",
         [] { return export_jacobi(fixture_theta()); }},
        {"jacobi_e4_theta_N8.rcc", "E4 times the E8 Jacobi theta",
         [] { return export_jacobi(mul(eisenstein_q(4, 8).to_jacobi(), fixture_theta())); }},
        {"jacobi_e6_theta_N8.rcc", "E6 times the E8 Jacobi theta",
         [] { return export_jacobi(mul(eisenstein_q(6, 8).to_jacobi(), fixture_theta())); }},
        {"bracket_theta_theta_X0_v2_N8.rcc", "[theta, theta] at X = 0, v = 2",
         [] { return export_jacobi(bracket_jacobi(fixture_theta(), fixture_theta(), 0, 2)); }},
        {"bracket_e4theta_e6theta_Xm1_2_v3_N8.rcc", "[E4 theta, E6 theta] at X = -1/2, v = 3",
         [] {
             const auto t = fixture_theta();
             return export_jacobi(bracket_jacobi(mul(eisenstein_q(4, 8).to_jacobi(), t),
                                                 mul(eisenstein_q(6, 8).to_jacobi(), t), Rational(-1, 2), 3));
         }},
        {"siegel_theta_e8_T3.rcc", "E8 Siegel theta",
         [] { return export_siegel(siegel_theta(LatticeDesc::e8(), 3)); }},
        {"siegel_bracket_e8_l1_T3.rcc", "[F, F]_1 for the E8 Siegel theta",
         [] {
             const auto F = siegel_theta(LatticeDesc::e8(), 3);
             return export_siegel(bracket_siegel_direct(F, F, 1));
         }},
    };
    return recipes;
}

} // namespace rc
