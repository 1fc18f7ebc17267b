// rcforms: command-line driver for the Rankin-Cohen bracket library.
//
// Exit codes: 0 success, 1 invariant violation (witness on stderr),
// 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include <rc/bracket.hpp>
#include <rc/coeff_file.hpp>
#include <rc/lattice.hpp>
#include <rc/parallel.hpp>
#include <rc/series.hpp>
#include <rc/siegel.hpp>
#include <rc/verify.hpp>

#ifndef RC_DEFAULT_FIXTURE_DIR
#define RC_DEFAULT_FIXTURE_DIR ""
#endif

namespace {

constexpr int exit_ok = 0;
constexpr int exit_violation = 1;
constexpr int exit_usage = 2;

// An input that parsed but violates a mathematical invariant.
struct Violation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

rc::JacobiSeries load_jacobi(const std::string &path)
{
    try {
        return rc::import_jacobi(rc::read_text_file(path));
    } catch (const rc::FormatError &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

rc::SiegelSeries load_siegel(const std::string &path)
{
    try {
        return rc::import_siegel(rc::read_text_file(path));
    } catch (const rc::FormatError &e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void write_out(const std::string &path, const std::string &text)
{
    if (path == "-") {
        std::cout << text;
        return;
    }
    rc::write_text_file(path, text);
}

void apply_thread_override()
{
    const char *env = std::getenv("THREADS");
    if (env == nullptr || *env == '\0') {
        return;
    }
    const int n = std::stoi(env);
    if (n < 1) {
        throw std::invalid_argument("THREADS must be a positive integer");
    }
    rc::set_thread_count(static_cast<unsigned>(n));
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Exact Rankin-Cohen brackets of Jacobi and degree-2 Siegel forms"};
    app.require_subcommand(1);

    std::string lattice_name = "e8";
    std::string out_path;
    int trunc = 8;

    auto *theta_j = app.add_subcommand("theta-jacobi", "Jacobi theta series of an even unimodular lattice");
    int half_norm_index = 1;
    std::vector<std::string> vector_coords;
    theta_j->add_option("--lattice", lattice_name, "e8 or e8e8")->capture_default_str();
    theta_j->add_option("--half-norm-index", half_norm_index, "index m = v.v/2 of the theta vector")
        ->capture_default_str();
    theta_j->add_option("--vector", vector_coords, "explicit coordinates of v (fractions allowed)");
    theta_j->add_option("--trunc", trunc, "q-truncation N")->required();
    theta_j->add_option("--out", out_path, "output file, '-' for stdout")->required();

    auto *theta_s = app.add_subcommand("theta-siegel", "degree-2 Siegel theta series");
    theta_s->add_option("--lattice", lattice_name, "e8 or e8e8")->capture_default_str();
    theta_s->add_option("--trunc", trunc, "truncation T in both q1 and q2")->required();
    theta_s->add_option("--out", out_path, "output file, '-' for stdout")->required();

    std::string left;
    std::string right;
    std::string x_text = "0";
    int v = 0;
    auto *br_j = app.add_subcommand("bracket-jacobi", "bracket [f, f']_{X, v} of two Jacobi series");
    br_j->add_option("--left", left, "coefficient file of f")->required();
    br_j->add_option("--right", right, "coefficient file of f'")->required();
    br_j->add_option("--x", x_text, "parameter X as an exact fraction")->capture_default_str();
    br_j->add_option("--v", v, "order v >= 0")->required()->check(CLI::NonNegativeNumber);
    br_j->add_option("--out", out_path, "output file, '-' for stdout")->required();

    int l = 0;
    std::string mode = "direct";
    auto *br_s = app.add_subcommand("bracket-siegel", "bracket [F, F']_l of two Siegel series");
    br_s->add_option("--left", left, "coefficient file of F")->required();
    br_s->add_option("--right", right, "coefficient file of F'")->required();
    br_s->add_option("--l", l, "order l >= 0")->required()->check(CLI::NonNegativeNumber);
    br_s->add_option("--mode", mode, "direct or jacobi")->check(CLI::IsMember({"direct", "jacobi"}))
        ->capture_default_str();
    br_s->add_option("--out", out_path, "output file, '-' for stdout")->required();

    auto *rank = app.add_subcommand("rank-x", "rank over X of the brackets [f, f']_{X, v}");
    rank->add_option("--left", left, "coefficient file of f")->required();
    rank->add_option("--right", right, "coefficient file of f'")->required();
    rank->add_option("--v", v, "order v >= 0")->required()->check(CLI::NonNegativeNumber);

    std::string suite_name = "all";
    std::string fixture_dir = RC_DEFAULT_FIXTURE_DIR;
    bool verbose = false;
    auto *verify = app.add_subcommand("verify", "run the acceptance criteria");
    verify->add_option("--suite", suite_name, "core, bracket, genfun, siegel or all")
        ->check(CLI::IsMember({"core", "bracket", "genfun", "siegel", "all"}))
        ->capture_default_str();
    verify->add_option("--fixtures", fixture_dir, "directory of checked-in coefficient fixtures");
    verify->add_flag("--verbose", verbose, "print measured quantities for every criterion");

    std::string fixtures_out;
    auto *write_fixtures = app.add_subcommand("write-fixtures", "regenerate the reference coefficient fixtures");
    write_fixtures->add_option("--dir", fixtures_out, "destination directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        apply_thread_override();

        if (theta_j->parsed()) {
            const auto lattice = rc::LatticeDesc::by_name(lattice_name);
            rc::LatticeVector vec;
            if (!vector_coords.empty()) {
                std::vector<rc::Rational> coords;
                for (const auto &c : vector_coords) {
                    coords.push_back(rc::parse_rational(c));
                }
                vec = lattice.vector_from(coords);
            } else {
                vec = rc::default_vector(lattice, half_norm_index);
            }
            write_out(out_path, rc::export_jacobi(rc::jacobi_theta(lattice, vec, trunc)));
        } else if (theta_s->parsed()) {
            const auto lattice = rc::LatticeDesc::by_name(lattice_name);
            write_out(out_path, rc::export_siegel(rc::siegel_theta(lattice, trunc)));
        } else if (br_j->parsed()) {
            const auto x = rc::parse_rational(x_text);
            const auto f = load_jacobi(left);
            const auto g = load_jacobi(right);
            write_out(out_path, rc::export_jacobi(rc::bracket_jacobi(f, g, x, v)));
        } else if (br_s->parsed()) {
            const auto F = load_siegel(left);
            const auto G = load_siegel(right);
            const auto B = mode == "direct" ? rc::bracket_siegel_direct(F, G, l) : rc::bracket_siegel_via_jacobi(F, G, l);
            write_out(out_path, rc::export_siegel(B));
        } else if (rank->parsed()) {
            const auto f = load_jacobi(left);
            const auto g = load_jacobi(right);
            const int r = rc::bracket_rank_over_x(f, g, v);
            std::cout << "rank " << r << " (upper bound " << v / 2 + 1 << ")\n";
            if (r > v / 2 + 1) {
                throw Violation("rank exceeds floor(v/2)+1");
            }
        } else if (write_fixtures->parsed()) {
            for (const auto &recipe : rc::fixture_recipes()) {
                const auto path = std::filesystem::path(fixtures_out) / recipe.file_name;
                rc::write_text_file(path, recipe.generate());
                std::cout << "wrote " << path.string() << '\n';
            }
        } else if (verify->parsed()) {
            rc::VerifyOptions options;
            options.fixture_dir = fixture_dir;
            options.log = verbose ? &std::cout : nullptr;
            bool all_passed = true;
            for (int id : rc::criteria_of(rc::parse_suite(suite_name))) {
                const auto result = rc::run_criterion(id, options);
                std::cout << rc::format_result(result, false) << std::flush;
                all_passed = all_passed && result.passed;
            }
            return all_passed ? exit_ok : exit_violation;
        }
    } catch (const Violation &e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return exit_violation;
    } catch (const rc::SymmetryViolation &e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return exit_violation;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_ok;
}
