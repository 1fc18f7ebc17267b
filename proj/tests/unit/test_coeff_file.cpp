#include <doctest.h>

#include <string>

#include <rc/coeff_file.hpp>
#include <rc/lattice.hpp>

#include "helpers.hpp"

using rc::FormatError;
using rc::JacobiSeries;
using rc::Rational;

namespace {

int error_line(const std::string &text)
{
    try {
        rc::import_any(text);
    } catch (const FormatError &e) {
        return e.line();
    }
    return -1;
}

const std::string jacobi_head = "rankin-cohen-coefficients 1\nkind jacobi\nweight 4\nindex 1\ntrunc 2\n";

} // namespace

TEST_CASE("zero series exports header and END only")
{
    CHECK(rc::export_jacobi(JacobiSeries(4, 1, 2)) == jacobi_head + "END\n");
}

TEST_CASE("round trips are byte-identical")
{
    auto f = rc_test::e8_theta(4);
    f.set(3, 1, Rational(-7, 3));
    const auto text = rc::export_jacobi(f);
    CHECK(rc::import_jacobi(text) == f);
    CHECK(rc::export_jacobi(rc::import_jacobi(text)) == text);

    const auto F = rc::siegel_theta(rc::LatticeDesc::e8(), 2);
    const auto stext = rc::export_siegel(F);
    CHECK(rc::import_siegel(stext) == F);
    CHECK(rc::export_siegel(rc::import_siegel(stext)) == stext);
    CHECK(std::holds_alternative<rc::SiegelSeries>(rc::import_any(stext)));
}

TEST_CASE("comments and blank lines are ignored")
{
    const std::string text = "# generated\n" + jacobi_head + "\ncoeff 1 0 126/1   # D = 4\nEND\n";
    CHECK(rc::import_jacobi(text).coeff(1, 0) == 126);
}

TEST_CASE("malformed files report the offending line")
{
    CHECK(error_line(jacobi_head + "coeff 2 1 3/6\nEND\n") == 6);
    CHECK(error_line(jacobi_head + "coeff 2 1 3\nEND\n") == 6);
    CHECK(error_line(jacobi_head + "coeff 2 1 0/1\nEND\n") == 6);
    CHECK(error_line(jacobi_head + "coeff 3 1 1/1\nEND\n") == 6);
    CHECK(error_line(jacobi_head + "coeff 2 1 1/1\ncoeff 1 0 1/1\nEND\n") == 7);
    CHECK(error_line(jacobi_head + "coeff 1 0 1/1\ncoeff 1 0 2/1\nEND\n") == 7);
    CHECK(error_line(jacobi_head + "coeff 1 +0 1/1\nEND\n") == 6);
    CHECK(error_line(jacobi_head + "coeff 1 0 1/1\n") == 6);
    CHECK(error_line(jacobi_head + "END\ncoeff 1 0 1/1\n") == 7);
    CHECK(error_line(jacobi_head + "coeff 1 0\nEND\n") == 6);
    CHECK(error_line("rankin-cohen-coefficients 2\n") == 1);
    CHECK(error_line("rankin-cohen-coefficients 1\nkind jacobi\r\n") == 2);
    CHECK(error_line("rankin-cohen-coefficients 1\nkind elliptic\n") == 2);
    CHECK(error_line("rankin-cohen-coefficients 1\nkind jacobi\nindex 1\n") == 3);
    CHECK(error_line("") == 1);
}

TEST_CASE("asymmetric Siegel files are rejected at the offending record")
{
    const std::string text =
        "rankin-cohen-coefficients 1\nkind siegel\nweight 4\ntrunc 2\ncoeff 1 0 2 5/1\nEND\n";
    CHECK(error_line(text) == 5);
    CHECK_THROWS_AS(rc::import_jacobi(text), FormatError);
}
