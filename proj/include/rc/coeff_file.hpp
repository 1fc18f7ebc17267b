#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <rc/series.hpp>
#include <rc/siegel.hpp>

namespace rc {

// Text coefficient files:
//
//   rankin-cohen-coefficients 1
//   kind jacobi            | kind siegel
//   weight <int>           | weight <int>
//   index <int>            | trunc <int>
//   trunc <int>            |
//   coeff <n> <r> <num/den>      (jacobi)
//   coeff <n> <r> <m> <num/den>  (siegel)
//   END
//
// LF line endings, '#' starts a comment, tokens separated by blanks. Records
// are strictly ascending in their key and never zero; fractions are reduced
// and always carry a denominator.
inline constexpr std::string_view coeff_file_tag = "rankin-cohen-coefficients";
inline constexpr int coeff_file_version = 1;

class FormatError : public std::runtime_error
{
public:
    FormatError(int line, const std::string &what);
    int line() const { return line_; }

private:
    int line_;
};

std::string export_jacobi(const JacobiSeries &f);
std::string export_siegel(const SiegelSeries &F);

JacobiSeries import_jacobi(std::string_view text);
SiegelSeries import_siegel(std::string_view text);
std::variant<JacobiSeries, SiegelSeries> import_any(std::string_view text);

std::string read_text_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path, std::string_view text);

} // namespace rc
