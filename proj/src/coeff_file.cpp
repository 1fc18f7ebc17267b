#include <rc/coeff_file.hpp>

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace rc {

FormatError::FormatError(int line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

namespace {

void write_header(std::ostringstream &out, const char *kind)
{
    out << coeff_file_tag << ' ' << coeff_file_version << '\n' << "kind " << kind << '\n';
}

struct Line {
    int number = 0;
    std::vector<std::string_view> tokens;
};

// Non-empty, comment-stripped lines split into tokens.
std::vector<Line> tokenize(std::string_view text)
{
    std::vector<Line> lines;
    int number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        ++number;
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto raw = text.substr(pos, end - pos);
        pos = end + 1;
        if (raw.find('\r') != std::string_view::npos) {
            throw FormatError(number, "carriage return (files must use LF line endings)");
        }
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) {
            raw = raw.substr(0, hash);
        }
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) {
                ++i;
            }
            const std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') {
                ++i;
            }
            if (i > start) {
                line.tokens.push_back(raw.substr(start, i - start));
            }
        }
        if (!line.tokens.empty()) {
            lines.push_back(std::move(line));
        }
    }
    return lines;
}

int parse_int(const Line &line, std::string_view token)
{
    int value = 0;
    const auto *first = token.data();
    const auto *last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw FormatError(line.number, "expected an integer, got '" + std::string(token) + "'");
    }
    // Canonical spelling only ("-0", "+1", "007" would not survive re-export).
    if (std::to_string(value) != token) {
        throw FormatError(line.number, "non-canonical integer '" + std::string(token) + "'");
    }
    return value;
}

Rational parse_value(const Line &line, std::string_view token)
{
    try {
        const Rational q = parse_canonical_fraction(token);
        if (q == 0) {
            throw FormatError(line.number, "zero coefficients must be omitted");
        }
        return q;
    } catch (const std::invalid_argument &e) {
        throw FormatError(line.number, e.what());
    }
}

struct Parsed {
    std::string kind;
    int weight = 0;
    int index = 0;
    int trunc = 0;
    std::vector<std::pair<Line, std::vector<int>>> records;
    std::vector<Rational> values;
};

const Line &expect_key(const std::vector<Line> &lines, std::size_t at, std::string_view key, int last_line)
{
    if (at >= lines.size()) {
        throw FormatError(last_line, "missing '" + std::string(key) + "' line");
    }
    const auto &line = lines[at];
    if (line.tokens.size() != 2 || line.tokens[0] != key) {
        throw FormatError(line.number, "expected '" + std::string(key) + " <value>'");
    }
    return line;
}

Parsed parse(std::string_view text)
{
    const auto lines = tokenize(text);
    const int last_line = lines.empty() ? 1 : lines.back().number;
    if (lines.empty()) {
        throw FormatError(1, "empty file");
    }
    const auto &head = lines.front();
    if (head.tokens.size() != 2 || head.tokens[0] != coeff_file_tag) {
        throw FormatError(head.number, "missing '" + std::string(coeff_file_tag) + "' header");
    }
    if (parse_int(head, head.tokens[1]) != coeff_file_version) {
        throw FormatError(head.number, "unsupported format version " + std::string(head.tokens[1]));
    }
    Parsed out;
    std::size_t at = 1;
    out.kind = std::string(expect_key(lines, at++, "kind", last_line).tokens[1]);
    if (out.kind != "jacobi" && out.kind != "siegel") {
        throw FormatError(lines[at - 1].number, "unknown kind '" + out.kind + "'");
    }
    const bool jacobi = out.kind == "jacobi";
    {
        const auto &line = expect_key(lines, at++, "weight", last_line);
        out.weight = parse_int(line, line.tokens[1]);
    }
    if (jacobi) {
        const auto &line = expect_key(lines, at++, "index", last_line);
        out.index = parse_int(line, line.tokens[1]);
        if (out.index < 0) {
            throw FormatError(line.number, "negative index");
        }
    }
    {
        const auto &line = expect_key(lines, at++, "trunc", last_line);
        out.trunc = parse_int(line, line.tokens[1]);
        if (out.trunc < 0) {
            throw FormatError(line.number, "negative truncation");
        }
    }

    const std::size_t key_len = jacobi ? 2 : 3;
    bool ended = false;
    for (; at < lines.size(); ++at) {
        const auto &line = lines[at];
        if (line.tokens.size() == 1 && line.tokens[0] == "END") {
            ended = true;
            ++at;
            break;
        }
        if (line.tokens.front() != "coeff" || line.tokens.size() != key_len + 2) {
            throw FormatError(line.number, jacobi ? "expected 'coeff <n> <r> <num/den>'"
                                                  : "expected 'coeff <n> <r> <m> <num/den>'");
        }
        std::vector<int> key;
        for (std::size_t i = 0; i < key_len; ++i) {
            key.push_back(parse_int(line, line.tokens[1 + i]));
        }
        const int n = key[0];
        if (n < 0 || n > out.trunc || (!jacobi && (key[2] < 0 || key[2] > out.trunc))) {
            throw FormatError(line.number, "exponent outside [0, trunc]");
        }
        if (!out.records.empty() && !(out.records.back().second < key)) {
            throw FormatError(line.number, "records must be strictly ascending");
        }
        out.values.push_back(parse_value(line, line.tokens.back()));
        out.records.emplace_back(line, std::move(key));
    }
    if (!ended) {
        throw FormatError(last_line, "missing END");
    }
    if (at < lines.size()) {
        throw FormatError(lines[at].number, "content after END");
    }
    return out;
}

JacobiSeries to_jacobi(const Parsed &p)
{
    JacobiSeries f(p.weight, p.index, p.trunc);
    for (std::size_t i = 0; i < p.records.size(); ++i) {
        const auto &key = p.records[i].second;
        f.set(key[0], key[1], p.values[i]);
    }
    return f;
}

SiegelSeries to_siegel(const Parsed &p)
{
    SiegelSeries F(p.weight, p.trunc);
    for (std::size_t i = 0; i < p.records.size(); ++i) {
        const auto &key = p.records[i].second;
        F.set(key[0], key[1], key[2], p.values[i]);
    }
    if (const auto bad = find_symmetry_violation(F)) {
        const auto &[n, r, m] = *bad;
        int line = 0;
        for (const auto &rec : p.records) {
            if (rec.second == std::vector<int>{n, r, m}) {
                line = rec.first.number;
            }
        }
        throw FormatError(line, SymmetryViolation(*bad).what());
    }
    return F;
}

} // namespace

std::string export_jacobi(const JacobiSeries &f)
{
    std::ostringstream out;
    write_header(out, "jacobi");
    out << "weight " << f.weight() << '\n'
        << "index " << f.index() << '\n'
        << "trunc " << f.trunc() << '\n';
    for (const auto &[key, c] : f.coeffs()) {
        out << "coeff " << key.first << ' ' << key.second << ' ' << to_fraction_string(c) << '\n';
    }
    out << "END\n";
    return out.str();
}

std::string export_siegel(const SiegelSeries &F)
{
    std::ostringstream out;
    write_header(out, "siegel");
    out << "weight " << F.weight() << '\n' << "trunc " << F.trunc() << '\n';
    for (const auto &[key, c] : F.coeffs()) {
        const auto &[n, r, m] = key;
        out << "coeff " << n << ' ' << r << ' ' << m << ' ' << to_fraction_string(c) << '\n';
    }
    out << "END\n";
    return out.str();
}

JacobiSeries import_jacobi(std::string_view text)
{
    const auto parsed = parse(text);
    if (parsed.kind != "jacobi") {
        throw FormatError(2, "expected kind jacobi, found " + parsed.kind);
    }
    return to_jacobi(parsed);
}

SiegelSeries import_siegel(std::string_view text)
{
    const auto parsed = parse(text);
    if (parsed.kind != "siegel") {
        throw FormatError(2, "expected kind siegel, found " + parsed.kind);
    }
    return to_siegel(parsed);
}

std::variant<JacobiSeries, SiegelSeries> import_any(std::string_view text)
{
    const auto parsed = parse(text);
    if (parsed.kind == "jacobi") {
        return to_jacobi(parsed);
    }
    return to_siegel(parsed);
}

std::string read_text_file(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path &path, std::string_view text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
    if (!out) {
        throw std::runtime_error("write failed for " + path.string());
    }
}

} // namespace rc
