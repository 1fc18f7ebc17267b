#include <rc/lattice.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>

#include <rc/parallel.hpp>
#include <rc/siegel.hpp>

namespace rc {

int inner_product(const LatticeVector &x, const LatticeVector &y)
{
    if (x.twice.size() != y.twice.size()) {
        throw std::invalid_argument("inner product of vectors of different rank");
    }
    long dot = 0;
    for (std::size_t i = 0; i < x.twice.size(); ++i) {
        dot += static_cast<long>(x.twice[i]) * y.twice[i];
    }
    if (dot % 4 != 0) {
        throw std::invalid_argument("inner product is not integral");
    }
    return static_cast<int>(dot / 4);
}

int half_norm(const LatticeVector &x)
{
    const int norm = inner_product(x, x);
    if (norm % 2 != 0) {
        throw std::invalid_argument("vector has odd norm");
    }
    return norm / 2;
}

LatticeDesc LatticeDesc::e8()
{
    return LatticeDesc("e8", 1);
}

LatticeDesc LatticeDesc::e8_e8()
{
    return LatticeDesc("e8e8", 2);
}

LatticeDesc LatticeDesc::by_name(const std::string &name)
{
    if (name == "e8") {
        return e8();
    }
    if (name == "e8e8") {
        return e8_e8();
    }
    throw std::invalid_argument("unknown lattice '" + name + "' (expected e8 or e8e8)");
}

namespace {

bool e8_block_contains(std::span<const int> twice)
{
    const bool all_even = std::all_of(twice.begin(), twice.end(), [](int c) { return c % 2 == 0; });
    const bool all_odd = std::all_of(twice.begin(), twice.end(), [](int c) { return c % 2 != 0; });
    if (!all_even && !all_odd) {
        return false;
    }
    long sum = 0;
    for (int c : twice) {
        sum += c;
    }
    // Coordinate sum (= sum / 2) must be even.
    return sum % 4 == 0;
}

// All E8 vectors with sum of squared doubled coordinates <= 8 * max_half_norm.
std::vector<LatticeVector> enumerate_e8(int max_half_norm)
{
    const int budget = 8 * max_half_norm;
    int cmax = 0;
    while ((cmax + 1) * (cmax + 1) <= budget) {
        ++cmax;
    }
    std::vector<LatticeVector> out;
    std::vector<int> cur(8);
    for (int parity : {0, 1}) {
        auto recurse = [&](auto &&self, std::size_t pos, int used) -> void {
            if (pos == 8) {
                if (e8_block_contains(cur)) {
                    out.push_back({cur});
                }
                return;
            }
            for (int c = -cmax; c <= cmax; ++c) {
                if (((c % 2) + 2) % 2 != parity) {
                    continue;
                }
                const int next = used + c * c;
                // Remaining coordinates contribute at least parity each.
                if (next + static_cast<int>(7 - pos) * parity > budget) {
                    continue;
                }
                cur[pos] = c;
                self(self, pos + 1, next);
            }
        };
        recurse(recurse, 0, 0);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool LatticeDesc::contains(std::span<const int> twice) const
{
    if (static_cast<int>(twice.size()) != rank()) {
        return false;
    }
    for (int b = 0; b < blocks_; ++b) {
        if (!e8_block_contains(twice.subspan(static_cast<std::size_t>(8 * b), 8))) {
            return false;
        }
    }
    return true;
}

LatticeVector LatticeDesc::vector_from(const std::vector<Rational> &coords) const
{
    LatticeVector v;
    for (const auto &c : coords) {
        const Rational doubled = 2 * c;
        if (doubled.get_den() != 1 || !doubled.get_num().fits_sint_p()) {
            throw std::invalid_argument("coordinate " + c.get_str() + " is not in (1/2)Z");
        }
        v.twice.push_back(static_cast<int>(doubled.get_num().get_si()));
    }
    if (!contains(v)) {
        throw std::invalid_argument("vector is not in lattice " + name_);
    }
    return v;
}

std::vector<LatticeVector> enumerate_vectors(const LatticeDesc &lattice, int max_half_norm)
{
    if (max_half_norm < 0) {
        throw std::invalid_argument("max_half_norm must be non-negative");
    }
    const auto block = enumerate_e8(max_half_norm);
    std::vector<LatticeVector> out;
    for (const auto &v : block) {
        out.push_back(v);
    }
    std::vector<std::vector<const LatticeVector *>> by_norm(static_cast<std::size_t>(max_half_norm) + 1);
    for (const auto &v : block) {
        by_norm[static_cast<std::size_t>(half_norm(v))].push_back(&v);
    }
    for (int b = 1; b < lattice.blocks(); ++b) {
        std::vector<LatticeVector> next;
        for (const auto &head : out) {
            const int used = half_norm(head);
            for (int h = 0; used + h <= max_half_norm; ++h) {
                for (const auto *tail : by_norm[static_cast<std::size_t>(h)]) {
                    LatticeVector joined = head;
                    joined.twice.insert(joined.twice.end(), tail->twice.begin(), tail->twice.end());
                    next.push_back(std::move(joined));
                }
            }
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

LatticeVector default_vector(const LatticeDesc &lattice, int half_norm_value)
{
    if (half_norm_value < 0) {
        throw std::invalid_argument("half-norm must be non-negative");
    }
    if (half_norm_value == 1) {
        LatticeVector v{std::vector<int>(static_cast<std::size_t>(lattice.rank()), 0)};
        v.twice[0] = 2;
        v.twice[1] = -2;
        return v;
    }
    for (const auto &v : enumerate_vectors(lattice, half_norm_value)) {
        if (half_norm(v) == half_norm_value) {
            return v;
        }
    }
    throw std::invalid_argument("no lattice vector of half-norm " + std::to_string(half_norm_value));
}

JacobiSeries jacobi_theta(const LatticeDesc &lattice, const LatticeVector &v, int trunc)
{
    if (!lattice.contains(v)) {
        throw std::invalid_argument("theta vector is not in lattice " + lattice.name());
    }
    if (trunc < 0) {
        throw std::invalid_argument("truncation must be non-negative");
    }
    // The lattice is an orthogonal sum of E8 blocks, so the (norm, x.v)
    // counts of the sum are the convolution of the per-block counts.
    using counts_t = std::map<JacobiSeries::key_type, Integer>;
    const auto block_vectors = enumerate_e8(trunc);
    counts_t total{{{0, 0}, Integer(1)}};
    for (int b = 0; b < lattice.blocks(); ++b) {
        LatticeVector vb{std::vector<int>(v.twice.begin() + 8 * b, v.twice.begin() + 8 * (b + 1))};
        counts_t block;
        for (const auto &x : block_vectors) {
            ++block[{half_norm(x), inner_product(x, vb)}];
        }
        counts_t next;
        for (const auto &[ka, ca] : total) {
            for (const auto &[kb, cb] : block) {
                if (ka.first + kb.first <= trunc) {
                    next[{ka.first + kb.first, ka.second + kb.second}] += ca * cb;
                }
            }
        }
        total = std::move(next);
    }
    JacobiSeries out(lattice.rank() / 2, half_norm(v), trunc);
    for (const auto &[key, c] : total) {
        out.set(key.first, key.second, Rational(c));
    }
    return out;
}

SiegelSeries siegel_theta(const LatticeDesc &lattice, int trunc)
{
    if (trunc < 0) {
        throw std::invalid_argument("truncation must be non-negative");
    }
    const auto vectors = enumerate_vectors(lattice, trunc);
    const std::size_t dim = static_cast<std::size_t>(lattice.rank());
    std::vector<int> norms;
    std::vector<int> flat;
    for (const auto &v : vectors) {
        norms.push_back(half_norm(v));
        flat.insert(flat.end(), v.twice.begin(), v.twice.end());
    }
    // |x.y| <= sqrt(2n) sqrt(2m) <= 2 trunc.
    const int rspan = 4 * trunc + 1;
    const std::size_t cells = static_cast<std::size_t>((trunc + 1) * rspan * (trunc + 1));
    auto cell = [&](int n, int r, int m) {
        return (static_cast<std::size_t>(n) * rspan + static_cast<std::size_t>(r + 2 * trunc)) * (trunc + 1)
               + static_cast<std::size_t>(m);
    };

    // Per-chunk integer tallies summed afterwards: identical for any thread count.
    std::vector<std::vector<std::int64_t>> partial;
    std::mutex partial_lock;
    parallel_chunks(vectors.size(), [&](std::size_t begin, std::size_t end) {
        std::vector<std::int64_t> local(cells, 0);
        for (std::size_t a = begin; a < end; ++a) {
            const int *x = &flat[a * dim];
            for (std::size_t b = 0; b < vectors.size(); ++b) {
                const int *y = &flat[b * dim];
                int dot = 0;
                for (std::size_t i = 0; i < dim; ++i) {
                    dot += x[i] * y[i];
                }
                ++local[cell(norms[a], dot / 4, norms[b])];
            }
        }
        std::lock_guard<std::mutex> guard(partial_lock);
        partial.push_back(std::move(local));
    });
    std::vector<std::int64_t> total(cells, 0);
    for (const auto &p : partial) {
        for (std::size_t i = 0; i < cells; ++i) {
            total[i] += p[i];
        }
    }

    SiegelSeries out(lattice.rank() / 2, trunc);
    for (int n = 0; n <= trunc; ++n) {
        for (int r = -2 * trunc; r <= 2 * trunc; ++r) {
            for (int m = 0; m <= trunc; ++m) {
                const auto c = total[cell(n, r, m)];
                if (c != 0) {
                    out.set(n, r, m, Rational(Integer(static_cast<long>(c))));
                }
            }
        }
    }
    return out;
}

Rational bernoulli(int n)
{
    if (n < 0) {
        throw std::invalid_argument("Bernoulli index must be non-negative");
    }
    // sum_{j=0}^{n} binom(n+1, j) B_j = 0 for n >= 1.
    std::vector<Rational> b{Rational(1)};
    for (int i = 1; i <= n; ++i) {
        Rational acc{0};
        Integer binom{1}; // binom(i+1, j)
        for (int j = 0; j < i; ++j) {
            acc += binom * b[static_cast<std::size_t>(j)];
            binom = binom * (i + 1 - j) / (j + 1);
        }
        b.push_back(-acc / (i + 1));
    }
    return b[static_cast<std::size_t>(n)];
}

EllipticSeries eisenstein_q(int k, int trunc)
{
    if (k < 4 || k % 2 != 0) {
        throw std::invalid_argument("Eisenstein series needs even weight >= 4, got " + std::to_string(k));
    }
    if (trunc < 0) {
        throw std::invalid_argument("truncation must be non-negative");
    }
    const Rational factor = -Rational(2 * k) / bernoulli(k);
    std::vector<Rational> coeffs{Rational(1)};
    for (int n = 1; n <= trunc; ++n) {
        Integer sigma{0};
        for (int d = 1; d <= n; ++d) {
            if (n % d == 0) {
                Integer power;
                mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k - 1));
                sigma += power;
            }
        }
        coeffs.push_back(factor * sigma);
    }
    return EllipticSeries(k, std::move(coeffs));
}

} // namespace rc
