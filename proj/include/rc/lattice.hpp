#pragma once

#include <span>
#include <string>
#include <vector>

#include <rc/rational.hpp>
#include <rc/series.hpp>

namespace rc {

class SiegelSeries;

// Lattice vector in the coordinate model, stored as twice its coordinates so
// half-integral entries stay integral.
struct LatticeVector {
    std::vector<int> twice;

    friend auto operator<=>(const LatticeVector &, const LatticeVector &) = default;
};

// x . y for vectors in doubled coordinates; exact only for lattice vectors
// of an integral lattice.
int inner_product(const LatticeVector &x, const LatticeVector &y);
int half_norm(const LatticeVector &x);

// Even unimodular lattice in the standard coordinate model: an orthogonal
// direct sum of E8 blocks (E8 = integer or half-odd-integer coordinates
// with even coordinate sum) under the Euclidean inner product.
class LatticeDesc
{
public:
    static LatticeDesc e8();
    static LatticeDesc e8_e8();
    // "e8" or "e8e8"; throws std::invalid_argument otherwise.
    static LatticeDesc by_name(const std::string &name);

    const std::string &name() const { return name_; }
    int rank() const { return 8 * blocks_; }
    int blocks() const { return blocks_; }

    bool contains(std::span<const int> twice) const;
    bool contains(const LatticeVector &x) const { return contains(std::span<const int>(x.twice)); }

    // From ordinary coordinates; throws if a coordinate is not in (1/2)Z.
    LatticeVector vector_from(const std::vector<Rational> &coords) const;

private:
    LatticeDesc(std::string name, int blocks) : name_(std::move(name)), blocks_(blocks) {}

    std::string name_;
    int blocks_ = 1;
};

// Every lattice vector x with x.x / 2 <= max_half_norm, each once, sorted
// lexicographically by doubled coordinates.
std::vector<LatticeVector> enumerate_vectors(const LatticeDesc &lattice, int max_half_norm);

// Fixed vector of half-norm h used for reproducible fixtures. For h = 1 this
// is (1, -1, 0, ..., 0); otherwise the first vector of that half-norm in
// enumeration order.
LatticeVector default_vector(const LatticeDesc &lattice, int half_norm);

// c(n, r) = #{x : x.x/2 = n, x.v = r}; weight rank/2, index v.v/2.
JacobiSeries jacobi_theta(const LatticeDesc &lattice, const LatticeVector &v, int trunc);

// a(n, r, m) = #{(x, y) : x.x/2 = n, y.y/2 = m, x.y = r}; weight rank/2.
SiegelSeries siegel_theta(const LatticeDesc &lattice, int trunc);

// Bernoulli numbers with B_1 = -1/2.
Rational bernoulli(int n);

// 1 - (2k / B_k) sum_{n>=1} sigma_{k-1}(n) q^n; k even, k >= 4.
EllipticSeries eisenstein_q(int k, int trunc);

} // namespace rc
