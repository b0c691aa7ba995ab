#pragma once

// Lens spaces L(p, q): their torus-embedded circulant Heegaard graphs,
// exact spanning-tree counts and the classification predicates.

#include <cstdint>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "heegraph/invariants.hpp"
#include "heegraph/ribbon_graph.hpp"

namespace heegraph {

class LensParams {
public:
    /// Requires p >= 3 and gcd(p, q) = 1; q is reduced into [1, p).
    static LensParams make(std::int64_t p, std::int64_t q);

    [[nodiscard]] std::int64_t p() const noexcept { return p_; }
    [[nodiscard]] std::int64_t q() const noexcept { return q_; }

    friend bool operator==(const LensParams&, const LensParams&) = default;

private:
    LensParams(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
    std::int64_t p_;
    std::int64_t q_;
};

/// Sorted residues {q, -q, q^-1, -q^-1} mod p.
using QOrbit = std::vector<std::int64_t>;

std::int64_t inverse_mod(std::int64_t a, std::int64_t m);

/// The circulant C_p(+-1, +-q) embedded in the torus.  Vertex i has the
/// rotation (arriving e_{i-1}, arriving f from i-q, departing e_i,
/// departing f towards i+q); edge i is e_i, edge p+i is f_i.  The torus
/// postconditions are checked before returning.
RibbonGraph lens_heegaard_graph(const LensParams& params);

/// Edge list of C_p(+-1, +-q) as an abstract multigraph.
Multigraph lens_multigraph(const LensParams& params);

/// Spanning trees of an arbitrary multigraph: fraction-free (Bareiss)
/// determinant of the Laplacian with the last row and column removed.
mpz_class spanning_tree_count(const Multigraph& g);

struct TauOptions {
    std::int64_t p_bound = 400;
    /// Largest p for which the floating-point eigenvalue product is
    /// compared against the exact value.
    std::int64_t float_check_bound = 64;
};

/// Exact number of spanning trees of C_p(+-1, +-q) by the matrix-tree
/// theorem.  The reduced Laplacian is relabelled into a narrow band first,
/// then eliminated fraction-free inside the band.
mpz_class tau(const LensParams& params, const TauOptions& opts = {});

/// (1/p) prod_{j=1}^{p-1} (4 - 2cos(2 pi j/p) - 2cos(2 pi q j/p)) in double.
double tau_eigenvalue_product(const LensParams& params);

QOrbit q_orbit(const LensParams& params);
bool lens_homeomorphic(const LensParams& a, const LensParams& b);

/// Exhaustive search for a vertex bijection between C_p(+-1,+-a.q) and
/// C_p(+-1,+-b.q) preserving edge multiplicities.  p <= 9.
bool circulant_isomorphic_bruteforce(const LensParams& a, const LensParams& b);

struct SquareShapeReport {
    LensParams params;
    mpz_class tau;
    /// Odd p: tau = p * A^2.
    std::optional<mpz_class> a;
    /// Even p: lambda_{p/2} = 6 - 2(-1)^q and tau * p / lambda_{p/2} = B^2.
    std::optional<std::int64_t> lambda_half;
    std::optional<mpz_class> b;
};

/// Throws CheckFailure if tau does not have the predicted square shape.
SquareShapeReport square_shape_check(const LensParams& params, const TauOptions& opts = {});

struct OrbitRow {
    std::int64_t p = 0;
    std::int64_t orbit_rep = 0;
    QOrbit orbit;
    mpz_class tau;
};

struct TauScan {
    std::vector<OrbitRow> rows;
    /// Pairs of distinct orbits (same p) with equal tau, as (p, rep1, rep2).
    std::vector<std::array<std::int64_t, 3>> collisions;
    /// Orbit members whose tau differed from the representative's, as (p, q).
    std::vector<std::array<std::int64_t, 2>> orbit_violations;
};

struct ScanOptions {
    std::int64_t p_min = 3;
    std::int64_t p_max = 50;
    bool primes_only = false;
    unsigned workers = 0;
};

/// One row per orbit of (Z/p)^x under q -> +-q^{+-1}, ordered by (p, rep).
/// tau is evaluated on every orbit member.
TauScan scan_tau_orbits(const ScanOptions& opts);

std::string orbit_to_string(const QOrbit& orbit);
std::string scan_to_csv(const TauScan& scan);

bool is_prime(std::int64_t n);

}  // namespace heegraph
