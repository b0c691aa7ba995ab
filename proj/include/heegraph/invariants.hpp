#pragma once

// Bollobas-Riordan, Tutte and Penrose polynomials of ribbon graphs.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "heegraph/polynomial.hpp"
#include "heegraph/ribbon_graph.hpp"

namespace heegraph {

struct EnumerationOptions {
    /// Largest edge count for which 2^e subsets are enumerated.
    std::size_t edge_cap = 26;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;
};

/// R(G; x, y, z, w) = sum over A of
///   (x-1)^{r(G)-r(A)} y^{n(A)} z^{k(A)-f(A)+n(A)} w^{t(A)}.
MultiPoly bollobas_riordan(const RibbonGraph& g, const EnumerationOptions& opts = {});

/// T(G; x, y) = R(G; x, y-1, 1, 1).
MultiPoly tutte(const RibbonGraph& g, const EnumerationOptions& opts = {});
MultiPoly tutte_from_bollobas_riordan(const MultiPoly& br);

/// Abstract multigraph given by endpoint pairs.
struct Multigraph {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

Multigraph underlying_multigraph(const RibbonGraph& g);

/// Tutte polynomial by deletion-contraction; ignores any embedding.
MultiPoly tutte_deletion_contraction(const Multigraph& g, std::size_t edge_cap = 26);

/// Penrose polynomial P(G; L) = sum over A of (-1)^{|A|} L^{c(A)}, where c(A)
/// counts boundary components of G with the edges of A given a half-twist.
MultiPoly penrose(const RibbonGraph& g, const EnumerationOptions& opts = {});

/// Penrose polynomial computed literally on the medial graph: each medial
/// vertex takes the white smoothing or the crossing, and the resulting
/// closed curves are counted.
MultiPoly penrose_via_medial(const RibbonGraph& g, const EnumerationOptions& opts = {});

/// P(G; k) by substitution into an already computed Penrose polynomial.
mpz_class penrose_eval(const MultiPoly& penrose_poly, long k);
mpz_class penrose_eval(const RibbonGraph& g, long k, const EnumerationOptions& opts = {});

/// Sign-and-count tally over Penrose states: counts[c][parity of |A|].
/// Exposed for tests of the partitioned enumeration.
struct PenroseTally {
    std::vector<std::array<std::int64_t, 2>> counts;
    void merge(const PenroseTally& other);
    [[nodiscard]] MultiPoly to_polynomial() const;
};

PenroseTally penrose_tally(const RibbonGraph& g, std::uint64_t first_state, std::uint64_t end_state);

}  // namespace heegraph
