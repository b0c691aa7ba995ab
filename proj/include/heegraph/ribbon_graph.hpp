#pragma once

// Cellularly embedded graphs as signed rotation systems.
//
// Half-edges are numbered 0 .. 2e-1.  Each vertex lists its half-edges in
// cyclic (clockwise) order; each edge pairs two half-edges and carries a
// twist bit.  Loops and parallel edges are ordinary edges.
//
// Boundary tracing works on flags: every half-edge h has two sides,
// flag 2h ("before", towards the rotation predecessor) and flag 2h+1
// ("after", towards the rotation successor).  Faces of a spanning ribbon
// subgraph are the orbits of two involutions on flags: the corner move at
// a vertex and the move along an edge (which keeps the side on a twisted
// edge and swaps it on an untwisted one).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace heegraph {

using HalfEdge = std::uint32_t;
using Flag = std::uint32_t;

struct EdgeRecord {
    HalfEdge a = 0;
    HalfEdge b = 0;
    bool twisted = false;

    friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Spanning edge subset.  Indexed by edge id.
using EdgeSubset = std::vector<bool>;

class RibbonGraph {
public:
    RibbonGraph() = default;

    /// Validates and builds.  Throws InvalidGraph naming the offending id.
    static RibbonGraph build(std::size_t vertex_count, std::vector<std::vector<HalfEdge>> rotations,
                             std::vector<EdgeRecord> edges);

    [[nodiscard]] std::size_t vertex_count() const noexcept { return rotations_.size(); }
    [[nodiscard]] std::size_t edge_count() const noexcept { return edges_.size(); }
    [[nodiscard]] std::size_t half_edge_count() const noexcept { return 2 * edges_.size(); }

    [[nodiscard]] const std::vector<std::vector<HalfEdge>>& rotations() const noexcept { return rotations_; }
    [[nodiscard]] std::span<const HalfEdge> rotation(std::size_t v) const { return rotations_.at(v); }
    [[nodiscard]] const std::vector<EdgeRecord>& edges() const noexcept { return edges_; }
    [[nodiscard]] const EdgeRecord& edge(std::size_t j) const { return edges_.at(j); }
    [[nodiscard]] std::size_t degree(std::size_t v) const { return rotations_.at(v).size(); }

    [[nodiscard]] std::uint32_t vertex_of(HalfEdge h) const { return vertex_of_[h]; }
    [[nodiscard]] std::uint32_t edge_of(HalfEdge h) const { return edge_of_[h]; }
    [[nodiscard]] HalfEdge next_at_vertex(HalfEdge h) const { return next_[h]; }
    [[nodiscard]] HalfEdge prev_at_vertex(HalfEdge h) const { return prev_[h]; }
    [[nodiscard]] HalfEdge opposite(HalfEdge h) const {
        const auto& e = edges_[edge_of_[h]];
        return e.a == h ? e.b : e.a;
    }
    [[nodiscard]] bool is_twisted(std::size_t j) const { return edges_.at(j).twisted; }
    [[nodiscard]] bool is_loop(std::size_t j) const {
        return vertex_of_[edges_.at(j).a] == vertex_of_[edges_.at(j).b];
    }

    /// Flag reached by crossing along the edge of `f` to its other end.
    [[nodiscard]] Flag along_edge(Flag f) const {
        const HalfEdge h = f >> 1U;
        const std::uint32_t side = f & 1U;
        const bool tw = edges_[edge_of_[h]].twisted;
        return (opposite(h) << 1U) | (tw ? side : 1U - side);
    }

    /// Same combinatorial data (ids included).
    friend bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
        return a.rotations_ == b.rotations_ && a.edges_ == b.edges_;
    }

private:
    std::vector<std::vector<HalfEdge>> rotations_;
    std::vector<EdgeRecord> edges_;
    std::vector<std::uint32_t> vertex_of_;
    std::vector<std::uint32_t> edge_of_;
    std::vector<HalfEdge> next_;
    std::vector<HalfEdge> prev_;
};

struct SubgraphMetrics {
    std::int64_t e = 0;  ///< edges in the subset
    std::int64_t v = 0;  ///< vertices (always all of G)
    std::int64_t k = 0;  ///< connected components
    std::int64_t r = 0;  ///< rank v - k
    std::int64_t n = 0;  ///< nullity e - r
    std::int64_t f = 0;  ///< boundary components of the ribbon subgraph
    std::int64_t t = 0;  ///< 0 orientable, 1 not
    std::int64_t euler_genus = 0;

    friend bool operator==(const SubgraphMetrics&, const SubgraphMetrics&) = default;
};

EdgeSubset empty_subset(const RibbonGraph& g);
EdgeSubset full_subset(const RibbonGraph& g);
/// Subset from a list of edge ids; throws std::out_of_range on a bad id.
EdgeSubset subset_of(const RibbonGraph& g, std::span<const std::size_t> ids);

SubgraphMetrics subgraph_metrics(const RibbonGraph& g, const EdgeSubset& subset);
inline SubgraphMetrics metrics(const RibbonGraph& g) { return subgraph_metrics(g, full_subset(g)); }

/// Lengths (in flags, i.e. side-steps) of the boundary walks of the
/// ribbon subgraph; isolated vertices contribute no walk here.
std::vector<std::size_t> boundary_walk_lengths(const RibbonGraph& g, const EdgeSubset& subset);

bool is_connected(const RibbonGraph& g);

/// Toggles the twist bit on every edge of the subset.
RibbonGraph partial_petrial(const RibbonGraph& g, const EdgeSubset& subset);

/// Medial graph: one 4-valent vertex per edge of g, one medial edge per
/// corner of g.  Medial half-edge ids are the flags of g.  The rotation at
/// medial vertex j starts at a black corner: positions (0,1) and (2,3) face
/// the vertices of g, positions (1,2) and (3,0) face the faces of g.
RibbonGraph medial_graph(const RibbonGraph& g);

/// Underlying abstract multigraph: endpoint pairs indexed by edge id.
std::vector<std::pair<std::uint32_t, std::uint32_t>> underlying_edges(const RibbonGraph& g);

/// Reusable scratch space for hot loops over many subsets of one graph.
/// Not thread-safe; give each worker its own instance.
class SubsetTracer {
public:
    explicit SubsetTracer(const RibbonGraph& g);

    /// Metrics of the spanning subgraph on the edges whose bit is set.
    /// Requires e(G) <= 64.
    SubgraphMetrics metrics(std::uint64_t mask);

    /// Boundary components of the full graph after toggling twists on mask.
    std::int64_t petrial_face_count(std::uint64_t mask);

private:
    const RibbonGraph* g_;
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> parity_;
    std::vector<HalfEdge> next_in_subset_;
    std::vector<std::uint8_t> seen_;
};

}  // namespace heegraph
