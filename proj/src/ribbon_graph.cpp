#include "heegraph/ribbon_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "heegraph/errors.hpp"

namespace heegraph {

RibbonGraph RibbonGraph::build(std::size_t vertex_count, std::vector<std::vector<HalfEdge>> rotations,
                               std::vector<EdgeRecord> edges) {
    if (rotations.size() != vertex_count) {
        throw InvalidGraph("expected " + std::to_string(vertex_count) + " rotations, got " +
                           std::to_string(rotations.size()));
    }
    const std::size_t half_edges = 2 * edges.size();
    constexpr auto unset = static_cast<std::uint32_t>(-1);

    RibbonGraph g;
    g.vertex_of_.assign(half_edges, unset);
    g.edge_of_.assign(half_edges, unset);
    g.next_.assign(half_edges, 0);
    g.prev_.assign(half_edges, 0);

    for (std::size_t v = 0; v < rotations.size(); ++v) {
        const auto& rot = rotations[v];
        for (const HalfEdge h : rot) {
            if (h >= half_edges) {
                throw InvalidGraph("half-edge " + std::to_string(h) + " at vertex " + std::to_string(v) +
                                   " is out of range (" + std::to_string(half_edges) + " half-edges)");
            }
            if (g.vertex_of_[h] != unset) {
                throw InvalidGraph("half-edge " + std::to_string(h) + " appears in more than one rotation slot");
            }
            g.vertex_of_[h] = static_cast<std::uint32_t>(v);
        }
        for (std::size_t i = 0; i < rot.size(); ++i) {
            const HalfEdge h = rot[i];
            g.next_[h] = rot[(i + 1) % rot.size()];
            g.prev_[h] = rot[(i + rot.size() - 1) % rot.size()];
        }
    }
    for (std::size_t j = 0; j < edges.size(); ++j) {
        for (const HalfEdge h : {edges[j].a, edges[j].b}) {
            if (h >= half_edges) {
                throw InvalidGraph("half-edge " + std::to_string(h) + " in edge " + std::to_string(j) +
                                   " is out of range");
            }
            if (g.edge_of_[h] != unset) {
                throw InvalidGraph("half-edge " + std::to_string(h) + " is paired twice (edge " +
                                   std::to_string(g.edge_of_[h]) + " and edge " + std::to_string(j) + ")");
            }
            g.edge_of_[h] = static_cast<std::uint32_t>(j);
        }
    }
    for (HalfEdge h = 0; h < half_edges; ++h) {
        if (g.vertex_of_[h] == unset) {
            throw InvalidGraph("half-edge " + std::to_string(h) + " appears in no rotation");
        }
        if (g.edge_of_[h] == unset) {
            throw InvalidGraph("half-edge " + std::to_string(h) + " appears in no edge");
        }
    }
    g.rotations_ = std::move(rotations);
    g.edges_ = std::move(edges);
    return g;
}

namespace {

// Union-find over vertices that also tracks the relative local orientation
// of each vertex with respect to its root.
class OrientedUnionFind {
public:
    explicit OrientedUnionFind(std::size_t n) : parent_(n), parity_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0U);
    }

    std::pair<std::uint32_t, std::uint8_t> find(std::uint32_t v) {
        std::uint8_t par = 0;
        std::uint32_t root = v;
        while (parent_[root] != root) {
            par ^= parity_[root];
            root = parent_[root];
        }
        // Path compression with parity bookkeeping.
        std::uint8_t acc = par;
        while (parent_[v] != root) {
            const auto up = parent_[v];
            const auto old = parity_[v];
            parent_[v] = root;
            parity_[v] = acc;
            acc ^= old;
            v = up;
        }
        return {root, par};
    }

    /// Returns false if this edge closes an orientation-reversing cycle.
    bool unite(std::uint32_t a, std::uint32_t b, std::uint8_t flip, bool& merged) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        merged = ra != rb;
        if (!merged) return (pa ^ pb) == flip;
        parent_[ra] = rb;
        parity_[ra] = pa ^ pb ^ flip;
        return true;
    }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint8_t> parity_;
};

template <typename InSubset>
SubgraphMetrics metrics_impl(const RibbonGraph& g, InSubset in, std::vector<HalfEdge>& next_in,
                             std::vector<std::uint8_t>& seen) {
    SubgraphMetrics m;
    const auto nv = static_cast<std::int64_t>(g.vertex_count());
    m.v = nv;

    OrientedUnionFind uf(g.vertex_count());
    std::int64_t components = nv;
    bool orientable = true;
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        if (!in(j)) continue;
        ++m.e;
        const auto& rec = g.edge(j);
        bool merged = false;
        if (!uf.unite(g.vertex_of(rec.a), g.vertex_of(rec.b), rec.twisted ? 1 : 0, merged)) orientable = false;
        if (merged) --components;
    }
    m.k = components;
    m.r = nv - components;
    m.n = m.e - m.r;
    m.t = orientable ? 0 : 1;

    // Successor among subset half-edges at each vertex.
    std::int64_t isolated = 0;
    next_in.assign(g.half_edge_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto rot = g.rotation(v);
        HalfEdge first = 0;
        HalfEdge last = 0;
        bool any = false;
        for (const HalfEdge h : rot) {
            if (!in(g.edge_of(h))) continue;
            if (!any) {
                first = h;
                any = true;
            } else {
                next_in[last] = h;
            }
            last = h;
        }
        if (!any) {
            ++isolated;
            continue;
        }
        next_in[last] = first;
    }

    seen.assign(2 * g.half_edge_count(), 0);
    std::int64_t walks = 0;
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        if (!in(j)) continue;
        const auto& rec = g.edge(j);
        for (const HalfEdge h : {rec.a, rec.b}) {
            for (std::uint32_t side = 0; side < 2; ++side) {
                const Flag start = (h << 1U) | side;
                if (seen[start] != 0) continue;
                ++walks;
                Flag f = start;
                do {
                    seen[f] = 1;
                    const Flag across = g.along_edge(f);
                    seen[across] = 1;
                    // Corner move: the "after" side of h meets the "before"
                    // side of its successor, and vice versa.
                    const HalfEdge hh = across >> 1U;
                    if ((across & 1U) != 0) {
                        f = next_in[hh] << 1U;
                    } else {
                        // predecessor within the subset
                        HalfEdge p = hh;
                        while (next_in[p] != hh) p = next_in[p];
                        f = (p << 1U) | 1U;
                    }
                } while (f != start);
            }
        }
    }
    m.f = walks + isolated;
    m.euler_genus = 2 * m.k - m.v + m.e - m.f;
    return m;
}

}  // namespace

EdgeSubset empty_subset(const RibbonGraph& g) { return EdgeSubset(g.edge_count(), false); }
EdgeSubset full_subset(const RibbonGraph& g) { return EdgeSubset(g.edge_count(), true); }

EdgeSubset subset_of(const RibbonGraph& g, std::span<const std::size_t> ids) {
    EdgeSubset s(g.edge_count(), false);
    for (const auto id : ids) {
        if (id >= g.edge_count()) {
            throw std::out_of_range("edge index " + std::to_string(id) + " out of range (" +
                                    std::to_string(g.edge_count()) + " edges)");
        }
        s[id] = true;
    }
    return s;
}

namespace {
void check_subset_size(const RibbonGraph& g, const EdgeSubset& s) {
    if (s.size() != g.edge_count()) {
        throw std::out_of_range("edge subset has " + std::to_string(s.size()) + " entries, graph has " +
                                std::to_string(g.edge_count()) + " edges");
    }
}
}  // namespace

SubgraphMetrics subgraph_metrics(const RibbonGraph& g, const EdgeSubset& subset) {
    check_subset_size(g, subset);
    std::vector<HalfEdge> next_in;
    std::vector<std::uint8_t> seen;
    return metrics_impl(g, [&](std::size_t j) { return static_cast<bool>(subset[j]); }, next_in, seen);
}

std::vector<std::size_t> boundary_walk_lengths(const RibbonGraph& g, const EdgeSubset& subset) {
    check_subset_size(g, subset);
    auto in = [&](std::size_t j) { return static_cast<bool>(subset[j]); };
    std::vector<HalfEdge> next_in(g.half_edge_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        std::vector<HalfEdge> kept;
        for (const HalfEdge h : g.rotation(v)) {
            if (in(g.edge_of(h))) kept.push_back(h);
        }
        for (std::size_t i = 0; i < kept.size(); ++i) next_in[kept[i]] = kept[(i + 1) % kept.size()];
    }
    std::vector<HalfEdge> prev_in(g.half_edge_count(), 0);
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h) {
        if (in(g.edge_of(h))) prev_in[next_in[h]] = h;
    }
    std::vector<std::uint8_t> seen(2 * g.half_edge_count(), 0);
    std::vector<std::size_t> lengths;
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h) {
        if (!in(g.edge_of(h))) continue;
        for (std::uint32_t side = 0; side < 2; ++side) {
            const Flag start = (h << 1U) | side;
            if (seen[start] != 0) continue;
            std::size_t len = 0;
            Flag f = start;
            do {
                seen[f] = 1;
                const Flag across = g.along_edge(f);
                seen[across] = 1;
                len += 2;
                const HalfEdge hh = across >> 1U;
                f = (across & 1U) != 0 ? (next_in[hh] << 1U) : ((prev_in[hh] << 1U) | 1U);
            } while (f != start);
            lengths.push_back(len);
        }
    }
    return lengths;
}

bool is_connected(const RibbonGraph& g) {
    if (g.vertex_count() == 0) return true;
    return metrics(g).k == 1;
}

RibbonGraph partial_petrial(const RibbonGraph& g, const EdgeSubset& subset) {
    check_subset_size(g, subset);
    auto edges = g.edges();
    for (std::size_t j = 0; j < edges.size(); ++j) {
        if (subset[j]) edges[j].twisted = !edges[j].twisted;
    }
    return RibbonGraph::build(g.vertex_count(), g.rotations(), std::move(edges));
}

RibbonGraph medial_graph(const RibbonGraph& g) {
    if (g.edge_count() == 0) throw InvalidGraph("medial graph of an edgeless graph is undefined");
    if (!is_connected(g)) throw InvalidGraph("medial graph requires a connected graph");

    // A twisted edge's far end sees the medial vertex with reversed local
    // orientation.
    auto flips = [&](HalfEdge h) {
        const auto& rec = g.edge(g.edge_of(h));
        return rec.twisted && rec.b == h;
    };

    std::vector<std::vector<HalfEdge>> rotations(g.edge_count());
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const HalfEdge a = g.edge(j).a;
        const Flag after_a = (a << 1U) | 1U;
        const Flag before_a = a << 1U;
        rotations[j] = {after_a, before_a, g.along_edge(before_a), g.along_edge(after_a)};
    }
    std::vector<EdgeRecord> edges;
    edges.reserve(g.half_edge_count());
    for (HalfEdge h = 0; h < g.half_edge_count(); ++h) {
        const HalfEdge s = g.next_at_vertex(h);
        edges.push_back({(h << 1U) | 1U, s << 1U, flips(h) != flips(s)});
    }
    return RibbonGraph::build(g.edge_count(), std::move(rotations), std::move(edges));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> underlying_edges(const RibbonGraph& g) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    out.reserve(g.edge_count());
    for (const auto& rec : g.edges()) out.emplace_back(g.vertex_of(rec.a), g.vertex_of(rec.b));
    return out;
}

SubsetTracer::SubsetTracer(const RibbonGraph& g) : g_(&g) {
    if (g.edge_count() > 64) throw CapExceeded("bitmask subset tracing supports at most 64 edges");
}

SubgraphMetrics SubsetTracer::metrics(std::uint64_t mask) {
    return metrics_impl(*g_, [mask](std::size_t j) { return ((mask >> j) & 1U) != 0; }, next_in_subset_, seen_);
}

std::int64_t SubsetTracer::petrial_face_count(std::uint64_t mask) {
    const RibbonGraph& g = *g_;
    const std::size_t flags = 2 * g.half_edge_count();
    seen_.assign(flags, 0);
    std::int64_t faces = 0;
    for (Flag start = 0; start < flags; ++start) {
        if (seen_[start] != 0) continue;
        ++faces;
        Flag f = start;
        do {
            seen_[f] = 1;
            const HalfEdge h = f >> 1U;
            const std::uint32_t j = g.edge_of(h);
            const bool tw = g.edge(j).twisted != (((mask >> j) & 1U) != 0);
            const HalfEdge o = g.opposite(h);
            const std::uint32_t side = tw ? (f & 1U) : 1U - (f & 1U);
            const Flag across = (o << 1U) | side;
            seen_[across] = 1;
            f = side != 0 ? (g.next_at_vertex(o) << 1U) : ((g.prev_at_vertex(o) << 1U) | 1U);
        } while (f != start);
    }
    // Isolated vertices bound one component each.
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) ++faces;
    }
    return faces;
}

}  // namespace heegraph
