#include "heegraph/invariants.hpp"

#include <numeric>
#include <string>

#include "heegraph/errors.hpp"
#include "heegraph/parallel.hpp"

namespace heegraph {

namespace {

void check_cap(std::size_t edges, std::size_t cap, const char* what) {
    if (edges > cap || edges > 63) {
        throw CapExceeded(std::string(what) + ": " + std::to_string(edges) + " edges exceeds the enumeration cap of " +
                          std::to_string(std::min<std::size_t>(cap, 63)) +
                          " (2^e states); raise the cap explicitly if this is intended");
    }
}

Exponents exps(std::int32_t x, std::int32_t y, std::int32_t z, std::int32_t w, std::int32_t l) {
    return Exponents{x, y, z, w, l};
}

// Dense tally of Bollobas-Riordan exponent tuples
// (r(G)-r(A), n(A), k-f+n, t) -> number of subsets.
struct BrTally {
    std::size_t dim_r = 0;
    std::size_t dim_n = 0;
    std::size_t dim_z = 0;
    std::vector<std::int64_t> counts;

    BrTally() = default;
    BrTally(std::size_t v, std::size_t e) : dim_r(v + 1), dim_n(e + 1), dim_z(e + 1) {
        counts.assign(dim_r * dim_n * dim_z * 2, 0);
    }
    std::int64_t& at(std::size_t r, std::size_t n, std::size_t z, std::size_t t) {
        return counts[((r * dim_n + n) * dim_z + z) * 2 + t];
    }
    void merge(const BrTally& o) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    }
};

}  // namespace

MultiPoly bollobas_riordan(const RibbonGraph& g, const EnumerationOptions& opts) {
    const std::size_t e = g.edge_count();
    check_cap(e, opts.edge_cap, "Bollobas-Riordan state sum");
    const std::int64_t rank_g = metrics(g).r;

    const std::uint64_t states = std::uint64_t{1} << e;
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        BrTally tally(g.vertex_count(), e);
        SubsetTracer tracer(g);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            const auto m = tracer.metrics(mask);
            ++tally.at(static_cast<std::size_t>(rank_g - m.r), static_cast<std::size_t>(m.n),
                       static_cast<std::size_t>(m.k - m.f + m.n), static_cast<std::size_t>(m.t));
        }
        return tally;
    };
    BrTally total = partitioned_reduce<BrTally>(states, resolve_workers(opts.workers), work,
                                                [](BrTally& a, const BrTally& b) { a.merge(b); });

    MultiPoly result;
    std::vector<MultiPoly> x_minus_one_powers;
    for (std::size_t r = 0; r < total.dim_r; ++r) {
        for (std::size_t n = 0; n < total.dim_n; ++n) {
            for (std::size_t z = 0; z < total.dim_z; ++z) {
                for (std::size_t t = 0; t < 2; ++t) {
                    const std::int64_t c = total.at(r, n, z, t);
                    if (c == 0) continue;
                    while (x_minus_one_powers.size() <= r) {
                        x_minus_one_powers.push_back(
                            shifted_power(Var::x, -1, static_cast<unsigned>(x_minus_one_powers.size())));
                    }
                    const MultiPoly mono = MultiPoly::monomial(
                        exps(0, static_cast<std::int32_t>(n), static_cast<std::int32_t>(z),
                             static_cast<std::int32_t>(t), 0),
                        mpz_class(static_cast<long>(c)));
                    result += x_minus_one_powers[r] * mono;
                }
            }
        }
    }
    return result;
}

MultiPoly tutte_from_bollobas_riordan(const MultiPoly& br) {
    return br.substitute(Var::y, shifted_power(Var::y, -1, 1))
        .substitute(Var::z, mpz_class(1))
        .substitute(Var::w, mpz_class(1));
}

MultiPoly tutte(const RibbonGraph& g, const EnumerationOptions& opts) {
    return tutte_from_bollobas_riordan(bollobas_riordan(g, opts));
}

Multigraph underlying_multigraph(const RibbonGraph& g) {
    return Multigraph{g.vertex_count(), underlying_edges(g)};
}

namespace {

bool connected_without(const Multigraph& g, std::size_t skip, std::uint32_t from, std::uint32_t to) {
    std::vector<std::vector<std::uint32_t>> adj(g.vertex_count);
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        if (j == skip) continue;
        adj[g.edges[j].first].push_back(g.edges[j].second);
        adj[g.edges[j].second].push_back(g.edges[j].first);
    }
    std::vector<char> seen(g.vertex_count, 0);
    std::vector<std::uint32_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        const auto u = stack.back();
        stack.pop_back();
        if (u == to) return true;
        for (const auto w : adj[u]) {
            if (seen[w] == 0) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return false;
}

Multigraph contract(const Multigraph& g, std::size_t j) {
    const auto [keep, gone] = g.edges[j];
    Multigraph out;
    out.vertex_count = g.vertex_count - 1;
    auto relabel = [&, keep = keep, gone = gone](std::uint32_t v) {
        if (v == gone) v = keep;
        return v > gone ? v - 1 : v;
    };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i == j) continue;
        out.edges.emplace_back(relabel(g.edges[i].first), relabel(g.edges[i].second));
    }
    return out;
}

Multigraph remove_edge(const Multigraph& g, std::size_t j) {
    Multigraph out{g.vertex_count, g.edges};
    out.edges.erase(out.edges.begin() + static_cast<std::ptrdiff_t>(j));
    return out;
}

MultiPoly tutte_dc(const Multigraph& g) {
    if (g.edges.empty()) return MultiPoly(1);
    const std::size_t j = g.edges.size() - 1;
    const auto [u, v] = g.edges[j];
    if (u == v) return MultiPoly::variable(Var::y) * tutte_dc(remove_edge(g, j));
    if (!connected_without(g, j, u, v)) return MultiPoly::variable(Var::x) * tutte_dc(contract(g, j));
    return tutte_dc(remove_edge(g, j)) + tutte_dc(contract(g, j));
}

}  // namespace

MultiPoly tutte_deletion_contraction(const Multigraph& g, std::size_t edge_cap) {
    if (g.edges.size() > edge_cap) {
        throw CapExceeded("deletion-contraction: " + std::to_string(g.edges.size()) +
                          " edges exceeds the cap of " + std::to_string(edge_cap));
    }
    for (const auto& [a, b] : g.edges) {
        if (a >= g.vertex_count || b >= g.vertex_count) throw InvalidGraph("edge endpoint out of range");
    }
    return tutte_dc(g);
}

void PenroseTally::merge(const PenroseTally& other) {
    if (counts.size() < other.counts.size()) counts.resize(other.counts.size(), {0, 0});
    for (std::size_t c = 0; c < other.counts.size(); ++c) {
        counts[c][0] += other.counts[c][0];
        counts[c][1] += other.counts[c][1];
    }
}

MultiPoly PenroseTally::to_polynomial() const {
    MultiPoly p;
    for (std::size_t c = 0; c < counts.size(); ++c) {
        const std::int64_t coeff = counts[c][0] - counts[c][1];
        p.add_term(exps(0, 0, 0, 0, static_cast<std::int32_t>(c)), mpz_class(static_cast<long>(coeff)));
    }
    return p;
}

PenroseTally penrose_tally(const RibbonGraph& g, std::uint64_t first_state, std::uint64_t end_state) {
    PenroseTally tally;
    tally.counts.assign(g.half_edge_count() + g.vertex_count() + 1, {0, 0});
    SubsetTracer tracer(g);
    for (std::uint64_t mask = first_state; mask < end_state; ++mask) {
        const auto c = static_cast<std::size_t>(tracer.petrial_face_count(mask));
        ++tally.counts[c][static_cast<std::size_t>(std::popcount(mask) & 1)];
    }
    return tally;
}

namespace {

void check_penrose_input(const RibbonGraph& g, const EnumerationOptions& opts) {
    check_cap(g.edge_count(), opts.edge_cap, "Penrose state sum");
    if (!is_connected(g)) throw InvalidGraph("Penrose polynomial requires a connected graph");
}

}  // namespace

MultiPoly penrose(const RibbonGraph& g, const EnumerationOptions& opts) {
    check_penrose_input(g, opts);
    const std::uint64_t states = std::uint64_t{1} << g.edge_count();
    auto tally = partitioned_reduce<PenroseTally>(
        states, resolve_workers(opts.workers),
        [&](std::uint64_t b, std::uint64_t e) { return penrose_tally(g, b, e); },
        [](PenroseTally& a, const PenroseTally& b) { a.merge(b); });
    return tally.to_polynomial();
}

MultiPoly penrose_via_medial(const RibbonGraph& g, const EnumerationOptions& opts) {
    check_penrose_input(g, opts);
    if (g.edge_count() == 0) return MultiPoly::variable(Var::L);  // one empty state, one curve

    const RibbonGraph gm = medial_graph(g);
    const std::size_t nodes = gm.half_edge_count();
    // Partner of each medial half-edge along its medial edge.
    std::vector<HalfEdge> along(nodes);
    for (const auto& rec : gm.edges()) {
        along[rec.a] = rec.b;
        along[rec.b] = rec.a;
    }
    const std::uint64_t states = std::uint64_t{1} << g.edge_count();

    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        PenroseTally tally;
        tally.counts.assign(nodes + 1, {0, 0});
        std::vector<HalfEdge> through(nodes);
        std::vector<std::uint8_t> seen(nodes);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            for (std::size_t m = 0; m < gm.vertex_count(); ++m) {
                const auto rot = gm.rotation(m);
                if (((mask >> m) & 1U) != 0) {
                    // crossing: opposite positions
                    through[rot[0]] = rot[2];
                    through[rot[2]] = rot[0];
                    through[rot[1]] = rot[3];
                    through[rot[3]] = rot[1];
                } else {
                    // white smoothing: join across the white corners (1,2) and (3,0)
                    through[rot[0]] = rot[3];
                    through[rot[3]] = rot[0];
                    through[rot[1]] = rot[2];
                    through[rot[2]] = rot[1];
                }
            }
            std::fill(seen.begin(), seen.end(), 0);
            std::size_t curves = 0;
            for (HalfEdge s = 0; s < nodes; ++s) {
                if (seen[s] != 0) continue;
                ++curves;
                HalfEdge h = s;
                do {
                    seen[h] = 1;
                    const HalfEdge o = along[h];
                    seen[o] = 1;
                    h = through[o];
                } while (h != s);
            }
            ++tally.counts[curves][static_cast<std::size_t>(std::popcount(mask) & 1)];
        }
        return tally;
    };
    auto tally = partitioned_reduce<PenroseTally>(states, resolve_workers(opts.workers), work,
                                                  [](PenroseTally& a, const PenroseTally& b) { a.merge(b); });
    return tally.to_polynomial();
}

mpz_class penrose_eval(const MultiPoly& penrose_poly, long k) {
    return penrose_poly.substitute(Var::L, mpz_class(k)).coefficient(Exponents{});
}

mpz_class penrose_eval(const RibbonGraph& g, long k, const EnumerationOptions& opts) {
    return penrose_eval(penrose(g, opts), k);
}

}  // namespace heegraph
