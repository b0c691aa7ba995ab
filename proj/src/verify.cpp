#include "heegraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "heegraph/errors.hpp"
#include "heegraph/lens.hpp"
#include "heegraph/poincare.hpp"

namespace heegraph {

namespace {

std::string describe(const SubgraphMetrics& m) {
    std::ostringstream s;
    s << "(e=" << m.e << " v=" << m.v << " k=" << m.k << " r=" << m.r << " n=" << m.n << " f=" << m.f
      << " t=" << m.t << " eg=" << m.euler_genus << ")";
    return s.str();
}

void require(bool ok, const std::string& what) {
    if (!ok) throw CheckFailure(what);
}

std::string lens_name(std::int64_t p, std::int64_t q) {
    return "L(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

std::vector<LensParams> lens_family(std::int64_t p_max) {
    std::vector<LensParams> out;
    for (std::int64_t p = 3; p <= p_max; ++p) {
        for (std::int64_t q = 1; q < p; ++q) {
            if (std::gcd(p, q) == 1) out.push_back(LensParams::make(p, q));
        }
    }
    return out;
}

mpz_class tutte_at_one_one(const MultiPoly& t) {
    std::array<mpz_class, kVarCount> at{};
    at[static_cast<std::size_t>(Var::x)] = 1;
    at[static_cast<std::size_t>(Var::y)] = 1;
    return t.evaluate(at);
}

}  // namespace

RibbonGraph random_ribbon_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                                bool allow_twists) {
    std::uniform_int_distribution<std::size_t> vdist(1, std::max<std::size_t>(1, max_vertices));
    std::uniform_int_distribution<std::size_t> edist(0, max_edges);
    const std::size_t v = vdist(rng);
    const std::size_t e = edist(rng);

    std::vector<HalfEdge> order(2 * e);
    std::iota(order.begin(), order.end(), 0U);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::vector<HalfEdge>> rotations(v);
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    for (const HalfEdge h : order) rotations[pick(rng)].push_back(h);

    std::bernoulli_distribution twist(allow_twists ? 0.3 : 0.0);
    std::vector<EdgeRecord> edges(e);
    for (std::size_t j = 0; j < e; ++j) {
        edges[j] = EdgeRecord{static_cast<HalfEdge>(2 * j), static_cast<HalfEdge>(2 * j + 1), twist(rng)};
    }
    return RibbonGraph::build(v, std::move(rotations), std::move(edges));
}

RibbonGraph random_connected_ribbon_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                                          bool allow_twists) {
    for (;;) {
        auto g = random_ribbon_graph(rng, max_vertices, max_edges, allow_twists);
        if (g.edge_count() > 0 && is_connected(g)) return g;
    }
}

EdgeSubset random_subset(std::mt19937_64& rng, const RibbonGraph& g) {
    std::bernoulli_distribution coin(0.5);
    EdgeSubset s(g.edge_count());
    for (std::size_t j = 0; j < s.size(); ++j) s[j] = coin(rng);
    return s;
}

void check_metric_identities(const RibbonGraph& g, const EdgeSubset& subset) {
    const auto m = subgraph_metrics(g, subset);
    const std::string d = describe(m);
    require(m.e >= 0 && m.v >= 0 && m.k >= 0 && m.r >= 0 && m.n >= 0 && m.f >= 0 && m.euler_genus >= 0,
            "negative metric " + d);
    require(m.v == static_cast<std::int64_t>(g.vertex_count()), "v differs from vertex count " + d);
    require(m.r + m.k == m.v, "r + k != v " + d);
    require(m.n == m.e - m.r, "n != e - r " + d);
    require(m.euler_genus == 2 * m.k - m.v + m.e - m.f, "Euler genus formula " + d);
    require(m.t == 1 || m.euler_genus % 2 == 0, "orientable with odd Euler genus " + d);

    const auto walks = boundary_walk_lengths(g, subset);
    const std::size_t total = std::accumulate(walks.begin(), walks.end(), std::size_t{0});
    require(total == 4 * static_cast<std::size_t>(m.e), "boundary walks do not cover every edge side " + d);
    std::int64_t isolated = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        const auto rot = g.rotation(v);
        isolated += std::none_of(rot.begin(), rot.end(), [&](HalfEdge h) { return subset[g.edge_of(h)]; }) ? 1 : 0;
    }
    require(static_cast<std::int64_t>(walks.size()) + isolated == m.f,
            "walk count plus isolated vertices != f " + d);
}

void check_monotone_components(const RibbonGraph& g) {
    EdgeSubset s = empty_subset(g);
    auto prev = subgraph_metrics(g, s);
    require(prev.k == prev.v && prev.f == prev.v && prev.euler_genus == 0 && prev.t == 0,
            "empty subset metrics " + describe(prev));
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        s[j] = true;
        const auto cur = subgraph_metrics(g, s);
        require(cur.k == prev.k || cur.k == prev.k - 1,
                "component count jumped from " + std::to_string(prev.k) + " to " + std::to_string(cur.k));
        prev = cur;
    }
}

void check_petrial_properties(const RibbonGraph& g, const EdgeSubset& subset) {
    const auto once = partial_petrial(g, subset);
    require(partial_petrial(once, subset) == g, "partial Petrial is not an involution");
    require(once.rotations() == g.rotations(), "partial Petrial changed a rotation");
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        require(once.is_twisted(j) == (g.is_twisted(j) != static_cast<bool>(subset[j])),
                "twist bit of edge " + std::to_string(j) + " wrong after partial Petrial");
    }
    const auto a = metrics(g);
    const auto b = metrics(once);
    require(a.v == b.v && a.e == b.e && a.k == b.k && a.r == b.r && a.n == b.n,
            "partial Petrial changed v, e, k, r or n: " + describe(a) + " vs " + describe(b));
}

void check_medial_properties(const RibbonGraph& g) {
    const auto gm = medial_graph(g);
    const auto mg = metrics(g);
    const auto mm = metrics(gm);
    require(gm.vertex_count() == g.edge_count(), "medial vertex count != e(G)");
    require(gm.edge_count() == 2 * g.edge_count(), "medial edge count != 2 e(G)");
    for (std::size_t v = 0; v < gm.vertex_count(); ++v) require(gm.degree(v) == 4, "medial vertex not 4-valent");
    require(mm.euler_genus == mg.euler_genus,
            "medial Euler genus " + std::to_string(mm.euler_genus) + " != " + std::to_string(mg.euler_genus));
    require(mm.t == mg.t, "medial orientability differs");
    require(mm.f == mg.v + mg.f, "f(G_m) = " + std::to_string(mm.f) + " but v(G) + f(G) = " +
                                     std::to_string(mg.v + mg.f));
}

void check_tutte_paths(const RibbonGraph& g, const EnumerationOptions& opts) {
    const auto via_br = tutte(g, opts);
    const auto via_dc = tutte_deletion_contraction(underlying_multigraph(g), opts.edge_cap);
    require(via_br == via_dc, "Tutte via Bollobas-Riordan " + via_br.to_string() + " != deletion-contraction " +
                                  via_dc.to_string());
}

void check_penrose_paths(const RibbonGraph& g, const EnumerationOptions& opts) {
    const auto fast = penrose(g, opts);
    const auto literal = penrose_via_medial(g, opts);
    require(fast == literal, "Penrose via partial Petrials " + fast.to_string() + " != medial states " +
                                 literal.to_string());
}

std::vector<CheckResult> run_suite(SuiteLevel level, const EnumerationOptions& opts,
                                   const std::function<void(const CheckResult&)>& on_result) {
    const bool full = level == SuiteLevel::full;
    const std::int64_t p_small = 8;
    std::vector<CheckResult> results;

    auto run = [&](const std::string& name, const std::function<std::string()>& body) {
        CheckResult r;
        r.name = name;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.passed = true;
        } catch (const std::exception& e) {
            r.detail = e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    };

    run("ribbon.lens_graphs", [&] {
        const auto family = lens_family(full ? 30 : p_small);
        std::mt19937_64 rng(7);
        for (const auto& lp : family) {
            const auto g = lens_heegaard_graph(lp);
            check_metric_identities(g, full_subset(g));
            check_metric_identities(g, random_subset(rng, g));
            check_petrial_properties(g, random_subset(rng, g));
            check_medial_properties(g);
            const auto mm = metrics(medial_graph(g));
            require(mm.euler_genus == 2 && mm.f == 2 * lp.p(), "medial of " + lens_name(lp.p(), lp.q()) +
                                                                  " is not a torus graph with 2p faces");
        }
        return std::to_string(family.size()) + " lens graphs";
    });

    run("ribbon.random_rotation_systems", [&] {
        std::mt19937_64 rng(20240611);
        std::size_t medials = 0;
        for (int i = 0; i < 200; ++i) {
            const auto g = random_ribbon_graph(rng, 6, 10);
            check_metric_identities(g, full_subset(g));
            check_metric_identities(g, random_subset(rng, g));
            check_monotone_components(g);
            check_petrial_properties(g, random_subset(rng, g));
            if (g.edge_count() > 0 && is_connected(g)) {
                check_medial_properties(g);
                ++medials;
            }
        }
        return "200 graphs, " + std::to_string(medials) + " medials";
    });

    run("polynomials.tutte_dual_path", [&] {
        std::size_t n = 0;
        for (const auto& lp : lens_family(6)) {
            check_tutte_paths(lens_heegaard_graph(lp), opts);
            ++n;
        }
        std::mt19937_64 rng(99);
        for (int i = 0; i < (full ? 200 : 60); ++i) {
            check_tutte_paths(random_ribbon_graph(rng, 6, full ? 12 : 9), opts);
            ++n;
        }
        return std::to_string(n) + " graphs, e <= 12";
    });

    run("polynomials.penrose_dual_path", [&] {
        std::size_t n = 0;
        for (const auto& lp : lens_family(5)) {
            check_penrose_paths(lens_heegaard_graph(lp), opts);
            ++n;
        }
        std::mt19937_64 rng(1234);
        for (int i = 0; i < (full ? 200 : 60); ++i) {
            check_penrose_paths(random_connected_ribbon_graph(rng, 6, full ? 10 : 8), opts);
            ++n;
        }
        return std::to_string(n) + " graphs, e <= 10";
    });

    run("polynomials.canonical_round_trip", [&] {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<int> exp(0, 4);
        std::uniform_int_distribution<long> coef(-1000000, 1000000);
        std::uniform_int_distribution<int> terms(0, 8);
        for (int i = 0; i < 300; ++i) {
            MultiPoly p;
            const int t = terms(rng);
            for (int k = 0; k < t; ++k) {
                Exponents e{};
                for (auto& x : e) x = exp(rng);
                mpz_class c = coef(rng);
                c *= coef(rng);
                p.add_term(e, c);
            }
            const auto text = p.to_string();
            require(MultiPoly::parse(text) == p, "parse(to_string(P)) != P for " + text);
            require(MultiPoly::parse(text).to_string() == text, "serialization not canonical for " + text);
        }
        return std::string("300 random polynomials");
    });

    run("penrose.evaluations", [&] {
        for (const auto& lp : lens_family(p_small)) {
            const auto g = lens_heegaard_graph(lp);
            const auto poly = penrose(g, opts);
            const auto name = lens_name(lp.p(), lp.q());
            require(penrose_eval(poly, 1) == 0, name + ": P(1) != 0");
            const mpz_class two_p = mpz_class(1) << static_cast<mp_bitcnt_t>(lp.p());
            const mpz_class at2 = penrose_eval(poly, 2);
            require(at2 == two_p, name + ": P(2) = " + at2.get_str() + ", expected 2^p");
            require(static_cast<std::int64_t>(mpz_sizeinbase(at2.get_mpz_t(), 2)) - 1 ==
                        static_cast<std::int64_t>(g.vertex_count()),
                    name + ": log2 P(2) != v(G)");
        }
        return std::string("lens graphs p <= 8");
    });

    run("penrose.q_equals_one", [&] {
        for (const auto& lp : lens_family(p_small)) {
            const auto c = penrose(lens_heegaard_graph(lp), opts).univariate_coefficients(Var::L);
            const auto degree = static_cast<std::int64_t>(c.size()) - 1;
            const bool monic_high = c.back() == 1 && degree > lp.p();
            const bool q_one = lp.q() == 1 || lp.q() == lp.p() - 1;
            require(monic_high == q_one, lens_name(lp.p(), lp.q()) + ": monic with degree > p is " +
                                             (monic_high ? "true" : "false"));
        }
        return std::string("3 <= p <= 8");
    });

    run("tutte.top_y_term", [&] {
        const std::int64_t bound = full ? 10 : p_small;
        for (const auto& lp : lens_family(bound)) {
            const auto t = tutte(lens_heegaard_graph(lp), opts);
            const auto dy = t.degree(Var::y);
            Exponents top{};
            top[static_cast<std::size_t>(Var::y)] = dy;
            require(dy == lp.p() + 1, lens_name(lp.p(), lp.q()) + ": top y power " + std::to_string(dy));
            require(t.coefficient(top) == 1, lens_name(lp.p(), lp.q()) + ": top y coefficient is not 1");
        }
        return "p <= " + std::to_string(bound);
    });

    run("lens.tau_consistency", [&] {
        for (const auto& lp : lens_family(p_small)) {
            const auto t = tau(lp);
            require(t == tutte_at_one_one(tutte(lens_heegaard_graph(lp), opts)),
                    lens_name(lp.p(), lp.q()) + ": tau != T(1,1)");
            require(t == spanning_tree_count(lens_multigraph(lp)), lens_name(lp.p(), lp.q()) + ": banded != dense");
        }
        for (std::int64_t p = 3; p <= 30; ++p) {
            const mpz_class expect = mpz_class(p) << static_cast<mp_bitcnt_t>(p - 1);
            require(tau(LensParams::make(p, 1)) == expect, lens_name(p, 1) + ": tau != p 2^(p-1)");
        }
        return std::string("T(1,1) for p <= 8, q = 1 for p <= 30");
    });

    run("lens.orbit_invariance", [&] {
        ScanOptions so;
        so.p_max = full ? 200 : p_small;
        so.workers = opts.workers;
        const auto scan = scan_tau_orbits(so);
        require(scan.orbit_violations.empty(), "tau not constant on the orbit of " +
                                                   (scan.orbit_violations.empty()
                                                        ? std::string()
                                                        : lens_name(scan.orbit_violations[0][0],
                                                                    scan.orbit_violations[0][1])));
        std::size_t prime_collisions = 0;
        for (const auto& c : scan.collisions) prime_collisions += is_prime(c[0]) ? 1 : 0;
        require(prime_collisions == 0, "cross-orbit tau collision at prime p");
        return std::to_string(scan.rows.size()) + " orbits, p <= " + std::to_string(so.p_max) + ", " +
               std::to_string(scan.collisions.size()) + " composite-p collisions";
    });

    run("lens.square_shape", [&] {
        const std::int64_t bound = full ? 100 : p_small;
        for (const auto& lp : lens_family(bound)) {
            const auto rep = square_shape_check(lp);
            if (lp.p() % 2 == 0) {
                require(rep.lambda_half.has_value() && *rep.lambda_half == (lp.q() % 2 == 0 ? 4 : 8),
                        lens_name(lp.p(), lp.q()) + ": lambda_{p/2} mismatch");
            }
        }
        return "p <= " + std::to_string(bound);
    });

    run("lens.classification_oracle", [&] {
        const auto family = lens_family(p_small);
        std::size_t pairs = 0;
        for (const auto& a : family) {
            for (const auto& b : family) {
                if (a.p() != b.p()) continue;
                require(circulant_isomorphic_bruteforce(a, b) == lens_homeomorphic(a, b),
                        lens_name(a.p(), a.q()) + " vs " + lens_name(b.p(), b.q()));
                ++pairs;
            }
        }
        return std::to_string(pairs) + " pairs";
    });

    run("lens.bollobas_riordan_orbits", [&] {
        const std::int64_t bound = full ? 7 : 6;
        for (std::int64_t p = 3; p <= bound; ++p) {
            std::vector<std::pair<LensParams, MultiPoly>> polys;
            for (const auto& lp : lens_family(p)) {
                if (lp.p() == p) polys.emplace_back(lp, bollobas_riordan(lens_heegaard_graph(lp), opts));
            }
            for (const auto& [a, pa] : polys) {
                for (const auto& [b, pb] : polys) {
                    require((pa == pb) == lens_homeomorphic(a, b),
                            "BR agreement differs from homeomorphism for " + lens_name(a.p(), a.q()) + ", " +
                                lens_name(b.p(), b.q()));
                }
            }
        }
        return "p <= " + std::to_string(bound);
    });

    if (full) {
        run("poincare.penrose", [&] {
            const auto res = verify_poincare(data_dir(), opts);
            return res[0].penrose.to_string();
        });
    }
    return results;
}

}  // namespace heegraph
