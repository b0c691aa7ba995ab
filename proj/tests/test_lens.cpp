#include <doctest.h>

#include <cmath>

#include "heegraph/errors.hpp"
#include "heegraph/lens.hpp"
#include "oracles.hpp"

using namespace heegraph;

namespace {

mpz_class Z(const char* s) { return mpz_class(s); }

double eigen_product(std::int64_t p, std::int64_t q) {
    long double logsum = 0;
    const long double pi = std::acos(-1.0L);
    for (std::int64_t j = 1; j < p; ++j) {
        logsum += std::log(4 - 2 * std::cos(2 * pi * j / p) - 2 * std::cos(2 * pi * q * j / p));
    }
    return static_cast<double>(std::exp(logsum) / p);
}

}  // namespace

TEST_SUITE("lens") {
    TEST_CASE("parameters") {
        CHECK(LensParams::make(7, 9).q() == 2);
        CHECK(LensParams::make(7, -1).q() == 6);
        CHECK_THROWS_AS(LensParams::make(4, 2), std::invalid_argument);
        CHECK_THROWS_AS(LensParams::make(2, 1), std::invalid_argument);
        CHECK_THROWS_AS(LensParams::make(6, 0), std::invalid_argument);
        CHECK(inverse_mod(2, 7) == 4);
    }

    TEST_CASE("torus Heegaard graphs") {
        for (auto [p, q] : oracle::lens_pairs(12)) {
            const auto g = lens_heegaard_graph(LensParams::make(p, q));
            const auto m = metrics(g);
            CHECK(m.v == p);
            CHECK(m.e == 2 * p);
            CHECK(m.f == p);
            CHECK(m.k == 1);
            CHECK(m.t == 0);
            CHECK(m.euler_genus == 2);
            CHECK(oracle::face_count(g) == p);
            for (std::int64_t v = 0; v < p; ++v) CHECK(g.degree(static_cast<std::size_t>(v)) == 4);
        }
        // C_3 with every edge doubled
        const auto mg = lens_multigraph(LensParams::make(3, 1));
        std::map<std::pair<std::uint32_t, std::uint32_t>, int> mult;
        for (auto [a, b] : mg.edges) ++mult[{std::min(a, b), std::max(a, b)}];
        CHECK(mult.size() == 3);
        for (const auto& [k, c] : mult) CHECK(c == 2);
    }

    TEST_CASE("tau examples") {
        CHECK(tau(LensParams::make(3, 1)) == 12);
        CHECK(tau(LensParams::make(5, 1)) == 80);
        CHECK(tau(LensParams::make(5, 2)) == 125);
        CHECK(tau(LensParams::make(4, 1)) == 32);
        TauOptions small;
        small.p_bound = 10;
        CHECK_THROWS_AS(tau(LensParams::make(11, 2), small), CapExceeded);
    }

    TEST_CASE("tau against rational elimination and eigenvalues") {
        for (auto [p, q] : oracle::lens_pairs(30)) {
            const auto lp = LensParams::make(p, q);
            const auto t = tau(lp);
            CHECK(t == oracle::spanning_trees(p, lens_multigraph(lp).edges));
            const double f = eigen_product(p, q);
            CHECK(std::abs(t.get_d() - f) <= 1e-9 * f);
            CHECK(std::abs(tau_eigenvalue_product(lp) - f) <= 1e-9 * f);
        }
    }

    TEST_CASE("tau(p,1) = p 2^(p-1)") {
        for (std::int64_t p = 3; p <= 60; ++p) {
            CHECK(tau(LensParams::make(p, 1)) == mpz_class(mpz_class(p) << static_cast<mp_bitcnt_t>(p - 1)));
        }
    }

    TEST_CASE("large p stays exact") {
        const auto lp = LensParams::make(211, 17);
        const auto t = tau(lp);
        CHECK(t == spanning_tree_count(lens_multigraph(lp)));
        CHECK(t == tau(LensParams::make(211, 211 - 17)));
        CHECK(t == tau(LensParams::make(211, inverse_mod(17, 211))));
    }

    TEST_CASE("orbits") {
        CHECK(q_orbit(LensParams::make(7, 2)) == QOrbit{2, 3, 4, 5});
        CHECK(q_orbit(LensParams::make(5, 2)) == QOrbit{2, 3});
        CHECK(q_orbit(LensParams::make(9, 1)) == QOrbit{1, 8});
        for (auto [p, q] : oracle::lens_pairs(40)) {
            const auto o = q_orbit(LensParams::make(p, q));
            CHECK(o == oracle::orbit_bruteforce(p, q));
            CHECK((o.size() == 1 || o.size() == 2 || o.size() == 4));
        }
        CHECK(orbit_to_string({2, 3, 4, 5}) == "{2|3|4|5}");
        CHECK(lens_homeomorphic(LensParams::make(5, 2), LensParams::make(5, 3)));
        CHECK_FALSE(lens_homeomorphic(LensParams::make(7, 1), LensParams::make(7, 2)));
        CHECK_FALSE(lens_homeomorphic(LensParams::make(5, 2), LensParams::make(7, 2)));
    }

    TEST_CASE("brute-force circulant isomorphism") {
        CHECK(circulant_isomorphic_bruteforce(LensParams::make(7, 2), LensParams::make(7, 4)));
        CHECK_FALSE(circulant_isomorphic_bruteforce(LensParams::make(7, 1), LensParams::make(7, 2)));
        CHECK(circulant_isomorphic_bruteforce(LensParams::make(5, 1), LensParams::make(5, 1)));
        CHECK_FALSE(circulant_isomorphic_bruteforce(LensParams::make(5, 1), LensParams::make(7, 1)));
        CHECK_THROWS_AS(circulant_isomorphic_bruteforce(LensParams::make(11, 2), LensParams::make(11, 3)),
                        CapExceeded);
    }

    TEST_CASE("square shape") {
        const auto a = square_shape_check(LensParams::make(5, 1));
        CHECK(a.tau == 80);
        REQUIRE(a.a.has_value());
        CHECK(*a.a == 4);
        const auto b = square_shape_check(LensParams::make(4, 1));
        REQUIRE(b.lambda_half.has_value());
        CHECK(*b.lambda_half == 8);
        CHECK(*b.b == 4);
        CHECK(*square_shape_check(LensParams::make(6, 1)).lambda_half == 8);
        CHECK(*square_shape_check(LensParams::make(9, 2)).a * *square_shape_check(LensParams::make(9, 2)).a * 9 ==
              tau(LensParams::make(9, 2)));
    }

    TEST_CASE("scan") {
        ScanOptions so;
        so.p_max = 7;
        const auto scan = scan_tau_orbits(so);
        std::vector<std::pair<std::int64_t, std::int64_t>> rows;
        for (const auto& r : scan.rows) rows.emplace_back(r.p, r.orbit_rep);
        CHECK(rows == std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 1}, {4, 1}, {5, 1}, {5, 2}, {6, 1},
                                                                          {7, 1}, {7, 2}});
        CHECK(scan.collisions.empty());
        CHECK(scan.orbit_violations.empty());
        const auto csv = scan_to_csv(scan);
        CHECK(csv.rfind("p,orbit_rep,orbit,tau\n3,1,{1|2},12\n", 0) == 0);
        CHECK(csv.find("7,2,{2|3|4|5},") != std::string::npos);

        ScanOptions bad;
        bad.p_max = 401;
        CHECK_THROWS_AS(scan_tau_orbits(bad), std::invalid_argument);

        ScanOptions primes;
        primes.p_max = 60;
        primes.primes_only = true;
        for (const auto& r : scan_tau_orbits(primes).rows) CHECK(is_prime(r.p));
        ScanOptions par = so;
        par.workers = 3;
        CHECK(scan_to_csv(scan_tau_orbits(par)) == csv);
    }

    TEST_CASE("even p uses lambda 8 for odd q") {
        for (auto [p, q] : oracle::lens_pairs(40)) {
            if (p % 2 != 0) continue;
            CHECK(q % 2 == 1);
            CHECK(*square_shape_check(LensParams::make(p, q)).lambda_half == 8);
        }
    }

    TEST_CASE("known values") {
        CHECK(tau(LensParams::make(7, 2)) == 1183);
        CHECK(tau(LensParams::make(8, 3)) == 4096);
        CHECK(tau(LensParams::make(11, 1)) == Z("11264"));
    }
}
