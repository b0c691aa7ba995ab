#include "heegraph/lens.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "heegraph/errors.hpp"
#include "heegraph/parallel.hpp"

namespace heegraph {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::int64_t centered_abs(std::int64_t a, std::int64_t m) {
    const std::int64_t r = mod(a, m);
    return std::min(r, m - r);
}

}  // namespace

LensParams LensParams::make(std::int64_t p, std::int64_t q) {
    if (p < 3) throw std::invalid_argument("lens space needs p >= 3, got p = " + std::to_string(p));
    const std::int64_t qr = mod(q, p);
    if (std::gcd(p, qr) != 1) {
        throw std::invalid_argument("gcd(" + std::to_string(p) + ", " + std::to_string(q) +
                                    ") = " + std::to_string(std::gcd(p, qr)) + ", expected 1");
    }
    return LensParams(p, qr);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t m) {
    std::int64_t old_r = mod(a, m);
    std::int64_t r = m;
    std::int64_t old_s = 1;
    std::int64_t s = 0;
    while (r != 0) {
        const std::int64_t quot = old_r / r;
        old_r -= quot * r;
        std::swap(old_r, r);
        old_s -= quot * s;
        std::swap(old_s, s);
    }
    if (old_r != 1) throw std::invalid_argument(std::to_string(a) + " is not invertible mod " + std::to_string(m));
    return mod(old_s, m);
}

RibbonGraph lens_heegaard_graph(const LensParams& params) {
    const auto p = static_cast<std::uint32_t>(params.p());
    const auto q = static_cast<std::uint32_t>(params.q());
    // Edge j has half-edges 2j (tail) and 2j+1 (head).
    auto meridian = [&](std::uint32_t i) { return i % p; };
    auto torus_curve = [&](std::uint32_t i) { return p + i % p; };

    std::vector<std::vector<HalfEdge>> rotations(p);
    std::vector<EdgeRecord> edges(2 * static_cast<std::size_t>(p));
    for (std::uint32_t i = 0; i < p; ++i) {
        edges[meridian(i)] = {2 * meridian(i), 2 * meridian(i) + 1, false};
        edges[torus_curve(i)] = {2 * torus_curve(i), 2 * torus_curve(i) + 1, false};
    }
    for (std::uint32_t i = 0; i < p; ++i) {
        rotations[i] = {
            2 * meridian(i + p - 1) + 1,     // arriving e_{i-1}
            2 * torus_curve(i + p - q) + 1,  // arriving f from i-q
            2 * meridian(i),                 // departing e_i
            2 * torus_curve(i),              // departing f towards i+q
        };
    }
    RibbonGraph g = RibbonGraph::build(p, std::move(rotations), std::move(edges));

    const auto m = metrics(g);
    const bool four_regular =
        std::all_of(g.rotations().begin(), g.rotations().end(), [](const auto& r) { return r.size() == 4; });
    if (!four_regular || m.k != 1 || m.t != 0 || m.f != params.p() || m.euler_genus != 2) {
        throw CheckFailure("lens graph (" + std::to_string(params.p()) + "," + std::to_string(params.q()) +
                           ") is not a cellular torus embedding: f=" + std::to_string(m.f) +
                           " euler_genus=" + std::to_string(m.euler_genus));
    }
    return g;
}

Multigraph lens_multigraph(const LensParams& params) {
    const auto p = static_cast<std::uint32_t>(params.p());
    const auto q = static_cast<std::uint32_t>(params.q());
    Multigraph g{p, {}};
    for (std::uint32_t i = 0; i < p; ++i) g.edges.emplace_back(i, (i + 1) % p);
    for (std::uint32_t i = 0; i < p; ++i) g.edges.emplace_back(i, (i + q) % p);
    return g;
}

mpz_class spanning_tree_count(const Multigraph& g) {
    const std::size_t nv = g.vertex_count;
    if (nv == 0) return 0;
    if (nv == 1) return 1;
    const std::size_t n = nv - 1;
    std::vector<std::vector<mpz_class>> m(n, std::vector<mpz_class>(n, 0));
    for (const auto& [a, b] : g.edges) {
        if (a >= nv || b >= nv) throw InvalidGraph("edge endpoint out of range");
        if (a == b) continue;
        if (a < n) m[a][a] += 1;
        if (b < n) m[b][b] += 1;
        if (a < n && b < n) {
            m[a][b] -= 1;
            m[b][a] -= 1;
        }
    }
    // Bareiss elimination with row pivoting on zero pivots.
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && m[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(m[k], m[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

namespace {

// Multiplier u minimizing max(|u|, |q u|) over centered residues mod p.
// Relabelling vertex v -> u v turns C_p(1, q) into C_p(u, q u), whose
// offsets are then at most about sqrt(p).
std::int64_t narrow_multiplier(std::int64_t p, std::int64_t q) {
    std::int64_t best = 1;
    std::int64_t best_width = std::max(centered_abs(1, p), centered_abs(q, p));
    for (std::int64_t u = 2; u < p; ++u) {
        if (std::gcd(u, p) != 1) continue;
        const std::int64_t width = std::max(centered_abs(u, p), centered_abs(q * u, p));
        if (width < best_width) {
            best_width = width;
            best = u;
        }
    }
    return best;
}

// Determinant of a symmetric positive definite banded matrix given as a
// dense array, by fraction-free elimination restricted to the band.  Rows
// below the active window are still in their original form; they are
// scaled by the current leading minor when they enter the window, which is
// what full Bareiss would have done to them step by step.
mpz_class banded_bareiss_determinant(std::vector<std::vector<mpz_class>>& m, std::size_t width) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    width = std::max<std::size_t>(width, 1);
    std::vector<char> active(n, 0);
    active[0] = 1;
    mpz_class prev = 1;
    mpz_class tmp;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) throw CheckFailure("zero pivot in banded elimination of a positive definite matrix");
        const std::size_t last_row = std::min(n - 1, k + width);
        for (std::size_t i = k + 1; i <= last_row; ++i) {
            const std::size_t row_end = std::min(n - 1, i + width);
            if (active[i] == 0) {
                active[i] = 1;
                if (prev != 1) {
                    for (std::size_t j = (i > width ? i - width : 0); j <= row_end; ++j) m[i][j] *= prev;
                }
            }
            for (std::size_t j = k + 1; j <= row_end; ++j) {
                tmp = m[k][k] * m[i][j];
                if (m[i][k] != 0 && m[k][j] != 0) tmp -= m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return m[n - 1][n - 1];
}

}  // namespace

mpz_class tau(const LensParams& params, const TauOptions& opts) {
    const std::int64_t p = params.p();
    const std::int64_t q = params.q();
    if (p > opts.p_bound) {
        throw CapExceeded("tau: p = " + std::to_string(p) + " exceeds the bound " + std::to_string(opts.p_bound));
    }
    const std::int64_t u = narrow_multiplier(p, q);
    const std::int64_t step_a = mod(u, p);
    const std::int64_t step_b = mod(q * u, p);

    // Vertex 0 is deleted; the others are ordered 1, p-1, 2, p-2, ... so
    // that wrap-around neighbours stay close.
    auto position = [p](std::int64_t v) -> std::size_t {
        return static_cast<std::size_t>(v <= p / 2 ? 2 * v - 2 : 2 * (p - v) - 1);
    };
    const auto n = static_cast<std::size_t>(p - 1);
    std::vector<std::vector<mpz_class>> lap(n, std::vector<mpz_class>(n, 0));
    std::size_t width = 0;
    auto add_edge = [&](std::int64_t a, std::int64_t b) {
        if (a == b) return;
        if (a != 0) lap[position(a)][position(a)] += 1;
        if (b != 0) lap[position(b)][position(b)] += 1;
        if (a != 0 && b != 0) {
            const auto pa = position(a);
            const auto pb = position(b);
            lap[pa][pb] -= 1;
            lap[pb][pa] -= 1;
            width = std::max(width, pa > pb ? pa - pb : pb - pa);
        }
    };
    for (std::int64_t v = 0; v < p; ++v) {
        add_edge(v, mod(v + step_a, p));
        add_edge(v, mod(v + step_b, p));
    }
    mpz_class result = banded_bareiss_determinant(lap, width);

    if (p <= opts.float_check_bound) {
        const double approx = tau_eigenvalue_product(params);
        const double exact = result.get_d();
        if (std::abs(approx - exact) > 1e-6 * std::abs(exact)) {
            throw CheckFailure("tau(" + std::to_string(p) + "," + std::to_string(q) + "): matrix-tree value " +
                               result.get_str() + " disagrees with the eigenvalue product");
        }
    }
    return result;
}

double tau_eigenvalue_product(const LensParams& params) {
    const auto p = static_cast<double>(params.p());
    const auto q = static_cast<double>(params.q());
    // Accumulate in log space: the product overflows double for large p.
    long double log_sum = 0;
    for (std::int64_t j = 1; j < params.p(); ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / p;
        const long double eig = 4.0L - 2.0L * std::cos(theta) - 2.0L * std::cos(q * theta);
        log_sum += std::log(eig);
    }
    return static_cast<double>(std::exp(log_sum - std::log(static_cast<long double>(p))));
}

QOrbit q_orbit(const LensParams& params) {
    const std::int64_t p = params.p();
    const std::int64_t q = params.q();
    const std::int64_t qi = inverse_mod(q, p);
    QOrbit orbit{q, mod(-q, p), qi, mod(-qi, p)};
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
}

bool lens_homeomorphic(const LensParams& a, const LensParams& b) {
    if (a.p() != b.p()) return false;
    const auto orbit = q_orbit(a);
    return std::binary_search(orbit.begin(), orbit.end(), b.q());
}

namespace {

std::vector<std::vector<int>> multiplicity_matrix(const Multigraph& g) {
    std::vector<std::vector<int>> m(g.vertex_count, std::vector<int>(g.vertex_count, 0));
    for (const auto& [a, b] : g.edges) {
        ++m[a][b];
        if (a != b) ++m[b][a];
    }
    return m;
}

bool extend(const std::vector<std::vector<int>>& ma, const std::vector<std::vector<int>>& mb,
            std::vector<int>& image, std::vector<char>& used, std::size_t next) {
    const std::size_t n = ma.size();
    if (next == n) return true;
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand] != 0) continue;
        bool ok = ma[next][next] == mb[cand][cand];
        for (std::size_t prev = 0; ok && prev < next; ++prev) {
            ok = ma[next][prev] == mb[cand][static_cast<std::size_t>(image[prev])];
        }
        if (!ok) continue;
        image[next] = static_cast<int>(cand);
        used[cand] = 1;
        if (extend(ma, mb, image, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

bool circulant_isomorphic_bruteforce(const LensParams& a, const LensParams& b) {
    if (a.p() > 9 || b.p() > 9) {
        throw CapExceeded("brute-force isomorphism search is limited to p <= 9");
    }
    if (a.p() != b.p()) return false;
    const auto ma = multiplicity_matrix(lens_multigraph(a));
    const auto mb = multiplicity_matrix(lens_multigraph(b));
    std::vector<int> image(ma.size(), -1);
    std::vector<char> used(ma.size(), 0);
    return extend(ma, mb, image, used, 0);
}

SquareShapeReport square_shape_check(const LensParams& params, const TauOptions& opts) {
    SquareShapeReport report{params, tau(params, opts), std::nullopt, std::nullopt, std::nullopt};
    const std::int64_t p = params.p();
    const std::string where = "(" + std::to_string(p) + "," + std::to_string(params.q()) + ")";
    mpz_class root;
    if (p % 2 == 1) {
        if (!mpz_divisible_ui_p(report.tau.get_mpz_t(), static_cast<unsigned long>(p))) {
            throw CheckFailure("square shape " + where + ": tau = " + report.tau.get_str() + " is not divisible by p");
        }
        const mpz_class quotient = report.tau / p;
        if (mpz_perfect_square_p(quotient.get_mpz_t()) == 0) {
            throw CheckFailure("square shape " + where + ": tau/p = " + quotient.get_str() + " is not a square");
        }
        mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
        report.a = root;
    } else {
        // lambda at j = p/2: 4 - 2 cos(pi) - 2 cos(q pi).
        const std::int64_t cos_q_pi = params.q() % 2 == 0 ? 1 : -1;
        const std::int64_t lambda_half = 4 + 2 - 2 * cos_q_pi;
        const mpz_class scaled = report.tau * p;
        if (!mpz_divisible_ui_p(scaled.get_mpz_t(), static_cast<unsigned long>(lambda_half))) {
            throw CheckFailure("square shape " + where + ": tau*p not divisible by lambda_{p/2}");
        }
        const mpz_class quotient = scaled / lambda_half;
        if (mpz_perfect_square_p(quotient.get_mpz_t()) == 0) {
            throw CheckFailure("square shape " + where + ": tau*p/lambda = " + quotient.get_str() +
                               " is not a square");
        }
        mpz_sqrt(root.get_mpz_t(), quotient.get_mpz_t());
        report.lambda_half = lambda_half;
        report.b = root;
    }
    return report;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

namespace {

TauScan scan_one(std::int64_t p, const TauOptions& topts) {
    TauScan out;
    // C_p(+-1, +-q) and C_p(+-1, +-(p-q)) have identical edge sets, so tau
    // is computed once per pair {q, p-q}.
    std::map<std::int64_t, mpz_class> by_q;
    auto tau_of = [&](std::int64_t q) -> const mpz_class& {
        const std::int64_t key = std::min(q, p - q);
        auto it = by_q.find(key);
        if (it == by_q.end()) it = by_q.emplace(key, tau(LensParams::make(p, key), topts)).first;
        return it->second;
    };
    std::vector<char> covered(static_cast<std::size_t>(p), 0);
    for (std::int64_t q = 1; q < p; ++q) {
        if (std::gcd(p, q) != 1 || covered[static_cast<std::size_t>(q)] != 0) continue;
        const auto orbit = q_orbit(LensParams::make(p, q));
        for (const auto member : orbit) covered[static_cast<std::size_t>(member)] = 1;
        OrbitRow row{p, orbit.front(), orbit, tau_of(orbit.front())};
        for (const auto member : orbit) {
            if (tau_of(member) != row.tau) out.orbit_violations.push_back({p, member});
        }
        out.rows.push_back(std::move(row));
    }
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
        for (std::size_t j = i + 1; j < out.rows.size(); ++j) {
            if (out.rows[i].tau == out.rows[j].tau) {
                out.collisions.push_back({p, out.rows[i].orbit_rep, out.rows[j].orbit_rep});
            }
        }
    }
    return out;
}

}  // namespace

TauScan scan_tau_orbits(const ScanOptions& opts) {
    if (opts.p_min < 3 || opts.p_max < opts.p_min || opts.p_max > 400) {
        throw std::invalid_argument("scan bounds must satisfy 3 <= p_min <= p_max <= 400");
    }
    std::vector<std::int64_t> ps;
    for (std::int64_t p = opts.p_min; p <= opts.p_max; ++p) {
        if (!opts.primes_only || is_prime(p)) ps.push_back(p);
    }
    const TauOptions topts{};
    auto work = [&](std::uint64_t begin, std::uint64_t end) {
        std::vector<TauScan> parts;
        for (std::uint64_t i = begin; i < end; ++i) parts.push_back(scan_one(ps[i], topts));
        return parts;
    };
    auto merge = [](std::vector<TauScan>& a, std::vector<TauScan>& b) {
        for (auto& s : b) a.push_back(std::move(s));
    };
    auto parts = partitioned_reduce<std::vector<TauScan>>(ps.size(), resolve_workers(opts.workers), work, merge);

    TauScan scan;
    for (auto& part : parts) {
        for (auto& r : part.rows) scan.rows.push_back(std::move(r));
        scan.collisions.insert(scan.collisions.end(), part.collisions.begin(), part.collisions.end());
        scan.orbit_violations.insert(scan.orbit_violations.end(), part.orbit_violations.begin(),
                                     part.orbit_violations.end());
    }
    return scan;
}

std::string orbit_to_string(const QOrbit& orbit) {
    std::string s = "{";
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (i != 0) s += '|';
        s += std::to_string(orbit[i]);
    }
    s += '}';
    return s;
}

std::string scan_to_csv(const TauScan& scan) {
    std::string out = "p,orbit_rep,orbit,tau\n";
    for (const auto& row : scan.rows) {
        out += std::to_string(row.p) + ',' + std::to_string(row.orbit_rep) + ',' + orbit_to_string(row.orbit) + ',' +
               row.tau.get_str() + '\n';
    }
    return out;
}

}  // namespace heegraph
