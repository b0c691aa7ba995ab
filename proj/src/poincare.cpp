#include "heegraph/poincare.hpp"

#include <cstdlib>

#include "heegraph/errors.hpp"
#include "heegraph/graph_file.hpp"

namespace heegraph {

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("HEEGRAPH_DATA_DIR"); env != nullptr && *env != '\0') return env;
    return HEEGRAPH_DATA_DIR;
}

std::array<PoincareResult, 2> verify_poincare(const std::filesystem::path& dir, const EnumerationOptions& opts) {
    const MultiPoly reference = MultiPoly::parse(kPoincarePenrose);
    std::array<PoincareResult, 2> out;
    for (std::size_t i = 0; i < out.size(); ++i) {
        auto& r = out[i];
        r.file = std::string(kPoincareFiles[i]);
        const RibbonGraph g = read_graph_file(dir / r.file);
        const auto m = metrics(g);
        r.vertices = g.vertex_count();
        r.edges = g.edge_count();
        r.euler_genus = m.euler_genus;
        if (r.vertices != 12) {
            throw CheckFailure(r.file + ": expected 12 vertices, found " + std::to_string(r.vertices));
        }
        r.penrose = penrose(g, opts);
    }
    if (!(out[0].penrose == out[1].penrose)) {
        throw CheckFailure("Penrose polynomials of " + out[0].file + " and " + out[1].file + " differ");
    }
    for (const auto& r : out) {
        if (!(r.penrose == reference)) {
            throw CheckFailure(r.file + ": Penrose polynomial " + r.penrose.to_string() + " differs from reference");
        }
    }
    // Redundant given equality with the reference, but cheap and explicit.
    const auto coeffs = out[0].penrose.univariate_coefficients(Var::L);
    if (coeffs.size() != 13 || coeffs[12] != 1) throw CheckFailure("leading term is not L^12");
    if (coeffs[0] != 0) throw CheckFailure("nonzero constant term");
    if (coeffs[1] != -170496) throw CheckFailure("coefficient of L is not -170496");
    return out;
}

}  // namespace heegraph
