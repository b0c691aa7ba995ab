#pragma once

// The two shipped 12-crossing Heegaard diagrams of the Poincare homology
// sphere and the published Penrose polynomial they must reproduce.

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "heegraph/invariants.hpp"
#include "heegraph/polynomial.hpp"

namespace heegraph {

inline constexpr std::string_view kPoincarePenrose =
    "L^12 - 24*L^11 + 553*L^10 - 6186*L^9 + 42664*L^8 - 193904*L^7 + 595168*L^6 - 1238528*L^5 + "
    "1718528*L^4 - 1518592*L^3 + 770816*L^2 - 170496*L";

inline constexpr std::array<std::string_view, 2> kPoincareFiles = {"poincare_a.rg", "poincare_b.rg"};

/// $HEEGRAPH_DATA_DIR if set, otherwise the source tree's data directory.
std::filesystem::path data_dir();

struct PoincareResult {
    std::string file;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::int64_t euler_genus = 0;
    MultiPoly penrose;
};

/// Computes the Penrose polynomial of both diagrams and checks: 12 vertices
/// each, mutual equality, equality with kPoincarePenrose, leading L^12 with
/// coefficient 1, last term -170496*L and no constant term.  Throws
/// CheckFailure on the first violated condition.
std::array<PoincareResult, 2> verify_poincare(const std::filesystem::path& dir, const EnumerationOptions& opts = {});

}  // namespace heegraph
