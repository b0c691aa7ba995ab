#pragma once

// Property batteries over generated graphs, shared by `verify suite` and
// the unit tests.  Each check_* function throws CheckFailure describing the
// first violated property.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "heegraph/invariants.hpp"
#include "heegraph/ribbon_graph.hpp"

namespace heegraph {

/// Random signed rotation system: 1..max_vertices vertices, 0..max_edges
/// edges, half-edges dropped into random rotation slots.  May be
/// disconnected and may contain loops, parallel and twisted edges.
RibbonGraph random_ribbon_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                                bool allow_twists = true);

/// As above but retried until connected and with at least one edge.
RibbonGraph random_connected_ribbon_graph(std::mt19937_64& rng, std::size_t max_vertices, std::size_t max_edges,
                                          bool allow_twists = true);

EdgeSubset random_subset(std::mt19937_64& rng, const RibbonGraph& g);

/// r + k = v, n = e - r, all non-negative, even Euler genus when
/// orientable, boundary walks cover every side of every selected edge.
void check_metric_identities(const RibbonGraph& g, const EdgeSubset& subset);

/// Adding edges one by one lowers k by 0 or 1 each time.
void check_monotone_components(const RibbonGraph& g);

/// Involution, and v, e, k, r, n unchanged.
void check_petrial_properties(const RibbonGraph& g, const EdgeSubset& subset);

/// Vertex/edge counts, 4-regularity, Euler genus and f(G_m) = v(G) + f(G).
/// Requires g connected with at least one edge.
void check_medial_properties(const RibbonGraph& g);

/// tutte(g) against deletion-contraction on the underlying multigraph.
void check_tutte_paths(const RibbonGraph& g, const EnumerationOptions& opts = {});

/// penrose(g) against the literal medial-state computation.
void check_penrose_paths(const RibbonGraph& g, const EnumerationOptions& opts = {});

enum class SuiteLevel { quick, full };

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs every battery; `on_result` (if set) sees each result as it finishes.
std::vector<CheckResult> run_suite(SuiteLevel level, const EnumerationOptions& opts = {},
                                   const std::function<void(const CheckResult&)>& on_result = {});

}  // namespace heegraph
