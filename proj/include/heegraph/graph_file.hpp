#pragma once

// Text serialization of ribbon graphs.
//
//   # comment lines may appear anywhere
//   ribbon <vertex_count> <edge_count>
//   rot <i>: <half-edge ids in cyclic order>
//   edge <j>: <ha> <hb> <twisted|untwisted>
//
// The canonical form has no comments, single spaces, all rot lines in
// vertex order followed by all edge lines in edge order.

#include <filesystem>
#include <string>
#include <string_view>

#include "heegraph/ribbon_graph.hpp"

namespace heegraph {

/// Throws ParseError carrying the 1-based line of the first problem.
RibbonGraph parse_graph_file(std::string_view text);
std::string write_graph_file(const RibbonGraph& g);

RibbonGraph read_graph_file(const std::filesystem::path& path);

}  // namespace heegraph
