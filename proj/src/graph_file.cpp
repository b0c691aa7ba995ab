#include "heegraph/graph_file.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "heegraph/errors.hpp"

namespace heegraph {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::uint64_t to_uint(std::string_view tok, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const auto* end = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, std::string("expected ") + what + ", found '" + std::string(tok) + "'");
    }
    return value;
}

// Splits "<kw> <i>: rest..." into the index and the remaining tokens.
std::pair<std::uint64_t, std::vector<std::string_view>> indexed_line(std::string_view body, std::size_t line,
                                                                     const char* what) {
    const auto colon = body.find(':');
    if (colon == std::string_view::npos) throw ParseError(line, std::string("missing ':' after ") + what + " index");
    const auto head = split_ws(body.substr(0, colon));
    if (head.size() != 2) throw ParseError(line, std::string("malformed ") + what + " line");
    return {to_uint(head[1], line, "an index"), split_ws(body.substr(colon + 1))};
}

}  // namespace

RibbonGraph parse_graph_file(std::string_view text) {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
    std::size_t header_line = 0;
    std::vector<std::optional<std::vector<HalfEdge>>> rotations;
    std::vector<std::optional<EdgeRecord>> edges;
    std::vector<std::size_t> rot_line_of_half_edge;
    std::vector<std::size_t> edge_line_of_half_edge;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        const auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        const auto keyword = tokens.front();

        if (keyword == "ribbon") {
            if (header) throw ParseError(line_no, "duplicate 'ribbon' header");
            if (tokens.size() != 3) throw ParseError(line_no, "header must be 'ribbon <vertex_count> <edge_count>'");
            header = {to_uint(tokens[1], line_no, "a vertex count"), to_uint(tokens[2], line_no, "an edge count")};
            header_line = line_no;
            rotations.assign(header->first, std::nullopt);
            edges.assign(header->second, std::nullopt);
            rot_line_of_half_edge.assign(2 * header->second, 0);
            edge_line_of_half_edge.assign(2 * header->second, 0);
            continue;
        }
        if (!header) throw ParseError(line_no, "expected 'ribbon' header before '" + std::string(keyword) + "'");
        const std::uint64_t half_edges = 2 * header->second;

        auto check_half_edge = [&](std::uint64_t h, std::vector<std::size_t>& seen_at, const char* where) {
            if (h >= half_edges) {
                throw ParseError(line_no, "half-edge " + std::to_string(h) + " out of range (" +
                                              std::to_string(half_edges) + " half-edges)");
            }
            if (seen_at[h] != 0) {
                throw ParseError(line_no, "half-edge " + std::to_string(h) + " already used in " + where +
                                              " on line " + std::to_string(seen_at[h]));
            }
            seen_at[h] = line_no;
        };

        if (keyword == "rot") {
            auto [v, rest] = indexed_line(line, line_no, "rot");
            if (v >= rotations.size()) {
                throw ParseError(line_no, "vertex " + std::to_string(v) + " exceeds header vertex count " +
                                              std::to_string(rotations.size()));
            }
            if (rotations[v]) throw ParseError(line_no, "vertex " + std::to_string(v) + " listed twice");
            std::vector<HalfEdge> rot;
            for (const auto tok : rest) {
                const auto h = to_uint(tok, line_no, "a half-edge id");
                check_half_edge(h, rot_line_of_half_edge, "a rotation");
                rot.push_back(static_cast<HalfEdge>(h));
            }
            rotations[v] = std::move(rot);
        } else if (keyword == "edge") {
            auto [j, rest] = indexed_line(line, line_no, "edge");
            if (j >= edges.size()) {
                throw ParseError(line_no, "edge " + std::to_string(j) + " exceeds header edge count " +
                                              std::to_string(edges.size()));
            }
            if (edges[j]) throw ParseError(line_no, "edge " + std::to_string(j) + " listed twice");
            if (rest.size() != 3) throw ParseError(line_no, "edge line needs '<ha> <hb> <twisted|untwisted>'");
            const auto ha = to_uint(rest[0], line_no, "a half-edge id");
            const auto hb = to_uint(rest[1], line_no, "a half-edge id");
            check_half_edge(ha, edge_line_of_half_edge, "an edge");
            check_half_edge(hb, edge_line_of_half_edge, "an edge");
            bool twisted = false;
            if (rest[2] == "twisted") {
                twisted = true;
            } else if (rest[2] != "untwisted") {
                throw ParseError(line_no, "expected 'twisted' or 'untwisted', found '" + std::string(rest[2]) + "'");
            }
            edges[j] = EdgeRecord{static_cast<HalfEdge>(ha), static_cast<HalfEdge>(hb), twisted};
        } else {
            throw ParseError(line_no, "unknown keyword '" + std::string(keyword) + "'");
        }
    }
    if (!header) throw ParseError(0, "missing 'ribbon' header");

    std::size_t rot_count = 0;
    for (const auto& r : rotations) rot_count += r ? 1 : 0;
    std::size_t edge_count = 0;
    for (const auto& e : edges) edge_count += e ? 1 : 0;
    if (rot_count != rotations.size()) {
        throw ParseError(header_line, "header declares " + std::to_string(rotations.size()) + " vertices, file lists " +
                                          std::to_string(rot_count));
    }
    if (edge_count != edges.size()) {
        throw ParseError(header_line, "header declares " + std::to_string(edges.size()) + " edges, file lists " +
                                          std::to_string(edge_count));
    }
    for (std::size_t h = 0; h < rot_line_of_half_edge.size(); ++h) {
        if (rot_line_of_half_edge[h] == 0) {
            throw ParseError(header_line, "half-edge " + std::to_string(h) + " appears in no rotation");
        }
    }

    std::vector<std::vector<HalfEdge>> rots;
    rots.reserve(rotations.size());
    for (auto& r : rotations) rots.push_back(std::move(*r));
    std::vector<EdgeRecord> recs;
    recs.reserve(edges.size());
    for (auto& e : edges) recs.push_back(*e);
    try {
        const std::size_t vertex_count = rots.size();
        return RibbonGraph::build(vertex_count, std::move(rots), std::move(recs));
    } catch (const InvalidGraph& err) {
        throw ParseError(header_line, err.what());
    }
}

std::string write_graph_file(const RibbonGraph& g) {
    std::ostringstream out;
    out << "ribbon " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        out << "rot " << v << ':';
        for (const auto h : g.rotation(v)) out << ' ' << h;
        out << '\n';
    }
    for (std::size_t j = 0; j < g.edge_count(); ++j) {
        const auto& e = g.edge(j);
        out << "edge " << j << ": " << e.a << ' ' << e.b << ' ' << (e.twisted ? "twisted" : "untwisted") << '\n';
    }
    return out.str();
}

RibbonGraph read_graph_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read graph file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_file(buf.str());
}

}  // namespace heegraph
