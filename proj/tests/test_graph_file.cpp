#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "heegraph/errors.hpp"
#include "heegraph/graph_file.hpp"
#include "heegraph/lens.hpp"
#include "heegraph/poincare.hpp"

using namespace heegraph;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_graph_file(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST_SUITE("graph_file") {
    TEST_CASE("loop graph round trip") {
        const std::string text = "ribbon 1 1\nrot 0: 0 1\nedge 0: 0 1 untwisted\n";
        const auto g = parse_graph_file(text);
        CHECK(g.vertex_count() == 1);
        CHECK(g.edge_count() == 1);
        CHECK(write_graph_file(g) == text);
    }

    TEST_CASE("comments, blank lines and spacing are canonicalized") {
        const std::string text =
            "# theta\n\nribbon   2 3\n  edge 2: 4 5 twisted\nrot 1: 1 5 3   \n# mid\nrot 0:0 2 4\nedge 0: 0 1 "
            "untwisted\r\nedge 1: 2 3 untwisted\n";
        const auto g = parse_graph_file(text);
        CHECK(write_graph_file(g) ==
              "ribbon 2 3\nrot 0: 0 2 4\nrot 1: 1 5 3\nedge 0: 0 1 untwisted\nedge 1: 2 3 untwisted\nedge 2: 4 5 "
              "twisted\n");
        CHECK(parse_graph_file(write_graph_file(g)) == g);
    }

    TEST_CASE("errors carry line numbers") {
        CHECK(error_line("ribbon 1 2\nrot 0: 0 1\nedge 0: 0 1 untwisted\n") == 1);
        CHECK(error_line("rot 0: 0 1\n") == 1);
        CHECK(error_line("ribbon 1 1\nribbon 1 1\n") == 2);
        CHECK(error_line("ribbon 1 1\nrot 0: 0 1\nedge 0: 0 1 sideways\n") == 3);
        CHECK(error_line("ribbon 1 1\nrot 0: 0 1\nrot 0: 0 1\n") == 3);
        CHECK(error_line("ribbon 1 1\nrot 0: 0 0\n") == 2);
        CHECK(error_line("ribbon 1 1\nrot 0: 0 9\n") == 2);
        CHECK(error_line("ribbon 1 1\nrot 3: 0 1\n") == 2);
        CHECK(error_line("ribbon 1 1\n# c\nrot 0: 0 1\nedge 0: 0 x untwisted\n") == 4);
        CHECK(error_line("ribbon 1 1\nrot 0: 0 1\nvertex 0\n") == 3);
        CHECK(error_line("ribbon 2 1\nrot 0: 0\nrot 1:\nedge 0: 0 1 untwisted\n") == 1);
        CHECK(error_line("") == 0);
        CHECK_THROWS_WITH_AS(parse_graph_file("ribbon 1 2\nrot 0: 0 1 2 3\nedge 0: 0 1 untwisted\n"),
                             doctest::Contains("header declares 2 edges"), ParseError);
    }

    TEST_CASE("lens generator output") {
        const auto text = write_graph_file(lens_heegaard_graph(LensParams::make(3, 1)));
        CHECK(text.rfind("ribbon 3 6\n", 0) == 0);
        CHECK(parse_graph_file(text) == lens_heegaard_graph(LensParams::make(3, 1)));
    }

    TEST_CASE("shipped Poincare diagrams") {
        for (const auto name : kPoincareFiles) {
            const auto path = data_dir() / name;
            const auto g = read_graph_file(path);
            const auto m = metrics(g);
            CHECK(g.vertex_count() == 12);
            CHECK(g.edge_count() == 24);
            CHECK(m.euler_genus == 4);
            CHECK(m.k == 1);
            CHECK(m.t == 0);
            for (std::size_t v = 0; v < 12; ++v) CHECK(g.degree(v) == 4);

            std::ifstream in(path);
            std::stringstream buf;
            buf << in.rdbuf();
            CHECK(write_graph_file(parse_graph_file(buf.str())) == write_graph_file(g));
        }
        CHECK_THROWS(read_graph_file(data_dir() / "missing.rg"));
    }
}
