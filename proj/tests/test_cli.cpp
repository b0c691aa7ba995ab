#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "heegraph/cli.hpp"
#include "heegraph/graph_file.hpp"
#include "heegraph/lens.hpp"

using namespace heegraph;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("heegraph_test_" + name);
    std::ofstream(path) << text;
    return path;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("poly subcommands") {
        const auto loop = temp_file("loop.rg", "ribbon 1 1\nrot 0: 0 1\nedge 0: 0 1 untwisted\n");
        CHECK(run({"poly", "tutte", loop.string()}).out == "y\n");
        CHECK(run({"poly", "br", loop.string()}).out == "y + 1\n");
        CHECK(run({"poly", "penrose", loop.string()}).out == "L^2 - L\n");
        CHECK(run({"poly", "penrose", loop.string(), "--at", "3"}).out == "6\n");
        CHECK(run({"poly", "penrose", loop.string(), "--workers", "2"}).code == 0);
    }

    TEST_CASE("lens subcommands") {
        CHECK(run({"lens", "tau", "--p", "5", "--q", "1"}).out == "80\n");
        CHECK(run({"lens", "orbit", "--p", "7", "--q", "2"}).out == "{2|3|4|5}\n");
        const auto g = run({"lens", "graph", "--p", "3", "--q", "1"});
        CHECK(g.code == 0);
        CHECK(g.out.rfind("ribbon 3 6\n", 0) == 0);
        CHECK(parse_graph_file(g.out) == lens_heegaard_graph(LensParams::make(3, 1)));

        const auto path = std::filesystem::temp_directory_path() / "heegraph_test_lens.rg";
        CHECK(run({"lens", "graph", "--p", "5", "--q", "2", "-o", path.string()}).code == 0);
        CHECK(read_graph_file(path) == lens_heegaard_graph(LensParams::make(5, 2)));

        const auto csv = std::filesystem::temp_directory_path() / "heegraph_test_scan.csv";
        const auto s = run({"lens", "scan", "--pmax", "7", "--csv", csv.string()});
        CHECK(s.code == 0);
        CHECK(s.out == "p=3..7: 7 orbits, 0 collisions, 0 orbit violations\n");
        std::ifstream in(csv);
        std::string header;
        std::getline(in, header);
        CHECK(header == "p,orbit_rep,orbit,tau");
    }

    TEST_CASE("output is deterministic") {
        const auto a = run({"lens", "scan", "--pmax", "40", "--workers", "1"});
        const auto b = run({"lens", "scan", "--pmax", "40", "--workers", "4"});
        CHECK(a.out == b.out);
        const auto g = temp_file("l72.rg", run({"lens", "graph", "--p", "7", "--q", "2"}).out);
        CHECK(run({"poly", "br", g.string(), "--workers", "1"}).out ==
              run({"poly", "br", g.string(), "--workers", "3"}).out);
    }

    TEST_CASE("usage errors exit 2") {
        for (const auto& args : std::vector<std::vector<std::string>>{
                 {},
                 {"bogus"},
                 {"poly"},
                 {"poly", "tutte"},
                 {"poly", "tutte", "/nonexistent/file.rg"},
                 {"lens", "tau", "--p", "5"},
                 {"lens", "tau", "--p", "five", "--q", "1"},
                 {"lens", "tau", "--p", "4", "--q", "2"},
                 {"lens", "scan", "--pmax", "500"},
                 {"verify", "suite", "--level", "medium"},
             }) {
            const auto r = run(args);
            CHECK(r.code == 2);
            CHECK(r.out.empty());
            CHECK_FALSE(r.err.empty());
        }
        const auto bad = temp_file("bad.rg", "ribbon 1 2\nrot 0: 0 1\nedge 0: 0 1 untwisted\n");
        const auto r = run({"poly", "br", bad.string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("line 1") != std::string::npos);
    }

    TEST_CASE("failed checks exit 1") {
        const auto dir = std::filesystem::temp_directory_path() / "heegraph_test_data";
        std::filesystem::create_directories(dir);
        const std::string small = write_graph_file(lens_heegaard_graph(LensParams::make(5, 2)));
        std::ofstream(dir / "poincare_a.rg") << small;
        std::ofstream(dir / "poincare_b.rg") << small;
        const auto r = run({"verify", "poincare", "--data-dir", dir.string()});
        CHECK(r.code == 1);
        CHECK(r.err.find("12 vertices") != std::string::npos);
    }

    TEST_CASE("help exits 0") {
        const auto r = run({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("poly") != std::string::npos);
    }

    TEST_CASE("quick suite passes") {
        const auto r = run({"verify", "suite", "--level", "quick"});
        CHECK(r.code == 0);
        CHECK(r.out.find("FAIL") == std::string::npos);
        CHECK(r.out.find("checks passed") != std::string::npos);
    }
}
