#include "heegraph/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>

#include "heegraph/errors.hpp"
#include "heegraph/graph_file.hpp"
#include "heegraph/invariants.hpp"
#include "heegraph/lens.hpp"
#include "heegraph/poincare.hpp"
#include "heegraph/verify.hpp"

namespace heegraph {

namespace {

struct Options {
    std::string file;
    std::optional<long> at;
    std::size_t edge_cap = EnumerationOptions{}.edge_cap;
    unsigned workers = 0;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::string output;
    std::int64_t p_min = 3;
    std::int64_t p_max = 0;
    bool primes_only = false;
    std::string csv;
    std::string level = "quick";
    std::string data;
};

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << text;
    if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Polynomial invariants of Heegaard graphs", "heegraph"};
    app.require_subcommand(1);

    auto enum_opts = [&](CLI::App* sub) {
        sub->add_option("--workers", o.workers, "worker threads (0 = all cores)");
        sub->add_option("--edge-cap", o.edge_cap, "largest edge count enumerated")->check(CLI::Range(1, 63));
    };
    auto lens_pq = [&](CLI::App* sub) {
        sub->add_option("--p", o.p, "p >= 3")->required();
        sub->add_option("--q", o.q, "q coprime to p")->required();
    };

    auto* poly = app.add_subcommand("poly", "polynomial invariants of a graph file");
    poly->require_subcommand(1);
    auto* br = poly->add_subcommand("br", "Bollobas-Riordan polynomial");
    auto* tu = poly->add_subcommand("tutte", "Tutte polynomial");
    auto* pe = poly->add_subcommand("penrose", "Penrose polynomial");
    for (auto* sub : {br, tu, pe}) {
        sub->add_option("file", o.file, "graph file")->required()->check(CLI::ExistingFile);
        enum_opts(sub);
    }
    pe->add_option("--at", o.at, "evaluate at L = k")->check(CLI::NonNegativeNumber);

    auto* lens = app.add_subcommand("lens", "lens spaces L(p,q)");
    lens->require_subcommand(1);
    auto* lgraph = lens->add_subcommand("graph", "torus Heegaard graph of L(p,q)");
    lens_pq(lgraph);
    lgraph->add_option("-o,--output", o.output, "write to this file instead of stdout");
    auto* ltau = lens->add_subcommand("tau", "spanning trees of C_p(1,q)");
    lens_pq(ltau);
    auto* lorbit = lens->add_subcommand("orbit", "the orbit {+-q^+-1} mod p");
    lens_pq(lorbit);
    auto* lscan = lens->add_subcommand("scan", "tau over every orbit, flagging collisions");
    lscan->add_option("--pmax", o.p_max, "largest p (<= 400)")->required();
    lscan->add_option("--pmin", o.p_min, "smallest p");
    lscan->add_flag("--primes-only", o.primes_only, "restrict to prime p");
    lscan->add_option("--csv", o.csv, "write rows as CSV to this path");
    lscan->add_option("--workers", o.workers, "worker threads (0 = all cores)");

    auto* verify = app.add_subcommand("verify", "built-in verifications");
    verify->require_subcommand(1);
    auto* vpoin = verify->add_subcommand("poincare", "Penrose polynomial of both Poincare sphere diagrams");
    vpoin->add_option("--data-dir", o.data, "directory holding poincare_a.rg and poincare_b.rg");
    vpoin->add_option("--workers", o.workers, "worker threads (0 = all cores)");
    auto* vsuite = verify->add_subcommand("suite", "property batteries of all modules");
    vsuite->add_option("--level", o.level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    vsuite->add_option("--workers", o.workers, "worker threads (0 = all cores)");

    std::vector<const char*> argv{"heegraph"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    EnumerationOptions eopts;
    eopts.edge_cap = o.edge_cap;
    eopts.workers = o.workers;

    try {
        if (poly->parsed()) {
            const RibbonGraph g = read_graph_file(o.file);
            if (br->parsed()) {
                out << bollobas_riordan(g, eopts).to_string() << '\n';
            } else if (tu->parsed()) {
                out << tutte(g, eopts).to_string() << '\n';
            } else {
                const auto p = penrose(g, eopts);
                out << (o.at ? penrose_eval(p, *o.at).get_str() : p.to_string()) << '\n';
            }
        } else if (lens->parsed()) {
            if (lscan->parsed()) {
                ScanOptions so;
                so.p_min = o.p_min;
                so.p_max = o.p_max;
                so.primes_only = o.primes_only;
                so.workers = o.workers;
                const auto scan = scan_tau_orbits(so);
                if (!o.csv.empty()) write_text_file(o.csv, scan_to_csv(scan));
                for (const auto& c : scan.collisions) {
                    out << "collision p=" << c[0] << " orbits " << c[1] << " and " << c[2] << '\n';
                }
                out << "p=" << so.p_min << ".." << so.p_max << (so.primes_only ? " (primes)" : "") << ": "
                    << scan.rows.size() << " orbits, " << scan.collisions.size() << " collisions, "
                    << scan.orbit_violations.size() << " orbit violations\n";
                if (!scan.orbit_violations.empty()) {
                    const auto& v = scan.orbit_violations.front();
                    err << "check failed: tau not constant on the orbit of L(" << v[0] << "," << v[1] << ")\n";
                    return kExitCheckFailed;
                }
            } else {
                const auto lp = LensParams::make(o.p, o.q);
                if (lgraph->parsed()) {
                    const auto text = write_graph_file(lens_heegaard_graph(lp));
                    if (o.output.empty()) {
                        out << text;
                    } else {
                        write_text_file(o.output, text);
                    }
                } else if (ltau->parsed()) {
                    out << tau(lp).get_str() << '\n';
                } else {
                    out << orbit_to_string(q_orbit(lp)) << '\n';
                }
            }
        } else if (vpoin->parsed()) {
            const auto res = verify_poincare(o.data.empty() ? data_dir() : std::filesystem::path(o.data), eopts);
            for (const auto& r : res) {
                out << r.file << ": v=" << r.vertices << " e=" << r.edges << " euler_genus=" << r.euler_genus
                    << " P = " << r.penrose.to_string() << '\n';
            }
            out << res[0].penrose.to_string() << '\n';
        } else {
            const auto level = o.level == "full" ? SuiteLevel::full : SuiteLevel::quick;
            std::size_t failed = 0;
            const auto results = run_suite(level, eopts, [&](const CheckResult& r) {
                out << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n' << std::flush;
            });
            for (const auto& r : results) failed += r.passed ? 0 : 1;
            out << results.size() - failed << "/" << results.size() << " checks passed\n";
            if (failed != 0) {
                err << "check failed: " << failed << " of " << results.size() << " suite checks\n";
                return kExitCheckFailed;
            }
        }
    } catch (const CheckFailure& e) {
        err << "check failed: " << e.what() << '\n';
        return kExitCheckFailed;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace heegraph
