#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "support/cli_runner.hpp"
#include "support/lozano.hpp"
#include "wceg/graph_io.hpp"

using namespace wceg;
using namespace wceg::testsupport;

namespace {

std::string lozano_path() {
    static std::string path = [] {
        auto p = scratch_dir() / "lozano.wceg";
        write_file(p, to_text(lozano_network()));
        return p.string();
    }();
    return path;
}

// dest + weight columns of each pareto row, paths ignored
std::multiset<std::string> vector_set(const std::string& text, int k) {
    std::multiset<std::string> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.rfind("pareto ", 0) != 0) continue;
        std::istringstream ls(line);
        std::string token, key;
        ls >> token;  // "pareto"
        for (int i = 0; i <= k; ++i) {
            ls >> token;
            key += token + " ";
        }
        rows.insert(key);
    }
    return rows;
}

}  // namespace

TEST_CASE("solve emits the 52 reference rows as csv") {
    auto res = run_cli("solve " + lozano_path() + " --source 0 --target 20 --format csv");
    REQUIRE(res.exit_code == 0);
    std::istringstream is(res.out);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "dest,bus,metro,private,transfer,edges");
    int data_rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++data_rows;
    CHECK(data_rows == 52);
}

TEST_CASE("oracle on source==target prints the single empty path") {
    auto res = run_cli("oracle " + lozano_path() + " --source 0 --target 0");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out == "pareto 0 0 0 0 0\n");
}

TEST_CASE("solve and oracle print identical Pareto vector sets") {
    auto g = scratch_dir() / "small.wceg";
    auto gen = run_cli("generate sparse --n 6 --k 3 --m 14 --seed 5 --out " + g.string());
    REQUIRE(gen.exit_code == 0);
    for (int target = 1; target < 6; ++target) {
        auto s = run_cli("solve " + g.string() + " --source 0 --target " +
                         std::to_string(target));
        auto o = run_cli("oracle " + g.string() + " --source 0 --target " +
                         std::to_string(target));
        CHECK(vector_set(s.out, 3) == vector_set(o.out, 3));
        CHECK(s.exit_code == o.exit_code);
    }
}

TEST_CASE("every subcommand is byte-identical across two runs") {
    auto out1 = scratch_dir() / "det1.wceg";
    auto out2 = scratch_dir() / "det2.wceg";
    auto gen1 = run_cli("generate complete --n 8 --k 3 --seed 11 --out " + out1.string());
    auto gen2 = run_cli("generate complete --n 8 --k 3 --seed 11 --out " + out2.string());
    CHECK(gen1.exit_code == 0);
    CHECK(read_file(out1) == read_file(out2));

    auto s1 = run_cli("solve " + out1.string() + " --source 0 --format json");
    auto s2 = run_cli("solve " + out1.string() + " --source 0 --format json");
    CHECK(s1.out == s2.out);

    auto o1 = run_cli("oracle " + out1.string() + " --source 0 --target 3");
    auto o2 = run_cli("oracle " + out1.string() + " --source 0 --target 3");
    CHECK(o1.out == o2.out);

    auto c1 = scratch_dir() / "b1.csv";
    auto c2 = scratch_dir() / "b2.csv";
    auto p1 = scratch_dir() / "b1.plot";
    auto p2 = scratch_dir() / "b2.plot";
    auto b1 = run_cli("bench --k 2 --n-list 6,8,10 --reps 3 --seed 7 --threads 2 --csv " +
                      c1.string() + " --plot " + p1.string());
    auto b2 = run_cli("bench --k 2 --n-list 6,8,10 --reps 3 --seed 7 --threads 2 --csv " +
                      c2.string() + " --plot " + p2.string());
    CHECK(b1.exit_code == 0);
    CHECK(b1.out == b2.out);
    CHECK(read_file(c1) == read_file(c2));
    CHECK(read_file(p1) == read_file(p2));

    auto sens1 = run_cli("sensitivity " + lozano_path() +
                         " --source 0 --target 20 --sweep-colour metro --factors 1,1.25");
    auto sens2 = run_cli("sensitivity " + lozano_path() +
                         " --source 0 --target 20 --sweep-colour metro --factors 1,1.25");
    CHECK(sens1.out == sens2.out);
}

TEST_CASE("sensitivity reports the documented crossovers") {
    auto res = run_cli("sensitivity " + lozano_path() +
                       " --source 0 --target 20 --sweep-colour metro --factors 1,1.25");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("cost factor=1 weight=19,9,7,12 aggregate=47") != std::string::npos);
    CHECK(res.out.find("cost factor=1.25 weight=26,4,7,11") != std::string::npos);
    CHECK(res.out.find("breakpoint factor=6/5 weight=26,4,7,11") != std::string::npos);

    auto bus = run_cli("sensitivity " + lozano_path() +
                       " --source 0 --target 20 --sweep-colour bus");
    REQUIRE(bus.exit_code == 0);
    CHECK(bus.out.find("breakpoint factor=5/4 weight=3,31,7,10") != std::string::npos);
}

TEST_CASE("assemble fuses layer files into a loadable graph") {
    auto road = scratch_dir() / "road.layer";
    auto rail = scratch_dir() / "rail.layer";
    write_file(road,
               "layer v1 mode=road\n"
               "junction 0 0.000000 0.000000\n"
               "junction 1 1.000000 0.000000\n"
               "link 0 1 1.000000 0\n");
    write_file(rail,
               "layer v1 mode=rail\n"
               "junction 0 1.050000 0.000000\n"
               "junction 1 1.050000 2.000000\n"
               "link 0 1 2.000000 0\n");
    auto out = scratch_dir() / "fused.wceg";
    auto res = run_cli("assemble --layers " + road.string() + "," + rail.string() +
                       " --cluster-distance 0.15 --out " + out.string());
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("junctions=4 vertices=3 edges=4") != std::string::npos);
    ColouredGraph g = load_graph_file(out.string());
    CHECK(g.colour_count() == 2);
    CHECK(g.scale() == 6);

    auto solved = run_cli("solve " + out.string() + " --source 0");
    CHECK(solved.exit_code == 0);
}

TEST_CASE("json output is well-formed and mirrors the text rows") {
    auto res = run_cli("solve " + lozano_path() + " --source 0 --target 20 --format json");
    REQUIRE(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.out);
    REQUIRE(j["results"].size() == 1);
    CHECK(j["results"][0]["dest"] == 20);
    CHECK(j["results"][0]["pareto"].size() == 52);
    CHECK(j["stats"].contains("processed"));
    CHECK(!j["stats"].contains("ms"));  // timings are opt-in
}

TEST_CASE("exit codes distinguish failure modes") {
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("solve").exit_code == 2);
    CHECK(run_cli("solve no-such-file.wceg --source 0").exit_code == 2);

    // unreachable target -> no-path
    auto g = scratch_dir() / "disconnected.wceg";
    write_file(g,
               "wceg v1 n=3 k=1 scale=3\n"
               "colour 0 c0\n"
               "edge 0 1 0 5\n");
    CHECK(run_cli("solve " + g.string() + " --source 0 --target 2").exit_code == 1);
    CHECK(run_cli("oracle " + g.string() + " --source 0 --target 2").exit_code == 1);

    // enumeration bound refusal
    auto big = scratch_dir() / "big.wceg";
    run_cli("generate complete --n 14 --k 3 --seed 1 --out " + big.string());
    CHECK(run_cli("oracle " + big.string() + " --source 0 --target 1 --max-paths 1000")
              .exit_code == 3);

    // label ceiling refusal
    CHECK(run_cli("solve " + big.string() + " --source 0 --max-labels 16").exit_code == 3);

    // malformed graph file
    auto bad = scratch_dir() / "bad.wceg";
    write_file(bad, "not a graph\n");
    CHECK(run_cli("solve " + bad.string() + " --source 0").exit_code == 2);
}

TEST_CASE("augmented solve is reachable from the command line") {
    auto g = scratch_dir() / "twocolour.wceg";
    write_file(g,
               "wceg v1 n=3 k=2 scale=3\n"
               "colour 0 red\n"
               "colour 1 blue\n"
               "edge 0 1 0 4\n"
               "edge 1 2 1 6\n");
    auto res = run_cli("solve " + g.string() + " --source 0 --target 2 --augment transfers");
    REQUIRE(res.exit_code == 0);
    CHECK(res.out.find("pareto 2 4 6 1") != std::string::npos);

    auto hops = run_cli("solve " + g.string() + " --source 0 --target 2 --augment hops");
    REQUIRE(hops.exit_code == 0);
    CHECK(hops.out.find("pareto 2 4 6 2") != std::string::npos);
}
