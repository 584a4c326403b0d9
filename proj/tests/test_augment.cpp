#include <doctest.h>

#include "support/util.hpp"
#include "wceg/augment.hpp"
#include "wceg/generator.hpp"
#include "wceg/oracle.hpp"
#include "wceg/solver.hpp"

using namespace wceg;
using testsupport::as_sorted_set;

namespace {

std::vector<WeightVector> merged_vectors(const std::vector<PathEntry>& entries) {
    std::vector<WeightVector> out;
    for (const auto& e : entries) out.push_back(e.weight);
    return out;
}

}  // namespace

TEST_CASE("hop counting on a single edge yields (w, 1)") {
    GraphBuilder b(2);
    b.add_colour("c0");
    b.add_edge(0, 1, 0, 7000);
    ColouredGraph g = std::move(b).build();

    AugmentResult aug = augment_with_count_colour(g, AugmentMode::Hops);
    CHECK(aug.graph.colour_count() == 2);
    CHECK(aug.graph.colour_name(1) == "hops");
    CHECK(aug.graph.vertex_count() == 3);

    auto merged = solve_augmented(g, AugmentMode::Hops, 0).sets;
    REQUIRE(merged[1].size() == 1);
    CHECK(merged[1][0].weight == WeightVector{7000, 1000});  // one hop = one whole unit
    CHECK(merged[1][0].edges == std::vector<EdgeId>{0});
}

TEST_CASE("parallel edges of one colour: dominated hop-equal edge disappears") {
    GraphBuilder b(2);
    b.add_colour("c0");
    b.add_edge(0, 1, 0, 2000);
    b.add_edge(0, 1, 0, 3000);
    ColouredGraph g = std::move(b).build();
    auto merged = solve_augmented(g, AugmentMode::Hops, 0).sets;
    REQUIRE(merged[1].size() == 1);
    CHECK(merged[1][0].weight == WeightVector{2000, 1000});
}

TEST_CASE("hop counting exposes the short-long tradeoff") {
    // direct expensive edge vs cheap two-hop detour: both hop-Pareto
    GraphBuilder b(3);
    b.add_colour("c0");
    b.add_edge(0, 2, 0, 10000);
    b.add_edge(0, 1, 0, 2000);
    b.add_edge(1, 2, 0, 3000);
    ColouredGraph g = std::move(b).build();
    auto merged = solve_augmented(g, AugmentMode::Hops, 0).sets;
    auto got = as_sorted_set(merged_vectors(merged[2]));
    auto want = as_sorted_set({WeightVector{10000, 1000}, WeightVector{5000, 2000}});
    CHECK(got == want);
}

TEST_CASE("transfer counting on a two-colour path costs one transfer") {
    GraphBuilder b(3);
    b.add_colour("red");
    b.add_colour("blue");
    b.add_edge(0, 1, 0, 4000);
    b.add_edge(1, 2, 1, 6000);
    ColouredGraph g = std::move(b).build();

    auto merged = solve_augmented(g, AugmentMode::Transfers, 0).sets;
    REQUIRE(merged[2].size() == 1);
    CHECK(merged[2][0].weight == WeightVector{4000, 6000, 1000});
    CHECK(merged[2][0].edges == std::vector<EdgeId>{0, 1});
    // the mid vertex is reached with no transfer at all
    REQUIRE(merged[1].size() == 1);
    CHECK(merged[1][0].weight == WeightVector{4000, 0, 0});
}

TEST_CASE("same-colour continuation costs no transfer") {
    GraphBuilder b(4);
    b.add_colour("red");
    b.add_colour("blue");
    b.add_edge(0, 1, 0, 1000);
    b.add_edge(1, 2, 0, 1000);
    b.add_edge(2, 3, 1, 1000);
    ColouredGraph g = std::move(b).build();
    auto merged = solve_augmented(g, AugmentMode::Transfers, 0).sets;
    REQUIRE(merged[3].size() == 1);
    CHECK(merged[3][0].weight == WeightVector{2000, 1000, 1000});
}

TEST_CASE("transfer-augmented solve agrees with brute force on the expanded graph") {
    SplitMix64 rng(77);
    for (int iter = 0; iter < 8; ++iter) {
        int n = 3 + static_cast<int>(rng.next_below(3));
        int k = 2 + static_cast<int>(rng.next_below(2));
        int m = 4 + static_cast<int>(rng.next_below(8));
        ColouredGraph g = random_sparse(n, k, m, rng.next());
        AugmentMode mode = iter % 2 == 0 ? AugmentMode::Hops : AugmentMode::Transfers;

        AugmentResult aug = augment_with_count_colour(g, mode);
        SourceOracle oracle =
            all_paths_pareto(aug.graph, aug.source_map[0], false, /*ceiling=*/0);
        auto merged = solve_augmented(g, mode, 0).sets;

        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            std::vector<PathEntry> expected;
            for (VertexId member : aug.vertex_groups[static_cast<std::size_t>(v)])
                for (const auto& e : oracle.fronts[static_cast<std::size_t>(member)])
                    front_insert(expected, e, false);
            CHECK(as_sorted_set(merged_vectors(merged[v])) ==
                  as_sorted_set(merged_vectors(expected)));
        }
    }
}
