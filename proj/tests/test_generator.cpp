#include <doctest.h>

#include "wceg/generator.hpp"
#include "wceg/graph_io.hpp"

using namespace wceg;

TEST_CASE("complete multigraph has kn(n-1) edges and uniform out-degree") {
    ColouredGraph g = complete_multigraph(20, 2, 1);
    CHECK(g.edge_count() == 760);
    for (VertexId v = 0; v < 20; ++v) CHECK(g.out_edges(v).size() == 2 * 19);

    ColouredGraph tiny = complete_multigraph(2, 5, 1);
    CHECK(tiny.edge_count() == 10);
    CHECK(tiny.out_edges(0).size() == 5);
    CHECK(tiny.out_edges(1).size() == 5);
}

TEST_CASE("identical seeds reproduce identical graphs, different seeds differ") {
    ColouredGraph a = complete_multigraph(9, 3, 42);
    ColouredGraph b = complete_multigraph(9, 3, 42);
    CHECK(to_text(a) == to_text(b));
    ColouredGraph c = complete_multigraph(9, 3, 43);
    CHECK(to_text(a) != to_text(c));

    CHECK(to_text(random_sparse(7, 2, 12, 5)) == to_text(random_sparse(7, 2, 12, 5)));
}

TEST_CASE("generated weights are quantized inside the requested range") {
    WeightRange range{1.0, 100.0};
    ColouredGraph g = complete_multigraph(12, 3, 9, range);
    for (const Edge& e : g.edges()) {
        CHECK(e.weight >= 1000);    // 1.0 at scale 3
        CHECK(e.weight <= 100000);  // 100.0 at scale 3
    }

    // a range below one quantum still produces positive weights
    ColouredGraph tiny = complete_multigraph(4, 1, 3, WeightRange{0.00001, 0.0002});
    for (const Edge& e : tiny.edges()) CHECK(e.weight >= 1);
}

TEST_CASE("sparse generator honours m, rejects self-loops, validates input") {
    ColouredGraph g = random_sparse(5, 2, 12, 1);
    CHECK(g.edge_count() == 12);
    for (const Edge& e : g.edges()) CHECK(e.from != e.to);

    ColouredGraph empty = random_sparse(4, 2, 0, 1);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS(random_sparse(1, 2, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_sparse(5, 0, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_sparse(5, 2, -1, 1), std::invalid_argument);
    CHECK_THROWS_AS(complete_multigraph(1, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(complete_multigraph(3, 2, 1, WeightRange{0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(complete_multigraph(3, 2, 1, WeightRange{5.0, 2.0}), std::invalid_argument);
}
