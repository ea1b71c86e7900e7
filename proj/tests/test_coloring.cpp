#include <doctest.h>

#include "linarb/coloring.hpp"

using namespace linarb;

TEST_CASE("coloring tracks counts, colors and free colors") {
    LinearColoring col(6, 3);
    col.assign(0, 1, 2);
    col.assign(1, 2, 2);
    col.assign(1, 3, 1);
    CHECK(col.count(1, 2) == 2);
    CHECK(col.count(1, 1) == 1);
    CHECK(col.count(1, 3) == 0);
    CHECK(col.color_of(2, 1) == 2);
    CHECK(col.is_colored(0, 1));
    CHECK(!col.is_colored(0, 2));
    CHECK(col.colored_edge_count() == 3);
    CHECK(col.colors_used() == 2);

    // vertex 1 has two 2-edges: 2 is no longer free there
    CHECK(col.free_colors(1) == std::vector<Color>{1, 3});
    CHECK(col.free_colors(0) == std::vector<Color>{1, 2, 3});
    CHECK(col.smallest_free(1) == 1);

    CHECK(col.unassign(0, 1) == 2);
    CHECK(col.count(1, 2) == 1);
    CHECK_THROWS_AS(col.color_of(0, 1), NotColored);
    CHECK_THROWS_AS(col.unassign(0, 1), NotColored);
}

TEST_CASE("coloring rejects a third same-color edge at a vertex") {
    LinearColoring col(5, 2);
    col.assign(0, 2, 1);
    col.assign(1, 2, 1);
    CHECK_THROWS_AS(col.assign(2, 3, 1), WouldExceedDegree);
    CHECK(!col.is_colored(2, 3));
    col.assign(2, 3, 2);  // another color is fine
}

TEST_CASE("coloring rejects monochromatic cycles") {
    LinearColoring col(4, 2);
    col.assign(0, 1, 1);
    col.assign(1, 2, 1);
    col.assign(2, 3, 1);
    CHECK(col.same_path(1, 0, 3));
    CHECK(!col.same_path(2, 0, 3));
    CHECK_THROWS_AS(col.assign(3, 0, 1), WouldCloseCycle);
    col.assign(3, 0, 2);
    CHECK(col.colors_used() == 2);
}

TEST_CASE("recolor is atomic") {
    LinearColoring col(4, 2);
    col.assign(0, 1, 1);
    col.assign(1, 2, 2);
    col.assign(2, 0, 2);
    // moving 0-1 to color 2 would close a 2-cycle; state must survive
    CHECK_THROWS_AS(col.recolor(0, 1, 2), WouldCloseCycle);
    CHECK(col.color_of(0, 1) == 1);
    col.recolor(1, 2, 1);
    CHECK(col.color_of(1, 2) == 1);
    CHECK(col.same_path(1, 0, 2));
}

TEST_CASE("coloring validates its arguments") {
    LinearColoring col(3, 2);
    CHECK_THROWS_AS(col.assign(0, 1, 0), InvalidParams);
    CHECK_THROWS_AS(col.assign(0, 1, 3), InvalidParams);
    CHECK_THROWS_AS(col.assign(0, 3, 1), InvalidParams);
    CHECK_THROWS_AS(col.assign(1, 1, 1), SelfLoop);
    col.assign(0, 1, 1);
    CHECK_THROWS_AS(col.assign(1, 0, 2), DuplicateEdge);
    CHECK_THROWS_AS(LinearColoring(3, 0), InvalidParams);
}
