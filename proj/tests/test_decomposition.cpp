#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bipyr/decomposition.hpp"
#include "support.hpp"

using namespace bipyr;

TEST_CASE("signatures of the worked crossings") {
    CHECK(crossing_signature({0, {1, 2}}).sizes == std::vector<int>{4});
    CHECK(crossing_signature({0, {1, 2, 3}}).sizes == std::vector<int>{4, 4});
    CHECK(crossing_signature({0, {1, 3, 2, 4}}).sizes == std::vector<int>{4, 8, 4});
    CHECK(crossing_signature({0, {1, 3, 5, 2, 4}}).sizes ==
          std::vector<int>{4, 8, 8, 4});
}

TEST_CASE("tetrahedron counts") {
    CHECK(crossing_tetrahedron_count({0, {1, 2, 3}}) == 8);
    CHECK(crossing_tetrahedron_count({0, {1, 3, 5, 2, 4}}) == 24);
    CHECK(crossing_tetrahedron_count({0, {1, 2}}) == 4);
}

TEST_CASE("face sizes of the stock diagrams") {
    auto sizes = [](const MulticrossingDiagram& d) {
        std::vector<int> out;
        for (const FaceSizeRecord& r : face_sizes(d)) out.push_back(r.size);
        std::sort(out.begin(), out.end());
        return out;
    };
    CHECK(sizes(builtin_example("square-weave")) == std::vector<int>{4, 4, 4, 4});
    CHECK(sizes(builtin_example("trefoil")) == std::vector<int>{2, 2, 2, 3, 3});
}

TEST_CASE("a corner spanning levels 1 and 4 contributes 3") {
    // Petal-style diagram over the 4-crossing 1423, which has strands of
    // levels 1 and 4 cyclically adjacent.
    const MulticrossingDiagram d = make_diagram(
        "petal-1423", Surface::Auto, {{0, {1, 4, 2, 3}}},
        {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}, {{0, 4}, {0, 5}}, {{0, 6}, {0, 7}}});
    bool found = false;
    for (const FaceSizeRecord& rec : face_sizes(d))
        for (const CornerContribution& corner : rec.corners) {
            const Crossing& c = d.crossing_by_id(corner.crossing);
            const int a = c.level_at_slot(corner.arrival);
            const int b = c.level_at_slot(corner.departure);
            if (std::minmax(a, b) == std::pair<const int&, const int&>(1, 4)) {
                CHECK(corner.contribution == 3);
                found = true;
            }
        }
    CHECK(found);
}

TEST_CASE("dual decomposition totals agree on the worked diagrams") {
    auto totals = [](const MulticrossingDiagram& d) {
        const DualConsistencyReport rep = dual_consistency_check(d);
        CHECK(rep.consistent);
        CHECK(rep.face_total == rep.crossing_total);
        return rep.face_total;
    };
    CHECK(totals(builtin_example("fig8-ubercrossing")) == 24);
    CHECK(totals(builtin_example("trefoil")) == 12);
    CHECK(totals(testing::unknot_2crossing()) == 4);
}

TEST_CASE("conservation on random diagrams") {
    std::mt19937 rng(101);
    for (int trial = 0; trial < 120; ++trial) {
        const MulticrossingDiagram d = testing::random_diagram(rng);
        long gap_total = 0;
        for (const Crossing& c : d.crossings()) {
            const int n = c.size();
            for (int j = 0; j < n; ++j)
                gap_total += std::abs(c.levels[j] - c.levels[(j + 1) % n]);
        }
        long face_total = 0;
        for (const FaceSizeRecord& rec : face_sizes(d)) face_total += rec.size;
        CHECK(face_total == 2 * gap_total);
        CHECK(dual_consistency_check(d).consistent);
    }
}

TEST_CASE("signature is invariant under rotation and reflection") {
    std::mt19937 rng(202);
    std::uniform_int_distribution<int> size(2, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = size(rng);
        const std::vector<int> levels = testing::random_levels(n, rng);
        const Signature base = crossing_signature({0, levels});

        std::uniform_int_distribution<int> rot(1, n - 1);
        std::vector<int> rotated = levels;
        std::rotate(rotated.begin(), rotated.begin() + rot(rng), rotated.end());
        CHECK(crossing_signature({0, rotated}).sizes == base.sizes);

        std::vector<int> reflected(levels.rbegin(), levels.rend());
        CHECK(crossing_signature({0, reflected}).sizes == base.sizes);
    }
}

TEST_CASE("flipping a crossing upside down reverses its signature") {
    std::mt19937 rng(303);
    std::uniform_int_distribution<int> size(2, 9);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = size(rng);
        const std::vector<int> levels = testing::random_levels(n, rng);
        std::vector<int> flipped;
        for (int lv : levels) flipped.push_back(n + 1 - lv);

        std::vector<int> expected = crossing_signature({0, levels}).sizes;
        std::reverse(expected.begin(), expected.end());
        CHECK(crossing_signature({0, flipped}).sizes == expected);
    }
}

TEST_CASE("per-corner contributions sum to the face size") {
    std::mt19937 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        const MulticrossingDiagram d = testing::random_diagram(rng);
        for (const FaceSizeRecord& rec : face_sizes(d)) {
            int sum = 0;
            for (const CornerContribution& corner : rec.corners) {
                CHECK(corner.contribution >= 1);
                sum += corner.contribution;
            }
            CHECK(sum == rec.size);
        }
    }
}
