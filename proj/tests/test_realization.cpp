#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "bipyr/realization.hpp"
#include "support.hpp"

using namespace bipyr;

namespace {

// All admissible sequences with entry sum at most max_sum, any length.
std::vector<std::vector<int>> admissible_up_to_sum(int max_sum) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{4};
    auto extend = [&](auto&& self, int sum) -> void {
        if (cur.back() == 4) out.push_back(cur);
        for (int gap : {-4, 0, 4}) {
            const int next = cur.back() + gap;
            if (next < 4 || sum + next > max_sum) continue;
            cur.push_back(next);
            self(self, sum + next);
            cur.pop_back();
        }
    };
    extend(extend, 4);
    return out;
}

std::vector<int> random_admissible(std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len(1, max_len);
    const int k = len(rng);
    std::vector<int> seq{4};
    std::uniform_int_distribution<int> gap(-1, 1);
    while (static_cast<int>(seq.size()) < k) {
        const int slack = k - static_cast<int>(seq.size());
        int next = seq.back() + 4 * gap(rng);
        if (next < 4) next = 4;
        // leave enough room to walk back down to 4
        while (next > 4 + 4 * (slack - 1)) next -= 4;
        seq.push_back(next);
    }
    seq.back() = 4;
    return seq;
}

}  // namespace

TEST_CASE("admissibility verdicts") {
    CHECK(is_admissible({{4}}).ok);
    CHECK(is_admissible({{4, 8, 12, 8, 4}}).ok);

    const Admissibility gap = is_admissible({{4, 6, 4}});
    CHECK_FALSE(gap.ok);
    CHECK(gap.reason == "gap at index 0 is 2");
    CHECK(gap.index == 0);

    const Admissibility head = is_admissible({{8, 4}});
    CHECK_FALSE(head.ok);
    CHECK(head.reason == "first entry != 4");

    CHECK_THROWS_AS(is_admissible({{}}), ValidationError);
}

TEST_CASE("add4 on the worked crossings") {
    const Crossing four = add4({0, {1, 2}});
    CHECK(four.levels == std::vector<int>{1, 4, 2, 3});
    CHECK(crossing_signature(four).sizes == std::vector<int>{4, 8, 4});

    const Crossing five = add4({0, {1, 2, 3}});
    CHECK(five.size() == 5);
    CHECK(crossing_signature(five).sizes == std::vector<int>{4, 8, 8, 4});

    const Crossing six = add4(add4({0, {1, 2}}));
    CHECK(six.size() == 6);
    CHECK(crossing_signature(six).sizes == std::vector<int>{4, 8, 12, 8, 4});
}

TEST_CASE("concatenate on the worked crossings") {
    const Crossing merged = concatenate({0, {1, 2}}, {0, {1, 2}});
    CHECK(merged.size() == 2);
    CHECK(crossing_signature(merged).sizes == std::vector<int>{4});

    const Crossing c484 = add4({0, {1, 2}});  // signature (4,8,4)
    const Crossing five = concatenate(c484, {0, {1, 2, 3}});
    CHECK(five.size() == 5);
    CHECK(crossing_signature(five).sizes == std::vector<int>{4, 8, 4, 4});

    const Crossing four = concatenate({0, {1, 2, 3}}, {0, {1, 2, 3}});
    CHECK(four.size() == 4);
    CHECK(crossing_signature(four).sizes == std::vector<int>{4, 4, 4});
}

TEST_CASE("realize on the worked sequences") {
    CHECK(realize({{4}}).levels == std::vector<int>{1, 2});

    const Crossing c484 = realize({{4, 8, 4}});
    CHECK(c484.size() == 4);
    CHECK(crossing_signature(c484).sizes == std::vector<int>{4, 8, 4});

    const Crossing c4484 = realize({{4, 4, 8, 4}});
    CHECK(c4484.size() == 5);
    CHECK(crossing_signature(c4484).sizes == std::vector<int>{4, 4, 8, 4});

    CHECK_THROWS_WITH_AS(realize({{4, 6, 4}}),
                         doctest::Contains("gap at index 0 is 2"),
                         ValidationError);
    CHECK_THROWS_WITH_AS(realize({{4, 8, 4}}, 8),
                         doctest::Contains("exceeds cap"), ValidationError);
}

TEST_CASE("exhaustive round-trip for sums up to 40") {
    int count = 0;
    for (const std::vector<int>& seq : admissible_up_to_sum(40)) {
        const Crossing witness = realize({seq});
        CHECK(crossing_signature(witness).sizes == seq);
        CHECK(witness.size() == static_cast<int>(seq.size()) + 1);
        ++count;
    }
    CHECK(count > 20);  // the family is nontrivial
}

TEST_CASE("add4 soundness on random crossings") {
    std::mt19937 rng(505);
    std::uniform_int_distribution<int> size(2, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        const Crossing c{0, testing::random_levels(size(rng), rng)};
        std::vector<int> expected{4};
        for (int m : crossing_signature(c).sizes) expected.push_back(m + 4);
        expected.push_back(4);
        CHECK(crossing_signature(add4(c)).sizes == expected);
    }
}

TEST_CASE("concatenate soundness on random admissible pairs") {
    std::mt19937 rng(606);
    for (int trial = 0; trial < 200; ++trial) {
        const std::vector<int> s1 = random_admissible(rng, 6);
        const std::vector<int> s2 = random_admissible(rng, 6);
        const Crossing c1 = realize({s1});
        const Crossing c2 = realize({s2});
        std::vector<int> expected = s1;
        expected.insert(expected.end(), s2.begin() + 1, s2.end());
        CHECK(crossing_signature(concatenate(c1, c2)).sizes == expected);
    }
}
