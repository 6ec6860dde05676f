#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "bipyr/diagram.hpp"

namespace bipyr::testing {

inline std::vector<int> random_levels(int n, std::mt19937& rng) {
    std::vector<int> levels(n);
    std::iota(levels.begin(), levels.end(), 1);
    std::shuffle(levels.begin(), levels.end(), rng);
    return levels;
}

// A random valid diagram: random crossing sizes and level permutations with
// a uniformly shuffled perfect matching on all slots. Any matching yields a
// valid diagram on some orientable surface, so the surface is left as auto.
inline MulticrossingDiagram random_diagram(std::mt19937& rng,
                                           int max_crossings = 8,
                                           int max_size = 6) {
    std::uniform_int_distribution<int> ncross(1, max_crossings);
    std::uniform_int_distribution<int> size(2, max_size);
    std::vector<Crossing> crossings;
    std::vector<SlotRef> slots;
    const int k = ncross(rng);
    for (int id = 0; id < k; ++id) {
        const int n = size(rng);
        crossings.push_back({id, random_levels(n, rng)});
        for (int s = 0; s < 2 * n; ++s) slots.push_back({id, s});
    }
    std::shuffle(slots.begin(), slots.end(), rng);
    std::vector<EdgeRef> edges;
    for (std::size_t i = 0; i + 1 < slots.size(); i += 2)
        edges.push_back({slots[i], slots[i + 1]});
    return make_diagram("random", Surface::Auto, std::move(crossings),
                        std::move(edges));
}

// One crossing, two edges: the 2-crossing unknot diagram.
inline MulticrossingDiagram unknot_2crossing() {
    return make_diagram("unknot", Surface::Sphere, {{0, {1, 2}}},
                        {{{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}});
}

}  // namespace bipyr::testing
