#pragma once

#include <optional>
#include <vector>

#include "bipyr/diagram.hpp"

namespace bipyr {

// The ordered sizes of the crossing-centered bipyramids of one crossing,
// top-down: sizes[i] sits between levels i+1 and i+2 (0-based storage).
struct Signature {
    std::vector<int> sizes;
    std::optional<int> crossing;
    bool operator==(const Signature&) const = default;
};

// Size of the crossing-centered bipyramid between each adjacent pair of
// levels: sizes[i] = 2 * #{ cyclically adjacent strand pairs whose level
// interval contains [i+1, i+2] }.
Signature crossing_signature(const Crossing& c);

// Total tetrahedra contributed by one crossing. Computed both as the sum of
// the signature and as 2 * sum of cyclic level gaps; aborts if they differ.
long crossing_tetrahedron_count(const Crossing& c);

struct CornerContribution {
    int crossing = 0;   // crossing id
    int arrival = 0;
    int departure = 0;
    int contribution = 0;  // |level(arrival strand) - level(departure strand)|
    bool operator==(const CornerContribution&) const = default;
};

struct FaceSizeRecord {
    int face = 0;
    int size = 0;
    std::vector<CornerContribution> corners;
};

// Face-centered bipyramid sizes: each face's size is the sum of the level
// gaps spanned at its corners.
std::vector<FaceSizeRecord> face_sizes(const MulticrossingDiagram& d);

struct DualConsistencyReport {
    long face_total = 0;
    long crossing_total = 0;
    std::vector<long> per_crossing_corner_sums;  // by crossing index
    bool consistent = false;
};

// Checks that the two decompositions partition the same set of tetrahedra:
// the face sizes and the crossing signatures must have equal totals. On
// mismatch the report names the first crossing whose corner sum disagrees
// with its signature sum.
DualConsistencyReport dual_consistency_check(const MulticrossingDiagram& d);

}  // namespace bipyr
