#include "bipyr/decomposition.hpp"

#include <cassert>
#include <cstdlib>
#include <numeric>

namespace bipyr {

namespace {

// Direct reading of the size formula: sizes[i-1] counts the cyclically
// adjacent strand pairs whose levels straddle i + 1/2, doubled.
std::vector<int> signature_direct(const Crossing& c) {
    const int n = c.size();
    std::vector<int> sizes(n - 1, 0);
    for (int i = 1; i < n; ++i) {
        int count = 0;
        for (int j = 0; j < n; ++j) {
            const int a = c.levels[j];
            const int b = c.levels[(j + 1) % n];
            if (std::min(a, b) <= i && i + 1 <= std::max(a, b)) ++count;
        }
        sizes[i - 1] = 2 * count;
    }
    return sizes;
}

// Linear-time equivalent via a difference array over level intervals: the
// pair (l_j, l_{j+1}) contributes to every gap inside [min, max).
std::vector<int> signature_sweep(const Crossing& c) {
    const int n = c.size();
    std::vector<int> diff(n + 1, 0);
    for (int j = 0; j < n; ++j) {
        const int a = c.levels[j];
        const int b = c.levels[(j + 1) % n];
        diff[std::min(a, b)] += 2;
        diff[std::max(a, b)] -= 2;
    }
    std::vector<int> sizes(n - 1);
    int running = 0;
    for (int i = 1; i < n; ++i) {
        running += diff[i];
        sizes[i - 1] = running;
    }
    return sizes;
}

}  // namespace

Signature crossing_signature(const Crossing& c) {
    validate_levels(c);
    Signature sig;
    sig.sizes = signature_sweep(c);
    sig.crossing = c.id;
    assert(sig.sizes == signature_direct(c));
    return sig;
}

long crossing_tetrahedron_count(const Crossing& c) {
    const Signature sig = crossing_signature(c);
    const long from_signature =
        std::accumulate(sig.sizes.begin(), sig.sizes.end(), 0L);
    long gap_sum = 0;
    const int n = c.size();
    for (int j = 0; j < n; ++j)
        gap_sum += std::abs(c.levels[j] - c.levels[(j + 1) % n]);
    if (from_signature != 2 * gap_sum)
        throw InternalError("tetrahedron count mismatch at crossing " +
                            std::to_string(c.id) + ": signature sum " +
                            std::to_string(from_signature) + " vs 2*gaps " +
                            std::to_string(2 * gap_sum));
    return from_signature;
}

std::vector<FaceSizeRecord> face_sizes(const MulticrossingDiagram& d) {
    std::vector<FaceSizeRecord> out;
    const std::vector<Face> faces = trace_faces(d);
    for (std::size_t f = 0; f < faces.size(); ++f) {
        FaceSizeRecord rec;
        rec.face = static_cast<int>(f);
        for (const FaceCorner& corner : faces[f].corners) {
            const Crossing& c = d.crossing_by_id(corner.crossing);
            const int gap = std::abs(c.level_at_slot(corner.arrival) -
                                     c.level_at_slot(corner.departure));
            rec.corners.push_back({corner.crossing, corner.arrival,
                                   corner.departure, gap});
            rec.size += gap;
        }
        out.push_back(std::move(rec));
    }
    return out;
}

DualConsistencyReport dual_consistency_check(const MulticrossingDiagram& d) {
    DualConsistencyReport rep;
    for (const FaceSizeRecord& rec : face_sizes(d)) rep.face_total += rec.size;

    // Corner contributions regrouped by crossing: each crossing's corner sum
    // must equal its signature sum, and the totals must agree.
    rep.per_crossing_corner_sums.assign(d.crossings().size(), 0);
    for (const Face& face : trace_faces(d))
        for (const FaceCorner& corner : face.corners) {
            const Crossing& c = d.crossing_by_id(corner.crossing);
            rep.per_crossing_corner_sums[d.crossing_index(corner.crossing)] +=
                std::abs(c.level_at_slot(corner.arrival) -
                         c.level_at_slot(corner.departure));
        }

    rep.consistent = true;
    for (std::size_t i = 0; i < d.crossings().size(); ++i) {
        const long sig_sum = crossing_tetrahedron_count(d.crossings()[i]);
        rep.crossing_total += sig_sum;
        if (rep.consistent && sig_sum != rep.per_crossing_corner_sums[i])
            rep.consistent = false;
    }
    if (rep.face_total != rep.crossing_total) rep.consistent = false;
    return rep;
}

}  // namespace bipyr
