#include "bipyr/enumeration.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "bipyr/volume.hpp"

namespace bipyr {

namespace {

// Reflection = reversal of the cyclic strand order, re-canonicalized
// (position 0 keeps level 1).
std::vector<int> reflect_canonical(const std::vector<int>& levels) {
    std::vector<int> out;
    out.push_back(levels[0]);
    out.insert(out.end(), levels.rbegin(), levels.rend() - 1);
    return out;
}

using CensusMap = std::map<std::vector<int>, std::vector<std::vector<int>>>;

CensusMap enumerate_tail(int n, int second, bool fold) {
    // Canonical sequences with levels[0] = 1 and levels[1] = second; the
    // remaining positions run through all permutations in order.
    CensusMap out;
    std::vector<int> rest;
    for (int lv = 2; lv <= n; ++lv)
        if (lv != second) rest.push_back(lv);
    do {
        std::vector<int> levels{1, second};
        levels.insert(levels.end(), rest.begin(), rest.end());
        if (fold) {
            const std::vector<int> mirror = reflect_canonical(levels);
            if (mirror < levels) continue;  // the mirror pass keeps it
        }
        Crossing c{0, levels};
        out[crossing_signature(c).sizes].push_back(std::move(levels));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace

long Census::total_configurations() const {
    long total = 0;
    for (const auto& [sig, levels] : entries)
        total += static_cast<long>(levels.size());
    return total;
}

Census enumerate_crossings(int n, bool fold_reflections, int cap) {
    if (n < 2 || n > cap)
        throw ValidationError("enumerate_crossings: n must be in 2.." +
                              std::to_string(cap) + ", got " + std::to_string(n));
    Census census;
    census.n = n;
    census.folded = fold_reflections;
    if (n == 2) {
        census.entries[{4}] = {{1, 2}};
        return census;
    }

    // Partitioned by the second cyclic position, merged in order.
    std::vector<std::future<CensusMap>> parts;
    for (int second = 2; second <= n; ++second)
        parts.push_back(std::async(std::launch::async, enumerate_tail, n, second,
                                   fold_reflections));
    for (auto& part : parts)
        for (auto& [sig, levels] : part.get()) {
            auto& bucket = census.entries[sig];
            bucket.insert(bucket.end(), levels.begin(), levels.end());
        }
    for (auto& [sig, levels] : census.entries) std::sort(levels.begin(), levels.end());

    if (fold_reflections) {
        // A palindromic-by-reflection sequence is its own mirror; everything
        // else was emitted once, by the smaller representative.
        return census;
    }
    return census;
}

std::vector<std::vector<int>> admissible_sequences(int length) {
    std::vector<std::vector<int>> out;
    if (length < 1) return out;
    std::vector<int> cur{4};
    // Depth-first over the gap alphabet keeps lexicographic order.
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == length) {
            if (cur.back() == 4) out.push_back(cur);
            return;
        }
        for (int gap : {-4, 0, 4}) {
            const int next = cur.back() + gap;
            if (next < 4) continue;
            cur.push_back(next);
            self(self);
            cur.pop_back();
        }
    };
    extend(extend);
    return out;
}

ClassificationReport verify_classification(int n, int cap) {
    ClassificationReport rep;
    rep.n = n;
    const Census census = enumerate_crossings(n, /*fold_reflections=*/false, cap);
    for (const auto& [sig, levels] : census.entries) rep.achieved.push_back(sig);
    rep.admissible = admissible_sequences(n - 1);
    std::set_difference(rep.achieved.begin(), rep.achieved.end(),
                        rep.admissible.begin(), rep.admissible.end(),
                        std::back_inserter(rep.achieved_only));
    std::set_difference(rep.admissible.begin(), rep.admissible.end(),
                        rep.achieved.begin(), rep.achieved.end(),
                        std::back_inserter(rep.admissible_only));
    rep.ok = rep.achieved_only.empty() && rep.admissible_only.empty();
    return rep;
}

ExtremalStats extremal_stats(int n, int cap) {
    const Census census = enumerate_crossings(n, /*fold_reflections=*/false, cap);
    ExtremalStats stats;
    stats.n = n;
    bool first = true;
    for (const auto& [sig, levels] : census.entries) {
        double contribution = 0;
        for (int m : sig) contribution += maxvol(m);
        if (first || contribution < stats.min_mccb) {
            stats.min_mccb = contribution;
            stats.argmin = levels.front();
        }
        if (first || contribution > stats.max_mccb) {
            stats.max_mccb = contribution;
            stats.argmax = levels.front();
        }
        first = false;
    }
    return stats;
}

}  // namespace bipyr
