#pragma once

#include <map>
#include <vector>

#include "bipyr/decomposition.hpp"

namespace bipyr {

inline constexpr int kDefaultEnumerationCap = 12;

// Exhaustive census of canonical n-crossings (level 1 fixed at position 0),
// grouped by signature. Keys and level lists are in lexicographic order.
struct Census {
    int n = 0;
    bool folded = false;  // reflections identified
    std::map<std::vector<int>, std::vector<std::vector<int>>> entries;

    long total_configurations() const;
};

// Iterates all (n-1)! canonical level sequences and computes each signature.
// With fold_reflections, a sequence and its cyclic reversal are identified
// and the lexicographically smaller representative is kept.
Census enumerate_crossings(int n, bool fold_reflections = false,
                           int cap = kDefaultEnumerationCap);

struct ClassificationReport {
    int n = 0;
    bool ok = false;
    std::vector<std::vector<int>> achieved;         // signatures from the census
    std::vector<std::vector<int>> admissible;       // sequences of length n-1
    std::vector<std::vector<int>> achieved_only;    // witnesses of a mismatch
    std::vector<std::vector<int>> admissible_only;
};

// Brute-force check that the census signatures coincide with the admissible
// sequences of length n-1.
ClassificationReport verify_classification(int n, int cap = kDefaultEnumerationCap);

// All admissible sequences of the given length, generated over the gap
// alphabet {-4, 0, +4}, in lexicographic order.
std::vector<std::vector<int>> admissible_sequences(int length);

struct ExtremalStats {
    int n = 0;
    double min_mccb = 0;
    double max_mccb = 0;
    std::vector<int> argmin;  // lexicographically first witnesses
    std::vector<int> argmax;
};

// Minimum and maximum MCCB contribution of a single n-crossing over the
// census, with achieving level sequences.
ExtremalStats extremal_stats(int n, int cap = kDefaultEnumerationCap);

}  // namespace bipyr
