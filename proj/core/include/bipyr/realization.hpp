#pragma once

#include <string>
#include <vector>

#include "bipyr/decomposition.hpp"
#include "bipyr/diagram.hpp"

namespace bipyr {

struct SizeSequence {
    std::vector<int> entries;
};

struct Admissibility {
    bool ok = false;
    std::string reason;  // empty when ok
    int index = -1;      // first violating index, 0-based
};

// A sequence is admissible when it starts and ends with 4 and consecutive
// entries differ by 0 or 4. Throws ValidationError on an empty sequence.
Admissibility is_admissible(const SizeSequence& s);

// Builds an (n+2)-crossing whose signature is 4, m_1+4, ..., m_{n-1}+4, 4:
// all old levels move down one, a new top strand is inserted immediately
// clockwise of the old understrand and a new bottom strand immediately
// clockwise of that. The result is re-verified against crossing_signature.
Crossing add4(const Crossing& c);

// Builds a (u+v-2)-crossing realizing the concatenation of the two input
// signatures with the shared boundary 4 merged: c1's bottom strand and c2's
// top strand are deleted, c2's remaining levels shift up by u-2, and c2's
// strands are inserted in the region just clockwise of the deleted bottom
// strand. Re-verified against crossing_signature.
Crossing concatenate(const Crossing& c1, const Crossing& c2);

inline constexpr long kDefaultRealizeMaxSum = 40000;

// Constructs a crossing whose signature equals s. Splits at the leftmost
// interior 4 when one exists, otherwise strips the outer 4s, recurses on the
// interior minus 4, and re-wraps with add4. Throws ValidationError when s is
// inadmissible or its sum exceeds max_sum.
Crossing realize(const SizeSequence& s, long max_sum = kDefaultRealizeMaxSum);

}  // namespace bipyr
