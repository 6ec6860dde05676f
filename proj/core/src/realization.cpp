#include "bipyr/realization.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace bipyr {

namespace {

std::string sequence_to_string(const std::vector<int>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    return os.str();
}

void verify_signature(const Crossing& c, const std::vector<int>& expected,
                      const char* op) {
    const Signature got = crossing_signature(c);
    if (got.sizes != expected)
        throw InternalError(std::string(op) + " produced signature (" +
                            sequence_to_string(got.sizes) + "), expected (" +
                            sequence_to_string(expected) + ")");
}

}  // namespace

Admissibility is_admissible(const SizeSequence& s) {
    if (s.entries.empty()) throw ValidationError("empty size sequence");
    const std::vector<int>& m = s.entries;
    const int k = static_cast<int>(m.size());
    if (m.front() != 4) return {false, "first entry != 4", 0};
    if (m.back() != 4) return {false, "last entry != 4", k - 1};
    for (int i = 0; i + 1 < k; ++i) {
        const int gap = std::abs(m[i] - m[i + 1]);
        if (gap != 0 && gap != 4)
            return {false, "gap at index " + std::to_string(i) + " is " +
                               std::to_string(gap), i};
    }
    for (int i = 0; i < k; ++i)
        if (m[i] <= 0)
            return {false, "entry at index " + std::to_string(i) +
                               " is not positive", i};
    return {true, "", -1};
}

Crossing add4(const Crossing& c) {
    validate_levels(c);
    const int n = c.size();
    const std::vector<int> old_sig = crossing_signature(c).sizes;

    Crossing work = c;
    canonicalize(work);
    int under = 0;
    while (work.levels[under] != n) ++under;

    Crossing result;
    result.id = 0;
    for (int j = 0; j <= under; ++j) result.levels.push_back(work.levels[j] + 1);
    result.levels.push_back(1);      // new overstrand, clockwise of the understrand
    result.levels.push_back(n + 2);  // new understrand, clockwise of that
    for (int j = under + 1; j < n; ++j) result.levels.push_back(work.levels[j] + 1);
    canonicalize(result);

    std::vector<int> expected;
    expected.push_back(4);
    for (int m : old_sig) expected.push_back(m + 4);
    expected.push_back(4);
    verify_signature(result, expected, "add4");
    return result;
}

Crossing concatenate(const Crossing& c1, const Crossing& c2) {
    validate_levels(c1);
    validate_levels(c2);
    const int u = c1.size();
    const int v = c2.size();

    const std::vector<int> sig1 = crossing_signature(c1).sizes;
    const std::vector<int> sig2 = crossing_signature(c2).sizes;
    std::vector<int> expected = sig1;
    expected.insert(expected.end(), sig2.begin() + 1, sig2.end());

    Crossing a = c1, b = c2;
    canonicalize(a);
    canonicalize(b);  // top strand of c2 now at position 0
    int bottom = 0;
    while (a.levels[bottom] != u) ++bottom;

    // c2's surviving strands, in internal cyclic order after its top strand,
    // shifted into levels u .. u+v-2.
    std::vector<int> block;
    for (int j = 1; j < v; ++j) block.push_back(b.levels[j] + u - 2);

    // The sizing lemma fixes the regions but not the fine interleaving, so a
    // reversed block is tried when the first reading fails verification.
    for (int attempt = 0; attempt < 2; ++attempt) {
        Crossing result;
        result.id = 0;
        result.levels = block;
        for (int j = 1; j < u; ++j)
            result.levels.push_back(a.levels[(bottom + j) % u]);
        canonicalize(result);
        try {
            verify_signature(result, expected, "concatenate");
            return result;
        } catch (const InternalError&) {
            if (attempt == 1) throw;
            std::reverse(block.begin(), block.end());
        }
    }
    throw InternalError("concatenate: unreachable");
}

Crossing realize(const SizeSequence& s, long max_sum) {
    const Admissibility adm = is_admissible(s);
    if (!adm.ok) throw ValidationError("inadmissible sequence: " + adm.reason);
    const std::vector<int>& m = s.entries;
    const long sum = std::accumulate(m.begin(), m.end(), 0L);
    if (sum > max_sum)
        throw ValidationError("sequence sum " + std::to_string(sum) +
                              " exceeds cap " + std::to_string(max_sum));

    const int k = static_cast<int>(m.size());
    if (k == 1) return Crossing{0, {1, 2}};
    if (k == 2) return Crossing{0, {1, 2, 3}};

    for (int t = 1; t + 1 < k; ++t) {
        if (m[t] != 4) continue;
        // Leftmost interior 4: split and concatenate.
        SizeSequence left{std::vector<int>(m.begin(), m.begin() + t + 1)};
        SizeSequence right{std::vector<int>(m.begin() + t, m.end())};
        Crossing result =
            concatenate(realize(left, max_sum), realize(right, max_sum));
        verify_signature(result, m, "realize");
        return result;
    }

    // No interior 4: strip the outer 4s and lower the interior by 4.
    SizeSequence inner;
    for (int i = 1; i + 1 < k; ++i) inner.entries.push_back(m[i] - 4);
    Crossing result = add4(realize(inner, max_sum));
    verify_signature(result, m, "realize");
    return result;
}

}  // namespace bipyr
