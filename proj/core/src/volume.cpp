#include "bipyr/volume.hpp"

#include <cmath>
#include <numbers>

namespace bipyr {

namespace {

constexpr double kPi = std::numbers::pi;

// zeta(2n) for n = 1..32; tail factors of the accelerated series
//   L(t) = t(1 - log 2t) + sum_n zeta(2n) t^{2n+1} / (n (2n+1) pi^{2n}).
// After range reduction |t| <= pi/2 the terms shrink by at least 4x each.
constexpr double kZetaEven[32] = {
    1.6449340668482264365, 1.0823232337111381915, 1.0173430619844491397,
    1.0040773561979443394, 1.0009945751278180853, 1.0002460865533080483,
    1.0000612481350587048, 1.0000152822594086519, 1.0000038172932649998,
    1.0000009539620338728, 1.0000002384505027277, 1.0000000596081890513,
    1.0000000149015548284, 1.0000000037253340248, 1.0000000009313274324,
    1.0000000002328311834, 1.0000000000582077209, 1.0000000000145519219,
    1.0000000000036379795, 1.0000000000009094948, 1.0000000000002273737,
    1.0000000000000568434, 1.0000000000000142109, 1.0000000000000035527,
    1.0000000000000008882, 1.0000000000000002220, 1.0000000000000000555,
    1.0000000000000000139, 1.0000000000000000035, 1.0000000000000000009,
    1.0000000000000000002, 1.0000000000000000001,
};

}  // namespace

double lobachevsky(double theta) {
    if (!std::isfinite(theta))
        throw ValidationError("lobachevsky: non-finite argument");
    // Range reduction: odd, period pi, and L(pi - t) = -L(t).
    double t = std::fmod(theta, kPi);
    if (t < 0) t += kPi;
    double sign = 1.0;
    if (t > kPi / 2) {
        t = kPi - t;
        sign = -1.0;
    }
    if (t == 0.0) return 0.0;

    const double x = (t / kPi) * (t / kPi);
    double xn = 1.0;
    double series = 0.0;
    for (int n = 1; n <= 32; ++n) {
        xn *= x;
        const double term = kZetaEven[n - 1] * xn / (n * (2 * n + 1));
        series += term;
        if (term < 1e-17 * series) break;
    }
    return sign * t * (1.0 - std::log(2.0 * t) + series);
}

double v_oct() {
    static const double value = 8.0 * lobachevsky(kPi / 4.0);
    return value;
}

double maxvol(int m) {
    if (m < 0) throw ValidationError("maxvol: negative size");
    if (m <= 2) return 0.0;
    const double vol = 2.0 * m * lobachevsky(kPi / m);
    if (!(vol < 2.0 * kPi * std::log(m / 2.0)))
        throw InternalError("maxvol(" + std::to_string(m) +
                            ") violates the logarithmic growth bound");
    return vol;
}

double mccb(const MulticrossingDiagram& d) {
    double total = 0;
    for (const Crossing& c : d.crossings())
        for (int m : crossing_signature(c).sizes) total += maxvol(m);
    return total;
}

double mfcb(const MulticrossingDiagram& d) {
    double total = 0;
    for (const FaceSizeRecord& rec : face_sizes(d)) total += maxvol(rec.size);
    return total;
}

double octahedral_bound(const MulticrossingDiagram& d) {
    double total = 0;
    for (const Crossing& c : d.crossings()) {
        const long n = c.size();
        total += static_cast<double>(n * (n - 1) / 2) * v_oct();
    }
    return total;
}

std::vector<Table1Row> table1(const std::vector<int>& ns) {
    std::vector<Table1Row> rows;
    for (int n : ns) {
        if (n < 3)
            throw ValidationError("table1: n must be at least 3, got " +
                                  std::to_string(n));
        Table1Row row;
        row.n = n;
        row.best = (n - 1) * v_oct();
        // The worst case is the admissible sequence of maximal sum,
        // 4, 8, ..., 4*floor(n/2), ..., 8, 4.
        for (int i = 1; i < n; ++i) row.worst += maxvol(4 * std::min(i, n - i));
        row.octahedral = static_cast<double>(static_cast<long>(n) * (n - 1) / 2) *
                         v_oct();
        rows.push_back(row);
    }
    return rows;
}

DensityReport density_bounds(const MulticrossingDiagram& d) {
    DensityReport rep;
    rep.triple_reference = 2.0 * v_oct();
    if (d.crossings().empty()) return rep;
    rep.mccb_per_crossing = mccb(d) / static_cast<double>(d.crossings().size());
    bool all_triple = true;
    for (const Crossing& c : d.crossings())
        if (c.size() != 3) all_triple = false;
    if (all_triple) rep.triple_density = rep.mccb_per_crossing;
    return rep;
}

VolumeBoundReport volume_report(const MulticrossingDiagram& d) {
    VolumeBoundReport rep;
    for (const Crossing& c : d.crossings()) {
        CrossingVolumeDetail det;
        det.id = c.id;
        det.signature = crossing_signature(c);
        det.tetrahedra = crossing_tetrahedron_count(c);
        for (int m : det.signature.sizes) {
            const double vol = maxvol(m);
            det.bipyramid_volumes.push_back(vol);
            det.mccb_contribution += vol;
        }
        rep.mccb += det.mccb_contribution;
        rep.tetrahedron_total += det.tetrahedra;
        rep.per_crossing.push_back(std::move(det));
    }
    for (const FaceSizeRecord& rec : face_sizes(d)) {
        FaceVolumeDetail det;
        det.face = rec.face;
        det.size = rec.size;
        det.volume = maxvol(rec.size);
        rep.mfcb += det.volume;
        rep.per_face.push_back(det);
        if (rec.size <= 2)
            rep.warnings.push_back("face " + std::to_string(rec.face) +
                                   " is degenerate (size " +
                                   std::to_string(rec.size) +
                                   "); it contributes zero volume");
    }
    rep.octahedral = octahedral_bound(d);
    rep.genus = genus(d);
    for (int g : rep.genus)
        if (g != 0) {
            rep.warnings.push_back(
                "diagram is not planar: the volume bound theorems are stated "
                "for planar projections; torus quotients follow the weave "
                "application");
            break;
        }
    return rep;
}

}  // namespace bipyr
