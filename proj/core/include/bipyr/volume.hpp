#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bipyr/decomposition.hpp"
#include "bipyr/diagram.hpp"

namespace bipyr {

// Lobachevsky function L(theta) = -integral of log|2 sin t| on [0, theta].
// Odd and pi-periodic; absolute error below 1e-12.
double lobachevsky(double theta);

// Volume of the ideal regular octahedron, 8 L(pi/4).
double v_oct();

// Maximal hyperbolic volume of a size-m bipyramid: 2m L(pi/m) for m >= 3,
// zero for the degenerate sizes m <= 2.
double maxvol(int m);

// Sum of maximal bipyramid volumes over the crossing-centered decomposition.
double mccb(const MulticrossingDiagram& d);

// Sum of maximal bipyramid volumes over the face-centered decomposition.
double mfcb(const MulticrossingDiagram& d);

// Classical bound from perturbing each n-crossing into C(n,2) 2-crossings.
double octahedral_bound(const MulticrossingDiagram& d);

struct Table1Row {
    int n = 0;
    double best = 0;        // (n-1) v_oct
    double worst = 0;       // sum of maxvol(4 min(i, n-i))
    double octahedral = 0;  // C(n,2) v_oct
};

// Per-crossing-size comparison of best-case, worst-case, and octahedral
// volume bounds. Requires every n >= 3.
std::vector<Table1Row> table1(const std::vector<int>& ns);

struct DensityReport {
    double mccb_per_crossing = 0;
    // Present only when every crossing has size 3; bounded by 2 v_oct.
    std::optional<double> triple_density;
    double triple_reference = 0;  // 2 v_oct
};

DensityReport density_bounds(const MulticrossingDiagram& d);

struct CrossingVolumeDetail {
    int id = 0;
    Signature signature;
    long tetrahedra = 0;
    std::vector<double> bipyramid_volumes;
    double mccb_contribution = 0;
};

struct FaceVolumeDetail {
    int face = 0;
    int size = 0;
    double volume = 0;
};

struct VolumeBoundReport {
    double mccb = 0;
    double mfcb = 0;
    double octahedral = 0;
    long tetrahedron_total = 0;
    std::vector<CrossingVolumeDetail> per_crossing;
    std::vector<FaceVolumeDetail> per_face;
    std::vector<int> genus;
    std::vector<std::string> warnings;
};

VolumeBoundReport volume_report(const MulticrossingDiagram& d);

}  // namespace bipyr
