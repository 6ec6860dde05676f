#pragma once

#include <string>

#include "bipyr/diagram.hpp"

namespace bipyr {

// Rounds to 6 significant digits, the precision used in all emitted reports.
double sig6(double x);

// Full analysis of one diagram as a JSON document with stable key order:
// genus, per-crossing signatures, per-face sizes with corner breakdowns,
// tetrahedron totals for both decompositions, MCCB/MFCB/octahedral bounds,
// and density bounds.
std::string analyze_json(const MulticrossingDiagram& d);

// The same analysis as human-readable text.
std::string analyze_text(const MulticrossingDiagram& d);

}  // namespace bipyr
