#include "bipyr/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "bipyr/decomposition.hpp"
#include "bipyr/volume.hpp"

namespace bipyr {

double sig6(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return std::strtod(buf, nullptr);
}

namespace {

nlohmann::ordered_json build_report(const MulticrossingDiagram& d) {
    const VolumeBoundReport vol = volume_report(d);
    const DualConsistencyReport dual = dual_consistency_check(d);
    if (!dual.consistent)
        throw InternalError("dual decomposition totals disagree: faces " +
                            std::to_string(dual.face_total) + " vs crossings " +
                            std::to_string(dual.crossing_total));
    const DensityReport density = density_bounds(d);

    nlohmann::ordered_json j;
    j["name"] = d.name();
    j["surface"] = surface_name(d.surface());
    j["genus"] = vol.genus;
    j["link_components"] = link_component_count(d);

    j["crossings"] = nlohmann::ordered_json::array();
    for (const CrossingVolumeDetail& det : vol.per_crossing) {
        nlohmann::ordered_json jc;
        jc["id"] = det.id;
        jc["size"] = d.crossing_by_id(det.id).size();
        jc["levels"] = d.crossing_by_id(det.id).levels;
        jc["signature"] = det.signature.sizes;
        jc["tetrahedra"] = det.tetrahedra;
        auto vols = nlohmann::ordered_json::array();
        for (double v : det.bipyramid_volumes) vols.push_back(sig6(v));
        jc["bipyramid_volumes"] = std::move(vols);
        jc["mccb_contribution"] = sig6(det.mccb_contribution);
        j["crossings"].push_back(std::move(jc));
    }

    j["faces"] = nlohmann::ordered_json::array();
    for (const FaceSizeRecord& rec : face_sizes(d)) {
        nlohmann::ordered_json jf;
        jf["index"] = rec.face;
        jf["size"] = rec.size;
        jf["volume"] = sig6(vol.per_face[rec.face].volume);
        jf["corners"] = nlohmann::ordered_json::array();
        for (const CornerContribution& corner : rec.corners)
            jf["corners"].push_back({{"crossing", corner.crossing},
                                     {"arrival", corner.arrival},
                                     {"departure", corner.departure},
                                     {"contribution", corner.contribution}});
        j["faces"].push_back(std::move(jf));
    }

    j["tetrahedron_total"] = {{"face_centered", dual.face_total},
                              {"crossing_centered", dual.crossing_total}};
    j["mccb"] = sig6(vol.mccb);
    j["mfcb"] = sig6(vol.mfcb);
    j["octahedral"] = sig6(vol.octahedral);

    nlohmann::ordered_json jd;
    jd["mccb_per_crossing"] = sig6(density.mccb_per_crossing);
    if (density.triple_density)
        jd["triple_density"] = sig6(*density.triple_density);
    else
        jd["triple_density"] = nullptr;
    jd["triple_reference"] = sig6(density.triple_reference);
    j["density"] = std::move(jd);

    j["warnings"] = vol.warnings;
    return j;
}

}  // namespace

std::string analyze_json(const MulticrossingDiagram& d) {
    return build_report(d).dump(2) + "\n";
}

std::string analyze_text(const MulticrossingDiagram& d) {
    const nlohmann::ordered_json j = build_report(d);
    std::ostringstream os;
    os << "diagram: " << j["name"].get<std::string>() << " ("
       << j["surface"].get<std::string>() << ")\n";
    os << "genus:";
    for (int g : j["genus"]) os << " " << g;
    os << "    link components: " << j["link_components"].get<int>() << "\n\n";

    os << "crossings:\n";
    for (const auto& jc : j["crossings"]) {
        os << "  #" << jc["id"].get<int>() << "  levels (";
        bool first = true;
        for (int lv : jc["levels"]) { os << (first ? "" : ",") << lv; first = false; }
        os << ")  signature (";
        first = true;
        for (int m : jc["signature"]) { os << (first ? "" : ",") << m; first = false; }
        os << ")  tetrahedra " << jc["tetrahedra"].get<long>()
           << "  mccb " << jc["mccb_contribution"].get<double>() << "\n";
    }

    os << "faces:\n";
    for (const auto& jf : j["faces"])
        os << "  #" << jf["index"].get<int>() << "  size " << jf["size"].get<int>()
           << "  volume " << jf["volume"].get<double>() << "\n";

    os << "\ntetrahedra: " << j["tetrahedron_total"]["face_centered"].get<long>()
       << " (both decompositions)\n";
    os << "mccb:       " << j["mccb"].get<double>() << "\n";
    os << "mfcb:       " << j["mfcb"].get<double>() << "\n";
    os << "octahedral: " << j["octahedral"].get<double>() << "\n";
    os << "mccb per crossing: " << j["density"]["mccb_per_crossing"].get<double>()
       << "\n";
    if (!j["density"]["triple_density"].is_null())
        os << "triple density bound: "
           << j["density"]["triple_density"].get<double>() << " (max "
           << j["density"]["triple_reference"].get<double>() << ")\n";
    for (const auto& w : j["warnings"])
        os << "warning: " << w.get<std::string>() << "\n";
    return os.str();
}

}  // namespace bipyr
