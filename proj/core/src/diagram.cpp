#include "bipyr/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace bipyr {

std::string surface_name(Surface s) {
    switch (s) {
        case Surface::Sphere: return "sphere";
        case Surface::Torus: return "torus";
        case Surface::Auto: return "auto";
    }
    throw InternalError("unknown surface value");
}

Surface surface_from_name(std::string_view name) {
    if (name == "sphere") return Surface::Sphere;
    if (name == "torus") return Surface::Torus;
    if (name == "auto") return Surface::Auto;
    throw ValidationError("unknown surface \"" + std::string(name) +
                          "\" (expected sphere, torus, or auto)");
}

void validate_levels(const Crossing& c) {
    const int n = c.size();
    if (n < 2)
        throw ValidationError("crossing " + std::to_string(c.id) +
                              ": size must be at least 2");
    std::vector<bool> seen(n, false);
    for (int lv : c.levels) {
        if (lv < 1 || lv > n || seen[lv - 1])
            throw ValidationError("crossing " + std::to_string(c.id) +
                                  ": levels not a permutation");
        seen[lv - 1] = true;
    }
}

int canonicalize(Crossing& c) {
    const int n = c.size();
    int r = 0;
    while (c.levels[r] != 1) ++r;
    if (r != 0)
        std::rotate(c.levels.begin(), c.levels.begin() + r, c.levels.end());
    return r;
}

int MulticrossingDiagram::crossing_index(int id) const {
    for (std::size_t i = 0; i < crossings_.size(); ++i)
        if (crossings_[i].id == id) return static_cast<int>(i);
    throw ValidationError("unknown crossing id " + std::to_string(id));
}

int MulticrossingDiagram::slot_total() const {
    return slot_offset_.empty() ? 0
           : slot_offset_.back() + crossings_.back().slot_count();
}

SlotRef MulticrossingDiagram::neighbor(SlotRef s) const {
    const int ci = crossing_index(s.crossing);
    if (s.slot < 0 || s.slot >= crossings_[ci].slot_count())
        throw ValidationError("slot index out of range");
    const int flat = match_[slot_offset_[ci] + s.slot];
    const auto it = std::upper_bound(slot_offset_.begin(), slot_offset_.end(), flat);
    const int cj = static_cast<int>(it - slot_offset_.begin()) - 1;
    return {crossings_[cj].id, flat - slot_offset_[cj]};
}

void MulticrossingDiagram::validate_and_build() {
    std::map<int, int> index_of;
    rotations_.clear();
    slot_offset_.clear();
    int flat = 0;
    for (std::size_t i = 0; i < crossings_.size(); ++i) {
        Crossing& c = crossings_[i];
        validate_levels(c);
        if (!index_of.emplace(c.id, static_cast<int>(i)).second)
            throw ValidationError("duplicate crossing id " + std::to_string(c.id));
        rotations_.push_back(canonicalize(c));
        slot_offset_.push_back(flat);
        flat += c.slot_count();
    }

    match_.assign(flat, -1);
    auto resolve = [&](SlotRef s) {
        const auto it = index_of.find(s.crossing);
        if (it == index_of.end())
            throw ValidationError("edge references unknown crossing id " +
                                  std::to_string(s.crossing));
        const Crossing& c = crossings_[it->second];
        if (s.slot < 0 || s.slot >= c.slot_count())
            throw ValidationError("slot index out of range: crossing " +
                                  std::to_string(s.crossing) + " slot " +
                                  std::to_string(s.slot));
        return slot_offset_[it->second] + s.slot;
    };
    for (EdgeRef& e : edges_) {
        // Undo the canonicalization rotation on stored slot references.
        auto remap = [&](SlotRef& s) {
            const auto it = index_of.find(s.crossing);
            if (it == index_of.end())
                throw ValidationError("edge references unknown crossing id " +
                                      std::to_string(s.crossing));
            const Crossing& c = crossings_[it->second];
            const int r = rotations_[it->second];
            if (s.slot < 0 || s.slot >= c.slot_count())
                throw ValidationError("slot index out of range: crossing " +
                                      std::to_string(s.crossing) + " slot " +
                                      std::to_string(s.slot));
            s.slot = (s.slot - r + c.slot_count()) % c.slot_count();
        };
        remap(e.a);
        remap(e.b);
        const int fa = resolve(e.a);
        const int fb = resolve(e.b);
        if (fa == fb)
            throw ValidationError("slot matched twice: crossing " +
                                  std::to_string(e.a.crossing) + " slot " +
                                  std::to_string(e.a.slot) + " paired with itself");
        for (int f : {fa, fb})
            if (match_[f] != -1) {
                const auto it = std::upper_bound(slot_offset_.begin(),
                                                 slot_offset_.end(), f);
                const int ci = static_cast<int>(it - slot_offset_.begin()) - 1;
                throw ValidationError("slot matched twice: crossing " +
                                      std::to_string(crossings_[ci].id) + " slot " +
                                      std::to_string(f - slot_offset_[ci]));
            }
        match_[fa] = fb;
        match_[fb] = fa;
    }
    for (int f = 0; f < flat; ++f)
        if (match_[f] == -1) {
            const auto it = std::upper_bound(slot_offset_.begin(), slot_offset_.end(), f);
            const int ci = static_cast<int>(it - slot_offset_.begin()) - 1;
            throw ValidationError("slot never matched: crossing " +
                                  std::to_string(crossings_[ci].id) + " slot " +
                                  std::to_string(f - slot_offset_[ci]));
        }

    if (surface_ != Surface::Auto) {
        const std::vector<int> g = genus(*this);
        if (surface_ == Surface::Sphere) {
            for (std::size_t k = 0; k < g.size(); ++k)
                if (g[k] != 0)
                    throw ValidationError(
                        "surface mismatch: declared sphere but component " +
                        std::to_string(k) + " has genus " + std::to_string(g[k]));
        } else {
            const int total = std::accumulate(g.begin(), g.end(), 0);
            if (total != 1)
                throw ValidationError(
                    "surface mismatch: declared torus but total genus is " +
                    std::to_string(total));
        }
    }
}

MulticrossingDiagram make_diagram(std::string name, Surface surface,
                                  std::vector<Crossing> crossings,
                                  std::vector<EdgeRef> edges) {
    MulticrossingDiagram d;
    d.name_ = std::move(name);
    d.surface_ = surface;
    d.crossings_ = std::move(crossings);
    d.edges_ = std::move(edges);
    d.validate_and_build();
    return d;
}

MulticrossingDiagram parse_diagram(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    try {
        if (!j.is_object()) throw ValidationError("diagram file must be a JSON object");
        std::vector<Crossing> crossings;
        for (const auto& jc : j.at("crossings")) {
            Crossing c;
            c.id = jc.at("id").get<int>();
            c.levels = jc.at("levels").get<std::vector<int>>();
            crossings.push_back(std::move(c));
        }
        std::vector<EdgeRef> edges;
        for (const auto& je : j.at("edges")) {
            if (!je.is_array() || je.size() != 2)
                throw ValidationError("each edge must pair two [crossing, slot] entries");
            EdgeRef e;
            auto end = [](const nlohmann::json& jp) {
                if (!jp.is_array() || jp.size() != 2)
                    throw ValidationError("edge endpoint must be [crossing, slot]");
                return SlotRef{jp[0].get<int>(), jp[1].get<int>()};
            };
            e.a = end(je[0]);
            e.b = end(je[1]);
            edges.push_back(e);
        }
        return make_diagram(j.value("name", std::string{}),
                            surface_from_name(j.value("surface", "auto")),
                            std::move(crossings), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(e.what());
    }
}

std::string to_diagram_text(const MulticrossingDiagram& d) {
    nlohmann::ordered_json j;
    j["name"] = d.name();
    j["surface"] = surface_name(d.surface());
    j["crossings"] = nlohmann::ordered_json::array();
    for (const Crossing& c : d.crossings())
        j["crossings"].push_back({{"id", c.id}, {"levels", c.levels}});
    j["edges"] = nlohmann::ordered_json::array();
    for (const EdgeRef& e : d.edges())
        j["edges"].push_back({{e.a.crossing, e.a.slot}, {e.b.crossing, e.b.slot}});
    return j.dump(2) + "\n";
}

std::vector<Face> trace_faces(const MulticrossingDiagram& d) {
    std::vector<Face> faces;
    std::vector<std::vector<bool>> seen;
    for (const Crossing& c : d.crossings())
        seen.emplace_back(c.slot_count(), false);

    for (std::size_t i0 = 0; i0 < d.crossings().size(); ++i0) {
        for (int s0 = 0; s0 < d.crossings()[i0].slot_count(); ++s0) {
            if (seen[i0][s0]) continue;
            Face face;
            std::size_t i = i0;
            int s = s0;
            while (!seen[i][s]) {
                seen[i][s] = true;
                const Crossing& c = d.crossings()[i];
                const int dep = (s + 1) % c.slot_count();
                face.corners.push_back({c.id, s, dep});
                const SlotRef next = d.neighbor({c.id, dep});
                i = static_cast<std::size_t>(d.crossing_index(next.crossing));
                s = next.slot;
            }
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

namespace {

// Connected components of the projection graph, by crossing index.
std::vector<int> graph_components(const MulticrossingDiagram& d) {
    const int n = static_cast<int>(d.crossings().size());
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const EdgeRef& e : d.edges()) {
        const int a = find(d.crossing_index(e.a.crossing));
        const int b = find(d.crossing_index(e.b.crossing));
        parent[a] = b;
    }
    // Relabel components 0.. in order of lowest crossing index.
    std::vector<int> label(n, -1);
    std::vector<int> comp(n);
    int next = 0;
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (label[r] == -1) label[r] = next++;
        comp[i] = label[r];
    }
    return comp;
}

}  // namespace

std::vector<int> genus(const MulticrossingDiagram& d) {
    if (d.crossings().empty()) return {};
    const std::vector<int> comp = graph_components(d);
    const int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> v(ncomp, 0), e(ncomp, 0), f(ncomp, 0);
    for (std::size_t i = 0; i < d.crossings().size(); ++i) ++v[comp[i]];
    for (const EdgeRef& edge : d.edges()) ++e[comp[d.crossing_index(edge.a.crossing)]];
    for (const Face& face : trace_faces(d))
        ++f[comp[d.crossing_index(face.corners.front().crossing)]];

    std::vector<int> g(ncomp);
    for (int k = 0; k < ncomp; ++k) {
        const int chi = v[k] - e[k] + f[k];
        if (chi % 2 != 0 || chi > 2)
            throw ValidationError("inconsistent embedding: component " +
                                  std::to_string(k) + " has Euler characteristic " +
                                  std::to_string(chi));
        g[k] = (2 - chi) / 2;
    }
    return g;
}

int link_component_count(const MulticrossingDiagram& d) {
    const int total = d.slot_total();
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

    int base = 0;
    for (const Crossing& c : d.crossings()) {
        const int n = c.size();
        for (int s = 0; s < n; ++s) unite(base + s, base + s + n);  // through-strand
        for (int s = 0; s < 2 * n; ++s) {
            const SlotRef other = d.neighbor({c.id, s});
            const int oi = d.crossing_index(other.crossing);
            int obase = 0;
            for (int k = 0; k < oi; ++k) obase += d.crossings()[k].slot_count();
            unite(base + s, obase + other.slot);
        }
        base += c.slot_count();
    }
    int count = 0;
    for (int x = 0; x < total; ++x)
        if (find(x) == x) ++count;
    return count;
}

namespace {

MulticrossingDiagram build_trefoil() {
    // Alternating 3-crossing diagram of the trefoil.
    std::vector<Crossing> cs{{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}};
    std::vector<EdgeRef> es{
        {{0, 0}, {1, 3}}, {{0, 1}, {1, 2}}, {{0, 2}, {2, 1}},
        {{0, 3}, {2, 0}}, {{1, 0}, {2, 3}}, {{1, 1}, {2, 2}},
    };
    return make_diagram("trefoil", Surface::Sphere, std::move(cs), std::move(es));
}

MulticrossingDiagram build_fig8() {
    // Alternating 4-crossing diagram of the figure-eight knot.
    std::vector<Crossing> cs{{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}};
    std::vector<EdgeRef> es{
        {{0, 0}, {3, 1}}, {{0, 1}, {2, 2}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}},
        {{1, 0}, {2, 1}}, {{1, 1}, {3, 2}}, {{2, 0}, {3, 3}}, {{2, 3}, {3, 0}},
    };
    return make_diagram("fig8", Surface::Sphere, std::move(cs), std::move(es));
}

MulticrossingDiagram build_fig8_uber() {
    // Petal projection of the figure-eight knot: a single 5-crossing 13524
    // whose ten slot endpoints are joined by five nested-free petal loops.
    std::vector<Crossing> cs{{0, {1, 3, 5, 2, 4}}};
    std::vector<EdgeRef> es{
        {{0, 0}, {0, 1}}, {{0, 2}, {0, 3}}, {{0, 4}, {0, 5}},
        {{0, 6}, {0, 7}}, {{0, 8}, {0, 9}},
    };
    return make_diagram("fig8-ubercrossing", Surface::Sphere, std::move(cs),
                        std::move(es));
}

MulticrossingDiagram build_square_weave() {
    // 2x2 alternating grid on the torus. Crossing (i,j) has id 2i+j.
    // Compass slots: when i+j is even the vertical strand is on top and
    // slots run N,E,S,W; when odd the horizontal strand is on top and the
    // cyclic order starts at E instead.
    std::vector<Crossing> cs{{0, {1, 2}}, {1, {1, 2}}, {2, {1, 2}}, {3, {1, 2}}};
    std::vector<EdgeRef> es{
        {{0, 1}, {1, 2}}, {{1, 0}, {0, 3}},  // east edges, row 0
        {{2, 0}, {3, 3}}, {{3, 1}, {2, 2}},  // east edges, row 1
        {{0, 2}, {2, 3}}, {{2, 1}, {0, 0}},  // south edges, column 0
        {{1, 1}, {3, 0}}, {{3, 2}, {1, 3}},  // south edges, column 1
    };
    return make_diagram("square-weave", Surface::Torus, std::move(cs), std::move(es));
}

MulticrossingDiagram build_triple_weave() {
    // Two 3-crossings of types 123 and 132 on the torus, from the (3^6)
    // triangular tiling with one crossing per alternate row. Slots run
    // clockwise from east: E, SE, SW, W, NW, NE.
    std::vector<Crossing> cs{{0, {1, 2, 3}}, {1, {1, 3, 2}}};
    std::vector<EdgeRef> es{
        {{0, 0}, {0, 3}},  // horizontal loop at crossing 0
        {{1, 0}, {1, 3}},  // horizontal loop at crossing 1
        {{0, 1}, {1, 4}}, {{0, 2}, {1, 5}}, {{0, 4}, {1, 1}}, {{0, 5}, {1, 2}},
    };
    return make_diagram("triple-weave", Surface::Torus, std::move(cs), std::move(es));
}

MulticrossingDiagram build_right_triangle_weave() {
    // One 2-crossing and one 1243 4-crossing on the torus, from the [4.8^2]
    // Laves tiling quotient. The top strand of the 4-crossing passes under
    // the 2-crossing and its bottom strand passes over it.
    std::vector<Crossing> cs{{0, {1, 2}}, {1, {1, 2, 4, 3}}};
    std::vector<EdgeRef> es{
        {{0, 0}, {1, 2}}, {{0, 1}, {1, 4}}, {{0, 2}, {1, 6}},
        {{0, 3}, {1, 0}}, {{1, 1}, {1, 5}}, {{1, 3}, {1, 7}},
    };
    return make_diagram("right-triangle-weave", Surface::Torus, std::move(cs),
                        std::move(es));
}

}  // namespace

std::vector<std::string> builtin_example_names() {
    return {"trefoil", "fig8", "fig8-ubercrossing",
            "square-weave", "triple-weave", "right-triangle-weave"};
}

MulticrossingDiagram builtin_example(std::string_view name) {
    if (name == "trefoil") return build_trefoil();
    if (name == "fig8") return build_fig8();
    if (name == "fig8-ubercrossing") return build_fig8_uber();
    if (name == "square-weave") return build_square_weave();
    if (name == "triple-weave") return build_triple_weave();
    if (name == "right-triangle-weave") return build_right_triangle_weave();
    throw ValidationError("unknown example \"" + std::string(name) + "\"");
}

}  // namespace bipyr
