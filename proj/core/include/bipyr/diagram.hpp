#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "bipyr/errors.hpp"

namespace bipyr {

enum class Surface { Sphere, Torus, Auto };

std::string surface_name(Surface s);
Surface surface_from_name(std::string_view name);

// One n-crossing. levels[j] is the level (1 = top, n = bottom) of the strand
// at cyclic position j, positions read clockwise from above. The 2n boundary
// slots are numbered clockwise; slot k lies on the strand at position k % n,
// so the two endpoints of strand j are slots j and j + n.
struct Crossing {
    int id = 0;
    std::vector<int> levels;

    int size() const { return static_cast<int>(levels.size()); }
    int slot_count() const { return 2 * size(); }
    int strand_at(int slot) const { return slot % size(); }
    int level_at_slot(int slot) const { return levels[slot % size()]; }

    bool operator==(const Crossing&) const = default;
};

// Rotates the cyclic strand order so the top strand (level 1) sits at
// position 0. Returns the rotation offset r applied: new position j held
// old position (j + r) % n, and a slot s becomes (s - r) mod 2n.
int canonicalize(Crossing& c);

// Throws ValidationError unless levels is a permutation of 1..n with n >= 2.
void validate_levels(const Crossing& c);

struct SlotRef {
    int crossing = 0;  // crossing id
    int slot = 0;      // 0 .. 2n-1, clockwise
    auto operator<=>(const SlotRef&) const = default;
};

struct EdgeRef {
    SlotRef a, b;
    bool operator==(const EdgeRef&) const = default;
};

// A corner of a traced face: arrive at `arrival`, leave at `departure`
// (= arrival + 1 mod 2n) of crossing `crossing` (an id).
struct FaceCorner {
    int crossing = 0;
    int arrival = 0;
    int departure = 0;
    bool operator==(const FaceCorner&) const = default;
};

struct Face {
    std::vector<FaceCorner> corners;
};

// An immutable multicrossing diagram. Construct through make_diagram or
// parse_diagram; both canonicalize crossings and validate all invariants.
class MulticrossingDiagram {
public:
    const std::string& name() const { return name_; }
    Surface surface() const { return surface_; }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<EdgeRef>& edges() const { return edges_; }

    // Rotation applied to each crossing during canonicalization, by index.
    const std::vector<int>& rotation_offsets() const { return rotations_; }

    int crossing_index(int id) const;
    const Crossing& crossing_by_id(int id) const { return crossings_[crossing_index(id)]; }

    // The slot paired with `s` by the diagram's edge matching.
    SlotRef neighbor(SlotRef s) const;

    // Total slot endpoints = 2 * edge count.
    int slot_total() const;

private:
    friend MulticrossingDiagram make_diagram(std::string, Surface,
                                             std::vector<Crossing>,
                                             std::vector<EdgeRef>);
    MulticrossingDiagram() = default;
    void validate_and_build();

    std::string name_;
    Surface surface_ = Surface::Auto;
    std::vector<Crossing> crossings_;
    std::vector<EdgeRef> edges_;
    std::vector<int> rotations_;
    std::vector<int> slot_offset_;  // flat slot index base per crossing
    std::vector<int> match_;        // flat slot -> flat slot
};

MulticrossingDiagram make_diagram(std::string name, Surface surface,
                                  std::vector<Crossing> crossings,
                                  std::vector<EdgeRef> edges);

// Parses the JSON diagram file format. Throws ParseError on malformed text
// and ValidationError on invariant violations.
MulticrossingDiagram parse_diagram(std::string_view text);

// Serializes back to the diagram file format.
std::string to_diagram_text(const MulticrossingDiagram& d);

// Traces all faces of the projection graph from the rotation system.
// Arrive at slot s, depart at (s+1) mod 2n, follow the matched edge.
// Deterministic: faces start at the lowest unvisited (crossing, slot).
std::vector<Face> trace_faces(const MulticrossingDiagram& d);

// Genus of each connected component of the projection graph, in order of
// each component's lowest crossing index. Throws ValidationError if the
// result contradicts the declared surface.
std::vector<int> genus(const MulticrossingDiagram& d);

// Number of link components (orbits of edge-following alternated with the
// through-crossing involution slot <-> slot + n).
int link_component_count(const MulticrossingDiagram& d);

std::vector<std::string> builtin_example_names();
MulticrossingDiagram builtin_example(std::string_view name);

}  // namespace bipyr
