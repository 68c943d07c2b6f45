#pragma once

// Lagrangian-projection knot diagrams given by a signed Gauss code.
//
// Around a crossing the four half-edges are numbered counterclockwise:
//   positive crossing: 0 over-out, 1 under-out, 2 over-in, 3 under-in
//   negative crossing: 0 over-out, 1 under-in, 2 over-in, 3 under-out
// Quadrant j lies between half-edges j and j+1. Quadrants 0 and 2 sweep from
// the over strand counterclockwise to the under strand and carry the positive
// Reeb sign. Edge i runs from Gauss entry i to entry i+1 (cyclically) and its
// turning is the change of tangent direction along it in quarter turns;
// strands cross at right angles, so every face of a planar diagram turns
// by +4 (bounded) or -4 (the unbounded face) counting +1 per corner.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lch/dga.hpp"

namespace lch {

struct DiagramCrossing {
    std::string name;
    int grading = 0;
    int sign = 0;  // +1 or -1
};

struct GaussEntry {
    std::size_t crossing = 0;
    bool over = false;
};

struct LagrangianDiagram {
    std::vector<DiagramCrossing> crossings;
    std::vector<GaussEntry> gauss;
    std::vector<int> turning;          // one per edge; empty if not supplied
    std::vector<std::string> corners;  // declared quadrant patterns, "" when absent
};

void validate(const LagrangianDiagram& d);

int tb(const LagrangianDiagram& d);
int rotation(const LagrangianDiagram& d);
// Reeb signs of quadrants 0..3, e.g. "+-+-".
std::string quadrant_pattern(const LagrangianDiagram& d, std::size_t crossing);

struct PlanarMap {
    // slot_edge[c][s] = 2*edge + (0 if the slot is the edge's start else 1)
    std::vector<std::array<std::size_t, 4>> slot_edge;
    // dart 2e runs forward along edge e, dart 2e+1 backward
    std::vector<std::size_t> face_of_dart;
    std::vector<std::vector<std::size_t>> faces;  // dart cycles
    std::vector<int> face_turning;                // empty without turning data
    std::size_t outer = SIZE_MAX;                  // SIZE_MAX without turning data
    bool planar = false;
};

PlanarMap embed(const LagrangianDiagram& d);

struct DiskCount {
    std::size_t positive = 0;
    std::vector<std::size_t> word;  // negative corners, counterclockwise from the positive corner
};

struct DiskEnumeration {
    std::vector<DiskCount> disks;
    bool cap_hit = false;
    std::size_t walk_cap = 0;
};

// Depth-first boundary walks: go straight or turn left into a negative
// quadrant at every crossing, never reuse a directed edge, close at the
// starting positive quadrant. A closed walk is kept when its tangent turns by
// a full circle and all face winding numbers are non-negative.
DiskEnumeration enumerate_disks(const LagrangianDiagram& d, std::size_t walk_cap = 0);

// Generators in crossing order; modulus 2|rotation|; d from the disk counts.
// Throws if the result fails check_dga.
DGA dga_from_diagram(const LagrangianDiagram& d);
DGA dga_from_disks(const LagrangianDiagram& d, const std::vector<DiskCount>& disks);

LagrangianDiagram reverse(const LagrangianDiagram& d);
LagrangianDiagram mirror(const LagrangianDiagram& d);
LagrangianDiagram rotate_basepoint(const LagrangianDiagram& d, std::size_t shift);

// Removes a negative kink of d1 and splices d2 in along an edge of its
// unbounded face; the two joining edges get the turning that keeps every face
// consistent. tb(result) = tb(d1) + tb(d2) + 1.
LagrangianDiagram connected_sum(const LagrangianDiagram& d1, const LagrangianDiagram& d2);

// The resolved front of the (2, 2k-1) torus knot: crossings a1 (right-cusp
// kink), a2..a{2k} (twist region), a{2k+1} (second kink).
LagrangianDiagram t2k_diagram(int k);

// Text format: "crossing NAME GRADING", "gauss NAME:over+ NAME:under- ...",
// "turning EDGE QUARTER_TURNS", "corners NAME PATTERN".
LagrangianDiagram parse_diagram(std::string_view text);
LagrangianDiagram load_diagram(const std::string& path);
std::string format_diagram(const LagrangianDiagram& d);

}  // namespace lch
