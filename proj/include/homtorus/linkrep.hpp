#pragma once

// Oriented link diagrams: PD codes, braid closures, the Borromean band-sum
// family, linking matrices, arc decomposition.
//
// Crossing convention: edges = (a, b, c, d) counterclockwise starting at the
// incoming under-strand edge a, so c is the outgoing under-strand edge and
// the over-strand joins b and d. sign = +1 exactly when the over-strand runs
// d -> b. Edge labels are numbered consecutively along each component's
// orientation (wrapping once per component), components are indexed by their
// smallest edge label.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "homtorus/errors.hpp"

namespace homtorus {

struct Crossing {
    std::array<int, 4> edges; // (under-in, b, under-out, d), counterclockwise
    int sign = 0;             // +1 iff over-strand runs edges[3] -> edges[1]
    bool operator==(const Crossing&) const = default;
};

struct LinkDiagram {
    std::vector<Crossing> crossings;
    std::map<int, int> edge_component; // edge label -> component index
    int ncomponents = 0;
    bool operator==(const LinkDiagram&) const = default;
};

// orientation/arc data derived from a valid diagram
struct Traversal {
    std::map<int, int> succ;        // next edge along the orientation
    std::map<int, int> arc_of_edge; // edge -> arc id
    std::vector<int> arc_component; // arc id -> component index
    std::vector<int> arc_first_edge;
    struct CrossingArcs {
        int over, under_in, under_out;
    };
    std::vector<CrossingArcs> crossing_arcs; // parallel to crossings
    std::vector<std::vector<int>> component_edges; // cycle order, smallest first
};

// checks structural consistency and returns the traversal; throws
// InconsistentEdges / NonClosedComponent on bad input
Traversal traverse(const LinkDiagram& d);

// validating constructor used by every producer of LinkDiagram
LinkDiagram make_diagram(std::vector<Crossing> crossings,
                         std::map<int, int> edge_component, int ncomponents);

// PD text, e.g. "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"; crossing signs and
// orientations are inferred from the edge numbering
LinkDiagram parse_pd(const std::string& text);

struct BraidWord {
    int strands = 1;
    std::vector<int> letters; // +i / -i for the i-th elementary braid
};

// "s1 s2^-1 s1"; strands < 0 means max index + 1
BraidWord parse_braid(const std::string& text, int strands = -1);

LinkDiagram braid_closure(const BraidWord& b);

// Borromean rings as the closure of (s1 s2^-1)^3, oriented with the braid
LinkDiagram borromean();

// n-fold band sum: closure of ((s1 s2^-1)^3)^n, n >= 1
LinkDiagram band_sum_borromean(int n);

// symmetric, zero diagonal; entry (i,j) = signed count of crossings where
// component i passes under component j
std::vector<std::vector<int>> linking_matrix(const LinkDiagram& d);

// same link with the orientation of one component reversed; edges renumbered
LinkDiagram reverse_component(const LinkDiagram& d, int comp);

// relabeled copy: components reordered by comp_perm (new index -> old index),
// each component's starting edge rotated by rot[old index], crossings
// reordered by crossing_perm (new index -> old index)
LinkDiagram relabel_diagram(const LinkDiagram& d,
                            const std::vector<int>& comp_perm,
                            const std::vector<int>& rot,
                            const std::vector<int>& crossing_perm);

std::string diagram_to_json(const LinkDiagram& d);
LinkDiagram diagram_from_json(const std::string& json_text);

} // namespace homtorus
