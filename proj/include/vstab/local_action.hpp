#pragma once

#include "vstab/families.hpp"

#include <string>
#include <vector>

namespace vstab {

enum class LocalKind { Trivial, C2On3, C3, S3, C4, V4, D4, A4, S4, Other };

struct LocalType {
    LocalKind kind = LocalKind::Other;
    std::size_t degree = 0;
    Integer order = 1;
    bool transitive = false;
    std::string name() const; // "D4", "C2^[3]", ..., "other(d,o,transitive)"
};

// Identifies a permutation group of degree <= 4 up to permutation isomorphism.
LocalType identify_local(const PermGroup& p);
LocalKind parse_local_kind(std::string_view name); // throws ParseError

struct LocalActionReport {
    Point vertex = 0;
    std::vector<Point> neighbourhood;
    PermGroup induced; // on positions 0..d-1 of neighbourhood
    Integer stabilizer_order = 1;
    Integer kernel_order = 1;
    LocalType type;
};

// throws VertexOutOfRange
LocalActionReport local_action(const ActedGraph& ag, Point v);

bool is_vertex_transitive(const ActedGraph& ag);
bool is_arc_transitive(const ActedGraph& ag);
// Every vertex: the local action is computed at one vertex per orbit and carried
// to the rest of the orbit by a transversal element, which is checked to map
// the neighbourhoods onto each other.
bool is_locally(const ActedGraph& ag, LocalKind kind);

} // namespace vstab
