#pragma once

#include <compare>
#include <string>

#include "ancat/errors.hpp"

namespace ancat {

/// Lattice point of the triangular grid G_m = {(x,y) : x,y >= 0, x+y <= m}.
struct GridPoint {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline bool in_grid(GridPoint p, int m) {
    return p.x >= 0 && p.y >= 0 && p.x + p.y <= m;
}

/// G_m^+ = G_m with both coordinates positive.
inline bool in_grid_plus(GridPoint p, int m) {
    return in_grid(p, m) && p.x > 0 && p.y > 0;
}

/// G_m^* = G_m minus the origin.
inline bool in_grid_star(GridPoint p, int m) {
    return in_grid(p, m) && !(p.x == 0 && p.y == 0);
}

enum class EdgeSide { L, R };

/// Unit grid edge named by its upper-right endpoint.
/// L(p) joins (x-1, y) to p; R(p) joins (x, y-1) to p.
struct GridEdge {
    GridPoint anchor;
    EdgeSide side = EdgeSide::L;

    GridEdge() = default;
    GridEdge(GridPoint anchor, EdgeSide side) : anchor(anchor), side(side) {
        if (side == EdgeSide::L && anchor.x < 1)
            throw DomainError("L-edge requires x >= 1");
        if (side == EdgeSide::R && anchor.y < 1)
            throw DomainError("R-edge requires y >= 1");
    }

    GridPoint other_end() const {
        return side == EdgeSide::L ? GridPoint{anchor.x - 1, anchor.y}
                                   : GridPoint{anchor.x, anchor.y - 1};
    }

    friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

inline GridEdge left_edge(GridPoint p) { return GridEdge(p, EdgeSide::L); }
inline GridEdge right_edge(GridPoint p) { return GridEdge(p, EdgeSide::R); }

inline std::string to_string(GridPoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

inline std::string to_string(const GridEdge& e) {
    return std::string(e.side == EdgeSide::L ? "L" : "R") + to_string(e.anchor);
}

} // namespace ancat
