#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crossforge/embedding.hpp"
#include "crossforge/graph.hpp"

namespace crossforge {

using Rat = mpq_class;

struct Point {
    Rat x, y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
    bool operator<(const Point& o) const { return x != o.x ? x < o.x : y < o.y; }
};

using Polyline = std::vector<Point>;

Rat parse_rat(const std::string& tok);   // "3", "-7/2"
std::string format_rat(const Rat& r);    // canonical p/q or integer

class DrawingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Positions are indexed by dense VertexId; routes by edge id and run from
// edge(e).u to edge(e).v including both endpoints.
struct Drawing {
    std::vector<std::optional<Point>> pos;
    std::vector<Polyline> route;
    std::vector<Point> boundary;  // counterclockwise convex polygon, may be empty

    static Drawing for_graph(const Graph& g);
    void set_straight(const Graph& g, int e);
    // Sets route of the edge between u and v given as a walk from u to v.
    void set_route(const Graph& g, VertexId u, VertexId v, Polyline walk);
};

enum class ColorClass { BlueBlue, RedBlue, RedRed, Other };

struct Crossing {
    int e1, e2;  // e1 < e2
    Point at;
};

struct CrossingReport {
    std::vector<Crossing> crossings;
    Int weighted_total = 0;
    long unweighted_total = 0;
    std::vector<long> participation;  // per edge
    // filled only when edge colors are supplied
    std::map<ColorClass, long> unweighted_by_class;
    std::map<ColorClass, Int> weighted_by_class;
};

// Validates the drawing (endpoints, overlaps, vertex-interior incidences,
// crossings through bends, triple points) and lists every crossing.
// edge_color: optional per-edge 0 = blue, 1 = red, other = uncoloured.
CrossingReport find_crossings(const Drawing& d, const Graph& g, const std::vector<int>* edge_color = nullptr);

struct AnchoredCheck {
    bool ok = false;
    std::string reason;
};
AnchoredCheck verify_anchored(const Drawing& d, const Graph& g);
bool verify_one_planar(const CrossingReport& rep, std::string* offender = nullptr);

// Clockwise order (y axis up) of edges at each vertex by the direction of the
// first route segment.
RotationSystem extract_rotation_system(const Drawing& d, const Graph& g);

std::string serialize_adr(const Drawing& d, const Graph& g);
Drawing parse_adr(const std::string& text, const Graph& g);

struct SvgStyle {
    bool mark_crossings = true;
    int scale = 60;
    std::vector<int> edge_color;  // optional, as in find_crossings
};
std::string emit_svg(const Drawing& d, const Graph& g, const SvgStyle& style = {},
                     const CrossingReport* rep = nullptr);

// Geometry helpers shared by the generators.
int orientation(const Point& a, const Point& b, const Point& c);  // sign of cross product
bool on_segment(const Point& p, const Point& a, const Point& b);   // closed segment
// Point strictly inside / on / outside a counterclockwise convex polygon: 1 / 0 / -1.
int convex_side(const std::vector<Point>& poly, const Point& p);
// Winding-number test for a simple polygon; point must not lie on it.
bool inside_polygon(const std::vector<Point>& poly, const Point& p);

}  // namespace crossforge
