#pragma once

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "crossforge/drawing.hpp"
#include "crossforge/embedding.hpp"
#include "crossforge/graph.hpp"
#include "crossforge/sat.hpp"

namespace crossforge {

enum class GadgetKind { X, Pos, Neg };
const char* gadget_kind_name(GadgetKind k);

enum class LinkType { Thick5, Thick2, Path2, Path3 };

// One unit segment of the blue grid together with the parallel paths that
// realize it. Strands are sorted by perpendicular offset, ascending (+y for
// horizontal links, +x for vertical ones).
struct GridLink {
    LinkType type = LinkType::Thick5;
    int x = 0, y = 0;  // lower/left grid point
    bool horizontal = true;
    VertexId a = -1, b = -1;  // grid vertices at (x,y) and the other end
    std::vector<std::vector<VertexId>> strands;  // inner vertices, a -> b
    std::vector<std::vector<int>> strand_edges;
    std::vector<Rat> offset;  // per strand, perpendicular offset of its midpoint
};

struct ThickEdge {
    VertexId u = -1, v = -1;
    std::vector<VertexId> mids;  // five degree-2 vertices
    std::vector<int> edges;
    int link = -1;
};

struct BlueGrid {
    int width = 0, height = 0;  // grid points 0..width x 0..height
    bool boundary_inward = false;
    std::vector<std::vector<VertexId>> at;  // [x][y]
    std::vector<GridLink> links;
    std::map<std::tuple<int, int, bool>, int> link_at;  // (x, y, horizontal)
    std::vector<ThickEdge> thick;

    const GridLink& link(int x, int y, bool horizontal) const;
};

// Kind of the connector at a unit segment of the global grid of n x m tiles.
using KindTable = std::vector<std::vector<GadgetKind>>;  // [i][j], 1-based

// Builds the blue grid of n x m identified tiles into g (labels "u(x,y)").
// boundary_inward: lenses of boundary thick edges bulge into the grid, as
// needed when the boundary vertices are anchors.
BlueGrid build_blue_grid(Graph& g, int n, int m, const KindTable& kinds, bool boundary_inward);
void draw_blue_grid(const Graph& g, const BlueGrid& grid, Drawing& d);
// Face f_(cx,cy) as a polygon through the innermost strands around the cell.
std::vector<Point> cell_polygon(const BlueGrid& grid, const Drawing& d, int cx, int cy);
// Face of the embedding lying inside unit cell (cx, cy).
int cell_face(const Graph& g, const BlueGrid& grid, const CombinatorialEmbedding& emb, int cx, int cy);

struct GadgetTile {
    GadgetKind kind = GadgetKind::X;
    Graph g;
    BlueGrid grid;
    Drawing drawing;
    CombinatorialEmbedding emb;

    int face(int a, int b) const { return cell_face(g, grid, emb, a, b); }
};
GadgetTile build_gadget(GadgetKind kind);

// A subdivided red path. Inner vertices run from `from` to `to`.
struct RedPath {
    std::string key;
    VertexId from = -1, to = -1;
    std::vector<VertexId> inner;
    std::vector<int> edges;
    int tile_i = 0, tile_j = 0;  // owning tile for c/c' paths, 0 otherwise
};

struct RedGraph {
    std::map<std::pair<int, int>, VertexId> lattice;  // v(X,Y)
    std::map<std::pair<int, int>, std::pair<VertexId, VertexId>> centers;  // tile -> (c, c')
    std::vector<RedPath> paths;
    std::map<std::string, int> path_index;
    std::vector<std::string> anchor_names;
};

// Red graph of n x m identified copies of Y into g. With pendants, adds the
// anchor vertices and their 5-paths.
RedGraph build_red_graph(Graph& g, int n, int m, bool pendants);
Graph build_gadget_Y();

struct OnePInstance {
    CnfInstance cnf;
    int n = 0, m = 0;
    Graph G;
    BlueGrid grid;
    RedGraph red;
    KindTable kinds;
    std::vector<int> edge_color;    // 0 blue, 1 red
    std::vector<int> vertex_color;  // 0 blue, 1 red

    Graph blue() const;
    Graph red_graph() const;
    // ThickEdge indices of the 5-thick edges inside tile (i, j), keyed by
    // local (alpha, beta, horizontal).
    std::map<std::tuple<int, int, bool>, int> tile_thick_edges(int i, int j) const;
};

std::map<std::string, Point> onep_anchor_positions(const OnePInstance& inst);
std::vector<Point> onep_boundary(int n, int m);
OnePInstance build_1p_instance(const CnfInstance& cnf);
std::string onep_meta(const OnePInstance& inst);

struct NearPlanarOneP {
    OnePInstance base;
    Graph G;  // G(I) + cycle C + 9-path
    std::vector<int> cycle_edges;
    std::vector<VertexId> path_vertices;  // u(1,1), 8 inner, v(0,0)
    std::vector<int> path_edges;          // 9 edges in order
    int e = -1;                           // marked edge
};
NearPlanarOneP near_planar_1p_instance(const CnfInstance& cnf);
// Drawing of G' with B inside C, R outside, and the 9-path added.
Drawing near_planar_1p_witness(const NearPlanarOneP& np);
std::string near_planar_1p_meta(const NearPlanarOneP& np);

// ---- tile templates and certificates ----

struct TemplatePath {
    std::string from, to;  // node names: c, c', v(a,b)
    int strand = 0;
    std::vector<Point> via;  // bends between the endpoints
};

struct TemplatePort {
    char side = 'W';  // W = v(0,1), E = v(2,1), S = v(1,0), N = v(1,2)
    int index = 0;
    Point at;
};

struct TileTemplate {
    std::string name;
    std::vector<GadgetKind> kinds;  // kinds the drawing is valid for
    std::map<std::string, Point> nodes;  // c, c'
    std::map<std::string, std::pair<int, int>> place;  // v(a,b) -> face cell
    std::vector<TemplatePath> paths;
    std::vector<TemplatePort> ports;
};

TileTemplate parse_template(const std::string& text);
// Shipped templates as data (embedded at build time).
const std::vector<std::string>& shipped_template_names();
std::string shipped_template_text(const std::string& name);
TileTemplate shipped_template(const std::string& name);

TileTemplate mirror_template_x(const TileTemplate& t);  // alpha -> 3 - alpha
TileTemplate mirror_template_y(const TileTemplate& t);  // beta -> 3 - beta

// Template and kind for one tile of the certificate.
struct TileChoice {
    TileTemplate tpl;
    std::string description;
};
TileChoice choose_tile(const OnePInstance& inst, const std::vector<bool>& q, const std::vector<int>& t, int i,
                       int j);

struct OnePLayout {
    std::vector<bool> q;  // 1-based
    std::vector<int> t;   // 1-based
};
OnePLayout onep_certificate_layout(const CnfInstance& cnf, const Assignment& a);
// Red drawn through the chosen tile templates. With check_kinds false the
// template/kind compatibility is not enforced and red is subdivided without
// regard to blue; only the red part of such a drawing is meaningful.
Drawing layout_1p_drawing(const OnePInstance& inst, const OnePLayout& layout, bool check_kinds = true);
Drawing generate_1p_certificate(const OnePInstance& inst, const Assignment& a);

struct TemplateCheck {
    std::string name;  // template + variant + kind
    bool ok = false;
    std::string reason;
    std::map<std::string, std::pair<int, int>> faces;  // branch vertex -> cell
};
// Instantiates a template over a standalone gadget and validates
// compliance, 1-planarity and the declared face placements.
TemplateCheck check_template(const TileTemplate& tpl, GadgetKind kind, const std::string& variant);

struct LemmaCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};
std::vector<LemmaCheck> check_gadget_lemmas();

}  // namespace crossforge
