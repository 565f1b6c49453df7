#include <algorithm>
#include <sstream>

#include "crossforge/onep.hpp"

namespace crossforge {

const char* gadget_kind_name(GadgetKind k) {
    switch (k) {
        case GadgetKind::X: return "X";
        case GadgetKind::Pos: return "X_pos";
        case GadgetKind::Neg: return "X_neg";
    }
    return "X";
}

const GridLink& BlueGrid::link(int x, int y, bool horizontal) const {
    auto it = link_at.find({x, y, horizontal});
    if (it == link_at.end()) throw GraphError("no grid link at " + std::to_string(x) + "," + std::to_string(y));
    return links[it->second];
}

namespace {

std::string u_label(int x, int y) { return "u(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
std::string v_label(int X, int Y) { return "v(" + std::to_string(X) + "," + std::to_string(Y) + ")"; }
std::string tile_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

// Type of the unit segment starting at (x, y); tiles are 3 apart.
LinkType link_type(int x, int y, bool horizontal, const KindTable& kinds, int n, int m) {
    int along = horizontal ? x : y, across = horizontal ? y : x;
    if (across % 3 != 2) return LinkType::Thick5;
    if (along % 3 == 0) return LinkType::Thick2;
    if (!horizontal) return LinkType::Path2;
    // horizontal center connectors: u(1,2)-u(2,2) and u(2,2)-u(3,2)
    int j = (y - 2) / 3 + 1;
    int i = along % 3 == 1 ? (x - 1) / 3 + 1 : (x - 2) / 3 + 1;
    if (i < 1 || i > n || j < 1 || j > m) return LinkType::Path2;
    GadgetKind k = kinds[i][j];
    if (along % 3 == 1 && k == GadgetKind::Pos) return LinkType::Path3;
    if (along % 3 == 2 && k == GadgetKind::Neg) return LinkType::Path3;
    return LinkType::Path2;
}

// Perimeter position along the boundary rectangle, clockwise (y up) from the
// bottom of the left side.
Rat clockwise_position(const Point& p, const Rat& W, const Rat& H) {
    if (p.x == 0) return p.y;
    if (p.y == H) return H + p.x;
    if (p.x == W) return H + W + (H - p.y);
    return 2 * H + W + (W - p.x);
}

}  // namespace

BlueGrid build_blue_grid(Graph& g, int n, int m, const KindTable& kinds, bool boundary_inward) {
    BlueGrid grid;
    grid.width = 3 * n + 1;
    grid.height = 3 * m + 1;
    grid.boundary_inward = boundary_inward;
    grid.at.assign(grid.width + 1, std::vector<VertexId>(grid.height + 1, -1));
    for (int x = 0; x <= grid.width; ++x)
        for (int y = 0; y <= grid.height; ++y) grid.at[x][y] = g.add_vertex(u_label(x, y));
    for (int dir = 0; dir < 2; ++dir) {
        bool hor = dir == 0;
        for (int x = 0; x <= grid.width; ++x)
            for (int y = 0; y <= grid.height; ++y) {
                int x2 = hor ? x + 1 : x, y2 = hor ? y : y + 1;
                if (x2 > grid.width || y2 > grid.height) continue;
                GridLink L;
                L.type = link_type(x, y, hor, kinds, n, m);
                L.x = x;
                L.y = y;
                L.horizontal = hor;
                L.a = grid.at[x][y];
                L.b = grid.at[x2][y2];
                std::string base = u_label(x, y) + "-" + u_label(x2, y2);
                int strands = 1, inner = 1;
                if (L.type == LinkType::Thick5) strands = 5;
                if (L.type == LinkType::Thick2) strands = 2;
                if (L.type == LinkType::Path3) inner = 2;
                bool on_boundary = hor ? (y == 0 || y == grid.height) : (x == 0 || x == grid.width);
                for (int k = 1; k <= strands; ++k) {
                    Rat off;
                    if (L.type == LinkType::Thick5) {
                        if (boundary_inward && on_boundary) {
                            bool low = hor ? y == 0 : x == 0;
                            off = low ? Rat(k, 48) : Rat(k - 6, 48);  // ascending either way
                        } else {
                            off = Rat(k - 3, 40);
                        }
                    } else if (L.type == LinkType::Thick2) {
                        off = Rat(2 * k - 3, 40);
                    }
                    std::vector<VertexId> vs;
                    std::vector<int> es;
                    VertexId prev = L.a;
                    for (int s = 1; s <= inner; ++s) {
                        std::string name = L.type == LinkType::Thick5 || L.type == LinkType::Thick2
                                               ? "thk:" + base + ":" + std::to_string(k)
                                               : base + ":" + std::to_string(s);
                        VertexId v = g.add_vertex(name);
                        es.push_back(g.add_edge(prev, v));
                        vs.push_back(v);
                        prev = v;
                    }
                    es.push_back(g.add_edge(prev, L.b));
                    L.strands.push_back(vs);
                    L.strand_edges.push_back(es);
                    L.offset.push_back(off);
                }
                int id = static_cast<int>(grid.links.size());
                if (L.type == LinkType::Thick5) {
                    ThickEdge t;
                    t.u = L.a;
                    t.v = L.b;
                    t.link = id;
                    for (size_t k = 0; k < L.strands.size(); ++k) {
                        t.mids.push_back(L.strands[k][0]);
                        for (int e : L.strand_edges[k]) t.edges.push_back(e);
                    }
                    grid.thick.push_back(t);
                }
                grid.link_at[{x, y, hor}] = id;
                grid.links.push_back(std::move(L));
            }
    }
    return grid;
}

void draw_blue_grid(const Graph& g, const BlueGrid& grid, Drawing& d) {
    for (int x = 0; x <= grid.width; ++x)
        for (int y = 0; y <= grid.height; ++y) d.pos[grid.at[x][y]] = Point{x, y};
    for (const auto& L : grid.links) {
        for (size_t k = 0; k < L.strands.size(); ++k) {
            const auto& vs = L.strands[k];
            for (size_t s = 0; s < vs.size(); ++s) {
                Rat along = vs.size() == 1 ? Rat(1, 2) : Rat(s == 0 ? 7 : 9, 16);
                Rat off = L.offset[k];
                d.pos[vs[s]] = L.horizontal ? Point{L.x + along, L.y + off} : Point{L.x + off, L.y + along};
            }
            for (int e : L.strand_edges[k]) d.set_straight(g, e);
        }
    }
}

std::vector<Point> cell_polygon(const BlueGrid& grid, const Drawing& d, int cx, int cy) {
    // counterclockwise: bottom left->right, right up, top right->left, left down
    std::vector<Point> poly;
    auto side = [&](const GridLink& L, bool last, bool reverse) {
        std::vector<Point> pts{*d.pos[L.a]};
        for (VertexId v : last ? L.strands.back() : L.strands.front()) pts.push_back(*d.pos[v]);
        pts.push_back(*d.pos[L.b]);
        if (reverse) std::reverse(pts.begin(), pts.end());
        poly.insert(poly.end(), pts.begin(), pts.end() - 1);
    };
    side(grid.link(cx, cy, true), true, false);
    side(grid.link(cx + 1, cy, false), false, false);
    side(grid.link(cx, cy + 1, true), false, true);
    side(grid.link(cx, cy, false), true, true);
    return poly;
}

int cell_face(const Graph& g, const BlueGrid& grid, const CombinatorialEmbedding& emb, int cx, int cy) {
    const GridLink& L = grid.link(cx, cy, true);
    VertexId first = L.strands.back().front();
    int e = g.find_edge(L.a, first);
    int d = dart_of(e, g.edge(e).u == L.a);
    return emb.face_of_dart[d];
}

GadgetTile build_gadget(GadgetKind kind) {
    GadgetTile t;
    t.kind = kind;
    KindTable kinds(2, std::vector<GadgetKind>(2, kind));
    t.grid = build_blue_grid(t.g, 1, 1, kinds, false);
    t.drawing = Drawing::for_graph(t.g);
    draw_blue_grid(t.g, t.grid, t.drawing);
    t.emb = embedding_from_rotation(t.g, extract_rotation_system(t.drawing, t.g));
    // below the lowest strand of the bottom-left link
    const GridLink& L = t.grid.link(0, 0, true);
    int e = L.strand_edges.front().front();
    t.emb.outer = t.emb.face_of_dart[dart_of(e, t.g.edge(e).u != L.a)];
    return t;
}

RedGraph build_red_graph(Graph& g, int n, int m, bool pendants) {
    RedGraph R;
    auto add_path = [&](const std::string& key, VertexId a, VertexId b, int len, const std::string& prefix, int ti,
                        int tj) {
        RedPath p;
        p.key = key;
        p.from = a;
        p.to = b;
        p.tile_i = ti;
        p.tile_j = tj;
        VertexId prev = a;
        for (int k = 1; k < len; ++k) {
            VertexId v = g.add_vertex(prefix + ":" + std::to_string(k));
            p.edges.push_back(g.add_edge(prev, v));
            p.inner.push_back(v);
            prev = v;
        }
        p.edges.push_back(g.add_edge(prev, b));
        R.path_index[key] = static_cast<int>(R.paths.size());
        R.paths.push_back(std::move(p));
    };
    for (int X = 0; X <= 2 * n; ++X)
        for (int Y = 0; Y <= 2 * m; ++Y)
            if (X % 2 == 0 || Y % 2 == 0) R.lattice[{X, Y}] = g.add_vertex(v_label(X, Y));
    // doubled 7-paths along lattice segments that avoid tile centers
    for (const auto& [p, v] : R.lattice) {
        auto [X, Y] = p;
        std::vector<std::pair<int, int>> next;
        if (Y % 2 == 0 && X + 1 <= 2 * n) next.push_back({X + 1, Y});
        if (X % 2 == 0 && Y + 1 <= 2 * m) next.push_back({X, Y + 1});
        for (auto q : next) {
            VertexId w = R.lattice.at(q);
            for (int s = 0; s < 2; ++s) {
                std::string key = v_label(X, Y) + "-" + v_label(q.first, q.second) + ":" + std::to_string(s);
                add_path(key, v, w, 7, "y:" + key, 0, 0);
            }
        }
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            std::string ts = tile_str(i, j);
            VertexId c = g.add_vertex("y:c" + ts), c2 = g.add_vertex("y:c'" + ts);
            R.centers[{i, j}] = {c, c2};
            add_path("c" + ts + "-c'" + ts, c, c2, 1, "", i, j);
            int X0 = 2 * (i - 1), Y0 = 2 * (j - 1);
            auto lat = [&](int a, int b) { return std::make_pair(X0 + a, Y0 + b); };
            auto six = [&](const std::string& who, VertexId from, std::pair<int, int> to, int s) {
                std::string key = who + ts + "-" + v_label(to.first, to.second) + ":" + std::to_string(s);
                add_path(key, from, R.lattice.at(to), 6, "y:" + key, i, j);
            };
            six("c", c, lat(0, 1), 0);
            six("c", c, lat(0, 1), 1);
            six("c'", c2, lat(2, 1), 0);
            six("c'", c2, lat(2, 1), 1);
            six("c", c, lat(1, 2), 0);
            six("c", c, lat(1, 0), 0);
            six("c'", c2, lat(1, 2), 0);
            six("c'", c2, lat(1, 0), 0);
        }
    if (pendants) {
        auto pend = [&](const std::string& name, std::pair<int, int> to) {
            VertexId a = g.add_vertex(name);
            R.anchor_names.push_back(name);
            add_path(name, a, R.lattice.at(to), 5, "y:" + name, 0, 0);
        };
        for (int i = 0; i <= n; ++i) {
            pend("a_" + std::to_string(i), {2 * i, 0});
            pend("b_" + std::to_string(i), {2 * i, 2 * m});
        }
        for (int j = 0; j <= m; ++j) {
            pend("c_" + std::to_string(j), {0, 2 * j});
            pend("d_" + std::to_string(j), {2 * n, 2 * j});
            if (j >= 1) {
                pend("c'_" + std::to_string(j), {0, 2 * j - 1});
                pend("d'_" + std::to_string(j), {2 * n, 2 * j - 1});
            }
        }
    }
    return R;
}

Graph build_gadget_Y() {
    Graph g;
    build_red_graph(g, 1, 1, false);
    return g;
}

Graph OnePInstance::blue() const {
    std::vector<int> es;
    for (int e = 0; e < G.num_edges(); ++e)
        if (edge_color[e] == 0) es.push_back(e);
    return edge_subgraph(G, es, {});
}

Graph OnePInstance::red_graph() const {
    std::vector<int> es;
    for (int e = 0; e < G.num_edges(); ++e)
        if (edge_color[e] == 1) es.push_back(e);
    return edge_subgraph(G, es, {});
}

std::map<std::tuple<int, int, bool>, int> OnePInstance::tile_thick_edges(int i, int j) const {
    std::map<std::tuple<int, int, bool>, int> out;
    std::map<int, int> thick_of_link;
    for (int t = 0; t < static_cast<int>(grid.thick.size()); ++t) thick_of_link[grid.thick[t].link] = t;
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            for (bool hor : {true, false}) {
                if ((hor && a == 4) || (!hor && b == 4)) continue;
                auto it = grid.link_at.find({3 * (i - 1) + a, 3 * (j - 1) + b, hor});
                if (it == grid.link_at.end()) continue;
                auto th = thick_of_link.find(it->second);
                if (th != thick_of_link.end()) out[{a, b, hor}] = th->second;
            }
    return out;
}

std::vector<Point> onep_boundary(int n, int m) {
    Rat W(3 * n + 1), H(3 * m + 1);
    return {Point{0, 0}, Point{W, 0}, Point{W, H}, Point{0, H}};
}

std::map<std::string, Point> onep_anchor_positions(const OnePInstance& inst) {
    const int n = inst.n, m = inst.m;
    const Rat W(3 * n + 1), H(3 * m + 1), e(3, 8);
    std::map<std::string, Point> pos;
    for (int x = 0; x <= 3 * n + 1; ++x) {
        pos[u_label(x, 0)] = Point{x, 0};
        pos[u_label(x, 3 * m + 1)] = Point{x, H};
    }
    for (int y = 0; y <= 3 * m + 1; ++y) {
        pos[u_label(0, y)] = Point{0, y};
        pos[u_label(3 * n + 1, y)] = Point{W, y};
    }
    for (int i = 0; i <= n; ++i) {
        pos["a_" + std::to_string(i)] = Point{3 * i + e, 0};
        pos["b_" + std::to_string(i)] = Point{3 * i + e, H};
    }
    for (int j = 0; j <= m; ++j) {
        pos["c_" + std::to_string(j)] = Point{0, 3 * j + e};
        pos["d_" + std::to_string(j)] = Point{W, 3 * j + e};
        if (j >= 1) {
            pos["c'_" + std::to_string(j)] = Point{0, 3 * j - 2 + e};
            pos["d'_" + std::to_string(j)] = Point{W, 3 * j - 1 + e};
        }
    }
    return pos;
}

OnePInstance build_1p_instance(const CnfInstance& cnf) {
    OnePInstance inst;
    inst.cnf = cnf;
    inst.n = cnf.n;
    inst.m = cnf.m();
    if (inst.n < 1 || inst.m < 1) throw GraphError("instance needs at least one variable and one clause");
    inst.kinds.assign(inst.n + 1, std::vector<GadgetKind>(inst.m + 1, GadgetKind::X));
    for (int i = 1; i <= inst.n; ++i)
        for (int j = 1; j <= inst.m; ++j) {
            int p = cnf.polarity(i, j);
            inst.kinds[i][j] = p > 0 ? GadgetKind::Pos : p < 0 ? GadgetKind::Neg : GadgetKind::X;
        }
    inst.grid = build_blue_grid(inst.G, inst.n, inst.m, inst.kinds, true);
    int blue_vertices = inst.G.num_vertices(), blue_edges = inst.G.num_edges();
    inst.red = build_red_graph(inst.G, inst.n, inst.m, true);
    inst.vertex_color.assign(inst.G.num_vertices(), 1);
    std::fill(inst.vertex_color.begin(), inst.vertex_color.begin() + blue_vertices, 0);
    inst.edge_color.assign(inst.G.num_edges(), 1);
    std::fill(inst.edge_color.begin(), inst.edge_color.begin() + blue_edges, 0);

    auto pos = onep_anchor_positions(inst);
    const Rat W(3 * inst.n + 1), H(3 * inst.m + 1);
    std::vector<std::pair<Rat, VertexId>> keyed;
    for (const auto& [label, p] : pos) keyed.push_back({clockwise_position(p, W, H), inst.G.at(label)});
    std::sort(keyed.begin(), keyed.end());
    std::vector<VertexId> order;
    for (const auto& k : keyed) order.push_back(k.second);
    inst.G.set_anchors(order);
    return inst;
}

std::string onep_meta(const OnePInstance& inst) {
    std::ostringstream out;
    const Graph& g = inst.G;
    out << "meta 1\nparam n " << inst.n << "\nparam m " << inst.m << '\n';
    for (int i = 1; i <= inst.n; ++i)
        for (int j = 1; j <= inst.m; ++j)
            out << "tile " << i << ' ' << j << ' ' << gadget_kind_name(inst.kinds[i][j]) << '\n';
    out << "blue";
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (inst.vertex_color[v] == 0) out << ' ' << g.vertex(v).id;
    out << "\nred";
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (inst.vertex_color[v] == 1) out << ' ' << g.vertex(v).id;
    out << '\n';
    return out.str();
}

NearPlanarOneP near_planar_1p_instance(const CnfInstance& cnf) {
    NearPlanarOneP np;
    np.base = build_1p_instance(cnf);
    const Graph& G = np.base.G;
    Graph& H = np.G;
    for (const auto& v : G.vertices()) H.add_vertex(v.name, v.id);
    for (const auto& e : G.edges()) H.add_edge(e.u, e.v, e.w);
    long id = G.num_vertices();
    const auto& A = G.anchors();
    for (size_t i = 0; i < A.size(); ++i) {
        VertexId a = A[i], b = A[(i + 1) % A.size()];
        for (int k = 1; k <= 5; ++k) {
            VertexId mid = H.add_vertex("thk:C:" + G.vertex(a).name + "-" + G.vertex(b).name + ":" + std::to_string(k),
                                        id++);
            np.cycle_edges.push_back(H.add_edge(a, mid));
            np.cycle_edges.push_back(H.add_edge(mid, b));
        }
    }
    VertexId start = G.at(u_label(1, 1)), end = G.at(v_label(0, 0));
    np.path_vertices.push_back(start);
    for (int k = 1; k <= 8; ++k) np.path_vertices.push_back(H.add_vertex("y:p9:" + std::to_string(k), id++));
    np.path_vertices.push_back(end);
    for (int k = 0; k < 9; ++k) np.path_edges.push_back(H.add_edge(np.path_vertices[k], np.path_vertices[k + 1]));
    np.e = np.path_edges[4];
    return np;
}

std::string near_planar_1p_meta(const NearPlanarOneP& np) {
    std::ostringstream out;
    const Graph& g = np.G;
    out << "meta 1\nparam n " << np.base.n << "\nparam m " << np.base.m << "\nmarked "
        << g.vertex(g.edge(np.e).u).id << ':' << g.vertex(g.edge(np.e).v).id << "\npath";
    for (VertexId v : np.path_vertices) out << ' ' << g.vertex(v).id;
    out << '\n';
    return out.str();
}

}  // namespace crossforge
