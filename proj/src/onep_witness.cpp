#include <algorithm>
#include <deque>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/biconnected_components.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/chrobak_payne_drawing.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_canonical_ordering.hpp>

#include "crossforge/onep.hpp"

namespace crossforge {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

struct GridCoord {
    std::size_t x = 0, y = 0;
};

// Counterclockwise angular order of direction vectors, starting at +x.
bool ccw_before(const Point& a, const Point& b) {
    auto half = [](const Point& d) { return d.y > 0 || (d.y == 0 && d.x > 0) ? 0 : 1; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a.x * b.y - a.y * b.x > 0;
}

Point first_direction(const Graph& g, const Drawing& d, int e, VertexId from) {
    const auto& r = d.route[e];
    if (g.edge(e).u == from) return Point{r[1].x - r[0].x, r[1].y - r[0].y};
    size_t n = r.size();
    return Point{r[n - 2].x - r[n - 1].x, r[n - 2].y - r[n - 1].y};
}

// Outward normal of the boundary side through both points.
Point side_normal(const Point& a, const Point& b, const Rat& W, const Rat& H) {
    if (a.x == 0 && b.x == 0) return Point{-1, 0};
    if (a.x == W && b.x == W) return Point{1, 0};
    if (a.y == 0 && b.y == 0) return Point{0, -1};
    if (a.y == H && b.y == H) return Point{0, 1};
    throw std::logic_error("consecutive anchors are not on one side");
}

Point reflect_out(const Point& dir, const Point& at, const Rat& W, const Rat& H) {
    if (at.x == 0 || at.x == W) return Point{-dir.x, dir.y};
    if (at.y == 0 || at.y == H) return Point{dir.x, -dir.y};
    throw std::logic_error("anchor is not on the boundary");
}

Point midpoint(const Point& a, const Point& b) { return Point{(a.x + b.x) / 2, (a.y + b.y) / 2}; }

Point toward(const Point& m, const Point& c, const Rat& eps) {
    return Point{m.x + eps * (c.x - m.x), m.y + eps * (c.y - m.y)};
}

bool crosses_inside(const Point& p, const Point& q, const Point& a, const Point& b) {
    return orientation(a, b, p) * orientation(a, b, q) < 0 && orientation(p, q, a) * orientation(p, q, b) < 0;
}

}  // namespace

Drawing near_planar_1p_witness(const NearPlanarOneP& np) {
    const OnePInstance& inst = np.base;
    const Graph& G = inst.G;
    const Graph& Gp = np.G;
    const Rat W(3 * inst.n + 1), Hh(3 * inst.m + 1);

    // blue and red each drawn crossing-free in their own disk
    OnePLayout lay;
    lay.q.assign(inst.n + 1, true);
    lay.t.assign(inst.m + 1, 1);
    Drawing d0 = layout_1p_drawing(inst, lay, false);
    RotationSystem r0 = extract_rotation_system(d0, G);

    // H = G' without the inner vertices of the 9-path; ids are a prefix of G'
    std::vector<char> on_path(Gp.num_vertices(), 0);
    for (size_t k = 1; k + 1 < np.path_vertices.size(); ++k) on_path[np.path_vertices[k]] = 1;
    Graph H;
    for (VertexId v = 0; v < Gp.num_vertices(); ++v)
        if (!on_path[v]) H.add_vertex(Gp.vertex(v).name, Gp.vertex(v).id);
    std::vector<char> is_path_edge(Gp.num_edges(), 0);
    for (int e : np.path_edges) is_path_edge[e] = 1;
    for (int e = 0; e < Gp.num_edges(); ++e) {
        if (is_path_edge[e]) continue;
        if (H.num_edges() != e) throw std::logic_error("path edges are not a suffix");
        H.add_edge(Gp.edge(e).u, Gp.edge(e).v);
    }

    // rotation system: B inside C, R mirrored to the outside
    std::map<int, std::pair<int, VertexId>> cycle_info;  // edge -> (strand, neighbouring anchor)
    for (size_t i = 0; i < np.cycle_edges.size(); i += 2) {
        int k = static_cast<int>((i / 2) % 5) + 1;
        int e1 = np.cycle_edges[i], e2 = np.cycle_edges[i + 1];
        VertexId a = Gp.edge(e1).u, b = Gp.edge(e2).v;
        cycle_info[e1] = {k, b};
        cycle_info[e2] = {k, a};
    }
    RotationSystem rot;
    rot.order.assign(H.num_vertices(), {});
    for (VertexId v = 0; v < H.num_vertices(); ++v) {
        if (v >= G.num_vertices()) {
            for (auto [w, e] : H.incident(v)) rot.order[v].push_back(e);
            continue;
        }
        if (!G.is_anchor(v)) {
            rot.order[v] = r0.order[v];
            if (inst.vertex_color[v] == 1) std::reverse(rot.order[v].begin(), rot.order[v].end());
            continue;
        }
        const Point& at = *d0.pos[v];
        std::vector<std::pair<Point, int>> dirs;
        for (auto [w, e] : H.incident(v)) {
            auto ci = cycle_info.find(e);
            if (ci == cycle_info.end()) {
                Point dir = first_direction(G, d0, e, v);
                if (inst.edge_color[e] == 1) dir = reflect_out(dir, at, W, Hh);
                dirs.push_back({dir, e});
                continue;
            }
            const Point& other = *d0.pos[ci->second.second];
            Point t{other.x - at.x, other.y - at.y};
            Rat len = abs(t.x) + abs(t.y);
            Point nrm = side_normal(at, other, W, Hh);
            Rat tilt(ci->second.first, 10);
            dirs.push_back({Point{t.x / len + tilt * nrm.x, t.y / len + tilt * nrm.y}, e});
        }
        std::sort(dirs.begin(), dirs.end(), [](const auto& a, const auto& b) { return ccw_before(a.first, b.first); });
        for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) rot.order[v].push_back(it->second);
    }
    if (!is_plane_rotation(H, rot)) throw std::logic_error("witness rotation system is not planar");

    // triangulate in that embedding and draw it straight-line
    BGraph bg(H.num_vertices());
    std::vector<BEdge> by_id;
    for (int e = 0; e < H.num_edges(); ++e) {
        auto [be, ok] = boost::add_edge(H.edge(e).u, H.edge(e).v, bg);
        (void)ok;
        put(boost::edge_index, bg, be, e);
        by_id.push_back(be);
    }
    {
        std::vector<std::size_t> comp(H.num_edges());
        auto cmap = boost::make_iterator_property_map(comp.begin(), get(boost::edge_index, bg));
        if (boost::biconnected_components(bg, cmap) != 1) throw std::logic_error("G' minus the path is not biconnected");
    }
    std::vector<std::vector<BEdge>> emb(H.num_vertices());
    for (VertexId v = 0; v < H.num_vertices(); ++v)
        for (int e : rot.order[v]) emb[v].push_back(by_id[e]);
    boost::make_maximal_planar(bg, &emb[0]);
    int next = 0;
    for (auto [it, end] = boost::edges(bg); it != end; ++it) put(boost::edge_index, bg, *it, next++);
    std::vector<std::vector<BEdge>> tri(H.num_vertices());
    if (!boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                             boost::boyer_myrvold_params::embedding = &tri[0]))
        throw std::logic_error("triangulation is not planar");
    auto tri_map = boost::make_iterator_property_map(tri.begin(), get(boost::vertex_index, bg));
    std::vector<std::size_t> ordering;
    boost::planar_canonical_ordering(bg, tri_map, std::back_inserter(ordering));
    std::vector<GridCoord> coords(H.num_vertices());
    auto coord_map = boost::make_iterator_property_map(coords.begin(), get(boost::vertex_index, bg));
    boost::chrobak_payne_straight_line_drawing(bg, tri_map, ordering.begin(), ordering.end(), coord_map);

    // T: H plus the triangulating edges (ids of H kept as a prefix)
    Graph T;
    for (const auto& v : H.vertices()) T.add_vertex(v.name, v.id);
    for (const auto& e : H.edges()) T.add_edge(e.u, e.v);
    for (auto [it, end] = boost::edges(bg); it != end; ++it) {
        VertexId a = static_cast<VertexId>(boost::source(*it, bg)), b = static_cast<VertexId>(boost::target(*it, bg));
        if (T.find_edge(a, b) < 0) T.add_edge(a, b);
    }
    Drawing dt = Drawing::for_graph(T);
    for (VertexId v = 0; v < T.num_vertices(); ++v)
        dt.pos[v] = Point{Rat(static_cast<long>(coords[v].x)), Rat(static_cast<long>(coords[v].y))};
    for (int e = 0; e < T.num_edges(); ++e) dt.set_straight(T, e);
    CombinatorialEmbedding temb = embedding_from_rotation(T, extract_rotation_system(dt, T));

    // fewest crossings of real edges from a face at u(1,1) to one at v(0,0)
    VertexId src = np.path_vertices.front(), dst = np.path_vertices.back();
    int F = temb.num_faces();
    std::vector<long> dist(F, -1);
    std::vector<int> via_dart(F, -1);
    std::vector<char> is_target(F, 0);
    std::deque<int> q;
    for (int f = 0; f < F; ++f) {
        auto vs = face_vertices(T, temb, f);
        if (std::find(vs.begin(), vs.end(), dst) != vs.end()) is_target[f] = 1;
        if (std::find(vs.begin(), vs.end(), src) != vs.end()) {
            dist[f] = 0;
            q.push_back(f);
        }
    }
    std::vector<char> done(F, 0);
    int goal = -1;
    while (!q.empty()) {
        int f = q.front();
        q.pop_front();
        if (done[f]) continue;
        done[f] = 1;
        if (is_target[f]) {
            goal = f;
            break;
        }
        for (int dart : temb.faces[f]) {
            int g2 = temb.face_of_dart[dart_twin(dart)];
            long w = dart_edge(dart) < H.num_edges() ? 1 : 0;
            if (done[g2] || (dist[g2] >= 0 && dist[g2] <= dist[f] + w)) continue;
            dist[g2] = dist[f] + w;
            via_dart[g2] = dart;
            if (w == 0) q.push_front(g2);
            else q.push_back(g2);
        }
    }
    if (goal < 0) throw std::logic_error("no face route between the path ends");
    std::vector<int> darts;
    for (int f = goal; via_dart[f] >= 0; f = temb.face_of_dart[via_dart[f]]) darts.push_back(via_dart[f]);
    std::reverse(darts.begin(), darts.end());
    int start_face = darts.empty() ? goal : temb.face_of_dart[darts.front()];

    auto centroid = [&](int f) {
        auto vs = face_vertices(T, temb, f);
        Rat sx = 0, sy = 0;
        for (VertexId v : vs) {
            sx += dt.pos[v]->x;
            sy += dt.pos[v]->y;
        }
        return Point{sx / static_cast<long>(vs.size()), sy / static_cast<long>(vs.size())};
    };
    Polyline route{*dt.pos[src], centroid(start_face)};
    std::vector<Rat> crossing_param;
    for (int dart : darts) {
        int a = temb.face_of_dart[dart], b = temb.face_of_dart[dart_twin(dart)];
        int e = dart_edge(dart);
        const Point &p = *dt.pos[T.edge(e).u], &r = *dt.pos[T.edge(e).v];
        Point m = midpoint(p, r), ca = centroid(a), cb = centroid(b);
        Rat eps(1, 4);
        while (!crosses_inside(toward(m, ca, eps), toward(m, cb, eps), p, r)) eps /= 2;
        Point w1 = toward(m, ca, eps), w2 = toward(m, cb, eps);
        route.push_back(w1);
        if (e < H.num_edges()) {
            Point dw{w2.x - w1.x, w2.y - w1.y}, de{r.x - p.x, r.y - p.y}, off{p.x - w1.x, p.y - w1.y};
            Rat f = (off.x * de.y - off.y * de.x) / (dw.x * de.y - dw.y * de.x);
            crossing_param.push_back(Rat(static_cast<long>(route.size()) - 1) + f);
        }
        route.push_back(w2);
        route.push_back(cb);
    }
    route.push_back(*dt.pos[dst]);

    // crossings per path edge: the marked edge takes two, the rest one each
    int K = static_cast<int>(crossing_param.size());
    int len = static_cast<int>(np.path_edges.size());
    int marked = static_cast<int>(std::find(np.path_edges.begin(), np.path_edges.end(), np.e) - np.path_edges.begin());
    if (K > len + 1) throw std::logic_error("witness route needs " + std::to_string(K) + " crossings");
    std::vector<int> share(len, 0);
    share[marked] = std::min(2, K);
    int left = K - share[marked];
    for (int j = 0; j < len && left > 0; ++j)
        if (j != marked) {
            share[j] = 1;
            --left;
        }
    // vertex j sits after the crossings of edges 0..j-1 and before the next one
    auto at = [&](const Rat& p) {
        long s = 0;
        {
            mpz_class fl;
            mpz_fdiv_q(fl.get_mpz_t(), p.get_num_mpz_t(), p.get_den_mpz_t());
            s = fl.get_si();
        }
        if (s >= static_cast<long>(route.size()) - 1) return route.back();
        Rat f = p - s;
        return Point{route[s].x + f * (route[s + 1].x - route[s].x), route[s].y + f * (route[s + 1].y - route[s].y)};
    };
    Rat L(static_cast<long>(route.size()) - 1);
    std::vector<Rat> params{Rat(0)};
    int used = 0;
    for (int j = 1; j < len; ++j) {
        used += share[j - 1];
        Rat lo = used == 0 ? Rat(0) : crossing_param[used - 1];
        Rat hi = used < K ? crossing_param[used] : L;
        // vertices sharing a gap are spread evenly across it
        int same = 0, rank = 0;
        for (int k = 1; k < len; ++k) {
            int before = 0;
            for (int x = 0; x < k; ++x) before += share[x];
            if (before == used) {
                ++same;
                if (k < j) ++rank;
            }
        }
        params.push_back(lo + (hi - lo) * Rat(rank + 1, same + 1));
    }
    params.push_back(L);

    Drawing d = Drawing::for_graph(Gp);
    for (VertexId v = 0; v < H.num_vertices(); ++v) d.pos[v] = dt.pos[v];
    for (int e = 0; e < H.num_edges(); ++e) d.set_straight(Gp, e);
    for (int j = 1; j < len; ++j) d.pos[np.path_vertices[j]] = at(params[j]);
    for (int j = 0; j < len; ++j) {
        Polyline walk{at(params[j])};
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), params[j].get_num_mpz_t(), params[j].get_den_mpz_t());
        for (long b = fl.get_si() + 1; b < params[j + 1]; ++b) walk.push_back(route[b]);
        walk.push_back(at(params[j + 1]));
        d.set_route(Gp, np.path_vertices[j], np.path_vertices[j + 1], walk);
    }
    return d;
}

}  // namespace crossforge
