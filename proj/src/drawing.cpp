#include "crossforge/drawing.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace crossforge {

Rat parse_rat(const std::string& tok) {
    Rat r;
    auto bad = [&] { return DrawingError("bad coordinate '" + tok + "'"); };
    if (tok.empty()) throw bad();
    auto slash = tok.find('/');
    auto digits_ok = [](const std::string& s, bool sign) {
        size_t i = (sign && !s.empty() && s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!digits_ok(tok, true)) throw bad();
    } else {
        if (!digits_ok(tok.substr(0, slash), true) || !digits_ok(tok.substr(slash + 1), false)) throw bad();
    }
    if (r.set_str(tok, 10) != 0) throw bad();
    if (r.get_den() == 0) throw bad();
    r.canonicalize();
    return r;
}

std::string format_rat(const Rat& r) { return r.get_str(10); }

Drawing Drawing::for_graph(const Graph& g) {
    Drawing d;
    d.pos.resize(g.num_vertices());
    d.route.resize(g.num_edges());
    return d;
}

void Drawing::set_straight(const Graph& g, int e) {
    route.at(e) = {*pos.at(g.edge(e).u), *pos.at(g.edge(e).v)};
}

void Drawing::set_route(const Graph& g, VertexId u, VertexId v, Polyline walk) {
    int e = g.find_edge(u, v);
    if (e < 0) throw DrawingError("no edge " + g.vertex(u).name + "-" + g.vertex(v).name);
    if (g.edge(e).u != u) std::reverse(walk.begin(), walk.end());
    route.at(e) = std::move(walk);
}

int orientation(const Point& a, const Point& b, const Point& c) {
    Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sgn(v);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

int convex_side(const std::vector<Point>& poly, const Point& p) {
    bool on = false;
    for (size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        int o = orientation(a, b, p);
        if (o < 0) return -1;
        if (o == 0) {
            if (!on_segment(p, a, b)) return -1;
            on = true;
        }
    }
    return on ? 0 : 1;
}

bool inside_polygon(const std::vector<Point>& poly, const Point& p) {
    bool in = false;
    for (size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
        const Point& a = poly[i];
        const Point& b = poly[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            // x coordinate of the edge at height p.y compared with p.x
            Rat x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) in = !in;
        }
    }
    return in;
}

namespace {

struct Seg {
    int edge;
    int index;  // segment index within the route
    Point a, b;
    Rat minx, maxx, miny, maxy;
};

std::string edge_name(const Graph& g, int e) {
    return g.vertex(g.edge(e).u).name + "-" + g.vertex(g.edge(e).v).name;
}

std::string point_str(const Point& p) { return "(" + format_rat(p.x) + ", " + format_rat(p.y) + ")"; }

ColorClass classify(const std::vector<int>* color, int e1, int e2) {
    if (!color) return ColorClass::Other;
    int a = (*color)[e1], b = (*color)[e2];
    if (a == 0 && b == 0) return ColorClass::BlueBlue;
    if (a == 1 && b == 1) return ColorClass::RedRed;
    if ((a == 0 && b == 1) || (a == 1 && b == 0)) return ColorClass::RedBlue;
    return ColorClass::Other;
}

void validate_basic(const Drawing& d, const Graph& g) {
    if (static_cast<int>(d.pos.size()) != g.num_vertices() || static_cast<int>(d.route.size()) != g.num_edges())
        throw DrawingError("drawing does not match graph size");
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (!d.pos[v]) throw DrawingError("vertex " + g.vertex(v).name + " has no position");
    std::vector<Point> pts;
    for (VertexId v = 0; v < g.num_vertices(); ++v) pts.push_back(*d.pos[v]);
    std::vector<int> ord(pts.size());
    for (size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return pts[a] < pts[b]; });
    for (size_t i = 1; i < ord.size(); ++i)
        if (pts[ord[i]] == pts[ord[i - 1]])
            throw DrawingError("vertices " + g.vertex(ord[i - 1]).name + " and " + g.vertex(ord[i]).name +
                               " share position " + point_str(pts[ord[i]]));
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& r = d.route[e];
        if (r.size() < 2) throw DrawingError("edge " + edge_name(g, e) + " has no route");
        if (r.front() != *d.pos[g.edge(e).u] || r.back() != *d.pos[g.edge(e).v])
            throw DrawingError("route of edge " + edge_name(g, e) + " does not end at its vertices");
        for (size_t i = 1; i < r.size(); ++i)
            if (r[i] == r[i - 1]) throw DrawingError("edge " + edge_name(g, e) + " has a zero-length segment");
    }
}

}  // namespace

CrossingReport find_crossings(const Drawing& d, const Graph& g, const std::vector<int>* edge_color) {
    validate_basic(d, g);
    std::vector<Seg> segs;
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& r = d.route[e];
        for (size_t i = 1; i < r.size(); ++i) {
            Seg s{e, static_cast<int>(i - 1), r[i - 1], r[i], 0, 0, 0, 0};
            s.minx = std::min(s.a.x, s.b.x);
            s.maxx = std::max(s.a.x, s.b.x);
            s.miny = std::min(s.a.y, s.b.y);
            s.maxy = std::max(s.a.y, s.b.y);
            segs.push_back(std::move(s));
        }
    }
    std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) { return a.minx < b.minx; });

    // vertex points against segment interiors
    std::vector<std::pair<Point, VertexId>> vpts;
    for (VertexId v = 0; v < g.num_vertices(); ++v) vpts.push_back({*d.pos[v], v});
    std::sort(vpts.begin(), vpts.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& s : segs) {
        auto lo = std::lower_bound(vpts.begin(), vpts.end(), s.minx,
                                   [](const auto& vp, const Rat& x) { return vp.first.x < x; });
        for (auto it = lo; it != vpts.end() && it->first.x <= s.maxx; ++it) {
            const Point& p = it->first;
            if (p.y < s.miny || p.y > s.maxy || !on_segment(p, s.a, s.b)) continue;
            VertexId v = it->second;
            const Edge& ed = g.edge(s.edge);
            bool own_end = (p == s.a || p == s.b) && (v == ed.u || v == ed.v) &&
                           ((v == ed.u && s.index == 0 && p == s.a) ||
                            (v == ed.v && s.index + 2 == static_cast<int>(d.route[s.edge].size()) && p == s.b));
            if (!own_end)
                throw DrawingError("edge " + edge_name(g, s.edge) + " passes through vertex " + g.vertex(v).name +
                                   " at " + point_str(p));
        }
    }

    auto is_vertex_point_of = [&](const Point& p, int e, VertexId* which) {
        const Edge& ed = g.edge(e);
        if (*d.pos[ed.u] == p) {
            *which = ed.u;
            return true;
        }
        if (*d.pos[ed.v] == p) {
            *which = ed.v;
            return true;
        }
        return false;
    };

    CrossingReport rep;
    rep.participation.assign(g.num_edges(), 0);
    for (size_t i = 0; i < segs.size(); ++i) {
        const Seg& s = segs[i];
        for (size_t j = i + 1; j < segs.size() && segs[j].minx <= s.maxx; ++j) {
            const Seg& t = segs[j];
            if (t.maxy < s.miny || t.miny > s.maxy) continue;
            bool same = s.edge == t.edge;
            if (same && std::abs(s.index - t.index) == 1) {
                // consecutive segments: only a backtrack along the same line is invalid
                const Seg& first = s.index < t.index ? s : t;
                const Seg& second = s.index < t.index ? t : s;
                if (orientation(first.a, first.b, second.b) == 0 && on_segment(second.b, first.a, first.b))
                    throw DrawingError("edge " + edge_name(g, s.edge) + " doubles back on itself");
                if (orientation(first.a, first.b, second.b) == 0 && on_segment(first.a, second.a, second.b))
                    throw DrawingError("edge " + edge_name(g, s.edge) + " doubles back on itself");
                continue;
            }
            int d1 = orientation(t.a, t.b, s.a), d2 = orientation(t.a, t.b, s.b);
            int d3 = orientation(s.a, s.b, t.a), d4 = orientation(s.a, s.b, t.b);
            if (d1 == 0 && d2 == 0) {
                // collinear: overlap test on the parametrisation
                bool use_x = s.a.x != s.b.x;
                Rat s0 = use_x ? s.minx : s.miny, s1 = use_x ? s.maxx : s.maxy;
                Rat t0 = use_x ? t.minx : t.miny, t1 = use_x ? t.maxx : t.maxy;
                Rat lo = std::max(s0, t0), hi = std::min(s1, t1);
                if (lo < hi)
                    throw DrawingError("edges " + edge_name(g, s.edge) + " and " + edge_name(g, t.edge) +
                                       " overlap along a segment");
                if (lo > hi) continue;
                // single common point, an endpoint of both
                Point p = (s.a == t.a || s.a == t.b) ? s.a : s.b;
                VertexId vs = -1, vt = -1;
                bool ps = is_vertex_point_of(p, s.edge, &vs), pt = is_vertex_point_of(p, t.edge, &vt);
                if (ps && pt && vs == vt) continue;
                if (same) throw DrawingError("edge " + edge_name(g, s.edge) + " touches itself at " + point_str(p));
                throw DrawingError("edges " + edge_name(g, s.edge) + " and " + edge_name(g, t.edge) +
                                   " touch at bend point " + point_str(p));
            }
            if (d1 * d2 < 0 && d3 * d4 < 0) {
                if (same) throw DrawingError("edge " + edge_name(g, s.edge) + " crosses itself");
                Rat den = (s.b.x - s.a.x) * (t.b.y - t.a.y) - (s.b.y - s.a.y) * (t.b.x - t.a.x);
                Rat num = (t.a.x - s.a.x) * (t.b.y - t.a.y) - (t.a.y - s.a.y) * (t.b.x - t.a.x);
                Rat u = num / den;
                Point p{s.a.x + u * (s.b.x - s.a.x), s.a.y + u * (s.b.y - s.a.y)};
                int e1 = std::min(s.edge, t.edge), e2 = std::max(s.edge, t.edge);
                rep.crossings.push_back({e1, e2, p});
                continue;
            }
            // touching at an endpoint of one segment
            Point p;
            bool touch = false;
            if (d1 == 0 && on_segment(s.a, t.a, t.b)) p = s.a, touch = true;
            else if (d2 == 0 && on_segment(s.b, t.a, t.b)) p = s.b, touch = true;
            else if (d3 == 0 && on_segment(t.a, s.a, s.b)) p = t.a, touch = true;
            else if (d4 == 0 && on_segment(t.b, s.a, s.b)) p = t.b, touch = true;
            if (!touch) continue;
            VertexId vs = -1, vt = -1;
            bool ps = is_vertex_point_of(p, s.edge, &vs), pt = is_vertex_point_of(p, t.edge, &vt);
            if (ps && pt && vs == vt) continue;  // common endpoint
            if (same) throw DrawingError("edge " + edge_name(g, s.edge) + " touches itself at " + point_str(p));
            throw DrawingError("edges " + edge_name(g, s.edge) + " and " + edge_name(g, t.edge) +
                               " meet at bend point " + point_str(p));
        }
    }

    std::sort(rep.crossings.begin(), rep.crossings.end(), [](const Crossing& a, const Crossing& b) {
        if (a.at != b.at) return a.at < b.at;
        return a.e1 != b.e1 ? a.e1 < b.e1 : a.e2 < b.e2;
    });
    for (size_t i = 1; i < rep.crossings.size(); ++i)
        if (rep.crossings[i].at == rep.crossings[i - 1].at)
            throw DrawingError("three or more edges meet at " + point_str(rep.crossings[i].at) + " (" +
                               edge_name(g, rep.crossings[i].e1) + ", " + edge_name(g, rep.crossings[i].e2) +
                               ", " + edge_name(g, rep.crossings[i - 1].e1) + ")");
    std::sort(rep.crossings.begin(), rep.crossings.end(), [](const Crossing& a, const Crossing& b) {
        if (a.e1 != b.e1) return a.e1 < b.e1;
        if (a.e2 != b.e2) return a.e2 < b.e2;
        return a.at < b.at;
    });
    for (const auto& c : rep.crossings) {
        Int w = g.edge(c.e1).w * g.edge(c.e2).w;
        rep.weighted_total += w;
        ++rep.unweighted_total;
        ++rep.participation[c.e1];
        ++rep.participation[c.e2];
        if (edge_color) {
            ColorClass k = classify(edge_color, c.e1, c.e2);
            rep.unweighted_by_class[k] += 1;
            rep.weighted_by_class[k] += w;
        }
    }
    return rep;
}

bool verify_one_planar(const CrossingReport& rep, std::string* offender) {
    for (size_t e = 0; e < rep.participation.size(); ++e)
        if (rep.participation[e] > 1) {
            if (offender) *offender = std::to_string(e);
            return false;
        }
    return true;
}

AnchoredCheck verify_anchored(const Drawing& d, const Graph& g) {
    AnchoredCheck res;
    const auto& B = d.boundary;
    if (B.size() < 3) {
        res.reason = "drawing has no boundary polygon";
        return res;
    }
    for (size_t i = 0; i < B.size(); ++i)
        if (orientation(B[i], B[(i + 1) % B.size()], B[(i + 2) % B.size()]) <= 0) {
            res.reason = "boundary is not a counterclockwise convex polygon";
            return res;
        }
    try {
        validate_basic(d, g);
    } catch (const DrawingError& e) {
        res.reason = e.what();
        return res;
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        int side = convex_side(B, *d.pos[v]);
        if (g.is_anchor(v) && side != 0) {
            res.reason = "anchor " + g.vertex(v).name + " is not on the boundary";
            return res;
        }
        if (!g.is_anchor(v) && side != 1) {
            res.reason = "vertex " + g.vertex(v).name + " is not strictly inside the boundary";
            return res;
        }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& r = d.route[e];
        for (size_t i = 1; i + 1 < r.size(); ++i)
            if (convex_side(B, r[i]) != 1) {
                res.reason = "edge " + edge_name(g, e) + " bends outside the open disk";
                return res;
            }
        for (size_t i = 1; i < r.size(); ++i) {
            if (convex_side(B, r[i - 1]) == 0 && convex_side(B, r[i]) == 0) {
                Point mid{(r[i - 1].x + r[i].x) / 2, (r[i - 1].y + r[i].y) / 2};
                if (convex_side(B, mid) != 1) {
                    res.reason = "edge " + edge_name(g, e) + " runs along the boundary";
                    return res;
                }
            }
        }
    }
    // anchor order along the boundary
    auto param = [&](const Point& p) {
        for (size_t i = 0; i < B.size(); ++i) {
            const Point& a = B[i];
            const Point& b = B[(i + 1) % B.size()];
            if (on_segment(p, a, b) && p != b) {
                Rat t = a.x != b.x ? (p.x - a.x) / (b.x - a.x) : (p.y - a.y) / (b.y - a.y);
                return std::make_pair(static_cast<int>(i), t);
            }
        }
        return std::make_pair(-1, Rat(0));
    };
    const auto& A = g.anchors();
    std::vector<std::pair<std::pair<int, Rat>, VertexId>> placed;
    for (VertexId a : A) placed.push_back({param(*d.pos[a]), a});
    std::sort(placed.begin(), placed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<VertexId> seen;
    for (const auto& p : placed) seen.push_back(p.second);
    int k = static_cast<int>(A.size());
    auto matches = [&](bool reversed) {
        if (k == 0) return true;
        auto it = std::find(seen.begin(), seen.end(), A[0]);
        int s = static_cast<int>(it - seen.begin());
        for (int i = 0; i < k; ++i) {
            int idx = reversed ? ((s - i) % k + k) % k : (s + i) % k;
            if (seen[idx] != A[i]) return false;
        }
        return true;
    };
    if (!matches(false) && !matches(true)) {
        res.reason = "anchors appear on the boundary in an order different from pi";
        return res;
    }
    res.ok = true;
    return res;
}

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi)
int half(const Point& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

}  // namespace

RotationSystem extract_rotation_system(const Drawing& d, const Graph& g) {
    validate_basic(d, g);
    RotationSystem rot;
    rot.order.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<Point, int>> dirs;
        for (auto [y, e] : g.incident(v)) {
            const auto& r = d.route[e];
            Point from = g.edge(e).u == v ? r[0] : r.back();
            Point next = g.edge(e).u == v ? r[1] : r[r.size() - 2];
            dirs.push_back({Point{next.x - from.x, next.y - from.y}, e});
        }
        auto less_ccw = [](const Point& a, const Point& b) {
            int ha = half(a), hb = half(b);
            if (ha != hb) return ha < hb;
            return sgn(a.x * b.y - a.y * b.x) > 0;
        };
        std::sort(dirs.begin(), dirs.end(), [&](const auto& a, const auto& b) { return less_ccw(a.first, b.first); });
        for (size_t i = 1; i < dirs.size(); ++i)
            if (!less_ccw(dirs[i - 1].first, dirs[i].first))
                throw DrawingError("two edges leave " + g.vertex(v).name + " in the same direction");
        for (auto it = dirs.rbegin(); it != dirs.rend(); ++it) rot.order[v].push_back(it->second);
    }
    return rot;
}

std::string serialize_adr(const Drawing& d, const Graph& g) {
    std::ostringstream out;
    out << "adr 1\n";
    if (!d.boundary.empty()) {
        out << "boundary";
        for (const auto& p : d.boundary) out << ' ' << format_rat(p.x) << ' ' << format_rat(p.y);
        out << '\n';
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (d.pos[v])
            out << "pos " << g.vertex(v).id << ' ' << format_rat(d.pos[v]->x) << ' ' << format_rat(d.pos[v]->y)
                << '\n';
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& r = d.route[e];
        if (r.size() <= 2) continue;
        out << "route " << g.vertex(g.edge(e).u).id << ' ' << g.vertex(g.edge(e).v).id;
        for (const auto& p : r) out << ' ' << format_rat(p.x) << ' ' << format_rat(p.y);
        out << '\n';
    }
    return out.str();
}

Drawing parse_adr(const std::string& text, const Graph& g) {
    std::map<long, VertexId> by_id;
    for (VertexId v = 0; v < g.num_vertices(); ++v) by_id[g.vertex(v).id] = v;
    Drawing d = Drawing::for_graph(g);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false;
    auto fail = [&](const std::string& msg) { return DrawingError("adr line " + std::to_string(lineno) + ": " + msg); };
    auto vid = [&](const std::string& t) {
        long id;
        try {
            size_t used = 0;
            id = std::stol(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
        } catch (...) {
            throw fail("bad vertex id '" + t + "'");
        }
        auto it = by_id.find(id);
        if (it == by_id.end()) throw fail("unknown vertex id " + t);
        return it->second;
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (!header) {
            if (tok.size() != 2 || tok[0] != "adr" || tok[1] != "1") throw fail("expected header 'adr 1'");
            header = true;
            continue;
        }
        try {
            if (tok[0] == "boundary") {
                if (tok.size() % 2 != 1 || tok.size() < 7) throw fail("boundary needs at least 3 points");
                d.boundary.clear();
                for (size_t i = 1; i < tok.size(); i += 2) d.boundary.push_back({parse_rat(tok[i]), parse_rat(tok[i + 1])});
            } else if (tok[0] == "pos") {
                if (tok.size() != 4) throw fail("expected 'pos <id> <x> <y>'");
                VertexId v = vid(tok[1]);
                if (d.pos[v]) throw fail("second position for vertex " + tok[1]);
                d.pos[v] = Point{parse_rat(tok[2]), parse_rat(tok[3])};
            } else if (tok[0] == "route") {
                if (tok.size() < 7 || tok.size() % 2 != 1) throw fail("route needs two ids and at least two points");
                VertexId u = vid(tok[1]), v = vid(tok[2]);
                int e = g.find_edge(u, v);
                if (e < 0) throw fail("no edge between " + tok[1] + " and " + tok[2]);
                Polyline pl;
                for (size_t i = 3; i < tok.size(); i += 2) pl.push_back({parse_rat(tok[i]), parse_rat(tok[i + 1])});
                if (g.edge(e).u != u) std::reverse(pl.begin(), pl.end());
                d.route[e] = std::move(pl);
            } else {
                throw fail("unknown record '" + tok[0] + "'");
            }
        } catch (const DrawingError& e) {
            std::string msg = e.what();
            if (msg.rfind("adr line", 0) == 0) throw;
            throw fail(msg);
        }
    }
    if (!header) throw DrawingError("adr: missing header");
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (!d.pos[v]) throw DrawingError("adr: vertex " + g.vertex(v).name + " has no position");
    for (int e = 0; e < g.num_edges(); ++e)
        if (d.route[e].empty()) d.set_straight(g, e);
    return d;
}

std::string emit_svg(const Drawing& d, const Graph& g, const SvgStyle& style, const CrossingReport* rep) {
    std::vector<const Point*> all;
    for (const auto& p : d.pos)
        if (p) all.push_back(&*p);
    for (const auto& r : d.route)
        for (const auto& p : r) all.push_back(&p);
    for (const auto& p : d.boundary) all.push_back(&p);
    double minx = 0, maxx = 1, miny = 0, maxy = 1;
    if (!all.empty()) {
        minx = maxx = all[0]->x.get_d();
        miny = maxy = all[0]->y.get_d();
        for (const Point* p : all) {
            minx = std::min(minx, p->x.get_d());
            maxx = std::max(maxx, p->x.get_d());
            miny = std::min(miny, p->y.get_d());
            maxy = std::max(maxy, p->y.get_d());
        }
    }
    const double s = style.scale, pad = 20;
    auto X = [&](const Point& p) { return (p.x.get_d() - minx) * s + pad; };
    auto Y = [&](const Point& p) { return (maxy - p.y.get_d()) * s + pad; };
    std::ostringstream out;
    out << std::fixed << std::setprecision(3);
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << (maxx - minx) * s + 2 * pad
        << "\" height=\"" << (maxy - miny) * s + 2 * pad << "\">\n";
    if (!d.boundary.empty()) {
        out << "<polygon fill=\"none\" stroke=\"#999999\" stroke-dasharray=\"4 3\" points=\"";
        for (size_t i = 0; i < d.boundary.size(); ++i)
            out << (i ? " " : "") << X(d.boundary[i]) << ',' << Y(d.boundary[i]);
        out << "\"/>\n";
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& r = d.route[e];
        if (r.empty()) continue;
        int c = e < static_cast<int>(style.edge_color.size()) ? style.edge_color[e] : -1;
        const char* col = c == 0 ? "#1f4e9c" : c == 1 ? "#c0392b" : "#444444";
        out << "<path fill=\"none\" stroke=\"" << col << "\" stroke-width=\"1.5\" d=\"";
        for (size_t i = 0; i < r.size(); ++i) out << (i ? " L " : "M ") << X(r[i]) << ' ' << Y(r[i]);
        out << "\"/>\n";
    }
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        if (!d.pos[v]) continue;
        out << "<circle cx=\"" << X(*d.pos[v]) << "\" cy=\"" << Y(*d.pos[v]) << "\" r=\"3\" fill=\""
            << (g.is_anchor(v) ? "#000000" : "#ffffff") << "\" stroke=\"#000000\"/>\n";
    }
    if (rep && style.mark_crossings)
        for (const auto& c : rep->crossings)
            out << "<circle class=\"crossing\" cx=\"" << X(c.at) << "\" cy=\"" << Y(c.at)
                << "\" r=\"4\" fill=\"none\" stroke=\"#e67e22\"/>\n";
    out << "</svg>\n";
    return out.str();
}

}  // namespace crossforge
