#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

#include "crossforge/onep.hpp"

namespace crossforge {

const std::map<std::string, std::string>& shipped_template_table();

namespace {

const Rat kFan(1, 4), kLane(1, 8);

std::string v_label(int X, int Y) { return "v(" + std::to_string(X) + "," + std::to_string(Y) + ")"; }
std::string tile_str(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

long floor_rat(const Rat& r) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q.get_si();
}

Point cell_center(int cx, int cy) { return Point{Rat(2 * cx + 1, 2), Rat(2 * cy + 1, 2)}; }

// Attachment point on the given side of a red node's fan; index 0 is the
// lower (or left) lane.
Point slot(const Point& c, char side, int index) {
    Rat lane = index == 0 ? Rat(-kLane) : kLane;
    switch (side) {
        case 'E': return Point{c.x + kFan, c.y + lane};
        case 'W': return Point{c.x - kFan, c.y + lane};
        case 'N': return Point{c.x + lane, c.y + kFan};
        default: return Point{c.x + lane, c.y - kFan};
    }
}

// Tile-side node of Y and the fan side on which its tile paths arrive.
char side_of(const std::string& node) {
    if (node == "v(0,1)") return 'W';
    if (node == "v(2,1)") return 'E';
    if (node == "v(1,0)") return 'S';
    if (node == "v(1,2)") return 'N';
    return 0;
}

char facing(char side) {
    switch (side) {
        case 'W': return 'E';
        case 'E': return 'W';
        case 'S': return 'N';
        default: return 'S';
    }
}

std::pair<int, int> local_lattice(const std::string& node) {
    return {node[2] - '0', node[4] - '0'};
}

GadgetKind kind_from_token(const std::string& t, int line) {
    if (t == "X") return GadgetKind::X;
    if (t == "X_pos") return GadgetKind::Pos;
    if (t == "X_neg") return GadgetKind::Neg;
    throw DrawingError("template line " + std::to_string(line) + ": unknown kind " + t);
}

Point mirror_point_x(const Point& p) { return Point{4 - p.x, p.y}; }
Point mirror_point_y(const Point& p) { return Point{p.x, 4 - p.y}; }

// ---- routing red paths across the fixed blue drawing ----

struct BlueIndex {
    std::map<std::pair<long, long>, std::vector<int>> cells;
    const Drawing* d = nullptr;
};

BlueIndex index_blue(const Graph& g, const Drawing& d, const std::vector<int>& blue_edges) {
    BlueIndex idx;
    idx.d = &d;
    for (int e : blue_edges) {
        const auto& r = d.route[e];
        for (size_t s = 1; s < r.size(); ++s) {
            long x0 = floor_rat(std::min(r[s - 1].x, r[s].x)) - 1, x1 = floor_rat(std::max(r[s - 1].x, r[s].x));
            long y0 = floor_rat(std::min(r[s - 1].y, r[s].y)) - 1, y1 = floor_rat(std::max(r[s - 1].y, r[s].y));
            for (long x = x0; x <= x1; ++x)
                for (long y = y0; y <= y1; ++y) idx.cells[{x, y}].push_back(e);
        }
    }
    (void)g;
    for (auto& [k, v] : idx.cells) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    }
    return idx;
}

Rat cross2(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }

// Parameter values (segment index + fraction) where the skeleton crosses
// blue edges, sorted. Touching a blue edge without crossing is an error.
std::vector<Rat> skeleton_crossings(const Graph& g, const BlueIndex& idx, const Polyline& sk, const std::string& key) {
    std::vector<Rat> out;
    for (size_t s = 1; s < sk.size(); ++s) {
        const Point &p0 = sk[s - 1], &p1 = sk[s];
        std::set<int> cand;
        long x0 = floor_rat(std::min(p0.x, p1.x)), x1 = floor_rat(std::max(p0.x, p1.x));
        long y0 = floor_rat(std::min(p0.y, p1.y)), y1 = floor_rat(std::max(p0.y, p1.y));
        for (long x = x0; x <= x1; ++x)
            for (long y = y0; y <= y1; ++y) {
                auto it = idx.cells.find({x, y});
                if (it != idx.cells.end()) cand.insert(it->second.begin(), it->second.end());
            }
        for (int e : cand) {
            const auto& r = idx.d->route[e];
            for (size_t t = 1; t < r.size(); ++t) {
                const Point &q0 = r[t - 1], &q1 = r[t];
                int o1 = orientation(p0, p1, q0), o2 = orientation(p0, p1, q1);
                int o3 = orientation(q0, q1, p0), o4 = orientation(q0, q1, p1);
                if (o1 * o2 < 0 && o3 * o4 < 0) {
                    Point dp{p1.x - p0.x, p1.y - p0.y}, dq{q1.x - q0.x, q1.y - q0.y};
                    Point w{q0.x - p0.x, q0.y - p0.y};
                    Rat f = cross2(w, dq) / cross2(dp, dq);
                    out.push_back(Rat(static_cast<long>(s - 1)) + f);
                } else if ((o1 == 0 && on_segment(q0, p0, p1)) || (o2 == 0 && on_segment(q1, p0, p1)) ||
                           (o3 == 0 && on_segment(p0, q0, q1)) || (o4 == 0 && on_segment(p1, q0, q1))) {
                    throw std::logic_error("red path " + key + " touches blue edge " + g.vertex(g.edge(e).u).name +
                                           "-" + g.vertex(g.edge(e).v).name);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    for (size_t i = 1; i < out.size(); ++i)
        if (out[i] == out[i - 1]) throw std::logic_error("red path " + key + " meets two blue edges at one point");
    return out;
}

Point at_param(const Polyline& sk, const Rat& p) {
    long s = floor_rat(p);
    if (s >= static_cast<long>(sk.size()) - 1) return sk.back();
    Rat f = p - s;
    const Point &a = sk[s], &b = sk[s + 1];
    return Point{a.x + f * (b.x - a.x), a.y + f * (b.y - a.y)};
}

// Places the inner vertices of a red path so that each of its edges takes
// at most one of the skeleton's crossings.
void route_path(const Graph& g, const BlueIndex& idx, const RedPath& path, const Polyline& sk, Drawing& d) {
    auto cr = skeleton_crossings(g, idx, sk, path.key);
    int len = static_cast<int>(path.edges.size());
    int k = static_cast<int>(cr.size());
    if (k > len)
        throw std::logic_error("red path " + path.key + " needs " + std::to_string(k) + " crossings on " +
                               std::to_string(len) + " edges");
    Rat L(static_cast<long>(sk.size()) - 1);
    std::vector<Rat> bounds{Rat(0)};
    bounds.insert(bounds.end(), cr.begin(), cr.end());
    bounds.push_back(L);
    int gaps = k + 1;
    std::vector<int> count(gaps, 0);
    for (int gi = 1; gi + 1 < gaps; ++gi) count[gi] = 1;
    int extra = (len - 1) - std::max(0, k - 1);
    for (int x = 0; x < extra; ++x) count[x % 2 == 0 ? 0 : gaps - 1]++;
    std::vector<Rat> params{Rat(0)};
    for (int gi = 0; gi < gaps; ++gi)
        for (int r = 1; r <= count[gi]; ++r)
            params.push_back(bounds[gi] + (bounds[gi + 1] - bounds[gi]) * Rat(r, count[gi] + 1));
    params.push_back(L);
    std::vector<VertexId> chain{path.from};
    chain.insert(chain.end(), path.inner.begin(), path.inner.end());
    chain.push_back(path.to);
    for (size_t v = 1; v + 1 < chain.size(); ++v) d.pos[chain[v]] = at_param(sk, params[v]);
    for (size_t v = 0; v + 1 < chain.size(); ++v) {
        Polyline walk{at_param(sk, params[v])};
        for (long b = floor_rat(params[v]) + 1; b < params[v + 1]; ++b) walk.push_back(sk[b]);
        walk.push_back(at_param(sk, params[v + 1]));
        d.set_route(g, chain[v], chain[v + 1], walk);
    }
}

// Red layout request: where lattice vertices sit (as blue cells) and the
// bends of every path.
struct RedPlan {
    std::map<std::pair<int, int>, std::pair<int, int>> lattice_cell;
    std::map<VertexId, Point> pos;
    std::map<int, std::vector<Point>> via;  // path index -> bends
};

void plan_lattice_pairs(const RedGraph& R, RedPlan& plan) {
    std::map<VertexId, std::pair<int, int>> coord;
    for (const auto& [c, v] : R.lattice) {
        coord[v] = c;
        auto cell = plan.lattice_cell.at(c);
        plan.pos[v] = cell_center(cell.first, cell.second);
    }
    for (int p = 0; p < static_cast<int>(R.paths.size()); ++p) {
        const auto& path = R.paths[p];
        if (path.key.rfind("v(", 0) != 0) continue;
        auto a = coord.at(path.from), b = coord.at(path.to);
        int s = path.key.back() - '0';
        const Point &pa = plan.pos.at(path.from), &pb = plan.pos.at(path.to);
        if (a.second == b.second)
            plan.via[p] = {slot(pa, 'E', s), slot(pb, 'W', s)};
        else
            plan.via[p] = {slot(pa, 'N', s), slot(pb, 'S', s)};
    }
}

// Instantiates a template on tile (i, j). Positions of the tile's side
// nodes must already agree with the template's placements.
void plan_tile(const TileTemplate& tpl, int i, int j, const RedGraph& R, RedPlan& plan) {
    const int ox = 3 * (i - 1), oy = 3 * (j - 1);
    const Point off{ox, oy};
    auto shift = [&](const Point& p) { return Point{p.x + off.x, p.y + off.y}; };
    auto [c, c2] = R.centers.at({i, j});
    plan.pos[c] = shift(tpl.nodes.at("c"));
    plan.pos[c2] = shift(tpl.nodes.at("c'"));
    std::string ts = tile_str(i, j);
    auto global = [&](const std::string& node) {
        auto [a, b] = local_lattice(node);
        return std::make_pair(2 * (i - 1) + a, 2 * (j - 1) + b);
    };
    for (const auto& [node, cell] : tpl.place) {
        auto want = plan.lattice_cell.at(global(node));
        if (want != std::make_pair(ox + cell.first, oy + cell.second))
            throw std::logic_error("template " + tpl.name + " places " + node + " of tile " + ts +
                                   " away from its neighbours");
    }
    for (const auto& port : tpl.ports) {
        std::string node;
        for (const auto& [n, cell] : tpl.place)
            if (side_of(n) == port.side) node = n;
        auto cell = tpl.place.at(node);
        if (slot(cell_center(cell.first, cell.second), facing(port.side), port.index) != port.at)
            throw std::logic_error("template " + tpl.name + " port " + std::string(1, port.side) +
                                   std::to_string(port.index) + " does not match its fan");
    }
    std::set<std::pair<char, int>> used;
    for (const auto& tp : tpl.paths) {
        std::string key;
        std::string from = tp.from == "c" ? "c" + ts : "c'" + ts;
        if (tp.to == "c" || tp.to == "c'") {
            key = "c" + ts + "-c'" + ts;
        } else {
            auto [X, Y] = global(tp.to);
            key = from + "-" + v_label(X, Y) + ":" + std::to_string(tp.strand);
            char side = side_of(tp.to);
            bool hit = false;
            for (const auto& port : tpl.ports)
                if (port.side == side && !tp.via.empty() && port.at == tp.via.back()) {
                    if (!used.insert({side, port.index}).second)
                        throw std::logic_error("template " + tpl.name + " reuses port " + std::string(1, side));
                    hit = true;
                }
            if (!hit) throw std::logic_error("template " + tpl.name + " path " + key + " misses its port");
        }
        auto it = R.path_index.find(key);
        if (it == R.path_index.end()) throw std::logic_error("template path " + key + " is not in the red graph");
        std::vector<Point> via;
        for (const auto& p : tp.via) via.push_back(shift(p));
        plan.via[it->second] = via;
    }
}

void execute_plan(const Graph& g, const RedGraph& R, const RedPlan& plan, const std::vector<int>& blue_edges,
                  Drawing& d) {
    for (const auto& [v, p] : plan.pos) d.pos[v] = p;
    auto idx = index_blue(g, d, blue_edges);
    for (int p = 0; p < static_cast<int>(R.paths.size()); ++p) {
        const auto& path = R.paths[p];
        if (!d.pos[path.from] || !d.pos[path.to]) throw std::logic_error("red path " + path.key + " has no endpoint");
        Polyline sk{*d.pos[path.from]};
        auto it = plan.via.find(p);
        if (it == plan.via.end()) throw std::logic_error("red path " + path.key + " was not planned");
        sk.insert(sk.end(), it->second.begin(), it->second.end());
        sk.push_back(*d.pos[path.to]);
        route_path(g, idx, path, sk, d);
    }
}

bool has_kind(const TileTemplate& t, GadgetKind k) {
    return std::find(t.kinds.begin(), t.kinds.end(), k) != t.kinds.end();
}

// Cell (cx, cy) of the grid whose polygon contains p, or (-1, -1).
std::pair<int, int> locate_cell(const BlueGrid& grid, const Drawing& d, const Point& p) {
    for (int cx = 0; cx < grid.width; ++cx)
        for (int cy = 0; cy < grid.height; ++cy) {
            if (p.x < cx - 1 || p.x > cx + 2 || p.y < cy - 1 || p.y > cy + 2) continue;
            if (inside_polygon(cell_polygon(grid, d, cx, cy), p)) return {cx, cy};
        }
    return {-1, -1};
}

}  // namespace

// ---- templates ----

TileTemplate parse_template(const std::string& text) {
    TileTemplate t;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw DrawingError("template line " + std::to_string(ln) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++ln;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string s; ls >> s;) tok.push_back(s);
        if (tok.empty() || tok[0][0] == '#') continue;
        const std::string& kw = tok[0];
        if (kw == "template") {
            if (tok.size() != 2) fail("expected 'template <name>'");
            t.name = tok[1];
        } else if (kw == "kinds") {
            for (size_t i = 1; i < tok.size(); ++i) t.kinds.push_back(kind_from_token(tok[i], ln));
        } else if (kw == "node") {
            if (tok.size() != 4 || (tok[1] != "c" && tok[1] != "c'")) fail("expected 'node c|c' <x> <y>'");
            t.nodes[tok[1]] = Point{parse_rat(tok[2]), parse_rat(tok[3])};
        } else if (kw == "place") {
            if (tok.size() != 4 || !side_of(tok[1])) fail("expected 'place v(a,b) <alpha> <beta>'");
            int a = std::stoi(tok[2]), b = std::stoi(tok[3]);
            if (a < 0 || a > 3 || b < 0 || b > 3) fail("face outside the tile");
            t.place[tok[1]] = {a, b};
        } else if (kw == "port") {
            if (tok.size() != 5 || tok[1].size() != 1 || std::string("WESN").find(tok[1][0]) == std::string::npos)
                fail("expected 'port W|E|S|N <index> <x> <y>'");
            TemplatePort p;
            p.side = tok[1][0];
            p.index = std::stoi(tok[2]);
            if (p.index != 0 && p.index != 1) fail("port index must be 0 or 1");
            p.at = Point{parse_rat(tok[3]), parse_rat(tok[4])};
            t.ports.push_back(p);
        } else if (kw == "path") {
            if (tok.size() < 4 || tok.size() % 2 != 0) fail("expected 'path <from> <to> <strand> [x y]...'");
            TemplatePath p;
            p.from = tok[1];
            p.to = tok[2];
            if (p.from != "c" && p.from != "c'") fail("paths start at c or c'");
            if (p.to != "c'" && !side_of(p.to)) fail("unknown path end " + p.to);
            p.strand = std::stoi(tok[3]);
            for (size_t i = 4; i < tok.size(); i += 2) p.via.push_back(Point{parse_rat(tok[i]), parse_rat(tok[i + 1])});
            t.paths.push_back(p);
        } else {
            fail("unknown record '" + kw + "'");
        }
    }
    if (t.name.empty()) throw DrawingError("template: missing name");
    if (t.nodes.size() != 2) throw DrawingError("template " + t.name + ": needs nodes c and c'");
    if (t.place.size() != 4) throw DrawingError("template " + t.name + ": needs four placements");
    return t;
}

const std::vector<std::string>& shipped_template_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, v] : shipped_template_table()) out.push_back(k);
        return out;
    }();
    return names;
}

std::string shipped_template_text(const std::string& name) {
    auto it = shipped_template_table().find(name);
    if (it == shipped_template_table().end()) throw DrawingError("no shipped template " + name);
    return it->second;
}

TileTemplate shipped_template(const std::string& name) { return parse_template(shipped_template_text(name)); }

TileTemplate mirror_template_x(const TileTemplate& t) {
    auto swap_node = [](const std::string& n) -> std::string {
        if (n == "c") return "c'";
        if (n == "c'") return "c";
        if (n == "v(0,1)") return "v(2,1)";
        if (n == "v(2,1)") return "v(0,1)";
        return n;
    };
    TileTemplate m;
    m.name = t.name + "+mx";
    for (GadgetKind k : t.kinds)
        m.kinds.push_back(k == GadgetKind::Pos ? GadgetKind::Neg : k == GadgetKind::Neg ? GadgetKind::Pos : k);
    for (const auto& [n, p] : t.nodes) m.nodes[swap_node(n)] = mirror_point_x(p);
    for (const auto& [n, c] : t.place) m.place[swap_node(n)] = {3 - c.first, c.second};
    for (const auto& p : t.ports) {
        TemplatePort q = p;
        q.at = mirror_point_x(p.at);
        if (p.side == 'W' || p.side == 'E') q.side = p.side == 'W' ? 'E' : 'W';
        else q.index = 1 - p.index;
        m.ports.push_back(q);
    }
    for (const auto& p : t.paths) {
        TemplatePath q = p;
        q.from = swap_node(p.from);
        q.to = swap_node(p.to);
        for (auto& v : q.via) v = mirror_point_x(v);
        if (q.from == "c'" && q.to == "c") std::swap(q.from, q.to);
        m.paths.push_back(q);
    }
    return m;
}

TileTemplate mirror_template_y(const TileTemplate& t) {
    auto swap_node = [](const std::string& n) -> std::string {
        if (n == "v(1,0)") return "v(1,2)";
        if (n == "v(1,2)") return "v(1,0)";
        return n;
    };
    TileTemplate m;
    m.name = t.name + "+my";
    m.kinds = t.kinds;
    for (const auto& [n, p] : t.nodes) m.nodes[n] = mirror_point_y(p);
    for (const auto& [n, c] : t.place) m.place[swap_node(n)] = {c.first, 3 - c.second};
    for (const auto& p : t.ports) {
        TemplatePort q = p;
        q.at = mirror_point_y(p.at);
        if (p.side == 'S' || p.side == 'N') q.side = p.side == 'S' ? 'N' : 'S';
        else q.index = 1 - p.index;
        m.ports.push_back(q);
    }
    for (const auto& p : t.paths) {
        TemplatePath q = p;
        q.to = swap_node(p.to);
        for (auto& v : q.via) v = mirror_point_y(v);
        m.paths.push_back(q);
    }
    return m;
}

TileChoice choose_tile(const OnePInstance& inst, const std::vector<bool>& q, const std::vector<int>& t, int i,
                       int j) {
    (void)inst;
    TileChoice ch;
    bool col_t = q.at(i);
    int tj = t.at(j);
    if (i == tj) {
        ch.tpl = shipped_template("positive2");
        if (!col_t) ch.tpl = mirror_template_y(mirror_template_x(ch.tpl));
        ch.description = "i=t(j)";
    } else {
        ch.tpl = shipped_template("cross");
        if (i > tj) ch.tpl = mirror_template_y(ch.tpl);
        if (!col_t) ch.tpl = mirror_template_x(ch.tpl);
        ch.description = i < tj ? "i<t(j)" : "i>t(j)";
    }
    ch.description += col_t ? " column T" : " column F";
    return ch;
}

OnePLayout onep_certificate_layout(const CnfInstance& cnf, const Assignment& a) {
    if (!evaluate(cnf, a)) throw std::invalid_argument("assignment does not satisfy the formula");
    OnePLayout L;
    L.q.assign(cnf.n + 1, false);
    for (int i = 1; i <= cnf.n; ++i) L.q[i] = a[i];
    L.t.assign(cnf.m() + 1, 0);
    for (int j = 1; j <= cnf.m(); ++j) L.t[j] = satisfying_variable(cnf, a, j);
    return L;
}

Drawing layout_1p_drawing(const OnePInstance& inst, const OnePLayout& layout, bool check_kinds) {
    const Graph& g = inst.G;
    const int n = inst.n, m = inst.m;
    Drawing d = Drawing::for_graph(g);
    d.boundary = onep_boundary(n, m);
    draw_blue_grid(g, inst.grid, d);
    std::vector<int> blue_edges;
    for (int e = 0; e < g.num_edges(); ++e)
        if (check_kinds && inst.edge_color[e] == 0) blue_edges.push_back(e);

    RedPlan plan;
    for (int X = 0; X <= 2 * n; ++X)
        for (int Y = 0; Y <= 2 * m; ++Y) {
            if (X % 2 == 1 && Y % 2 == 1) continue;
            std::pair<int, int> cell;
            if (X % 2 == 0 && Y % 2 == 0) {
                cell = {3 * X / 2, 3 * Y / 2};
            } else if (X % 2 == 1) {
                int i = (X + 1) / 2;
                cell = {3 * (i - 1) + (layout.q.at(i) ? 1 : 2), 3 * Y / 2};
            } else {
                int j = (Y + 1) / 2;
                cell = {3 * X / 2, 3 * (j - 1) + (X / 2 < layout.t.at(j) ? 1 : 2)};
            }
            plan.lattice_cell[{X, Y}] = cell;
        }
    plan_lattice_pairs(inst.red, plan);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            auto ch = choose_tile(inst, layout.q, layout.t, i, j);
            if (check_kinds && !has_kind(ch.tpl, inst.kinds[i][j]))
                throw std::logic_error("template " + ch.tpl.name + " is not valid for " +
                                       gadget_kind_name(inst.kinds[i][j]) + " at tile " + tile_str(i, j));
            plan_tile(ch.tpl, i, j, inst.red, plan);
        }
    auto anchors = onep_anchor_positions(inst);
    for (const auto& name : inst.red.anchor_names) {
        const RedPath& p = inst.red.paths[inst.red.path_index.at(name)];
        char side = name[0] == 'a' ? 'S' : name[0] == 'b' ? 'N' : name[0] == 'c' ? 'W' : 'E';
        plan.pos[p.from] = anchors.at(name);
        plan.via[inst.red.path_index.at(name)] = {slot(plan.pos.at(p.to), side, 0)};
    }
    for (const auto& [label, p] : anchors) d.pos[g.at(label)] = p;
    execute_plan(g, inst.red, plan, blue_edges, d);
    return d;
}

Drawing generate_1p_certificate(const OnePInstance& inst, const Assignment& a) {
    return layout_1p_drawing(inst, onep_certificate_layout(inst.cnf, a), true);
}

// ---- checks ----

TemplateCheck check_template(const TileTemplate& tpl, GadgetKind kind, const std::string& variant) {
    TemplateCheck out;
    out.name = tpl.name + "/" + variant + "/" + gadget_kind_name(kind);
    if (!has_kind(tpl, kind)) {
        out.reason = "template does not declare this kind";
        return out;
    }
    Graph g;
    KindTable kinds(2, std::vector<GadgetKind>(2, kind));
    BlueGrid grid = build_blue_grid(g, 1, 1, kinds, false);
    int blue_count = g.num_edges();
    RedGraph R = build_red_graph(g, 1, 1, false);
    std::vector<int> color(g.num_edges(), 1), blue_edges;
    for (int e = 0; e < blue_count; ++e) {
        color[e] = 0;
        blue_edges.push_back(e);
    }
    Drawing d = Drawing::for_graph(g);
    draw_blue_grid(g, grid, d);
    RedPlan plan;
    std::map<std::pair<int, int>, std::pair<int, int>> expected;
    for (const auto& [c, v] : R.lattice) {
        auto [X, Y] = c;
        if (X % 2 == 0 && Y % 2 == 0) {
            plan.lattice_cell[c] = {3 * X / 2, 3 * Y / 2};
        } else {
            auto it = tpl.place.find(v_label(X, Y));
            if (it == tpl.place.end()) {
                out.reason = "no placement for " + v_label(X, Y);
                return out;
            }
            plan.lattice_cell[c] = it->second;
        }
        expected[c] = plan.lattice_cell[c];
    }
    try {
        plan_lattice_pairs(R, plan);
        plan_tile(tpl, 1, 1, R, plan);
        execute_plan(g, R, plan, blue_edges, d);
        CrossingReport rep = find_crossings(d, g, &color);
        std::string offender;
        if (!verify_one_planar(rep, &offender)) {
            out.reason = "not a 1-drawing: " + offender;
            return out;
        }
        for (const auto& L : grid.links) {
            bool outer = L.horizontal ? (L.y == 0 || L.y == grid.height) : (L.x == 0 || L.x == grid.width);
            if (!outer) continue;
            for (const auto& es : L.strand_edges)
                for (int e : es)
                    if (rep.participation[e]) {
                        out.reason = "outer boundary of the tile is crossed";
                        return out;
                    }
        }
        if (rep.unweighted_by_class[ColorClass::RedRed] || rep.unweighted_by_class[ColorClass::BlueBlue]) {
            out.reason = "monochromatic crossing";
            return out;
        }
    } catch (const std::exception& e) {
        out.reason = e.what();
        return out;
    }
    for (const auto& [c, v] : R.lattice) {
        auto cell = locate_cell(grid, d, *d.pos[v]);
        out.faces[v_label(c.first, c.second)] = cell;
        if (cell != expected[c]) {
            out.reason = v_label(c.first, c.second) + " is not in its face";
            return out;
        }
    }
    auto [c, c2] = R.centers.at({1, 1});
    out.faces["c"] = locate_cell(grid, d, *d.pos[c]);
    out.faces["c'"] = locate_cell(grid, d, *d.pos[c2]);
    if (out.faces["c"].first < 0 || out.faces["c'"].first < 0) {
        out.reason = "c or c' is not inside a square face";
        return out;
    }
    out.ok = true;
    return out;
}

std::vector<LemmaCheck> check_gadget_lemmas() {
    std::vector<LemmaCheck> out;
    // templates, in all four mirror variants and every declared kind
    std::vector<TemplateCheck> tchecks;
    for (const auto& name : shipped_template_names()) {
        TileTemplate base = shipped_template(name);
        std::vector<std::pair<std::string, TileTemplate>> variants{
            {"plain", base},
            {"mirror-x", mirror_template_x(base)},
            {"mirror-y", mirror_template_y(base)},
            {"mirror-xy", mirror_template_y(mirror_template_x(base))}};
        for (const auto& [vname, tpl] : variants)
            for (GadgetKind k : tpl.kinds) {
                auto tc = check_template(tpl, k, vname);
                out.push_back({"template " + tc.name, tc.ok, tc.ok ? "compliant 1-drawing" : tc.reason});
                tchecks.push_back(tc);
            }
    }
    {
        // shipped X drawings with v(0,1) in f(0,1) put v(2,1) in f(3,1)
        bool ok = true;
        std::string detail = "all X drawings agree";
        for (const auto& tc : tchecks) {
            if (!tc.ok || tc.name.substr(tc.name.size() - 2) != "/X") continue;
            if (tc.faces.at("v(0,1)") == std::make_pair(0, 1) && tc.faces.at("v(2,1)") != std::make_pair(3, 1)) {
                ok = false;
                detail = tc.name + " breaks the pattern";
            }
        }
        out.push_back({"X drawings keep the corridor", ok, detail});
    }
    for (GadgetKind kind : {GadgetKind::X, GadgetKind::Pos, GadgetKind::Neg}) {
        const std::string kn = gadget_kind_name(kind);
        GadgetTile t = build_gadget(kind);
        std::set<int> outer;
        for (int dart : t.emb.faces[t.emb.outer]) outer.insert(dart_edge(dart));
        std::map<std::pair<int, int>, std::vector<long>> dist;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) dist[{a, b}] = dual_distances_from(t.g, t.emb, t.face(a, b), outer);
        auto dd = [&](int a, int b, int c, int e) { return dist[{a, b}][t.face(c, e)]; };

        long across = dd(1, 0, 2, 3);
        out.push_back({"distance f(1,0)-f(2,3) on " + kn, across == 13, "computed " + std::to_string(across)});

        // side vertices of Y: faces within 7 of both neighbouring corners
        struct Side {
            const char* node;
            std::pair<int, int> c1, c2;
            std::set<std::pair<int, int>> allowed;
        };
        std::vector<Side> sides{{"v(0,1)", {0, 0}, {0, 3}, {{0, 1}, {0, 2}}},
                                {"v(2,1)", {3, 0}, {3, 3}, {{3, 1}, {3, 2}}},
                                {"v(1,0)", {0, 0}, {3, 0}, {{1, 0}, {2, 0}}},
                                {"v(1,2)", {0, 3}, {3, 3}, {{1, 3}, {2, 3}}}};
        for (const auto& s : sides) {
            std::set<std::pair<int, int>> within;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    if (dd(s.c1.first, s.c1.second, a, b) <= 7 && dd(s.c2.first, s.c2.second, a, b) <= 7)
                        within.insert({a, b});
            out.push_back({std::string("7-paths pin ") + s.node + " on " + kn, within == s.allowed,
                           std::to_string(within.size()) + " candidate faces"});
        }

        // c and c' must sit next to the vertical pair of Y
        bool seven = true;
        std::string worst;
        for (int col : {1, 2}) {
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    if (a == col && (b == 1 || b == 2)) continue;
                    long far = std::max(dd(col, 0, a, b), dd(col, 3, a, b));
                    if (far < 7) {
                        seven = false;
                        worst = "face (" + std::to_string(a) + "," + std::to_string(b) + ")";
                    }
                }
        }
        // a center left in f(1,1) cannot reach f(3,2) within a 6-path
        if (dd(1, 1, 3, 2) < 7) {
            seven = false;
            worst = "f(1,1) to f(3,2)";
        }
        out.push_back({"distance >= 7 premise on " + kn, seven, seven ? "holds" : "fails at " + worst});

        // the 12-path v(1,0) - c - v(1,2) against the crossing cost
        Graph y = build_gadget_Y();
        std::vector<long> hop(y.num_vertices(), -1);
        std::deque<VertexId> q{y.at("v(1,0)")};
        hop[q.front()] = 0;
        while (!q.empty()) {
            VertexId x = q.front();
            q.pop_front();
            for (auto [z, e] : y.incident(x))
                if (hop[z] < 0) {
                    hop[z] = hop[x] + 1;
                    q.push_back(z);
                }
        }
        long detour = hop[y.at("v(1,2)")];
        out.push_back({"12-path shorter than f(1,0)-f(2,3) on " + kn, detour == 12 && detour < across,
                       "path " + std::to_string(detour) + ", distance " + std::to_string(across)});
    }
    return out;
}

}  // namespace crossforge
