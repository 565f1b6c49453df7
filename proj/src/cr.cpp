#include "crossforge/cr.hpp"

#include <algorithm>
#include <sstream>

namespace crossforge {

CrParams cr_params(int n, int m) {
    if (n < 1 || m < 1) throw GraphError("reduction needs n, m >= 1");
    CrParams p;
    p.n = n;
    p.m = m;
    p.w = 30 * n * m;
    const Int& w = p.w;
    p.unw_total = 6 * n * m + 6 * n + 2 * m + 1;
    p.k = p.unw_total * w * w * w - Int(m) * (w * w + w - 1);
    return p;
}

std::string blue_label(int a, int b) { return "b(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string red_label(int n, int m, int a, int b) {
    if (b == 0 && a >= 1 && a <= 2 * n) return "r(x" + std::to_string((a + 1) / 2) + ")";
    if (b == m + 2 && a >= 1 && a <= 2 * n) return "r'(x" + std::to_string((a + 1) / 2) + ")";
    return "r(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

namespace {

struct Blueprint {
    std::vector<std::string> labels;
    std::set<std::string> anchors;
    std::vector<std::tuple<std::string, std::string, Int>> edges;
};

Int pow4(const Int& w) { return w * w * w * w; }

Blueprint blue_blueprint(const CnfInstance& cnf) {
    int n = cnf.n, m = cnf.m();
    Int w = cr_params(n, m).w;
    Blueprint bp;
    auto exists = [&](int a, int b) {
        if (a < 0 || b < 0 || a > 2 * n + 2 || b > 2 * m + 3) return false;
        return !(a % 2 == 0 && (b == 0 || b == 2 * m + 3));
    };
    auto anchor = [&](int a, int b) {
        if ((b == 0 || b == 2 * m + 3) && a % 2 == 1) return true;
        return (a == 0 || a == 2 * n + 2) && b >= 1 && b <= 2 * m + 2;
    };
    std::vector<int> pos_count(n + 1, 0), neg_count(n + 1, 0);
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= n; ++i) {
            int p = cnf.polarity(i, j);
            if (p > 0) ++pos_count[i];
            if (p < 0) ++neg_count[i];
        }
    for (int a = 0; a <= 2 * n + 2; ++a)
        for (int b = 0; b <= 2 * m + 3; ++b) {
            if (!exists(a, b)) continue;
            bp.labels.push_back(blue_label(a, b));
            if (anchor(a, b)) bp.anchors.insert(blue_label(a, b));
        }
    for (int a = 0; a <= 2 * n + 2; ++a)
        for (int b = 0; b <= 2 * m + 3; ++b) {
            if (!exists(a, b)) continue;
            for (int dir = 0; dir < 2; ++dir) {
                int a2 = a + (dir == 0), b2 = b + (dir == 1);
                if (!exists(a2, b2)) continue;
                bool an1 = anchor(a, b), an2 = anchor(a2, b2);
                if (an1 && an2) continue;
                Int wt = w * w;
                if (an1 || an2) {
                    wt = pow4(w);
                } else if (dir == 0 && a >= 1 && a <= 2 * n) {
                    int i = (a + 1) / 2;
                    bool left_half = a % 2 == 1;  // edge b_(2i-1,b) b_(2i,b)
                    if (b % 2 == 0 && b >= 2 && b <= 2 * m) {
                        int p = cnf.polarity(i, b / 2);
                        if ((left_half && p > 0) || (!left_half && p < 0)) wt = w * w - 1;
                    } else if (b == 2 * m + 2) {
                        wt = w * w + (left_half ? pos_count[i] : neg_count[i]);
                    }
                }
                bp.edges.emplace_back(blue_label(a, b), blue_label(a2, b2), wt);
            }
        }
    return bp;
}

Blueprint red_blueprint(const CnfInstance& cnf) {
    int n = cnf.n, m = cnf.m();
    Int w = cr_params(n, m).w;
    Blueprint bp;
    auto exists = [&](int a, int b) {
        if (a < 0 || b < 0 || a > 2 * n + 1 || b > m + 2) return false;
        bool corner = (a == 0 || a == 2 * n + 1) && (b == 0 || b == m + 2);
        return !corner;
    };
    auto is_anchor_label = [&](int a, int b) {
        if (b == 0 || b == m + 2) return true;  // r(x_i), r'(x_i)
        return (a == 0 || a == 2 * n + 1) && b >= 1 && b <= m + 1;
    };
    std::set<std::string> seen;
    for (int a = 0; a <= 2 * n + 1; ++a)
        for (int b = 0; b <= m + 2; ++b) {
            if (!exists(a, b)) continue;
            std::string l = red_label(n, m, a, b);
            if (seen.insert(l).second) bp.labels.push_back(l);
            if (is_anchor_label(a, b)) bp.anchors.insert(l);
        }
    std::set<std::pair<std::string, std::string>> have;
    for (int a = 0; a <= 2 * n + 1; ++a)
        for (int b = 0; b <= m + 2; ++b) {
            if (!exists(a, b)) continue;
            for (int dir = 0; dir < 2; ++dir) {
                int a2 = a + (dir == 0), b2 = b + (dir == 1);
                if (!exists(a2, b2)) continue;
                std::string l1 = red_label(n, m, a, b), l2 = red_label(n, m, a2, b2);
                if (l1 == l2) continue;
                if (bp.anchors.count(l1) && bp.anchors.count(l2)) continue;
                auto key = std::minmax(l1, l2);
                if (!have.insert(key).second) continue;
                Int wt = w;
                if (dir == 0 && a % 2 == 1 && a <= 2 * n) {
                    if (b == m + 1) wt = pow4(w);
                    else if (b >= 1 && b <= m) wt = w - 1;
                }
                bp.edges.emplace_back(l1, l2, wt);
            }
        }
    return bp;
}

// Clockwise position along the rectangle boundary, starting at the bottom of
// the left side (y axis up).
std::pair<int, Rat> clockwise_key(const Point& p, const Rat& W, const Rat& H) {
    if (p.x == 0 && p.y > 0) return {0, p.y};
    if (p.y == H && p.x > 0) return {1, p.x};
    if (p.x == W && p.y < H) return {2, -p.y};
    return {3, -p.x};
}

Graph realize(const std::vector<const Blueprint*>& parts, const std::vector<std::string>& anchor_order) {
    std::vector<std::string> labels;
    for (const auto* bp : parts) labels.insert(labels.end(), bp->labels.begin(), bp->labels.end());
    std::sort(labels.begin(), labels.end());
    Graph g;
    for (size_t i = 0; i < labels.size(); ++i) g.add_vertex(labels[i], static_cast<long>(i));
    std::vector<std::tuple<VertexId, VertexId, Int>> edges;
    for (const auto* bp : parts)
        for (const auto& [a, b, w] : bp->edges) {
            VertexId u = g.at(a), v = g.at(b);
            if (u > v) std::swap(u, v);
            edges.emplace_back(u, v, w);
        }
    std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
        return std::get<0>(x) != std::get<0>(y) ? std::get<0>(x) < std::get<0>(y) : std::get<1>(x) < std::get<1>(y);
    });
    for (const auto& [u, v, w] : edges) g.add_edge(u, v, w);
    std::vector<VertexId> order;
    for (const auto& l : anchor_order) order.push_back(g.at(l));
    g.set_anchors(order);
    return g;
}

std::vector<std::string> clockwise_anchor_labels(int n, int m, const std::set<std::string>& wanted) {
    auto pos = cr_anchor_positions(n, m);
    Rat W(2 * n + 2), H(2 * m + 3);
    std::vector<std::pair<std::pair<int, Rat>, std::string>> keyed;
    for (const auto& l : wanted) keyed.push_back({clockwise_key(pos.at(l), W, H), l});
    std::sort(keyed.begin(), keyed.end());
    std::vector<std::string> out;
    for (const auto& k : keyed) out.push_back(k.second);
    return out;
}

std::pair<int, int> parse_pair(const std::string& label) {
    auto open = label.find('('), comma = label.find(','), close = label.find(')');
    return {std::stoi(label.substr(open + 1, comma - open - 1)), std::stoi(label.substr(comma + 1, close - comma - 1))};
}

}  // namespace

std::map<std::string, Point> cr_anchor_positions(int n, int m) {
    std::map<std::string, Point> pos;
    auto P = [](const Rat& x, const Rat& y) { return Point{x, y}; };
    for (int i = 0; i <= n; ++i) {
        pos[blue_label(2 * i + 1, 0)] = P(2 * i + 1, 0);
        pos[blue_label(2 * i + 1, 2 * m + 3)] = P(2 * i + 1, 2 * m + 3);
    }
    for (int b = 1; b <= 2 * m + 2; ++b) {
        pos[blue_label(0, b)] = P(0, b);
        pos[blue_label(2 * n + 2, b)] = P(2 * n + 2, b);
    }
    for (int i = 1; i <= n; ++i) {
        pos[red_label(n, m, 2 * i, 0)] = P(2 * i, 0);
        pos[red_label(n, m, 2 * i, m + 2)] = P(2 * i, 2 * m + 3);
    }
    for (int j = 1; j <= m + 1; ++j) {
        pos[red_label(n, m, 0, j)] = P(Rat(0), Rat(4 * j - 1, 2));
        Rat right_y = j <= m ? Rat(4 * j + 1, 2) : Rat(4 * m + 3, 2);
        pos[red_label(n, m, 2 * n + 1, j)] = P(Rat(2 * n + 2), right_y);
    }
    return pos;
}

std::vector<Point> cr_boundary(int n, int m) {
    Rat W(2 * n + 2), H(2 * m + 3);
    return {Point{0, 0}, Point{W, 0}, Point{W, H}, Point{0, H}};
}

Graph build_blue(const CnfInstance& cnf) {
    Blueprint bp = blue_blueprint(cnf);
    return realize({&bp}, clockwise_anchor_labels(cnf.n, cnf.m(), bp.anchors));
}

Graph build_red(const CnfInstance& cnf) {
    Blueprint bp = red_blueprint(cnf);
    return realize({&bp}, clockwise_anchor_labels(cnf.n, cnf.m(), bp.anchors));
}

Graph CrInstance::blue() const {
    std::vector<int> es;
    std::vector<VertexId> vs;
    for (int e = 0; e < G.num_edges(); ++e)
        if (edge_color[e] == 0) es.push_back(e);
    for (VertexId v = 0; v < G.num_vertices(); ++v)
        if (vertex_color[v] == 0) vs.push_back(v);
    return edge_subgraph(G, es, vs);
}

Graph CrInstance::red() const {
    std::vector<int> es;
    std::vector<VertexId> vs;
    for (int e = 0; e < G.num_edges(); ++e)
        if (edge_color[e] == 1) es.push_back(e);
    for (VertexId v = 0; v < G.num_vertices(); ++v)
        if (vertex_color[v] == 1) vs.push_back(v);
    return edge_subgraph(G, es, vs);
}

namespace {

RegionMap build_regions(const CrInstance& inst) {
    int n = inst.params.n, m = inst.params.m;
    RegionMap rm;
    rm.framed = inst.blue();
    Graph& F = rm.framed;
    int blue_edges = F.num_edges();
    const auto anchors = F.anchors();
    for (size_t i = 0; i < anchors.size(); ++i) F.add_edge(anchors[i], anchors[(i + 1) % anchors.size()]);
    rm.is_frame_edge.assign(F.num_edges(), 0);
    for (int e = blue_edges; e < F.num_edges(); ++e) rm.is_frame_edge[e] = 1;

    Rat W(2 * n + 2), H(2 * m + 3);
    Drawing d = Drawing::for_graph(F);
    for (VertexId v = 0; v < F.num_vertices(); ++v) {
        auto [a, b] = parse_pair(F.vertex(v).name);
        d.pos[v] = Point{Rat(a), Rat(b)};
    }
    auto side_corner = [&](const Point& p) {
        // clockwise end of the side p lies on
        if (p.x == 0) return Point{0, H};
        if (p.y == H) return Point{W, H};
        if (p.x == W) return Point{W, 0};
        return Point{0, 0};
    };
    for (int e = 0; e < F.num_edges(); ++e) {
        d.set_straight(F, e);
        if (!rm.is_frame_edge[e]) continue;
        Point p = *d.pos[F.edge(e).u], q = *d.pos[F.edge(e).v];
        bool same_side = (p.x == q.x && (p.x == 0 || p.x == W)) || (p.y == q.y && (p.y == 0 || p.y == H));
        if (!same_side) d.route[e] = {p, side_corner(p), q};
    }
    rm.emb = embedding_from_rotation(F, extract_rotation_system(d, F));
    if (!is_plane_rotation(F, rm.emb.rotation)) throw GraphError("blue grid layout is not plane");

    auto dart_between = [&](int a1, int b1, int a2, int b2) {
        VertexId u = F.find(blue_label(a1, b1)), v = F.find(blue_label(a2, b2));
        if (u < 0 || v < 0) return -1;
        int e = F.find_edge(u, v);
        if (e < 0) return -1;
        return dart_of(e, F.edge(e).u == u);
    };
    for (int a = 0; a <= 2 * n + 1; ++a)
        for (int b = 0; b <= 2 * m + 2; ++b) {
            // counterclockwise sides: faces lie to the left of their darts
            int sides[4] = {dart_between(a, b, a + 1, b), dart_between(a + 1, b, a + 1, b + 1),
                            dart_between(a + 1, b + 1, a, b + 1), dart_between(a, b + 1, a, b)};
            int f = -1;
            for (int dd : sides)
                if (dd >= 0) {
                    f = rm.emb.face_of_dart[dd];
                    break;
                }
            if (f < 0) throw GraphError("cell without sides");
            rm.face_of_cell[{a, b}] = f;
        }
    auto cell = [&](int a, int b) { return rm.face_of_cell.at({a, b}); };
    rm.col_T.resize(n + 1);
    rm.col_F.resize(n + 1);
    for (int i = 1; i <= n; ++i) {
        for (auto* col : {&rm.col_T[i], &rm.col_F[i]}) {
            col->insert(cell(2 * i - 1, 0));
            col->insert(cell(2 * i, 0));
            col->insert(cell(2 * i - 1, 2 * m + 2));
            col->insert(cell(2 * i, 2 * m + 2));
        }
        for (int b = 1; b <= 2 * m + 1; ++b) {
            rm.col_T[i].insert(cell(2 * i - 1, b));
            rm.col_F[i].insert(cell(2 * i, b));
        }
    }
    rm.upper.resize(m + 1);
    rm.lower.resize(m + 1);
    rm.boundary.resize(m + 1);
    for (int a = 0; a <= 2 * n + 1; ++a) {
        for (int j = 1; j <= m; ++j) {
            rm.upper[j].insert(cell(a, 2 * j));
            rm.lower[j].insert(cell(a, 2 * j - 1));
            rm.boundary[j].push_back(inst.G.find_edge(inst.G.at(blue_label(a, 2 * j)), inst.G.at(blue_label(a + 1, 2 * j))));
        }
        rm.enforcing.insert(cell(a, 2 * m + 1));
    }
    return rm;
}

RedPathPartition build_paths(const CrInstance& inst) {
    int n = inst.params.n, m = inst.params.m;
    const Graph& G = inst.G;
    auto edge = [&](int a1, int b1, int a2, int b2) {
        int e = G.find_edge(G.at(red_label(n, m, a1, b1)), G.at(red_label(n, m, a2, b2)));
        if (e < 0) throw GraphError("missing red edge");
        return e;
    };
    RedPathPartition p;
    p.V.resize(n + 1);
    p.H.resize(m + 1);
    for (int i = 1; i <= n; ++i)
        for (int a : {2 * i - 1, 2 * i})
            for (int b = 0; b <= m + 1; ++b) p.V[i].push_back(edge(a, b, a, b + 1));
    for (int j = 1; j <= m + 1; ++j) {
        auto& row = j <= m ? p.H[j] : p.H_enf;
        for (int a = 0; a <= 2 * n; ++a) row.push_back(edge(a, j, a + 1, j));
    }
    return p;
}

}  // namespace

CrInstance build_cr_instance(const CnfInstance& cnf) {
    CrInstance inst;
    inst.cnf = cnf;
    inst.params = cr_params(cnf.n, cnf.m());
    Blueprint blue = blue_blueprint(cnf), red = red_blueprint(cnf);
    std::set<std::string> all = blue.anchors;
    all.insert(red.anchors.begin(), red.anchors.end());
    inst.G = realize({&blue, &red}, clockwise_anchor_labels(cnf.n, cnf.m(), all));
    inst.params.W = inst.G.total_weight();
    for (VertexId v = 0; v < inst.G.num_vertices(); ++v)
        inst.vertex_color.push_back(inst.G.vertex(v).kind == VertexKind::Red ? 1 : 0);
    for (const auto& e : inst.G.edges()) {
        if (inst.vertex_color[e.u] != inst.vertex_color[e.v]) throw GraphError("edge joins red and blue");
        inst.edge_color.push_back(inst.vertex_color[e.u]);
    }
    inst.regions = build_regions(inst);
    inst.paths = build_paths(inst);
    return inst;
}

std::string cr_meta(const CrInstance& inst) {
    std::ostringstream out;
    const auto& p = inst.params;
    const Graph& G = inst.G;
    out << "meta 1\n";
    out << "param n " << p.n << "\nparam m " << p.m << "\nparam w " << p.w.get_str() << "\nparam k "
        << p.k.get_str() << "\nparam W " << p.W.get_str() << "\nparam unw_total " << p.unw_total.get_str() << '\n';
    auto faces = [&](const std::string& name, int idx, const std::set<int>& fs) {
        out << "region " << name;
        if (idx > 0) out << ' ' << idx;
        for (int f : fs) out << " f" << f;
        out << '\n';
    };
    auto edges = [&](const std::string& kind, int idx, const std::vector<int>& es) {
        out << kind;
        if (idx > 0) out << ' ' << idx;
        for (int e : es) out << ' ' << G.vertex(G.edge(e).u).id << ':' << G.vertex(G.edge(e).v).id;
        out << '\n';
    };
    for (int i = 1; i <= p.n; ++i) {
        faces("col_T", i, inst.regions.col_T[i]);
        faces("col_F", i, inst.regions.col_F[i]);
    }
    for (int j = 1; j <= p.m; ++j) {
        faces("upper", j, inst.regions.upper[j]);
        faces("lower", j, inst.regions.lower[j]);
    }
    faces("enforcing", 0, inst.regions.enforcing);
    for (int j = 1; j <= p.m; ++j) edges("boundary", j, inst.regions.boundary[j]);
    for (int i = 1; i <= p.n; ++i) edges("path V", i, inst.paths.V[i]);
    for (int j = 1; j <= p.m; ++j) edges("path H", j, inst.paths.H[j]);
    edges("path H_enf", 0, inst.paths.H_enf);
    return out.str();
}

}  // namespace crossforge
