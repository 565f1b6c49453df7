#include "crossforge/certify.hpp"

#include <sstream>
#include <stdexcept>

namespace crossforge {

CrLayout certificate_layout(const CnfInstance& cnf, const Assignment& a) {
    if (!evaluate(cnf, a)) throw std::invalid_argument("assignment does not satisfy the formula");
    CrLayout l;
    l.value = a.value;
    l.t.assign(cnf.m() + 1, 0);
    for (int j = 1; j <= cnf.m(); ++j) l.t[j] = satisfying_variable(cnf, a, j);
    return l;
}

Drawing layout_cr_drawing(const CrInstance& inst, const CrLayout& layout) {
    const int n = inst.params.n, m = inst.params.m;
    const Graph& g = inst.G;
    if (static_cast<int>(layout.value.size()) != n + 1 || static_cast<int>(layout.t.size()) != m + 1)
        throw std::invalid_argument("layout does not match the instance size");
    Drawing d = Drawing::for_graph(g);
    d.boundary = cr_boundary(n, m);
    for (const auto& [label, p] : cr_anchor_positions(n, m)) d.pos[g.at(label)] = p;

    for (int a = 0; a <= 2 * n + 2; ++a)
        for (int b = 0; b <= 2 * m + 3; ++b) {
            VertexId v = g.find(blue_label(a, b));
            if (v >= 0 && !g.is_anchor(v)) d.pos[v] = Point{a, b};
        }

    // V_i runs in the T column [2i-1, 2i] or the F column [2i, 2i+1],
    // its two strands at the thirds of that column
    auto column = [&](int i) { return Rat(layout.value[i] ? 2 * i - 1 : 2 * i); };
    auto strand_x = [&](int a) -> Rat {
        int i = (a + 1) / 2;
        return column(i) + Rat(a % 2 == 1 ? 1 : 2, 3);
    };
    auto row_y = [&](int a, int j) -> Rat {
        if (j == m + 1) return Rat(4 * m + 3, 2);
        int i = (a + 1) / 2, t = layout.t[j];
        bool lower = a % 2 == 1 ? i <= t : i < t;
        return lower ? Rat(4 * j - 1, 2) : Rat(4 * j + 1, 2);
    };
    for (int a = 1; a <= 2 * n; ++a)
        for (int j = 1; j <= m + 1; ++j) d.pos[g.at(red_label(n, m, a, j))] = Point{strand_x(a), row_y(a, j)};

    for (int e = 0; e < g.num_edges(); ++e) d.set_straight(g, e);
    for (int a = 1; a <= 2 * n; ++a) {
        int i = (a + 1) / 2;
        Rat x = strand_x(a);
        VertexId bottom = g.at(red_label(n, m, a, 0)), first = g.at(red_label(n, m, a, 1));
        VertexId last = g.at(red_label(n, m, a, m + 1)), top = g.at(red_label(n, m, a, m + 2));
        d.set_route(g, bottom, first, {Point{2 * i, 0}, Point{x, Rat(1, 2)}, *d.pos[first]});
        d.set_route(g, last, top, {*d.pos[last], Point{x, Rat(4 * m + 5, 2)}, Point{2 * i, 2 * m + 3}});
    }
    return d;
}

Drawing generate_cr_certificate(const CrInstance& inst, const Assignment& a) {
    return layout_cr_drawing(inst, certificate_layout(inst.cnf, a));
}

bool BudgetReport::ok() const { return failure().empty(); }

std::string BudgetReport::failure() const {
    for (const auto& p : paths)
        if (!p.ok()) {
            std::ostringstream out;
            out << p.name << " weighted " << p.weighted.get_str() << " expected " << p.expected_weighted.get_str()
                << " (delta " << p.delta().get_str() << "), unweighted " << p.unweighted << " expected "
                << p.expected_unweighted;
            return out.str();
        }
    if (blue_blue != 0 || red_red != 0)
        return "monochromatic crossings: blue-blue " + std::to_string(blue_blue) + ", red-red " +
               std::to_string(red_red);
    if (weighted_total != expected_k)
        return "total " + weighted_total.get_str() + " expected " + expected_k.get_str() + " (delta " +
               Int(weighted_total - expected_k).get_str() + ")";
    if (unweighted_total != expected_unweighted)
        return "unweighted total " + std::to_string(unweighted_total) + " expected " +
               std::to_string(expected_unweighted);
    return "";
}

std::string BudgetReport::text() const {
    std::ostringstream out;
    for (const auto& p : paths)
        out << p.name << " weighted " << p.weighted.get_str() << " unweighted " << p.unweighted << " expected "
            << p.expected_weighted.get_str() << '/' << p.expected_unweighted << ' ' << (p.ok() ? "ok" : "FAIL")
            << '\n';
    out << "monochromatic blue-blue " << blue_blue << " red-red " << red_red << '\n';
    out << "total weighted " << weighted_total.get_str() << " unweighted " << unweighted_total << " expected "
        << expected_k.get_str() << '/' << expected_unweighted << ' ' << (ok() ? "ok" : "FAIL") << '\n';
    return out.str();
}

BudgetReport check_budgets(const Drawing& d, const CrInstance& inst) {
    const Graph& g = inst.G;
    const int n = inst.params.n, m = inst.params.m;
    const Int& w = inst.params.w;
    const Int w3 = w * w * w;
    auto rep = find_crossings(d, g, &inst.edge_color);

    BudgetReport br;
    br.expected_k = inst.params.k;
    br.expected_unweighted = inst.params.unw_total.get_si();
    std::vector<int> path_of(g.num_edges(), -1);
    auto add_path = [&](const std::string& name, const std::vector<int>& edges, const Int& ew, long eu) {
        for (int e : edges) path_of[e] = static_cast<int>(br.paths.size());
        br.paths.push_back(PathBudget{name, 0, 0, ew, eu});
    };
    for (int i = 1; i <= n; ++i)
        add_path("V_" + std::to_string(i), inst.paths.V[i], 2 * (2 * m + 2) * w3, 4L * m + 4);
    for (int j = 1; j <= m; ++j)
        add_path("H_" + std::to_string(j), inst.paths.H[j], (2 * n + 2) * w3 - (w * w + w - 1), 2L * n + 2);
    add_path("H_enf", inst.paths.H_enf, (2 * n + 1) * w3, 2L * n + 1);

    for (const auto& c : rep.crossings) {
        int c1 = inst.edge_color[c.e1], c2 = inst.edge_color[c.e2];
        Int cw = g.edge(c.e1).w * g.edge(c.e2).w;
        br.weighted_total += cw;
        br.unweighted_total += 1;
        if (c1 == 0 && c2 == 0) {
            ++br.blue_blue;
        } else if (c1 == 1 && c2 == 1) {
            ++br.red_red;
        } else {
            int p = path_of[c1 == 1 ? c.e1 : c.e2];
            if (p < 0) throw std::logic_error("red edge outside the path partition");
            br.paths[p].weighted += cw;
            br.paths[p].unweighted += 1;
        }
    }
    return br;
}

Drawing extend_to_near_planar(const Drawing& d, const NearPlanarInstance& np) {
    const Graph& g = np.with_extra;
    Drawing out = Drawing::for_graph(g);
    out.boundary = d.boundary;
    if (d.boundary.size() < 3) throw DrawingError("certificate drawing has no boundary");
    for (VertexId v = 0; v < g.num_vertices(); ++v) out.pos[v] = d.pos.at(v);
    for (int e = 0; e < static_cast<int>(d.route.size()); ++e) out.route[e] = d.route[e];

    // walk the boundary polygon from p to q in the direction of increasing
    // perimeter position; consecutive anchors have nothing in between
    const auto& B = d.boundary;
    const int nb = static_cast<int>(B.size());
    auto side_of = [&](const Point& p) {
        for (int s = 0; s < nb; ++s)
            if (on_segment(p, B[s], B[(s + 1) % nb]) && p != B[(s + 1) % nb]) return s;
        throw DrawingError("cycle vertex off the boundary");
    };
    for (int e : np.cycle_edges) {
        Point p = *out.pos[g.edge(e).u], q = *out.pos[g.edge(e).v];
        int sp = side_of(p), sq = side_of(q);
        Polyline walk{p};
        // anchors are listed clockwise; the polygon is counterclockwise, so
        // go backwards through corners unless p, q share a side
        bool same = sp == sq;
        if (same) {
            walk.push_back(q);
        } else {
            for (int s = sp; s != sq; s = (s - 1 + nb) % nb) walk.push_back(B[s]);
            walk.push_back(q);
        }
        out.route[e] = walk;
    }
    out.set_straight(g, np.extra_edge);
    auto rep = find_crossings(out, g);
    for (const auto& c : rep.crossings) {
        bool c1 = std::find(np.cycle_edges.begin(), np.cycle_edges.end(), c.e1) != np.cycle_edges.end();
        bool c2 = std::find(np.cycle_edges.begin(), np.cycle_edges.end(), c.e2) != np.cycle_edges.end();
        if (c1 || c2) throw DrawingError("cycle C is crossed");
    }
    if (rep.participation[np.extra_edge] > 0) {
        std::vector<int> hits(g.num_edges(), 0);
        for (const auto& c : rep.crossings)
            if (c.e1 == np.extra_edge || c.e2 == np.extra_edge)
                if (++hits[c.e1 == np.extra_edge ? c.e2 : c.e1] > 1)
                    throw DrawingError("edge rb crosses an edge twice");
    }
    return out;
}

Drawing mirror_drawing(const Drawing& d, const Rat& width) {
    Drawing out = d;
    auto flip = [&](Point& p) { p.x = width - p.x; };
    for (auto& p : out.pos)
        if (p) flip(*p);
    for (auto& r : out.route)
        for (auto& p : r) flip(p);
    for (auto& p : out.boundary) flip(p);
    std::reverse(out.boundary.begin(), out.boundary.end());
    return out;
}

}  // namespace crossforge
