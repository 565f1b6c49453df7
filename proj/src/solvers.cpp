#include "crossforge/solvers.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "crossforge/embedding.hpp"

namespace crossforge {

namespace {

bool independent(const Graph& g, int a, int b) {
    const Edge& x = g.edge(a);
    const Edge& y = g.edge(b);
    return x.u != y.u && x.u != y.v && x.v != y.u && x.v != y.v;
}

std::vector<std::pair<int, int>> independent_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < g.num_edges(); ++a)
        for (int b = a + 1; b < g.num_edges(); ++b)
            if (independent(g, a, b)) out.push_back({a, b});
    return out;
}

bool realizable(const Graph& derived, bool anchored) {
    return anchored ? is_anchored_planar(derived) : is_planar(derived);
}

// Simple planar graphs have at most 3V - 6 edges; the derived graph gains one
// vertex and two edges per crossing.
int euler_lower_bound(const Graph& g) {
    return std::max(0, g.num_edges() - 3 * g.num_vertices() + 6);
}

// Reads the dummy rotations off an embedding of the derived graph. False if
// some dummy does not alternate its two edges.
bool read_rotations(Planarization& p, bool anchored) {
    CombinatorialEmbedding emb;
    try {
        emb = compute_embedding(p.derived, anchored);
    } catch (const NotPlanarError&) {
        return false;
    }
    for (size_t k = 0; k < p.crossings.size(); ++k) {
        auto& c = p.crossings[k];
        VertexId d = p.dummy[k];
        // incident derived edge -> (which base edge, toward u?)
        auto role = [&](int de) {
            for (int which : {0, 1}) {
                int e = which ? c.e2 : c.e1;
                const auto& pc = p.pieces[e];
                auto it = std::find(pc.begin(), pc.end(), de);
                if (it == pc.end()) continue;
                size_t i = it - pc.begin();
                const auto& along = p.along[e];
                size_t pos = std::find(along.begin(), along.end(), static_cast<int>(k)) - along.begin();
                return std::make_pair(which, i == pos);  // piece pos ends here coming from u
            }
            return std::make_pair(-1, false);
        };
        const auto& rot = emb.rotation.order[d];
        if (rot.size() != 4) return false;
        std::vector<std::pair<int, bool>> r;
        for (int de : rot) r.push_back(role(de));
        if (r[0].first == r[1].first || r[1].first == r[2].first) return false;
        // rotate so that e1 toward u comes first
        auto start = std::find(r.begin(), r.end(), std::make_pair(0, true)) - r.begin();
        c.clockwise = r[(start + 1) % 4] == std::make_pair(1, true);
    }
    return true;
}

}  // namespace

Planarization planarize(const Graph& g, const std::vector<CrossingSpec>& crossings,
                        const std::vector<std::vector<int>>& along) {
    Planarization p;
    p.base = g;
    p.crossings = crossings;
    p.along = along;
    p.along.resize(g.num_edges());
    for (const auto& v : g.vertices()) p.derived.add_vertex(v.name);
    p.derived.set_anchors(g.anchors());
    for (size_t k = 0; k < crossings.size(); ++k) {
        const auto& c = crossings[k];
        if (c.e1 < 0 || c.e2 < 0 || c.e1 >= g.num_edges() || c.e2 >= g.num_edges() || !independent(g, c.e1, c.e2))
            throw SolverError("crossing " + std::to_string(k) + " does not pair two independent edges");
        p.dummy.push_back(p.derived.add_vertex("x:" + std::to_string(k)));
        p.cost += g.edge(c.e1).w * g.edge(c.e2).w;
    }
    std::vector<int> seen(crossings.size(), 0);
    p.pieces.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        VertexId prev = ed.u;
        for (int k : p.along[e]) {
            if (k < 0 || k >= static_cast<int>(crossings.size()) ||
                (crossings[k].e1 != e && crossings[k].e2 != e))
                throw SolverError("edge " + std::to_string(e) + " lists a crossing it is not part of");
            ++seen[k];
            p.pieces[e].push_back(p.derived.add_edge(prev, p.dummy[k], ed.w));
            prev = p.dummy[k];
        }
        p.pieces[e].push_back(p.derived.add_edge(prev, ed.v, ed.w));
    }
    for (size_t k = 0; k < crossings.size(); ++k)
        if (seen[k] != 2) throw SolverError("crossing " + std::to_string(k) + " is not listed on both edges");
    return p;
}

bool check_planarization(const Planarization& p, bool anchored, std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    Planarization q;
    try {
        q = planarize(p.base, p.crossings, p.along);
    } catch (const SolverError& e) {
        return fail(e.what());
    }
    if (q.cost != p.cost) return fail("cost mismatch");
    if (serialize_agr(q.derived) != serialize_agr(p.derived)) return fail("derived graph mismatch");
    if (!realizable(q.derived, anchored)) return fail(anchored ? "derived graph not anchored planar" : "derived graph not planar");
    if (!read_rotations(q, anchored)) return fail("a dummy vertex does not alternate its edges");
    return true;
}

std::string format_crossing_specs(const Planarization& p) {
    std::ostringstream os;
    os << "cost " << p.cost.get_str() << "\n";
    for (size_t k = 0; k < p.crossings.size(); ++k) {
        const auto& c = p.crossings[k];
        const auto& a = p.base.edge(c.e1);
        const auto& b = p.base.edge(c.e2);
        os << "cross " << p.base.vertex(a.u).name << "-" << p.base.vertex(a.v).name << " "
           << p.base.vertex(b.u).name << "-" << p.base.vertex(b.v).name << " "
           << (c.clockwise ? "cw" : "ccw") << "\n";
    }
    return os.str();
}

CrossingNumberResult solve_anchored_crossing_number(const Graph& g, const Int& max_weighted) {
    if (g.num_edges() > kCrossingNumberMaxEdges)
        throw SolverError("crossing number oracle limited to " + std::to_string(kCrossingNumberMaxEdges) + " edges");
    CrossingNumberResult res;
    auto pairs = independent_pairs(g);
    std::vector<Int> cost;
    for (auto [a, b] : pairs) cost.push_back(g.edge(a).w * g.edge(b).w);

    // every subset sum up to the bound, in increasing order
    std::set<Int> sums{0};
    for (const Int& c : cost) {
        std::vector<Int> add;
        for (const Int& s : sums)
            if (s + c <= max_weighted) add.push_back(s + c);
        sums.insert(add.begin(), add.end());
    }
    int min_crossings = euler_lower_bound(g);

    std::vector<int> chosen;
    std::function<bool(size_t, const Int&)> subsets;
    std::function<bool(int, std::vector<std::vector<int>>&, const std::vector<CrossingSpec>&)> orders;

    orders = [&](int e, std::vector<std::vector<int>>& along, const std::vector<CrossingSpec>& cs) -> bool {
        if (e == g.num_edges()) {
            Planarization p = planarize(g, cs, along);
            if (!realizable(p.derived, true)) return false;
            read_rotations(p, true);
            res.witness = std::move(p);
            return true;
        }
        auto& a = along[e];
        std::sort(a.begin(), a.end());
        do {
            if (orders(e + 1, along, cs)) return true;
        } while (std::next_permutation(a.begin(), a.end()));
        return false;
    };

    subsets = [&](size_t i, const Int& left) -> bool {
        if (left == 0) {
            if (static_cast<int>(chosen.size()) < min_crossings) return false;
            std::vector<CrossingSpec> cs;
            std::vector<std::vector<int>> along(g.num_edges());
            for (int idx : chosen) {
                along[pairs[idx].first].push_back(static_cast<int>(cs.size()));
                along[pairs[idx].second].push_back(static_cast<int>(cs.size()));
                cs.push_back({pairs[idx].first, pairs[idx].second, true});
            }
            return orders(0, along, cs);
        }
        if (i == pairs.size()) return false;
        if (cost[i] <= left) {
            chosen.push_back(static_cast<int>(i));
            if (subsets(i + 1, left - cost[i])) return true;
            chosen.pop_back();
        }
        return subsets(i + 1, left);
    };

    for (const Int& target : sums) {
        chosen.clear();
        if (subsets(0, target)) {
            res.within_bound = true;
            res.value = target;
            return res;
        }
    }
    return res;
}

OnePlanarityResult solve_one_planarity(const Graph& g, bool anchored) {
    if (g.num_edges() > kOnePlanarityMaxEdges)
        throw SolverError("1-planarity oracle limited to " + std::to_string(kOnePlanarityMaxEdges) + " edges");
    OnePlanarityResult res;
    auto pairs = independent_pairs(g);
    int lower = euler_lower_bound(g);
    std::vector<char> used(g.num_edges(), 0);
    std::vector<int> chosen;

    std::function<bool(size_t, int)> match = [&](size_t i, int left) -> bool {
        if (left == 0) {
            std::vector<CrossingSpec> cs;
            std::vector<std::vector<int>> along(g.num_edges());
            for (int idx : chosen) {
                along[pairs[idx].first].push_back(static_cast<int>(cs.size()));
                along[pairs[idx].second].push_back(static_cast<int>(cs.size()));
                cs.push_back({pairs[idx].first, pairs[idx].second, true});
            }
            Planarization p = planarize(g, cs, along);
            if (!realizable(p.derived, anchored)) return false;
            read_rotations(p, anchored);
            res.witness = std::move(p);
            return true;
        }
        for (size_t j = i; j < pairs.size(); ++j) {
            auto [a, b] = pairs[j];
            if (used[a] || used[b]) continue;
            used[a] = used[b] = 1;
            chosen.push_back(static_cast<int>(j));
            bool ok = match(j + 1, left - 1);
            chosen.pop_back();
            used[a] = used[b] = 0;
            if (ok) return true;
        }
        return false;
    };

    for (int k = lower; 2 * k <= g.num_edges(); ++k)
        if (match(0, k)) {
            res.one_planar = true;
            return res;
        }
    return res;
}

}  // namespace crossforge
