#include "crossforge/embedding.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace crossforge {

namespace {

using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                     boost::property<boost::vertex_index_t, int>,
                                     boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;

BGraph to_boost(const Graph& g) {
    BGraph bg(g.num_vertices());
    auto idx = get(boost::edge_index, bg);
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [be, ok] = boost::add_edge(g.edge(e).u, g.edge(e).v, bg);
        (void)ok;
        put(idx, be, e);
    }
    return bg;
}

bool boost_embed(const Graph& g, RotationSystem* rot) {
    BGraph bg = to_boost(g);
    std::vector<std::vector<BEdge>> emb(g.num_vertices());
    bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                      boost::boyer_myrvold_params::embedding = &emb[0]);
    if (planar && rot) {
        auto idx = get(boost::edge_index, bg);
        rot->order.assign(g.num_vertices(), {});
        for (int v = 0; v < g.num_vertices(); ++v)
            for (const auto& be : emb[v]) rot->order[v].push_back(get(idx, be));
    }
    return planar;
}

bool boost_planar(const Graph& g) {
    BGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

// g plus a subdivided cycle through the anchors and an apex joined to all of
// them. Original vertex and edge ids are preserved as a prefix.
Graph anchor_augmented(const Graph& g) {
    Graph h;
    for (const auto& v : g.vertices()) h.add_vertex(v.name, v.id);
    for (const auto& e : g.edges()) h.add_edge(e.u, e.v, e.w);
    const auto& a = g.anchors();
    int k = static_cast<int>(a.size());
    if (k == 2) {
        VertexId c = h.add_vertex("apex:c0");
        h.add_edge(a[0], c);
        h.add_edge(c, a[1]);
    } else if (k >= 3) {
        for (int i = 0; i < k; ++i) {
            VertexId c = h.add_vertex("apex:c" + std::to_string(i));
            h.add_edge(a[i], c);
            h.add_edge(c, a[(i + 1) % k]);
        }
        VertexId apex = h.add_vertex("apex");
        for (VertexId x : a) h.add_edge(apex, x);
    }
    return h;
}

std::vector<int> component_ids(const Graph& g, int* count) {
    std::vector<int> comp(g.num_vertices(), -1);
    int c = 0;
    for (VertexId s = 0; s < g.num_vertices(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<VertexId> stack{s};
        comp[s] = c;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (auto [y, e] : g.incident(x))
                if (comp[y] < 0) {
                    comp[y] = c;
                    stack.push_back(y);
                }
        }
        ++c;
    }
    if (count) *count = c;
    return comp;
}

// Connected and free of articulation points, ignoring vertices with removed[v].
bool biconnected_without(const Graph& g, const std::vector<char>& removed, VertexId* cut = nullptr) {
    int n = g.num_vertices();
    VertexId root = -1;
    int alive = 0;
    for (VertexId v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (root < 0) root = v;
        }
    if (alive <= 2) return alive > 0;
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0, visited = 0;
    bool ok = true;
    // iterative DFS
    struct Frame {
        VertexId v;
        int parent_edge;
        size_t next;
        int children;
    };
    std::vector<Frame> st;
    st.push_back({root, -1, 0, 0});
    disc[root] = low[root] = timer++;
    ++visited;
    while (!st.empty() && ok) {
        Frame& f = st.back();
        const auto& inc = g.incident(f.v);
        if (f.next < inc.size()) {
            auto [y, e] = inc[f.next++];
            if (removed[y] || e == f.parent_edge) continue;
            if (disc[y] < 0) {
                disc[y] = low[y] = timer++;
                ++visited;
                ++f.children;
                st.push_back({y, e, 0, 0});
            } else {
                low[f.v] = std::min(low[f.v], disc[y]);
            }
        } else {
            Frame done = f;
            st.pop_back();
            if (!st.empty()) {
                Frame& p = st.back();
                low[p.v] = std::min(low[p.v], low[done.v]);
                if (p.parent_edge >= 0 && low[done.v] >= disc[p.v]) {
                    ok = false;
                    if (cut) *cut = p.v;
                }
            } else if (done.children > 1) {
                ok = false;
                if (cut) *cut = done.v;
            }
        }
    }
    if (!ok) return false;
    return visited == alive;
}

}  // namespace

VertexId dart_tail(const Graph& g, int d) {
    const Edge& e = g.edge(dart_edge(d));
    return (d & 1) ? e.v : e.u;
}

VertexId dart_head(const Graph& g, int d) {
    const Edge& e = g.edge(dart_edge(d));
    return (d & 1) ? e.u : e.v;
}

bool is_planar(const Graph& g) { return boost_planar(g); }

bool is_anchored_planar(const Graph& g) { return boost_planar(anchor_augmented(g)); }

int count_components(const Graph& g) {
    int c = 0;
    component_ids(g, &c);
    return c;
}

bool is_connected(const Graph& g) { return count_components(g) <= 1; }

bool find_separation_pair(const Graph& g, VertexId* x, VertexId* y) {
    std::vector<char> removed(g.num_vertices(), 0);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        removed[v] = 1;
        VertexId cut = -1;
        if (!biconnected_without(g, removed, &cut)) {
            if (x) *x = v;
            if (y) *y = cut;
            removed[v] = 0;
            return true;
        }
        removed[v] = 0;
    }
    return false;
}

bool is_three_connected(const Graph& g, std::string* diag) {
    if (g.num_vertices() < 4) {
        if (diag) *diag = "fewer than 4 vertices";
        return false;
    }
    std::vector<char> none(g.num_vertices(), 0);
    VertexId c = -1;
    if (!biconnected_without(g, none, &c)) {
        if (diag) *diag = c >= 0 ? "cut vertex " + g.vertex(c).name : "disconnected";
        return false;
    }
    VertexId x = -1, y = -1;
    if (find_separation_pair(g, &x, &y)) {
        if (diag)
            *diag = y >= 0 ? "separation pair {" + g.vertex(x).name + ", " + g.vertex(y).name + "}"
                           : "removing " + g.vertex(x).name + " disconnects";
        return false;
    }
    return true;
}

CombinatorialEmbedding embedding_from_rotation(const Graph& g, const RotationSystem& rot) {
    int n = g.num_vertices();
    if (static_cast<int>(rot.order.size()) != n) throw GraphError("rotation system size mismatch");
    // position of each edge in the rotation of each endpoint
    std::vector<int> pos(2 * g.num_edges(), -1);  // indexed by dart leaving the vertex
    for (VertexId v = 0; v < n; ++v) {
        const auto& ord = rot.order[v];
        if (static_cast<int>(ord.size()) != g.degree(v))
            throw GraphError("rotation at " + g.vertex(v).name + " has wrong length");
        for (int i = 0; i < static_cast<int>(ord.size()); ++i) {
            int e = ord[i];
            if (e < 0 || e >= g.num_edges()) throw GraphError("rotation lists unknown edge");
            const Edge& ed = g.edge(e);
            int d;
            if (ed.u == v) d = dart_of(e, true);
            else if (ed.v == v) d = dart_of(e, false);
            else throw GraphError("rotation at " + g.vertex(v).name + " lists a non-incident edge");
            if (pos[d] >= 0) throw GraphError("rotation at " + g.vertex(v).name + " repeats an edge");
            pos[d] = i;
        }
    }
    CombinatorialEmbedding emb;
    emb.rotation = rot;
    emb.face_of_dart.assign(2 * g.num_edges(), -1);
    for (int d0 = 0; d0 < 2 * g.num_edges(); ++d0) {
        if (emb.face_of_dart[d0] >= 0) continue;
        int f = emb.num_faces();
        emb.faces.emplace_back();
        int d = d0;
        while (emb.face_of_dart[d] < 0) {
            emb.face_of_dart[d] = f;
            emb.faces[f].push_back(d);
            // arrive at head, leave along the clockwise successor of the twin
            int t = dart_twin(d);
            VertexId h = dart_tail(g, t);
            const auto& ord = rot.order[h];
            int e2 = ord[(pos[t] + 1) % ord.size()];
            d = g.edge(e2).u == h ? dart_of(e2, true) : dart_of(e2, false);
        }
    }
    return emb;
}

bool is_plane_rotation(const Graph& g, const RotationSystem& rot) {
    CombinatorialEmbedding emb;
    try {
        emb = embedding_from_rotation(g, rot);
    } catch (const GraphError&) {
        return false;
    }
    int comps = 0;
    component_ids(g, &comps);
    int isolated = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) ++isolated;
    long chi = static_cast<long>(g.num_vertices()) - g.num_edges() + emb.num_faces() + isolated;
    return chi == 2L * comps;
}

std::vector<VertexId> face_vertices(const Graph& g, const CombinatorialEmbedding& emb, int f) {
    std::vector<VertexId> out;
    for (int d : emb.faces.at(f)) out.push_back(dart_tail(g, d));
    return out;
}

bool face_carries_anchor_order(const Graph& g, const CombinatorialEmbedding& emb, int f) {
    const auto& a = g.anchors();
    if (a.size() <= 2) {
        auto vs = face_vertices(g, emb, f);
        for (VertexId x : a)
            if (std::find(vs.begin(), vs.end(), x) == vs.end()) return false;
        return true;
    }
    auto walk = face_vertices(g, emb, f);
    int L = static_cast<int>(walk.size());
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<VertexId> seq = a;
        if (dir == 1) std::reverse(seq.begin() + 1, seq.end());
        for (int s = 0; s < L; ++s) {
            if (walk[s] != seq[0]) continue;
            size_t k = 1;
            for (int t = 1; t < L && k < seq.size(); ++t)
                if (walk[(s + t) % L] == seq[k]) ++k;
            if (k == seq.size()) return true;
        }
    }
    return false;
}

CombinatorialEmbedding compute_embedding(const Graph& g, bool anchored) {
    if (!anchored || g.anchors().size() <= 1) {
        RotationSystem rot;
        if (!boost_embed(g, &rot)) throw NotPlanarError();
        auto emb = embedding_from_rotation(g, rot);
        // outer face: the longest one, first on ties
        int best = -1;
        for (int f = 0; f < emb.num_faces(); ++f)
            if (best < 0 || emb.faces[f].size() > emb.faces[best].size()) best = f;
        emb.outer = best;
        if (!g.anchors().empty() && best >= 0) {
            for (int f = 0; f < emb.num_faces(); ++f)
                if (face_carries_anchor_order(g, emb, f)) {
                    emb.outer = f;
                    break;
                }
        }
        return emb;
    }
    Graph h = anchor_augmented(g);
    RotationSystem hrot;
    if (!boost_embed(h, &hrot)) throw NotPlanarError();
    RotationSystem rot;
    rot.order.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        for (int e : hrot.order[v])
            if (e < g.num_edges()) rot.order[v].push_back(e);
    auto emb = embedding_from_rotation(g, rot);
    for (int f = 0; f < emb.num_faces(); ++f)
        if (face_carries_anchor_order(g, emb, f)) {
            emb.outer = f;
            break;
        }
    return emb;
}

std::string face_key(const Graph& g, const CombinatorialEmbedding& emb, int f) {
    std::vector<std::string> names;
    for (VertexId v : face_vertices(g, emb, f)) names.push_back(g.vertex(v).name);
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& s : names) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

int find_face(const Graph& g, const CombinatorialEmbedding& emb, const std::string& key) {
    for (int f = 0; f < emb.num_faces(); ++f)
        if (face_key(g, emb, f) == key) return f;
    return -1;
}

std::vector<long> dual_distances_from(const Graph& g, const CombinatorialEmbedding& emb, int f,
                                      const std::set<int>& forbidden) {
    if (f < 0 || f >= emb.num_faces()) throw GraphError("unknown face id " + std::to_string(f));
    std::vector<long> dist(emb.num_faces(), kUnreachable);
    std::deque<int> q{f};
    dist[f] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int d : emb.faces[x]) {
            int e = dart_edge(d);
            if (forbidden.count(e)) continue;
            int y = emb.face_of_dart[dart_twin(d)];
            if (dist[y] == kUnreachable) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
        }
    }
    (void)g;
    return dist;
}

long dual_distance(const Graph& g, const CombinatorialEmbedding& emb, int f, int h,
                   const std::set<int>& forbidden) {
    if (h < 0 || h >= emb.num_faces()) throw GraphError("unknown face id " + std::to_string(h));
    return dual_distances_from(g, emb, f, forbidden)[h];
}

RotationSystem extract_rotation_system(const CombinatorialEmbedding& emb) { return emb.rotation; }

}  // namespace crossforge
