#include "crossforge/transforms.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace crossforge {

namespace {

Graph copy_vertices(const Graph& g) {
    Graph h;
    for (const auto& v : g.vertices()) h.add_vertex(v.name, v.id);
    h.set_anchors(g.anchors());
    return h;
}

long next_free_id(const Graph& g) {
    long mx = -1;
    for (const auto& v : g.vertices()) mx = std::max(mx, v.id);
    return mx + 1;
}

std::string sub_label(const Graph& g, int e, long t) {
    return "sub:" + std::to_string(g.vertex(g.edge(e).u).id) + "-" + std::to_string(g.vertex(g.edge(e).v).id) + ":" +
           std::to_string(t);
}

}  // namespace

Graph expand_unweighted(const Graph& g, const std::set<int>& exempt) {
    Int added = 0;
    for (int e = 0; e < g.num_edges(); ++e) {
        if (exempt.count(e)) {
            if (g.edge(e).w != 1) throw GraphError("exempt edge must have weight 1");
            continue;
        }
        added += g.edge(e).w;
    }
    if (added > kExpandMaxNewVertices)
        throw GraphError("literal expansion needs " + added.get_str() + " new vertices (limit " +
                         std::to_string(kExpandMaxNewVertices) + ")");
    Graph h = copy_vertices(g);
    long id = next_free_id(g);
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (exempt.count(e)) {
            h.add_edge(ed.u, ed.v, 1);
            continue;
        }
        long w = ed.w.get_si();
        for (long t = 1; t <= w; ++t) {
            VertexId s = h.add_vertex(sub_label(g, e, t), id++);
            h.add_edge(ed.u, s, 1);
            h.add_edge(s, ed.v, 1);
        }
    }
    return h;
}

Graph expand_capped(const Graph& g, int cap, const std::set<int>& exempt) {
    if (cap < 1) throw GraphError("cap must be positive");
    Graph h = copy_vertices(g);
    long id = next_free_id(g);
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (exempt.count(e)) {
            if (ed.w != 1) throw GraphError("exempt edge must have weight 1");
            h.add_edge(ed.u, ed.v, 1);
            continue;
        }
        long c = ed.w < cap ? ed.w.get_si() : cap;
        Int q = ed.w / c, rem = ed.w % c;
        for (long t = 1; t <= c; ++t) {
            Int wt = q + (t <= rem ? 1 : 0);
            VertexId s = h.add_vertex(sub_label(g, e, t), id++);
            h.add_edge(ed.u, s, wt);
            h.add_edge(s, ed.v, wt);
        }
    }
    return h;
}

TransformParams transform_params(const CrInstance& inst) {
    TransformParams p;
    p.W = inst.G.total_weight();
    p.lambda = 320 * p.W * inst.params.n * inst.params.m;
    if (!(p.lambda > 2 * p.W)) throw GraphError("lambda <= 2W");
    return p;
}

NearPlanarInstance near_planar_cr_instance(const CrInstance& inst) {
    NearPlanarInstance np;
    np.params = transform_params(inst);
    np.expected_k = inst.params.k;
    const Graph& G = inst.G;
    const Int& lam = np.params.lambda;
    Graph base;
    for (const auto& v : G.vertices()) base.add_vertex(v.name, v.id);
    for (int e = 0; e < G.num_edges(); ++e) {
        base.add_edge(G.edge(e).u, G.edge(e).v, G.edge(e).w * lam);
        np.edge_color.push_back(inst.edge_color[e]);
    }
    Int lam4 = lam * lam * lam * lam;
    const auto& A = G.anchors();
    for (size_t i = 0; i < A.size(); ++i) {
        np.cycle_edges.push_back(base.add_edge(A[i], A[(i + 1) % A.size()], lam4));
        np.edge_color.push_back(2);
    }
    for (VertexId v = 0; v < G.num_vertices(); ++v) {
        if (G.is_anchor(v)) continue;
        if (inst.vertex_color[v] == 1 && np.r < 0) np.r = v;
        if (inst.vertex_color[v] == 0 && np.b < 0) np.b = v;
    }
    if (np.r < 0 || np.b < 0) throw GraphError("no non-anchor vertex to attach the extra edge");
    np.base = base;
    np.with_extra = base;
    np.extra_edge = np.with_extra.add_edge(np.r, np.b, 1);
    return np;
}

namespace {

struct ChordBuilder {
    Graph& g;
    RotationSystem& rot;
    const std::vector<int>& sub_color;  // per vertex: -1 original, else bundle colour 0/1/2
    std::vector<int> initial_face_of_dart;
    std::vector<char> is_chord;
    std::map<int, int> chords_per_initial_face;

    CombinatorialEmbedding current() const { return embedding_from_rotation(g, rot); }

    // red faces accept only red subdividing vertices, the others blue and cycle ones
    bool red_face(const CombinatorialEmbedding& emb, int f) const {
        for (int d : emb.faces[f]) {
            VertexId v = dart_tail(g, d);
            if (v < static_cast<int>(sub_color.size()) && sub_color[v] == 1) return true;
        }
        return false;
    }

    bool allowed(bool red_side, VertexId v) const {
        if (v >= static_cast<int>(sub_color.size()) || sub_color[v] < 0) return false;
        return red_side ? sub_color[v] == 1 : sub_color[v] != 1;
    }

    int origin(const CombinatorialEmbedding& emb, int f) const {
        for (int d : emb.faces[f])
            if (!is_chord[dart_edge(d)]) return initial_face_of_dart[d];
        return -1;
    }

    void insert_at(VertexId p, int e_in, int chord) {
        auto& r = rot.order[p];
        auto it = std::find(r.begin(), r.end(), e_in);
        r.insert(it + 1, chord);
    }

    // Adds chord pq inside face f of emb (both on its boundary).
    void add(const CombinatorialEmbedding& emb, int f, VertexId p, VertexId q) {
        const auto& walk = emb.faces[f];
        int L = static_cast<int>(walk.size());
        int ip = -1, iq = -1;
        for (int i = 0; i < L; ++i) {
            VertexId t = dart_tail(g, walk[i]);
            if (t == p && ip < 0) ip = i;
            if (t == q && iq < 0) iq = i;
        }
        if (ip < 0 || iq < 0) throw GraphError("chord endpoint not on face");
        int ein_p = dart_edge(walk[(ip - 1 + L) % L]);
        int ein_q = dart_edge(walk[(iq - 1 + L) % L]);
        int org = origin(emb, f);
        int c = g.add_edge(p, q, 1);
        is_chord.push_back(1);
        initial_face_of_dart.push_back(org);
        initial_face_of_dart.push_back(org);
        insert_at(p, ein_p, c);
        insert_at(q, ein_q, c);
        chords_per_initial_face[org] += 1;
    }
};

}  // namespace

ThreeConnectedInstance three_connected_instance(const CrInstance& inst, int cap) {
    if (cap < 2) throw GraphError("bundle cap must be at least 2");
    NearPlanarInstance np = near_planar_cr_instance(inst);
    const Graph& Gp = np.base;
    ThreeConnectedInstance tc;
    tc.params = np.params;
    tc.r = np.r;
    tc.b = np.b;
    // G'': bundles of subdivided parallel paths joined by a path through the
    // subdividing vertices
    Graph& H = tc.tilde;
    for (const auto& v : Gp.vertices()) H.add_vertex(v.name, v.id);
    std::vector<int> sub_color(Gp.num_vertices(), -1);
    std::vector<int> bundle_of(Gp.num_vertices(), -1);
    long id = next_free_id(Gp);
    for (int e = 0; e < Gp.num_edges(); ++e) {
        const Edge& ed = Gp.edge(e);
        long c = ed.w < cap ? ed.w.get_si() : cap;
        Int q = ed.w / c, rem = ed.w % c;
        VertexId prev = -1;
        for (long t = 1; t <= c; ++t) {
            Int wt = q + (t <= rem ? 1 : 0);
            VertexId s = H.add_vertex(sub_label(Gp, e, t), id++);
            sub_color.push_back(np.edge_color[e]);
            bundle_of.push_back(e);
            H.add_edge(ed.u, s, wt);
            H.add_edge(s, ed.v, wt);
            if (prev >= 0) H.add_edge(prev, s, 1);
            prev = s;
        }
    }
    for (VertexId a : inst.G.anchors()) tc.cycle_vertices.push_back(a);
    int base_edges = H.num_edges();
    auto emb0 = compute_embedding(H, false);
    RotationSystem rot = emb0.rotation;
    ChordBuilder cb{H, rot, sub_color, emb0.face_of_dart, std::vector<char>(base_edges, 0), {}};

    // first pass: per initial face, chain up the bundles that have no chord yet
    std::vector<char> covered(Gp.num_edges(), 0);
    const int per_face_limit = 4;
    for (int f0 = 0; f0 < emb0.num_faces(); ++f0) {
        if (emb0.faces[f0].size() <= 3) continue;
        bool red_side = cb.red_face(emb0, f0);
        std::vector<VertexId> cand;
        for (int d : emb0.faces[f0]) {
            VertexId v = dart_tail(H, d);
            if (cb.allowed(red_side, v) && std::find(cand.begin(), cand.end(), v) == cand.end()) cand.push_back(v);
        }
        if (cand.size() < 2) continue;
        std::vector<VertexId> pick;
        for (VertexId v : cand)
            if (!covered[bundle_of[v]]) pick.push_back(v);
        if (pick.empty()) continue;
        if (pick.size() == 1) {
            auto it = std::find(cand.begin(), cand.end(), pick[0]);
            pick.push_back(*(std::next(it) == cand.end() ? cand.begin() : std::next(it)));
        }
        int used = 0;
        for (size_t i = 1; i < pick.size() && used < per_face_limit; ++i) {
            VertexId p = pick[i - 1], q = pick[i];
            auto emb = cb.current();
            int target = -1;
            for (int f = 0; f < emb.num_faces() && target < 0; ++f) {
                if (cb.origin(emb, f) != f0) continue;
                bool hp = false, hq = false;
                for (int d : emb.faces[f]) {
                    hp = hp || dart_tail(H, d) == p;
                    hq = hq || dart_tail(H, d) == q;
                }
                if (hp && hq) target = f;
            }
            if (target < 0 || H.find_edge(p, q) >= 0) continue;
            cb.add(emb, target, p, q);
            covered[bundle_of[p]] = covered[bundle_of[q]] = 1;
            ++used;
        }
    }

    // repair: kill remaining separation pairs with chords inside a common face
    for (int guard = 0; guard < 100000; ++guard) {
        VertexId x = -1, y = -1;
        bool broken = !is_connected(H) || find_separation_pair(H, &x, &y);
        if (!broken) break;
        if (x < 0) throw GraphError("augmentation failed: graph disconnected");
        std::vector<int> comp(H.num_vertices(), -1);
        int nc = 0;
        for (VertexId s = 0; s < H.num_vertices(); ++s) {
            if (s == x || s == y || comp[s] >= 0) continue;
            std::vector<VertexId> st{s};
            comp[s] = nc;
            while (!st.empty()) {
                VertexId a = st.back();
                st.pop_back();
                for (auto [bv, e] : H.incident(a))
                    if (bv != x && bv != y && comp[bv] < 0) {
                        comp[bv] = nc;
                        st.push_back(bv);
                    }
            }
            ++nc;
        }
        auto emb = cb.current();
        bool added = false;
        for (int f = 0; f < emb.num_faces() && !added; ++f) {
            bool red_side = cb.red_face(emb, f);
            std::vector<VertexId> cand;
            for (int d : emb.faces[f]) {
                VertexId v = dart_tail(H, d);
                if (v != x && v != y && cb.allowed(red_side, v)) cand.push_back(v);
            }
            for (size_t i = 0; i < cand.size() && !added; ++i)
                for (size_t j = i + 1; j < cand.size() && !added; ++j)
                    if (comp[cand[i]] != comp[cand[j]] && H.find_edge(cand[i], cand[j]) < 0) {
                        cb.add(emb, f, cand[i], cand[j]);
                        added = true;
                    }
        }
        if (!added) throw GraphError("augmentation failed: no chord separates pair " + H.vertex(x).name + ", " +
                                     (y >= 0 ? H.vertex(y).name : std::string("-")));
    }
    std::string diag;
    if (!is_three_connected(H, &diag)) throw GraphError("augmentation failed: " + diag);
    for (int e = base_edges; e < H.num_edges(); ++e) tc.additional_edges.push_back(e);
    for (const auto& [f, c] : cb.chords_per_initial_face) tc.max_additional_per_face = std::max(tc.max_additional_per_face, c);
    tc.emb = embedding_from_rotation(H, rot);
    if (!is_plane_rotation(H, rot)) throw GraphError("augmentation broke planarity");
    return tc;
}

FixedRotationInstance fixed_rotation_instance(const CrInstance& inst, int cap) {
    auto tc = three_connected_instance(inst, cap);
    FixedRotationInstance fr;
    fr.tilde = tc.tilde;
    fr.rotation = tc.emb.rotation;
    return fr;
}

std::string near_planar_meta(const NearPlanarInstance& np) {
    std::ostringstream out;
    const Graph& g = np.with_extra;
    out << "meta 1\nparam W " << np.params.W.get_str() << "\nparam lambda " << np.params.lambda.get_str()
        << "\nparam k " << np.expected_k.get_str() << "\nextra " << g.vertex(np.r).id << ':' << g.vertex(np.b).id
        << "\ncycle";
    for (int e : np.cycle_edges) out << ' ' << g.vertex(g.edge(e).u).id << ':' << g.vertex(g.edge(e).v).id;
    out << '\n';
    return out.str();
}

std::string three_connected_meta(const ThreeConnectedInstance& tc) {
    std::ostringstream out;
    const Graph& g = tc.tilde;
    out << "meta 1\nparam W " << tc.params.W.get_str() << "\nparam lambda " << tc.params.lambda.get_str()
        << "\nextra " << g.vertex(tc.r).id << ':' << g.vertex(tc.b).id << "\nadditional";
    for (int e : tc.additional_edges) out << ' ' << g.vertex(g.edge(e).u).id << ':' << g.vertex(g.edge(e).v).id;
    out << "\ncycle_vertices";
    for (VertexId v : tc.cycle_vertices) out << ' ' << g.vertex(v).id;
    out << '\n';
    return out.str();
}

}  // namespace crossforge
