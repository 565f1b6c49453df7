#pragma once

#include <limits>
#include <set>
#include <string>
#include <vector>

#include "crossforge/graph.hpp"

namespace crossforge {

// Dart 2e runs edge(e).u -> edge(e).v, dart 2e+1 runs back.
inline int dart_of(int e, bool forward) { return 2 * e + (forward ? 0 : 1); }
inline int dart_edge(int d) { return d / 2; }
inline int dart_twin(int d) { return d ^ 1; }
VertexId dart_tail(const Graph& g, int d);
VertexId dart_head(const Graph& g, int d);

struct RotationSystem {
    // per vertex: incident edge ids in clockwise order
    std::vector<std::vector<int>> order;

    bool operator==(const RotationSystem&) const = default;
};

struct CombinatorialEmbedding {
    RotationSystem rotation;
    std::vector<std::vector<int>> faces;  // each face: cyclic dart sequence
    std::vector<int> face_of_dart;
    int outer = -1;

    int num_faces() const { return static_cast<int>(faces.size()); }
};

constexpr long kUnreachable = std::numeric_limits<long>::max();

class NotPlanarError : public std::runtime_error {
public:
    NotPlanarError() : std::runtime_error("not planar") {}
};

bool is_planar(const Graph& g);
bool is_anchored_planar(const Graph& g);
bool is_connected(const Graph& g);
// Vertex connectivity >= 3. Fewer than 4 vertices is false; diag explains why.
bool is_three_connected(const Graph& g, std::string* diag = nullptr);
// Some separating pair {x, y} when the graph is connected but not 3-connected.
bool find_separation_pair(const Graph& g, VertexId* x, VertexId* y);

CombinatorialEmbedding compute_embedding(const Graph& g, bool anchored);
// Faces of a rotation system; every dart lies on exactly one face.
CombinatorialEmbedding embedding_from_rotation(const Graph& g, const RotationSystem& rot);
// Validates rotation contents; returns the Euler characteristic check
// V - E + F == 2 * components.
bool is_plane_rotation(const Graph& g, const RotationSystem& rot);

int count_components(const Graph& g);

// Vertices along a face walk (tails of its darts).
std::vector<VertexId> face_vertices(const Graph& g, const CombinatorialEmbedding& emb, int f);
// Canonical face name: sorted multiset of boundary vertex labels.
std::string face_key(const Graph& g, const CombinatorialEmbedding& emb, int f);
int find_face(const Graph& g, const CombinatorialEmbedding& emb, const std::string& key);

// Minimum number of edges a curve from face f to face h must cross;
// forbidden edges cannot be crossed. kUnreachable if no such curve.
long dual_distance(const Graph& g, const CombinatorialEmbedding& emb, int f, int h,
                   const std::set<int>& forbidden = {});
std::vector<long> dual_distances_from(const Graph& g, const CombinatorialEmbedding& emb, int f,
                                      const std::set<int>& forbidden = {});

RotationSystem extract_rotation_system(const CombinatorialEmbedding& emb);

// Anchors appear on face f as a cyclic subsequence in pi order or reversed.
bool face_carries_anchor_order(const Graph& g, const CombinatorialEmbedding& emb, int f);

}  // namespace crossforge
