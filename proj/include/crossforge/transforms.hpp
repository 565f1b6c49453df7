#pragma once

#include <set>
#include <vector>

#include "crossforge/cr.hpp"
#include "crossforge/embedding.hpp"
#include "crossforge/graph.hpp"

namespace crossforge {

// Largest expansion expand_unweighted will materialise.
constexpr long kExpandMaxNewVertices = 2000000;

// Every edge of weight w becomes w parallel 2-paths with unit weights; edges
// listed in exempt are copied verbatim and must have weight 1.
Graph expand_unweighted(const Graph& g, const std::set<int>& exempt = {});

// Structural stand-in for expand_unweighted: min(w, cap) parallel 2-paths
// whose weights add up to w. Planarity, connectivity and anchored planarity
// agree with the literal expansion.
Graph expand_capped(const Graph& g, int cap, const std::set<int>& exempt = {});

struct TransformParams {
    Int W;
    Int lambda;
};

TransformParams transform_params(const CrInstance& inst);

struct NearPlanarInstance {
    Graph base;                 // G' with the cycle C
    Graph with_extra;           // G' + rb
    VertexId r = -1, b = -1;    // same ids in base and with_extra
    int extra_edge = -1;        // id of rb in with_extra
    std::vector<int> cycle_edges;
    std::vector<int> edge_color;  // per base edge: 0 blue, 1 red, 2 cycle
    TransformParams params;
    Int expected_k;             // CRA(G) for satisfiable instances
};

NearPlanarInstance near_planar_cr_instance(const CrInstance& inst);

struct ThreeConnectedInstance {
    Graph tilde;                // simple, planar, 3-connected
    VertexId r = -1, b = -1;
    std::vector<int> additional_edges;
    std::vector<int> cycle_vertices;  // anchors of G, carried by C
    CombinatorialEmbedding emb;       // planar embedding including the additional edges
    int max_additional_per_face = 0;
    TransformParams params;
};

// cap bounds the number of parallel subdivided paths per bundle (>= 2).
ThreeConnectedInstance three_connected_instance(const CrInstance& inst, int cap = 2);

struct FixedRotationInstance {
    Graph tilde;
    RotationSystem rotation;
};

FixedRotationInstance fixed_rotation_instance(const CrInstance& inst, int cap = 2);

std::string near_planar_meta(const NearPlanarInstance& np);
std::string three_connected_meta(const ThreeConnectedInstance& tc);

}  // namespace crossforge
