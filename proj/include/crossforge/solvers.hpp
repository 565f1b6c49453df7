#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "crossforge/graph.hpp"

namespace crossforge {

class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CrossingSpec {
    int e1 = -1, e2 = -1;  // independent base edges
    // Rotation at the dummy read from a realizing embedding: true when the
    // clockwise order is (e1 toward u, e2 toward u, e1 toward v, e2 toward v).
    bool clockwise = true;
};

// A drawing described combinatorially: base edges are cut at one degree-4
// dummy vertex per crossing, in the order listed in along[e] (from u to v).
struct Planarization {
    Graph base;
    std::vector<CrossingSpec> crossings;
    std::vector<std::vector<int>> along;
    Graph derived;                 // base vertices keep their index; dummies follow
    std::vector<VertexId> dummy;   // dummy vertex of each crossing
    std::vector<std::vector<int>> pieces;  // derived edges of each base edge, u -> v
    Int cost = 0;                  // sum of w_e1 * w_e2
};

// Builds the derived graph; along[e] must list every crossing touching e.
Planarization planarize(const Graph& g, const std::vector<CrossingSpec>& crossings,
                        const std::vector<std::vector<int>>& along);

// Witness soundness: derived is (anchored-)planar, every dummy alternates the
// two edges in some embedding, and cost matches. reason is set on failure.
bool check_planarization(const Planarization& p, bool anchored, std::string* reason = nullptr);

std::string format_crossing_specs(const Planarization& p);

constexpr int kCrossingNumberMaxEdges = 10;
constexpr int kOnePlanarityMaxEdges = 14;

struct CrossingNumberResult {
    bool within_bound = false;
    Int value = 0;
    std::optional<Planarization> witness;
};

// Exact anchored crossing number over good drawings, or within_bound = false
// when it exceeds max_weighted.
CrossingNumberResult solve_anchored_crossing_number(const Graph& g, const Int& max_weighted);

struct OnePlanarityResult {
    bool one_planar = false;
    std::optional<Planarization> witness;
};

OnePlanarityResult solve_one_planarity(const Graph& g, bool anchored);

}  // namespace crossforge
