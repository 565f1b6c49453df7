#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "crossforge/drawing.hpp"
#include "crossforge/embedding.hpp"
#include "crossforge/graph.hpp"
#include "crossforge/sat.hpp"

namespace crossforge {

struct CrParams {
    int n = 0, m = 0;
    Int w, k, unw_total;
    Int W = 0;  // total edge weight, known once G is built
};

CrParams cr_params(int n, int m);

std::string blue_label(int a, int b);
// Label of grid position r_(a,b) after the bottom/top identifications.
std::string red_label(int n, int m, int a, int b);

Graph build_blue(const CnfInstance& cnf);
Graph build_red(const CnfInstance& cnf);

// Faces of the blue graph in its grid layout, closed off by a frame cycle
// through the blue anchors so that every region of the disk is a face.
struct RegionMap {
    Graph framed;                         // blue vertices (same labels) + frame edges
    std::vector<char> is_frame_edge;      // per framed edge
    CombinatorialEmbedding emb;
    std::map<std::pair<int, int>, int> face_of_cell;  // unit cell with lower-left corner (a, b)
    std::vector<std::set<int>> col_T, col_F;          // 1..n
    std::vector<std::set<int>> upper, lower;          // 1..m
    std::set<int> enforcing;
    std::vector<std::vector<int>> boundary;           // 1..m: G edge ids between L_j and U_j
};

struct RedPathPartition {
    std::vector<std::vector<int>> V;  // 1..n, G edge ids
    std::vector<std::vector<int>> H;  // 1..m
    std::vector<int> H_enf;
};

struct CrInstance {
    CnfInstance cnf;
    CrParams params;
    Graph G;
    std::vector<int> edge_color;    // 0 blue, 1 red
    std::vector<int> vertex_color;  // 0 blue, 1 red
    RegionMap regions;
    RedPathPartition paths;

    Graph blue() const;
    Graph red() const;
};

// Grid position of every anchor on the boundary rectangle [0, 2n+2] x [0, 2m+3].
std::map<std::string, Point> cr_anchor_positions(int n, int m);
std::vector<Point> cr_boundary(int n, int m);

CrInstance build_cr_instance(const CnfInstance& cnf);
std::string cr_meta(const CrInstance& inst);

}  // namespace crossforge
