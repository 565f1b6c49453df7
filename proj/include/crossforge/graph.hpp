#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace crossforge {

using Int = mpz_class;
using VertexId = int;

enum class VertexKind { Blue, Red, Gadget, Subdividing, ThickInternal, Apex, Plain };

// Kind is derived from the label prefix so that labels alone round-trip
// through the text format.
VertexKind kind_from_name(const std::string& name);
const char* kind_name(VertexKind k);

struct Vertex {
    long id = 0;  // external id used by the .agr format
    std::string name;
    VertexKind kind = VertexKind::Plain;
};

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Int w = 1;

    VertexId other(VertexId x) const { return x == u ? v : u; }
};

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple weighted graph with an optional cyclic anchor order.
// Vertices are addressed by dense index; Vertex::id is only for serialization.
class Graph {
public:
    VertexId add_vertex(const std::string& name, long id = -1);
    int add_edge(VertexId u, VertexId v, const Int& w = 1);

    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    void set_weight(int e, const Int& w);

    // (neighbor, edge id) pairs in insertion order
    const std::vector<std::pair<VertexId, int>>& incident(VertexId v) const { return adj_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(adj_.at(v).size()); }
    int max_degree() const;

    int find_edge(VertexId u, VertexId v) const;
    VertexId find(const std::string& name) const;  // -1 if absent
    VertexId at(const std::string& name) const;    // throws if absent

    const std::vector<VertexId>& anchors() const { return anchors_; }
    void set_anchors(std::vector<VertexId> order);
    bool is_anchor(VertexId v) const;

    Int total_weight() const;
    bool unweighted() const;

private:
    static long long key(VertexId u, VertexId v);

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<VertexId, int>>> adj_;
    std::unordered_map<long long, int> edge_index_;
    std::unordered_map<std::string, VertexId> by_name_;
    std::vector<VertexId> anchors_;
    std::vector<char> anchor_flag_;
};

// Subgraph induced by an edge subset, keeping all listed vertices and the
// anchors among them (anchor order inherited). Returns old->new vertex map.
Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids,
                    const std::vector<VertexId>& keep_vertices,
                    std::vector<VertexId>* old_to_new = nullptr);

Graph parse_agr(const std::string& text);
std::string serialize_agr(const Graph& g);

}  // namespace crossforge
