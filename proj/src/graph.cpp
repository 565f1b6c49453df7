#include "crossforge/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace crossforge {

VertexKind kind_from_name(const std::string& name) {
    auto starts = [&](const char* p) { return name.rfind(p, 0) == 0; };
    if (starts("b(")) return VertexKind::Blue;
    if (starts("r(") || starts("r'(")) return VertexKind::Red;
    if (starts("u(") || starts("v(") || starts("v'(") || starts("y:")) return VertexKind::Gadget;
    if (starts("sub:")) return VertexKind::Subdividing;
    if (starts("thk:")) return VertexKind::ThickInternal;
    if (starts("apex")) return VertexKind::Apex;
    return VertexKind::Plain;
}

const char* kind_name(VertexKind k) {
    switch (k) {
        case VertexKind::Blue: return "blue";
        case VertexKind::Red: return "red";
        case VertexKind::Gadget: return "gadget";
        case VertexKind::Subdividing: return "subdividing";
        case VertexKind::ThickInternal: return "thick-internal";
        case VertexKind::Apex: return "apex";
        case VertexKind::Plain: return "plain";
    }
    return "plain";
}

long long Graph::key(VertexId u, VertexId v) {
    if (u > v) std::swap(u, v);
    return (static_cast<long long>(u) << 32) | static_cast<unsigned>(v);
}

VertexId Graph::add_vertex(const std::string& name, long id) {
    if (name.empty() || name.find_first_of(" \t\n") != std::string::npos)
        throw GraphError("vertex label must be a non-empty token: '" + name + "'");
    if (by_name_.count(name)) throw GraphError("duplicate vertex label " + name);
    VertexId v = num_vertices();
    vertices_.push_back({id < 0 ? v : id, name, kind_from_name(name)});
    adj_.emplace_back();
    anchor_flag_.push_back(0);
    by_name_[name] = v;
    return v;
}

int Graph::add_edge(VertexId u, VertexId v, const Int& w) {
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw GraphError("edge endpoint out of range");
    if (u == v) throw GraphError("self-loop at " + vertices_[u].name);
    if (w < 1) throw GraphError("non-positive weight on edge " + vertices_[u].name + "-" + vertices_[v].name);
    auto k = key(u, v);
    if (edge_index_.count(k))
        throw GraphError("duplicate edge " + vertices_[u].name + "-" + vertices_[v].name);
    int e = num_edges();
    edges_.push_back({u, v, w});
    edge_index_[k] = e;
    adj_[u].push_back({v, e});
    adj_[v].push_back({u, e});
    return e;
}

void Graph::set_weight(int e, const Int& w) {
    if (w < 1) throw GraphError("non-positive weight");
    edges_.at(e).w = w;
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::find_edge(VertexId u, VertexId v) const {
    auto it = edge_index_.find(key(u, v));
    return it == edge_index_.end() ? -1 : it->second;
}

VertexId Graph::find(const std::string& name) const {
    auto it = by_name_.find(name);
    return it == by_name_.end() ? -1 : it->second;
}

VertexId Graph::at(const std::string& name) const {
    VertexId v = find(name);
    if (v < 0) throw GraphError("no vertex labelled " + name);
    return v;
}

void Graph::set_anchors(std::vector<VertexId> order) {
    std::vector<char> flag(vertices_.size(), 0);
    for (VertexId a : order) {
        if (a < 0 || a >= num_vertices()) throw GraphError("anchor out of range");
        if (flag[a]) throw GraphError("repeated anchor " + vertices_[a].name);
        flag[a] = 1;
    }
    anchors_ = std::move(order);
    anchor_flag_ = std::move(flag);
}

bool Graph::is_anchor(VertexId v) const { return anchor_flag_.at(v) != 0; }

Int Graph::total_weight() const {
    Int s = 0;
    for (const auto& e : edges_) s += e.w;
    return s;
}

bool Graph::unweighted() const {
    return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1; });
}

Graph edge_subgraph(const Graph& g, const std::vector<int>& edge_ids,
                    const std::vector<VertexId>& keep_vertices, std::vector<VertexId>* old_to_new) {
    std::vector<VertexId> map(g.num_vertices(), -1);
    std::vector<char> keep(g.num_vertices(), 0);
    for (VertexId v : keep_vertices) keep[v] = 1;
    for (int e : edge_ids) keep[g.edge(e).u] = keep[g.edge(e).v] = 1;
    Graph h;
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        if (keep[v]) map[v] = h.add_vertex(g.vertex(v).name, g.vertex(v).id);
    for (int e : edge_ids) h.add_edge(map[g.edge(e).u], map[g.edge(e).v], g.edge(e).w);
    std::vector<VertexId> anchors;
    for (VertexId a : g.anchors())
        if (keep[a]) anchors.push_back(map[a]);
    h.set_anchors(anchors);
    if (old_to_new) *old_to_new = map;
    return h;
}

namespace {

[[noreturn]] void fail_at(int line, const std::string& msg) {
    throw GraphError("agr line " + std::to_string(line) + ": " + msg);
}

long parse_id(const std::string& tok, int line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), ::isdigit)) fail_at(line, "bad vertex id '" + tok + "'");
    try {
        return std::stol(tok);
    } catch (...) {
        fail_at(line, "bad vertex id '" + tok + "'");
    }
}

}  // namespace

Graph parse_agr(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool header = false, have_anchors = false;
    Graph g;
    std::map<long, VertexId> by_id;
    std::vector<std::pair<int, std::vector<long>>> pending_anchor;
    auto lookup = [&](long id, int ln) {
        auto it = by_id.find(id);
        if (it == by_id.end()) fail_at(ln, "unknown vertex id " + std::to_string(id));
        return it->second;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty() || tok[0][0] == '#') continue;
        if (!header) {
            if (tok.size() != 2 || tok[0] != "agr" || tok[1] != "1") fail_at(lineno, "expected header 'agr 1'");
            header = true;
            continue;
        }
        if (tok[0] == "v") {
            if (tok.size() != 3) fail_at(lineno, "expected 'v <id> <label>'");
            long id = parse_id(tok[1], lineno);
            if (by_id.count(id)) fail_at(lineno, "duplicate vertex id " + tok[1]);
            try {
                by_id[id] = g.add_vertex(tok[2], id);
            } catch (const GraphError& e) {
                fail_at(lineno, e.what());
            }
        } else if (tok[0] == "anchors") {
            if (have_anchors) fail_at(lineno, "second anchors line");
            have_anchors = true;
            std::vector<long> ids;
            for (size_t i = 1; i < tok.size(); ++i) ids.push_back(parse_id(tok[i], lineno));
            pending_anchor.push_back({lineno, ids});
        } else if (tok[0] == "e") {
            if (tok.size() != 4) fail_at(lineno, "expected 'e <u> <v> <w>'");
            VertexId u = lookup(parse_id(tok[1], lineno), lineno);
            VertexId v = lookup(parse_id(tok[2], lineno), lineno);
            Int w;
            if (w.set_str(tok[3], 10) != 0) fail_at(lineno, "bad weight '" + tok[3] + "'");
            if (w < 1) fail_at(lineno, "non-positive weight " + tok[3]);
            try {
                g.add_edge(u, v, w);
            } catch (const GraphError& e) {
                fail_at(lineno, e.what());
            }
        } else {
            fail_at(lineno, "unknown record '" + tok[0] + "'");
        }
    }
    if (!header) throw GraphError("agr: missing header");
    for (auto& [ln, ids] : pending_anchor) {
        std::vector<VertexId> order;
        for (long id : ids) order.push_back(lookup(id, ln));
        try {
            g.set_anchors(order);
        } catch (const GraphError& e) {
            fail_at(ln, e.what());
        }
    }
    return g;
}

std::string serialize_agr(const Graph& g) {
    std::ostringstream out;
    out << "agr 1\n";
    for (const auto& v : g.vertices()) out << "v " << v.id << ' ' << v.name << '\n';
    out << "anchors";
    for (VertexId a : g.anchors()) out << ' ' << g.vertex(a).id;
    out << '\n';
    for (const auto& e : g.edges())
        out << "e " << g.vertex(e.u).id << ' ' << g.vertex(e.v).id << ' ' << e.w.get_str() << '\n';
    return out.str();
}

}  // namespace crossforge
