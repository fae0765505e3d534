#include "mgraph/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace mgraph {

MultiGraph read_graph(std::istream& in) {
    std::string tag;
    if (!(in >> tag) || tag != "mgraph") throw error("expected 'mgraph <V> <E>' header");
    int n = 0, m = 0;
    if (!(in >> n >> m) || n < 0 || m < 0) throw error("bad mgraph header counts");
    std::vector<std::pair<int, int>> ends;
    ends.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw error("truncated edge list");
        if (u < 0 || u >= n || v < 0 || v >= n) throw error("edge endpoint out of range");
        ends.push_back({u, v});
    }
    return MultiGraph::simple(n, ends);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
    out << "mgraph " << g.vertex_count() << " " << g.edge_count() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
}

GraphFile read_graph_file(std::istream& in) {
    GraphFile f;
    f.graph = read_graph(in);
    std::string tag;
    if (in >> tag) {
        if (tag != "vperm") throw error("expected 'vperm' line after edges");
        std::map<int, int> vperm, eperm;
        for (int v : f.graph.vertices()) {
            int img;
            if (!(in >> img)) throw error("truncated vperm line");
            vperm[v] = img;
        }
        if (!(in >> tag) || tag != "eperm") throw error("expected 'eperm' line");
        for (const Edge& e : f.graph.edges()) {
            int img;
            if (!(in >> img)) throw error("truncated eperm line");
            eperm[e.id] = img;
        }
        Involution inv{f.graph, vperm, eperm};
        inv.validate();
        f.involution = std::move(inv);
    }
    return f;
}

void write_graph_file(std::ostream& out, const MultiGraph& g,
                      const std::optional<Involution>& inv) {
    write_graph(out, g);
    if (inv) {
        out << "vperm";
        for (int v : g.vertices()) out << " " << inv->vertex_perm.at(v);
        out << "\neperm";
        for (const Edge& e : g.edges()) out << " " << inv->edge_perm.at(e.id);
        out << "\n";
    }
}

std::string morphism_to_json(const GraphMorphism& m) {
    std::ostringstream os;
    os << "{\"vertex_map\":{";
    bool first = true;
    for (auto& [v, w] : m.vertex_map) {
        if (!first) os << ",";
        first = false;
        os << "\"" << v << "\":" << w;
    }
    os << "},\"edge_map\":{";
    first = true;
    for (auto& [e, f] : m.edge_to_edge) {
        if (!first) os << ",";
        first = false;
        os << "\"" << e << "\":{\"edge\":" << f << "}";
    }
    for (auto& [e, w] : m.edge_to_vertex) {
        if (!first) os << ",";
        first = false;
        os << "\"" << e << "\":{\"vertex\":" << w << "}";
    }
    os << "}}";
    return os.str();
}

}  // namespace mgraph
