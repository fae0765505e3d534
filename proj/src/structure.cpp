#include "mgraph/structure.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace mgraph {

namespace {

// depth of each quotient vertex in the quotient tree rooted at the smallest id
std::map<int, int> quotient_depths(const MultiGraph& qt) {
    std::map<int, int> depth;
    if (qt.vertex_count() == 0) return depth;
    int root = qt.vertices().front();
    std::vector<int> frontier{root};
    depth[root] = 0;
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int v : frontier) {
            for (int w : qt.neighbors(v)) {
                if (!depth.count(w)) {
                    depth[w] = depth[v] + 1;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    return depth;
}

}  // namespace

HyperellipticDecomposition decompose(const MultiGraph& g, const Involution& iota) {
    iota.validate();
    for (const Edge& e : g.edges())
        if (e.is_loop()) throw error("decompose requires a loopless graph");
    if (!is_mixing(iota)) throw error("decompose: involution is not mixing");
    QuotientResult q = quotient(iota);
    if (!betti_genus(q.quotient).is_tree) throw error("decompose: quotient is not a tree");

    HyperellipticDecomposition d;
    d.graph = g;
    d.iota = iota;
    for (int v : g.vertices())
        if (iota.v(v) == v) d.fixed.insert(v);

    // order pairs by quotient depth, deepest last, ties by representative id
    std::map<int, int> depth = quotient_depths(q.quotient);
    std::vector<std::pair<int, int>> pairs;  // (depth, representative)
    for (int v : g.vertices()) {
        int w = iota.v(v);
        if (v < w) pairs.push_back({depth.at(std::min(v, w)), v});
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto& [dep, a] : pairs) {
        d.side_a.push_back(a);
        d.side_b.push_back(iota.v(a));
    }

    std::set<int> aset(d.side_a.begin(), d.side_a.end());
    std::set<int> bset(d.side_b.begin(), d.side_b.end());
    for (const Edge& e : g.edges()) {
        bool fu = d.fixed.count(e.u) > 0, fv = d.fixed.count(e.v) > 0;
        if (fu && fv) {
            d.edges_f.insert(e.id);
        } else if (fu || fv) {
            int moved = fu ? e.v : e.u;
            (aset.count(moved) ? d.transfer_a : d.transfer_b).insert(e.id);
        } else if (iota.v(e.u) == e.v) {
            d.horizontal.insert(e.id);
        } else if (aset.count(e.u) && aset.count(e.v)) {
            d.edges_a.insert(e.id);
        } else if (bset.count(e.u) && bset.count(e.v)) {
            d.edges_b.insert(e.id);
        } else {
            d.cross.insert(e.id);
        }
    }
    return d;
}

std::string HyperellipticDecomposition::to_json() const {
    auto emit = [](std::ostringstream& os, const char* name, const std::set<int>& s, bool& first) {
        if (!first) os << ",";
        first = false;
        os << "\"" << name << "\":[";
        bool f2 = true;
        for (int x : s) {
            if (!f2) os << ",";
            f2 = false;
            os << x;
        }
        os << "]";
    };
    std::ostringstream os;
    os << "{";
    bool first = true;
    emit(os, "E_A", edges_a, first);
    emit(os, "E_B", edges_b, first);
    emit(os, "E_F", edges_f, first);
    emit(os, "H", horizontal, first);
    emit(os, "C", cross, first);
    emit(os, "T_A", transfer_a, first);
    emit(os, "T_B", transfer_b, first);
    os << "}";
    return os.str();
}

namespace {

// components of the subgraph induced by `verts` using only `edge_ids`
std::vector<std::vector<int>> induced_components(const MultiGraph& g, const std::set<int>& verts,
                                                 const std::set<int>& edge_ids) {
    std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (neighbor, edge)
    for (int v : verts) adj[v];
    for (int id : edge_ids) {
        const Edge& e = g.edge(id);
        adj[e.u].push_back({e.v, id});
        adj[e.v].push_back({e.u, id});
    }
    std::set<int> seen;
    std::vector<std::vector<int>> comps;
    for (int v : verts) {
        if (seen.count(v)) continue;
        std::vector<int> comp, stack{v};
        seen.insert(v);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            comp.push_back(x);
            for (auto& [w, id] : adj[x])
                if (!seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

}  // namespace

bool check_forest_lemma(const HyperellipticDecomposition& d) {
    // acyclic iff every component of (A, E_A) has |E| = |V| - 1; equivalently
    // total edges = total vertices - component count
    std::set<int> averts(d.side_a.begin(), d.side_a.end());
    auto comps = induced_components(d.graph, averts, d.edges_a);
    return static_cast<int>(d.edges_a.size()) ==
           static_cast<int>(averts.size()) - static_cast<int>(comps.size());
}

bool check_chain_lemma(const HyperellipticDecomposition& d) {
    auto comps = induced_components(d.graph, d.fixed, d.edges_f);
    // multiplicity between fixed pairs
    std::map<std::pair<int, int>, int> mult;
    for (int id : d.edges_f) mult[d.graph.edge(id).key()]++;
    for (auto& [key, m] : mult)
        if (m != 2) return false;  // exactly two edges between doubled neighbours
    for (auto& comp : comps) {
        if (comp.size() == 1) continue;
        // the simple skeleton must be a path: degrees <= 2, exactly two of degree 1, acyclic
        std::map<int, std::set<int>> nbr;
        for (auto& [key, m] : mult) {
            if (std::binary_search(comp.begin(), comp.end(), key.first) &&
                std::binary_search(comp.begin(), comp.end(), key.second)) {
                nbr[key.first].insert(key.second);
                nbr[key.second].insert(key.first);
            }
        }
        int deg1 = 0;
        int nedges = 0;
        for (int v : comp) {
            int dg = static_cast<int>(nbr[v].size());
            nedges += dg;
            if (dg > 2) return false;
            if (dg == 1) ++deg1;
        }
        nedges /= 2;
        if (deg1 != 2) return false;
        if (nedges != static_cast<int>(comp.size()) - 1) return false;  // cycle
    }
    return true;
}

namespace {

Involution transport_involution(const MultiGraph& reduced, const Involution& old,
                                const std::map<int, int>& vmap) {
    Involution inv;
    inv.graph = reduced;
    for (auto& [v, r] : vmap) {
        int ir = vmap.at(old.v(v));
        inv.vertex_perm[r] = ir;
    }
    for (const Edge& e : reduced.edges()) inv.edge_perm[e.id] = old.e(e.id);
    inv.validate();
    return inv;
}

}  // namespace

ReducedGraph reduce_fixed_components(const HyperellipticDecomposition& d) {
    ContractionResult c = contract_edges(d.graph, d.edges_f);
    ReducedGraph out;
    out.graph = c.graph;
    out.vertex_map = c.vertex_map;
    out.involution = transport_involution(c.graph, d.iota, c.vertex_map);
    return out;
}

ReducedGraph reduce_side_components(const HyperellipticDecomposition& d) {
    std::set<int> both = d.edges_a;
    both.insert(d.edges_b.begin(), d.edges_b.end());
    ContractionResult c = contract_edges(d.graph, both);
    ReducedGraph out;
    out.graph = c.graph;
    out.vertex_map = c.vertex_map;
    out.involution = transport_involution(c.graph, d.iota, c.vertex_map);
    return out;
}

HorizontalElimination eliminate_horizontal(const HyperellipticDecomposition& d) {
    HorizontalElimination out;
    MultiGraph g = d.graph;
    std::map<int, int> vperm = d.iota.vertex_perm;
    std::map<int, int> eperm = d.iota.edge_perm;
    for (int h : d.horizontal) {
        SubdivisionResult r = subdivide_edge(g, h);
        g = r.graph;
        out.midpoint_of[h] = r.new_vertex;
        vperm[r.new_vertex] = r.new_vertex;
        eperm.erase(h);
        // new_edge_a runs endpoint(u) - mid, new_edge_b mid - endpoint(v); the
        // involution swaps them since it exchanges the old endpoints
        eperm[r.new_edge_a] = r.new_edge_b;
        eperm[r.new_edge_b] = r.new_edge_a;
    }
    out.graph = g;
    out.involution = Involution{g, vperm, eperm};
    out.involution.validate();
    if (!is_mixing(out.involution)) throw error("internal: horizontal elimination broke mixing");
    return out;
}

}  // namespace mgraph
