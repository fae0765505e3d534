#include "mgraph/multigraph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace mgraph {

MultiGraph::MultiGraph(std::vector<int> vertex_ids, std::vector<Edge> edge_list)
    : verts_(std::move(vertex_ids)), edges_(std::move(edge_list)) {
    std::sort(verts_.begin(), verts_.end());
    verts_.erase(std::unique(verts_.begin(), verts_.end()), verts_.end());
    std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (size_t i = 0; i < verts_.size(); ++i) vindex_[verts_[i]] = static_cast<int>(i);
    inc_.assign(verts_.size(), {});
    for (size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (!vindex_.count(e.u) || !vindex_.count(e.v))
            throw error("edge " + std::to_string(e.id) + " references a missing vertex");
        if (eindex_.count(e.id)) throw error("duplicate edge id " + std::to_string(e.id));
        eindex_[e.id] = static_cast<int>(i);
        inc_[vindex_.at(e.u)].push_back(e.id);
        if (e.v != e.u) inc_[vindex_.at(e.v)].push_back(e.id);
    }
}

MultiGraph MultiGraph::simple(int n, const std::vector<std::pair<int, int>>& ends) {
    std::vector<int> vs(n);
    std::iota(vs.begin(), vs.end(), 0);
    std::vector<Edge> es;
    es.reserve(ends.size());
    for (size_t i = 0; i < ends.size(); ++i)
        es.push_back({static_cast<int>(i), ends[i].first, ends[i].second});
    return MultiGraph(std::move(vs), std::move(es));
}

const Edge& MultiGraph::edge(int id) const {
    auto it = eindex_.find(id);
    if (it == eindex_.end()) throw error("no edge with id " + std::to_string(id));
    return edges_[it->second];
}

const std::vector<int>& MultiGraph::incident(int v) const {
    auto it = vindex_.find(v);
    if (it == vindex_.end()) throw error("no vertex with id " + std::to_string(v));
    return inc_[it->second];
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (int id : incident(v)) d += edge(id).is_loop() ? 2 : 1;
    return d;
}

int MultiGraph::max_vertex_id() const { return verts_.empty() ? -1 : verts_.back(); }
int MultiGraph::max_edge_id() const { return edges_.empty() ? -1 : edges_.back().id; }

std::vector<int> MultiGraph::neighbors(int v) const {
    std::vector<int> out;
    for (int id : incident(v)) {
        const Edge& e = edge(id);
        if (!e.is_loop()) out.push_back(e.other(v));
    }
    return out;
}

bool MultiGraph::operator==(const MultiGraph& o) const {
    if (verts_ != o.verts_) return false;
    if (edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i) {
        if (edges_[i].id != o.edges_[i].id || edges_[i].key() != o.edges_[i].key()) return false;
    }
    return true;
}

GenusReport betti_genus(const MultiGraph& g) {
    GenusReport r;
    r.component_count = component_count(g);
    r.betti = g.edge_count() - g.vertex_count() + r.component_count;
    r.is_tree = (r.betti == 0 && r.component_count == 1);
    return r;
}

int component_count(const MultiGraph& g) {
    std::map<int, int> comp;
    int count = 0;
    for (int v : g.vertices()) {
        if (comp.count(v)) continue;
        ++count;
        std::vector<int> stack{v};
        comp[v] = count;
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int n : g.neighbors(w)) {
                if (!comp.count(n)) {
                    comp[n] = count;
                    stack.push_back(n);
                }
            }
        }
    }
    return count;
}

bool is_connected(const MultiGraph& g) {
    if (g.vertex_count() == 0) return false;
    return component_count(g) == 1;
}

MultiGraph delete_loops(const MultiGraph& g) {
    std::vector<Edge> keep;
    for (const Edge& e : g.edges())
        if (!e.is_loop()) keep.push_back(e);
    return MultiGraph(g.vertices(), keep);
}

std::set<int> find_bridges(const MultiGraph& g) {
    // Iterative lowpoint DFS; parallel edges make both copies non-bridges
    // because only the specific tree edge id is excluded from back-edge use.
    std::set<int> bridges;
    std::map<int, int> disc, low;
    int timer = 0;
    for (int root : g.vertices()) {
        if (disc.count(root)) continue;
        // stack frames: (vertex, incoming edge id, next incident index)
        struct Frame { int v; int in_edge; size_t idx; };
        std::vector<Frame> st;
        disc[root] = low[root] = timer++;
        st.push_back({root, -1, 0});
        while (!st.empty()) {
            Frame& f = st.back();
            const auto& inc = g.incident(f.v);
            if (f.idx < inc.size()) {
                int eid = inc[f.idx++];
                const Edge& e = g.edge(eid);
                if (e.is_loop() || eid == f.in_edge) continue;
                int w = e.other(f.v);
                if (!disc.count(w)) {
                    disc[w] = low[w] = timer++;
                    st.push_back({w, eid, 0});
                } else {
                    low[f.v] = std::min(low[f.v], disc[w]);
                }
            } else {
                int v = f.v, in_edge = f.in_edge;
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] > disc[p]) bridges.insert(in_edge);
                }
            }
        }
    }
    return bridges;
}

ContractionResult contract_edges(const MultiGraph& g, const std::set<int>& to_contract) {
    // Union-find over vertices of contracted edges.
    std::map<int, int> parent;
    std::function<int(int)> find = [&](int x) {
        if (!parent.count(x)) parent[x] = x;
        if (parent[x] != x) parent[x] = find(parent[x]);
        return parent[x];
    };
    for (int id : to_contract) {
        const Edge& e = g.edge(id);
        int a = find(e.u), b = find(e.v);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
    std::map<int, int> vmap;
    std::vector<int> vs;
    for (int v : g.vertices()) {
        int r = find(v);
        vmap[v] = r;
        if (r == v) vs.push_back(v);
    }
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (to_contract.count(e.id)) continue;
        // an uncontracted edge whose endpoints merged becomes a loop and is kept
        es.push_back({e.id, vmap[e.u], vmap[e.v]});
    }
    ContractionResult r{MultiGraph(vs, es), vmap};
    return r;
}

ContractionResult contract_bridges(const MultiGraph& g) {
    if (!is_connected(g)) throw error("contract_bridges requires a connected graph");
    ContractionResult r = contract_edges(g, find_bridges(g));
    return r;
}

SubdivisionResult subdivide_edge(const MultiGraph& g, int eid) {
    const Edge& e = g.edge(eid);
    if (e.is_loop()) throw error("cannot subdivide a loop");
    int w = g.max_vertex_id() + 1;
    int ea = g.max_edge_id() + 1;
    int eb = ea + 1;
    std::vector<int> vs = g.vertices();
    vs.push_back(w);
    std::vector<Edge> es;
    for (const Edge& f : g.edges())
        if (f.id != eid) es.push_back(f);
    es.push_back({ea, e.u, w});
    es.push_back({eb, w, e.v});
    return SubdivisionResult{MultiGraph(vs, es), w, ea, eb};
}

bool same_shape(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertices() != b.vertices()) return false;
    std::vector<std::pair<int, int>> ka, kb;
    for (const Edge& e : a.edges()) ka.push_back(e.key());
    for (const Edge& e : b.edges()) kb.push_back(e.key());
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
}

namespace {

// adjacency multiset signature per vertex: sorted (degree of neighbor, multiplicity) view
bool iso_backtrack(const MultiGraph& a, const MultiGraph& b, std::vector<int>& order,
                   std::map<int, int>& image, std::set<int>& used, size_t k,
                   const std::map<int, std::map<int, int>>& adjA,
                   const std::map<int, std::map<int, int>>& adjB,
                   const std::map<int, int>& loopsA, const std::map<int, int>& loopsB) {
    if (k == order.size()) return true;
    int v = order[k];
    for (int w : b.vertices()) {
        if (used.count(w)) continue;
        if (a.degree(v) != b.degree(w)) continue;
        if (loopsA.at(v) != loopsB.at(w)) continue;
        bool ok = true;
        for (size_t j = 0; j < k && ok; ++j) {
            int x = order[j];
            int mx = 0, my = 0;
            auto ax = adjA.at(v).find(x);
            if (ax != adjA.at(v).end()) mx = ax->second;
            auto by = adjB.at(w).find(image[x]);
            if (by != adjB.at(w).end()) my = by->second;
            if (mx != my) ok = false;
        }
        if (!ok) continue;
        image[v] = w;
        used.insert(w);
        if (iso_backtrack(a, b, order, image, used, k + 1, adjA, adjB, loopsA, loopsB)) return true;
        used.erase(w);
        image.erase(v);
    }
    return false;
}

std::map<int, std::map<int, int>> adjacency_multiset(const MultiGraph& g, std::map<int, int>& loops) {
    std::map<int, std::map<int, int>> adj;
    for (int v : g.vertices()) {
        adj[v];
        loops[v] = 0;
    }
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) {
            loops[e.u]++;
        } else {
            adj[e.u][e.v]++;
            adj[e.v][e.u]++;
        }
    }
    return adj;
}

}  // namespace

bool is_isomorphic(const MultiGraph& a, const MultiGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v : a.vertices()) da.push_back(a.degree(v));
    for (int v : b.vertices()) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    std::map<int, int> loopsA, loopsB;
    auto adjA = adjacency_multiset(a, loopsA);
    auto adjB = adjacency_multiset(b, loopsB);

    // order vertices by decreasing degree to fail fast
    std::vector<int> order = a.vertices();
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a.degree(x) > a.degree(y); });
    std::map<int, int> image;
    std::set<int> used;
    return iso_backtrack(a, b, order, image, used, 0, adjA, adjB, loopsA, loopsB);
}

MultiGraph simplify(const MultiGraph& g) {
    std::set<std::pair<int, int>> seen;
    std::vector<Edge> es;
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        if (seen.insert(e.key()).second) es.push_back(e);
    }
    return MultiGraph(g.vertices(), es);
}

}  // namespace mgraph
