#include "mgraph/rotation.hpp"

#include <algorithm>
#include <numeric>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mgraph {

void RotationSystem::validate() const {
    std::map<Dart, int> seen;
    for (auto& [v, rot] : rotation) {
        if (!graph.has_vertex(v)) throw error("rotation at unknown vertex");
        for (Dart d : rot) {
            if (!graph.has_edge(dart_edge(d))) throw error("rotation references unknown edge");
            if (dart_origin(d) != v) throw error("dart listed at a vertex that is not its origin");
            if (seen.count(d)) throw error("dart appears twice in rotation system");
            seen[d] = v;
        }
    }
    for (const Edge& e : graph.edges()) {
        if (!seen.count(dart_fwd(e.id)) || !seen.count(dart_rev(e.id)))
            throw error("edge end missing from rotation system");
    }
}

EmbeddingReport trace_faces(const RotationSystem& rs) {
    const MultiGraph& g = rs.graph;
    int max_eid = g.max_edge_id();
    std::vector<int> next(2 * (max_eid + 1), -1);
    for (auto& [v, rot] : rs.rotation) {
        size_t k = rot.size();
        for (size_t i = 0; i < k; ++i) {
            // successor of twin(d) in rotation order at this vertex
            next[dart_twin(rot[i])] = rot[(i + 1) % k];
        }
    }
    EmbeddingReport rep;
    if (g.edge_count() == 0) {
        if (g.vertex_count() != 1) throw error("face tracing requires a connected graph");
        rep.face_count = 1;  // a bare vertex on the sphere
        rep.orientable_genus = 0;
        return rep;
    }
    std::vector<char> used(2 * (max_eid + 1), 0);
    for (const Edge& e : g.edges()) {
        for (Dart d0 : {dart_fwd(e.id), dart_rev(e.id)}) {
            if (used[d0]) continue;
            std::vector<Dart> walk;
            Dart d = d0;
            while (!used[d]) {
                used[d] = 1;
                walk.push_back(d);
                d = next[d];
                if (d < 0) throw error("incomplete rotation system");
            }
            rep.faces.push_back(std::move(walk));
        }
    }
    rep.face_count = static_cast<int>(rep.faces.size());
    int V = g.vertex_count(), E = g.edge_count();
    int euler = V - E + rep.face_count;
    if ((2 - euler) % 2 != 0) throw error("odd Euler defect: graph must be connected");
    rep.orientable_genus = (2 - euler) / 2;
    return rep;
}

std::int64_t rotation_system_count(const MultiGraph& g) {
    std::int64_t total = 1;
    for (int v : g.vertices()) {
        int d = g.degree(v);
        for (int i = 2; i < d; ++i) {
            total *= i;
            if (total > (std::int64_t{1} << 60)) return std::int64_t{1} << 60;
        }
    }
    return total;
}

namespace {

struct GenusSearch {
    int n = 0;
    int ndarts = 0;
    std::vector<std::vector<Dart>> darts_at;  // per vertex position
    std::vector<int> twin;

    explicit GenusSearch(const MultiGraph& g) {
        std::vector<int> vs = g.vertices();
        // widest vertex first gives the parallel loop its chunks
        std::sort(vs.begin(), vs.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
        n = static_cast<int>(vs.size());
        std::map<int, int> dart_id;
        for (int v : vs) {
            std::vector<Dart> mine;
            for (int eid : g.incident(v)) {
                const Edge& e = g.edge(eid);
                if (e.is_loop()) {
                    mine.push_back(dart_fwd(eid));
                    mine.push_back(dart_rev(eid));
                } else {
                    mine.push_back(e.u == v ? dart_fwd(eid) : dart_rev(eid));
                }
            }
            darts_at.push_back(mine);
        }
        // compact dart ids
        int next_id = 0;
        for (auto& lst : darts_at)
            for (Dart& d : lst) {
                dart_id[d] = next_id++;
            }
        ndarts = next_id;
        twin.assign(ndarts, -1);
        for (auto& [orig, id] : dart_id) twin[id] = dart_id.at(dart_twin(orig));
        for (auto& lst : darts_at)
            for (Dart& d : lst) d = dart_id.at(d);
    }

    // count faces for the rotation given by per-vertex orders
    int faces(const std::vector<std::vector<Dart>>& rot, std::vector<int>& nxt,
              std::vector<char>& used) const {
        if (ndarts == 0) return 1;
        for (const auto& lst : rot) {
            size_t k = lst.size();
            for (size_t i = 0; i < k; ++i) nxt[twin[lst[i]]] = lst[(i + 1) % k];
        }
        std::fill(used.begin(), used.end(), 0);
        int count = 0;
        for (int d0 = 0; d0 < ndarts; ++d0) {
            if (used[d0]) continue;
            ++count;
            int d = d0;
            while (!used[d]) {
                used[d] = 1;
                d = nxt[d];
            }
        }
        return count;
    }

    // enumerate tail permutations of vertices [from..n), first dart pinned
    void enumerate(std::vector<std::vector<Dart>>& rot, int from, int& best_faces,
                   std::vector<int>& nxt, std::vector<char>& used) {
        if (from == n) {
            best_faces = std::max(best_faces, faces(rot, nxt, used));
            return;
        }
        auto& lst = rot[from];
        if (lst.size() <= 2) {
            enumerate(rot, from + 1, best_faces, nxt, used);
            return;
        }
        std::sort(lst.begin() + 1, lst.end());
        do {
            enumerate(rot, from + 1, best_faces, nxt, used);
        } while (std::next_permutation(lst.begin() + 1, lst.end()));
    }
};

int genus_from_faces(const MultiGraph& g, int faces) {
    return (2 - (g.vertex_count() - g.edge_count() + faces)) / 2;
}

}  // namespace

int minimum_genus_serial(const MultiGraph& g, std::int64_t budget) {
    if (!is_connected(g)) throw error("minimum_genus requires a connected graph");
    if (rotation_system_count(g) > budget)
        throw budget_exceeded("rotation-system search space exceeds budget");
    GenusSearch s(g);
    std::vector<std::vector<Dart>> rot = s.darts_at;
    std::vector<int> nxt(s.ndarts, -1);
    std::vector<char> used(s.ndarts, 0);
    int best_faces = 0;
    s.enumerate(rot, 0, best_faces, nxt, used);
    return genus_from_faces(g, best_faces);
}

int minimum_genus(const MultiGraph& g, std::int64_t budget) {
    if (!is_connected(g)) throw error("minimum_genus requires a connected graph");
    if (rotation_system_count(g) > budget)
        throw budget_exceeded("rotation-system search space exceeds budget");
    GenusSearch shared(g);
    if (shared.n == 0) return 0;

    // materialize the first vertex's tail permutations as parallel chunks
    std::vector<std::vector<Dart>> first_orders;
    {
        std::vector<Dart> lst = shared.darts_at[0];
        if (lst.size() <= 2) {
            first_orders.push_back(lst);
        } else {
            std::sort(lst.begin() + 1, lst.end());
            do {
                first_orders.push_back(lst);
            } while (std::next_permutation(lst.begin() + 1, lst.end()));
        }
    }
    int global_best = 0;
#ifdef _OPENMP
#pragma omp parallel
#endif
    {
        GenusSearch s = shared;  // thread-private scratch
        std::vector<int> nxt(s.ndarts, -1);
        std::vector<char> used(s.ndarts, 0);
        int local_best = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(first_orders.size()); ++i) {
            std::vector<std::vector<Dart>> rot = s.darts_at;
            rot[0] = first_orders[static_cast<size_t>(i)];
            int best_faces = 0;
            s.enumerate(rot, 1, best_faces, nxt, used);
            local_best = std::max(local_best, best_faces);
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        global_best = std::max(global_best, local_best);
    }
    return genus_from_faces(g, global_best);
}

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::no_property,
                                         boost::property<boost::edge_index_t, int>>;

}  // namespace

bool is_planar(const MultiGraph& g) {
    MultiGraph s = simplify(g);
    std::map<int, int> idx;
    int n = 0;
    for (int v : s.vertices()) idx[v] = n++;
    BoostGraph bg(n);
    int ei = 0;
    for (const Edge& e : s.edges())
        boost::add_edge(idx[e.u], idx[e.v], ei++, bg);
    return boost::boyer_myrvold_planarity_test(bg);
}

RotationSystem planar_rotation_system(const MultiGraph& g) {
    // subdivide loops twice and parallel edges once so Boyer-Myrvold sees a
    // simple graph, then pull the rotation back to the original edge ends
    MultiGraph work = g;
    // map: work edge id -> (original edge id, which end it represents or -1 mid)
    std::map<int, std::pair<int, bool>> end_of;  // work edge -> (orig edge, true=from u side)
    for (const Edge& e : g.edges()) end_of[e.id] = {e.id, true};

    auto subdivide_tracking = [&](int work_eid, int orig, bool u_side_first) {
        SubdivisionResult r = subdivide_edge(work, work_eid);
        work = r.graph;
        end_of.erase(work_eid);
        end_of[r.new_edge_a] = {orig, u_side_first};
        end_of[r.new_edge_b] = {orig, false};
        return std::make_pair(r.new_edge_a, r.new_edge_b);
    };

    std::vector<Edge> originals = g.edges();
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : originals) {
        if (e.is_loop()) {
            // loop -> triangle through two fresh vertices
            int w = work.max_vertex_id() + 1, x = w + 1;
            int ea = work.max_edge_id() + 1, eb = ea + 1, ec = eb + 1;
            std::vector<int> vs = work.vertices();
            vs.push_back(w);
            vs.push_back(x);
            std::vector<Edge> es;
            for (const Edge& f : work.edges())
                if (f.id != e.id) es.push_back(f);
            es.push_back({ea, e.u, w});
            es.push_back({eb, w, x});
            es.push_back({ec, x, e.u});
            work = MultiGraph(vs, es);
            end_of.erase(e.id);
            end_of[ea] = {e.id, true};   // the loop's fwd end at e.u
            end_of[ec] = {e.id, false};  // the loop's rev end at e.u
        } else if (!seen.insert(e.key()).second) {
            subdivide_tracking(e.id, e.id, true);
        }
    }

    std::map<int, int> idx;
    std::vector<int> back;
    int n = 0;
    for (int v : work.vertices()) {
        idx[v] = n++;
        back.push_back(v);
    }
    BoostGraph bg(n);
    std::vector<Edge> wedges = work.edges();
    std::vector<std::pair<int, int>> by_index;
    for (size_t i = 0; i < wedges.size(); ++i) {
        boost::add_edge(idx[wedges[i].u], idx[wedges[i].v], static_cast<int>(i), bg);
        by_index.push_back({wedges[i].u, wedges[i].v});
    }
    std::vector<std::vector<boost::graph_traits<BoostGraph>::edge_descriptor>> embedding(n);
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data());
    if (!planar) throw error("graph is not planar");

    RotationSystem rs;
    rs.graph = g;
    auto eidx = boost::get(boost::edge_index, bg);
    for (int v : g.vertices()) {
        std::vector<Dart> rot;
        for (auto& ed : embedding[idx[v]]) {
            int wi = eidx[ed];
            const Edge& we = wedges[wi];
            // the work edge touching v corresponds to one end of an original edge
            int orig = end_of.count(we.id) ? end_of[we.id].first : -1;
            if (orig < 0) continue;
            const Edge& oe = g.edge(orig);
            Dart d;
            if (oe.is_loop()) {
                d = end_of[we.id].second ? dart_fwd(orig) : dart_rev(orig);
            } else {
                d = (v == oe.u) ? dart_fwd(orig) : dart_rev(orig);
            }
            rot.push_back(d);
        }
        rs.rotation[v] = rot;
    }
    rs.validate();
    return rs;
}

}  // namespace mgraph
