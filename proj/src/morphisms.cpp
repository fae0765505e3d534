#include "mgraph/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <random>

namespace mgraph {

void GraphMorphism::validate() const {
    for (int v : source.vertices())
        if (!vertex_map.count(v) || !target.has_vertex(vertex_map.at(v)))
            throw error("morphism: vertex " + std::to_string(v) + " has no valid image");
    for (const Edge& e : source.edges()) {
        bool to_edge = edge_to_edge.count(e.id) > 0;
        bool to_vertex = edge_to_vertex.count(e.id) > 0;
        if (to_edge == to_vertex)
            throw error("morphism: edge " + std::to_string(e.id) + " must map to exactly one of edge/vertex");
        int iu = vertex_map.at(e.u), iv = vertex_map.at(e.v);
        if (to_edge) {
            const Edge& f = target.edge(edge_to_edge.at(e.id));
            std::pair<int, int> got = iu <= iv ? std::make_pair(iu, iv) : std::make_pair(iv, iu);
            if (got != f.key())
                throw error("morphism: edge " + std::to_string(e.id) + " image endpoints mismatch");
        } else {
            int w = edge_to_vertex.at(e.id);
            if (iu != w || iv != w)
                throw error("morphism: collapsed edge " + std::to_string(e.id) + " endpoints do not map to the target vertex");
        }
    }
}

bool Involution::is_identity_on_vertices() const {
    for (auto& [v, w] : vertex_perm)
        if (v != w) return false;
    return true;
}

void Involution::validate() const {
    for (int v : graph.vertices()) {
        if (!vertex_perm.count(v)) throw error("involution: vertex " + std::to_string(v) + " unmapped");
        int w = vertex_perm.at(v);
        if (!graph.has_vertex(w) || vertex_perm.at(w) != v)
            throw error("involution: vertex permutation is not an involution");
    }
    for (const Edge& e : graph.edges()) {
        if (!edge_perm.count(e.id)) throw error("involution: edge " + std::to_string(e.id) + " unmapped");
        int f = edge_perm.at(e.id);
        if (!graph.has_edge(f) || edge_perm.at(f) != e.id)
            throw error("involution: edge permutation is not an involution");
        const Edge& fe = graph.edge(f);
        int iu = vertex_perm.at(e.u), iv = vertex_perm.at(e.v);
        std::pair<int, int> want = iu <= iv ? std::make_pair(iu, iv) : std::make_pair(iv, iu);
        if (want != fe.key()) throw error("involution: edge permutation incompatible with vertex permutation");
    }
}

bool is_mixing(const Involution& inv) {
    for (const Edge& e : inv.graph.edges()) {
        if (inv.edge_perm.at(e.id) != e.id) continue;
        // fixed edge: endpoints must be swapped (a fixed loop satisfies this trivially)
        if (inv.vertex_perm.at(e.u) != e.v) return false;
    }
    return true;
}

QuotientResult quotient(const Involution& inv) {
    if (!is_mixing(inv)) throw error("quotient requires a mixing involution");
    const MultiGraph& g = inv.graph;
    std::map<int, int> rep;
    std::vector<int> qverts;
    std::set<int> fixed;
    for (int v : g.vertices()) {
        int r = std::min(v, inv.v(v));
        rep[v] = r;
        if (r == v) {
            qverts.push_back(r);
            if (inv.v(v) == v) fixed.insert(v);
        }
    }
    std::vector<Edge> qedges;
    GraphMorphism proj;
    proj.vertex_map = rep;
    for (const Edge& e : g.edges()) {
        int mate = inv.e(e.id);
        if (mate < e.id) continue;  // handle each orbit once (fixed edges have mate == id)
        int ru = rep[e.u], rv = rep[e.v];
        if (ru == rv) {
            proj.edge_to_vertex[e.id] = ru;
            proj.edge_to_vertex[mate] = ru;
        } else {
            int qid = e.id;
            qedges.push_back({qid, ru, rv});
            proj.edge_to_edge[e.id] = qid;
            proj.edge_to_edge[mate] = qid;
        }
    }
    QuotientResult out;
    out.quotient = MultiGraph(qverts, qedges);
    proj.source = g;
    proj.target = out.quotient;
    proj.validate();
    out.projection = std::move(proj);
    out.fixed_vertices = std::move(fixed);
    return out;
}

HarmonicReport is_harmonic(const GraphMorphism& m) {
    HarmonicReport r;
    std::set<int> image;
    for (auto& [v, w] : m.vertex_map) image.insert(w);
    r.constant = image.size() <= 1;

    // per-vertex counts toward each target edge at the image vertex
    std::map<int, int> preimage_total;  // target edge -> number of source edges over it
    for (const Edge& f : m.target.edges()) preimage_total[f.id] = 0;
    for (auto& kv : m.edge_to_edge) preimage_total[kv.second] += 1;

    bool nondeg = true;
    for (int v : m.source.vertices()) {
        int w = m.vertex_map.at(v);
        const auto& tinc = m.target.incident(w);
        if (tinc.empty()) continue;
        int common = -1;
        for (int f : tinc) {
            int count = 0;
            for (int e : m.source.incident(v))
                if (m.edge_to_edge.count(e) && m.edge_to_edge.at(e) == f) ++count;
            if (common == -1) common = count;
            if (count != common) {
                r.harmonic = false;
                return r;
            }
        }
        if (common < 1) nondeg = false;
    }
    r.harmonic = true;
    r.nondegenerate = nondeg && !r.constant && m.target.edge_count() > 0;
    if (r.constant || m.target.edge_count() == 0) {
        r.degree = 0;
        return r;
    }
    // harmonic morphisms onto a connected target have a well-defined degree
    int deg = -1;
    for (auto& [f, total] : preimage_total) {
        if (deg == -1) deg = total;
        if (total != deg) {
            // surfaces only when the target is disconnected or the map is degenerate
            r.harmonic = false;
            return r;
        }
    }
    r.degree = deg < 0 ? 0 : deg;
    if (r.degree == 0) r.constant = true;
    return r;
}

namespace {

struct EdgeClassTable {
    // endpoint key -> sorted edge ids
    std::map<std::pair<int, int>, std::vector<int>> classes;
};

EdgeClassTable edge_classes(const MultiGraph& g) {
    EdgeClassTable t;
    for (const Edge& e : g.edges()) t.classes[e.key()].push_back(e.id);
    for (auto& [k, v] : t.classes) std::sort(v.begin(), v.end());
    return t;
}

// Canonical mixing edge action for a vertex involution, or nullopt when none
// exists (some invariant parallel class between fixed endpoints has odd size).
std::optional<std::map<int, int>> canonical_edge_action(const MultiGraph& g,
                                                        const std::map<int, int>& vperm,
                                                        const EdgeClassTable& table) {
    std::map<int, int> eperm;
    for (const auto& [key, ids] : table.classes) {
        int iu = vperm.at(key.first), iv = vperm.at(key.second);
        std::pair<int, int> ikey = iu <= iv ? std::make_pair(iu, iv) : std::make_pair(iv, iu);
        auto it = table.classes.find(ikey);
        if (it == table.classes.end() || it->second.size() != ids.size()) return std::nullopt;
        if (ikey == key) {
            bool endpoints_swapped = (key.first == key.second) || (iu == key.second && iv == key.first && key.first != key.second);
            bool endpoints_fixed = (iu == key.first && iv == key.second);
            if (key.first == key.second) {
                // loops: identity action, mixing unaffected
                for (int id : ids) eperm[id] = id;
            } else if (endpoints_swapped) {
                for (int id : ids) eperm[id] = id;  // fixed edges with swapped endpoints
            } else if (endpoints_fixed) {
                if (ids.size() % 2 != 0) return std::nullopt;  // no fixed-point-free pairing
                for (size_t i = 0; i + 1 < ids.size(); i += 2) {
                    eperm[ids[i]] = ids[i + 1];
                    eperm[ids[i + 1]] = ids[i];
                }
            } else {
                return std::nullopt;  // not an automorphism on this class
            }
        } else if (key < ikey) {
            const auto& jds = it->second;
            for (size_t i = 0; i < ids.size(); ++i) {
                eperm[ids[i]] = jds[i];
                eperm[jds[i]] = ids[i];
            }
        }
    }
    return eperm;
}

bool multiplicity_automorphism(const MultiGraph& g, const std::map<int, int>& vperm,
                               const EdgeClassTable& table) {
    for (const auto& [key, ids] : table.classes) {
        int iu = vperm.at(key.first), iv = vperm.at(key.second);
        std::pair<int, int> ikey = iu <= iv ? std::make_pair(iu, iv) : std::make_pair(iv, iu);
        auto it = table.classes.find(ikey);
        if (it == table.classes.end() || it->second.size() != ids.size()) return false;
    }
    return true;
}

}  // namespace

InvolutionSearch enumerate_mixing_involutions(const MultiGraph& g, std::int64_t budget) {
    InvolutionSearch out;
    if (g.vertex_count() == 0) return out;
    EdgeClassTable table = edge_classes(g);
    std::vector<int> vs = g.vertices();
    std::map<int, int> loops;
    for (int v : vs) loops[v] = 0;
    for (const Edge& e : g.edges())
        if (e.is_loop()) loops[e.u]++;

    std::map<int, int> vperm;
    std::int64_t nodes = 0;

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (out.truncated) return;
        if (++nodes > budget) {
            out.truncated = true;
            return;
        }
        // find smallest unassigned vertex
        while (idx < vs.size() && vperm.count(vs[idx])) ++idx;
        if (idx == vs.size()) {
            if (!multiplicity_automorphism(g, vperm, table)) return;
            auto action = canonical_edge_action(g, vperm, table);
            if (!action) return;
            Involution inv{g, vperm, *action};
            bool identity = inv.is_identity_on_vertices();
            if (identity) {
                bool edge_identity = true;
                for (auto& [a, b] : *action)
                    if (a != b) edge_identity = false;
                if (edge_identity) return;  // order one, not an involution
            }
            if (!is_mixing(inv)) return;
            out.found.push_back(std::move(inv));
            return;
        }
        int v = vs[idx];
        // fixed
        vperm[v] = v;
        rec(idx + 1);
        vperm.erase(v);
        // paired with a later unassigned vertex of equal degree/loop count
        for (size_t j = idx + 1; j < vs.size(); ++j) {
            int w = vs[j];
            if (vperm.count(w)) continue;
            if (g.degree(v) != g.degree(w) || loops[v] != loops[w]) continue;
            vperm[v] = w;
            vperm[w] = v;
            rec(idx + 1);
            vperm.erase(v);
            vperm.erase(w);
        }
    };
    rec(0);
    // canonical order: lexicographic on the vertex permutation images
    std::sort(out.found.begin(), out.found.end(), [](const Involution& a, const Involution& b) {
        auto ia = a.vertex_perm.begin();
        auto ib = b.vertex_perm.begin();
        for (; ia != a.vertex_perm.end() && ib != b.vertex_perm.end(); ++ia, ++ib) {
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return false;
    });
    return out;
}

namespace {

DetectionResult detect_with(const MultiGraph& g, std::int64_t budget, int wanted_betti) {
    if (!is_connected(g)) throw error("detection requires a connected graph");
    DetectionResult out;
    InvolutionSearch search = enumerate_mixing_involutions(g, budget);
    out.truncated = search.truncated;
    for (Involution& inv : search.found) {
        QuotientResult q = quotient(inv);
        GenusReport r = betti_genus(q.quotient);
        if (r.betti == wanted_betti) {
            out.verdict = true;
            out.witness = std::move(inv);
            return out;
        }
    }
    return out;
}

}  // namespace

DetectionResult detect_hyperelliptic(const MultiGraph& g, std::int64_t budget) {
    return detect_with(g, budget, 0);
}

DetectionResult detect_bielliptic(const MultiGraph& g, std::int64_t budget) {
    return detect_with(g, budget, 1);
}

namespace {

GeneratedGraph lift_base(const MultiGraph& base, const LiftSpec& spec, bool require_tree) {
    GenusReport br = betti_genus(base);
    if (require_tree && !br.is_tree) throw error("generator base must be a tree");
    if (!require_tree && (br.betti != 1 || br.component_count != 1))
        throw error("generator base must be connected with betti exactly 1");
    for (const Edge& e : base.edges())
        if (e.is_loop()) throw error("generator base must be loopless");

    for (int v : base.vertices())
        if (!spec.split.count(v)) throw error("marking missing for base vertex " + std::to_string(v));

    // fixed-fixed edges must form chains: max fixed-degree two among fixed vertices,
    // and no doubled cycle (a doubled cycle would make the quotient betti wrong anyway)
    std::map<int, int> fixed_fixed_degree;
    for (const Edge& e : base.edges()) {
        if (!spec.split.at(e.u) && !spec.split.at(e.v)) {
            fixed_fixed_degree[e.u]++;
            fixed_fixed_degree[e.v]++;
        }
    }
    for (auto& [v, d] : fixed_fixed_degree)
        if (d > 2) throw error("invalid marking: fixed-fixed edges must form chains");

    for (auto& [v, k] : spec.horizontals) {
        if (k < 0) throw error("invalid horizontal count");
        if (k > 0 && !spec.split.at(v)) throw error("horizontal edges require a split vertex");
    }

    GeneratedGraph out;
    std::vector<int> vs;
    std::map<int, std::pair<int, int>> lift;
    int next = 0;
    for (int v : base.vertices()) {
        if (spec.split.at(v)) {
            lift[v] = {next, next + 1};
            vs.push_back(next);
            vs.push_back(next + 1);
            next += 2;
        } else {
            lift[v] = {next, next};
            vs.push_back(next);
            next += 1;
        }
    }

    std::vector<Edge> es;
    std::map<int, int> eperm;
    std::map<int, int> vperm;
    for (int v : base.vertices()) {
        auto [a, b] = lift[v];
        vperm[a] = b;
        vperm[b] = a;
    }
    int eid = 0;
    auto add_pair = [&](int u1, int v1, int u2, int v2) {
        es.push_back({eid, u1, v1});
        es.push_back({eid + 1, u2, v2});
        eperm[eid] = eid + 1;
        eperm[eid + 1] = eid;
        eid += 2;
    };
    for (const Edge& e : base.edges()) {
        bool su = spec.split.at(e.u), sv = spec.split.at(e.v);
        auto [au, bu] = lift[e.u];
        auto [av, bv] = lift[e.v];
        if (!su && !sv) {
            add_pair(au, av, au, av);  // doubled pair between fixed lifts
        } else if (!su && sv) {
            add_pair(au, av, au, bv);  // transfer pair
        } else if (su && !sv) {
            add_pair(au, av, bu, av);
        } else {
            LiftChoice c = LiftChoice::Cross;
            if (spec.lift.count(e.id)) c = spec.lift.at(e.id);
            if (c == LiftChoice::Vertical)
                add_pair(au, av, bu, bv);
            else
                add_pair(au, bv, bu, av);
        }
    }
    for (auto& [v, k] : spec.horizontals) {
        auto [a, b] = lift[v];
        for (int i = 0; i < k; ++i) {
            es.push_back({eid, a, b});
            eperm[eid] = eid;  // fixed edge with swapped endpoints
            eid += 1;
        }
    }

    MultiGraph g(vs, es);
    if (!is_connected(g))
        throw error("lift is disconnected: add a fixed vertex, a horizontal edge, or a sheet-mixing cycle");
    out.graph = g;
    out.involution = Involution{g, vperm, eperm};
    out.involution.validate();
    if (!is_mixing(out.involution)) throw error("internal: generated involution is not mixing");
    out.vertex_lift = lift;
    return out;
}

}  // namespace

GeneratedGraph generate_hyperelliptic(const MultiGraph& tree, const LiftSpec& spec) {
    return lift_base(tree, spec, true);
}

GeneratedGraph generate_bielliptic(const MultiGraph& base, const LiftSpec& spec) {
    return lift_base(base, spec, false);
}

namespace {

MultiGraph random_tree(std::mt19937_64& rng, int max_vertices) {
    int k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_vertices - 1)));
    std::vector<std::pair<int, int>> ends;
    for (int v = 1; v < k; ++v) ends.push_back({static_cast<int>(rng() % v), v});
    return MultiGraph::simple(k, ends);
}

LiftSpec random_spec(std::mt19937_64& rng, const MultiGraph& base) {
    LiftSpec spec;
    for (int v : base.vertices()) spec.split[v] = (rng() % 10) < 6;
    // repair chain violations: a fixed vertex with three fixed neighbours splits
    bool changed = true;
    while (changed) {
        changed = false;
        std::map<int, int> ffdeg;
        for (const Edge& e : base.edges())
            if (!spec.split[e.u] && !spec.split[e.v]) {
                ffdeg[e.u]++;
                ffdeg[e.v]++;
            }
        for (auto& [v, d] : ffdeg)
            if (d > 2) {
                spec.split[v] = true;
                changed = true;
                break;
            }
    }
    for (const Edge& e : base.edges())
        if (spec.split[e.u] && spec.split[e.v])
            spec.lift[e.id] = (rng() % 2) ? LiftChoice::Cross : LiftChoice::Vertical;
    for (int v : base.vertices()) {
        if (!spec.split[v]) continue;
        std::uint64_t roll = rng() % 20;
        spec.horizontals[v] = roll < 6 ? 1 : (roll < 7 ? 2 : 0);
    }
    return spec;
}

void ensure_mixing_element(std::mt19937_64& rng, const MultiGraph& base, LiftSpec& spec) {
    bool has_fixed = false, has_horizontal = false;
    for (int v : base.vertices()) {
        if (!spec.split[v]) has_fixed = true;
        if (spec.horizontals.count(v) && spec.horizontals[v] > 0) has_horizontal = true;
    }
    if (!has_fixed && !has_horizontal) {
        std::vector<int> vs = base.vertices();
        spec.horizontals[vs[rng() % vs.size()]] = 1;
    }
}

}  // namespace

GeneratedGraph random_hyperelliptic(std::uint64_t seed, int max_base_vertices) {
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
        MultiGraph base = random_tree(rng, max_base_vertices);
        LiftSpec spec = random_spec(rng, base);
        ensure_mixing_element(rng, base, spec);
        try {
            return generate_hyperelliptic(base, spec);
        } catch (const error&) {
            continue;
        }
    }
    throw error("random_hyperelliptic: no valid sample after 64 attempts");
}

GeneratedGraph random_bielliptic(std::uint64_t seed, int max_base_vertices) {
    std::mt19937_64 rng(seed * 0xBF58476D1CE4E5B9ull + 7);
    for (int attempt = 0; attempt < 64; ++attempt) {
        MultiGraph tree = random_tree(rng, max_base_vertices);
        // close one extra edge to make betti exactly one (no loop)
        std::vector<int> vs = tree.vertices();
        int a = vs[rng() % vs.size()], b = vs[rng() % vs.size()];
        if (a == b) continue;
        std::vector<Edge> es = tree.edges();
        es.push_back({tree.max_edge_id() + 1, a, b});
        MultiGraph base(vs, es);
        LiftSpec spec = random_spec(rng, base);
        try {
            return generate_bielliptic(base, spec);
        } catch (const error&) {
            continue;
        }
    }
    throw error("random_bielliptic: no valid sample after 64 attempts");
}

GraphMorphism identity_morphism(const MultiGraph& g) {
    GraphMorphism m;
    m.source = g;
    m.target = g;
    for (int v : g.vertices()) m.vertex_map[v] = v;
    for (const Edge& e : g.edges()) m.edge_to_edge[e.id] = e.id;
    return m;
}

}  // namespace mgraph
