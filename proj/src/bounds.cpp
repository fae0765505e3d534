#include "mgraph/bounds.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <bit>
#include <unordered_set>

namespace mgraph {

namespace {

// compact simple-graph view with bitmask adjacency (treewidth ignores
// parallel edges and loops)
struct MaskGraph {
    int n = 0;
    std::vector<std::uint32_t> adj;
    std::vector<int> label;

    explicit MaskGraph(const MultiGraph& g) {
        std::map<int, int> idx;
        for (int v : g.vertices()) {
            idx[v] = n++;
            label.push_back(v);
        }
        if (n > 30) throw error("treewidth search supports at most 30 vertices");
        adj.assign(n, 0);
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) continue;
            adj[idx[e.u]] |= 1u << idx[e.v];
            adj[idx[e.v]] |= 1u << idx[e.u];
        }
    }
};

// vertices adjacent to v directly or through eliminated set S
int fill_degree(const MaskGraph& g, std::uint32_t S, int v) {
    std::uint32_t reach = g.adj[v];
    std::uint32_t grown = reach & S;
    std::uint32_t processed = 0;
    while (grown != processed) {
        std::uint32_t fresh = grown & ~processed;
        processed = grown;
        std::uint32_t scan = fresh;
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            reach |= g.adj[w];
        }
        grown = reach & S;
    }
    reach &= ~S;
    reach &= ~(1u << v);
    return std::popcount(reach);
}

// max-min-degree lower bound on treewidth
int mmd_lower_bound(const MaskGraph& g) {
    std::uint32_t alive = (g.n == 32) ? ~0u : ((1u << g.n) - 1);
    std::vector<std::uint32_t> adj = g.adj;
    int best = 0;
    int remaining = g.n;
    while (remaining > 1) {
        int v = -1, dmin = 1 << 30;
        std::uint32_t scan = alive;
        while (scan) {
            int w = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(adj[w] & alive);
            if (d < dmin) {
                dmin = d;
                v = w;
            }
        }
        best = std::max(best, dmin);
        alive &= ~(1u << v);
        --remaining;
    }
    return best;
}

// greedy min-fill-degree elimination gives a certified upper bound
int greedy_upper_bound(const MaskGraph& g) {
    std::uint32_t S = 0;
    int width = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = -1, bestd = 1 << 30;
        for (int v = 0; v < g.n; ++v) {
            if (S & (1u << v)) continue;
            int d = fill_degree(g, S, v);
            if (d < bestd) {
                bestd = d;
                best = v;
            }
        }
        width = std::max(width, bestd);
        S |= 1u << best;
    }
    return width;
}

enum class Decision { Yes, No, Budget };

Decision tw_at_most(const MaskGraph& g, int k, std::int64_t budget) {
    std::unordered_set<std::uint32_t> failed;
    std::int64_t nodes = 0;
    bool out_of_budget = false;
    std::function<bool(std::uint32_t, int)> rec = [&](std::uint32_t S, int remaining) -> bool {
        if (remaining <= k + 1) return true;
        if (out_of_budget) return false;
        if (++nodes > budget) {
            out_of_budget = true;
            return false;
        }
        if (failed.count(S)) return false;
        // try eliminable vertices in ascending fill-degree order
        std::vector<std::pair<int, int>> cand;
        for (int v = 0; v < g.n; ++v) {
            if (S & (1u << v)) continue;
            int d = fill_degree(g, S, v);
            if (d <= k) cand.push_back({d, v});
        }
        std::sort(cand.begin(), cand.end());
        for (auto& [d, v] : cand) {
            if (rec(S | (1u << v), remaining - 1)) return true;
            if (out_of_budget) return false;
        }
        failed.insert(S);
        return false;
    };
    bool yes = rec(0, g.n);
    if (yes) return Decision::Yes;
    return out_of_budget ? Decision::Budget : Decision::No;
}

}  // namespace

TreewidthResult treewidth_exact(const MultiGraph& g, std::int64_t budget) {
    TreewidthResult r;
    if (g.vertex_count() == 0) throw error("treewidth of the empty graph is undefined");
    MaskGraph mg(simplify(g));
    if (mg.n == 1) {
        r.lower = r.upper = 0;
        r.exact = true;
        return r;
    }
    r.lower = std::max(1, mmd_lower_bound(mg));
    if (g.edge_count() == 0) r.lower = 0;
    r.upper = greedy_upper_bound(mg);
    while (r.lower < r.upper) {
        Decision d = tw_at_most(mg, r.lower, budget);
        if (d == Decision::Yes) {
            r.upper = r.lower;
            break;
        }
        if (d == Decision::Budget) return r;  // certified bounds only
        r.lower += 1;
    }
    r.exact = true;
    return r;
}

bool series_parallel_check(const MultiGraph& g) {
    // partial 2-tree recognition: strip loops, collapse parallels, remove
    // degree-<=1 vertices, bypass degree-2 vertices, repeat
    std::map<int, std::multiset<int>> adj;
    for (int v : g.vertices()) adj[v];
    for (const Edge& e : g.edges())
        if (!e.is_loop()) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto it = adj.begin(); it != adj.end();) {
            int v = it->first;
            auto& nb = it->second;
            // collapse parallel edges at v
            std::set<int> uniq(nb.begin(), nb.end());
            if (uniq.size() != nb.size()) {
                for (int w : uniq) {
                    while (adj[v].count(w) > 1) adj[v].erase(adj[v].find(w));
                    while (adj[w].count(v) > 1) adj[w].erase(adj[w].find(v));
                }
                changed = true;
            }
            if (nb.size() <= 1) {
                for (int w : nb) adj[w].erase(adj[w].find(v));
                it = adj.erase(it);
                changed = true;
                continue;
            }
            if (nb.size() == 2) {
                auto first = nb.begin();
                int a = *first, b = *std::next(first);
                adj[a].erase(adj[a].find(v));
                adj[b].erase(adj[b].find(v));
                if (a != b) {
                    adj[a].insert(b);
                    adj[b].insert(a);
                }
                it = adj.erase(it);
                changed = true;
                continue;
            }
            ++it;
        }
    }
    return adj.empty();
}

namespace {

GraphMorphism collapse_to_edge(const MultiGraph& g, int apex) {
    // send apex to one endpoint of a single target edge, the rest to the other
    GraphMorphism m;
    m.source = g;
    m.target = MultiGraph::simple(2, {{0, 1}});
    for (int v : g.vertices()) m.vertex_map[v] = (v == apex) ? 0 : 1;
    for (const Edge& e : g.edges()) {
        bool at_apex = (e.u == apex) != (e.v == apex);
        if (at_apex)
            m.edge_to_edge[e.id] = 0;
        else
            m.edge_to_vertex[e.id] = 1;
    }
    return m;
}

}  // namespace

std::vector<GonalityWitness> gonality_witnesses(const MultiGraph& g, const FamilyInfo& family) {
    std::vector<GonalityWitness> out;
    // witnesses for gonality must be finite (nondegenerate) harmonic morphisms;
    // a vertex with empty fibres over some edge would let the "degree" drop
    // below the treewidth floor
    auto push_checked = [&](GraphMorphism m, const std::string& what) {
        m.validate();
        HarmonicReport r = is_harmonic(m);
        if (!r.harmonic || !r.nondegenerate)
            throw error("internal: " + what + " witness failed the harmonicity check");
        out.push_back({r.degree, std::move(m), what});
    };

    if (family.hint == FamilyHint::Grid) {
        int d = family.d, n = family.n;
        GraphMorphism m;
        m.source = g;
        std::vector<std::pair<int, int>> pe;
        for (int j = 0; j + 1 < n; ++j) pe.push_back({j, j + 1});
        m.target = MultiGraph::simple(n, pe);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < n; ++c) m.vertex_map[r * n + c] = c;
        for (const Edge& e : g.edges()) {
            int cu = e.u % n, cv = e.v % n;
            if (cu == cv)
                m.edge_to_vertex[e.id] = cu;  // vertical edges collapse
            else
                m.edge_to_edge[e.id] = std::min(cu, cv);
        }
        push_checked(std::move(m), "grid column collapse");
    }
    if (family.hint == FamilyHint::CompleteBipartite) {
        int d = family.d, n = family.n;
        GraphMorphism m;
        m.source = g;
        std::vector<std::pair<int, int>> se;
        for (int i = 0; i < n; ++i) se.push_back({0, i + 1});  // star: centre 0
        m.target = MultiGraph::simple(n + 1, se);
        for (int v = 0; v < d; ++v) m.vertex_map[v] = 0;
        for (int i = 0; i < n; ++i) m.vertex_map[d + i] = i + 1;
        for (const Edge& e : g.edges()) {
            int leaf = std::max(e.u, e.v) - d;
            m.edge_to_edge[e.id] = leaf;
        }
        push_checked(std::move(m), "side collapse onto a star");
    }
    if (family.hint == FamilyHint::Hypercube) {
        // successive quotients by the top-bit involution, composed to a tree
        int n = family.n;
        GraphMorphism composite = identity_morphism(g);
        MultiGraph cur = g;
        for (int k = n; k >= 2; --k) {
            GraphMorphism step;
            step.source = cur;
            int half = 1 << (k - 1);
            std::vector<std::pair<int, int>> qe;
            std::map<std::pair<int, int>, int> qid;
            for (const Edge& e : cur.edges()) {
                int u = e.u & (half - 1), v = e.v & (half - 1);
                if (u == v) continue;
                auto key = std::minmax(u, v);
                if (!qid.count({key.first, key.second})) {
                    qid[{key.first, key.second}] = static_cast<int>(qe.size());
                    qe.push_back({key.first, key.second});
                }
            }
            step.target = MultiGraph::simple(half, qe);
            for (int v : cur.vertices()) step.vertex_map[v] = v & (half - 1);
            for (const Edge& e : cur.edges()) {
                int u = e.u & (half - 1), v = e.v & (half - 1);
                if (u == v)
                    step.edge_to_vertex[e.id] = u;
                else {
                    auto key = std::minmax(u, v);
                    step.edge_to_edge[e.id] = qid.at({key.first, key.second});
                }
            }
            push_checked(step, "hypercube quotient Q" + std::to_string(k) + " -> Q" +
                                   std::to_string(k - 1));
            // compose into the running morphism
            GraphMorphism next;
            next.source = composite.source;
            next.target = step.target;
            for (auto& [v, w] : composite.vertex_map) next.vertex_map[v] = step.vertex_map.at(w);
            for (auto& [e, f] : composite.edge_to_edge) {
                if (step.edge_to_edge.count(f))
                    next.edge_to_edge[e] = step.edge_to_edge.at(f);
                else
                    next.edge_to_vertex[e] = step.edge_to_vertex.at(f);
            }
            for (auto& [e, w] : composite.edge_to_vertex) next.edge_to_vertex[e] = step.vertex_map.at(w);
            composite = std::move(next);
            cur = composite.target;
        }
        if (n >= 2) push_checked(composite, "hypercube chain onto an edge");
    }

    // generic: a hyperelliptic witness projects with degree 2 (unless the
    // quotient is a bare point, as for the two-vertex banana)
    DetectionResult det = detect_hyperelliptic(g, 200'000);
    if (det.verdict) {
        QuotientResult q = quotient(*det.witness);
        if (q.quotient.edge_count() > 0) push_checked(q.projection, "hyperelliptic quotient");
    }

    // generic: single-vertex collapse maps onto an edge, kept when finite
    for (int v : g.vertices()) {
        GraphMorphism m = collapse_to_edge(g, v);
        HarmonicReport r = is_harmonic(m);
        if (r.harmonic && r.nondegenerate) {
            m.validate();
            out.push_back({r.degree, std::move(m),
                           "collapse around vertex " + std::to_string(v)});
        }
    }

    std::sort(out.begin(), out.end(),
              [](const GonalityWitness& a, const GonalityWitness& b) { return a.degree < b.degree; });
    return out;
}

std::vector<double> laplacian_spectrum(const MultiGraph& g) {
    if (!is_connected(g)) throw error("laplacian_spectrum requires a connected graph");
    std::map<int, int> idx;
    int n = 0;
    for (int v : g.vertices()) idx[v] = n++;
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        int a = idx[e.u], b = idx[e.v];
        L(a, a) += 1;
        L(b, b) += 1;
        L(a, b) -= 1;
        L(b, a) -= 1;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(L);
    std::vector<double> out(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<double> grid_spectrum_closed_form(int d, int n) {
    std::vector<double> out;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k < d; ++k) {
            double sj = std::sin(j * M_PI / (2.0 * n));
            double sk = std::sin(k * M_PI / (2.0 * d));
            out.push_back(4.0 * sj * sj + 4.0 * sk * sk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SpectralFormula default_spectral_formula() {
    return [](const MultiGraph& g, const std::vector<double>& spectrum) {
        if (spectrum.size() < 2) return 0.0;
        double lambda1 = spectrum[1];
        int maxdeg = 0;
        for (int v : g.vertices()) maxdeg = std::max(maxdeg, g.degree(v));
        return lambda1 * g.vertex_count() / (lambda1 + 4.0 * (maxdeg + 1));
    };
}

double spectral_lower_bound(const MultiGraph& g, const SpectralFormula& formula) {
    if (!formula) throw error("spectral bound unsupported: no formula plugin supplied");
    return formula(g, laplacian_spectrum(g));
}

BoundsReport bounds_report(const MultiGraph& g, const FamilyInfo& family,
                           std::int64_t treewidth_budget) {
    BoundsReport r;
    r.treewidth = treewidth_exact(g, treewidth_budget);
    auto witnesses = gonality_witnesses(g, family);
    if (!witnesses.empty()) r.best_witness = witnesses.front();
    r.spectrum = laplacian_spectrum(g);
    r.spectral_bound = spectral_lower_bound(g, default_spectral_formula());
    int tw_lower = r.treewidth.lower;
    int sp_lower = static_cast<int>(std::ceil(r.spectral_bound - 1e-12));
    if (sp_lower > tw_lower) {
        r.gonality_lower = sp_lower;
        r.lower_source = "spectral";
    } else {
        r.gonality_lower = tw_lower;
        r.lower_source = "treewidth";
    }
    return r;
}

}  // namespace mgraph
