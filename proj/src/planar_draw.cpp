#include "mgraph/planar_draw.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace mgraph {

namespace {

double to_double(const Rat& r) { return r.convert_to<double>(); }

Rat snap(double x, long long denom) {
    long long num = std::llround(x * static_cast<double>(denom));
    return Rat(num, denom);
}

// --- subdivided working copy -------------------------------------------------

struct Subdivided {
    MultiGraph graph;                       // simple: every original edge twice subdivided
    std::map<int, std::pair<int, int>> mids;  // original edge -> (mid near u, mid near v)
    std::map<int, std::array<int, 3>> legs;   // original edge -> the three replacement edges
    RotationSystem rs;                        // extended rotation system
};

Subdivided subdivide_all(const RotationSystem& in) {
    const MultiGraph& g = in.graph;
    Subdivided s;
    std::vector<int> vs = g.vertices();
    std::vector<Edge> es;
    int nv = g.max_vertex_id() + 1;
    int ne = 0;
    for (const Edge& e : g.edges()) {
        int m1 = nv++, m2 = nv++;
        vs.push_back(m1);
        vs.push_back(m2);
        int l0 = ne++, l1 = ne++, l2 = ne++;
        es.push_back({l0, e.u, m1});
        es.push_back({l1, m1, m2});
        es.push_back({l2, m2, e.v});
        s.mids[e.id] = {m1, m2};
        s.legs[e.id] = {l0, l1, l2};
    }
    s.graph = MultiGraph(vs, es);
    s.rs.graph = s.graph;
    for (auto& [v, rot] : in.rotation) {
        std::vector<Dart> out;
        for (Dart d : rot) {
            int e = dart_edge(d);
            bool fwd = (d & 1) == 0;  // at u
            out.push_back(fwd ? dart_fwd(s.legs[e][0]) : dart_rev(s.legs[e][2]));
        }
        s.rs.rotation[v] = out;
    }
    for (auto& [e, mm] : s.mids) {
        auto [m1, m2] = mm;
        auto legs = s.legs[e];
        s.rs.rotation[m1] = {dart_rev(legs[0]), dart_fwd(legs[1])};
        s.rs.rotation[m2] = {dart_rev(legs[1]), dart_fwd(legs[2])};
    }
    s.rs.validate();
    return s;
}

// Tutte layout: boundary pinned, interior vertices at neighbor averages.
std::map<int, std::pair<double, double>> tutte_solve(const MultiGraph& g,
                                                     const std::map<int, std::pair<double, double>>& pinned) {
    std::map<int, std::pair<double, double>> pos;
    for (int v : g.vertices()) pos[v] = {0.0, 0.0};
    for (auto& [v, p] : pinned) pos[v] = p;
    std::vector<int> interior;
    for (int v : g.vertices())
        if (!pinned.count(v)) interior.push_back(v);
    std::map<int, std::vector<int>> nbr;
    for (int v : interior) nbr[v] = g.neighbors(v);
    const double omega = 1.7;
    for (int iter = 0; iter < 400000; ++iter) {
        double worst = 0.0;
        for (int v : interior) {
            const auto& ns = nbr[v];
            double sx = 0, sy = 0;
            for (int w : ns) {
                sx += pos[w].first;
                sy += pos[w].second;
            }
            double tx = sx / ns.size(), ty = sy / ns.size();
            double nx = pos[v].first + omega * (tx - pos[v].first);
            double ny = pos[v].second + omega * (ty - pos[v].second);
            worst = std::max({worst, std::abs(nx - pos[v].first), std::abs(ny - pos[v].second)});
            pos[v] = {nx, ny};
        }
        if (worst < 1e-13) break;
    }
    return pos;
}

struct StellationPlan {
    MultiGraph graph;                   // subdivided + star vertices
    std::vector<int> stars;             // star vertex ids
    std::map<int, int> star_of_face;    // face index -> star vertex (absent for outer)
};

StellationPlan stellate(const Subdivided& s, const EmbeddingReport& rep, int outer_face) {
    StellationPlan plan;
    std::vector<int> vs = s.graph.vertices();
    std::vector<Edge> es = s.graph.edges();
    int nv = s.graph.max_vertex_id() + 1;
    int ne = s.graph.max_edge_id() + 1;
    for (int f = 0; f < rep.face_count; ++f) {
        if (f == outer_face) continue;
        int star = nv++;
        vs.push_back(star);
        plan.stars.push_back(star);
        plan.star_of_face[f] = star;
        std::set<int> corners;
        for (Dart d : rep.faces[f]) corners.insert(s.rs.dart_origin(d));
        for (int c : corners) es.push_back({ne++, star, c});
    }
    plan.graph = MultiGraph(vs, es);
    return plan;
}

std::vector<int> outer_walk_vertices(const Subdivided& s, const EmbeddingReport& rep, int outer_face) {
    std::vector<int> walk;
    for (Dart d : rep.faces[outer_face]) walk.push_back(s.rs.dart_origin(d));
    return walk;
}

Drawing assemble_drawing(const RotationSystem& original, const Subdivided& s,
                         const std::map<int, Point>& pts) {
    Drawing d;
    d.surface = Surface::Plane;
    d.graph = original.graph;
    for (int v : original.graph.vertices()) d.points[v] = pts.at(v);
    for (const Edge& e : original.graph.edges()) {
        auto [m1, m2] = s.mids.at(e.id);
        EdgePath path;
        path.edge = e.id;
        path.pieces.push_back({pts.at(e.u), pts.at(m1), pts.at(m2), pts.at(e.v)});
        d.paths[e.id] = std::move(path);
    }
    return d;
}

}  // namespace

Drawing draw_planar_with_outer(const RotationSystem& rs, const EmbeddingReport& rep,
                               int outer_face, const std::optional<Involution>& mirror) {
    if (outer_face < 0 || outer_face >= rep.face_count) throw error("unknown face id");
    Subdivided s = subdivide_all(rs);
    // faces of the subdivided system are in bijection with the original report;
    // re-trace to get walks in the subdivided graph with identical indexing
    EmbeddingReport srep = trace_faces(s.rs);
    if (srep.face_count != rep.face_count) throw error("internal: subdivision changed face count");
    // match faces: face f of rep corresponds to the subdivided face containing
    // the first leg of rep's first dart
    std::vector<int> fmap(rep.face_count, -1);
    std::map<Dart, int> where;
    for (int f = 0; f < srep.face_count; ++f)
        for (Dart d : srep.faces[f]) where[d] = f;
    for (int f = 0; f < rep.face_count; ++f) {
        Dart d0 = rep.faces[f].front();
        int e = dart_edge(d0);
        Dart leg = ((d0 & 1) == 0) ? dart_fwd(s.legs[e][0]) : dart_rev(s.legs[e][2]);
        fmap[f] = where.at(leg);
    }
    int souter = fmap[outer_face];
    EmbeddingReport srep2;
    srep2.face_count = srep.face_count;
    srep2.faces = srep.faces;

    StellationPlan plan = stellate(s, srep2, souter);

    // mirror bookkeeping on the subdivided graph
    std::map<int, int> sub_mirror;
    bool symmetric_face = false;
    if (mirror) {
        for (auto& [v, w] : mirror->vertex_perm) sub_mirror[v] = w;
        for (const Edge& e : rs.graph.edges()) {
            int f = mirror->e(e.id);
            const Edge& fe = rs.graph.edge(f);
            auto [m1, m2] = s.mids.at(e.id);
            auto [n1, n2] = s.mids.at(f);
            if (mirror->v(e.u) == fe.u) {
                sub_mirror[m1] = n1;
                sub_mirror[m2] = n2;
            } else {
                sub_mirror[m1] = n2;
                sub_mirror[m2] = n1;
            }
        }
        // the outer walk is symmetric iff the mirrored vertex multiset of the
        // walk equals itself
        std::vector<int> walk = outer_walk_vertices(s, srep2, souter);
        std::vector<int> mw;
        for (int v : walk) mw.push_back(sub_mirror.at(v));
        std::sort(walk.begin(), walk.end());
        std::sort(mw.begin(), mw.end());
        symmetric_face = (walk == mw);
    }

    // boundary polygon
    std::vector<int> walk = outer_walk_vertices(s, srep2, souter);
    std::vector<int> distinct;
    std::set<int> seen;
    for (int v : walk)
        if (seen.insert(v).second) distinct.push_back(v);
    const int L = static_cast<int>(distinct.size());
    if (L < 3) throw error("outer face too small to pin");

    std::map<int, std::pair<double, double>> pinned;
    double phase = 0.0;
    if (mirror && symmetric_face) {
        // choose the phase so that position(mirror(v)) = (-x, y): find c with
        // mirrored(distinct[i]) == distinct[(c - i) mod L]
        int c = -1;
        for (int cand = 0; cand < L && c < 0; ++cand) {
            bool ok = true;
            for (int i = 0; i < L && ok; ++i) {
                int j = ((cand - i) % L + L) % L;
                if (sub_mirror.at(distinct[i]) != distinct[j]) ok = false;
            }
            if (ok) c = cand;
        }
        if (c < 0) {
            symmetric_face = false;  // symmetric as a set but not as a cyclic reflection
        } else {
            phase = (M_PI - 2.0 * M_PI * c / L) / 2.0;
        }
    }
    for (int i = 0; i < L; ++i) {
        double th = 2.0 * M_PI * i / L + phase;
        pinned[distinct[i]] = {std::cos(th), std::sin(th)};
    }

    auto fpos = tutte_solve(plan.graph, pinned);

    const long long denom = 1LL << 26;
    std::map<int, Point> pts;
    for (int v : s.graph.vertices()) {
        auto [x, y] = fpos.at(v);
        pts[v] = Point{snap(x, denom), snap(y, denom)};
    }
    bool sym_out = false;
    if (mirror && symmetric_face) {
        // exact symmetrization: fixed vertices on the axis, pairs mirrored
        for (int v : s.graph.vertices()) {
            int w = sub_mirror.at(v);
            if (w == v) {
                pts[v].x = 0;
            } else if (v < w) {
                pts[w] = mirror_x(pts[v]);
            }
        }
        sym_out = true;
    }

    Drawing out = assemble_drawing(rs, s, pts);
    if (sym_out) {
        out.symmetry = true;
        out.mirror_vertex = mirror->vertex_perm;
    }
    return out;
}

// --- block decomposition and gluing -------------------------------------------

namespace {

struct Blocks {
    std::vector<std::vector<int>> edge_sets;  // edge ids per block
    std::set<int> cut_vertices;
};

Blocks biconnected_blocks(const MultiGraph& g) {
    Blocks out;
    std::map<int, int> disc, low;
    std::vector<int> edge_stack;
    int timer = 0;
    std::function<void(int, int)> dfs = [&](int v, int in_edge) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int eid : g.incident(v)) {
            const Edge& e = g.edge(eid);
            if (e.is_loop()) {
                if (e.u == v && in_edge != eid) {
                    // a loop is its own block
                    out.edge_sets.push_back({eid});
                }
                continue;
            }
            if (eid == in_edge) continue;
            int w = e.other(v);
            if (!disc.count(w)) {
                ++children;
                edge_stack.push_back(eid);
                dfs(w, eid);
                low[v] = std::min(low[v], low[w]);
                if ((disc[v] == 0 && children > 1) || (disc[v] > 0 && low[w] >= disc[v])) {
                    out.cut_vertices.insert(v);
                }
                if (low[w] >= disc[v]) {
                    std::vector<int> block;
                    while (!edge_stack.empty()) {
                        int top = edge_stack.back();
                        edge_stack.pop_back();
                        block.push_back(top);
                        if (top == eid) break;
                    }
                    out.edge_sets.push_back(std::move(block));
                }
            } else if (disc[w] < disc[v]) {
                edge_stack.push_back(eid);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    dfs(g.vertices().front(), -1);
    return out;
}

MultiGraph induced_by_edges(const MultiGraph& g, const std::vector<int>& eids) {
    std::set<int> vs;
    std::vector<Edge> es;
    for (int id : eids) {
        const Edge& e = g.edge(id);
        vs.insert(e.u);
        vs.insert(e.v);
        es.push_back(e);
    }
    return MultiGraph(std::vector<int>(vs.begin(), vs.end()), es);
}

// A drawn block together with an open cone at `corner` that contains the
// whole drawing (rays from the corner's position).
struct BlockDrawing {
    Drawing drawing;
    int corner = -1;
    Point ray1, ray2;
};

BlockDrawing draw_block(const MultiGraph& block, int corner) {
    BlockDrawing out;
    out.corner = corner;
    if (block.edge_count() == 1) {
        const Edge& e = block.edges().front();
        Drawing d;
        d.graph = block;
        if (e.is_loop()) {
            Point pv{0, 0};
            d.points[e.u] = pv;
            EdgePath path;
            path.edge = e.id;
            path.pieces.push_back({pv, Point{1, Rat(1, 2)}, Point{1, Rat(-1, 2)}, pv});
            d.paths[e.id] = std::move(path);
            out.ray1 = Point{1, Rat(1, 2)};
            out.ray2 = Point{1, Rat(-1, 2)};
        } else {
            int a = (corner < 0 || e.u == corner) ? e.u : e.v;
            int b = (a == e.u) ? e.v : e.u;
            d.points[a] = Point{0, 0};
            d.points[b] = Point{1, 0};
            EdgePath path;
            path.edge = e.id;
            path.pieces.push_back({d.points[e.u], d.points[e.v]});
            d.paths[e.id] = std::move(path);
            out.ray1 = Point{2, 1};
            out.ray2 = Point{2, -1};
            out.corner = a;
        }
        out.drawing = std::move(d);
        return out;
    }
    RotationSystem rs = planar_rotation_system(block);
    EmbeddingReport rep = trace_faces(rs);
    int outer = -1;
    for (int f = 0; f < rep.face_count; ++f) {
        bool has_corner = corner < 0;
        for (Dart d : rep.faces[f])
            if (rs.dart_origin(d) == corner) has_corner = true;
        if (!has_corner) continue;
        if (outer < 0 || rep.faces[f].size() > rep.faces[outer].size()) outer = f;
    }
    out.drawing = draw_planar_with_outer(rs, rep, outer, std::nullopt);
    return out;
}

// Angular extent of the drawing seen from the corner vertex; the extent is
// below pi because the corner sits on the convex boundary polygon.
void corner_cone(BlockDrawing& bd) {
    if (bd.corner < 0) return;
    const Drawing& d = bd.drawing;
    Point pc = d.points.at(bd.corner);
    std::vector<double> angles;
    auto consider = [&](const Point& p) {
        double dx = to_double(p.x - pc.x), dy = to_double(p.y - pc.y);
        if (std::abs(dx) + std::abs(dy) > 1e-15) angles.push_back(std::atan2(dy, dx));
    };
    for (auto& [v, p] : d.points) consider(p);
    for (auto& [e, path] : d.paths)
        for (auto& piece : path.pieces)
            for (auto& p : piece) consider(p);
    std::sort(angles.begin(), angles.end());
    double best_gap = -1, gap_lo = 0, gap_hi = 0;
    for (size_t i = 0; i < angles.size(); ++i) {
        double a = angles[i];
        double b = (i + 1 < angles.size()) ? angles[i + 1] : angles[0] + 2 * M_PI;
        if (b - a > best_gap) {
            best_gap = b - a;
            gap_lo = a;
            gap_hi = b;
        }
    }
    // the occupied span is the complement of the widest gap; widen slightly
    double lo = gap_hi - 2 * M_PI - 0.01;
    double hi = gap_lo + 0.01;
    const long long denom = 1LL << 26;
    bd.ray1 = Point{snap(std::cos(lo), denom), snap(std::sin(lo), denom)};
    bd.ray2 = Point{snap(std::cos(hi), denom), snap(std::sin(hi), denom)};
}

struct WedgeTarget {
    Point apex;
    Point ray1, ray2;   // directions bounding a free angular sector at the apex
    Rat radius;
};

// largest free angular gap at v in the partial drawing, with a clearance radius
WedgeTarget free_wedge(const Drawing& partial, int v) {
    Point apex = partial.points.at(v);
    std::vector<std::pair<double, Point>> dirs;
    for (int eid : partial.graph.incident(v)) {
        auto pit = partial.paths.find(eid);
        if (pit == partial.paths.end()) continue;  // edge of a block not yet placed
        const EdgePath& path = pit->second;
        const Edge& e = partial.graph.edge(eid);
        auto add_dir = [&](bool at_u) {
            const auto& piece = at_u ? path.pieces.front() : path.pieces.back();
            Point from = at_u ? piece[0] : piece[piece.size() - 1];
            Point to = at_u ? piece[1] : piece[piece.size() - 2];
            Point dvec{to.x - from.x, to.y - from.y};
            dirs.push_back({std::atan2(to_double(dvec.y), to_double(dvec.x)), dvec});
        };
        if (e.is_loop()) {
            add_dir(true);
            add_dir(false);
        } else {
            add_dir(e.u == v);
        }
    }
    WedgeTarget w;
    w.apex = apex;
    double mid;
    double halfwidth;
    if (dirs.empty()) {
        mid = 0.0;
        halfwidth = 1.0;
    } else {
        std::sort(dirs.begin(), dirs.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        double best_gap = -1.0;
        double best_mid = 0.0;
        for (size_t i = 0; i < dirs.size(); ++i) {
            double a = dirs[i].first;
            double b = (i + 1 < dirs.size()) ? dirs[i + 1].first : dirs[0].first + 2 * M_PI;
            if (b - a > best_gap) {
                best_gap = b - a;
                best_mid = (a + b) / 2.0;
            }
        }
        mid = best_mid;
        halfwidth = std::min(best_gap * 0.3, 0.5);
    }
    const long long denom = 1LL << 26;
    w.ray1 = Point{snap(std::cos(mid - halfwidth), denom), snap(std::sin(mid - halfwidth), denom)};
    w.ray2 = Point{snap(std::cos(mid + halfwidth), denom), snap(std::sin(mid + halfwidth), denom)};

    // clearance: distance from the apex to geometry not incident to v
    double r = 1.0;
    for (auto& [eid, path] : partial.paths) {
        const Edge& e = partial.graph.edge(eid);
        bool incident = (e.u == v || e.v == v);
        for (const auto& piece : path.pieces) {
            for (size_t i = 0; i + 1 < piece.size(); ++i) {
                double ax = to_double(piece[i].x - apex.x), ay = to_double(piece[i].y - apex.y);
                double bx = to_double(piece[i + 1].x - apex.x), by = to_double(piece[i + 1].y - apex.y);
                // distance from origin to the segment
                double dx = bx - ax, dy = by - ay;
                double len2 = dx * dx + dy * dy;
                double t = len2 > 0 ? std::clamp(-(ax * dx + ay * dy) / len2, 0.0, 1.0) : 0.0;
                double px = ax + t * dx, py = ay + t * dy;
                double dist = std::hypot(px, py);
                if (incident && dist < 1e-12) continue;  // touching at the apex itself
                if (dist > 1e-12) r = std::min(r, dist);
            }
        }
    }
    w.radius = snap(r * 0.4, 1LL << 26);
    if (w.radius <= 0) w.radius = Rat(1, 1 << 20);
    return w;
}

void merge_block_at(Drawing& whole, const BlockDrawing& bd, int v) {
    // exact linear map sending the block's corner cone into a free wedge at v
    WedgeTarget w = free_wedge(whole, v);
    const Drawing& block = bd.drawing;
    Point pc = block.points.at(v);

    Rat det = bd.ray1.x * bd.ray2.y - bd.ray1.y * bd.ray2.x;
    if (det == 0) throw error("internal: degenerate block cone");
    // M = [w1 w2] * [r1 r2]^-1
    Rat i00 = bd.ray2.y / det, i01 = -bd.ray2.x / det;
    Rat i10 = -bd.ray1.y / det, i11 = bd.ray1.x / det;
    Rat m00 = w.ray1.x * i00 + w.ray2.x * i10;
    Rat m01 = w.ray1.x * i01 + w.ray2.x * i11;
    Rat m10 = w.ray1.y * i00 + w.ray2.y * i10;
    Rat m11 = w.ray1.y * i01 + w.ray2.y * i11;

    double far = 1e-12;
    auto reach = [&](const Point& p) {
        double lx = to_double(p.x - pc.x), ly = to_double(p.y - pc.y);
        double ix = to_double(m00) * lx + to_double(m01) * ly;
        double iy = to_double(m10) * lx + to_double(m11) * ly;
        far = std::max(far, std::hypot(ix, iy));
    };
    for (auto& [u, p] : block.points) reach(p);
    for (auto& [eid, path] : block.paths)
        for (auto& piece : path.pieces)
            for (auto& p : piece) reach(p);
    Rat scale = w.radius / snap(std::max(far * 2, 1e-6), 1LL << 26);

    auto apply = [&](const Point& p) {
        Rat lx = p.x - pc.x, ly = p.y - pc.y;
        return Point{w.apex.x + scale * (m00 * lx + m01 * ly),
                     w.apex.y + scale * (m10 * lx + m11 * ly)};
    };
    for (auto& [u, p] : block.points)
        whole.points.emplace(u, apply(p));  // v keeps its existing position
    for (auto& [eid, path] : block.paths) {
        EdgePath np;
        np.edge = eid;
        for (auto& piece : path.pieces) {
            std::vector<Point> q;
            for (auto& p : piece) q.push_back(apply(p));
            np.pieces.push_back(std::move(q));
        }
        whole.paths[eid] = std::move(np);
    }
}

}  // namespace

Drawing draw_planar_any(const MultiGraph& g) {
    if (!is_connected(g)) throw error("draw_planar_any requires a connected graph");
    if (g.edge_count() == 0) {
        Drawing d;
        d.graph = g;
        d.points[g.vertices().front()] = Point{0, 0};
        return d;
    }
    Blocks blocks = biconnected_blocks(g);

    // block-cut tree walk: start from block 0, attach the rest at shared vertices
    std::vector<MultiGraph> bgraphs;
    for (auto& eset : blocks.edge_sets) bgraphs.push_back(induced_by_edges(g, eset));

    std::vector<bool> placed(bgraphs.size(), false);
    Drawing whole;
    whole.graph = g;

    BlockDrawing first = draw_block(bgraphs[0], -1);
    for (auto& [v, p] : first.drawing.points) whole.points[v] = p;
    for (auto& [e, path] : first.drawing.paths) whole.paths[e] = path;
    placed[0] = true;

    bool progressed = true;
    while (progressed) {
        progressed = false;
        for (size_t b = 0; b < bgraphs.size(); ++b) {
            if (placed[b]) continue;
            int shared = -1;
            for (int v : bgraphs[b].vertices())
                if (whole.points.count(v)) {
                    shared = v;
                    break;
                }
            if (shared < 0) continue;
            BlockDrawing bd = draw_block(bgraphs[b], shared);
            corner_cone(bd);
            merge_block_at(whole, bd, shared);
            placed[b] = true;
            progressed = true;
        }
    }
    for (bool p : placed)
        if (!p) throw error("internal: block tree walk failed to place every block");
    verify_drawing(whole);
    return whole;
}

}  // namespace mgraph
