#include "mgraph/drawing.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "json.hpp"
#include "mgraph/planar_draw.hpp"

namespace mgraph {

std::string rat_to_string(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rat rat_from_string(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw error("bad rational literal: " + s);
    }
}

int orientation(const Point& a, const Point& b, const Point& c) {
    Rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (det > 0) return 1;
    if (det < 0) return -1;
    return 0;
}

namespace {

struct Seg {
    Point a, b;
    int edge;
    int piece;
    int index;       // segment index within the piece
    double lox, hix, loy, hiy;
};

double to_double(const Rat& r) { return r.convert_to<double>(); }

bool collinear_contains(const Point& a, const Point& b, const Point& p) {
    // assumes collinear; closed containment
    if (a.x != b.x) {
        return (p.x >= std::min(a.x, b.x)) && (p.x <= std::max(a.x, b.x));
    }
    return (p.y >= std::min(a.y, b.y)) && (p.y <= std::max(a.y, b.y));
}

// Returns: 0 no contact, 1 touch at exactly one point (out), 2 overlap/crossing.
int segment_contact(const Point& A, const Point& B, const Point& C, const Point& D, Point& out) {
    int d1 = orientation(C, D, A);
    int d2 = orientation(C, D, B);
    int d3 = orientation(A, B, C);
    int d4 = orientation(A, B, D);
    if (d1 == 0 && d2 == 0) {
        // collinear: count shared points
        bool ca = collinear_contains(C, D, A);
        bool cb = collinear_contains(C, D, B);
        bool cc = collinear_contains(A, B, C);
        bool cd = collinear_contains(A, B, D);
        std::vector<Point> pts;
        auto push = [&](const Point& p) {
            for (auto& q : pts)
                if (q == p) return;
            pts.push_back(p);
        };
        if (ca) push(A);
        if (cb) push(B);
        if (cc) push(C);
        if (cd) push(D);
        if (pts.empty()) return 0;
        if (pts.size() == 1) {
            out = pts[0];
            return 1;
        }
        return 2;
    }
    if (((d1 < 0 && d2 > 0) || (d1 > 0 && d2 < 0)) && ((d3 < 0 && d4 > 0) || (d3 > 0 && d4 < 0)))
        return 2;  // proper crossing
    // touch cases: an endpoint lies on the other segment
    if (d1 == 0 && collinear_contains(C, D, A)) { out = A; return 1; }
    if (d2 == 0 && collinear_contains(C, D, B)) { out = B; return 1; }
    if (d3 == 0 && collinear_contains(A, B, C)) { out = C; return 1; }
    if (d4 == 0 && collinear_contains(A, B, D)) { out = D; return 1; }
    return 0;
}

bool on_wall(const Point& p) {
    return p.x == Rat(1) || p.x == Rat(-1) || p.y == Rat(1) || p.y == Rat(-1);
}

bool is_corner(const Point& p) {
    return (p.x == Rat(1) || p.x == Rat(-1)) && (p.y == Rat(1) || p.y == Rat(-1));
}

bool identified(const Point& exit, const Point& entry) {
    if (exit.y == Rat(1) && entry.y == Rat(-1)) return exit.x == entry.x;
    if (exit.y == Rat(-1) && entry.y == Rat(1)) return exit.x == entry.x;
    if (exit.x == Rat(1) && entry.x == Rat(-1)) return exit.y == entry.y;
    if (exit.x == Rat(-1) && entry.x == Rat(1)) return exit.y == entry.y;
    return false;
}

bool inside_closed_square(const Point& p) {
    return p.x >= Rat(-1) && p.x <= Rat(1) && p.y >= Rat(-1) && p.y <= Rat(1);
}

bool strictly_inside_square(const Point& p) {
    return p.x > Rat(-1) && p.x < Rat(1) && p.y > Rat(-1) && p.y < Rat(1);
}

// angular comparator for darts by outgoing direction, counterclockwise from +x
struct DirLess {
    bool operator()(const std::pair<Point, Dart>& l, const std::pair<Point, Dart>& r) const {
        const Point& a = l.first;
        const Point& b = r.first;
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rat cross = a.x * b.y - a.y * b.x;
        if (cross != 0) return cross > 0;
        return l.second < r.second;  // identical directions: stable order (flagged elsewhere)
    }
    static int half(const Point& d) {
        // 0: positive x axis, 1: upper half, 2: negative x axis, 3: lower half
        if (d.y == 0) return d.x > 0 ? 0 : 2;
        return d.y > 0 ? 1 : 3;
    }
};

}  // namespace

VerifyReport verify_drawing(const Drawing& d) {
    const MultiGraph& g = d.graph;
    if (g.vertex_count() == 0) throw error("empty drawing");
    for (int v : g.vertices())
        if (!d.points.count(v)) throw error("vertex " + std::to_string(v) + " has no coordinates");

    bool torus = d.surface == Surface::TorusSquare;

    for (const Edge& e : g.edges()) {
        auto it = d.paths.find(e.id);
        if (it == d.paths.end()) throw error("edge " + std::to_string(e.id) + " has no polyline");
        const EdgePath& path = it->second;
        if (path.pieces.empty()) throw error("edge " + std::to_string(e.id) + " has an empty path");
        if (!torus && path.pieces.size() != 1)
            throw error("plane edge " + std::to_string(e.id) + " must be a single piece");
        for (const auto& piece : path.pieces) {
            if (piece.size() < 2) throw error("degenerate piece on edge " + std::to_string(e.id));
            for (size_t i = 0; i + 1 < piece.size(); ++i)
                if (piece[i] == piece[i + 1])
                    throw error("zero-length segment on edge " + std::to_string(e.id));
            if (torus)
                for (const Point& p : piece)
                    if (!inside_closed_square(p))
                        throw error("torus piece leaves the fundamental square on edge " +
                                    std::to_string(e.id));
        }
        if (path.pieces.front().front() != d.points.at(e.u))
            throw error("edge " + std::to_string(e.id) + " does not start at its endpoint");
        if (path.pieces.back().back() != d.points.at(e.v))
            throw error("edge " + std::to_string(e.id) + " does not end at its endpoint");
        for (size_t k = 0; k + 1 < path.pieces.size(); ++k) {
            const Point& exit = path.pieces[k].back();
            const Point& entry = path.pieces[k + 1].front();
            if (is_corner(exit) || is_corner(entry))
                throw error("torus transition through a square corner on edge " + std::to_string(e.id));
            if (!on_wall(exit) || !on_wall(entry) || !identified(exit, entry))
                throw error("torus pieces of edge " + std::to_string(e.id) +
                            " are not joined across an identification");
        }
    }
    if (torus)
        for (int v : g.vertices())
            if (!strictly_inside_square(d.points.at(v)))
                throw error("torus vertex on the square boundary");

    if (d.symmetry) {
        if (d.mirror_vertex.empty()) throw error("symmetry flag without a mirror involution");
        for (auto& [v, w] : d.mirror_vertex) {
            if (!d.points.count(v) || !d.points.count(w)) throw error("mirror involution names unknown vertex");
            if (d.points.at(w) != mirror_x(d.points.at(v)))
                throw error("mirror symmetry violated at vertex " + std::to_string(v));
        }
    }

    // exact crossing sweep with a bounding-box prefilter
    std::vector<Seg> segs;
    for (auto& [eid, path] : d.paths) {
        for (size_t pi = 0; pi < path.pieces.size(); ++pi) {
            const auto& piece = path.pieces[pi];
            for (size_t i = 0; i + 1 < piece.size(); ++i) {
                Seg s;
                s.a = piece[i];
                s.b = piece[i + 1];
                s.edge = eid;
                s.piece = static_cast<int>(pi);
                s.index = static_cast<int>(i);
                double ax = to_double(s.a.x), bx = to_double(s.b.x);
                double ay = to_double(s.a.y), by = to_double(s.b.y);
                s.lox = std::min(ax, bx) - 1e-9;
                s.hix = std::max(ax, bx) + 1e-9;
                s.loy = std::min(ay, by) - 1e-9;
                s.hiy = std::max(ay, by) + 1e-9;
                segs.push_back(std::move(s));
            }
        }
    }
    auto is_vertex_point = [&](const Point& p, int e1, int e2) {
        const Edge& a = g.edge(e1);
        const Edge& b = g.edge(e2);
        for (int w : {a.u, a.v}) {
            if ((w == b.u || w == b.v) && d.points.at(w) == p) return true;
        }
        return false;
    };
    for (size_t i = 0; i < segs.size(); ++i) {
        for (size_t j = i + 1; j < segs.size(); ++j) {
            const Seg& s = segs[i];
            const Seg& t = segs[j];
            if (s.hix < t.lox || t.hix < s.lox || s.hiy < t.loy || t.hiy < s.loy) continue;
            bool same_polyline = s.edge == t.edge && s.piece == t.piece;
            if (same_polyline && std::abs(s.index - t.index) <= 1) {
                // consecutive segments may only share their common bend
                if (std::abs(s.index - t.index) == 1) {
                    const Seg& first = s.index < t.index ? s : t;
                    const Seg& second = s.index < t.index ? t : s;
                    if (orientation(first.a, first.b, second.b) == 0 &&
                        collinear_contains(first.a, first.b, second.b) && second.b != first.b)
                        throw error("polyline doubles back on edge " + std::to_string(s.edge));
                }
                continue;
            }
            Point touch;
            int contact = segment_contact(s.a, s.b, t.a, t.b, touch);
            if (contact == 0) continue;
            if (contact == 2)
                throw error("crossing between edges " + std::to_string(s.edge) + " and " +
                            std::to_string(t.edge));
            bool endpoint_of_s = (touch == s.a || touch == s.b);
            bool endpoint_of_t = (touch == t.a || touch == t.b);
            if (!endpoint_of_s || !endpoint_of_t || !is_vertex_point(touch, s.edge, t.edge))
                throw error("improper contact between edges " + std::to_string(s.edge) + " and " +
                            std::to_string(t.edge));
        }
    }

    // rotation system from the angular order of outgoing directions
    VerifyReport rep;
    rep.rotation.graph = g;
    for (int v : g.vertices()) {
        std::vector<std::pair<Point, Dart>> dirs;
        for (int eid : g.incident(v)) {
            const Edge& e = g.edge(eid);
            const EdgePath& path = d.paths.at(eid);
            auto out_dir = [&](bool at_u) {
                const auto& piece = at_u ? path.pieces.front() : path.pieces.back();
                Point from = at_u ? piece[0] : piece[piece.size() - 1];
                Point to = at_u ? piece[1] : piece[piece.size() - 2];
                return Point{to.x - from.x, to.y - from.y};
            };
            if (e.is_loop()) {
                dirs.push_back({out_dir(true), dart_fwd(eid)});
                dirs.push_back({out_dir(false), dart_rev(eid)});
            } else {
                bool at_u = (e.u == v);
                dirs.push_back({out_dir(at_u), at_u ? dart_fwd(eid) : dart_rev(eid)});
            }
        }
        std::sort(dirs.begin(), dirs.end(), DirLess{});
        for (size_t i = 0; i + 1 < dirs.size(); ++i) {
            const Point& a = dirs[i].first;
            const Point& b = dirs[i + 1].first;
            if (a.x * b.y - a.y * b.x == 0 && DirLess::half(a) == DirLess::half(b))
                throw error("two edges leave vertex " + std::to_string(v) + " in the same direction");
        }
        std::vector<Dart> rot;
        for (auto& [dir, dart] : dirs) rot.push_back(dart);
        rep.rotation.rotation[v] = rot;
    }
    rep.rotation.validate();
    rep.embedding = trace_faces(rep.rotation);

    if (d.surface == Surface::Plane) {
        if (rep.embedding.orientable_genus != 0)
            throw error("plane drawing traces to genus " +
                        std::to_string(rep.embedding.orientable_genus));
        // the unbounded face is the unique negatively oriented one; a drawing
        // with a single face (a tree) has total signed area zero
        int outer = -1;
        if (rep.embedding.face_count == 1) {
            outer = 0;
        } else {
            for (size_t f = 0; f < rep.embedding.faces.size(); ++f) {
                Rat area = 0;
                for (Dart dart : rep.embedding.faces[f]) {
                    const EdgePath& path = d.paths.at(dart_edge(dart));
                    const auto& piece = path.pieces.front();
                    if ((dart & 1) == 0) {
                        for (size_t i = 0; i + 1 < piece.size(); ++i)
                            area += piece[i].x * piece[i + 1].y - piece[i + 1].x * piece[i].y;
                    } else {
                        for (size_t i = piece.size(); i-- > 1;)
                            area += piece[i].x * piece[i - 1].y - piece[i - 1].x * piece[i].y;
                    }
                }
                if (area < 0) {
                    if (outer != -1) throw error("two negatively oriented faces in a plane drawing");
                    outer = static_cast<int>(f);
                }
            }
            if (outer == -1 && g.edge_count() > 0) throw error("no unbounded face found");
        }
        rep.outer_face = outer;
    } else {
        if (rep.embedding.orientable_genus > 1)
            throw error("torus drawing traces to genus " +
                        std::to_string(rep.embedding.orientable_genus));
    }

    for (const FaceCertificate& c : d.certificates) {
        if (c.face < 0 || c.face >= rep.embedding.face_count)
            throw error("certificate references unknown face");
        const auto& walk = rep.embedding.faces[c.face];
        for (int v : c.vertices) {
            bool found = false;
            for (Dart dart : walk)
                if (rep.rotation.dart_origin(dart) == v) found = true;
            if (!found)
                throw error("certificate mismatch: vertex " + std::to_string(v) +
                            " not on face " + std::to_string(c.face));
        }
    }
    return rep;
}

Drawing outer_face_inversion(const Drawing& d, int face) {
    VerifyReport rep = verify_drawing(d);
    if (d.surface != Surface::Plane) throw error("outer_face_inversion requires a plane drawing");
    if (face < 0 || face >= rep.embedding.face_count) throw error("unknown face id");
    if (face == rep.outer_face) return d;

    std::optional<Involution> mirror;
    if (d.symmetry) {
        Involution inv;
        inv.graph = d.graph;
        inv.vertex_perm = d.mirror_vertex;
        // edge action induced by geometry: mirror image of each polyline
        // matches a unique edge with mirrored endpoints; recover by keys
        std::map<std::pair<int, int>, std::vector<int>> classes;
        for (const Edge& e : d.graph.edges()) classes[e.key()].push_back(e.id);
        std::map<int, int> eperm;
        for (auto& [key, ids] : classes) {
            int iu = d.mirror_vertex.at(key.first), iv = d.mirror_vertex.at(key.second);
            std::pair<int, int> ikey = iu <= iv ? std::make_pair(iu, iv) : std::make_pair(iv, iu);
            const auto& jds = classes.at(ikey);
            for (size_t i = 0; i < ids.size(); ++i) eperm[ids[i]] = jds[i];
        }
        inv.edge_perm = eperm;
        try {
            inv.validate();
            mirror = inv;
        } catch (const error&) {
            mirror.reset();
        }
    }
    Drawing out = draw_planar_with_outer(rep.rotation, rep.embedding, face, mirror);
    out.certificates.clear();
    verify_drawing(out);
    return out;
}

namespace {

nlohmann::ordered_json point_json(const Point& p) {
    return nlohmann::ordered_json::array({rat_to_string(p.x), rat_to_string(p.y)});
}

Point point_from_json(const nlohmann::json& j) {
    return Point{rat_from_string(j.at(0).get<std::string>()),
                 rat_from_string(j.at(1).get<std::string>())};
}

}  // namespace

std::string drawing_to_json(const Drawing& d) {
    nlohmann::ordered_json j;
    j["surface"] = d.surface == Surface::Plane ? "plane" : "torus-square";
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v : d.graph.vertices()) {
        nlohmann::ordered_json jv;
        jv["id"] = v;
        jv["x"] = rat_to_string(d.points.at(v).x);
        jv["y"] = rat_to_string(d.points.at(v).y);
        j["vertices"].push_back(jv);
    }
    j["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : d.graph.edges()) {
        nlohmann::ordered_json je;
        je["id"] = e.id;
        je["u"] = e.u;
        je["v"] = e.v;
        const EdgePath& path = d.paths.at(e.id);
        nlohmann::ordered_json flat = nlohmann::ordered_json::array();
        for (const auto& piece : path.pieces)
            for (const Point& p : piece) flat.push_back(point_json(p));
        je["polyline"] = flat;
        if (d.surface == Surface::TorusSquare) {
            nlohmann::ordered_json pieces = nlohmann::ordered_json::array();
            for (const auto& piece : path.pieces) {
                nlohmann::ordered_json jp = nlohmann::ordered_json::array();
                for (const Point& p : piece) jp.push_back(point_json(p));
                pieces.push_back(jp);
            }
            je["segments_on_torus"] = pieces;
        }
        j["edges"].push_back(je);
    }
    j["symmetry"] = d.symmetry;
    if (d.symmetry) {
        nlohmann::ordered_json jm;
        for (auto& [v, w] : d.mirror_vertex) jm[std::to_string(v)] = w;
        j["mirror"] = jm;
    }
    j["certificates"] = nlohmann::ordered_json::array();
    for (const FaceCertificate& c : d.certificates) {
        nlohmann::ordered_json jc;
        jc["vertices"] = c.vertices;
        jc["face"] = c.face;
        j["certificates"].push_back(jc);
    }
    return j.dump(2) + "\n";
}

Drawing drawing_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Drawing d;
    std::string surf = j.at("surface").get<std::string>();
    if (surf == "plane")
        d.surface = Surface::Plane;
    else if (surf == "torus-square")
        d.surface = Surface::TorusSquare;
    else
        throw error("unknown surface: " + surf);
    std::vector<int> vs;
    for (auto& jv : j.at("vertices")) {
        int id = jv.at("id").get<int>();
        vs.push_back(id);
        d.points[id] = Point{rat_from_string(jv.at("x").get<std::string>()),
                             rat_from_string(jv.at("y").get<std::string>())};
    }
    std::vector<Edge> es;
    for (auto& je : j.at("edges")) {
        Edge e{je.at("id").get<int>(), je.at("u").get<int>(), je.at("v").get<int>()};
        es.push_back(e);
        EdgePath path;
        path.edge = e.id;
        if (je.count("segments_on_torus")) {
            for (auto& jp : je.at("segments_on_torus")) {
                std::vector<Point> piece;
                for (auto& pt : jp) piece.push_back(point_from_json(pt));
                path.pieces.push_back(std::move(piece));
            }
        } else {
            std::vector<Point> piece;
            for (auto& pt : je.at("polyline")) piece.push_back(point_from_json(pt));
            path.pieces.push_back(std::move(piece));
        }
        d.paths[e.id] = std::move(path);
    }
    d.graph = MultiGraph(vs, es);
    d.symmetry = j.value("symmetry", false);
    if (j.count("mirror") && !j.at("mirror").is_null())
        for (auto& [k, v] : j.at("mirror").items())
            d.mirror_vertex[std::stoi(k)] = v.get<int>();
    if (j.count("certificates"))
        for (auto& jc : j.at("certificates")) {
            FaceCertificate c;
            for (auto& v : jc.at("vertices")) c.vertices.push_back(v.get<int>());
            c.face = jc.at("face").get<int>();
            d.certificates.push_back(c);
        }
    return d;
}

std::string drawing_to_svg(const Drawing& d) {
    double lox = 1e18, hix = -1e18, loy = 1e18, hiy = -1e18;
    auto see = [&](const Point& p) {
        double x = to_double(p.x), y = to_double(p.y);
        lox = std::min(lox, x);
        hix = std::max(hix, x);
        loy = std::min(loy, y);
        hiy = std::max(hiy, y);
    };
    for (auto& [v, p] : d.points) see(p);
    for (auto& [e, path] : d.paths)
        for (auto& piece : path.pieces)
            for (auto& p : piece) see(p);
    if (d.surface == Surface::TorusSquare) {
        lox = std::min(lox, -1.0); hix = std::max(hix, 1.0);
        loy = std::min(loy, -1.0); hiy = std::max(hiy, 1.0);
    }
    double w = std::max(hix - lox, 1e-6), h = std::max(hiy - loy, 1e-6);
    double pad = 0.05 * std::max(w, h);
    lox -= pad; hix += pad; loy -= pad; hiy += pad;
    w = hix - lox; h = hiy - loy;
    const double scale = 640.0 / std::max(w, h);
    auto X = [&](const Point& p) { return (to_double(p.x) - lox) * scale; };
    auto Y = [&](const Point& p) { return (hiy - to_double(p.y)) * scale; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * scale << "\" height=\""
       << h * scale << "\" viewBox=\"0 0 " << w * scale << " " << h * scale << "\">\n";
    if (d.surface == Surface::TorusSquare) {
        Point c1{-1, -1}, c2{1, 1};
        os << "  <rect x=\"" << X(c1) << "\" y=\"" << Y(c2) << "\" width=\"" << (X(c2) - X(c1))
           << "\" height=\"" << (Y(c1) - Y(c2))
           << "\" fill=\"none\" stroke=\"#888\" stroke-dasharray=\"6 4\"/>\n";
    }
    for (auto& [e, path] : d.paths) {
        for (auto& piece : path.pieces) {
            os << "  <polyline fill=\"none\" stroke=\"#1f4e8c\" stroke-width=\"1.5\" points=\"";
            for (auto& p : piece) os << X(p) << "," << Y(p) << " ";
            os << "\"/>\n";
        }
    }
    for (auto& [v, p] : d.points) {
        os << "  <circle cx=\"" << X(p) << "\" cy=\"" << Y(p)
           << "\" r=\"3\" fill=\"#c23\"/>\n";
        os << "  <text x=\"" << X(p) + 5 << "\" y=\"" << Y(p) - 5
           << "\" font-size=\"11\" fill=\"#333\">" << v << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace mgraph
