#ifndef MGRAPH_DRAWING_HPP
#define MGRAPH_DRAWING_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mgraph/rotation.hpp"

namespace mgraph {

using Rat = boost::multiprecision::cpp_rational;

struct Point {
    Rat x, y;
    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Point& o) const { return !(*this == o); }
};

inline Point mirror_x(const Point& p) { return {-p.x, p.y}; }

enum class Surface { Plane, TorusSquare };

// Pieces run from edge.u to edge.v. On the torus a path may exit one side of
// the fundamental square and re-enter the identified side: each piece stays
// inside the square and consecutive pieces meet at identified wall points.
struct EdgePath {
    int edge = -1;
    std::vector<std::vector<Point>> pieces;
};

struct FaceCertificate {
    std::vector<int> vertices;
    int face = -1;   // index into the traced face list
};

struct Drawing {
    Surface surface = Surface::Plane;
    MultiGraph graph;
    std::map<int, Point> points;
    std::map<int, EdgePath> paths;
    bool symmetry = false;
    std::map<int, int> mirror_vertex;  // the involution realized by (x,y) -> (-x,y)
    std::vector<FaceCertificate> certificates;
};

struct VerifyReport {
    EmbeddingReport embedding;
    RotationSystem rotation;   // angular order extracted from the geometry
    int outer_face = -1;       // plane drawings: the unique negatively oriented face
};

// Full validation: endpoint and wall-identification consistency, exact
// crossing checks, symmetry when flagged, face tracing via the angular
// rotation system, genus consistent with the surface, certificates re-checked
// against traced faces. Throws mgraph::error with a diagnostic on violation.
VerifyReport verify_drawing(const Drawing& d);

// Homeomorphic re-drawing placing `face` (an index into the verified face
// list) as the unbounded face. Plane drawings only.
Drawing outer_face_inversion(const Drawing& d, int face);

std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);
std::string drawing_to_svg(const Drawing& d);

std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// Exact orientation: sign of cross(b-a, c-a).
int orientation(const Point& a, const Point& b, const Point& c);

}  // namespace mgraph

#endif
