#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "json.hpp"
#include "sphereratio/quadrature.hpp"
#include "sphereratio/rng.hpp"
#include "sphereratio/sphere.hpp"

namespace sphereratio {

/// Piecewise-geodesic curve on the sphere. Vertices live in the extended
/// chart; edge i joins vertex i to vertex i+1 (wrapping around when closed).
/// An edge is the shortest arc between its endpoints unless a witness is
/// registered for it: then it is the arc through the witness point. Witnesses
/// are required for edges of length >= pi - 1e-9 (the shortest arc is
/// ambiguous or ill-conditioned there) and for the single-vertex normal form
/// of a full great circle (one closed edge of angle 2 pi).
struct GeodesicPolygon {
  std::vector<ExtPoint> vertices;
  bool closed = true;
  std::map<std::size_t, ExtPoint> witnesses;  // edge index -> interior point

  std::size_t edge_count() const;
  GeodesicArc edge(std::size_t i) const;
  double length() const;

  nlohmann::json to_json() const;
  static GeodesicPolygon from_json(const nlohmann::json& j);
};

/// Signed turn at vertex i: angle from the incoming to the outgoing tangent,
/// measured by an observer standing at the vertex with head toward the
/// sphere's center. Positive turns are left turns. Defined at every vertex of
/// a closed polygon and at interior vertices of an open one (DomainError
/// otherwise).
double turn_angle(const GeodesicPolygon& poly, std::size_t i);

/// Canonical form of a polygon:
///   1. zero-length edges are dropped;
///   2. back-tracking vertices (turn = +-pi within 1e-10) are rejected with
///      DegenerateCurve unless the vertex is one of the omitted points
///      {0, 1, inf}, where folds are legitimate;
///   3. omitted points lying in the interior of an edge become vertices;
///   4. straight vertices (|turn| <= 1e-10) outside {0, 1, inf} are merged
///      away, with the removed vertex retained as the witness whenever the
///      merged edge reaches length pi - 1e-9. A closed all-straight polygon
///      collapses to the single-vertex full-circle normal form.
/// Polygons that collapse to a point raise DegenerateCurve.
GeodesicPolygon normalize(const GeodesicPolygon& poly);

/// Split of a normalized polygon at its natural vertices: the vertices that
/// any parametrization must respect, i.e. omitted points and genuine corners
/// (|turn| > 1e-10). In a normalized polygon every vertex is natural, so the
/// pieces are its individual edges - except for the full great circle, which
/// has no natural vertex and stays whole as the one closed piece.
struct NaturalPartition {
  GeodesicPolygon normalized;
  std::vector<std::size_t> natural_vertices;  // indices into `normalized`
  std::vector<GeodesicPolygon> pieces;        // open two-vertex polylines
};
NaturalPartition natural_partition(const GeodesicPolygon& poly);

/// Turn-based convexity at one vertex; convex means turning left or going
/// straight (turn >= -1e-10). Throws AntipodalNeighbors when an adjacent edge
/// joins antipodal endpoints without a witness, since the tangent there is
/// not determined.
struct VertexConvexity {
  double turn = 0.0;
  bool convex = false;
};
VertexConvexity is_convex_at(const GeodesicPolygon& poly, std::size_t i);

/// Convexity restricted to the vertices lying in a region of interest.
struct ConvexityReport {
  std::vector<std::size_t> checked;     // vertices inside the region
  std::vector<std::size_t> violations;  // checked vertices with turn < -1e-10
  bool convex = true;                   // violations.empty()
};
ConvexityReport is_locally_convex_in(
    const GeodesicPolygon& poly,
    const std::function<bool(const ExtPoint&)>& region);

/// Decomposition of a polygon against the reference ray [0, +inf] (the
/// half great circle {(x1, 0, x3) : x1 >= 0} through 0, 1 and inf).
struct RayEvent {
  enum class Kind { kCrossing, kTouch, kOverlapStart, kOverlapEnd };
  Kind kind = Kind::kCrossing;
  ExtPoint point;
};

struct RayPiece {
  GeodesicPolygon path;  // open polyline (closed only when nothing was cut)
  bool on_ray = false;
  double length = 0.0;
};

struct RayCut {
  std::vector<RayPiece> pieces;  // in traversal order
  std::vector<RayEvent> events;  // in traversal order
  double on_ray_length = 0.0;
  double off_ray_length = 0.0;
};

/// Normalizes the polygon, splits every transversal ray crossing, classifies
/// maximal runs as on-ray / off-ray and reports the crossing, touch and
/// overlap events in traversal order. The piece lengths add up to the total
/// length within 1e-10. Throws NonTransversal when the curve meets the ray at
/// one of its endpoints 0 or inf from opposite sides, where "crossing the
/// ray" is not well defined.
RayCut cut_against_ray(const GeodesicPolygon& poly);

/// Polygonal approximation of a parametrized curve with spherical chord
/// angles at most max_chord_angle between consecutive vertices.
GeodesicPolygon approximate(const ParamCurve& curve,
                            double max_chord_angle = 1e-3, bool closed = true);

/// Points along all edges at the given spacing (radians), endpoints included.
std::vector<Vec3> sample_edge_points(const GeodesicPolygon& poly,
                                     double spacing = 0.01);

/// Deterministic random closed polygon with total length at most
/// max_total_length: random vertices, contracted toward their mean direction
/// until the budget is met. Adjacent vertices are kept away from coincidence
/// and antipodality.
GeodesicPolygon random_closed_polygon(Rng& rng, double max_total_length,
                                      std::size_t min_vertices = 3,
                                      std::size_t max_vertices = 12);

}  // namespace sphereratio
