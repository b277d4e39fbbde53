#include "sphereratio/polycurve.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

namespace sphereratio {

namespace {

constexpr double kStraightTol = 1e-10;    // |turn| below this is "straight"
constexpr double kLongEdge = kPi - 1e-9;  // edges this long need a witness

bool is_omitted(const ExtPoint& p) {
  for (const ExtPoint& e : omitted_points()) {
    if (chordal(p, e) < kChordalTol) return true;
  }
  return false;
}

/// Identify points within the chordal tolerance of an omitted point with the
/// exact omitted point.
ExtPoint snap_omitted(const ExtPoint& p) {
  for (const ExtPoint& e : omitted_points()) {
    if (chordal(p, e) < kChordalTol) return e;
  }
  return p;
}

/// The arc of edge (a, b): shortest without a witness, the arc through the
/// witness otherwise.
GeodesicArc arc_between(const ExtPoint& pa, const ExtPoint& pb,
                        const std::optional<ExtPoint>& wit) {
  if (!wit) return GeodesicArc::shortest(pa, pb);
  if (chordal(pa, *wit) < kChordalTol || chordal(pb, *wit) < kChordalTol) {
    throw DomainError("GeodesicPolygon: witness coincides with an edge endpoint");
  }
  const Vec3 a = pa.embedding(), b = pb.embedding(), w = wit->embedding();
  Vec3 n = cross(a, w);
  if (n.norm() < 1e-9) {
    throw DomainError("GeodesicPolygon: witness (anti)parallel to the edge start");
  }
  n = n.normalized();
  if (std::abs(dot(b, n)) > 1e-9) {
    throw DomainError("GeodesicPolygon: witness not coplanar with the endpoints");
  }
  // Travel about n passes the witness at tw in (0, pi); pick the orientation
  // whose arc from a to b contains it.
  const double tw = std::atan2(cross(a, w).norm(), dot(a, w));
  GeodesicArc arc = GeodesicArc::through(a, b, n);
  if (tw <= arc.length() + 1e-12) return arc;
  return GeodesicArc::through(a, b, -n);
}

double turn_between(const GeodesicArc& incoming, const GeodesicArc& outgoing,
                    const Vec3& vertex) {
  const Vec3 tin = incoming.velocity_at(1.0).normalized();
  const Vec3 tout = outgoing.velocity_at(0.0).normalized();
  const Vec3 up = -vertex;  // observer with head toward the center
  return std::atan2(dot(cross(tin, tout), up), dot(tin, tout));
}

nlohmann::json point_to_json(const ExtPoint& p) {
  if (p.is_inf()) return "inf";
  return nlohmann::json{{"re", p.value().real()}, {"im", p.value().imag()}};
}

ExtPoint point_from_json(const nlohmann::json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return ExtPoint::infinity();
    throw DomainError("GeodesicPolygon: unknown point literal \"" +
                      j.get<std::string>() + "\"");
  }
  return ExtPoint(Complex(j.at("re").get<double>(), j.at("im").get<double>()));
}

}  // namespace

std::size_t GeodesicPolygon::edge_count() const {
  if (vertices.empty()) return 0;
  return closed ? vertices.size() : vertices.size() - 1;
}

GeodesicArc GeodesicPolygon::edge(std::size_t i) const {
  if (i >= edge_count()) {
    throw DomainError("GeodesicPolygon::edge: index out of range");
  }
  const std::size_t n = vertices.size();
  const ExtPoint& pa = vertices[i];
  const ExtPoint& pb = vertices[closed ? (i + 1) % n : i + 1];
  const auto it = witnesses.find(i);
  if (it == witnesses.end()) {
    if (closed && n == 1) {
      throw DegenerateCurve(
          "GeodesicPolygon::edge: a single-vertex polygon needs a witness");
    }
    return GeodesicArc::shortest(pa, pb);
  }
  return arc_between(pa, pb, it->second);
}

double GeodesicPolygon::length() const {
  double total = 0.0;
  for (std::size_t i = 0; i < edge_count(); ++i) total += edge(i).length();
  return total;
}

nlohmann::json GeodesicPolygon::to_json() const {
  nlohmann::json verts = nlohmann::json::array();
  for (const ExtPoint& v : vertices) verts.push_back(point_to_json(v));
  nlohmann::json wits = nlohmann::json::object();
  for (const auto& [i, p] : witnesses) wits[std::to_string(i)] = point_to_json(p);
  return {{"closed", closed}, {"vertices", verts}, {"witnesses", wits}};
}

GeodesicPolygon GeodesicPolygon::from_json(const nlohmann::json& j) {
  try {
    GeodesicPolygon poly;
    poly.closed = j.at("closed").get<bool>();
    for (const auto& v : j.at("vertices")) {
      poly.vertices.push_back(point_from_json(v));
    }
    if (j.contains("witnesses")) {
      for (const auto& [key, value] : j.at("witnesses").items()) {
        poly.witnesses[static_cast<std::size_t>(std::stoul(key))] =
            point_from_json(value);
      }
    }
    if (poly.vertices.empty()) {
      throw DomainError("GeodesicPolygon::from_json: no vertices");
    }
    for (const auto& [i, p] : poly.witnesses) {
      (void)p;
      if (i >= poly.edge_count()) {
        throw DomainError(
            "GeodesicPolygon::from_json: witness index out of range");
      }
    }
    return poly;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("GeodesicPolygon::from_json: ") + e.what());
  } catch (const std::logic_error& e) {  // std::stoul failures
    throw DomainError(
        std::string("GeodesicPolygon::from_json: bad witness key: ") + e.what());
  }
}

double turn_angle(const GeodesicPolygon& poly, std::size_t i) {
  const std::size_t n = poly.vertices.size();
  const std::size_t ne = poly.edge_count();
  if (i >= n) throw DomainError("turn_angle: vertex index out of range");
  if (!poly.closed && (i == 0 || i + 1 == n)) {
    throw DomainError("turn_angle: undefined at the ends of an open polyline");
  }
  const std::size_t in = poly.closed ? (i + ne - 1) % ne : i - 1;
  return turn_between(poly.edge(in), poly.edge(i), poly.vertices[i].embedding());
}

// ---------------------------------------------------------------------------
// normalize
// ---------------------------------------------------------------------------

namespace {

/// Mutable polygon: one (possibly empty) witness slot per vertex, the slot of
/// a vertex belonging to the edge that starts there.
struct Work {
  std::vector<ExtPoint> v;
  std::vector<std::optional<ExtPoint>> w;
  bool closed = true;

  std::size_t nedges() const {
    if (v.empty()) return 0;
    return closed ? v.size() : v.size() - 1;
  }
  std::size_t nxt(std::size_t i) const {
    return closed ? (i + 1) % v.size() : i + 1;
  }
  GeodesicArc arc(std::size_t k) const {
    return arc_between(v[k], v[nxt(k)], w[k]);
  }
};

ExtPoint prefer_omitted(const ExtPoint& a, const ExtPoint& b) {
  if (is_omitted(a)) return snap_omitted(a);
  if (is_omitted(b)) return snap_omitted(b);
  return a;
}

/// Step 1: remove edges whose endpoints coincide (witnessed full-circle edges
/// are legitimate and stay).
void drop_zero_edges(Work& work) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < work.nedges(); ++k) {
      const std::size_t j = work.nxt(k);
      if (work.w[k] || chordal(work.v[k], work.v[j]) >= kChordalTol) continue;
      if (work.v.size() <= 2) {
        throw DegenerateCurve("normalize: the curve collapses to a point");
      }
      if (j != 0) {
        work.v[k] = prefer_omitted(work.v[k], work.v[j]);
        work.v.erase(work.v.begin() + static_cast<std::ptrdiff_t>(j));
        work.w.erase(work.w.begin() + static_cast<std::ptrdiff_t>(k));
      } else {  // closed wrap: drop the final vertex instead, keep vertex 0
        work.v[0] = prefer_omitted(work.v[k], work.v[0]);
        work.v.pop_back();
        work.w.pop_back();
      }
      changed = true;
      break;
    }
  }
}

/// Step 2: back-tracking (turn of +-pi) is a fold; only legitimate over an
/// omitted point.
void reject_backtracking(const Work& work) {
  const std::size_t n = work.v.size();
  if (n < 2) return;
  const std::size_t lo = work.closed ? 0 : 1;
  const std::size_t hi = work.closed ? n : n - 1;
  for (std::size_t i = lo; i < hi; ++i) {
    const std::size_t in = work.closed ? (i + n - 1) % n : i - 1;
    const double turn =
        turn_between(work.arc(in), work.arc(i), work.v[i].embedding());
    if (kPi - std::abs(turn) < kStraightTol && !is_omitted(work.v[i])) {
      throw DegenerateCurve(
          "normalize: back-tracking vertex outside the omitted points");
    }
  }
}

/// Step 3: omitted points interior to an edge become vertices.
void insert_omitted_vertices(Work& work) {
  Work next;
  next.closed = work.closed;
  const std::size_t ne = work.nedges();
  for (std::size_t k = 0; k < work.v.size(); ++k) {
    next.v.push_back(work.v[k]);
    if (k >= ne) {  // open polygon: the final vertex starts no edge
      next.w.emplace_back();
      continue;
    }
    const GeodesicArc arc = work.arc(k);
    std::vector<std::pair<double, ExtPoint>> hits;  // (angle along arc, point)
    for (const ExtPoint& e : omitted_points()) {
      const Vec3 p = e.embedding();
      if (std::abs(dot(p, arc.axis())) > 1e-12) continue;
      double t = std::atan2(dot(cross(arc.start(), p), arc.axis()),
                            dot(arc.start(), p));
      if (t < 0.0) t += 2.0 * kPi;
      if (t > 1e-9 && t < arc.length() - 1e-9) hits.emplace_back(t, e);
    }
    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    if (hits.empty()) {  // unsplit edge: keep the caller's witness
      next.w.push_back(work.w[k]);
      continue;
    }
    // Witness at the quarter point: interior to any piece, and never the
    // antipode of the piece start even for a full-circle piece.
    const auto piece_witness = [&arc](double t0,
                                      double t1) -> std::optional<ExtPoint> {
      if (t1 - t0 < kLongEdge) return std::nullopt;
      return stereo_invert(
          arc.point_at((t0 + 0.25 * (t1 - t0)) / arc.length()));
    };
    double prev = 0.0;
    for (const auto& [t, e] : hits) {
      next.w.emplace_back(piece_witness(prev, t));
      next.v.push_back(e);
      prev = t;
    }
    next.w.emplace_back(piece_witness(prev, arc.length()));
  }
  work = std::move(next);
}

/// Step 4: merge straight vertices outside the omitted points. A closed
/// all-straight polygon ends as the single-vertex full-circle normal form.
void merge_straight_vertices(Work& work) {
  bool changed = true;
  while (changed) {
    changed = false;
    const std::size_t n = work.v.size();
    if (n < 2) break;
    const std::size_t lo = work.closed ? 0 : 1;
    const std::size_t hi = work.closed ? n : n - 1;
    for (std::size_t i = lo; i < hi; ++i) {
      if (is_omitted(work.v[i])) continue;
      const std::size_t in = work.closed ? (i + n - 1) % n : i - 1;
      const GeodesicArc a1 = work.arc(in);
      const GeodesicArc a2 = work.arc(i);
      if (std::abs(turn_between(a1, a2, work.v[i].embedding())) > kStraightTol) {
        continue;
      }
      const double total = a1.length() + a2.length();
      if (total > 2.0 * kPi + 1e-12) continue;  // would wrap past a full turn
      if (total >= kLongEdge) {
        // The merged edge needs a witness. The removed vertex would be
        // antipodal to the start when a1 is a half circle, so take the
        // quarter point of the merged arc instead.
        const GeodesicArc merged = GeodesicArc(a1.start(), a1.axis(), total);
        work.w[in] = stereo_invert(merged.point_at(0.25));
      } else {
        work.w[in] = std::nullopt;
      }
      work.v.erase(work.v.begin() + static_cast<std::ptrdiff_t>(i));
      work.w.erase(work.w.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      break;
    }
  }
}

}  // namespace

GeodesicPolygon normalize(const GeodesicPolygon& poly) {
  const std::size_t n = poly.vertices.size();
  if (n == 0) throw DegenerateCurve("normalize: empty polygon");
  if (!poly.closed && n == 1) {
    throw DegenerateCurve("normalize: open polyline with no edges");
  }
  for (const auto& [i, p] : poly.witnesses) {
    (void)p;
    if (i >= poly.edge_count()) {
      throw DomainError("normalize: witness index out of range");
    }
  }

  Work work;
  work.closed = poly.closed;
  work.v.reserve(n);
  for (const ExtPoint& p : poly.vertices) work.v.push_back(snap_omitted(p));
  work.w.assign(n, std::nullopt);
  for (const auto& [i, p] : poly.witnesses) work.w[i] = p;

  drop_zero_edges(work);
  reject_backtracking(work);
  insert_omitted_vertices(work);
  merge_straight_vertices(work);

  GeodesicPolygon out;
  out.closed = work.closed;
  out.vertices = work.v;
  for (std::size_t k = 0; k < work.nedges(); ++k) {
    if (work.w[k]) {
      out.witnesses[k] = *work.w[k];
    } else if (GeodesicArc::shortest(work.v[k], work.v[work.nxt(k)]).length() >=
               kLongEdge) {
      // Guarantee the output contract: long edges always carry a witness
      // (quarter point: interior, and never antipodal to the edge start).
      out.witnesses[k] = stereo_invert(work.arc(k).point_at(0.25));
    }
  }
  return out;
}

NaturalPartition natural_partition(const GeodesicPolygon& poly) {
  NaturalPartition out;
  out.normalized = normalize(poly);
  const GeodesicPolygon& np = out.normalized;
  const std::size_t n = np.vertices.size();

  for (std::size_t i = 0; i < n; ++i) {
    bool natural = false;
    if (!np.closed && (i == 0 || i + 1 == n)) {
      natural = true;  // endpoints of an open curve
    } else if (np.closed && n == 1) {
      natural = false;  // full-circle normal form
    } else {
      natural = is_omitted(np.vertices[i]) ||
                std::abs(turn_angle(np, i)) > kStraightTol;
    }
    if (natural) out.natural_vertices.push_back(i);
  }

  if (out.natural_vertices.empty()) {  // full great circle: one closed piece
    out.pieces.push_back(np);
    return out;
  }

  const auto& ks = out.natural_vertices;
  const std::size_t pieces = np.closed ? ks.size() : ks.size() - 1;
  for (std::size_t p = 0; p < pieces; ++p) {
    const std::size_t from = ks[p];
    const std::size_t to = ks[(p + 1) % ks.size()];
    GeodesicPolygon piece;
    piece.closed = false;
    std::size_t i = from;
    std::size_t local = 0;
    do {
      piece.vertices.push_back(np.vertices[i]);
      const auto it = np.witnesses.find(i);
      if (it != np.witnesses.end()) piece.witnesses[local] = it->second;
      i = np.closed ? (i + 1) % n : i + 1;
      ++local;
    } while (i != to);
    piece.vertices.push_back(np.vertices[to]);
    out.pieces.push_back(std::move(piece));
  }
  return out;
}

VertexConvexity is_convex_at(const GeodesicPolygon& poly, std::size_t i) {
  const std::size_t n = poly.vertices.size();
  const std::size_t ne = poly.edge_count();
  if (i >= n) throw DomainError("is_convex_at: vertex index out of range");
  if (!poly.closed && (i == 0 || i + 1 == n)) {
    throw DomainError("is_convex_at: undefined at the ends of an open polyline");
  }
  const std::size_t edges[2] = {poly.closed ? (i + ne - 1) % ne : i - 1, i};
  for (const std::size_t k : edges) {
    if (poly.witnesses.count(k)) continue;
    const std::size_t nn = poly.vertices.size();
    const Vec3 a = poly.vertices[k].embedding();
    const Vec3 b = poly.vertices[poly.closed ? (k + 1) % nn : k + 1].embedding();
    if ((a + b).norm() < kChordalTol) {
      throw AntipodalNeighbors(
          "is_convex_at: adjacent edge joins antipodal points without a witness");
    }
  }
  VertexConvexity out;
  out.turn = turn_angle(poly, i);
  out.convex = out.turn >= -kStraightTol;
  return out;
}

ConvexityReport is_locally_convex_in(
    const GeodesicPolygon& poly,
    const std::function<bool(const ExtPoint&)>& region) {
  if (!region) throw DomainError("is_locally_convex_in: empty region predicate");
  ConvexityReport rep;
  const std::size_t n = poly.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!poly.closed && (i == 0 || i + 1 == n)) continue;
    if (!region(poly.vertices[i])) continue;
    rep.checked.push_back(i);
    if (!is_convex_at(poly, i).convex) rep.violations.push_back(i);
  }
  rep.convex = rep.violations.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// cut_against_ray
// ---------------------------------------------------------------------------

namespace {

constexpr double kPlaneTol = 1e-11;  // |y| below this is "in the ray plane"

struct SubArc {
  GeodesicArc arc;
  ExtPoint a, b;        // endpoints in the chart
  bool in_plane = false;
  bool on = false;      // in the plane and on the nonnegative ray
  int side_start = 0;   // sign of y shortly after the start (0: in plane)
  int side_end = 0;     // sign of y shortly before the end
};

int probe_side(const GeodesicArc& arc, bool from_start) {
  for (const double s : {1e-4, 1e-3, 1e-2, 0.05, 0.25, 0.5}) {
    const double y = arc.point_at(from_start ? s : 1.0 - s).y;
    if (std::abs(y) > kPlaneTol) return y > 0.0 ? 1 : -1;
  }
  return 0;
}

SubArc classify_sub_arc(const GeodesicArc& arc, const ExtPoint& a,
                        const ExtPoint& b) {
  SubArc sub{arc, a, b, false, false, 0, 0};
  bool in_plane = true;
  for (const double s : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    if (std::abs(arc.point_at(s).y) > kPlaneTol) {
      in_plane = false;
      break;
    }
  }
  sub.in_plane = in_plane;
  if (in_plane) {
    sub.on = arc.point_at(0.5).x >= -kChordalTol;
  } else {
    sub.side_start = probe_side(arc, true);
    sub.side_end = probe_side(arc, false);
  }
  return sub;
}

bool point_on_ray(const Vec3& p) {
  return std::abs(p.y) <= kPlaneTol && p.x >= -kChordalTol;
}

GeodesicPolygon piece_polygon(const std::vector<SubArc>& subs, std::size_t from,
                              std::size_t count) {
  GeodesicPolygon path;
  path.closed = false;
  const std::size_t m = subs.size();
  for (std::size_t k = 0; k < count; ++k) {
    const SubArc& s = subs[(from + k) % m];
    path.vertices.push_back(s.a);
    if (s.arc.length() >= kLongEdge) {
      path.witnesses[k] = stereo_invert(s.arc.point_at(0.25));
    }
  }
  path.vertices.push_back(subs[(from + count - 1) % m].b);
  return path;
}

}  // namespace

RayCut cut_against_ray(const GeodesicPolygon& poly) {
  const GeodesicPolygon norm = normalize(poly);
  const Vec3 ey{0.0, 1.0, 0.0};
  const std::size_t ne = norm.edge_count();
  const std::size_t n = norm.vertices.size();

  std::vector<SubArc> subs;
  for (std::size_t i = 0; i < ne; ++i) {
    const GeodesicArc arc = norm.edge(i);
    const ExtPoint& pa = norm.vertices[i];
    const ExtPoint& pb = norm.vertices[norm.closed ? (i + 1) % n : i + 1];
    std::vector<double> cuts;
    const Vec3 c0 = cross(arc.axis(), ey);
    if (c0.norm() >= 1e-12) {  // the edge circle is not the ray plane circle
      const Vec3 c = c0.normalized();
      for (const Vec3& cand : {c, -c}) {
        if (cand.x < -kChordalTol) continue;  // meets the plane off the ray
        double t = std::atan2(dot(cross(arc.start(), cand), arc.axis()),
                              dot(arc.start(), cand));
        if (t < 0.0) t += 2.0 * kPi;
        if (t > 1e-9 && t < arc.length() - 1e-9) {
          if (std::abs(cand.x) < kChordalTol) {
            throw NonTransversal(
                "cut_against_ray: the curve crosses the ray at 0 or inf");
          }
          cuts.push_back(t);
        }
      }
      std::sort(cuts.begin(), cuts.end());
    }
    double prev = 0.0;
    ExtPoint prev_pt = pa;
    for (const double t : cuts) {
      const GeodesicArc piece(arc.point_at(prev / arc.length()), arc.axis(),
                              t - prev);
      const ExtPoint cut_pt = stereo_invert(arc.point_at(t / arc.length()));
      subs.push_back(classify_sub_arc(piece, prev_pt, cut_pt));
      prev = t;
      prev_pt = cut_pt;
    }
    const GeodesicArc tail(arc.point_at(prev / arc.length()), arc.axis(),
                           arc.length() - prev);
    subs.push_back(classify_sub_arc(tail, prev_pt, pb));
  }

  const std::size_t m = subs.size();
  RayCut out;

  // Classify the junction before each sub-arc (unrotated index space).
  std::vector<std::optional<RayEvent::Kind>> junction(m);
  const std::size_t first_junction = norm.closed ? 0 : 1;
  for (std::size_t j = first_junction; j < m; ++j) {
    const SubArc& next = subs[j];
    const SubArc& prev = subs[(j + m - 1) % m];
    if (prev.on && next.on) continue;
    if (prev.on != next.on) {
      junction[j] = prev.on ? RayEvent::Kind::kOverlapEnd
                            : RayEvent::Kind::kOverlapStart;
      continue;
    }
    const Vec3 v = next.arc.start();
    if (!point_on_ray(v)) continue;
    const int sp = prev.in_plane ? 0 : prev.side_end;
    const int sn = next.in_plane ? 0 : next.side_start;
    if (sp * sn < 0) {
      if (std::abs(v.x) < kChordalTol) {
        throw NonTransversal(
            "cut_against_ray: the curve crosses the ray at 0 or inf");
      }
      junction[j] = RayEvent::Kind::kCrossing;
    } else {
      junction[j] = RayEvent::Kind::kTouch;
    }
  }

  // A piece boundary sits wherever the on/off flag changes or the curve
  // crosses the ray transversally; touches do not split.
  const auto splits = [&](std::size_t j) {
    return subs[j].on != subs[(j + m - 1) % m].on ||
           junction[j] == RayEvent::Kind::kCrossing;
  };

  // Rotate a closed curve so that index 0 starts a piece.
  std::size_t start = 0;
  bool single_piece = true;
  if (norm.closed) {
    for (std::size_t j = 0; j < m; ++j) {
      if (splits(j)) {
        start = j;
        single_piece = false;
        break;
      }
    }
  } else {
    for (std::size_t j = 1; j < m; ++j) {
      if (splits(j)) single_piece = false;
    }
  }

  // Events at the junction before each sub-arc, in traversal order.
  for (std::size_t k = first_junction; k < m; ++k) {
    const std::size_t j = (start + k) % m;
    if (!junction[j]) continue;
    RayEvent ev;
    ev.kind = *junction[j];
    ev.point = subs[j].a;
    out.events.push_back(ev);
  }

  // Pieces: maximal runs uninterrupted by a piece boundary.
  if (single_piece && norm.closed) {
    RayPiece piece;
    piece.path = norm;
    piece.on_ray = subs[0].on;
    for (const SubArc& s : subs) piece.length += s.arc.length();
    out.pieces.push_back(std::move(piece));
  } else {
    std::size_t k = 0;
    while (k < m) {
      const bool flag = subs[(start + k) % m].on;
      std::size_t count = 1;
      while (k + count < m && !splits((start + k + count) % m)) ++count;
      RayPiece piece;
      piece.on_ray = flag;
      piece.path = piece_polygon(subs, start + k, count);
      for (std::size_t j = 0; j < count; ++j) {
        piece.length += subs[(start + k + j) % m].arc.length();
      }
      out.pieces.push_back(std::move(piece));
      k += count;
    }
  }

  for (const RayPiece& p : out.pieces) {
    (p.on_ray ? out.on_ray_length : out.off_ray_length) += p.length;
  }
  return out;
}

// ---------------------------------------------------------------------------
// approximation and sampling
// ---------------------------------------------------------------------------

GeodesicPolygon approximate(const ParamCurve& curve, double max_chord_angle,
                            bool closed) {
  if (!(max_chord_angle > 0.0)) {
    throw DomainError("approximate: max_chord_angle must be positive");
  }
  if (!curve.point) throw DomainError("approximate: curve has no point function");

  std::vector<double> seeds;
  for (int k = 0; k <= 16; ++k) seeds.push_back(k / 16.0);
  for (const double b : curve.breakpoints) {
    if (b > 0.0 && b < 1.0) seeds.push_back(b);
  }
  std::sort(seeds.begin(), seeds.end());
  seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());

  std::vector<double> params;
  const std::function<void(double, double)> refine = [&](double a, double b) {
    if (b - a < 1e-9) {
      params.push_back(a);
      return;
    }
    const double mid = 0.5 * (a + b);
    const Vec3 pa = curve.point(a), pm = curve.point(mid), pb = curve.point(b);
    const double dab = angle_between(pa, pb);
    const double dsum = angle_between(pa, pm) + angle_between(pm, pb);
    if (dab <= max_chord_angle && dsum <= 1.25 * max_chord_angle) {
      params.push_back(a);
      return;
    }
    refine(a, mid);
    refine(mid, b);
  };
  for (std::size_t i = 0; i + 1 < seeds.size(); ++i) {
    refine(seeds[i], seeds[i + 1]);
  }
  params.push_back(1.0);

  GeodesicPolygon poly;
  poly.closed = closed;
  for (const double t : params) {
    poly.vertices.push_back(stereo_invert(curve.point(t)));
  }
  if (closed && poly.vertices.size() > 1 &&
      chordal(poly.vertices.front(), poly.vertices.back()) < 1e-9) {
    poly.vertices.pop_back();
  }
  return poly;
}

std::vector<Vec3> sample_edge_points(const GeodesicPolygon& poly,
                                     double spacing) {
  if (!(spacing > 0.0)) {
    throw DomainError("sample_edge_points: spacing must be positive");
  }
  std::vector<Vec3> pts;
  const std::size_t ne = poly.edge_count();
  if (ne == 0) {
    for (const ExtPoint& v : poly.vertices) pts.push_back(v.embedding());
    return pts;
  }
  for (std::size_t i = 0; i < ne; ++i) {
    const GeodesicArc arc = poly.edge(i);
    const auto steps =
        static_cast<std::size_t>(std::max(1.0, std::ceil(arc.length() / spacing)));
    for (std::size_t j = 0; j <= steps; ++j) {
      pts.push_back(arc.point_at(static_cast<double>(j) / static_cast<double>(steps)));
    }
  }
  return pts;
}

GeodesicPolygon random_closed_polygon(Rng& rng, double max_total_length,
                                      std::size_t min_vertices,
                                      std::size_t max_vertices) {
  if (!(max_total_length > 0.0) || min_vertices < 3 ||
      max_vertices < min_vertices) {
    throw DomainError("random_closed_polygon: invalid parameters");
  }
  for (int attempt = 0; attempt < 256; ++attempt) {
    const std::size_t nv =
        min_vertices + rng.index(max_vertices - min_vertices + 1);
    std::vector<Vec3> pts;
    pts.reserve(nv);
    for (std::size_t i = 0; i < nv; ++i) pts.push_back(rng.unit_vector());

    Vec3 mean{0.0, 0.0, 0.0};
    bool ok = true;
    for (std::size_t i = 0; i < nv; ++i) {
      const Vec3& a = pts[i];
      const Vec3& b = pts[(i + 1) % nv];
      if ((a - b).norm() < 1e-6 || (a + b).norm() < 1e-6) ok = false;
      mean = mean + a;
    }
    if (!ok || mean.norm() < 1e-9) continue;
    const Vec3 c = mean.normalized();
    for (const Vec3& p : pts) {
      if (angle_between(c, p) > kPi - 1e-3) ok = false;
    }
    if (!ok) continue;

    const auto poly_at = [&](double s) {
      GeodesicPolygon poly;
      poly.closed = true;
      for (const Vec3& p : pts) {
        const double theta = angle_between(c, p);
        Vec3 v = c;
        if (theta > 1e-12) {
          v = (c * std::sin((1.0 - s) * theta) + p * std::sin(s * theta)) *
              (1.0 / std::sin(theta));
        }
        poly.vertices.push_back(stereo_invert(v));
      }
      return poly;
    };

    const auto valid = [&](const GeodesicPolygon& poly) {
      for (std::size_t i = 0; i < nv; ++i) {
        const Vec3 a = poly.vertices[i].embedding();
        const Vec3 b = poly.vertices[(i + 1) % nv].embedding();
        if ((a - b).norm() < 1e-9 || (a + b).norm() < 1e-9) return false;
      }
      return true;
    };

    GeodesicPolygon full = poly_at(1.0);
    if (full.length() <= max_total_length) return full;

    double lo = 0.0, hi = 1.0;
    for (int iter = 0; iter < 60; ++iter) {
      const double mid = 0.5 * (lo + hi);
      const GeodesicPolygon trial = poly_at(mid);
      if (valid(trial) && trial.length() <= max_total_length) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    if (lo == 0.0) continue;
    GeodesicPolygon out = poly_at(lo);
    if (valid(out) && out.length() <= max_total_length) return out;
  }
  throw DegenerateInput(
      "random_closed_polygon: failed to draw a polygon within the budget");
}

}  // namespace sphereratio
