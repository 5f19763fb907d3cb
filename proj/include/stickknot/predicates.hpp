#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "stickknot/vec3.hpp"

// Exact-decision predicates on points, segments and triangles in 3-space.
//
// Two arithmetic modes share one implementation: S = Rational decides every
// sign exactly; S = double applies the epsilon policy below and reports a
// degenerate flag instead of guessing a sign. Callers must treat a degenerate
// outcome as "resample or escalate to exact mode", never as a sign.
//
// Float epsilon policy: a predicate value of polynomial degree d computed from
// inputs of magnitude <= M is declared degenerate when |v| <= 1e-12 * M^d.

namespace stickknot {

inline constexpr double kEpsCoeff = 1e-12;

struct PredicateOutcome {
  int sign = 0;
  bool degenerate = false;
};

namespace detail {

inline double mag3(const Vec3d& a) { return magnitude_bound(a); }

template <class S, class... Vs>
double max_magnitude(const Vec3<S>& v, const Vs&... rest) {
  if constexpr (sizeof...(rest) == 0)
    return magnitude_bound(v);
  else
    return std::max(magnitude_bound(v), max_magnitude(rest...));
}

inline double pow_int(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

template <class S>
PredicateOutcome sign_with_policy(const S& value, double magnitude, int degree) {
  if constexpr (std::is_same_v<S, double>) {
    const double threshold = kEpsCoeff * pow_int(magnitude, degree);
    if (std::abs(value) <= threshold) return {0, true};
    return {value > 0.0 ? 1 : -1, false};
  } else {
    (void)magnitude;
    (void)degree;
    return {sign_of(value), false};
  }
}

}  // namespace detail

// Sign of det[q-p, r-p, s-p]: positive when s lies on the side of plane(p,q,r)
// pointed to by cross(q-p, r-p). Zero iff the four points are coplanar.
template <class S>
PredicateOutcome orient3d(const Vec3<S>& p, const Vec3<S>& q, const Vec3<S>& r, const Vec3<S>& s) {
  const Vec3<S> a = q - p, b = r - p, c = s - p;
  const S det = a.x * (b.y * c.z - b.z * c.y) - a.y * (b.x * c.z - b.z * c.x) +
                a.z * (b.x * c.y - b.y * c.x);
  double mag = 0.0;
  if constexpr (std::is_same_v<S, double>) mag = detail::max_magnitude(p, q, r, s);
  return detail::sign_with_policy(det, mag, 3);
}

// True collinearity of three points (all components of the cross product zero).
template <class S>
PredicateOutcome collinear(const Vec3<S>& p, const Vec3<S>& q, const Vec3<S>& r) {
  const Vec3<S> c = cross(q - p, r - p);
  if constexpr (std::is_same_v<S, double>) {
    const double mag = detail::max_magnitude(p, q, r);
    const double threshold = kEpsCoeff * detail::pow_int(mag, 2);
    const double worst = magnitude_bound(c);
    if (worst <= threshold) return {0, true};
    return {1, false};  // sign carries no meaning here, only zero vs nonzero
  } else {
    const bool zero = c.x == 0 && c.y == 0 && c.z == 0;
    return {zero ? 0 : 1, false};
  }
}

// ---------------------------------------------------------------------------
// segment / triangle piercing

enum class PierceKind { NoIntersection, Pierce, Degenerate };

struct PierceResult {
  PierceKind kind = PierceKind::NoIntersection;
  int sign = 0;  // valid when kind == Pierce: +1 along cross(b-a, c-a)
  const char* reason = "";
};

// Transversal crossing of the open segment through the open triangle interior.
// Endpoint contacts, coplanarity and boundary hits are Degenerate, never a
// silent classification. Pierce sign follows the triangle's orientation.
template <class S>
PierceResult segment_triangle_pierce(const Segment<S>& seg, const Triangle<S>& tri) {
  if (collinear(tri.a, tri.b, tri.c).sign == 0)
    throw std::invalid_argument("segment_triangle_pierce: degenerate triangle");

  const PredicateOutcome sp = orient3d(tri.a, tri.b, tri.c, seg.p);
  const PredicateOutcome sq = orient3d(tri.a, tri.b, tri.c, seg.q);
  if (sp.degenerate || sq.degenerate)
    return {PierceKind::Degenerate, 0, "segment endpoint within epsilon of triangle plane"};
  if (sp.sign == 0 || sq.sign == 0) {
    if (sp.sign == 0 && sq.sign == 0)
      return {PierceKind::Degenerate, 0, "segment coplanar with triangle"};
    return {PierceKind::Degenerate, 0, "segment endpoint on triangle plane"};
  }
  if (sp.sign == sq.sign) return {PierceKind::NoIntersection, 0, ""};

  const PredicateOutcome t1 = orient3d(seg.p, seg.q, tri.a, tri.b);
  const PredicateOutcome t2 = orient3d(seg.p, seg.q, tri.b, tri.c);
  const PredicateOutcome t3 = orient3d(seg.p, seg.q, tri.c, tri.a);
  if (t1.degenerate || t2.degenerate || t3.degenerate)
    return {PierceKind::Degenerate, 0, "crossing within epsilon of triangle boundary"};
  if (t1.sign == 0 || t2.sign == 0 || t3.sign == 0)
    return {PierceKind::Degenerate, 0, "crossing hits triangle boundary"};
  if (t1.sign == t2.sign && t2.sign == t3.sign)
    return {PierceKind::Pierce, sq.sign, ""};
  return {PierceKind::NoIntersection, 0, ""};
}

// ---------------------------------------------------------------------------
// point / tetrahedron

enum class TetraSide { Inside, Outside, OnBoundary };

template <class S>
TetraSide point_in_tetrahedron(const Vec3<S>& p, const std::array<Vec3<S>, 4>& t) {
  const PredicateOutcome base = orient3d(t[0], t[1], t[2], t[3]);
  if (base.sign == 0 || base.degenerate)
    throw std::invalid_argument("point_in_tetrahedron: degenerate tetrahedron");
  // Replace each vertex by p in turn; Inside iff every sign matches the
  // tetrahedron's own orientation.
  const std::array<PredicateOutcome, 4> d = {
      orient3d(p, t[1], t[2], t[3]), orient3d(t[0], p, t[2], t[3]),
      orient3d(t[0], t[1], p, t[3]), orient3d(t[0], t[1], t[2], p)};
  bool boundary = false;
  for (const auto& o : d) {
    if (o.degenerate || o.sign == 0) {
      boundary = true;
      continue;
    }
    if (o.sign != base.sign) return TetraSide::Outside;
  }
  return boundary ? TetraSide::OnBoundary : TetraSide::Inside;
}

// ---------------------------------------------------------------------------
// general position

enum class GPViolationKind { Coincident, Collinear, Coplanar };

struct GPResult {
  bool ok = true;
  GPViolationKind kind = GPViolationKind::Coincident;
  std::vector<std::size_t> witness;  // offending indices, lexicographically first
};

template <class S>
GPResult general_position_check(std::span<const Vec3<S>> points) {
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (points[i] == points[j]) return {false, GPViolationKind::Coincident, {i, j}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (collinear(points[i], points[j], points[k]).sign == 0)
          return {false, GPViolationKind::Collinear, {i, j, k}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        for (std::size_t l = k + 1; l < n; ++l) {
          const PredicateOutcome o = orient3d(points[i], points[j], points[k], points[l]);
          if (o.sign == 0 || o.degenerate)
            return {false, GPViolationKind::Coplanar, {i, j, k, l}};
        }
  return {};
}

template <class S>
GPResult general_position_check(const std::vector<Vec3<S>>& points) {
  return general_position_check(std::span<const Vec3<S>>(points.data(), points.size()));
}

// ---------------------------------------------------------------------------
// bend-region test (reducibility support)
//
// The region tested is the closed triangle (u, bend, w) minus the two closed
// defining sticks [u,bend] and [bend,w]; that is, the open interior plus the
// open spanning edge (u,w). A bend is straightenable only when no other stick
// meets this region. Contacts confined to the defining sticks are Disjoint.

enum class RegionMeet { Disjoint, Meets, Degenerate };

namespace detail {

template <class S>
using P2 = std::array<S, 2>;

template <class S>
S orient2d_val(const P2<S>& a, const P2<S>& b, const P2<S>& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// Exact: is x on the closed 2D segment [a,b]? (assumes exact arithmetic)
template <class S>
bool on_segment_2d(const P2<S>& x, const P2<S>& a, const P2<S>& b) {
  if (orient2d_val(a, b, x) != 0) return false;
  const S d = (x[0] - a[0]) * (b[0] - a[0]) + (x[1] - a[1]) * (b[1] - a[1]);
  const S len2 = (b[0] - a[0]) * (b[0] - a[0]) + (b[1] - a[1]) * (b[1] - a[1]);
  return d >= 0 && d <= len2;
}

// Drop the coordinate axis along which the triangle normal is largest /
// nonzero, preserving a faithful 2D picture of the triangle's plane.
template <class S>
int drop_axis_for(const Vec3<S>& n) {
  if constexpr (std::is_same_v<S, double>) {
    const double ax = std::abs(n.x), ay = std::abs(n.y), az = std::abs(n.z);
    if (ax >= ay && ax >= az) return 0;
    return ay >= az ? 1 : 2;
  } else {
    if (n.x != 0) return 0;
    if (n.y != 0) return 1;
    return 2;
  }
}

template <class S>
P2<S> project2(const Vec3<S>& v, int drop) {
  switch (drop) {
    case 0: return {v.y, v.z};
    case 1: return {v.x, v.z};
    default: return {v.x, v.y};
  }
}

// Exact point-in-region test for a point already known to lie on the
// triangle's plane. Region semantics as documented above.
template <class S>
bool point_in_bend_region_2d(const P2<S>& p, const P2<S>& u, const P2<S>& b, const P2<S>& w) {
  const S s = orient2d_val(u, b, w);
  const int ss = sign_of(s);
  const int o1 = sign_of(orient2d_val(u, b, p));  // defining edge u-b
  const int o2 = sign_of(orient2d_val(b, w, p));  // defining edge b-w
  const int o3 = sign_of(orient2d_val(w, u, p));  // spanning edge w-u
  if (o1 == ss && o2 == ss && o3 == ss) return true;     // strict interior
  if (o3 == 0 && o1 == ss && o2 == ss) return true;      // open spanning edge
  return false;
}

// Exact coplanar segment-vs-region intersection via interval clipping.
template <class S>
RegionMeet coplanar_segment_region(const Vec3<S>& p3, const Vec3<S>& q3, const Vec3<S>& u3,
                                   const Vec3<S>& b3, const Vec3<S>& w3) {
  static_assert(!std::is_same_v<S, double>, "exact mode only");
  const int drop = drop_axis_for(cross(b3 - u3, w3 - u3));
  const P2<S> p = project2(p3, drop), q = project2(q3, drop);
  const P2<S> u = project2(u3, drop), b = project2(b3, drop), w = project2(w3, drop);

  // Clip parameter interval of p + t (q - p), t in [0,1], against the three
  // half-planes whose intersection is the closed triangle.
  const int ss = sign_of(orient2d_val(u, b, w));
  S lo = 0, hi = 1;
  const std::array<std::pair<P2<S>, P2<S>>, 3> edges = {{{u, b}, {b, w}, {w, u}}};
  for (const auto& [e0, e1] : edges) {
    // signed value of the point p + t (q - p) against edge line, normalized so
    // that the triangle interior is positive
    const S vp = orient2d_val(e0, e1, p) * ss;
    const S vq = orient2d_val(e0, e1, q) * ss;
    const S dv = vq - vp;  // value is vp + t * dv
    if (dv == 0) {
      if (vp < 0) return RegionMeet::Disjoint;  // entirely outside this half-plane
      continue;
    }
    const S t_at_zero = -vp / dv;
    if (dv > 0) {
      if (t_at_zero > lo) lo = t_at_zero;
    } else {
      if (t_at_zero < hi) hi = t_at_zero;
    }
    if (lo > hi) return RegionMeet::Disjoint;
  }
  const P2<S> d{q[0] - p[0], q[1] - p[1]};
  const P2<S> x0{p[0] + lo * d[0], p[1] + lo * d[1]};
  const P2<S> x1{p[0] + hi * d[0], p[1] + hi * d[1]};
  // The clipped piece avoids the region only if it lies inside one closed
  // defining edge (two distinct defining edges can only share the bend point).
  const bool in_ub = on_segment_2d(x0, u, b) && on_segment_2d(x1, u, b);
  const bool in_bw = on_segment_2d(x0, b, w) && on_segment_2d(x1, b, w);
  return (in_ub || in_bw) ? RegionMeet::Disjoint : RegionMeet::Meets;
}

}  // namespace detail

template <class S>
RegionMeet segment_meets_bend_region(const Segment<S>& seg, const Vec3<S>& u, const Vec3<S>& bend,
                                     const Vec3<S>& w) {
  const Vec3<S>&p = seg.p, &q = seg.q;
  const bool shared_p = (p == u || p == bend || p == w);
  const bool shared_q = (q == u || q == bend || q == w);
  if (shared_p && shared_q) {
    // Spanning chord u-w meets the region; a segment lying inside one
    // defining stick does not.
    if ((p == u && q == w) || (p == w && q == u)) return RegionMeet::Meets;
    return RegionMeet::Disjoint;
  }

  const PredicateOutcome sp = orient3d(u, bend, w, p);
  const PredicateOutcome sq = orient3d(u, bend, w, q);
  if ((sp.degenerate && !shared_p) || (sq.degenerate && !shared_q)) return RegionMeet::Degenerate;
  const int a = shared_p ? 0 : sp.sign;
  const int b = shared_q ? 0 : sq.sign;

  if (a == 0 && b == 0) {
    if constexpr (std::is_same_v<S, double>) {
      return RegionMeet::Degenerate;  // coplanar contact unresolvable in float mode
    } else {
      return detail::coplanar_segment_region(p, q, u, bend, w);
    }
  }
  if (a == 0 || b == 0) {
    // single point of contact with the plane
    const bool contact_shared = (a == 0) ? shared_p : shared_q;
    if (contact_shared) return RegionMeet::Disjoint;  // corner touch on defining sticks
    if constexpr (std::is_same_v<S, double>) {
      return RegionMeet::Degenerate;
    } else {
      const Vec3<S>& contact = (a == 0) ? p : q;
      const int drop = detail::drop_axis_for(cross(bend - u, w - u));
      const bool in = detail::point_in_bend_region_2d(
          detail::project2(contact, drop), detail::project2(u, drop),
          detail::project2(bend, drop), detail::project2(w, drop));
      return in ? RegionMeet::Meets : RegionMeet::Disjoint;
    }
  }
  if (a == b) return RegionMeet::Disjoint;

  // transversal plane crossing: locate it against the three edges
  const PredicateOutcome t1 = orient3d(p, q, u, bend);
  const PredicateOutcome t2 = orient3d(p, q, bend, w);
  const PredicateOutcome t3 = orient3d(p, q, w, u);
  if (t1.degenerate || t2.degenerate || t3.degenerate) return RegionMeet::Degenerate;
  int pos = 0, neg = 0, zero = 0;
  for (int s : {t1.sign, t2.sign, t3.sign}) {
    if (s > 0) ++pos;
    else if (s < 0) ++neg;
    else ++zero;
  }
  if (pos > 0 && neg > 0) return RegionMeet::Disjoint;  // crossing outside the triangle
  if (zero == 0) return RegionMeet::Meets;              // open interior
  if (zero == 1) return t3.sign == 0 ? RegionMeet::Meets : RegionMeet::Disjoint;
  return RegionMeet::Disjoint;  // crossing at a triangle vertex
}

// ---------------------------------------------------------------------------
// segment / segment intersection (validity checking)

enum class SegSegResult { Disjoint, Intersect, Degenerate };

namespace detail {

// closed 2D segment intersection, exact arithmetic
template <class S>
bool segments_intersect_2d(const P2<S>& a, const P2<S>& b, const P2<S>& c, const P2<S>& d) {
  const int d1 = sign_of(orient2d_val(c, d, a));
  const int d2 = sign_of(orient2d_val(c, d, b));
  const int d3 = sign_of(orient2d_val(a, b, c));
  const int d4 = sign_of(orient2d_val(a, b, d));
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  if (d1 == 0 && on_segment_2d(a, c, d)) return true;
  if (d2 == 0 && on_segment_2d(b, c, d)) return true;
  if (d3 == 0 && on_segment_2d(c, a, b)) return true;
  if (d4 == 0 && on_segment_2d(d, a, b)) return true;
  return false;
}

inline double point_segment_distance(const Vec3d& x, const Vec3d& a, const Vec3d& b) {
  const Vec3d ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0 ? dot(x - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  const Vec3d c = a + t * ab;
  const Vec3d dlt = x - c;
  return std::sqrt(dot(dlt, dlt));
}

// closest distance between closed 3D segments (double)
inline double segment_segment_distance(const Vec3d& p1, const Vec3d& q1, const Vec3d& p2,
                                        const Vec3d& q2) {
  const Vec3d d1 = q1 - p1, d2 = q2 - p2, r = p1 - p2;
  const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
  double s = 0.0, t = 0.0;
  if (a <= 0.0 && e <= 0.0) {
    const Vec3d dlt = p1 - p2;
    return std::sqrt(dot(dlt, dlt));
  }
  if (a <= 0.0) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = dot(d1, r);
    if (e <= 0.0) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = dot(d1, d2);
      const double denom = a * e - b * b;
      if (denom > 0.0) s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1.0) {
        t = 1.0;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  const Vec3d c1 = p1 + s * d1, c2 = p2 + t * d2;
  const Vec3d dlt = c1 - c2;
  return std::sqrt(dot(dlt, dlt));
}

}  // namespace detail

// Do two closed segments (not sharing an endpoint) intersect? Exact mode
// decides outright; float mode separates clear misses from contacts within
// the epsilon distance, which come back Degenerate.
template <class S>
SegSegResult segments_intersect(const Segment<S>& s1, const Segment<S>& s2) {
  if constexpr (std::is_same_v<S, double>) {
    const double mag = detail::max_magnitude(s1.p, s1.q, s2.p, s2.q);
    const double dist = detail::segment_segment_distance(s1.p, s1.q, s2.p, s2.q);
    if (dist == 0.0) return SegSegResult::Intersect;
    if (dist <= kEpsCoeff * std::max(mag, 1.0)) return SegSegResult::Degenerate;
    return SegSegResult::Disjoint;
  } else {
    const PredicateOutcome cop = orient3d(s1.p, s1.q, s2.p, s2.q);
    if (cop.sign != 0) return SegSegResult::Disjoint;
    // coplanar: reduce to 2D in the common plane
    Vec3<S> n = cross(s1.q - s1.p, s2.q - s2.p);
    if (n == Vec3<S>{}) {
      // parallel: either collinear with potential overlap, or forever apart
      if (collinear(s1.p, s1.q, s2.p).sign != 0) return SegSegResult::Disjoint;
      n = cross(s1.q - s1.p, s2.p - s1.p);
      if (n == Vec3<S>{}) {
        // all four points on one line: 1D overlap test along the longest axis
        const Vec3<S> dir = s1.q - s1.p;
        auto coord = [&](const Vec3<S>& v) { return dot(dir, v); };
        S lo1 = std::min(coord(s1.p), coord(s1.q)), hi1 = std::max(coord(s1.p), coord(s1.q));
        S lo2 = std::min(coord(s2.p), coord(s2.q)), hi2 = std::max(coord(s2.p), coord(s2.q));
        return (hi1 < lo2 || hi2 < lo1) ? SegSegResult::Disjoint : SegSegResult::Intersect;
      }
      return SegSegResult::Disjoint;  // parallel distinct lines
    }
    const int drop = detail::drop_axis_for(n);
    const bool hit = detail::segments_intersect_2d(
        detail::project2(s1.p, drop), detail::project2(s1.q, drop),
        detail::project2(s2.p, drop), detail::project2(s2.q, drop));
    return hit ? SegSegResult::Intersect : SegSegResult::Disjoint;
  }
}

// Two sticks sharing endpoint v (other ends x, y) must meet only at v.
template <class S>
SegSegResult adjacent_sticks_share_only_endpoint(const Vec3<S>& v, const Vec3<S>& x,
                                                 const Vec3<S>& y) {
  const PredicateOutcome col = collinear(x, v, y);
  if constexpr (std::is_same_v<S, double>) {
    if (col.degenerate || col.sign == 0) {
      const Vec3<S> cx = cross(x - v, y - v);
      const bool truly = (cx.x == 0 && cx.y == 0 && cx.z == 0);
      if (truly && dot(x - v, y - v) > 0) return SegSegResult::Intersect;
      if (!truly) return SegSegResult::Degenerate;
      return SegSegResult::Disjoint;  // collinear but opposite rays
    }
    return SegSegResult::Disjoint;
  } else {
    if (col.sign == 0 && dot(x - v, y - v) > 0) return SegSegResult::Intersect;
    return SegSegResult::Disjoint;
  }
}

}  // namespace stickknot
