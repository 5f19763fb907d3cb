#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "stickknot/diagram.hpp"
#include "stickknot/embedding.hpp"
#include "stickknot/rng.hpp"

// Orthogonal projection of closed polygons to a combinatorial diagram.
// Everything that would make the picture unreliable (a stick parallel to the
// viewing direction, a vertex projecting onto another stick, coincident
// crossings, equal depths at a crossing) is reported as NonGeneric; callers
// retry with a fresh direction.

namespace stickknot {

struct ProjectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class S>
struct ProjectionOutcome {
  bool ok = false;
  Diagram diagram;
  std::string reason;
};

namespace detail {

template <class S>
struct Projected {
  std::array<S, 2> xy;
  S depth;  // larger depth = nearer the viewer = over
};

template <class S>
struct CrossingEvent {
  int comp, seg;   // which polygon, which stick
  S t;             // parameter along the stick
  int crossing;    // index into the pending crossing list
  int side;        // 0 = first strand of the pending crossing, 1 = second
};

template <class S>
struct PendingCrossing {
  int comp_a, seg_a, comp_b, seg_b;
  S ta, tb;
  S depth_a, depth_b;
  std::array<S, 2> dir_a, dir_b;
  std::array<S, 2> point;  // 2D crossing location
};

}  // namespace detail

template <class S>
ProjectionOutcome<S> project(std::span<const ClosedPolygon<S>> polys, const Vec3<S>& direction) {
  using P2 = std::array<S, 2>;
  constexpr bool kFloat = std::is_same_v<S, double>;

  Vec3<S> d = direction;
  if constexpr (kFloat) {
    const double n = std::sqrt(dot(d, d));
    if (!(n > 0)) return {false, {}, "zero direction"};
    d = {d.x / n, d.y / n, d.z / n};
  } else {
    if (d == Vec3<S>{}) return {false, {}, "zero direction"};
  }

  // right-handed frame (e1, e2, d); the viewer looks along -d
  Vec3<S> axis{S(1), S(0), S(0)};
  if constexpr (kFloat) {
    if (std::abs(d.x) >= std::abs(d.y) && std::abs(d.x) >= std::abs(d.z))
      axis = {S(0), S(1), S(0)};
  } else {
    if (cross(axis, d) == Vec3<S>{}) axis = {S(0), S(1), S(0)};
  }
  Vec3<S> e1 = cross(axis, d);
  Vec3<S> e2 = cross(d, e1);
  if constexpr (kFloat) {
    const double n1 = std::sqrt(dot(e1, e1));
    e1 = {e1.x / n1, e1.y / n1, e1.z / n1};
    const double n2 = std::sqrt(dot(e2, e2));
    e2 = {e2.x / n2, e2.y / n2, e2.z / n2};
  }

  double mag = 1.0;
  if constexpr (kFloat) {
    mag = 0.0;
    for (const auto& poly : polys)
      for (const auto& p : poly.pts) mag = std::max(mag, magnitude_bound(p));
    mag = std::max(mag, 1.0);
  }
  const double eps1 = kFloat ? kEpsCoeff * mag : 0.0;
  const double eps2 = kFloat ? kEpsCoeff * mag * mag : 0.0;

  auto o2 = [&](const P2& a, const P2& b, const P2& c) -> S {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  auto sgn2 = [&](const S& v) -> PredicateOutcome {
    if constexpr (kFloat) {
      if (std::abs(v) <= eps2) return {0, true};
      return {v > 0 ? 1 : -1, false};
    } else {
      return {sign_of(v), false};
    }
  };

  // project all points
  std::vector<std::vector<detail::Projected<S>>> pp(polys.size());
  for (std::size_t c = 0; c < polys.size(); ++c) {
    pp[c].reserve(polys[c].pts.size());
    for (const auto& p : polys[c].pts) pp[c].push_back({{dot(p, e1), dot(p, e2)}, dot(p, d)});
  }

  auto close2 = [&](const P2& a, const P2& b) {
    const S dx = a[0] - b[0], dy = a[1] - b[1];
    if constexpr (kFloat) {
      return std::abs(dx) <= eps1 && std::abs(dy) <= eps1;
    } else {
      return dx == 0 && dy == 0;
    }
  };

  // sticks parallel to the direction
  for (std::size_t c = 0; c < polys.size(); ++c) {
    const std::size_t len = pp[c].size();
    for (std::size_t i = 0; i < len; ++i)
      if (close2(pp[c][i].xy, pp[c][(i + 1) % len].xy))
        return {false, {}, "stick parallel to projection direction"};
  }

  // distinct vertices projecting onto each other
  std::vector<std::pair<std::size_t, std::size_t>> all_pts;
  for (std::size_t c = 0; c < polys.size(); ++c)
    for (std::size_t i = 0; i < pp[c].size(); ++i) all_pts.push_back({c, i});
  for (std::size_t a = 0; a < all_pts.size(); ++a)
    for (std::size_t b = a + 1; b < all_pts.size(); ++b)
      if (close2(pp[all_pts[a].first][all_pts[a].second].xy,
                 pp[all_pts[b].first][all_pts[b].second].xy))
        return {false, {}, "two vertices coincide in projection"};

  // vertices projecting onto non-incident sticks
  for (const auto& [vc, vi] : all_pts) {
    const P2& v = pp[vc][vi].xy;
    for (std::size_t c = 0; c < polys.size(); ++c) {
      const std::size_t len = pp[c].size();
      for (std::size_t s = 0; s < len; ++s) {
        if (c == vc && (s == vi || (s + 1) % len == vi)) continue;
        const P2& a = pp[c][s].xy;
        const P2& b = pp[c][(s + 1) % len].xy;
        const PredicateOutcome o = sgn2(o2(a, b, v));
        if (o.sign != 0 && !o.degenerate) continue;
        // on the line within tolerance; within the span?
        const S along = (v[0] - a[0]) * (b[0] - a[0]) + (v[1] - a[1]) * (b[1] - a[1]);
        const S len2 = (b[0] - a[0]) * (b[0] - a[0]) + (b[1] - a[1]) * (b[1] - a[1]);
        if (along >= S(0) && along <= len2)
          return {false, {}, "vertex projects onto a stick"};
      }
    }
  }

  // proper crossings between non-adjacent sticks
  std::vector<detail::PendingCrossing<S>> pending;
  for (std::size_t ca = 0; ca < polys.size(); ++ca) {
    const std::size_t la = pp[ca].size();
    for (std::size_t cb = ca; cb < polys.size(); ++cb) {
      const std::size_t lb = pp[cb].size();
      for (std::size_t sa = 0; sa < la; ++sa) {
        for (std::size_t sb = (ca == cb ? sa + 1 : 0); sb < lb; ++sb) {
          if (ca == cb) {
            const bool adjacent = sb == sa + 1 || (sa == 0 && sb == la - 1);
            if (adjacent) continue;
          }
          const P2 &a1 = pp[ca][sa].xy, &a2 = pp[ca][(sa + 1) % la].xy;
          const P2 &b1 = pp[cb][sb].xy, &b2 = pp[cb][(sb + 1) % lb].xy;
          const PredicateOutcome d1 = sgn2(o2(b1, b2, a1));
          const PredicateOutcome d2 = sgn2(o2(b1, b2, a2));
          const PredicateOutcome d3 = sgn2(o2(a1, a2, b1));
          const PredicateOutcome d4 = sgn2(o2(a1, a2, b2));
          if (d1.degenerate || d2.degenerate || d3.degenerate || d4.degenerate)
            return {false, {}, "near-degenerate stick pair in projection"};
          if (d1.sign == 0 || d2.sign == 0 || d3.sign == 0 || d4.sign == 0)
            return {false, {}, "stick endpoint on another stick in projection"};
          if (d1.sign == d2.sign || d3.sign == d4.sign) continue;  // no crossing
          // crossing parameters from the signed areas
          const S va = o2(b1, b2, a1), vb = o2(b1, b2, a2);
          const S wa = o2(a1, a2, b1), wb = o2(a1, a2, b2);
          const S ta = va / (va - vb);
          const S tb = wa / (wa - wb);
          detail::PendingCrossing<S> pc;
          pc.comp_a = static_cast<int>(ca);
          pc.seg_a = static_cast<int>(sa);
          pc.comp_b = static_cast<int>(cb);
          pc.seg_b = static_cast<int>(sb);
          pc.ta = ta;
          pc.tb = tb;
          pc.depth_a = pp[ca][sa].depth + ta * (pp[ca][(sa + 1) % la].depth - pp[ca][sa].depth);
          pc.depth_b = pp[cb][sb].depth + tb * (pp[cb][(sb + 1) % lb].depth - pp[cb][sb].depth);
          pc.dir_a = {a2[0] - a1[0], a2[1] - a1[1]};
          pc.dir_b = {b2[0] - b1[0], b2[1] - b1[1]};
          pc.point = {a1[0] + ta * pc.dir_a[0], a1[1] + ta * pc.dir_a[1]};
          if constexpr (kFloat) {
            if (std::abs(pc.depth_a - pc.depth_b) <= eps1)
              return {false, {}, "equal depths at a crossing"};
          } else {
            if (pc.depth_a == pc.depth_b)
              return {false, {}, "sticks meet in space"};
          }
          pending.push_back(std::move(pc));
        }
      }
    }
  }

  // order crossing passages along each component
  std::vector<std::vector<detail::CrossingEvent<S>>> events(polys.size());
  for (std::size_t x = 0; x < pending.size(); ++x) {
    const auto& pc = pending[x];
    events[pc.comp_a].push_back({pc.comp_a, pc.seg_a, pc.ta, static_cast<int>(x), 0});
    events[pc.comp_b].push_back({pc.comp_b, pc.seg_b, pc.tb, static_cast<int>(x), 1});
  }
  Diagram out;
  out.components = static_cast<int>(polys.size());
  for (auto& ev : events) {
    std::sort(ev.begin(), ev.end(),
              [](const auto& a, const auto& b) { return a.seg != b.seg ? a.seg < b.seg : a.t < b.t; });
    for (std::size_t i = 0; i + 1 < ev.size(); ++i) {
      if (ev[i].seg != ev[i + 1].seg) continue;
      if (close2(pending[ev[i].crossing].point, pending[ev[i + 1].crossing].point))
        return {false, {}, "two crossings coincide on a stick"};
    }
  }

  // arcs: one per passage, between consecutive passages along the component
  int arc_base = 0;
  std::vector<std::array<int, 2>> in_arc(pending.size()), out_arc(pending.size());
  for (std::size_t c = 0; c < polys.size(); ++c) {
    const int m = static_cast<int>(events[c].size());
    if (m == 0) {
      ++out.free_loops;
      continue;
    }
    for (int j = 0; j < m; ++j) {
      const auto& ev = events[c][j];
      const int incoming = arc_base + (j + m - 1) % m;
      const int outgoing = arc_base + j;
      in_arc[ev.crossing][ev.side] = incoming;
      out_arc[ev.crossing][ev.side] = outgoing;
    }
    arc_base += m;
  }
  out.num_arcs = arc_base;

  for (std::size_t x = 0; x < pending.size(); ++x) {
    const auto& pc = pending[x];
    const bool a_over = pc.depth_a > pc.depth_b;
    Crossing cr;
    cr.inter_component = pc.comp_a != pc.comp_b;
    const auto& dir_over = a_over ? pc.dir_a : pc.dir_b;
    const auto& dir_under = a_over ? pc.dir_b : pc.dir_a;
    const S det = dir_over[0] * dir_under[1] - dir_over[1] * dir_under[0];
    cr.sign = sign_of(det) > 0 ? 1 : -1;
    const int over_side = a_over ? 0 : 1;
    cr.over_in = in_arc[x][over_side];
    cr.over_out = out_arc[x][over_side];
    cr.under_in = in_arc[x][1 - over_side];
    cr.under_out = out_arc[x][1 - over_side];
    out.crossings.push_back(cr);
  }
  return {true, std::move(out), ""};
}

template <class S>
ProjectionOutcome<S> project(const std::vector<ClosedPolygon<S>>& polys, const Vec3<S>& dir) {
  return project(std::span<const ClosedPolygon<S>>(polys.data(), polys.size()), dir);
}

inline constexpr int kMaxProjectionAttempts = 64;

// Retries random directions until the projection is generic. Exhaustion
// signals near-degenerate geometry; callers resample or switch to exact mode.
template <class S>
Diagram generic_projection(const std::vector<ClosedPolygon<S>>& polys, SplitMix64& rng) {
  std::string last;
  for (int attempt = 0; attempt < kMaxProjectionAttempts; ++attempt) {
    Vec3<S> dir;
    if constexpr (std::is_same_v<S, double>) {
      dir = rng.next_unit_vector();
    } else {
      dir = rng.next_int_direction();
    }
    auto r = project(polys, dir);
    if (r.ok) return std::move(r.diagram);
    last = std::move(r.reason);
  }
  throw ProjectionError("no generic projection found in " +
                        std::to_string(kMaxProjectionAttempts) + " attempts (last: " + last + ")");
}

}  // namespace stickknot
