#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "stickknot/graph.hpp"
#include "stickknot/predicates.hpp"

namespace stickknot {

// Piecewise-linear embedding: every edge of the abstract graph is realized by
// a polyline whose first and last points coincide with the endpoint vertex
// positions. Interior polyline points are bends. Values are immutable after
// construction; operations return new embeddings.
template <class S>
struct PLEmbedding {
  AbstractGraph graph;
  std::vector<Vec3<S>> vertex_pos;           // indexed like graph.vertices
  std::vector<std::vector<Vec3<S>>> routes;  // indexed like graph.edges

  std::size_t stick_count() const {
    std::size_t n = 0;
    for (const auto& r : routes) n += r.size() - 1;
    return n;
  }
};

using PLEmbeddingQ = PLEmbedding<Rational>;
using PLEmbeddingD = PLEmbedding<double>;

struct StickRef {
  int edge = -1;
  int seg = -1;  // route[seg] -> route[seg+1]
  friend bool operator==(const StickRef&, const StickRef&) = default;
};

struct BendRef {
  int edge = -1;
  int interior = -1;  // index into the route, 0 < interior < route.size()-1
  friend bool operator==(const BendRef&, const BendRef&) = default;
  friend bool operator<(const BendRef& a, const BendRef& b) {
    return a.edge != b.edge ? a.edge < b.edge : a.interior < b.interior;
  }
};

template <class S>
Segment<S> stick_segment(const PLEmbedding<S>& e, const StickRef& s) {
  return {e.routes[s.edge][s.seg], e.routes[s.edge][s.seg + 1]};
}

template <class S>
std::vector<StickRef> all_sticks(const PLEmbedding<S>& e) {
  std::vector<StickRef> out;
  for (std::size_t ed = 0; ed < e.routes.size(); ++ed)
    for (std::size_t s = 0; s + 1 < e.routes[ed].size(); ++s)
      out.push_back({static_cast<int>(ed), static_cast<int>(s)});
  return out;
}

template <class S>
std::vector<BendRef> all_bends(const PLEmbedding<S>& e) {
  std::vector<BendRef> out;
  for (std::size_t ed = 0; ed < e.routes.size(); ++ed)
    for (std::size_t i = 1; i + 1 < e.routes[ed].size(); ++i)
      out.push_back({static_cast<int>(ed), static_cast<int>(i)});
  return out;
}

// ---------------------------------------------------------------------------
// validation

enum class ValidationKind { Valid, SelfIntersection, Degenerate };

struct ValidationResult {
  ValidationKind kind = ValidationKind::Valid;
  std::string witness;
  bool valid() const { return kind == ValidationKind::Valid; }
};

namespace detail {

// Points the two sticks are allowed to share, justified by the structure of
// the embedding (a common route junction or a common graph vertex).
template <class S>
std::vector<Vec3<S>> structural_shared_points(const PLEmbedding<S>& e, const StickRef& s1,
                                              const StickRef& s2) {
  std::vector<Vec3<S>> shared;
  if (s1.edge == s2.edge) {
    if (std::abs(s1.seg - s2.seg) == 1)
      shared.push_back(e.routes[s1.edge][std::max(s1.seg, s2.seg)]);
    return shared;
  }
  const auto& [a1, b1] = e.graph.edges[s1.edge];
  const auto& [a2, b2] = e.graph.edges[s2.edge];
  auto stick_touches_vertex = [&](const StickRef& s, int v) {
    const auto& route = e.routes[s.edge];
    const auto& [ea, eb] = e.graph.edges[s.edge];
    if (ea == v && s.seg == 0) return true;
    if (eb == v && s.seg == static_cast<int>(route.size()) - 2) return true;
    return false;
  };
  for (int v : {a1, b1}) {
    if (v != a2 && v != b2) continue;
    if (stick_touches_vertex(s1, v) && stick_touches_vertex(s2, v))
      shared.push_back(e.vertex_pos[v]);
  }
  return shared;
}

}  // namespace detail

template <class S>
ValidationResult validate(const PLEmbedding<S>& e) {
  std::ostringstream w;
  e.graph.check();
  if (e.vertex_pos.size() != e.graph.vertices.size() || e.routes.size() != e.graph.edges.size())
    return {ValidationKind::Degenerate, "structure sizes do not match the graph"};

  for (std::size_t i = 0; i < e.vertex_pos.size(); ++i)
    for (std::size_t j = i + 1; j < e.vertex_pos.size(); ++j)
      if (e.vertex_pos[i] == e.vertex_pos[j]) {
        w << "vertices " << e.graph.vertices[i] << " and " << e.graph.vertices[j]
          << " coincide";
        return {ValidationKind::SelfIntersection, w.str()};
      }

  for (std::size_t ed = 0; ed < e.routes.size(); ++ed) {
    const auto& r = e.routes[ed];
    const auto& [a, b] = e.graph.edges[ed];
    if (r.size() < 2) return {ValidationKind::Degenerate, "route with fewer than 2 points"};
    if (!(r.front() == e.vertex_pos[a]) || !(r.back() == e.vertex_pos[b]))
      return {ValidationKind::Degenerate, "route endpoints do not match vertex positions"};
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (r[i] == r[i + 1]) {
        w << "zero-length stick on edge " << ed << " at " << i;
        return {ValidationKind::Degenerate, w.str()};
      }
    for (std::size_t i = 1; i + 1 < r.size(); ++i)
      if (collinear(r[i - 1], r[i], r[i + 1]).sign == 0) {
        w << "flat bend on edge " << ed << " at " << i;
        return {ValidationKind::Degenerate, w.str()};
      }
  }

  const auto sticks = all_sticks(e);
  for (std::size_t i = 0; i < sticks.size(); ++i) {
    for (std::size_t j = i + 1; j < sticks.size(); ++j) {
      const auto shared = detail::structural_shared_points(e, sticks[i], sticks[j]);
      const Segment<S> g1 = stick_segment(e, sticks[i]);
      const Segment<S> g2 = stick_segment(e, sticks[j]);
      if (shared.size() >= 2) {
        w << "sticks (" << sticks[i].edge << "," << sticks[i].seg << ") and ("
          << sticks[j].edge << "," << sticks[j].seg << ") coincide";
        return {ValidationKind::SelfIntersection, w.str()};
      }
      if (shared.size() == 1) {
        const Vec3<S>& v = shared.front();
        const Vec3<S> x = g1.p == v ? g1.q : g1.p;
        const Vec3<S> y = g2.p == v ? g2.q : g2.p;
        const SegSegResult r = adjacent_sticks_share_only_endpoint(v, x, y);
        if (r == SegSegResult::Intersect) {
          w << "adjacent sticks overlap beyond their shared endpoint at edge "
            << sticks[i].edge << " seg " << sticks[i].seg;
          return {ValidationKind::SelfIntersection, w.str()};
        }
        if (r == SegSegResult::Degenerate) {
          w << "near-collinear adjacent sticks at edge " << sticks[i].edge;
          return {ValidationKind::Degenerate, w.str()};
        }
        continue;
      }
      const SegSegResult r = segments_intersect(g1, g2);
      if (r == SegSegResult::Intersect) {
        w << "sticks (" << sticks[i].edge << "," << sticks[i].seg << ") and ("
          << sticks[j].edge << "," << sticks[j].seg << ") intersect";
        return {ValidationKind::SelfIntersection, w.str()};
      }
      if (r == SegSegResult::Degenerate) {
        w << "sticks (" << sticks[i].edge << "," << sticks[i].seg << ") and ("
          << sticks[j].edge << "," << sticks[j].seg << ") within epsilon";
        return {ValidationKind::Degenerate, w.str()};
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// realized cycles

// The realized cycle with orientation fixed by the cycle walk; bends included.
template <class S>
struct ClosedPolygon {
  std::vector<Vec3<S>> pts;
  std::size_t stick_count() const { return pts.size(); }
};

template <class S>
ClosedPolygon<S> realize_cycle(const PLEmbedding<S>& e, const Cycle& c) {
  ClosedPolygon<S> poly;
  const std::size_t k = c.edges.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int edge = c.edges[i];
    const int from = c.verts[i];
    std::vector<Vec3<S>> pts = e.routes[edge];
    if (e.graph.edges[edge].first != from) std::reverse(pts.begin(), pts.end());
    pts.pop_back();  // the next edge contributes the junction point
    for (auto& p : pts) poly.pts.push_back(std::move(p));
  }
  return poly;
}

// Drops interior points where the polygon continues straight ahead; the image
// of the curve is unchanged. Only exact forward collinearity is merged.
template <class S>
ClosedPolygon<S> merge_flat_points(const ClosedPolygon<S>& poly) {
  std::vector<Vec3<S>> pts = poly.pts;
  bool changed = true;
  while (changed && pts.size() > 3) {
    changed = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Vec3<S>& a = pts[(i + pts.size() - 1) % pts.size()];
      const Vec3<S>& b = pts[i];
      const Vec3<S>& c = pts[(i + 1) % pts.size()];
      const Vec3<S> cr = cross(b - a, c - b);
      if (cr == Vec3<S>{} && dot(b - a, c - b) > 0) {
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return {pts};
}

// ---------------------------------------------------------------------------
// reducibility and reduction

template <class S>
Triangle<S> degree2_triangle(const PLEmbedding<S>& e, const BendRef& bend) {
  if (bend.edge < 0 || bend.edge >= static_cast<int>(e.routes.size()))
    throw std::out_of_range("degree2_triangle: no such edge");
  const auto& r = e.routes[bend.edge];
  if (bend.interior <= 0 || bend.interior + 1 >= static_cast<int>(r.size()))
    throw std::out_of_range("degree2_triangle: not an interior polyline point");
  return {r[bend.interior - 1], r[bend.interior], r[bend.interior + 1]};
}

enum class Reducibility { Reducible, Irreducible, Degenerate };

struct ReducibilityResult {
  Reducibility kind = Reducibility::Reducible;
  std::vector<StickRef> blocking;  // sticks meeting the bend region
};

template <class S>
ReducibilityResult is_reducible_triangle(const PLEmbedding<S>& e, const BendRef& bend) {
  const Triangle<S> tri = degree2_triangle(e, bend);
  ReducibilityResult res;
  bool degenerate = false;
  for (const StickRef& s : all_sticks(e)) {
    if (s.edge == bend.edge && (s.seg == bend.interior - 1 || s.seg == bend.interior)) continue;
    const RegionMeet m = segment_meets_bend_region(stick_segment(e, s), tri.a, tri.b, tri.c);
    if (m == RegionMeet::Meets) res.blocking.push_back(s);
    if (m == RegionMeet::Degenerate) degenerate = true;
  }
  if (degenerate) {
    res.kind = Reducibility::Degenerate;
  } else {
    res.kind = res.blocking.empty() ? Reducibility::Reducible : Reducibility::Irreducible;
  }
  return res;
}

template <class S>
struct StraighteningStep {
  int edge;
  int interior;
  Triangle<S> triangle;  // the straightened (certified empty) triangle
};

template <class S>
struct ReduceOutcome {
  PLEmbedding<S> embedding;
  bool complete = true;  // false when a Degenerate predicate aborted the scan
  std::vector<StraighteningStep<S>> log;
};

// Repeatedly straightens reducible bends, scanning in deterministic order
// (edge id, then interior position) and restarting after every success.
template <class S>
ReduceOutcome<S> reduce(const PLEmbedding<S>& e) {
  ReduceOutcome<S> out{e, true, {}};
  for (;;) {
    bool straightened = false;
    for (const BendRef& bend : all_bends(out.embedding)) {
      const ReducibilityResult r = is_reducible_triangle(out.embedding, bend);
      if (r.kind == Reducibility::Degenerate) {
        out.complete = false;
        return out;
      }
      if (r.kind != Reducibility::Reducible) continue;
      out.log.push_back(
          {bend.edge, bend.interior, degree2_triangle(out.embedding, bend)});
      auto& route = out.embedding.routes[bend.edge];
      route.erase(route.begin() + bend.interior);
      // merge any exactly flat bend the straightening may have produced next door
      for (std::size_t i = 1; i + 1 < route.size();) {
        const Vec3<S> cr = cross(route[i] - route[i - 1], route[i + 1] - route[i]);
        if (cr == Vec3<S>{} && dot(route[i] - route[i - 1], route[i + 1] - route[i]) > S(0))
          route.erase(route.begin() + static_cast<std::ptrdiff_t>(i));
        else
          ++i;
      }
      straightened = true;
      break;
    }
    if (!straightened) return out;
  }
}

}  // namespace stickknot
