#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "stickknot/diagram.hpp"
#include "stickknot/embedding.hpp"
#include "stickknot/projection.hpp"

// Knot and link invariants of realized polygons, plus the linear K6 / K3,3
// classifiers built on them.
//
// Unknot detection is by triviality of the normalized Jones polynomial. Every
// cycle handled here has at most ~14 sticks, hence small crossing number, and
// no nontrivial knot in that range has trivial Jones; this is an explicit
// standing assumption of the toolkit. Hexagons (6 sticks) are classified by
// the knot determinant alone, since a hexagonal knot is an unknot or a
// trefoil.

namespace stickknot {

enum class KnotKind { Unknot, TrefoilLeft, TrefoilRight, Other };

struct KnotClass {
  KnotKind kind = KnotKind::Unknot;
  LaurentPolynomial jones = LaurentPolynomial::one();

  friend bool operator==(const KnotClass& a, const KnotClass& b) { return a.jones == b.jones; }
};

inline const char* knot_kind_name(KnotKind k) {
  switch (k) {
    case KnotKind::Unknot: return "Unknot";
    case KnotKind::TrefoilLeft: return "TrefoilLeft";
    case KnotKind::TrefoilRight: return "TrefoilRight";
    default: return "Other";
  }
}

// V(left trefoil) = -t^-4 + t^-3 + t^-1, written in A with t = A^-4
inline const LaurentPolynomial& jones_trefoil_left() {
  static const LaurentPolynomial p = LaurentPolynomial::monomial(-1, 16) +
                                     LaurentPolynomial::monomial(1, 12) +
                                     LaurentPolynomial::monomial(1, 4);
  return p;
}

inline const LaurentPolynomial& jones_trefoil_right() {
  static const LaurentPolynomial p = jones_trefoil_left().mirrored();
  return p;
}

inline KnotClass knot_class_from_jones(LaurentPolynomial jones) {
  KnotClass k;
  k.kind = KnotKind::Other;
  if (jones.is_one()) k.kind = KnotKind::Unknot;
  else if (jones == jones_trefoil_left()) k.kind = KnotKind::TrefoilLeft;
  else if (jones == jones_trefoil_right()) k.kind = KnotKind::TrefoilRight;
  k.jones = std::move(jones);
  return k;
}

// No knotted cycle has fewer than 6 sticks; shorter polygons skip projection.
template <class S>
KnotClass classify_polygon(const ClosedPolygon<S>& poly, SplitMix64& rng) {
  const ClosedPolygon<S> canon = merge_flat_points(poly);
  if (canon.stick_count() < 6) return {};
  const std::vector<ClosedPolygon<S>> polys{canon};
  const Diagram d = generic_projection(polys, rng);
  return knot_class_from_jones(jones_normalized(d));
}

// Gauss linking number: half the signed inter-component crossing sum of a
// generic projection of the two-component link.
template <class S>
int linking_number(const ClosedPolygon<S>& a, const ClosedPolygon<S>& b, SplitMix64& rng) {
  const std::vector<ClosedPolygon<S>> polys{merge_flat_points(a), merge_flat_points(b)};
  const Diagram d = generic_projection(polys, rng);
  int sum = 0;
  for (const auto& c : d.crossings)
    if (c.inter_component) sum += c.sign;
  if (sum % 2 != 0) throw std::logic_error("odd inter-component crossing sum");
  return sum / 2;
}

// Hot-loop primitive: the flat disk of triangle b is its own spanning
// surface, so lk(a,b) is the signed count of piercings of a's edges through b.
struct FastLinking {
  int lk = 0;
  bool degenerate = false;
};

template <class S>
FastLinking triangle_linking_fast(const Triangle<S>& a, const Triangle<S>& b) {
  int sum = 0;
  const std::array<Segment<S>, 3> edges = {{{a.a, a.b}, {a.b, a.c}, {a.c, a.a}}};
  for (const auto& e : edges) {
    const PierceResult r = segment_triangle_pierce(e, b);
    if (r.kind == PierceKind::Degenerate) return {0, true};
    if (r.kind == PierceKind::Pierce) sum += r.sign;
  }
  return {sum, false};
}

// ---------------------------------------------------------------------------
// shared-determinant table for six-point configurations
//
// Every orient3d call on a fixed set of six points factors through the 15
// determinants of its 4-subsets plus a permutation parity; the census and the
// K3,3 classifier run entirely off this table.

template <class S>
struct SixPointTable {
  std::array<int, 15> sign{};
  std::array<bool, 15> degen{};
  bool any_degenerate = false;

  explicit SixPointTable(const std::array<Vec3<S>, 6>& pts) {
    int idx = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c)
          for (int d = c + 1; d < 6; ++d) {
            const PredicateOutcome o = orient3d(pts[a], pts[b], pts[c], pts[d]);
            sign[idx] = o.sign;
            degen[idx] = o.degenerate || o.sign == 0;
            any_degenerate = any_degenerate || degen[idx];
            ++idx;
          }
  }

  static int rank_sorted(int a, int b, int c, int d) {
    // position of {a<b<c<d} in the lexicographic enumeration above
    int idx = 0;
    for (int i = 0; i < 6; ++i)
      for (int j = i + 1; j < 6; ++j)
        for (int k = j + 1; k < 6; ++k)
          for (int l = k + 1; l < 6; ++l) {
            if (i == a && j == b && k == c && l == d) return idx;
            ++idx;
          }
    return -1;
  }

  PredicateOutcome orient(int i, int j, int k, int l) const {
    int v[4] = {i, j, k, l};
    int parity = 1;
    for (int x = 0; x < 3; ++x)
      for (int y = 0; y < 3 - x; ++y)
        if (v[y] > v[y + 1]) {
          std::swap(v[y], v[y + 1]);
          parity = -parity;
        }
    static const auto rank_table = [] {
      std::array<std::array<std::array<std::array<int, 6>, 6>, 6>, 6> t{};
      for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
          for (int c = 0; c < 6; ++c)
            for (int d = 0; d < 6; ++d)
              t[a][b][c][d] = (a < b && b < c && c < d) ? rank_sorted(a, b, c, d) : -1;
      return t;
    }();
    const int r = rank_table[v[0]][v[1]][v[2]][v[3]];
    return {parity * sign[r], degen[r]};
  }
};

namespace detail {

// open segment (p,q) through open triangle (t0,t1,t2), all indices into the
// shared table; degenerate covers epsilon flags and exact boundary contacts
template <class S>
std::pair<int, bool> table_pierce(const SixPointTable<S>& T, int p, int q, int t0, int t1,
                                  int t2) {
  const PredicateOutcome sp = T.orient(t0, t1, t2, p);
  const PredicateOutcome sq = T.orient(t0, t1, t2, q);
  if (sp.degenerate || sq.degenerate || sp.sign == 0 || sq.sign == 0) return {0, true};
  if (sp.sign == sq.sign) return {0, false};
  const PredicateOutcome a1 = T.orient(p, q, t0, t1);
  const PredicateOutcome a2 = T.orient(p, q, t1, t2);
  const PredicateOutcome a3 = T.orient(p, q, t2, t0);
  if (a1.degenerate || a2.degenerate || a3.degenerate || a1.sign == 0 || a2.sign == 0 ||
      a3.sign == 0)
    return {0, true};
  if (a1.sign == a2.sign && a2.sign == a3.sign) return {sq.sign, false};
  return {0, false};
}

// table version of segment_meets_bend_region for sticks and bend triangles
// whose corners are all among the six points
template <class S>
RegionMeet table_bend_region(const SixPointTable<S>& T, int x, int y, int u, int b, int w) {
  const bool shared_x = (x == u || x == b || x == w);
  const bool shared_y = (y == u || y == b || y == w);
  if (shared_x && shared_y)
    return ((x == u && y == w) || (x == w && y == u)) ? RegionMeet::Meets : RegionMeet::Disjoint;
  PredicateOutcome sx{0, false}, sy{0, false};
  if (!shared_x) sx = T.orient(u, b, w, x);
  if (!shared_y) sy = T.orient(u, b, w, y);
  if (sx.degenerate || sy.degenerate) return RegionMeet::Degenerate;
  const int a = shared_x ? 0 : sx.sign;
  const int c = shared_y ? 0 : sy.sign;
  if (a == 0 && c == 0) return RegionMeet::Degenerate;  // coplanar, needs full predicates
  if (a == 0 || c == 0) {
    const bool contact_shared = (a == 0) ? shared_x : shared_y;
    if (contact_shared) return RegionMeet::Disjoint;
    return RegionMeet::Degenerate;  // true plane contact, needs full predicates
  }
  if (a == c) return RegionMeet::Disjoint;
  const PredicateOutcome t1 = T.orient(x, y, u, b);
  const PredicateOutcome t2 = T.orient(x, y, b, w);
  const PredicateOutcome t3 = T.orient(x, y, w, u);
  if (t1.degenerate || t2.degenerate || t3.degenerate) return RegionMeet::Degenerate;
  int pos = 0, neg = 0, zero = 0;
  for (int s : {t1.sign, t2.sign, t3.sign}) {
    if (s > 0) ++pos;
    else if (s < 0) ++neg;
    else ++zero;
  }
  if (pos > 0 && neg > 0) return RegionMeet::Disjoint;
  if (zero == 0) return RegionMeet::Meets;
  if (zero == 1) return t3.sign == 0 ? RegionMeet::Meets : RegionMeet::Disjoint;
  return RegionMeet::Disjoint;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// hexagon knot test
//
// Pipeline: if some bend triangle of the hexagon is reducible within the
// hexagon alone, the curve is isotopic to a pentagon and hence unknotted.
// Otherwise build a generic diagram and take the knot determinant (1 unknot,
// 3 trefoil; nothing else is possible for hexagons).

enum class HexKnot { Unknot, Trefoil, Degenerate };

template <class S>
HexKnot hexagon_knotted(const SixPointTable<S>& T, const std::array<Vec3<S>, 6>& pts,
                        const std::array<int, 6>& cyc, SplitMix64& rng) {
  bool saw_degenerate = false;
  for (int i = 0; i < 6; ++i) {
    const int u = cyc[(i + 5) % 6], b = cyc[i], w = cyc[(i + 1) % 6];
    bool reducible = true;
    for (int j = 0; j < 6; ++j) {
      if (j == (i + 5) % 6 || j == i) continue;  // the two defining sticks
      const RegionMeet m = detail::table_bend_region(T, cyc[j], cyc[(j + 1) % 6], u, b, w);
      if (m == RegionMeet::Degenerate) {
        saw_degenerate = true;  // another bend may still certify reducibility
        reducible = false;
        break;
      }
      if (m == RegionMeet::Meets) {
        reducible = false;
        break;
      }
    }
    if (reducible) return HexKnot::Unknot;
  }
  if (saw_degenerate) return HexKnot::Degenerate;

  ClosedPolygon<S> poly;
  poly.pts.reserve(6);
  for (int i = 0; i < 6; ++i) poly.pts.push_back(pts[cyc[i]]);
  const std::vector<ClosedPolygon<S>> polys{merge_flat_points(poly)};
  try {
    const Diagram d = generic_projection(polys, rng);
    const long long det = knot_determinant(d);
    if (det == 1) return HexKnot::Unknot;
    if (det == 3) return HexKnot::Trefoil;
    throw std::logic_error("hexagon with determinant other than 1 or 3");
  } catch (const ProjectionError&) {
    return HexKnot::Degenerate;
  }
}

// ---------------------------------------------------------------------------
// Conway-Gordon census of a linear K6

struct HopfCensusEntry {
  std::array<int, 3> tri_a{}, tri_b{};
  int lk = 0;
};

struct HopfCensus {
  std::array<HopfCensusEntry, 10> pairs{};
  int linked_count = 0;  // entries with |lk| = 1; always 1 or 3 when not degenerate
  bool degenerate = false;
};

// the 10 unordered partitions of {0..5} into two disjoint triangles
inline const std::array<std::pair<std::array<int, 3>, std::array<int, 3>>, 10>&
k6_triangle_partitions() {
  static const auto parts = [] {
    std::array<std::pair<std::array<int, 3>, std::array<int, 3>>, 10> out{};
    int idx = 0;
    for (int b = 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) {
        std::array<int, 3> ta = {0, b, c};
        std::array<int, 3> tb{};
        int k = 0;
        for (int v = 1; v < 6; ++v)
          if (v != b && v != c) tb[k++] = v;
        out[idx++] = {ta, tb};
      }
    return out;
  }();
  return parts;
}

template <class S>
HopfCensus hopf_census_from_table(const SixPointTable<S>& T) {
  HopfCensus census;
  int idx = 0;
  for (const auto& [ta, tb] : k6_triangle_partitions()) {
    int lk = 0;
    for (int e = 0; e < 3; ++e) {
      const auto [s, degen] =
          detail::table_pierce(T, ta[e], ta[(e + 1) % 3], tb[0], tb[1], tb[2]);
      if (degen) {
        census.degenerate = true;
        return census;
      }
      lk += s;
    }
    census.pairs[idx] = {ta, tb, lk};
    if (lk == 1 || lk == -1) ++census.linked_count;
    ++idx;
  }
  return census;
}

template <class S>
HopfCensus hopf_census_k6(const std::array<Vec3<S>, 6>& pts) {
  const SixPointTable<S> T(pts);
  return hopf_census_from_table(T);
}

// all 60 Hamiltonian 6-cycles of K6, starting at vertex 0, reflection-reduced
inline const std::vector<std::array<int, 6>>& k6_hexagons() {
  static const auto hexes = [] {
    std::vector<std::array<int, 6>> out;
    std::array<int, 5> perm = {1, 2, 3, 4, 5};
    do {
      if (perm[0] < perm[4]) out.push_back({0, perm[0], perm[1], perm[2], perm[3], perm[4]});
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return hexes;
}

struct HexagonCensus {
  std::vector<std::array<int, 6>> knotted;
  bool degenerate = false;
};

// determinant test over all 60 Hamiltonian 6-cycles; the independent oracle
// for the 3-Hopf-links criterion
template <class S>
HexagonCensus k6_hexagon_census(const std::array<Vec3<S>, 6>& pts, SplitMix64& rng) {
  const SixPointTable<S> T(pts);
  HexagonCensus out;
  for (const auto& cyc : k6_hexagons()) {
    const HexKnot h = hexagon_knotted(T, pts, cyc, rng);
    if (h == HexKnot::Degenerate) {
      out.degenerate = true;
      return out;
    }
    if (h == HexKnot::Trefoil) out.knotted.push_back(cyc);
  }
  return out;
}

struct TrefoilSearch {
  bool contains_trefoil = false;
  bool degenerate = false;
  std::array<int, 6> hexagon{};  // witness when found
};

// census criterion: a linear K6 contains a (trefoil) knot iff it has exactly
// three Hopf links; with find_witness the knotted hexagon is located among
// the 60 Hamiltonian cycles by the determinant test.
template <class S>
TrefoilSearch k6_contains_trefoil(const std::array<Vec3<S>, 6>& pts, SplitMix64& rng,
                                  bool find_witness = false) {
  TrefoilSearch res;
  const SixPointTable<S> T(pts);
  const HopfCensus census = hopf_census_from_table(T);
  if (census.degenerate) {
    res.degenerate = true;
    return res;
  }
  res.contains_trefoil = census.linked_count == 3;
  if (res.contains_trefoil && find_witness) {
    for (const auto& cyc : k6_hexagons()) {
      const HexKnot h = hexagon_knotted(T, pts, cyc, rng);
      if (h == HexKnot::Degenerate) {
        res.degenerate = true;
        return res;
      }
      if (h == HexKnot::Trefoil) {
        res.hexagon = cyc;
        return res;
      }
    }
    res.degenerate = true;  // criterion said knot but no witness resolved
  }
  return res;
}

// ---------------------------------------------------------------------------
// linear K3,3 classifier

enum class K33Class { Mobius, Knotted, Degenerate };

struct K33Result {
  K33Class kind = K33Class::Degenerate;
  std::array<int, 6> knotted_hexagon{};  // cyclic vertex indices when Knotted
};

// the 6 hexagons of K3,3 with bipartition {0,1,2} | {3,4,5}
inline const std::array<std::array<int, 6>, 6>& k33_hexagons() {
  static const auto hexes = [] {
    std::array<std::array<int, 6>, 6> out{};
    std::array<int, 3> perm = {3, 4, 5};
    int idx = 0;
    do {
      out[idx++] = {0, perm[0], 1, perm[1], 2, perm[2]};
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }();
  return hexes;
}

// A linear K3,3 (fixed bipartition {0,1,2}|{3,4,5}) is knotted iff one of its
// six hexagons is; quadrilaterals cannot knot. Knotless means Mobius form.
template <class S>
K33Result classify_linear_k33(const std::array<Vec3<S>, 6>& pts, SplitMix64& rng) {
  const SixPointTable<S> T(pts);
  bool saw_degenerate = false;
  for (const auto& cyc : k33_hexagons()) {
    const HexKnot h = hexagon_knotted(T, pts, cyc, rng);
    if (h == HexKnot::Trefoil) return {K33Class::Knotted, cyc};
    if (h == HexKnot::Degenerate) saw_degenerate = true;
  }
  if (saw_degenerate) return {K33Class::Degenerate, {}};
  return {K33Class::Mobius, {}};
}

}  // namespace stickknot
