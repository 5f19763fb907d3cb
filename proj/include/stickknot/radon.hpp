#pragma once

#include <array>
#include <sstream>
#include <stdexcept>
#include <string>

#include "stickknot/predicates.hpp"

// Radon partitions of five points in general position: the unique split into
// either a vertex inside the tetrahedron of the other four (1|4) or a segment
// piercing the triangle of the other three (2|3). These are the two affine
// types of linear K5 embeddings.

namespace stickknot {

struct GeneralPositionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class RadonKind { OneInsideFour, TwoThree };

struct RadonPartition {
  RadonKind kind = RadonKind::OneInsideFour;
  int inner = -1;                 // OneInsideFour: the enclosed vertex
  std::array<int, 2> pair{};      // TwoThree: the piercing segment
  std::array<int, 3> triple{};    // TwoThree: the pierced triangle
  int pierce_sign = 0;            // TwoThree: crossing direction

  std::string describe() const {
    std::ostringstream os;
    if (kind == RadonKind::OneInsideFour) {
      os << "OneInsideFour(inner=" << inner + 1 << ")";
    } else {
      os << "TwoThree(pair={" << pair[0] + 1 << "," << pair[1] + 1 << "}, triple={"
         << triple[0] + 1 << "," << triple[1] + 1 << "," << triple[2] + 1 << "})";
    }
    return os.str();
  }
};

namespace detail {

template <class S>
void require_general_position(const std::array<Vec3<S>, 5>& pts) {
  std::vector<Vec3<S>> v(pts.begin(), pts.end());
  const GPResult gp = general_position_check(v);
  if (!gp.ok) {
    std::ostringstream os;
    os << "points not in general position (";
    switch (gp.kind) {
      case GPViolationKind::Coincident: os << "coincident"; break;
      case GPViolationKind::Collinear: os << "collinear"; break;
      case GPViolationKind::Coplanar: os << "coplanar"; break;
    }
    os << " witness:";
    for (auto i : gp.witness) os << " " << i + 1;
    os << ")";
    throw GeneralPositionError(os.str());
  }
}

}  // namespace detail

// Brute force over all 10 segment|triangle splits and all 5 point|tetrahedron
// candidates; exactly one witness exists for general-position input, and the
// exhaustive scan doubles as a per-instance uniqueness proof.
template <class S>
RadonPartition classify_k5(const std::array<Vec3<S>, 5>& pts) {
  detail::require_general_position(pts);
  std::vector<RadonPartition> witnesses;

  for (int i = 0; i < 5; ++i) {
    for (int j = i + 1; j < 5; ++j) {
      std::array<int, 3> rest{};
      int k = 0;
      for (int v = 0; v < 5; ++v)
        if (v != i && v != j) rest[k++] = v;
      const PierceResult r = segment_triangle_pierce<S>(
          {pts[i], pts[j]}, {pts[rest[0]], pts[rest[1]], pts[rest[2]]});
      if (r.kind == PierceKind::Degenerate)
        throw GeneralPositionError("degenerate piercing test on general-position input");
      if (r.kind == PierceKind::Pierce) {
        RadonPartition p;
        p.kind = RadonKind::TwoThree;
        p.pair = {i, j};
        p.triple = rest;
        p.pierce_sign = r.sign;
        witnesses.push_back(p);
      }
    }
  }
  for (int i = 0; i < 5; ++i) {
    std::array<Vec3<S>, 4> tetra{};
    int k = 0;
    for (int v = 0; v < 5; ++v)
      if (v != i) tetra[k++] = pts[v];
    if (point_in_tetrahedron(pts[i], tetra) == TetraSide::Inside) {
      RadonPartition p;
      p.kind = RadonKind::OneInsideFour;
      p.inner = i;
      witnesses.push_back(p);
    }
  }
  if (witnesses.size() != 1)
    throw std::logic_error("expected exactly one Radon partition, found " +
                           std::to_string(witnesses.size()));
  return witnesses.front();
}

// Signs of the probe vertex against the four face planes of the other four
// points, normalized so that the half-space containing the remaining vertex
// is positive. Faces are ordered by ascending omitted vertex.
template <class S>
std::array<int, 4> face_sign_vector(const std::array<Vec3<S>, 5>& pts, int probe) {
  detail::require_general_position(pts);
  std::array<int, 4> others{};
  int k = 0;
  for (int v = 0; v < 5; ++v)
    if (v != probe) others[k++] = v;
  std::array<int, 4> signs{};
  for (int omit = 0; omit < 4; ++omit) {
    std::array<int, 3> face{};
    int f = 0;
    for (int j = 0; j < 4; ++j)
      if (j != omit) face[f++] = others[j];
    const int remaining = others[omit];
    const PredicateOutcome sp =
        orient3d(pts[face[0]], pts[face[1]], pts[face[2]], pts[probe]);
    const PredicateOutcome sr =
        orient3d(pts[face[0]], pts[face[1]], pts[face[2]], pts[remaining]);
    if (sp.degenerate || sr.degenerate || sp.sign == 0 || sr.sign == 0)
      throw GeneralPositionError("degenerate face plane on general-position input");
    signs[omit] = sp.sign * sr.sign;
  }
  return signs;
}

}  // namespace stickknot
