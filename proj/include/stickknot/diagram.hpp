#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "stickknot/laurent.hpp"

namespace stickknot {

// Combinatorial knot/link diagram. Arcs are the strand pieces between
// crossing passages, numbered 0..num_arcs-1; each arc id occurs exactly twice
// over all crossings. Components without any crossing are counted as
// free_loops and carry no arcs.
struct Crossing {
  int sign = 0;  // det[over direction, under direction] in the projection plane
  int under_in = -1, under_out = -1;
  int over_in = -1, over_out = -1;
  bool inter_component = false;  // strands belong to different components

  // incident arcs counterclockwise starting from the incoming under-strand
  std::array<int, 4> pd_tuple() const {
    if (sign > 0) return {under_in, over_out, under_out, over_in};
    return {under_in, over_in, under_out, over_out};
  }
};

struct Diagram {
  int num_arcs = 0;
  int components = 1;
  int free_loops = 0;
  std::vector<Crossing> crossings;

  int writhe() const {
    int w = 0;
    for (const auto& c : crossings) w += c.sign;
    return w;
  }

  // "X[a,b,c,d] X[e,f,g,h] ..." with 1-based arc ids, PD convention
  std::string pd_string() const;

  // Parses a PD code of a knot (single component, arcs numbered consecutively
  // along the strand, as in published tables). Crossing signs are inferred
  // from the arc numbering.
  static Diagram from_pd(const std::string& text);
};

inline constexpr int kMaxBracketCrossings = 26;

// Kauffman bracket by the full state sum: each of the 2^n smoothing states
// contributes A^(a-b) * delta^(loops-1) with delta = -A^2 - A^-2.
LaurentPolynomial kauffman_bracket(const Diagram& d);

// (-A^3)^(-writhe) * bracket; equals 1 for the unknot. Knot diagrams only.
LaurentPolynomial jones_normalized(const Diagram& d);

// |det| of the Goeritz matrix of a checkerboard coloring with one row and
// column deleted: 1 for the unknot, 3 for trefoils, 5 for the figure-eight.
long long knot_determinant(const Diagram& d);

}  // namespace stickknot
