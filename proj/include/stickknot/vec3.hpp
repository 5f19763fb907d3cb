#pragma once

#include <array>
#include <cmath>
#include <cstdlib>

#include "stickknot/rational.hpp"

namespace stickknot {

// Point/vector in 3-space. S is either double (float mode) or Rational
// (exact mode); an embedding never mixes the two because the scalar type is
// fixed at compile time.
template <class S>
struct Vec3 {
  S x{}, y{}, z{};

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(const S& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend bool operator!=(const Vec3& a, const Vec3& b) { return !(a == b); }
};

template <class S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

using Vec3d = Vec3<double>;
using Vec3q = Vec3<Rational>;

template <class S>
struct Segment {
  Vec3<S> p, q;
};

// Ordered triangle; orientation (the direction of cross(b-a, c-a)) is meaningful.
template <class S>
struct Triangle {
  Vec3<S> a, b, c;
};

inline Vec3d to_double(const Vec3q& v) {
  return {static_cast<double>(v.x), static_cast<double>(v.y), static_cast<double>(v.z)};
}

inline Vec3q to_rational(const Vec3d& v) {
  return {Rational(v.x), Rational(v.y), Rational(v.z)};
}

inline double magnitude_bound(const Vec3d& v) {
  return std::max({std::abs(v.x), std::abs(v.y), std::abs(v.z)});
}

}  // namespace stickknot
