#pragma once

#include "spacecross/errors.hpp"
#include "spacecross/quadext.hpp"
#include "spacecross/rational.hpp"

#include <array>
#include <string>

namespace spacecross {

template <class T>
struct Vec3 {
  T x{}, y{}, z{};

  const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(const T& s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend bool operator==(const Vec3& a, const Vec3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

  template <class U>
  Vec3<U> as() const {
    return {U(x), U(y), U(z)};
  }
};

template <class T>
T dot(const Vec3<T>& a, const Vec3<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <class T>
Vec3<T> cross(const Vec3<T>& a, const Vec3<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

using Point3 = Vec3<Rational>;

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Segment3 {
  Point3 p, q;
};

/// Line in Plücker form: direction and moment (moment = point x direction).
/// Projective: (dir, mom) and (c dir, c mom) denote the same line for c != 0.
template <class T>
struct BasicLine {
  Vec3<T> dir;
  Vec3<T> mom;
};

using PlueckerLine = BasicLine<Rational>;
using AlgebraicLine = BasicLine<QuadExt>;

/// (q - p, p x q); throws DegenerateInput when p == q.
PlueckerLine plucker_from_segment(const Segment3& s);

/// Line through two distinct rational points.
inline PlueckerLine line_through(const Point3& p, const Point3& q) { return plucker_from_segment({p, q}); }

template <class T>
T incidence(const BasicLine<T>& a, const BasicLine<T>& b) {
  return dot(a.dir, b.mom) + dot(b.dir, a.mom);
}

/// Sign of the reciprocal product; zero iff the two lines are coplanar.
int side_product(const PlueckerLine& a, const PlueckerLine& b);

AlgebraicLine to_algebraic(const PlueckerLine& l);

/// Rational orientation test of (b - a) x (c - a); +1 is counter-clockwise.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Signed volume sign of the tetrahedron (a, b, c, d).
int orient3d(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

std::string to_string(const Point3& p);

}  // namespace spacecross
