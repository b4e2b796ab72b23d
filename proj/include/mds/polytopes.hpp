#pragma once

#include <utility>

#include "mds/rational.hpp"

namespace mds {

struct Point2 {
  Rational x, y;
  friend bool operator==(const Point2&, const Point2&) = default;
};

struct Point3 {
  Rational x, y, z;
  friend bool operator==(const Point3&, const Point3&) = default;
};

/// Plane polygon with vertices (0,0), (0,1), a left vertex and a right vertex.
///
/// The segment joining the left and right vertices has to cross the line x = 0
/// inside the segment [(0,0), (0,1)], so that the polygon is the union of the
/// two triangles spanned by that segment and each outer vertex. When the
/// crossing is at (0,0) or (0,1) the polygon degenerates to a triangle.
class Polygon4 {
 public:
  /// Throws InvalidPolytope.
  Polygon4(Point2 left, Point2 right);

  const Point2& left() const { return left_; }
  const Point2& right() const { return right_; }

  /// y-coordinate where the segment left--right meets x = 0.
  Rational crossing() const;
  bool is_triangle() const;

  friend bool operator==(const Polygon4&, const Polygon4&) = default;

 private:
  Point2 left_, right_;
};

/// Polytope with vertices (0,0,0), (0,1,0), (0,0,1), a left and a right vertex.
/// The segment between the outer vertices crosses x = 0 inside the standard
/// triangle, making the polytope a union of two pyramids over that triangle.
class Polytope3 {
 public:
  /// Throws InvalidPolytope.
  Polytope3(Point3 left, Point3 right);

  const Point3& left() const { return left_; }
  const Point3& right() const { return right_; }

  /// (y, z) where the segment left--right meets x = 0.
  std::pair<Rational, Rational> crossing() const;
  /// True when (0,0,0), left and right are collinear.
  bool is_tetrahedron() const;

  friend bool operator==(const Polytope3&, const Polytope3&) = default;

 private:
  Point3 left_, right_;
};

/// Tetrahedron whose outer vertices are x_left (1, y0, z0) and x_right (1, y0, z0).
/// The general form carries r - 2 slopes; the three-dimensional tools use two.
struct TetraTuple {
  Rational x_left, x_right, y0, z0;

  /// Throws InvalidPolytope unless x_left < 0 < x_right.
  void validate() const;
  friend bool operator==(const TetraTuple&, const TetraTuple&) = default;
};

Polytope3 to_polytope(const TetraTuple& t);

/// Lattice points {(x, b + i) : 0 <= i < size} of one column of m * polygon.
struct ColumnProfile {
  Integer x;
  Integer size;
  Integer b;  // meaningless when size == 0
};

/// Lattice points {(x, b + i, c + j) : i, j >= 0, i + j < size} of one slice.
struct SliceProfile {
  Integer x;
  Integer size;
  Integer b, c;  // meaningless when size == 0
};

struct Shear2 {
  Polygon4 polygon;
  Integer shear;
};

struct Shear3 {
  Polytope3 polytope;
  Integer shear_y, shear_z;
};

/// (x, y) -> (x, y + a x) with a = -floor(y_R / x_R), giving 0 <= y_R / x_R < 1.
Shear2 shear_normalize_2d(const Polygon4& p);
Shear3 shear_normalize_3d(const Polytope3& p);

Polygon4 apply_shear(const Polygon4& p, const Integer& a);
Polytope3 apply_shear(const Polytope3& p, const Integer& ay, const Integer& az);

/// Least m > 0 with m * p integral.
Integer integrality_scale(const Polygon4& p);
Integer integrality_scale(const Polytope3& p);

Rational width(const Polygon4& p);
Rational width(const Polytope3& p);
Rational width(const TetraTuple& t);

/// Column x of m * p. Throws OutOfRange unless m x_L <= x <= m x_R, and
/// InvalidPolytope when m * p is not integral.
ColumnProfile column(const Polygon4& p, const Integer& m, const Integer& x);
SliceProfile slice(const Polytope3& p, const Integer& m, const Integer& x);

/// Closed forms for the slices next to the two outer vertices of a tetrahedron.
Integer tetra_slice_size_left(const TetraTuple& t);
Integer tetra_slice_size_right(const TetraTuple& t, const Integer& n);

enum class Plane { XY, XZ };

Polygon4 project(const Polytope3& p, Plane plane);

}  // namespace mds
