#include "mds/polytopes.hpp"

#include <algorithm>

#include "mds/errors.hpp"

namespace mds {

namespace {

Integer clamp_size(const Integer& v) { return v < 0 ? Integer(0) : v; }

void require_outer_vertices(const Rational& x_left, const Rational& x_right) {
  if (!(x_left < Rational(0))) throw InvalidPolytope("left vertex must have x < 0, got " + x_left.str());
  if (!(x_right > Rational(0))) throw InvalidPolytope("right vertex must have x > 0, got " + x_right.str());
}

void require_integral(const Rational& v, const char* what) {
  if (!v.is_integer()) {
    throw InvalidPolytope(std::string("scaled polytope is not integral: ") + what + " = " + v.str());
  }
}

void require_in_range(const Integer& x, const Rational& lo, const Rational& hi) {
  if (Rational(x) < lo || Rational(x) > hi) {
    throw OutOfRange("coordinate " + to_string(x) + " outside [" + lo.str() + ", " + hi.str() + "]");
  }
}

}  // namespace

Polygon4::Polygon4(Point2 left, Point2 right) : left_(std::move(left)), right_(std::move(right)) {
  require_outer_vertices(left_.x, right_.x);
  const Rational y = crossing();
  if (y < Rational(0) || y > Rational(1)) {
    throw InvalidPolytope("segment between outer vertices meets x = 0 at y = " + y.str() +
                          ", outside [0, 1]");
  }
}

Rational Polygon4::crossing() const {
  return left_.y - left_.x * (right_.y - left_.y) / (right_.x - left_.x);
}

bool Polygon4::is_triangle() const {
  const Rational y = crossing();
  return y == Rational(0) || y == Rational(1);
}

Polytope3::Polytope3(Point3 left, Point3 right) : left_(std::move(left)), right_(std::move(right)) {
  require_outer_vertices(left_.x, right_.x);
  const auto [y, z] = crossing();
  if (y < Rational(0) || z < Rational(0) || y + z > Rational(1)) {
    throw InvalidPolytope("segment between outer vertices meets x = 0 at (" + y.str() + ", " + z.str() +
                          "), outside the standard triangle");
  }
}

std::pair<Rational, Rational> Polytope3::crossing() const {
  const Rational t = -left_.x / (right_.x - left_.x);
  return {left_.y + t * (right_.y - left_.y), left_.z + t * (right_.z - left_.z)};
}

bool Polytope3::is_tetrahedron() const {
  const auto [y, z] = crossing();
  return y.sign() == 0 && z.sign() == 0;
}

void TetraTuple::validate() const { require_outer_vertices(x_left, x_right); }

Polytope3 to_polytope(const TetraTuple& t) {
  t.validate();
  return Polytope3({t.x_left, t.x_left * t.y0, t.x_left * t.z0}, {t.x_right, t.x_right * t.y0, t.x_right * t.z0});
}

Polygon4 apply_shear(const Polygon4& p, const Integer& a) {
  const Rational s(a);
  return Polygon4({p.left().x, p.left().y + s * p.left().x}, {p.right().x, p.right().y + s * p.right().x});
}

Polytope3 apply_shear(const Polytope3& p, const Integer& ay, const Integer& az) {
  const Rational sy(ay), sz(az);
  const auto& l = p.left();
  const auto& r = p.right();
  return Polytope3({l.x, l.y + sy * l.x, l.z + sz * l.x}, {r.x, r.y + sy * r.x, r.z + sz * r.x});
}

Shear2 shear_normalize_2d(const Polygon4& p) {
  const Integer a = -floor(p.right().y / p.right().x);
  return {apply_shear(p, a), a};
}

Shear3 shear_normalize_3d(const Polytope3& p) {
  const Integer ay = -floor(p.right().y / p.right().x);
  const Integer az = -floor(p.right().z / p.right().x);
  return {apply_shear(p, ay, az), ay, az};
}

Integer integrality_scale(const Polygon4& p) {
  Integer m = 1;
  for (const Rational* v : {&p.left().x, &p.left().y, &p.right().x, &p.right().y}) m = lcm(m, v->den());
  return m;
}

Integer integrality_scale(const Polytope3& p) {
  Integer m = 1;
  for (const Point3* q : {&p.left(), &p.right()}) {
    for (const Rational* v : {&q->x, &q->y, &q->z}) m = lcm(m, v->den());
  }
  return m;
}

Rational width(const Polygon4& p) { return p.right().x - p.left().x; }
Rational width(const Polytope3& p) { return p.right().x - p.left().x; }
Rational width(const TetraTuple& t) { return t.x_right - t.x_left; }

ColumnProfile column(const Polygon4& p, const Integer& m, const Integer& x) {
  const Rational mr(m);
  require_integral(mr * p.left().x, "m x_L");
  require_integral(mr * p.left().y, "m y_L");
  require_integral(mr * p.right().x, "m x_R");
  require_integral(mr * p.right().y, "m y_R");
  require_in_range(x, mr * p.left().x, mr * p.right().x);

  // The column runs between the edges from the outer vertex on this side to
  // (0,0) and to (0,m).
  const Point2& v = x <= 0 ? p.left() : p.right();
  const Rational xr(x);
  const Rational lower = xr * v.y / v.x;
  const Rational upper = mr + xr * (v.y - Rational(1)) / v.x;
  const Integer lo = ceil(lower);
  return {x, clamp_size(floor(upper) - lo + 1), lo};
}

SliceProfile slice(const Polytope3& p, const Integer& m, const Integer& x) {
  const Rational mr(m);
  for (const Point3* q : {&p.left(), &p.right()}) {
    require_integral(mr * q->x, "m x");
    require_integral(mr * q->y, "m y");
    require_integral(mr * q->z, "m z");
  }
  require_in_range(x, mr * p.left().x, mr * p.right().x);

  // Cross-section of the pyramid with apex m * v over m * (standard triangle):
  // {y >= alpha, z >= beta, y + z <= gamma}.
  const Point3& v = x <= 0 ? p.left() : p.right();
  const Rational xr(x);
  const Rational alpha = xr * v.y / v.x;
  const Rational beta = xr * v.z / v.x;
  const Rational gamma = mr + xr * (v.y + v.z - Rational(1)) / v.x;
  const Integer b = ceil(alpha);
  const Integer c = ceil(beta);
  return {x, clamp_size(1 + floor(gamma) - b - c), b, c};
}

Integer tetra_slice_size_left(const TetraTuple& t) {
  t.validate();
  const Rational inv = Rational(1) / t.x_left;
  return clamp_size(1 + floor(t.y0 + t.z0 - inv) - ceil(t.y0) - ceil(t.z0));
}

Integer tetra_slice_size_right(const TetraTuple& t, const Integer& n) {
  t.validate();
  if (n < 1) throw std::invalid_argument("tetra_slice_size_right: n must be positive");
  const Rational k(n - 1);
  const Rational inv = Rational(1) / t.x_right;
  return clamp_size(1 - ceil(k * (t.y0 + t.z0 - inv)) + floor(k * t.y0) + floor(k * t.z0));
}

Polygon4 project(const Polytope3& p, Plane plane) {
  const auto& l = p.left();
  const auto& r = p.right();
  if (plane == Plane::XY) return Polygon4({l.x, l.y}, {r.x, r.y});
  return Polygon4({l.x, l.z}, {r.x, r.z});
}

}  // namespace mds
