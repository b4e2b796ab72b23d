#include <doctest.h>

#include <random>

#include "mds/errors.hpp"
#include "mds/checker.hpp"
#include "mds/wps.hpp"

using namespace mds;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

TetraTuple tuple(const char* xl, const char* xr, const char* y0, const char* z0) {
  return {q(xl), q(xr), q(y0), q(z0)};
}

const TetraTuple kEx1 = tuple("-3/5", "6/17", "1/3", "1/2");
const TetraTuple kEx2 = tuple("-2/3", "1/3", "1/2", "1/2");
const TetraTuple kEx3 = tuple("-5/18", "5/7", "2/5", "1");

Polygon4 polygon(const char* yr) { return Polygon4({q("-3/4"), q("1/2")}, {q("1/4"), q(yr)}); }

Rational value(const CheckReport& r, const std::string& key) {
  for (const auto& [k, v] : r.values) {
    if (k == key) return std::get<Rational>(v);
  }
  FAIL("missing value " << key);
  return 0;
}

bool holds(const CheckReport& r, const char* id) {
  const ConditionResult* c = r.condition(id);
  REQUIRE(c != nullptr);
  return c->holds;
}

Rational small_rational(std::mt19937_64& rng, long lo, long hi, long max_den) {
  std::uniform_int_distribution<long> den(1, max_den);
  const long d = den(rng);
  std::uniform_int_distribution<long> num(lo * d, hi * d);
  return Rational(Integer(num(rng)), Integer(d));
}

// Random valid polytope through a crossing point inside the standard triangle.
std::optional<Polytope3> random_polytope(std::mt19937_64& rng) {
  const Rational xl = -small_rational(rng, 0, 1, 6), xr = small_rational(rng, 0, 1, 6);
  if (xl.sign() == 0 || xr.sign() == 0) return std::nullopt;
  const Rational cy = small_rational(rng, 0, 1, 3), cz = small_rational(rng, 0, 1, 3);
  if (cy + cz > Rational(1)) return std::nullopt;
  const Rational dy = small_rational(rng, -2, 2, 4), dz = small_rational(rng, -2, 2, 4);
  const Rational ey = small_rational(rng, -1, 1, 2), ez = small_rational(rng, -1, 1, 2);
  try {
    return Polytope3({xl, cy + xl * dy + ey, cz + xl * dz + ez}, {xr, cy + xr * dy, cz + xr * dz});
  } catch (const InvalidPolytope&) {
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("plane examples") {
  const CheckReport a = check_2d(polygon("3/4"));
  CHECK(a.verdict == Verdict::NotMDS);
  CHECK(a.branch == "T1.B");
  CHECK(value(a, "w") == Rational(1));
  CHECK(value(a, "n") == Rational(1));
  CHECK(holds(a, "T1.(3)"));
  CHECK(a.normalization.shears == std::vector<Integer>{-3});
  CHECK(a.normalization.m == 4);

  CHECK(check_2d(polygon("1/2")).verdict == Verdict::Inconclusive);
  CHECK(check_2d(polygon("1")).verdict == Verdict::NotMDS);
  CHECK(check_2d(polygon("7/6")).verdict == Verdict::NotMDS);
}

TEST_CASE("plane criterion is stable under the scale factor and shears") {
  std::mt19937_64 rng(41);
  int seen = 0;
  for (int t = 0; t < 300; ++t) {
    const Rational xl = -small_rational(rng, 0, 1, 6), xr = small_rational(rng, 0, 1, 6);
    if (xl.sign() == 0 || xr.sign() == 0) continue;
    const Rational c = small_rational(rng, 0, 1, 4), s = small_rational(rng, -2, 2, 5);
    std::optional<Polygon4> p;
    try {
      p.emplace(Point2{xl, c + xl * s + small_rational(rng, -1, 1, 2)}, Point2{xr, c + xr * s});
    } catch (const InvalidPolytope&) {
      continue;
    }
    const CheckReport base = check_2d(*p);
    for (int k = 2; k <= 3; ++k) {
      CheckOptions o;
      o.m_factor = k;
      const CheckReport r = check_2d(*p, o);
      CHECK(r.verdict == base.verdict);
      CHECK(r.normalization.m == base.normalization.m * k);
    }
    for (long sh : {-2L, 1L, 3L}) CHECK(check_2d(apply_shear(*p, sh)).verdict == base.verdict);
    ++seen;
  }
  CHECK(seen >= 50);
}

TEST_CASE("spatial examples") {
  const CheckReport a = check_3d(to_polytope(kEx1));
  CHECK(a.verdict == Verdict::NotMDS);
  CHECK(value(a, "w") == q("81/85"));
  CHECK(value(a, "n") == Rational(1));
  CHECK(a.normalization.m == 170);

  const CheckReport c = check_3d(to_polytope(kEx3));
  CHECK(c.verdict == Verdict::Inconclusive);
  CHECK_FALSE(holds(c, "T2.(2a)"));
  CHECK(holds(c, "T2.(1)"));
  CHECK(value(c, "n") == Rational(4));

  const CheckReport wide = check_3d(Polytope3({-1, 0, 0}, {1, 0, 0}));
  CHECK(wide.verdict == Verdict::Inconclusive);
  CHECK_FALSE(holds(wide, "T2.(1)"));
}

TEST_CASE("single-point criterion") {
  CHECK(check_3d_n1(to_polytope(kEx1)).verdict == Verdict::NotMDS);
  const CheckReport b = check_3d_n1(to_polytope(kEx2));
  CHECK(b.verdict == Verdict::NotMDS);
  CHECK(value(b, "w") == Rational(1));
  // Integral slopes put the point on the vertex line. With n = 1 that forces x_L < -1.
  const CheckReport on_line = check_3d_n1(to_polytope(tuple("-3/2", "1/2", "0", "0")));
  CHECK(on_line.verdict == Verdict::Inconclusive);
  CHECK_FALSE(holds(on_line, "C1.(3)"));
  CHECK_THROWS_AS(check_3d_n1(to_polytope(tuple("-1/2", "1/2", "0", "0"))), NotSizeOne);
  CHECK_THROWS_AS(check_3d_n1(to_polytope(kEx3)), NotSizeOne);
}

TEST_CASE("tuple criterion") {
  const CheckReport a = check_tetra(kEx1);
  CHECK(a.verdict == Verdict::NotMDS);
  CHECK(a.branch == "C3.direct");
  CHECK(check_tetra(kEx2).verdict == Verdict::NotMDS);
  const CheckReport c = check_tetra(kEx3);
  CHECK(c.verdict == Verdict::Inconclusive);
  CHECK_FALSE(holds(c, "C3.(2)"));
  CHECK(value(c, "n") == Rational(4));
  CHECK(value(c, "right_size") == Rational(5));
  CHECK_FALSE(holds(check_tetra(tuple("-1/2", "1/2", "0", "0")), "C3.(3)"));
}

TEST_CASE("spatial criterion is stable under the scale factor and shears") {
  std::mt19937_64 rng(43);
  int seen = 0;
  for (int t = 0; t < 400 && seen < 60; ++t) {
    const auto p = random_polytope(rng);
    if (!p) continue;
    const CheckReport base = check_3d(*p);
    CheckOptions o;
    o.m_factor = 2;
    CHECK(check_3d(*p, o).verdict == base.verdict);
    CHECK(check_3d(apply_shear(*p, 1, -2)).verdict == base.verdict);
    ++seen;
  }
  CHECK(seen >= 30);
}

TEST_CASE("spatial conditions match the nonvanishing conditions") {
  std::mt19937_64 rng(47);
  int compared = 0;
  for (int t = 0; t < 3000 && compared < 150; ++t) {
    const auto p = random_polytope(rng);
    if (!p) continue;
    const CheckReport r = check_3d(*p);
    if (value(r, "n") < Rational(1)) continue;
    const Polytope3 norm = shear_normalize_3d(*p).polytope;
    const auto prob = lemma_problem_3d(norm, r.normalization.m);
    if (!prob) continue;
    const bool spatial = holds(r, "T2.(2b)") && holds(r, "T2.(3a)") && holds(r, "T2.(3b.i)") &&
                         holds(r, "T2.(3b.ii)") && holds(r, "T2.(3b.iii)");
    CHECK(spatial == lemma42_nonvanish(*prob).nonvanish);
    ++compared;
  }
  CHECK(compared >= 50);
}

TEST_CASE("single-point criterion agrees with the spatial one when the slice is one point") {
  std::mt19937_64 rng(53);
  int compared = 0;
  for (int t = 0; t < 3000 && compared < 100; ++t) {
    const auto p = random_polytope(rng);
    if (!p) continue;
    const CheckReport r = check_3d(*p);
    if (value(r, "n") != Rational(1)) continue;
    CHECK(check_3d_n1(*p).verdict == r.verdict);
    ++compared;
  }
  CHECK(compared >= 30);
}

TEST_CASE("tuple and spatial criteria agree on searched weights") {
  int compared = 0, reflected = 0;
  for (const auto& row : search(3, 40)) {
    const auto t = relation_tetra(row.weights, row.relation);
    if (!t) continue;
    const CheckReport a = check_tetra(*t);
    const CheckReport b = check_3d(to_polytope(*t));
    if (a.branch == "C3.reflected") {
      // The spatial criterion applies to the mirror image instead.
      CHECK(b.verdict == Verdict::Inconclusive);
      const TetraTuple mirror{-t->x_right, -t->x_left, -t->y0, -t->z0};
      CHECK(check_3d(to_polytope(mirror)).verdict == Verdict::NotMDS);
      ++reflected;
    } else {
      CHECK(a.verdict == b.verdict);
    }
    ++compared;
  }
  CHECK(compared >= 5);
  CHECK(reflected >= 1);
}

TEST_CASE("invalid scale factor") {
  CheckOptions o;
  o.m_factor = 0;
  CHECK_THROWS_AS(check_2d(polygon("3/4"), o), std::invalid_argument);
}
