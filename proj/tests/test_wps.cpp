#include <doctest.h>

#include <cstdlib>
#include <set>

#include "mds/errors.hpp"
#include "mds/polytopes.hpp"
#include "mds/wps.hpp"

using namespace mds;

namespace {

Rational q(const char* s) { return Rational::parse(s); }

IntVec iv(std::initializer_list<long> v) {
  IntVec out;
  for (long x : v) out.emplace_back(x);
  return out;
}

Relation rel(std::int64_t e, std::int64_t f, std::vector<std::int64_t> g, std::int64_t d) { return {e, f, std::move(g), d}; }

const Relation* find(const std::vector<Relation>& rels, const Relation& r) {
  for (const auto& x : rels) {
    if (x == r) return &x;
  }
  return nullptr;
}

const TetraTuple kEx1{q("-3/5"), q("6/17"), q("1/3"), q("1/2")};
const TetraTuple kEx3{q("-5/18"), q("5/7"), q("2/5"), q("1")};

}  // namespace

TEST_CASE("weights validation") {
  CHECK_THROWS_AS(WpsWeights({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(WpsWeights({1, 2, 0, 4}), std::invalid_argument);
  CHECK(WpsWeights({1, 2, 3, 4}).dim() == 3);
  CHECK(WpsWeights({1, 2, 3, 4, 5}).dim() == 4);
}

TEST_CASE("relations") {
  const auto r1 = find_relations(WpsWeights({47, 13, 12, 30}));
  REQUIRE(r1.size() == 1);
  CHECK(r1[0] == rel(1, 1, {5, 2}, 60));
  CHECK(find(find_relations(WpsWeights({17, 20, 18, 27})), rel(2, 1, {3, 2}, 54)));
  CHECK(find(find_relations(WpsWeights({19, 11, 13, 52, 52})), rel(1, 3, {4, 1, 1}, 52)));
  // g = (15, 10, 6) is not pairwise coprime.
  CHECK(find_relations(WpsWeights({1, 1, 2, 3, 5})).empty());
  CHECK(find_relations(WpsWeights({1, 1, 3, 3})).size() == 2);
  CHECK(find_relations(WpsWeights({1, 1, 2, 2})).size() == 1);
}

TEST_CASE("relation invariants over a range of weights") {
  for (std::int64_t a = 1; a <= 12; ++a) {
    for (std::int64_t b = 1; b <= 12; ++b) {
      for (std::int64_t c1 = 1; c1 <= 12; ++c1) {
        for (std::int64_t c2 = c1; c2 <= 12; ++c2) {
          const WpsWeights w({a, b, c1, c2});
          const auto rels = find_relations(w);
          for (std::size_t i = 0; i < rels.size(); ++i) {
            const auto& r = rels[i];
            CHECK(r.e * a + r.f * b == r.d);
            CHECK(r.g[0] * c1 == r.d);
            CHECK(r.g[1] * c2 == r.d);
            CHECK(std::gcd(r.g[0], r.g[1]) == 1);
            CHECK(std::gcd(std::gcd(r.e, r.f), r.g[0]) == 1);
            CHECK(std::gcd(std::gcd(r.e, r.f), r.g[1]) == 1);
            if (i > 0) CHECK(std::pair(rels[i - 1].e, rels[i - 1].f) < std::pair(r.e, r.f));
          }
          // Exhaustive count of solutions for comparison.
          const std::int64_t d = std::lcm(c1, c2);
          std::size_t expect = 0;
          if (std::gcd(d / c1, d / c2) == 1) {
            for (std::int64_t e = 1; e * a < d; ++e) {
              if ((d - e * a) % b != 0) continue;
              const std::int64_t f = (d - e * a) / b, g = std::gcd(e, f);
              if (std::gcd(g, d / c1) == 1 && std::gcd(g, d / c2) == 1) ++expect;
            }
          }
          CHECK(rels.size() == expect);
        }
      }
    }
  }
}

TEST_CASE("width") {
  CHECK(wps_width(WpsWeights({17, 20, 18, 27}), rel(2, 1, {3, 2}, 54)) == q("81/85"));
  CHECK(wps_width(WpsWeights({47, 13, 12, 30}), rel(1, 1, {5, 2}, 60)) == q("600/611"));
  const WpsWeights p3({7, 18, 5, 25});
  const auto rels = find_relations(p3);
  REQUIRE(!rels.empty());
  CHECK(wps_width(p3, rels[0]) == q("125/126"));
}

TEST_CASE("delta and gamma slices") {
  CHECK(delta_slice(rel(2, 1, {3, 2}, 54), WpsWeights({17, 20, 18, 27})).size == 1);
  CHECK(delta_slice(rel(1, 1, {4, 3}, 60), WpsWeights({19, 41, 15, 20})).size == 3);
  CHECK(delta_slice(rel(2, 1, {3, 2}, 54), WpsWeights({11, 32, 18, 27})).size == 2);
  CHECK(gamma_slice(rel(2, 1, {3, 2}, 54), WpsWeights({17, 20, 18, 27}), 1).size == 1);

  const WpsWeights p3({7, 18, 5, 25});
  const Relation r3 = find_relations(p3).at(0);
  CHECK(delta_slice(r3, p3).size == 4);
  CHECK(gamma_slice(r3, p3, 4).size == 5);

  // Slice of size 3 in two free coordinates has 6 points.
  CHECK(delta_slice(rel(1, 1, {4, 3}, 60), WpsWeights({19, 41, 15, 20})).points.size() == 6);
  CHECK_THROWS_AS(gamma_slice(r3, p3, 0), std::invalid_argument);
}

TEST_CASE("any relation with n = 1 has a single gamma point") {
  for (const auto& w : {WpsWeights({17, 20, 18, 27}), WpsWeights({47, 13, 12, 30}), WpsWeights({43, 17, 15, 20})}) {
    for (const auto& r : find_relations(w)) CHECK(gamma_slice(r, w, 1).size == 1);
  }
}

TEST_CASE("weighted projective criterion") {
  const CheckReport a = check_wps(WpsWeights({17, 20, 18, 27}));
  CHECK(a.verdict == Verdict::NotMDS);
  REQUIRE(a.relations.size() >= 1);
  CHECK(a.relations[0].condition("P.(2)")->holds);

  CHECK(check_wps(WpsWeights({7, 18, 5, 25})).verdict == Verdict::Inconclusive);
  const CheckReport c = check_wps(WpsWeights({47, 13, 12, 30, 60}));
  CHECK(c.verdict == Verdict::NotMDS);
  bool found = false;
  for (const auto& sub : c.relations) {
    if (sub.verdict == Verdict::NotMDS) {
      for (const auto& [k, v] : sub.values) {
        if (k == "relation") CHECK(std::get<RatVec>(v) == RatVec{1, 1, 5, 2, 1});
        if (k == "n") CHECK(std::get<Rational>(v) == Rational(1));
      }
      found = true;
    }
  }
  CHECK(found);

  const CheckReport none = check_wps(WpsWeights({1, 1, 2, 3, 5}));
  CHECK(none.verdict == Verdict::Inconclusive);
  CHECK(none.relations.empty());
}

TEST_CASE("fan of a tetrahedron") {
  const FanData f1 = tetra_fan(kEx1);
  CHECK(f1.rays[0] == iv({5, -2, -2}));
  CHECK(f1.rays[1] == iv({-2, -1, -1}));
  CHECK(f1.rays[2] == iv({-1, 3, 0}));
  CHECK(f1.rays[3] == iv({-1, 0, 2}));
  CHECK(f1.weights == WpsWeights({17, 20, 18, 27}));
  CHECK(f1.index == 1);
  CHECK(tetra_fan(kEx3).weights == WpsWeights({7, 18, 5, 25}));
  CHECK(tetra_fan(kEx3).index == 1);
}

TEST_CASE("normalized weights") {
  const auto a = normalize_weights(WpsWeights({17, 20, 18, 27}));
  CHECK(a.reduced);
  CHECK(a.canonical == WpsWeights({17, 20, 18, 27}));
  const auto b = normalize_weights(WpsWeights({6, 18, 33, 33}));
  CHECK_FALSE(b.reduced);
  CHECK(b.canonical == WpsWeights({2, 6, 11, 11}));
  const auto c = normalize_weights(WpsWeights({4, 6, 8, 3}));
  CHECK_FALSE(c.reduced);
  CHECK(c.canonical == WpsWeights({2, 3, 3, 4}));
  // Canonical forms are fixed points.
  for (const auto& w : {WpsWeights({12, 18, 30, 7}), WpsWeights({10, 15, 6, 30, 45})}) {
    const auto n = normalize_weights(w);
    CHECK(normalize_weights(n.canonical).canonical == n.canonical);
    CHECK(normalize_weights(n.canonical).reduced);
  }
}

TEST_CASE("tuple reconstruction from weights round-trips through the fan") {
  const WpsWeights w({17, 20, 18, 27});
  const auto t = relation_tetra(w, rel(2, 1, {3, 2}, 54));
  REQUIRE(t.has_value());
  CHECK(*t == kEx1);
  const FanData f = tetra_fan(*t);
  CHECK(f.weights == w);
  CHECK(f.index == 1);
}

TEST_CASE("cross-representation consistency on small searches") {
  for (const auto& row : search(3, 50)) {
    const auto t = relation_tetra(row.weights, row.relation);
    if (!t) continue;
    const FanData fan = tetra_fan(*t);
    if (fan.index != 1 || fan.weights != row.weights) continue;
    CHECK(width(*t) == wps_width(row.weights, row.relation));
    CHECK(tetra_slice_size_left(*t) == row.n);
    CHECK(tetra_slice_size_right(*t, row.n) == gamma_slice(row.relation, row.weights, row.n).size);
    const bool tuple_integral = (Rational(row.n) * t->y0).is_integer() && (Rational(row.n) * t->z0).is_integer();
    const std::int64_t big_g = row.relation.g[0] * row.relation.g[1];
    const bool wps_integral = (row.n * row.weights.b()) % big_g == 0 && (row.n * row.weights.a()) % big_g == 0;
    CHECK(tuple_integral == wps_integral);
    CHECK(check_tetra(*t).verdict == Verdict::NotMDS);
  }
}

TEST_CASE("search") {
  CHECK(search(3, 13).empty());
  const auto rows = search(3, 50);
  // Sorted by (c-weights, a, b) and every row passes the criterion on its own.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& x = rows[i - 1].weights;
    const auto& y = rows[i].weights;
    const std::vector<std::int64_t> kx{x.c()[0], x.c()[1], x.a(), x.b()}, ky{y.c()[0], y.c()[1], y.a(), y.b()};
    CHECK(kx < ky);
  }
  for (const auto& r : rows) {
    CHECK(check_wps(r.weights).verdict == Verdict::NotMDS);
    CHECK(normalize_weights(r.weights).reduced);
  }
  CHECK(search(3, 50, 3) == rows);
}

TEST_CASE("search finds exactly the reduced tuples that pass check_wps") {
  std::set<std::vector<std::int64_t>> expected;
  const std::int64_t bound = 28;
  for (std::int64_t c1 = 1; c1 < bound; ++c1) {
    for (std::int64_t c2 = c1; c2 < bound; ++c2) {
      for (std::int64_t a = 1; a < bound; ++a) {
        for (std::int64_t b = 1; b < bound; ++b) {
          const WpsWeights w({a, b, c1, c2});
          if (normalize_weights(w).reduced && check_wps(w).verdict == Verdict::NotMDS) expected.insert(w.all());
        }
      }
    }
  }
  std::set<std::vector<std::int64_t>> got;
  for (const auto& r : search(3, bound)) got.insert(r.weights.all());
  CHECK(got == expected);
  CHECK(!got.empty());
}

TEST_CASE("search honors MDS_ORACLE_JOBS when jobs is 0") {
  setenv("MDS_ORACLE_JOBS", "2", 1);
  const auto rows = search(3, 40, 0);
  unsetenv("MDS_ORACLE_JOBS");
  CHECK(rows == search(3, 40, 1));
}
