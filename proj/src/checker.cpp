#include "mds/checker.hpp"

#include <algorithm>

#include "mds/errors.hpp"

namespace mds {

namespace {

Rational R(const Integer& v) { return Rational(v); }

Integer scaled(const Integer& m, const Rational& v) {
  const Rational s = Rational(m) * v;
  if (!s.is_integer()) throw InvalidPolytope("scaled coordinate " + s.str() + " is not integral");
  return s.num();
}

Verdict verdict_of(const std::vector<ConditionResult>& conds) {
  return std::all_of(conds.begin(), conds.end(), [](const ConditionResult& c) { return c.holds; })
             ? Verdict::NotMDS
             : Verdict::Inconclusive;
}

void require_factor(const Integer& k) {
  if (k < 1) throw std::invalid_argument("m factor must be a positive integer");
}

// Sizes of the columns/slices at x_R m, x_R m - 1, ..., x_R m - n + 1, stopping
// at the first one that differs from 1, 2, ..., n.
template <typename SizeAt>
std::pair<bool, RatVec> staircase(const Integer& mx_right, const Integer& mx_left, const Integer& n,
                                  SizeAt size_at) {
  RatVec sizes;
  if (n < 1) return {false, sizes};
  for (Integer k = 1; k <= n; ++k) {
    const Integer x = mx_right - k + 1;
    if (x < mx_left) return {false, sizes};
    const Integer s = size_at(x);
    sizes.push_back(R(s));
    if (s != k) return {false, sizes};
  }
  return {true, sizes};
}

CheckReport evaluate_2d(const Polygon4& q, const Integer& m) {
  CheckReport rep;
  rep.subject = "polygon4";
  const Rational w = width(q);
  const bool triangle = q.is_triangle();
  const bool branch_b = triangle || w == Rational(1);
  rep.branch = branch_b ? "T1.B" : "T1.A";

  const Integer mxl = scaled(m, q.left().x);
  const Integer mxr = scaled(m, q.right().x);
  const Integer myl = scaled(m, q.left().y);
  const ColumnProfile col = column(q, m, mxl + 1);
  const Integer& n = col.size;
  const Integer& b = col.b;
  rep.values = {{"w", w}, {"m", R(m)}, {"n", R(n)}, {"b", R(b)}, {"triangle", triangle}};

  auto base = [&]() -> Witness { return {{"m", R(m)}, {"n", R(n)}, {"b", R(b)}}; };

  if (branch_b) {
    rep.conditions.push_back({"T1.(1')", w <= Rational(1), {{"w", w}}});
  } else {
    rep.conditions.push_back({"T1.(1)", w < Rational(1), {{"w", w}}});
  }

  const auto [chain_ok, sizes] = staircase(mxr, mxl, n, [&](const Integer& x) { return column(q, m, x).size; });
  Witness w2a = base();
  w2a.emplace_back("sizes", sizes);
  rep.conditions.push_back({"T1.(2a)", chain_ok, std::move(w2a)});

  Witness w2b = base();
  w2b.emplace_back("m_y_L", R(myl));
  Witness w3 = base();
  if (n == 0) {
    rep.notes.emplace_back("column next to the left vertex contains no lattice point");
    rep.conditions.push_back({"T1.(2b)", false, std::move(w2b)});
    if (branch_b) rep.conditions.push_back({"T1.(3)", false, std::move(w3)});
  } else {
    const bool hit = myl >= b + 1 && myl <= b + n - 1;
    rep.conditions.push_back({"T1.(2b)", !hit, std::move(w2b)});
    if (branch_b) {
      const Rational s = (q.right().y - q.left().y) / w;
      const Rational target = R(b) - R(n) * s;
      w3.emplace_back("m_y_L", R(myl));
      w3.emplace_back("s", s);
      w3.emplace_back("b_minus_ns", target);
      rep.conditions.push_back({"T1.(3)", R(myl) != target, std::move(w3)});
    }
  }
  rep.verdict = verdict_of(rep.conditions);
  return rep;
}

CheckReport evaluate_3d(const Polytope3& q, const Integer& m) {
  CheckReport rep;
  rep.subject = "polytope3";
  rep.branch = "T2";
  const Rational w = width(q);
  const Integer mxl = scaled(m, q.left().x);
  const Integer mxr = scaled(m, q.right().x);
  const Integer myl = scaled(m, q.left().y);
  const Integer mzl = scaled(m, q.left().z);
  const SliceProfile sl = slice(q, m, mxl + 1);
  const Integer& n = sl.size;
  const Integer& b = sl.b;
  const Integer& c = sl.c;
  rep.values = {{"w", w}, {"m", R(m)}, {"n", R(n)}, {"b", R(b)}, {"c", R(c)}, {"tetrahedron", q.is_tetrahedron()}};

  auto base = [&]() -> Witness { return {{"m", R(m)}, {"n", R(n)}, {"b", R(b)}, {"c", R(c)}}; };

  rep.conditions.push_back({"T2.(1)", w <= Rational(1), {{"w", w}}});

  const auto [chain_ok, sizes] = staircase(mxr, mxl, n, [&](const Integer& x) { return slice(q, m, x).size; });
  Witness w2a = base();
  w2a.emplace_back("sizes", sizes);
  rep.conditions.push_back({"T2.(2a)", chain_ok, std::move(w2a)});

  const Rational sy = (q.right().y - q.left().y) / w;
  const Rational sz = (q.right().z - q.left().z) / w;
  const Rational ty = R(b) - R(n) * sy;  // b - n s_y
  const Rational tz = R(c) - R(n) * sz;
  const Rational yl(myl), zl(mzl);

  auto with_point = [&]() {
    Witness wt = base();
    wt.emplace_back("m_y_L", yl);
    wt.emplace_back("m_z_L", zl);
    return wt;
  };

  if (n == 0) {
    rep.notes.emplace_back("slice next to the left vertex contains no lattice point");
    for (const char* id : {"T2.(2b)", "T2.(3a)", "T2.(3b.i)", "T2.(3b.ii)", "T2.(3b.iii)"}) {
      rep.conditions.push_back({id, false, with_point()});
    }
    rep.verdict = verdict_of(rep.conditions);
    return rep;
  }

  {
    const Integer i = myl - b, j = mzl - c;
    const bool hit = i >= 1 && j >= 1 && i + j < n;
    rep.conditions.push_back({"T2.(2b)", !hit, with_point()});
  }
  {
    Witness wt = with_point();
    wt.emplace_back("b_minus_n_s_y", ty);
    wt.emplace_back("c_minus_n_s_z", tz);
    rep.conditions.push_back({"T2.(3a)", !(yl == ty && zl == tz), std::move(wt)});
  }
  {
    const bool premise = yl == ty && R(c) < zl && zl < R(c + n);
    Witness wt = with_point();
    wt.emplace_back("premise", premise);
    wt.emplace_back("s_y", sy);
    rep.conditions.push_back({"T2.(3b.i)", !premise || sy.sign() != 0, std::move(wt)});
  }
  {
    const bool premise = zl == tz && R(b) < yl && yl < R(b + n);
    Witness wt = with_point();
    wt.emplace_back("premise", premise);
    wt.emplace_back("s_z", sz);
    rep.conditions.push_back({"T2.(3b.ii)", !premise || sz.sign() != 0, std::move(wt)});
  }
  {
    const bool premise = yl + zl == ty + tz && R(b) < yl && R(c) < zl;
    Witness wt = with_point();
    wt.emplace_back("premise", premise);
    wt.emplace_back("s_y_plus_s_z", sy + sz);
    rep.conditions.push_back({"T2.(3b.iii)", !premise || sy + sz != Rational(-1), std::move(wt)});
  }
  rep.verdict = verdict_of(rep.conditions);
  return rep;
}

CheckReport evaluate_3d_n1(const Polytope3& p, const Integer& m) {
  CheckReport rep;
  rep.subject = "polytope3";
  rep.branch = "C1";
  const Rational w = width(p);
  const Integer mxl = scaled(m, p.left().x);
  const SliceProfile sl = slice(p, m, mxl + 1);
  if (sl.size != 1) throw NotSizeOne("slice next to the left vertex has size " + to_string(sl.size));
  rep.values = {{"w", w}, {"m", R(m)}, {"n", R(sl.size)}, {"b", R(sl.b)}, {"c", R(sl.c)}};

  rep.conditions.push_back({"C1.(1)", w <= Rational(1), {{"w", w}}});
  rep.conditions.push_back({"C1.(2)", true, {{"point", RatVec{R(mxl + 1), R(sl.b), R(sl.c)}}}});

  // The point sits one unit to the right of m P_L; it is on the line to m P_R
  // exactly when its offset from m P_L equals the slope vector (s_y, s_z).
  const Rational sy = (p.right().y - p.left().y) / w;
  const Rational sz = (p.right().z - p.left().z) / w;
  const Rational dy = R(sl.b) - Rational(m) * p.left().y;
  const Rational dz = R(sl.c) - Rational(m) * p.left().z;
  const bool on_line = dy == sy && dz == sz;
  rep.conditions.push_back(
      {"C1.(3)", !on_line, {{"offset", RatVec{dy, dz}}, {"slopes", RatVec{sy, sz}}, {"m", R(m)}, {"n", R(sl.size)}}});
  rep.verdict = verdict_of(rep.conditions);
  return rep;
}

void require_stable(const CheckReport& at_m, const CheckReport& at_2m, const char* what) {
  if (at_m.verdict != at_2m.verdict) {
    throw InternalError(std::string(what) + ": verdict changes between m and 2m");
  }
}

}  // namespace

const char* to_string(Verdict v) { return v == Verdict::NotMDS ? "NotMDS" : "Inconclusive"; }

const ConditionResult* CheckReport::condition(std::string_view id) const {
  for (const auto& c : conditions) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

CheckReport check_2d(const Polygon4& p, const CheckOptions& opts) {
  require_factor(opts.m_factor);
  const Shear2 norm = shear_normalize_2d(p);
  const Integer m = integrality_scale(norm.polygon) * opts.m_factor;
  CheckReport rep = evaluate_2d(norm.polygon, m);
  require_stable(rep, evaluate_2d(norm.polygon, 2 * m), "check_2d");
  rep.normalization = {{norm.shear}, m, opts.m_factor};
  if (p.right().x > Rational(1)) rep.notes.emplace_back("normalizing shear applied with x_R > 1");
  return rep;
}

CheckReport check_3d(const Polytope3& p, const CheckOptions& opts) {
  require_factor(opts.m_factor);
  const Shear3 norm = shear_normalize_3d(p);
  const Integer m = integrality_scale(norm.polytope) * opts.m_factor;
  CheckReport rep = evaluate_3d(norm.polytope, m);
  require_stable(rep, evaluate_3d(norm.polytope, 2 * m), "check_3d");
  rep.normalization = {{norm.shear_y, norm.shear_z}, m, opts.m_factor};
  if (p.right().x > Rational(1)) rep.notes.emplace_back("normalizing shear applied with x_R > 1");
  return rep;
}

CheckReport check_3d_n1(const Polytope3& p, const CheckOptions& opts) {
  require_factor(opts.m_factor);
  const Integer m = integrality_scale(p) * opts.m_factor;
  CheckReport rep = evaluate_3d_n1(p, m);
  require_stable(rep, evaluate_3d_n1(p, 2 * m), "check_3d_n1");
  rep.normalization = {{Integer(0), Integer(0)}, m, opts.m_factor};
  return rep;
}

CheckReport check_tetra(const TetraTuple& t) {
  t.validate();
  CheckReport rep;
  rep.subject = "tetra";
  const Rational w = width(t);
  const Integer n = tetra_slice_size_left(t);
  const Integer right = n >= 1 ? tetra_slice_size_right(t, n) : Integer(0);

  const Polytope3 poly = to_polytope(t);
  const Integer m = integrality_scale(poly);
  const Integer mxl = scaled(m, poly.left().x);
  const Integer mxr = scaled(m, poly.right().x);
  rep.normalization = {{Integer(0), Integer(0)}, m, Integer(1)};
  rep.values = {{"w", w}, {"m", R(m)}, {"n", R(n)}, {"right_size", R(right)}};

  // The closed forms must agree with direct lattice-point counts.
  const Integer geo_left = slice(poly, m, mxl + 1).size;
  if (geo_left != n) {
    throw InternalError("closed-form left slice size " + to_string(n) + " differs from count " + to_string(geo_left));
  }
  // The right closed form describes the pyramid over x >= 0 only.
  if (n >= 1 && mxr - n + 1 >= 0) {
    const Integer geo_right = slice(poly, m, mxr - n + 1).size;
    if (geo_right != right) {
      throw InternalError("closed-form right slice size " + to_string(right) + " differs from count " +
                          to_string(geo_right));
    }
  }

  rep.conditions.push_back({"C3.(1)", w <= Rational(1), {{"w", w}}});
  rep.conditions.push_back({"C3.(2)", n >= 1 && right == n, {{"n", R(n)}, {"right_size", R(right)}, {"m", R(m)}}});
  const bool integral = (R(n) * t.y0).is_integer() && (R(n) * t.z0).is_integer();
  rep.conditions.push_back(
      {"C3.(3)", n >= 1 && !integral, {{"n_y0", R(n) * t.y0}, {"n_z0", R(n) * t.z0}, {"n", R(n)}, {"m", R(m)}}});
  rep.verdict = verdict_of(rep.conditions);
  rep.branch = "C3";

  if (rep.verdict == Verdict::NotMDS) {
    // The tuple criterion only fixes the size of the last slice of the staircase at
    // the right vertex. Either the whole staircase is there, or slice m x_R - 1
    // is a single point and the mirror image falls under the single-point case.
    const auto [chain_ok, sizes] = staircase(mxr, mxl, n, [&](const Integer& x) { return slice(poly, m, x).size; });
    rep.values.emplace_back("right_sizes", sizes);
    if (chain_ok) {
      rep.branch = "C3.direct";
    } else if (n >= 2 && slice(poly, m, mxr - 1).size == 1) {
      const TetraTuple mirror{-t.x_right, -t.x_left, -t.y0, -t.z0};
      const CheckReport mirrored = check_3d_n1(to_polytope(mirror));
      rep.branch = "C3.reflected";
      if (mirrored.verdict != Verdict::NotMDS) {
        rep.notes.emplace_back("mirror image fails the single-point criterion");
      }
    } else {
      rep.notes.emplace_back("slice staircase at the right vertex is incomplete");
    }
  }
  return rep;
}

std::optional<Problem3D> lemma_problem_3d(const Polytope3& q, const Integer& m) {
  const Integer mxl = scaled(m, q.left().x);
  const SliceProfile sl = slice(q, m, mxl + 1);
  if (sl.size == 0) return std::nullopt;
  const Integer big_m = scaled(m, width(q));
  Problem3D p;
  p.A = big_m - sl.size;
  if (p.A <= 0) return std::nullopt;
  p.n = to_int64(sl.size);
  p.B = sl.b - scaled(m, q.right().y);
  p.C = sl.c - scaled(m, q.right().z);
  p.beta = scaled(m, q.left().y - q.right().y);
  p.gamma = scaled(m, q.left().z - q.right().z);
  return p;
}

}  // namespace mds
