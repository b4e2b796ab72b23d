#include "mds/wps.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

#include "mds/errors.hpp"
#include "mds/linalg.hpp"

namespace mds {

namespace {

using i64 = std::int64_t;
using i128 = __int128;

i64 checked_lcm(i64 a, i64 b) {
  const i128 l = static_cast<i128>(a / std::gcd(a, b)) * b;
  if (l > std::numeric_limits<i64>::max()) throw std::overflow_error("lcm of weights overflows 64 bits");
  return static_cast<i64>(l);
}

i64 checked_product(std::span<const i64> v) {
  i128 p = 1;
  for (i64 x : v) {
    p *= x;
    if (p > std::numeric_limits<i64>::max()) throw std::overflow_error("product overflows 64 bits");
  }
  return static_cast<i64>(p);
}

// Floor division for a possibly negative numerator and positive divisor.
i64 floor_div(i128 num, i128 den) {
  i128 q = num / den;
  if ((num % den != 0) && (num < 0)) --q;
  return static_cast<i64>(q);
}

bool pairwise_coprime(std::span<const i64> g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      if (std::gcd(g[i], g[j]) != 1) return false;
    }
  }
  return true;
}

// e a + f b = d with e, f >= 1, in increasing e.
template <typename Fn>
void for_each_positive_solution(i64 a, i64 b, i64 d, Fn&& fn) {
  const i64 g = std::gcd(a, b);
  if (d % g != 0) return;
  const i64 step = b / g;
  // e a == d (mod b) reduces to e (a/g) == d/g (mod b/g).
  i64 e0 = 0;
  if (step > 1) {
    // Extended Euclid for the inverse of a/g modulo step.
    i64 old_r = (a / g) % step, r = step, old_s = 1, s = 0;
    while (r != 0) {
      const i64 q = old_r / r;
      std::tie(old_r, r) = std::pair{r, old_r - q * r};
      std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    const i128 inv = ((old_s % step) + step) % step;
    e0 = static_cast<i64>(((static_cast<i128>((d / g) % step) * inv) % step + step) % step);
  }
  if (e0 == 0) e0 = step;
  for (i64 e = e0; static_cast<i128>(e) * a + b <= d; e += step) {
    const i64 f = (d - e * a) / b;
    if (f >= 1) fn(e, f);
  }
}

std::vector<Relation> relations_impl(const WpsWeights& w) {
  const auto c = w.c();
  i64 d = 1;
  for (i64 ci : c) d = checked_lcm(d, ci);
  std::vector<i64> g;
  for (i64 ci : c) g.push_back(d / ci);
  std::vector<Relation> out;
  if (!pairwise_coprime(g)) return out;
  for_each_positive_solution(w.a(), w.b(), d, [&](i64 e, i64 f) {
    const i64 ef = std::gcd(e, f);
    for (i64 gi : g) {
      if (std::gcd(ef, gi) != 1) return;
    }
    out.push_back({e, f, g, d});
  });
  return out;
}

i64 binomial(i64 n, i64 k) {
  i128 r = 1;
  for (i64 i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return static_cast<i64>(r);
}

// Tuples x, all entries of sign `sign`, such that with t = sum x_i G / g_i both
// (k b + t e) / G and (k a - t f) / G are non-negative integers. Only the
// admissible t are visited, so the cost is proportional to the output.
std::vector<std::vector<i64>> slice_points(const Relation& rel, const WpsWeights& w, i64 k, int sign) {
  const i64 big_g = checked_product(rel.g);
  std::vector<i64> unit;
  for (i64 gi : rel.g) unit.push_back(big_g / gi);
  const i128 kb = static_cast<i128>(k) * w.b();
  const i128 ka = static_cast<i128>(k) * w.a();
  // Non-negativity bounds t to [-kb/e, ka/f]; the sign of x halves that.
  const i64 t_lo = sign < 0 ? -floor_div(kb, rel.e) : 0;
  const i64 t_hi = sign < 0 ? 0 : floor_div(ka, rel.f);

  std::vector<std::vector<i64>> pts;
  std::vector<i64> cur(unit.size());
  // Writes |t| = sum |x_i| unit_i over coordinates i.. .
  std::function<void(std::size_t, i64)> rec = [&](std::size_t i, i64 rest) {
    if (i + 1 == cur.size()) {
      if (rest % unit[i] != 0) return;
      cur[i] = sign * (rest / unit[i]);
      pts.push_back(cur);
      return;
    }
    for (i64 x = 0; x * unit[i] <= rest; ++x) {
      cur[i] = sign * x;
      rec(i + 1, rest - x * unit[i]);
    }
  };
  for (i64 t = t_lo; t <= t_hi; ++t) {
    const i128 u = kb + static_cast<i128>(t) * rel.e;
    const i128 v = ka - static_cast<i128>(t) * rel.f;
    if (u < 0 || v < 0 || u % big_g != 0 || v % big_g != 0) continue;
    rec(0, t < 0 ? -t : t);
  }
  std::sort(pts.begin(), pts.end());
  return pts;
}

// Size n of a set of the form corner + sign * (g_1 i_1, ..., g_k i_k),
// i >= 0, sum i < n. Throws NonSimplicialSlice for any other shape.
i64 simplex_size(const std::vector<std::vector<i64>>& pts, std::span<const i64> g, int sign, const char* what) {
  if (pts.empty()) return 0;
  const std::size_t k = g.size();
  std::vector<i64> corner = pts.front();
  for (const auto& p : pts) {
    for (std::size_t i = 0; i < k; ++i) corner[i] = sign > 0 ? std::min(corner[i], p[i]) : std::max(corner[i], p[i]);
  }
  const auto count = static_cast<i64>(pts.size());
  i64 n = 1;
  while (binomial(n + static_cast<i64>(k) - 1, static_cast<i64>(k)) < count) ++n;
  if (binomial(n + static_cast<i64>(k) - 1, static_cast<i64>(k)) != count) {
    throw NonSimplicialSlice(std::string(what) + ": " + std::to_string(count) + " points is not a simplex count");
  }
  std::set<std::vector<i64>> seen;
  for (const auto& p : pts) {
    std::vector<i64> idx(k);
    i64 total = 0;
    for (std::size_t i = 0; i < k; ++i) {
      const i64 off = sign * (p[i] - corner[i]);
      if (off % g[i] != 0) throw NonSimplicialSlice(std::string(what) + ": offset not a multiple of g");
      idx[i] = off / g[i];
      total += idx[i];
    }
    if (total >= n || !seen.insert(idx).second) {
      throw NonSimplicialSlice(std::string(what) + ": points do not form a simplex array");
    }
  }
  return n;
}

Rational int_rat(i64 v) { return Rational(static_cast<long>(v)); }

RatVec int_vec(std::span<const i64> v) {
  RatVec out;
  for (i64 x : v) out.push_back(int_rat(x));
  return out;
}

CheckReport check_relation(const WpsWeights& w, const Relation& rel) {
  CheckReport rep;
  rep.subject = "wps-relation";
  rep.branch = "P";
  std::vector<i64> rel_vec{rel.e, rel.f};
  rel_vec.insert(rel_vec.end(), rel.g.begin(), rel.g.end());
  const Rational width = wps_width(w, rel);
  rep.values = {{"relation", int_vec(rel_vec)}, {"d", int_rat(rel.d)}, {"w", width}};
  rep.conditions.push_back({"P.(1)", width <= Rational(1), {{"w", width}}});

  i64 n = 0;
  i64 gamma_size = 0;
  bool shape_ok = true;
  try {
    n = delta_slice(rel, w).size;
    if (n >= 1) gamma_size = gamma_slice(rel, w, n).size;
  } catch (const NonSimplicialSlice& e) {
    shape_ok = false;
    rep.notes.emplace_back(e.what());
  }
  rep.values.emplace_back("n", int_rat(n));
  rep.conditions.push_back(
      {"P.(2)", shape_ok && n >= 1 && gamma_size == n, {{"n", int_rat(n)}, {"gamma_size", int_rat(gamma_size)}}});

  const i64 big_g = checked_product(rel.g);
  const Rational vb = Rational(Integer(static_cast<long>(n)) * w.b(), Integer(static_cast<long>(big_g)));
  const Rational va = Rational(Integer(static_cast<long>(n)) * w.a(), Integer(static_cast<long>(big_g)));
  const bool integral = vb.is_integer() && va.is_integer();
  rep.conditions.push_back({"P.(3)", shape_ok && n >= 1 && !integral, {{"n_over_G_times_ba", RatVec{vb, va}}}});
  rep.verdict = std::all_of(rep.conditions.begin(), rep.conditions.end(),
                            [](const ConditionResult& c) { return c.holds; })
                    ? Verdict::NotMDS
                    : Verdict::Inconclusive;
  return rep;
}

// Number of points slice_points would return, without building them.
i64 count_reps(std::span<const i64> unit, std::size_t i, i64 rest) {
  if (i + 1 == unit.size()) return rest % unit[i] == 0 ? 1 : 0;
  i64 total = 0;
  for (i64 x = 0; x * unit[i] <= rest; ++x) total += count_reps(unit, i + 1, rest - x * unit[i]);
  return total;
}

i64 slice_count(const Relation& rel, const WpsWeights& w, i64 k, int sign, i64 big_g, std::span<const i64> unit) {
  const i128 kb = static_cast<i128>(k) * w.b();
  const i128 ka = static_cast<i128>(k) * w.a();
  const i64 t_lo = sign < 0 ? -floor_div(kb, rel.e) : 0;
  const i64 t_hi = sign < 0 ? 0 : floor_div(ka, rel.f);
  i64 total = 0;
  for (i64 t = t_lo; t <= t_hi; ++t) {
    const i128 u = kb + static_cast<i128>(t) * rel.e;
    const i128 v = ka - static_cast<i128>(t) * rel.f;
    if (u < 0 || v < 0 || u % big_g != 0 || v % big_g != 0) continue;
    total += count_reps(unit, 0, t < 0 ? -t : t);
  }
  return total;
}

// Size n with C(n+k-1, k) == count, or 0 when count is not of that form.
i64 simplex_size_of_count(i64 count, i64 k) {
  if (count <= 0) return 0;
  i64 n = 1;
  while (binomial(n + k - 1, k) < count) ++n;
  return binomial(n + k - 1, k) == count ? n : 0;
}

// Necessary for check_relation to pass, using point counts only. The full
// check (which also verifies the simplex shape) runs on survivors.
bool relation_may_pass(const WpsWeights& w, const Relation& rel) {
  const i64 big_g = checked_product(rel.g);
  std::vector<i64> unit;
  for (i64 gi : rel.g) unit.push_back(big_g / gi);
  const auto k = static_cast<i64>(rel.g.size());
  const i64 n = simplex_size_of_count(slice_count(rel, w, 1, -1, big_g, unit), k);
  if (n == 0) return false;
  const bool integral = (static_cast<i128>(n) * w.b()) % big_g == 0 && (static_cast<i128>(n) * w.a()) % big_g == 0;
  if (integral) return false;
  return slice_count(rel, w, n - 1, +1, big_g, unit) == binomial(n + k - 1, k);
}

// Cheap necessary conditions shared by every relation of w: pairwise coprime
// g_i and width at most 1. Used to prune the search before the full check.
bool may_pass(const WpsWeights& w, i64 d) {
  i128 lhs = 1;
  for (int i = 0; i < w.dim(); ++i) lhs *= d;
  i128 rhs = 1;
  for (i64 x : w.all()) rhs *= x;
  return lhs <= rhs;
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs > 0) return jobs;
  if (const char* env = std::getenv("MDS_ORACLE_JOBS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

void for_each_ascending(int len, i64 lo, i64 hi, std::vector<i64>& cur,
                        const std::function<void(const std::vector<i64>&)>& fn) {
  if (static_cast<int>(cur.size()) == len) {
    fn(cur);
    return;
  }
  for (i64 v = lo; v <= hi; ++v) {
    cur.push_back(v);
    for_each_ascending(len, v, hi, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

WpsWeights::WpsWeights(std::vector<std::int64_t> weights) : w_(std::move(weights)) {
  if (w_.size() != 4 && w_.size() != 5) {
    throw std::invalid_argument("expected 4 or 5 weights, got " + std::to_string(w_.size()));
  }
  for (auto x : w_) {
    if (x < 1) throw std::invalid_argument("weights must be positive");
  }
}

std::vector<Relation> find_relations(const WpsWeights& w) { return relations_impl(w); }

Rational wps_width(const WpsWeights& w, const Relation& rel) {
  Integer num = 1, den = 1;
  for (int i = 0; i < w.dim(); ++i) num *= static_cast<long>(rel.d);
  for (auto x : w.all()) den *= static_cast<long>(x);
  return Rational(num, den);
}

LatticeSimplex delta_slice(const Relation& rel, const WpsWeights& w) {
  LatticeSimplex s;
  s.points = slice_points(rel, w, 1, -1);
  s.size = simplex_size(s.points, rel.g, -1, "delta slice");
  return s;
}

LatticeSimplex gamma_slice(const Relation& rel, const WpsWeights& w, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("gamma_slice: n must be positive");
  LatticeSimplex s;
  s.points = slice_points(rel, w, n - 1, +1);
  s.size = simplex_size(s.points, rel.g, +1, "gamma slice");
  return s;
}

CheckReport check_wps(const WpsWeights& w) {
  CheckReport rep;
  rep.subject = "wps";
  rep.branch = w.dim() == 3 ? "P3" : "P" + std::to_string(w.dim());
  rep.values = {{"weights", int_vec(w.all())}};
  for (const auto& rel : find_relations(w)) rep.relations.push_back(check_relation(w, rel));
  if (rep.relations.empty()) rep.notes.emplace_back("no admissible relation");
  for (const auto& sub : rep.relations) {
    if (sub.verdict == Verdict::NotMDS) {
      rep.verdict = Verdict::NotMDS;
      for (const auto& [k, v] : sub.values) {
        if (k == "relation" || k == "n" || k == "w") rep.values.emplace_back(k, v);
      }
      break;
    }
  }
  return rep;
}

FanData tetra_fan(const TetraTuple& t) {
  t.validate();
  const Rational one(1), zero(0), minus(-1);
  const std::array<RatVec, 4> dirs{
      RatVec{t.y0 + t.z0 - one / t.x_left, minus, minus},
      RatVec{t.y0 + t.z0 - one / t.x_right, minus, minus},
      RatVec{-t.y0, one, zero},
      RatVec{-t.z0, zero, one},
  };
  FanData fan;
  for (std::size_t i = 0; i < 4; ++i) fan.rays[i] = primitive(dirs[i]);
  const IntVec rel = positive_relation(fan.rays);
  std::vector<i64> weights;
  for (const auto& x : rel) weights.push_back(to_int64(x));
  fan.weights = WpsWeights(std::move(weights));
  const auto index = lattice_index(fan.rays);
  if (!index) throw NoPositiveRelation("fan rays do not span the lattice");
  fan.index = *index;
  return fan;
}

std::optional<TetraTuple> relation_tetra(const WpsWeights& w, const Relation& rel) {
  if (w.dim() != 3) return std::nullopt;
  const i64 a = w.a(), b = w.b(), c1 = w.c()[0], c2 = w.c()[1];
  const i64 k = std::gcd(c1, c2);
  const Integer d2 = Integer(static_cast<long>(rel.d)) * rel.d;
  const Integer cc = Integer(static_cast<long>(c1)) * c2;
  TetraTuple t;
  t.x_right = Rational(d2 * rel.f, cc * a);
  t.x_left = -Rational(d2 * rel.e, cc * b);
  // The x-axis direction: an integer (u, v, w1, w2) of degree 0 with
  // f u - e v = gcd(c1, c2), so that the slice coordinate grows by one.
  const i64 period = rel.e * k * std::max<i64>(c1, c2);
  for (i64 u = -period; u <= period; ++u) {
    const i64 num = rel.f * u - k;
    if (num % rel.e != 0) continue;
    const i64 v = num / rel.e;
    const i128 rest = -(static_cast<i128>(a) * u + static_cast<i128>(b) * v);
    if (rest % k != 0) continue;
    // c1 w1 + c2 w2 = rest: w1 = rest/k * s where s (c1/k) == 1 mod (c2/k).
    const i64 p1 = c1 / k, p2 = c2 / k;
    i64 s = 0;
    while ((static_cast<i128>(s) * p1 - 1) % p2 != 0) ++s;
    const i128 w1 = rest / k * s;
    const i128 w2 = (rest - w1 * c1) / c2;
    const Rational y0 = -Rational(Integer(static_cast<long>(w1)), Integer(static_cast<long>(rel.g[0])));
    const Rational z0 = -Rational(Integer(static_cast<long>(w2)), Integer(static_cast<long>(rel.g[1])));
    t.y0 = y0 - Rational(floor(y0));
    t.z0 = z0 - Rational(floor(z0));
    return t;
  }
  return std::nullopt;
}

NormalizedWeights normalize_weights(const WpsWeights& w) {
  const auto& v = w.all();
  NormalizedWeights out;
  out.reduced = true;
  for (std::size_t skip = 0; skip < v.size(); ++skip) {
    i64 g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i != skip) g = std::gcd(g, v[i]);
    }
    if (g != 1) out.reduced = false;
  }

  std::vector<i64> cur = v;
  for (bool changed = true; changed;) {
    changed = false;
    i64 all = 0;
    for (i64 x : cur) all = std::gcd(all, x);
    if (all > 1) {
      for (i64& x : cur) x /= all;
      changed = true;
    }
    for (std::size_t skip = 0; skip < cur.size(); ++skip) {
      i64 g = 0;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        if (i != skip) g = std::gcd(g, cur[i]);
      }
      if (g > 1) {
        // Divide by one prime factor at a time.
        i64 p = 2;
        while (g % p != 0) ++p;
        for (std::size_t i = 0; i < cur.size(); ++i) {
          if (i != skip) cur[i] /= p;
        }
        changed = true;
      }
    }
  }
  std::sort(cur.begin() + 2, cur.end());
  out.canonical = WpsWeights(std::move(cur));
  return out;
}

std::vector<TableRow> search(int dim, std::int64_t bound, unsigned jobs) {
  if (dim != 3 && dim != 4) throw std::invalid_argument("search supports dimensions 3 and 4");
  const i64 max_weight = bound - 1;
  if (max_weight < 1) return {};
  jobs = resolve_jobs(jobs);

  // Work items: ascending c-tuples whose g_i are pairwise coprime.
  std::vector<std::vector<i64>> c_tuples;
  std::vector<i64> cur;
  for_each_ascending(dim - 1, 1, max_weight, cur, [&](const std::vector<i64>& c) {
    i64 d = 1;
    for (i64 ci : c) d = checked_lcm(d, ci);
    std::vector<i64> g;
    for (i64 ci : c) g.push_back(d / ci);
    if (pairwise_coprime(g)) c_tuples.push_back(c);
  });

  auto work = [&](std::size_t begin_idx, std::size_t stride, std::vector<TableRow>& rows) {
    for (std::size_t idx = begin_idx; idx < c_tuples.size(); idx += stride) {
      const auto& c = c_tuples[idx];
      i64 d = 1;
      for (i64 ci : c) d = checked_lcm(d, ci);
      for (i64 a = 1; a <= max_weight; ++a) {
        for (i64 b = 1; b <= max_weight; ++b) {
          std::vector<i64> v{a, b};
          v.insert(v.end(), c.begin(), c.end());
          const WpsWeights w(std::move(v));
          if (!may_pass(w, d)) continue;
          if (!normalize_weights(w).reduced) continue;
          const auto rels = find_relations(w);
          for (const auto& rel : rels) {
            if (wps_width(w, rel) > Rational(1) || !relation_may_pass(w, rel)) continue;
            const CheckReport r = check_relation(w, rel);
            if (r.verdict == Verdict::NotMDS) {
              i64 n = 0;
              for (const auto& [k, val] : r.values) {
                if (k == "n") n = to_int64(std::get<Rational>(val).num());
              }
              rows.push_back({w, rel, n});
              break;
            }
          }
        }
      }
    }
  };

  std::vector<std::vector<TableRow>> partial(jobs);
  if (jobs == 1) {
    work(0, 1, partial[0]);
  } else {
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) threads.emplace_back(work, j, jobs, std::ref(partial[j]));
    for (auto& t : threads) t.join();
  }

  std::vector<TableRow> rows;
  for (auto& p : partial) rows.insert(rows.end(), p.begin(), p.end());
  std::sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
    const auto cx = x.weights.c(), cy = y.weights.c();
    if (!std::equal(cx.begin(), cx.end(), cy.begin(), cy.end())) {
      return std::lexicographical_compare(cx.begin(), cx.end(), cy.begin(), cy.end());
    }
    if (x.weights.a() != y.weights.a()) return x.weights.a() < y.weights.a();
    return x.weights.b() < y.weights.b();
  });
  return rows;
}

}  // namespace mds
