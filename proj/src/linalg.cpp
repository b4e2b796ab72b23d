#include "mds/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "mds/errors.hpp"

namespace mds {

RatMatrix RatMatrix::from_rows(const std::vector<RatVec>& rows) {
  if (rows.empty()) return {};
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RatVec RatMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector size mismatch");
  RatVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c).sign() != 0 && v[c].sign() != 0) acc += (*this)(r, c) * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pick = row;
    while (pick < m.rows() && m(pick, col).sign() == 0) ++pick;
    if (pick == m.rows()) continue;
    if (pick != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pick, c), m(row, c));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).sign() == 0) continue;
      const Rational factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (m(row, c).sign() != 0) m(r, c) -= factor * m(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::vector<RatVec> kernel_basis(const RatMatrix& m) {
  RatMatrix work = m;
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVec v(m.cols());
    v[free] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -work(r, free);
    IntVec p = primitive(v);
    RatVec cleared;
    cleared.reserve(p.size());
    for (auto& x : p) cleared.emplace_back(x);
    basis.push_back(std::move(cleared));
  }
  return basis;
}

std::optional<RatVec> solve_unique(const RatMatrix& m, std::span<const Rational> rhs) {
  if (rhs.size() != m.rows()) throw std::invalid_argument("solve_unique: rhs size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  if (pivots.size() != m.cols()) return std::nullopt;                     // free variables
  RatVec x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

IntVec primitive(std::span<const Rational> v) {
  Integer den = 1;
  bool any = false;
  for (const auto& q : v) {
    if (q.sign() != 0) any = true;
    den = lcm(den, q.den());
  }
  if (!any) throw ZeroVector("primitive: zero vector has no primitive generator");
  IntVec out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    Integer x = q.num() * (den / q.den());
    g = gcd(g, x);
    out.push_back(std::move(x));
  }
  for (auto& x : out) x /= g;
  return out;
}

IntVec positive_relation(std::span<const IntVec> rays) {
  if (rays.empty()) throw NoPositiveRelation("positive_relation: no rays");
  const std::size_t dim = rays.front().size();
  RatMatrix m(dim, rays.size());
  for (std::size_t c = 0; c < rays.size(); ++c) {
    if (rays[c].size() != dim) throw std::invalid_argument("rays of different lengths");
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = Rational(rays[c][r]);
  }
  const auto kernel = kernel_basis(m);
  if (kernel.size() != 1) {
    throw NoPositiveRelation("ray matrix kernel has dimension " + std::to_string(kernel.size()));
  }
  IntVec w = primitive(kernel.front());
  const bool all_pos = std::all_of(w.begin(), w.end(), [](const Integer& x) { return x > 0; });
  const bool all_neg = std::all_of(w.begin(), w.end(), [](const Integer& x) { return x < 0; });
  if (all_neg) {
    for (auto& x : w) x = -x;
  } else if (!all_pos) {
    throw NoPositiveRelation("the ray relation has entries of mixed sign or zero");
  }
  return w;
}

IntVec elementary_divisors(std::vector<IntVec> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  IntVec diag;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    // Move the smallest nonzero entry of the remaining block to (t, t), then
    // clear its row and column; repeat until it divides everything below.
    for (;;) {
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          if (a[r][c] != 0 && (pr == rows || abs(a[r][c]) < abs(a[pr][pc]))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == rows) return diag;
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        const Integer q = a[r][t] / a[t][t];  // truncating division is fine here
        if (q != 0) {
          for (std::size_t c = t; c < cols; ++c) a[r][c] -= q * a[t][c];
        }
        if (a[r][t] != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        const Integer q = a[t][c] / a[t][t];
        if (q != 0) {
          for (std::size_t r = t; r < rows; ++r) a[r][c] -= q * a[r][t];
        }
        if (a[t][c] != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain: fold a non-multiple into row t.
      std::size_t bad_r = rows;
      for (std::size_t r = t + 1; r < rows && bad_r == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a[r][c] % a[t][t] != 0) {
            bad_r = r;
            break;
          }
        }
      }
      if (bad_r == rows) break;
      for (std::size_t c = t; c < cols; ++c) a[t][c] += a[bad_r][c];
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::optional<Integer> lattice_index(std::span<const IntVec> vecs) {
  if (vecs.empty()) return std::nullopt;
  const std::size_t dim = vecs.front().size();
  std::vector<IntVec> rows(vecs.begin(), vecs.end());
  const IntVec diag = elementary_divisors(std::move(rows));
  if (diag.size() < dim) return std::nullopt;
  Integer index = 1;
  for (const auto& d : diag) index *= d;
  return index;
}

}  // namespace mds
