#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mds/rational.hpp"

namespace mds {

/// Dense row-major matrix of rationals. Sizes here stay in the low hundreds.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static RatMatrix from_rows(const std::vector<RatVec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RatVec operator*(std::span<const Rational> v) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
std::vector<std::size_t> rref(RatMatrix& m);

/// Basis of the right null space, one vector per free column of the reduced
/// form. Each is scaled to a primitive integer vector with a positive entry at
/// its free column, so output is reproducible.
std::vector<RatVec> kernel_basis(const RatMatrix& m);

/// Unique solution of m x = rhs, or nullopt when the system is inconsistent
/// or underdetermined.
std::optional<RatVec> solve_unique(const RatMatrix& m, std::span<const Rational> rhs);

/// The coprime integer vector that is a positive multiple of v. Throws ZeroVector.
IntVec primitive(std::span<const Rational> v);

/// Primitive strictly positive w with sum_i w_i * rays[i] = 0. Requires a
/// one-dimensional kernel; throws NoPositiveRelation otherwise.
IntVec positive_relation(std::span<const IntVec> rays);

/// Diagonal of the Smith normal form of an integer matrix (nonzero entries only,
/// each dividing the next).
IntVec elementary_divisors(std::vector<IntVec> rows);

/// Index in Z^dim of the subgroup generated by vecs; nullopt when the vectors
/// do not span Q^dim.
std::optional<Integer> lattice_index(std::span<const IntVec> vecs);

}  // namespace mds
