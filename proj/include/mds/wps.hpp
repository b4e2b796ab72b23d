#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mds/checker.hpp"
#include "mds/polytopes.hpp"
#include "mds/rational.hpp"

namespace mds {

/// Weights (a, b, c_1, ..., c_{r-1}) of a weighted projective r-space.
class WpsWeights {
 public:
  WpsWeights() = default;
  /// Throws std::invalid_argument unless there are 4 or 5 weights, all >= 1.
  explicit WpsWeights(std::vector<std::int64_t> weights);

  std::int64_t a() const { return w_[0]; }
  std::int64_t b() const { return w_[1]; }
  std::span<const std::int64_t> c() const { return std::span(w_).subspan(2); }
  const std::vector<std::int64_t>& all() const { return w_; }
  /// r, the dimension of the space.
  int dim() const { return static_cast<int>(w_.size()) - 1; }

  friend bool operator==(const WpsWeights&, const WpsWeights&) = default;
  friend auto operator<=>(const WpsWeights&, const WpsWeights&) = default;

 private:
  std::vector<std::int64_t> w_;
};

/// e a + f b = g_i c_i = d, with gcd(e, f, g_i) = 1 and the g_i pairwise coprime.
struct Relation {
  std::int64_t e = 0, f = 0;
  std::vector<std::int64_t> g;
  std::int64_t d = 0;

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct TableRow {
  WpsWeights weights;
  Relation relation;
  std::int64_t n = 0;

  friend bool operator==(const TableRow&, const TableRow&) = default;
};

/// All relations in lexicographic (e, f) order. The degree is forced to
/// lcm(c_i); empty when the g_i are not pairwise coprime.
std::vector<Relation> find_relations(const WpsWeights& w);

/// d^r / (a b c_1 ... c_{r-1}).
Rational wps_width(const WpsWeights& w, const Relation& rel);

/// Integer tuples indexing one slice, with the simplex-array size they form.
struct LatticeSimplex {
  std::int64_t size = 0;
  std::vector<std::vector<std::int64_t>> points;
};

/// The tuples delta <= 0 for which (1/G)(b, a) + (sum delta_i / g_i)(e, -f) is a
/// non-negative integer vector, G = prod g_i. Throws NonSimplicialSlice.
LatticeSimplex delta_slice(const Relation& rel, const WpsWeights& w);

/// Same for gamma >= 0 and ((n-1)/G)(b, a). Throws NonSimplicialSlice.
LatticeSimplex gamma_slice(const Relation& rel, const WpsWeights& w, std::int64_t n);

/// Evaluates every relation; NotMDS when some relation passes all conditions.
/// Each relation gets its own entry in report.relations.
CheckReport check_wps(const WpsWeights& w);

struct FanData {
  std::array<IntVec, 4> rays;
  WpsWeights weights;
  Integer index;
};

/// Primitive normal-fan rays of the tetrahedron, the weights of the positive
/// relation among them, and the index of the lattice they generate.
FanData tetra_fan(const TetraTuple& t);

/// Tetrahedron of degree-d monomials of a weighted projective 3-space, in
/// coordinates sending the monomials x^e y^f, z_1^g_1, z_2^g_2 to (0,0,0),
/// (0,1,0), (0,0,1) and with y_0, z_0 shifted into [0, 1). nullopt when r != 3
/// or no lattice vector completes those coordinates. Round-trip through
/// tetra_fan to confirm the lattice matches.
std::optional<TetraTuple> relation_tetra(const WpsWeights& w, const Relation& rel);

struct NormalizedWeights {
  WpsWeights canonical;
  bool reduced = false;
};

/// reduced: every subset leaving out one weight is coprime. canonical: divide
/// out common factors, and primes dividing all weights but one, until stable;
/// c-weights sorted ascending.
NormalizedWeights normalize_weights(const WpsWeights& w);

/// Every weight tuple with entries in [1, bound) and ascending c-weights that
/// is reduced and passes check_wps. Rows carry the lexicographically smallest
/// passing relation and are sorted by (c-weights, a, b).
/// jobs = 0 picks MDS_ORACLE_JOBS or 1.
std::vector<TableRow> search(int dim, std::int64_t bound, unsigned jobs = 1);

}  // namespace mds
