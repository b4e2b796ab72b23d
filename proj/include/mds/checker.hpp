#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "mds/derivative.hpp"
#include "mds/polytopes.hpp"
#include "mds/rational.hpp"

namespace mds {

enum class Verdict { NotMDS, Inconclusive };

const char* to_string(Verdict v);

using WitnessValue = std::variant<bool, Rational, RatVec, std::string>;
/// Ordered name/value pairs; order is preserved in rendered output.
using Witness = std::vector<std::pair<std::string, WitnessValue>>;

struct ConditionResult {
  std::string id;  // stable, e.g. "T2.(3b.ii)"
  bool holds = false;
  Witness witness;
};

struct Normalization {
  std::vector<Integer> shears;
  Integer m = 1;
  Integer m_factor = 1;
};

struct CheckReport {
  std::string subject;  // polygon4 | polytope3 | tetra | wps | wps-relation
  std::string branch;
  Verdict verdict = Verdict::Inconclusive;
  Normalization normalization;
  Witness values;
  std::vector<ConditionResult> conditions;
  std::vector<std::string> notes;
  std::vector<CheckReport> relations;

  const ConditionResult* condition(std::string_view id) const;
};

struct CheckOptions {
  /// Multiplies the least integral scale.
  Integer m_factor = 1;
};

/// Plane 4-gon criterion. Shear-normalizes first, evaluates at m and 2m and
/// throws InternalError if the two verdicts differ.
CheckReport check_2d(const Polygon4& p, const CheckOptions& opts = {});

/// Three-dimensional criterion, with the same normalization and m/2m check.
CheckReport check_3d(const Polytope3& p, const CheckOptions& opts = {});

/// Single-point specialization. Throws NotSizeOne unless the slice next to the
/// left vertex has exactly one lattice point.
CheckReport check_3d_n1(const Polytope3& p, const CheckOptions& opts = {});

/// Tetrahedron criterion in tuple form.
CheckReport check_tetra(const TetraTuple& t);

/// The interpolation problem attached to a shear-normalized polytope at scale m:
/// A = m w - n, B = b - m y_R, C = c - m z_R, beta = m (y_L - y_R),
/// gamma = m (z_L - z_R). nullopt when the slice is empty or A <= 0.
std::optional<Problem3D> lemma_problem_3d(const Polytope3& normalized, const Integer& m);

}  // namespace mds
