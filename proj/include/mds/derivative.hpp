#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mds/rational.hpp"

namespace mds {

/// Interpolation data in the plane: the polynomial must vanish at
/// (-A, B + j) for 0 <= j < n and at (i, j) with i, j >= 0, i + j < n,
/// and is evaluated at (-A - 1, beta).
struct Problem2D {
  Integer A, B, beta;
  long n = 1;
};

/// Spatial analogue: vanishing at (-A, B + i, C + j), i + j < n, and at the
/// lattice points (l, i, j) >= 0 with l + i + j < n; evaluated at
/// (-A - 1, beta, gamma).
struct Problem3D {
  Integer A, B, C, beta, gamma;
  long n = 1;
};

struct Certificate {
  Rational closed_form;
  long kernel_dim = 0;
  Rational oracle_value;
  bool agree = false;
};

Rational closed_form_2d(const Problem2D& p);

/// Throws UnexpectedKernelDim when the vanishing conditions do not cut out a
/// unique polynomial up to scale.
Certificate oracle_2d(const Problem2D& p);

/// Value at (-A - 1, beta, gamma) of the degree-n polynomial p_d whose
/// restriction to X = -A is [Y - B]_d [Z - C]_{n - d}. Requires 0 <= d <= n.
Rational closed_form_3d(const Problem3D& p, long d);

/// One certificate per d = 0..n. Throws UnexpectedKernelDim or
/// NormalizationUnsolvable.
std::vector<Certificate> oracle_3d(const Problem3D& p);

struct NonvanishResult {
  bool nonvanish = false;
  std::optional<long> witness_d;
};

/// Decides from the explicit conditions on (beta - B, gamma - C) whether some
/// p_d survives at the evaluation point.
NonvanishResult lemma42_nonvanish(const Problem3D& p);

/// Checks A q(-A-1, Y) = (A + n - Y) q(-A, Y) + Y q(-A, Y-1) for the oracle's
/// kernel polynomial at the given sample points.
bool recurrence_holds_2d(const Problem2D& p, const std::vector<Rational>& ys);

/// Checks A q(-A-1,Y,Z) = (A+n-Y-Z) q(-A,Y,Z) + Y q(-A,Y-1,Z) + Z q(-A,Y,Z-1)
/// for every kernel basis element at the given (Y, Z) samples.
bool recurrence_holds_3d(const Problem3D& p, const std::vector<std::pair<Rational, Rational>>& points);

/// Parameter box for random problems: 1 <= n <= max_n, 1 <= A <= max_a,
/// |B|, |C|, |beta|, |gamma| <= max_abs.
struct CampaignRanges {
  long max_n = 6;
  long max_a = 30;
  long max_abs = 20;
};

Problem2D random_problem_2d(std::mt19937_64& rng, const CampaignRanges& ranges = {});
Problem3D random_problem_3d(std::mt19937_64& rng, const CampaignRanges& ranges = {});

struct CampaignFailure {
  std::string kind;  // "2d" | "3d"
  std::string description;
};

struct CampaignResult {
  long passed_2d = 0;
  long failed_2d = 0;
  long passed_3d = 0;
  long failed_3d = 0;
  std::vector<CampaignFailure> failures;

  bool ok() const { return failed_2d == 0 && failed_3d == 0; }
};

/// Runs `samples` random 2D and 3D problems through closed form, kernel oracle
/// and (3D) the explicit nonvanishing conditions, recording every disagreement.
CampaignResult run_campaign(long samples_2d, long samples_3d, std::uint64_t seed,
                            const CampaignRanges& ranges = {});

}  // namespace mds
