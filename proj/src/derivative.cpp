#include "mds/derivative.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

#include "mds/errors.hpp"
#include "mds/linalg.hpp"

namespace mds {

namespace {

using Exponent = std::array<long, 3>;

// All exponent vectors of total degree <= n in `vars` variables.
std::vector<Exponent> monomials(long n, int vars) {
  std::vector<Exponent> out;
  for (long i = 0; i <= n; ++i) {
    for (long j = 0; j <= (vars >= 2 ? n - i : 0); ++j) {
      for (long k = 0; k <= (vars >= 3 ? n - i - j : 0); ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

Rational power(const Rational& base, long e) {
  Rational out(1);
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

// Evaluates the monomials at one point, in the order of `mons`.
RatVec monomial_row(const std::vector<Exponent>& mons, const Rational& x, const Rational& y,
                    const Rational& z = Rational(0)) {
  RatVec row;
  row.reserve(mons.size());
  for (const auto& m : mons) row.push_back(power(x, m[0]) * power(y, m[1]) * power(z, m[2]));
  return row;
}

Rational eval(const std::vector<Exponent>& mons, const RatVec& coeffs, const Rational& x, const Rational& y,
              const Rational& z = Rational(0)) {
  Rational acc;
  const RatVec row = monomial_row(mons, x, y, z);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    if (coeffs[i].sign() != 0) acc += coeffs[i] * row[i];
  }
  return acc;
}

void require_valid(const Integer& A, long n) {
  if (A <= 0) throw std::invalid_argument("derivative problem requires A > 0");
  if (n <= 0) throw std::invalid_argument("derivative problem requires n > 0");
}

struct Kernel2D {
  std::vector<Exponent> mons;
  std::vector<RatVec> basis;
};

Kernel2D vanishing_kernel_2d(const Problem2D& p) {
  require_valid(p.A, p.n);
  Kernel2D k{monomials(p.n, 2), {}};
  std::vector<RatVec> rows;
  const Rational x2 = -Rational(p.A);
  for (long j = 0; j < p.n; ++j) rows.push_back(monomial_row(k.mons, x2, Rational(p.B + j)));
  for (long i = 0; i < p.n; ++i) {
    for (long j = 0; i + j < p.n; ++j) rows.push_back(monomial_row(k.mons, Rational(i), Rational(j)));
  }
  k.basis = kernel_basis(RatMatrix::from_rows(rows));
  return k;
}

struct Kernel3D {
  std::vector<Exponent> mons;
  std::vector<RatVec> basis;
};

Kernel3D vanishing_kernel_3d(const Problem3D& p) {
  require_valid(p.A, p.n);
  Kernel3D k{monomials(p.n, 3), {}};
  std::vector<RatVec> rows;
  const Rational x2 = -Rational(p.A);
  for (long i = 0; i < p.n; ++i) {
    for (long j = 0; i + j < p.n; ++j) {
      rows.push_back(monomial_row(k.mons, x2, Rational(p.B + i), Rational(p.C + j)));
    }
  }
  for (long l = 0; l < p.n; ++l) {
    for (long i = 0; l + i < p.n; ++i) {
      for (long j = 0; l + i + j < p.n; ++j) {
        rows.push_back(monomial_row(k.mons, Rational(l), Rational(i), Rational(j)));
      }
    }
  }
  k.basis = kernel_basis(RatMatrix::from_rows(rows));
  return k;
}

std::string describe(const Problem2D& p) {
  std::ostringstream os;
  os << "A=" << p.A << " B=" << p.B << " beta=" << p.beta << " n=" << p.n;
  return os.str();
}

std::string describe(const Problem3D& p) {
  std::ostringstream os;
  os << "A=" << p.A << " B=" << p.B << " C=" << p.C << " beta=" << p.beta << " gamma=" << p.gamma
     << " n=" << p.n;
  return os.str();
}

}  // namespace

Rational closed_form_2d(const Problem2D& p) {
  require_valid(p.A, p.n);
  const Rational bb = Rational(p.beta - p.B);
  const Rational shift = Rational(Integer(p.n) * p.B, p.A);
  return falling_factorial(bb - Rational(1), p.n - 1) * (bb - shift);
}

Certificate oracle_2d(const Problem2D& p) {
  const Kernel2D k = vanishing_kernel_2d(p);
  if (k.basis.size() != 1) {
    throw UnexpectedKernelDim("2D vanishing space has dimension " + std::to_string(k.basis.size()) + " at " +
                              describe(p));
  }
  const RatVec& q = k.basis.front();
  const Rational x2 = -Rational(p.A);

  // Scale so that q(-A, Y) = [Y - B]_n, checked at n + 1 points beyond its roots.
  const Rational y0 = Rational(p.B + p.n + 1);
  const Rational at_y0 = eval(k.mons, q, x2, y0);
  if (at_y0.sign() == 0) throw NormalizationUnsolvable("restriction vanishes at sample point, " + describe(p));
  const Rational scale = falling_factorial(y0 - Rational(p.B), p.n) / at_y0;
  for (long i = 1; i <= p.n; ++i) {
    const Rational y = y0 + Rational(i);
    if (scale * eval(k.mons, q, x2, y) != falling_factorial(y - Rational(p.B), p.n)) {
      throw NormalizationUnsolvable("restriction to X = -A is not a multiple of [Y-B]_n, " + describe(p));
    }
  }

  Certificate cert;
  cert.kernel_dim = 1;
  cert.closed_form = closed_form_2d(p);
  cert.oracle_value = scale * eval(k.mons, q, x2 - Rational(1), Rational(p.beta));
  cert.agree = cert.closed_form == cert.oracle_value;
  return cert;
}

Rational closed_form_3d(const Problem3D& p, long d) {
  require_valid(p.A, p.n);
  if (d < 0 || d > p.n) throw std::invalid_argument("closed_form_3d: d outside [0, n]");
  const Rational one(1);
  const Rational bb = Rational(p.beta - p.B);
  const Rational gg = Rational(p.gamma - p.C);
  const Rational nb = Rational(Integer(p.n) * p.B, p.A);
  const Rational nc = Rational(Integer(p.n) * p.C, p.A);
  if (d == p.n) return falling_factorial(bb - one, p.n - 1) * (bb - nb);
  if (d == 0) return falling_factorial(gg - one, p.n - 1) * (gg - nc);
  const Rational wd = Rational(Integer(d), Integer(p.n));
  const Rational wrest = Rational(Integer(p.n - d), Integer(p.n));
  return falling_factorial(bb - one, d - 1) * falling_factorial(gg - one, p.n - d - 1) *
         (wd * gg * (bb - nb) + wrest * bb * (gg - nc));
}

std::vector<Certificate> oracle_3d(const Problem3D& p) {
  const Kernel3D k = vanishing_kernel_3d(p);
  const auto dim = static_cast<long>(k.basis.size());
  if (dim != p.n + 1) {
    throw UnexpectedKernelDim("3D vanishing space has dimension " + std::to_string(dim) + ", expected " +
                              std::to_string(p.n + 1) + " at " + describe(p));
  }
  const Rational x2 = -Rational(p.A);

  // Restrictions of the basis to X = -A, sampled on an (n+1) x (n+1) grid that
  // avoids the roots of every [Y - B]_d and [Z - C]_{n-d}.
  std::vector<std::pair<Rational, Rational>> grid;
  for (long i = 0; i <= p.n; ++i) {
    for (long j = 0; j <= p.n; ++j) grid.emplace_back(Rational(p.B + p.n + 1 + i), Rational(p.C + p.n + 1 + j));
  }
  RatMatrix system(grid.size(), k.basis.size());
  for (std::size_t r = 0; r < grid.size(); ++r) {
    for (std::size_t c = 0; c < k.basis.size(); ++c) {
      system(r, c) = eval(k.mons, k.basis[c], x2, grid[r].first, grid[r].second);
    }
  }
  RatVec at_target;
  for (const auto& b : k.basis) at_target.push_back(eval(k.mons, b, x2 - Rational(1), Rational(p.beta), Rational(p.gamma)));

  std::vector<Certificate> out;
  for (long d = 0; d <= p.n; ++d) {
    RatVec rhs;
    rhs.reserve(grid.size());
    for (const auto& [y, z] : grid) {
      rhs.push_back(falling_factorial(y - Rational(p.B), d) * falling_factorial(z - Rational(p.C), p.n - d));
    }
    const auto lambda = solve_unique(system, rhs);
    if (!lambda) {
      throw NormalizationUnsolvable("no kernel element restricts to [Y-B]_" + std::to_string(d) + "[Z-C]_" +
                                    std::to_string(p.n - d) + " at " + describe(p));
    }
    Certificate cert;
    cert.kernel_dim = dim;
    cert.closed_form = closed_form_3d(p, d);
    for (std::size_t c = 0; c < at_target.size(); ++c) cert.oracle_value += (*lambda)[c] * at_target[c];
    cert.agree = cert.closed_form == cert.oracle_value;
    out.push_back(std::move(cert));
  }
  return out;
}

NonvanishResult lemma42_nonvanish(const Problem3D& p) {
  require_valid(p.A, p.n);
  const Integer bb = p.beta - p.B;
  const Integer gg = p.gamma - p.C;
  const long n = p.n;

  const bool inner_point = bb >= 1 && gg >= 1 && bb + gg < n;
  const bool at_center = bb * p.A == n * p.B && gg * p.A == n * p.C;
  const bool on_y_edge = bb == 0 && gg > 0 && gg < n;
  const bool on_z_edge = gg == 0 && bb > 0 && bb < n;
  const bool on_diagonal = bb + gg == n && bb > 0 && bb < n && gg > 0 && gg < n;

  NonvanishResult r;
  r.nonvanish = !inner_point && !at_center && !(on_y_edge && p.B == 0) && !(on_z_edge && p.C == 0) &&
                !(on_diagonal && p.B + p.C == p.A);
  if (r.nonvanish) {
    for (long d = 0; d <= n; ++d) {
      if (closed_form_3d(p, d).sign() != 0) {
        r.witness_d = d;
        break;
      }
    }
  }
  return r;
}

bool recurrence_holds_2d(const Problem2D& p, const std::vector<Rational>& ys) {
  const Kernel2D k = vanishing_kernel_2d(p);
  const Rational a(p.A), nn(p.n), x2 = -Rational(p.A);
  for (const auto& q : k.basis) {
    for (const auto& y : ys) {
      const Rational lhs = a * eval(k.mons, q, x2 - Rational(1), y);
      const Rational rhs = (a + nn - y) * eval(k.mons, q, x2, y) + y * eval(k.mons, q, x2, y - Rational(1));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool recurrence_holds_3d(const Problem3D& p, const std::vector<std::pair<Rational, Rational>>& points) {
  const Kernel3D k = vanishing_kernel_3d(p);
  const Rational a(p.A), nn(p.n), x2 = -Rational(p.A), one(1);
  for (const auto& q : k.basis) {
    for (const auto& [y, z] : points) {
      const Rational lhs = a * eval(k.mons, q, x2 - one, y, z);
      const Rational rhs = (a + nn - y - z) * eval(k.mons, q, x2, y, z) + y * eval(k.mons, q, x2, y - one, z) +
                           z * eval(k.mons, q, x2, y, z - one);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

Problem2D random_problem_2d(std::mt19937_64& rng, const CampaignRanges& ranges) {
  std::uniform_int_distribution<long> n(1, ranges.max_n), a(1, ranges.max_a), v(-ranges.max_abs, ranges.max_abs);
  Problem2D p;
  p.n = n(rng);
  p.A = a(rng);
  p.B = v(rng);
  p.beta = v(rng);
  return p;
}

Problem3D random_problem_3d(std::mt19937_64& rng, const CampaignRanges& ranges) {
  std::uniform_int_distribution<long> n(1, ranges.max_n), a(1, ranges.max_a), v(-ranges.max_abs, ranges.max_abs);
  Problem3D p;
  p.n = n(rng);
  p.A = a(rng);
  p.B = v(rng);
  p.C = v(rng);
  p.beta = v(rng);
  p.gamma = v(rng);
  return p;
}

CampaignResult run_campaign(long samples_2d, long samples_3d, std::uint64_t seed, const CampaignRanges& ranges) {
  CampaignResult result;
  std::mt19937_64 rng(seed);

  for (long s = 0; s < samples_2d; ++s) {
    const Problem2D p = random_problem_2d(rng, ranges);
    try {
      const Certificate c = oracle_2d(p);
      if (c.agree && c.kernel_dim == 1) {
        ++result.passed_2d;
      } else {
        ++result.failed_2d;
        result.failures.push_back({"2d", describe(p) + ": closed form " + c.closed_form.str() + " vs oracle " +
                                             c.oracle_value.str()});
      }
    } catch (const Error& e) {
      ++result.failed_2d;
      result.failures.push_back({"2d", e.what()});
    }
  }

  for (long s = 0; s < samples_3d; ++s) {
    const Problem3D p = random_problem_3d(rng, ranges);
    try {
      const auto certs = oracle_3d(p);
      bool ok = true;
      std::string why;
      bool closed_nonzero = false;
      bool oracle_nonzero = false;
      for (std::size_t d = 0; d < certs.size(); ++d) {
        if (!certs[d].agree) {
          ok = false;
          why += " d=" + std::to_string(d) + ": closed form " + certs[d].closed_form.str() + " vs oracle " +
                 certs[d].oracle_value.str() + ";";
        }
        closed_nonzero = closed_nonzero || certs[d].closed_form.sign() != 0;
        oracle_nonzero = oracle_nonzero || certs[d].oracle_value.sign() != 0;
      }
      const NonvanishResult nv = lemma42_nonvanish(p);
      if (nv.nonvanish != closed_nonzero || nv.nonvanish != oracle_nonzero) {
        ok = false;
        why += std::string(" nonvanishing conditions say ") + (nv.nonvanish ? "true" : "false") +
               " but d-scan says " + (closed_nonzero ? "true" : "false") + ";";
      }
      if (nv.nonvanish && !nv.witness_d) {
        ok = false;
        why += " no witness d;";
      }
      if (ok) {
        ++result.passed_3d;
      } else {
        ++result.failed_3d;
        result.failures.push_back({"3d", describe(p) + ":" + why});
      }
    } catch (const Error& e) {
      ++result.failed_3d;
      result.failures.push_back({"3d", e.what()});
    }
  }
  return result;
}

}  // namespace mds
