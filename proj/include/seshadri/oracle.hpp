#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seshadri/geometry.hpp"
#include "seshadri/lattice.hpp"

namespace seshadri {

// Points standing in for "general" points of the plane.
struct GenericPointSet {
  enum class Source { Explicit, SeededRandom };

  std::vector<Point> points;
  Source source = Source::Explicit;
  std::optional<std::uint64_t> seed;

  static GenericPointSet explicit_points(std::vector<Point> points);
  // Coordinates k / 65537 with k uniform in [1, 65536], pairwise distinct.
  static GenericPointSet seeded(std::size_t count, std::uint64_t seed);
};

struct RationalMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> entries;  // row-major

  const Rational& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
};

enum class OracleMethod { ExactRational, Modular };

const char* to_string(OracleMethod method);

struct OracleVerdict {
  std::int64_t actual_dimension = -1;
  std::int64_t expected_dimension = -1;
  bool non_special = false;
  OracleMethod method = OracleMethod::ExactRational;
  std::optional<std::uint64_t> prime;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> caveat;
};

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;
inline constexpr std::size_t kDefaultMaxCells = 4'000'000;

// Rows are (point j, derivative order (a, b)) with a + b < m_j, columns the
// monomials of D; the entry is d^a/dx^a d^b/dy^b (x^alpha y^beta) at point j.
// Rows of one point run by total order a + b, and by increasing a within it.
// Throws ArityMismatch when |points| != |spec|.
RationalMatrix interpolation_matrix(const LatticeSet& monomials, const GenericPointSet& points,
                                    const MultiplicitySpec& spec);

// Rank over Q by fraction-free elimination.
std::size_t exact_rank(const RationalMatrix& matrix);

// Rank over F_p; entries must have denominators prime to p.
std::size_t modular_rank(const RationalMatrix& matrix, std::uint64_t prime);

bool is_prime(std::uint64_t n);

// dim L_D(m_1..m_r) = |D| - 1 - rank over Q at the given points. For seeded points a
// system that looks special is retried once at a fresh seed; the larger rank wins
// and a disagreement is recorded in the caveat. SizeGuardrail when rows * cols
// exceeds `max_cells`.
OracleVerdict system_dimension_exact(const LatticeSet& monomials, const MultiplicitySpec& spec,
                                     const GenericPointSet& points, std::size_t max_cells = kDefaultMaxCells);

// Rank over F_p at seeded random points of F_p^2. The reported dimension can only
// overestimate the generic one, so "non-special" is a certificate (up to an unlucky
// choice of points) and "special" is inconclusive. PrimeTooSmall when p is not a
// prime exceeding every exponent of D.
OracleVerdict system_dimension_modp(const LatticeSet& monomials, const MultiplicitySpec& spec, std::uint64_t seed,
                                    std::uint64_t prime = kMersenne61);

// Same, at explicitly given rational points reduced mod p.
OracleVerdict system_dimension_modp(const LatticeSet& monomials, const MultiplicitySpec& spec,
                                    const GenericPointSet& points, std::uint64_t prime = kMersenne61);

// Rank of the |D| x binom(k+2, 2) evaluation matrix of the points of D (as points of
// the plane) against all monomials of degree <= k. D lies on a curve of degree k iff
// this rank is below binom(k+2, 2).
std::size_t veronese_rank(const LatticeSet& points, std::int64_t degree);
bool lies_on_curve_of_degree(const LatticeSet& points, std::int64_t degree);

}  // namespace seshadri
