#include "seshadri/oracle.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>

#include "seshadri/error.hpp"

namespace seshadri {

namespace {

constexpr std::uint64_t kSampleRange = 65536;  // numerators in [1, 2^16]
constexpr long kSampleDenominator = 65537;      // 2^16 + 1

// alpha (alpha - 1) ... (alpha - a + 1)
mpz_class falling(std::int64_t alpha, std::int64_t a) {
  mpz_class out = 1;
  for (std::int64_t i = 0; i < a; ++i) out *= static_cast<long>(alpha - i);
  return out;
}

struct RowKey {
  std::size_t point;
  std::int64_t a, b;
};

std::vector<RowKey> condition_rows(const MultiplicitySpec& spec) {
  std::vector<RowKey> rows;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const std::int64_t m = spec.values()[j];
    for (std::int64_t s = 0; s < m; ++s) {
      for (std::int64_t a = 0; a <= s; ++a) rows.push_back({j, a, s - a});
    }
  }
  return rows;
}

Rational rational_pow(const Rational& base, std::int64_t e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(num, den);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t out = 1 % p;
  base %= p;
  while (e) {
    if (e & 1) out = mulmod(out, base, p);
    base = mulmod(base, base, p);
    e >>= 1;
  }
  return out;
}

std::uint64_t reduce_mod(const mpz_class& v, std::uint64_t p) {
  static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));
  return mpz_fdiv_ui(v.get_mpz_t(), p);
}

std::uint64_t reduce_mod(const Rational& q, std::uint64_t p) {
  const std::uint64_t den = reduce_mod(q.den(), p);
  if (den == 0) throw Error(ErrorKind::PrimeTooSmall, "denominator of " + q.str() + " vanishes mod p");
  return mulmod(reduce_mod(q.num(), p), powmod(den, p - 2, p), p);
}

// Bareiss fraction-free row echelon form over Z; returns the rank.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const mpz_class& pv = a[rank][c];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = pv * a[i][j] - a[i][c] * a[rank][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

std::size_t gauss_rank_mod(std::vector<std::vector<std::uint64_t>> a, std::uint64_t p) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const std::uint64_t inv = powmod(a[rank][c], p - 2, p);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t factor = mulmod(a[i][c], inv, p);
      for (std::size_t j = c; j < cols; ++j) {
        a[i][j] = (a[i][j] + p - mulmod(factor, a[rank][j], p)) % p;
      }
    }
    ++rank;
  }
  return rank;
}

OracleVerdict make_verdict(const LatticeSet& monomials, const MultiplicitySpec& spec, std::size_t rank,
                           OracleMethod method) {
  OracleVerdict v;
  v.actual_dimension = static_cast<std::int64_t>(monomials.size()) - 1 - static_cast<std::int64_t>(rank);
  v.expected_dimension = expected_dimension(static_cast<std::int64_t>(monomials.size()), spec);
  v.non_special = v.actual_dimension == v.expected_dimension;
  v.method = method;
  return v;
}

void check_arity(const GenericPointSet& points, const MultiplicitySpec& spec) {
  if (points.points.size() != spec.size()) {
    throw Error(ErrorKind::ArityMismatch, std::to_string(points.points.size()) + " points for " +
                                              std::to_string(spec.size()) + " multiplicities");
  }
}

void check_prime(const LatticeSet& monomials, std::uint64_t prime) {
  std::int64_t top = 1;
  for (const auto& p : monomials) top = std::max({top, p.alpha, p.beta});
  if (!is_prime(prime) || prime <= static_cast<std::uint64_t>(top)) {
    throw Error(ErrorKind::PrimeTooSmall, std::to_string(prime) + " is not a prime exceeding every exponent (" +
                                              std::to_string(top) + ")");
  }
}

std::uint64_t next_draw(std::mt19937_64& gen, std::uint64_t range) {
  // rejection sampling keeps the draw uniform and platform independent
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do {
    v = gen();
  } while (v >= limit);
  return v % range;
}

std::size_t modular_rank_at(const LatticeSet& monomials, const MultiplicitySpec& spec,
                            const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pts, std::uint64_t p) {
  const auto rows = condition_rows(spec);
  std::vector<std::vector<std::uint64_t>> a(rows.size(), std::vector<std::uint64_t>(monomials.size(), 0));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& key = rows[r];
    const auto [x, y] = pts[key.point];
    std::size_t c = 0;
    for (const auto& mono : monomials) {
      if (key.a <= mono.alpha && key.b <= mono.beta) {
        std::uint64_t coeff = 1;
        for (std::int64_t i = 0; i < key.a; ++i) coeff = mulmod(coeff, static_cast<std::uint64_t>(mono.alpha - i), p);
        for (std::int64_t i = 0; i < key.b; ++i) coeff = mulmod(coeff, static_cast<std::uint64_t>(mono.beta - i), p);
        coeff = mulmod(coeff, powmod(x, static_cast<std::uint64_t>(mono.alpha - key.a), p), p);
        coeff = mulmod(coeff, powmod(y, static_cast<std::uint64_t>(mono.beta - key.b), p), p);
        a[r][c] = coeff;
      }
      ++c;
    }
  }
  return gauss_rank_mod(std::move(a), p);
}

}  // namespace

const char* to_string(OracleMethod method) { return method == OracleMethod::ExactRational ? "exact-rational" : "modular"; }

GenericPointSet GenericPointSet::explicit_points(std::vector<Point> points) {
  std::set<Point> seen(points.begin(), points.end());
  if (seen.size() != points.size()) throw Error(ErrorKind::DegenerateInput, "points must be pairwise distinct");
  return GenericPointSet{std::move(points), Source::Explicit, std::nullopt};
}

GenericPointSet GenericPointSet::seeded(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::set<Point> seen;
  std::vector<Point> pts;
  while (pts.size() < count) {
    const long xn = static_cast<long>(next_draw(gen, kSampleRange)) + 1;
    const long yn = static_cast<long>(next_draw(gen, kSampleRange)) + 1;
    Point p{Rational(xn, kSampleDenominator), Rational(yn, kSampleDenominator)};
    if (seen.insert(p).second) pts.push_back(std::move(p));
  }
  return GenericPointSet{std::move(pts), Source::SeededRandom, seed};
}

RationalMatrix interpolation_matrix(const LatticeSet& monomials, const GenericPointSet& points,
                                    const MultiplicitySpec& spec) {
  check_arity(points, spec);
  const auto rows = condition_rows(spec);
  RationalMatrix out{rows.size(), monomials.size(), {}};
  out.entries.reserve(out.rows * out.cols);
  for (const auto& key : rows) {
    const Point& pt = points.points[key.point];
    for (const auto& mono : monomials) {
      if (key.a > mono.alpha || key.b > mono.beta) {
        out.entries.emplace_back(0);
        continue;
      }
      const Rational coeff(falling(mono.alpha, key.a) * falling(mono.beta, key.b), mpz_class(1));
      out.entries.push_back(coeff * rational_pow(pt.x, mono.alpha - key.a) * rational_pow(pt.y, mono.beta - key.b));
    }
  }
  return out;
}

std::size_t exact_rank(const RationalMatrix& matrix) {
  // scale each row by the lcm of its denominators; row scaling keeps the rank
  std::vector<std::vector<mpz_class>> a(matrix.rows, std::vector<mpz_class>(matrix.cols));
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < matrix.cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), matrix.at(r, c).den().get_mpz_t());
    for (std::size_t c = 0; c < matrix.cols; ++c) {
      const Rational& v = matrix.at(r, c);
      a[r][c] = v.num() * (l / v.den());
    }
  }
  return bareiss_rank(std::move(a));
}

std::size_t modular_rank(const RationalMatrix& matrix, std::uint64_t prime) {
  std::vector<std::vector<std::uint64_t>> a(matrix.rows, std::vector<std::uint64_t>(matrix.cols));
  for (std::size_t r = 0; r < matrix.rows; ++r) {
    for (std::size_t c = 0; c < matrix.cols; ++c) a[r][c] = reduce_mod(matrix.at(r, c), prime);
  }
  return gauss_rank_mod(std::move(a), prime);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these bases are deterministic for every 64-bit n
  for (std::uint64_t base : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(base, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s && composite; ++i) {
      x = mulmod(x, x, n);
      composite = x != n - 1;
    }
    if (composite) return false;
  }
  return true;
}

OracleVerdict system_dimension_exact(const LatticeSet& monomials, const MultiplicitySpec& spec,
                                     const GenericPointSet& points, std::size_t max_cells) {
  check_arity(points, spec);
  const std::size_t cells = static_cast<std::size_t>(spec.conditions()) * monomials.size();
  if (cells > max_cells) {
    throw Error(ErrorKind::SizeGuardrail, "interpolation matrix has " + std::to_string(cells) +
                                              " cells, above the exact-mode cap of " + std::to_string(max_cells));
  }
  OracleVerdict v = make_verdict(monomials, spec, exact_rank(interpolation_matrix(monomials, points, spec)),
                                 OracleMethod::ExactRational);
  v.seed = points.seed;
  if (v.non_special || points.source != GenericPointSet::Source::SeededRandom || !points.seed) return v;

  const std::uint64_t fresh = *points.seed + 1;
  const GenericPointSet retry_points = GenericPointSet::seeded(points.points.size(), fresh);
  OracleVerdict retry = make_verdict(monomials, spec, exact_rank(interpolation_matrix(monomials, retry_points, spec)),
                                     OracleMethod::ExactRational);
  retry.seed = fresh;
  if (retry.actual_dimension == v.actual_dimension) {
    v.caveat = "special at seeds " + std::to_string(*points.seed) + " and " + std::to_string(fresh);
    return v;
  }
  // a lower dimension at another point set exposes a non-generic first draw
  OracleVerdict& best = retry.actual_dimension < v.actual_dimension ? retry : v;
  best.caveat = "seed " + std::to_string(*points.seed) + " gave dimension " + std::to_string(v.actual_dimension) +
                ", seed " + std::to_string(fresh) + " gave " + std::to_string(retry.actual_dimension);
  return best;
}

OracleVerdict system_dimension_modp(const LatticeSet& monomials, const MultiplicitySpec& spec, std::uint64_t seed,
                                    std::uint64_t prime) {
  check_prime(monomials, prime);
  std::mt19937_64 gen(seed);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
  while (pts.size() < spec.size()) {
    const std::uint64_t x = next_draw(gen, prime - 1) + 1;
    const std::uint64_t y = next_draw(gen, prime - 1) + 1;
    if (seen.insert({x, y}).second) pts.emplace_back(x, y);
  }
  OracleVerdict v = make_verdict(monomials, spec, modular_rank_at(monomials, spec, pts, prime), OracleMethod::Modular);
  v.prime = prime;
  v.seed = seed;
  v.caveat = v.non_special ? "rank mod p at random points; non-special up to an unlucky choice of points"
                           : "rank mod p at random points only bounds the generic rank from below; special is inconclusive";
  return v;
}

OracleVerdict system_dimension_modp(const LatticeSet& monomials, const MultiplicitySpec& spec,
                                    const GenericPointSet& points, std::uint64_t prime) {
  check_arity(points, spec);
  check_prime(monomials, prime);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
  for (const auto& p : points.points) pts.emplace_back(reduce_mod(p.x, prime), reduce_mod(p.y, prime));
  OracleVerdict v = make_verdict(monomials, spec, modular_rank_at(monomials, spec, pts, prime), OracleMethod::Modular);
  v.prime = prime;
  v.seed = points.seed;
  v.caveat = "rank mod p at the given points reduced mod p";
  return v;
}

std::size_t veronese_rank(const LatticeSet& points, std::int64_t degree) {
  std::vector<std::vector<mpz_class>> a;
  for (const auto& p : points) {
    std::vector<mpz_class> row;
    for (std::int64_t s = 0; s <= degree; ++s) {
      for (std::int64_t i = 0; i <= s; ++i) {
        mpz_class xi, yj;
        mpz_ui_pow_ui(xi.get_mpz_t(), static_cast<unsigned long>(p.alpha), static_cast<unsigned long>(i));
        mpz_ui_pow_ui(yj.get_mpz_t(), static_cast<unsigned long>(p.beta), static_cast<unsigned long>(s - i));
        row.push_back(xi * yj);
      }
    }
    a.push_back(std::move(row));
  }
  return bareiss_rank(std::move(a));
}

bool lies_on_curve_of_degree(const LatticeSet& points, std::int64_t degree) {
  const auto monomials = static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
  return veronese_rank(points, degree) < monomials;
}

}  // namespace seshadri
