#pragma once

// Exact integer and rational linear algebra used by the quiver core.
// Nothing here touches floating point.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace degenkit {

using Rational = mpq_class;
using BigInt = mpz_class;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

namespace exact {

// Overflow-checked 64-bit arithmetic; throws Error(Overflow).
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);

RationalMatrix to_rational(const IntMatrix& m);
RationalMatrix identity(std::size_t n);
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);
RationalVector multiply(const RationalMatrix& a, const RationalVector& x);
RationalMatrix transpose(const RationalMatrix& a);
IntVector multiply(const IntMatrix& a, const IntVector& x);

// Brings m to reduced row echelon form in place and returns the pivot column
// of each nonzero row.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols);

std::size_t rank(RationalMatrix m);
std::vector<RationalVector> kernel_basis(const RationalMatrix& m);
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<BigInt> primitive(const RationalVector& v);

// One row a.x <= b of a polyhedron.
struct Inequality {
  RationalVector coeffs;
  Rational bound;
};

// Fourier-Motzkin elimination of variable `var`. Rows not mentioning it are
// kept; constant rows are dropped when satisfied. Returns nullopt when some
// constant row is violated.
std::optional<std::vector<Inequality>> eliminate(const std::vector<Inequality>& rows,
                                                 std::size_t var);

bool feasible(std::vector<Inequality> rows, std::size_t nvars);

// Exact range of x_var over the polyhedron; nullopt when empty. A missing
// side of the pair means unbounded in that direction.
struct Range {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
};
std::optional<Range> variable_range(std::vector<Inequality> rows, std::size_t nvars,
                                    std::size_t var);

// Affine parametrisation of {x : A x = b}: pivot variables expressed through the
// free ones, x_pivot[i] = offset[i] - sum_j coeff[i][j] * x_free[j].
struct AffineSolution {
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> free;
  RationalVector offset;
  RationalMatrix coeff;
};
std::optional<AffineSolution> solve_affine(const RationalMatrix& a, const RationalVector& b);

}  // namespace exact
}  // namespace degenkit
