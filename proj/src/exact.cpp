#include "degenkit/exact.hpp"

#include <algorithm>
#include <map>

#include "degenkit/error.hpp"

namespace degenkit::exact {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "64-bit overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "64-bit overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "64-bit overflow in multiplication");
  return r;
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    r[i].reserve(m[i].size());
    for (auto x : m[i]) r[i].emplace_back(static_cast<long>(x));
  }
  return r;
}

RationalMatrix identity(std::size_t n) {
  RationalMatrix r(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = 1;
  return r;
}

RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b[0].size();
  RationalMatrix r(n, RationalVector(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

RationalVector multiply(const RationalMatrix& a, const RationalVector& x) {
  RationalVector r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
  return r;
}

RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return {};
  RationalMatrix r(a[0].size(), RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  return r;
}

IntVector multiply(const IntMatrix& a, const IntVector& x) {
  IntVector r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) r[i] = add(r[i], mul(a[i][j], x[j]));
  return r;
}

std::vector<std::size_t> rref(RationalMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Rational p = m[row][col];
    for (auto& x : m[row]) x /= p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col];
      for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) {
  const std::size_t ncols = m.empty() ? 0 : m[0].size();
  return rref(m, ncols).size();
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  const std::size_t n = m.empty() ? 0 : m[0].size();
  RationalMatrix r = m;
  const auto pivots = rref(r, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(n, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  const std::size_t n = m.size();
  RationalMatrix aug(n, RationalVector(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = m[i][j];
    aug[i][n + i] = 1;
  }
  const auto pivots = rref(aug, n);
  if (pivots.size() != n) return std::nullopt;
  RationalMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::vector<BigInt> primitive(const RationalVector& v) {
  BigInt den = 1;
  for (const auto& x : v) {
    BigInt d = x.get_den();
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<BigInt> out;
  out.reserve(v.size());
  BigInt g = 0;
  for (const auto& x : v) {
    BigInt y = x.get_num() * (den / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), y.get_mpz_t());
    out.push_back(y);
  }
  if (g != 0)
    for (auto& y : out) y /= g;
  return out;
}

namespace {

// Scale so the first nonzero coefficient has absolute value one; keeps rows
// comparable for deduplication.
void normalise(Inequality& row) {
  for (const auto& c : row.coeffs) {
    if (c == 0) continue;
    const Rational s = abs(c);
    for (auto& x : row.coeffs) x /= s;
    row.bound /= s;
    return;
  }
}

bool is_constant(const Inequality& row) {
  return std::all_of(row.coeffs.begin(), row.coeffs.end(), [](const Rational& c) { return c == 0; });
}

// Keeps only the tightest bound among rows with identical coefficients.
std::optional<std::vector<Inequality>> tidy(std::vector<Inequality> rows) {
  std::map<RationalVector, Rational> best;
  for (auto& row : rows) {
    if (is_constant(row)) {
      if (row.bound < 0) return std::nullopt;
      continue;
    }
    normalise(row);
    auto [it, inserted] = best.emplace(row.coeffs, row.bound);
    if (!inserted && row.bound < it->second) it->second = row.bound;
  }
  std::vector<Inequality> out;
  out.reserve(best.size());
  for (auto& [coeffs, bound] : best) out.push_back({coeffs, bound});
  return out;
}

}  // namespace

std::optional<std::vector<Inequality>> eliminate(const std::vector<Inequality>& rows,
                                                 std::size_t var) {
  std::vector<const Inequality*> pos, neg;
  std::vector<Inequality> out;
  for (const auto& row : rows) {
    const auto& c = row.coeffs[var];
    if (c > 0)
      pos.push_back(&row);
    else if (c < 0)
      neg.push_back(&row);
    else
      out.push_back(row);
  }
  for (const auto* p : pos)
    for (const auto* n : neg) {
      const Rational fp = -n->coeffs[var];
      const Rational fn = p->coeffs[var];
      Inequality combined{RationalVector(p->coeffs.size()), fp * p->bound + fn * n->bound};
      for (std::size_t j = 0; j < combined.coeffs.size(); ++j)
        combined.coeffs[j] = fp * p->coeffs[j] + fn * n->coeffs[j];
      combined.coeffs[var] = 0;
      out.push_back(std::move(combined));
    }
  return tidy(std::move(out));
}

bool feasible(std::vector<Inequality> rows, std::size_t nvars) {
  auto cur = tidy(std::move(rows));
  if (!cur) return false;
  for (std::size_t v = 0; v < nvars; ++v) {
    cur = eliminate(*cur, v);
    if (!cur) return false;
  }
  return true;
}

std::optional<Range> variable_range(std::vector<Inequality> rows, std::size_t nvars,
                                    std::size_t var) {
  auto cur = tidy(std::move(rows));
  if (!cur) return std::nullopt;
  for (std::size_t v = 0; v < nvars; ++v) {
    if (v == var) continue;
    cur = eliminate(*cur, v);
    if (!cur) return std::nullopt;
  }
  Range range;
  for (const auto& row : *cur) {
    const auto& c = row.coeffs[var];
    const Rational b = row.bound / c;
    if (c > 0) {
      if (!range.hi || b < *range.hi) range.hi = b;
    } else {
      if (!range.lo || b > *range.lo) range.lo = b;
    }
  }
  if (range.lo && range.hi && *range.lo > *range.hi) return std::nullopt;
  return range;
}

std::optional<AffineSolution> solve_affine(const RationalMatrix& a, const RationalVector& b) {
  const std::size_t n = a.empty() ? 0 : a[0].size();
  RationalMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  const auto pivots = rref(aug, n);
  for (std::size_t i = pivots.size(); i < aug.size(); ++i)
    if (aug[i][n] != 0) return std::nullopt;
  AffineSolution sol;
  sol.pivots = pivots;
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) sol.free.push_back(j);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    sol.offset.push_back(aug[i][n]);
    RationalVector row;
    for (auto f : sol.free) row.push_back(aug[i][f]);
    sol.coeff.push_back(std::move(row));
  }
  return sol;
}

}  // namespace degenkit::exact
