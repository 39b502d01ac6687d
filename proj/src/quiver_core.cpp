#include "degenkit/quiver_core.hpp"

#include <algorithm>
#include <functional>

#include "degenkit/error.hpp"

namespace degenkit {

std::string_view to_string(RepresentationType t) {
  switch (t) {
    case RepresentationType::Finite: return "finite";
    case RepresentationType::Tame: return "tame";
    case RepresentationType::Wild: return "wild";
  }
  return "?";
}

IntMatrix cartan_matrix(const Quiver& q) {
  const auto n = q.size();
  IntMatrix c(n, IntVector(n, 0));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r) c[p][r] = p == r ? 2 : -q.edges(p, r);
  return c;
}

IntMatrix euler_matrix(const Quiver& q) {
  const auto n = q.size();
  IntMatrix e(n, IntVector(n, 0));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r) e[p][r] = (p == r ? 1 : 0) - q.arrows(p, r);
  return e;
}

RationalMatrix coxeter_matrix(const Quiver& q) {
  const auto e = exact::to_rational(euler_matrix(q));
  // E is unitriangular in topological order, so it is always invertible.
  auto inv_t = *exact::inverse(exact::transpose(e));
  auto phi = exact::multiply(inv_t, e);
  for (auto& row : phi)
    for (auto& x : row) x = -x;
  return phi;
}

RepresentationType form_type(const IntMatrix& symmetric) {
  auto a = exact::to_rational(symmetric);
  const auto n = a.size();
  bool definite = true;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational d = a[k][k];
    if (d < 0) return RepresentationType::Wild;
    if (d == 0) {
      // A semidefinite matrix with a zero pivot has a zero row there.
      for (std::size_t j = k + 1; j < n; ++j)
        if (a[k][j] != 0) return RepresentationType::Wild;
      definite = false;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      const Rational f = a[i][k] / d;
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
      a[i][k] = 0;
    }
  }
  return definite ? RepresentationType::Finite : RepresentationType::Tame;
}

RepresentationType representation_type(const Quiver& q) { return form_type(cartan_matrix(q)); }

IntVector null_root(const Quiver& q) {
  if (representation_type(q) != RepresentationType::Tame)
    fail(ErrorKind::NotTame, "null root requested for a quiver that is not tame");
  const auto basis = exact::kernel_basis(exact::to_rational(cartan_matrix(q)));
  if (basis.size() != 1) fail(ErrorKind::NotTame, "kernel of the Cartan matrix is not one-dimensional");
  auto prim = exact::primitive(basis[0]);
  if (std::any_of(prim.begin(), prim.end(), [](const BigInt& x) { return x < 0; }))
    for (auto& x : prim) x = -x;
  IntVector out;
  for (const auto& x : prim) {
    if (x < 0) fail(ErrorKind::NotTame, "kernel generator has mixed signs");
    out.push_back(x.get_si());
  }
  if (std::find(out.begin(), out.end(), 1) == out.end())
    fail(ErrorKind::NotTame, "kernel generator has no entry equal to 1");
  return out;
}

int coxeter_number(const Quiver& q, int cap) {
  const auto root = null_root(q);
  const auto phi = coxeter_matrix(q);
  const auto n = q.size();
  const std::size_t anchor = static_cast<std::size_t>(std::find(root.begin(), root.end(), 1) - root.begin());
  auto power = exact::identity(n);
  for (int k = 1; k <= cap; ++k) {
    power = exact::multiply(phi, power);
    bool trivial = true;
    for (std::size_t col = 0; col < n && trivial; ++col) {
      // column of (Phi^k - I) must be a multiple of the null root
      const Rational lambda = power[anchor][col] - (anchor == col ? 1 : 0);
      for (std::size_t row = 0; row < n; ++row) {
        const Rational entry = power[row][col] - (row == col ? 1 : 0);
        if (entry != lambda * static_cast<long>(root[row])) {
          trivial = false;
          break;
        }
      }
    }
    if (trivial) return k;
  }
  fail(ErrorKind::CapExceeded, "Coxeter transformation order not found within " + std::to_string(cap) + " iterations");
}

namespace {

// Rows of {x >= 0, A x = b} rewritten over the free variables of the affine
// solution set.
std::vector<exact::Inequality> nonnegativity_rows(const exact::AffineSolution& sol) {
  const auto f = sol.free.size();
  std::vector<exact::Inequality> rows;
  for (std::size_t j = 0; j < f; ++j) {
    exact::Inequality r{RationalVector(f, 0), 0};
    r.coeffs[j] = -1;
    rows.push_back(std::move(r));
  }
  for (std::size_t i = 0; i < sol.pivots.size(); ++i) rows.push_back({sol.coeff[i], sol.offset[i]});
  return rows;
}

}  // namespace

bool is_mixed_kernel(const IntMatrix& c) {
  const auto n = c.size();
  auto a = exact::to_rational(c);
  RationalVector b(n, 0);
  a.push_back(RationalVector(n, 1));
  b.push_back(1);
  const auto sol = exact::solve_affine(a, b);
  if (!sol) return true;
  return !exact::feasible(nonnegativity_rows(*sol), sol->free.size());
}

std::vector<IntVector> bounded_fiber(const IntMatrix& c, const IntVector& t) {
  if (!is_mixed_kernel(c)) fail(ErrorKind::NotMixed, "kernel of C is not mixed; fibre may be infinite");
  const auto n = c.size();
  auto a = exact::to_rational(c);
  for (auto& row : a)
    for (auto& x : row) x = -x;
  RationalVector b;
  for (auto x : t) b.emplace_back(static_cast<long>(x));
  const auto sol = exact::solve_affine(a, b);
  if (!sol) return {};
  const auto f = sol->free.size();
  const auto base_rows = nonnegativity_rows(*sol);

  std::vector<IntVector> out;
  std::vector<BigInt> chosen;
  std::function<void()> branch = [&]() {
    const auto k = chosen.size();
    if (k == f) {
      IntVector v(n, 0);
      for (std::size_t j = 0; j < f; ++j) v[sol->free[j]] = chosen[j].get_si();
      for (std::size_t i = 0; i < sol->pivots.size(); ++i) {
        Rational x = sol->offset[i];
        for (std::size_t j = 0; j < f; ++j) x -= sol->coeff[i][j] * Rational(chosen[j]);
        if (x < 0 || x.get_den() != 1) return;
        v[sol->pivots[i]] = x.get_num().get_si();
      }
      out.push_back(std::move(v));
      return;
    }
    // restrict rows to the still-free suffix k..f-1
    std::vector<exact::Inequality> rows;
    for (const auto& r : base_rows) {
      exact::Inequality s{RationalVector(r.coeffs.begin() + static_cast<long>(k), r.coeffs.end()), r.bound};
      for (std::size_t j = 0; j < k; ++j) s.bound -= r.coeffs[j] * Rational(chosen[j]);
      rows.push_back(std::move(s));
    }
    const auto range = exact::variable_range(std::move(rows), f - k, 0);
    if (!range) return;
    if (!range->lo || !range->hi) fail(ErrorKind::NotMixed, "fibre is unbounded");
    BigInt lo, hi;
    mpz_cdiv_q(lo.get_mpz_t(), range->lo->get_num_mpz_t(), range->lo->get_den_mpz_t());
    mpz_fdiv_q(hi.get_mpz_t(), range->hi->get_num_mpz_t(), range->hi->get_den_mpz_t());
    for (BigInt y = lo; y <= hi; ++y) {
      chosen.push_back(y);
      branch();
      chosen.pop_back();
    }
  };
  branch();
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace degenkit
