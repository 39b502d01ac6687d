#pragma once

// Brute-force reference computations. Deliberately naive: each one follows a
// definition directly and shares no code path with the library search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "degenkit/ar_component.hpp"
#include "degenkit/shapes.hpp"

namespace oracle {

using degenkit::IndecRef;
using degenkit::IntMatrix;
using degenkit::IntVector;

inline IntVector times(const IntMatrix& a, const IntVector& x) {
  IntVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

inline IntMatrix times(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.size(), IntVector(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

// Least positive integer vector in ker C with entries <= cap, by exhaustion.
inline std::optional<IntVector> smallest_kernel_vector(const IntMatrix& c, int cap) {
  const auto n = c.size();
  IntVector v(n, 1);
  std::optional<IntVector> best;
  std::int64_t best_sum = 0;
  while (true) {
    const auto cv = times(c, v);
    if (std::all_of(cv.begin(), cv.end(), [](auto x) { return x == 0; })) {
      std::int64_t sum = 0;
      for (auto x : v) sum += x;
      if (!best || sum < best_sum) best = v, best_sum = sum;
    }
    std::size_t i = 0;
    while (i < n && v[i] == cap) v[i++] = 1;
    if (i == n) break;
    ++v[i];
  }
  return best;
}

// Simple reflection s_i(x) = x - (C x)_i e_i as a matrix.
inline IntMatrix reflection(const IntMatrix& c, std::size_t i) {
  const auto n = c.size();
  IntMatrix s(n, IntVector(n, 0));
  for (std::size_t k = 0; k < n; ++k) s[k][k] = 1;
  for (std::size_t j = 0; j < n; ++j) s[i][j] -= c[i][j];
  return s;
}

// Product of simple reflections in the given vertex order (first applied last).
inline IntMatrix reflection_product(const IntMatrix& c, const std::vector<std::size_t>& order) {
  const auto n = c.size();
  IntMatrix out(n, IntVector(n, 0));
  for (std::size_t k = 0; k < n; ++k) out[k][k] = 1;
  for (auto i : order) out = times(out, reflection(c, i));
  return out;
}

// Least h with phi^h(x) - x a rational multiple of root for every basis x.
inline int order_mod_root(const IntMatrix& phi, const IntVector& root, int cap) {
  const auto n = phi.size();
  IntMatrix power = phi;
  for (int h = 1; h <= cap; ++h) {
    bool ok = true;
    for (std::size_t col = 0; col < n && ok; ++col) {
      IntVector diff(n);
      for (std::size_t r = 0; r < n; ++r) diff[r] = power[r][col] - (r == col ? 1 : 0);
      // diff parallel to root: diff_r * root_s == diff_s * root_r
      for (std::size_t r = 0; r < n && ok; ++r)
        for (std::size_t s = 0; s < n && ok; ++s) ok = diff[r] * root[s] == diff[s] * root[r];
    }
    if (ok) return h;
    power = times(power, phi);
  }
  return -1;
}

// s(delta, W) straight from the mesh data, no conventions at U and V.
inline std::int64_t mesh_defect(const degenkit::ARComponent& z, const std::function<std::int64_t(IndecRef)>& f,
                                IndecRef w) {
  std::int64_t s = -f(w);
  for (const auto& e : z.middle_term(w)) s += e.mult * f(e.ref);
  if (auto t = z.translate(w)) s -= f(*t);
  return s;
}

// Every function on [U, tau V] with delta(W) <= hom(U,W) + hom(V,W) that
// satisfies the shape conditions, found by running through the whole box.
inline std::vector<std::vector<std::int64_t>> all_shapes(const degenkit::ShapeContext& ctx,
                                                         std::int64_t box_limit = 2'000'000) {
  const auto& z = ctx.component();
  std::vector<IndecRef> free;
  std::vector<std::int64_t> top;
  std::int64_t box = 1;
  for (auto w : ctx.range()) {
    if (w == ctx.U() || w == ctx.tauV()) continue;
    free.push_back(w);
    top.push_back(z.hom_dim(ctx.U(), w) + z.hom_dim(ctx.V(), w));
    box *= top.back() + 1;
    if (box > box_limit) throw std::runtime_error("oracle box too large");
  }
  std::vector<std::int64_t> values(z.size(), 0);
  values[z.position(ctx.U())] = 1;
  values[z.position(ctx.tauV())] = 1;
  auto f = [&](IndecRef r) -> std::int64_t { return z.in_window(r) ? values[z.position(r)] : 0; };

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur(free.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < free.size(); ++k) values[z.position(free[k])] = cur[k];
    bool ok = true;
    for (std::size_t pos = 0; pos < z.size() && ok; ++pos) {
      const auto w = z.ref(pos);
      if (!z.exists(w) || w == ctx.U() || w == ctx.V()) continue;
      ok = mesh_defect(z, f, w) >= 0;
    }
    if (ok) out.push_back(values);
    std::size_t k = 0;
    while (k < free.size() && cur[k] == top[k]) cur[k++] = 0;
    if (k == free.size()) break;
    ++cur[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool below(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline std::vector<std::vector<std::int64_t>> minimal_elements(const std::vector<std::vector<std::int64_t>>& all) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& a : all) {
    bool minimal = true;
    for (const auto& b : all)
      if (b != a && below(b, a)) minimal = false;
    if (minimal) out.push_back(a);
  }
  return out;
}

inline std::vector<std::vector<std::int64_t>> values_of(const std::vector<degenkit::DeformationShape>& shapes) {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& d : shapes) out.push_back(d.values);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
