#pragma once

// Finite-domain search over deformation shapes. Internal to the library.
//
// Every window position is a variable. Positions outside [U, tau V] have the
// domain {0}; U and tau V are pinned to 1; the rest range over
// [0, min(hom(U,W), hom(W,tau V))]. Each W other than U, V contributes the
// row delta(W) + delta(tau W) <= sum mult * delta(eps W), propagated to a
// bounds-consistent fixpoint before every branch.
//
// Rows alone see only one mesh at a time. Once a prefix of the window is
// fixed, its multiplicities s(W) are known and
//   delta(N) = hom(U,N) + hom(V,N) - sum_W s(W) hom(W,N)
// caps every later value from above; the search keeps that cap current.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "degenkit/shapes.hpp"

namespace degenkit::detail {

struct Row {
  std::size_t x = 0;
  std::optional<std::size_t> y;  // tau X, absent at projectives
  std::vector<std::pair<std::size_t, std::int64_t>> rhs;
};

struct ShapeProblem {
  const ARComponent* component = nullptr;
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
  std::vector<Row> rows;
  std::vector<std::vector<std::size_t>> watch;  // position -> rows mentioning it
  std::vector<std::size_t> order;               // branching positions, ascending
  std::vector<std::int64_t> blocks_coeff;       // blocks = sum coeff * delta
  std::vector<std::optional<std::size_t>> row_at;  // row owned by a position
  std::vector<std::int64_t> hom_bound;          // hom(U,N) + hom(V,N)
};

// `cap`, when given, bounds every value from above (box below a shape).
ShapeProblem build_problem(const ShapeContext& ctx, const std::vector<std::int64_t>* cap = nullptr);

enum class Mode {
  All,          // every solution
  Minimal,      // pointwise-minimal solutions (lex-least, then split below it)
  First,        // lexicographically least solution only
  MinBlocks,    // least block count
};

struct SearchResult {
  std::vector<std::vector<std::int64_t>> solutions;  // dense values
  std::optional<std::int64_t> best_blocks;
};

SearchResult search_serial(const ShapeProblem& p, Mode mode);
SearchResult search_parallel(const ShapeProblem& p, Mode mode);

// Keeps the pointwise-minimal members of a solution list (input order kept).
std::vector<std::vector<std::int64_t>> minimal_only(std::vector<std::vector<std::int64_t>> sols);

}  // namespace degenkit::detail
