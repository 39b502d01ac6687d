#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "degenkit/ar_component.hpp"

namespace degenkit {

// A pair (U, V) with tau^{-1} U preceding V, together with a knitted window
// reaching at least two slices past V. Shapes live on [U, tau V].
class ShapeContext {
 public:
  // Knits max(depth, shift(V) + 2). Throws BadPair.
  ShapeContext(const Quiver& q, IndecRef u, IndecRef v, int depth = 0);
  // Reuses z when it is deep enough, otherwise knits a deeper copy.
  ShapeContext(std::shared_ptr<const ARComponent> z, IndecRef u, IndecRef v);

  const ARComponent& component() const { return *component_; }
  const std::shared_ptr<const ARComponent>& component_ptr() const { return component_; }
  const Quiver& quiver() const { return component_->quiver(); }
  IndecRef U() const { return u_; }
  IndecRef V() const { return v_; }
  IndecRef tauV() const { return {v_.vertex, v_.shift - 1}; }
  // interval(U, tau V), in window order
  const std::vector<IndecRef>& range() const { return range_; }

  static int required_depth(IndecRef v) { return v.shift + 2; }

 private:
  void check();

  std::shared_ptr<const ARComponent> component_;
  IndecRef u_;
  IndecRef v_;
  std::vector<IndecRef> range_;
};

// A candidate deformation shape: a function on the window, stored densely by
// window position. Nothing is enforced on construction; see validate().
struct DeformationShape {
  ShapeContext context;
  std::vector<std::int64_t> values;

  explicit DeformationShape(ShapeContext ctx);
  DeformationShape(ShapeContext ctx, std::vector<std::int64_t> dense);

  std::int64_t at(IndecRef w) const;  // 0 outside the window
  void set(IndecRef w, std::int64_t value);
  std::vector<IndecRef> support() const;

  friend bool operator==(const DeformationShape& a, const DeformationShape& b) {
    return a.context.U() == b.context.U() && a.context.V() == b.context.V() && a.values == b.values;
  }
};

// Direct-sum decomposition of a module into preprojective indecomposables.
struct ModuleMultiset {
  std::map<IndecRef, std::int64_t> multiplicities;

  std::int64_t total() const;
  friend bool operator==(const ModuleMultiset&, const ModuleMultiset&) = default;
};

DeformationShape indicator_shape(const ShapeContext& ctx);

// s(delta, W); -1 at U and V by convention.
std::int64_t subadditivity(const DeformationShape& d, IndecRef w);

bool validate(const DeformationShape& d);
// First violated condition in words, or nullopt when the shape is valid.
std::optional<std::string> validation_failure(const DeformationShape& d);

ModuleMultiset module_of_shape(const DeformationShape& d);  // throws InvalidShape
DeformationShape shape_of_module(const ModuleMultiset& m, const ShapeContext& ctx);  // throws NotAShape

// hom(U+V, U+V) - hom(M, M)
std::int64_t codimension(const DeformationShape& d);
// delta(M) + 1; agrees with codimension() on minimal shapes
std::int64_t codim_formula(const DeformationShape& d);
std::int64_t blocks(const DeformationShape& d);
IntVector t_vector(const DeformationShape& d);
IntVector v_vector(const DeformationShape& d);
bool has_connected_support(const DeformationShape& d);

// Enumeration. Results are sorted slice-major: by shift, then by vertex
// index, then by value. The parallel versions fan search subtrees out to
// OpenMP threads and return exactly the serial result.
std::vector<DeformationShape> enumerate_shapes(const ShapeContext& ctx);
std::vector<DeformationShape> enumerate_shapes_serial(const ShapeContext& ctx);
std::vector<DeformationShape> enumerate_minimal_shapes(const ShapeContext& ctx);
std::vector<DeformationShape> enumerate_minimal_shapes_serial(const ShapeContext& ctx);
bool has_shape(const ShapeContext& ctx);

// True iff no other shape lies pointwise below d. Throws InvalidShape.
bool is_minimal(const DeformationShape& d);

// Least number of blocks over all shapes of the pair, or nullopt if the pair
// has no shape.
std::optional<std::int64_t> min_blocks(const ShapeContext& ctx);

// K(j): least block count over pairs in the window (V of shift <= depth) at
// distance >= j that admit a shape. Entry j of the table; nullopt where no
// pair qualifies. Throws NotWild.
std::vector<std::optional<std::int64_t>> empirical_K_table(const Quiver& q, int depth);
std::optional<std::int64_t> empirical_K(const Quiver& q, int depth, int j);

struct ShapeReport {
  std::int64_t codimension = 0;
  std::int64_t codim_formula = 0;
  std::int64_t blocks = 0;
  bool minimal = false;
  IntVector t;
  IntVector v;
};
ShapeReport report(const DeformationShape& d);

nlohmann::json to_json(const DeformationShape& d);
nlohmann::json to_json(const Quiver& q, const ModuleMultiset& m);
DeformationShape shape_from_json(const nlohmann::json& j, const Quiver& q, int depth = 0);

}  // namespace degenkit
