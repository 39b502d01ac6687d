#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "degenkit/exact.hpp"
#include "degenkit/quiver.hpp"

namespace degenkit {

// (vertex, shift) names the preprojective indecomposable tau^{-shift} P_vertex.
struct IndecRef {
  std::size_t vertex = 0;
  int shift = 0;

  friend auto operator<=>(const IndecRef&, const IndecRef&) = default;
};

std::string format_ref(const Quiver& q, IndecRef r);
IndecRef parse_ref(const Quiver& q, std::string_view text);  // "vertex:shift"

struct Summand {
  IndecRef ref;
  int mult = 1;
};

// One member per tau-orbit, stored as the shift chosen for each vertex.
struct Slice {
  std::vector<int> shift;

  IndecRef member(std::size_t vertex) const { return {vertex, shift.at(vertex)}; }
  friend bool operator==(const Slice&, const Slice&) = default;
};

// Knitted window of the preprojective Auslander-Reiten component: every
// tau^{-i} P_p with i <= depth. Immutable once built; all queries are const and
// safe to share between threads.
class ARComponent {
 public:
  const Quiver& quiver() const { return quiver_; }
  int depth() const { return depth_; }

  // Window positions enumerate refs along a linear extension of the path
  // order: shift-major, then topological rank of the vertex (sinks first).
  std::size_t size() const { return refs_.size(); }
  std::size_t position(IndecRef r) const;  // throws OutOfWindow
  IndecRef ref(std::size_t pos) const { return refs_.at(pos); }

  bool in_window(IndecRef r) const;
  // False for refs past the end of a finite-type orbit.
  bool exists(IndecRef r) const;
  bool truncated() const { return truncated_; }

  const IntVector& dim(IndecRef r) const;
  // Middle term of the AR sequence ending in r, or rad r for projectives.
  const std::vector<Summand>& middle_term(IndecRef r) const;
  // AR arrows leaving r (targets inside the window only).
  const std::vector<Summand>& successors(IndecRef r) const;
  std::optional<IndecRef> translate(IndecRef r) const;  // tau

  bool precedes(IndecRef x, IndecRef y) const;
  std::vector<IndecRef> interval(IndecRef u, IndecRef v) const;
  // Directed shortest path length when u precedes v, undirected otherwise.
  int distance(IndecRef u, IndecRef v) const;
  std::int64_t hom_dim(IndecRef x, IndecRef y) const;
  const IntMatrix& hom_table() const { return hom_; }

  // Multiplicity of the AR arrow x -> y (0 if none).
  int arrow_mult(IndecRef x, IndecRef y) const;

  friend ARComponent knit(const Quiver& q, int depth);

 private:
  explicit ARComponent(Quiver q) : quiver_(std::move(q)) {}
  std::size_t checked_position(IndecRef r) const;

  Quiver quiver_;
  int depth_ = 0;
  bool truncated_ = false;
  std::vector<IndecRef> refs_;
  std::vector<bool> exists_;
  std::vector<IntVector> dim_;
  std::vector<std::vector<Summand>> middle_;
  std::vector<std::vector<Summand>> succ_;
  std::vector<std::vector<std::uint64_t>> reach_;
  IntMatrix hom_;

  friend IntMatrix hom_table_serial(const ARComponent& z);
  friend IntMatrix hom_table_parallel(const ARComponent& z);
};

ARComponent knit(const Quiver& q, int depth);

// Full hom-dimension table over the window, row = source position. The serial
// version is the reference for the OpenMP one.
IntMatrix hom_table_serial(const ARComponent& z);
IntMatrix hom_table_parallel(const ARComponent& z);

// Slices -------------------------------------------------------------------

bool is_slice(const ARComponent& z, const Slice& r);
std::vector<std::size_t> slice_sources(const ARComponent& z, const Slice& r);
std::vector<std::size_t> slice_sinks(const ARComponent& z, const Slice& r);

// Unique slice whose only source (resp. sink) is x. Throws NoSuchSlice when
// it does not exist inside the window.
Slice slice_from_source(const ARComponent& z, IndecRef x);
Slice slice_to_sink(const ARComponent& z, IndecRef x);

// Replace the member (p,i) of r, which must be a source of r, by (p,i+1).
Slice reflect_slice(const ARComponent& z, const Slice& r, std::size_t p);

// Reflection of the quiver at a sink p. Component refs of the reflected
// quiver embed into those of the original via (q,i) -> (q,i) for q != p and
// (p,i) -> (p,i+1).
struct SinkReflection {
  Quiver reflected;
  std::size_t sink = 0;

  IndecRef map(IndecRef r) const {
    return r.vertex == sink ? IndecRef{r.vertex, r.shift + 1} : r;
  }
};

SinkReflection reflect_quiver_at_sink(const Quiver& q, std::size_t p);

nlohmann::json to_json(const ARComponent& z);

}  // namespace degenkit
