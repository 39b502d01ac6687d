#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "degenkit/exact.hpp"

namespace degenkit {

// A finite connected acyclic quiver. Arrows are stored as multiplicities
// n(p,q) = number of arrows p -> q. Vertices keep their input order, which is
// also the row/column order of every matrix derived from the quiver.
class Quiver {
 public:
  struct Arrow {
    std::string from;
    std::string to;
    int mult = 1;
  };

  // Throws Error(InvalidQuiver) unless the quiver is nonempty, connected and
  // free of oriented cycles.
  Quiver(std::vector<std::string> vertices, const std::vector<Arrow>& arrows);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& vertices() const { return names_; }
  const std::string& name(std::size_t p) const { return names_.at(p); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws Error(Parse)

  int arrows(std::size_t p, std::size_t q) const { return mult_[p][q]; }
  // Total number of arrows between p and q in either direction.
  int edges(std::size_t p, std::size_t q) const { return mult_[p][q] + mult_[q][p]; }
  std::vector<std::size_t> neighbours(std::size_t p) const;

  bool is_sink(std::size_t p) const;
  bool is_source(std::size_t p) const;
  std::vector<std::size_t> sinks() const;

  // Vertex order in which every arrow p -> q has q before p (sinks first).
  const std::vector<std::size_t>& topological_order() const { return topo_; }
  std::size_t topological_rank(std::size_t p) const { return rank_[p]; }

  std::vector<Arrow> arrow_list() const;

  // Same quiver with every arrow at p reversed.
  Quiver reversed_at(std::size_t p) const;
  // Full subquiver on the given vertices (kept in this quiver's order).
  Quiver full_subquiver(const std::vector<std::size_t>& keep) const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.names_ == b.names_ && a.mult_ == b.mult_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> mult_;
  std::vector<std::size_t> topo_;
  std::vector<std::size_t> rank_;
};

Quiver quiver_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Quiver& q);
Quiver load_quiver(const std::string& path);

}  // namespace degenkit
