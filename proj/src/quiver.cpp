#include "degenkit/quiver.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "degenkit/error.hpp"

namespace degenkit {

Quiver::Quiver(std::vector<std::string> vertices, const std::vector<Arrow>& arrows)
    : names_(std::move(vertices)) {
  if (names_.empty()) fail(ErrorKind::InvalidQuiver, "quiver has no vertices");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty() || n.find(':') != std::string::npos)
      fail(ErrorKind::InvalidQuiver, "vertex id '" + n + "' must be nonempty and contain no ':'");
    if (!seen.insert(n).second) fail(ErrorKind::InvalidQuiver, "duplicate vertex '" + n + "'");
  }
  const std::size_t n = names_.size();
  mult_.assign(n, std::vector<int>(n, 0));
  for (const auto& a : arrows) {
    const auto p = find(a.from);
    const auto q = find(a.to);
    if (!p || !q) fail(ErrorKind::InvalidQuiver, "arrow " + a.from + "->" + a.to + " uses an unknown vertex");
    if (a.mult < 1) fail(ErrorKind::InvalidQuiver, "arrow multiplicity must be positive");
    if (*p == *q) fail(ErrorKind::InvalidQuiver, "loop at '" + a.from + "'");
    mult_[*p][*q] += a.mult;
  }

  // connectivity of the underlying graph
  std::vector<bool> reached(n, false);
  std::vector<std::size_t> stack{0};
  reached[0] = true;
  while (!stack.empty()) {
    const auto p = stack.back();
    stack.pop_back();
    for (std::size_t q = 0; q < n; ++q)
      if (!reached[q] && edges(p, q) > 0) {
        reached[q] = true;
        stack.push_back(q);
      }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    fail(ErrorKind::InvalidQuiver, "quiver is disconnected");

  // Kahn's algorithm on the reversed arrows: a vertex is ready once all its
  // arrow targets are placed.
  std::vector<int> out_deg(n, 0);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (mult_[p][q] > 0) ++out_deg[p];
  std::vector<bool> placed(n, false);
  while (topo_.size() < n) {
    bool progress = false;
    for (std::size_t p = 0; p < n; ++p) {
      if (placed[p] || out_deg[p] != 0) continue;
      placed[p] = true;
      topo_.push_back(p);
      for (std::size_t r = 0; r < n; ++r)
        if (mult_[r][p] > 0) --out_deg[r];
      progress = true;
      break;
    }
    if (!progress) fail(ErrorKind::InvalidQuiver, "quiver has an oriented cycle");
  }
  rank_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank_[topo_[i]] = i;
}

std::optional<std::size_t> Quiver::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Quiver::index(std::string_view name) const {
  if (auto i = find(name)) return *i;
  fail(ErrorKind::Parse, "unknown vertex '" + std::string(name) + "'");
}

std::vector<std::size_t> Quiver::neighbours(std::size_t p) const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < size(); ++q)
    if (edges(p, q) > 0) out.push_back(q);
  return out;
}

bool Quiver::is_sink(std::size_t p) const {
  return std::all_of(mult_[p].begin(), mult_[p].end(), [](int m) { return m == 0; });
}

bool Quiver::is_source(std::size_t p) const {
  for (std::size_t q = 0; q < size(); ++q)
    if (mult_[q][p] > 0) return false;
  return true;
}

std::vector<std::size_t> Quiver::sinks() const {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < size(); ++p)
    if (is_sink(p)) out.push_back(p);
  return out;
}

std::vector<Quiver::Arrow> Quiver::arrow_list() const {
  std::vector<Arrow> out;
  for (std::size_t p = 0; p < size(); ++p)
    for (std::size_t q = 0; q < size(); ++q)
      if (mult_[p][q] > 0) out.push_back({names_[p], names_[q], mult_[p][q]});
  return out;
}

Quiver Quiver::reversed_at(std::size_t p) const {
  auto arrows = arrow_list();
  for (auto& a : arrows)
    if (a.from == names_[p] || a.to == names_[p]) std::swap(a.from, a.to);
  return Quiver(names_, arrows);
}

Quiver Quiver::full_subquiver(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> names;
  for (auto p : sorted) names.push_back(names_.at(p));
  std::vector<Arrow> arrows;
  for (auto p : sorted)
    for (auto q : sorted)
      if (mult_[p][q] > 0) arrows.push_back({names_[p], names_[q], mult_[p][q]});
  return Quiver(std::move(names), arrows);
}

Quiver quiver_from_json(const nlohmann::json& j) {
  try {
    std::vector<std::string> vertices = j.at("vertices").get<std::vector<std::string>>();
    std::vector<Quiver::Arrow> arrows;
    if (j.contains("arrows"))
      for (const auto& a : j.at("arrows"))
        arrows.push_back({a.at("from").get<std::string>(), a.at("to").get<std::string>(),
                          a.value("mult", 1)});
    return Quiver(std::move(vertices), arrows);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("quiver JSON: ") + e.what());
  }
}

nlohmann::json to_json(const Quiver& q) {
  nlohmann::json arrows = nlohmann::json::array();
  for (const auto& a : q.arrow_list()) arrows.push_back({{"from", a.from}, {"to", a.to}, {"mult", a.mult}});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

Quiver load_quiver(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, path + ": " + e.what());
  }
  return quiver_from_json(j);
}

}  // namespace degenkit
