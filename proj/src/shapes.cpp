#include "degenkit/shapes.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include <nlohmann/json.hpp>

#include "degenkit/error.hpp"
#include "degenkit/quiver_core.hpp"
#include "shape_search.hpp"

namespace degenkit {

ShapeContext::ShapeContext(const Quiver& q, IndecRef u, IndecRef v, int depth) : u_(u), v_(v) {
  component_ = std::make_shared<const ARComponent>(knit(q, std::max(depth, required_depth(v))));
  check();
}

ShapeContext::ShapeContext(std::shared_ptr<const ARComponent> z, IndecRef u, IndecRef v)
    : component_(std::move(z)), u_(u), v_(v) {
  if (component_->depth() < required_depth(v))
    component_ = std::make_shared<const ARComponent>(knit(component_->quiver(), required_depth(v)));
  check();
}

void ShapeContext::check() {
  const auto& z = *component_;
  const auto& q = z.quiver();
  auto describe = [&] { return "(" + format_ref(q, u_) + ", " + format_ref(q, v_) + ")"; };
  if (u_.vertex >= q.size() || v_.vertex >= q.size() || u_.shift < 0)
    fail(ErrorKind::BadPair, "pair refers to unknown vertices");
  if (v_.shift < 1) fail(ErrorKind::BadPair, "V is projective in " + describe());
  const IndecRef next{u_.vertex, u_.shift + 1};
  if (!z.exists(u_) || !z.exists(v_) || !z.exists(next))
    fail(ErrorKind::BadPair, "pair " + describe() + " leaves the component");
  if (!z.precedes(next, v_)) fail(ErrorKind::BadPair, "tau^-1 U does not precede V in " + describe());
  range_ = z.interval(u_, tauV());
}

DeformationShape::DeformationShape(ShapeContext ctx) : context(std::move(ctx)) {
  values.assign(context.component().size(), 0);
}

DeformationShape::DeformationShape(ShapeContext ctx, std::vector<std::int64_t> dense)
    : context(std::move(ctx)), values(std::move(dense)) {
  if (values.size() != context.component().size())
    fail(ErrorKind::InvalidShape, "value vector does not match the window size");
}

std::int64_t DeformationShape::at(IndecRef w) const {
  if (!context.component().in_window(w)) return 0;
  return values[context.component().position(w)];
}

void DeformationShape::set(IndecRef w, std::int64_t value) { values[context.component().position(w)] = value; }

std::vector<IndecRef> DeformationShape::support() const {
  std::vector<IndecRef> out;
  for (std::size_t pos = 0; pos < values.size(); ++pos)
    if (values[pos] != 0) out.push_back(context.component().ref(pos));
  return out;
}

std::int64_t ModuleMultiset::total() const {
  std::int64_t t = 0;
  for (const auto& [r, m] : multiplicities) t += m;
  return t;
}

DeformationShape indicator_shape(const ShapeContext& ctx) {
  DeformationShape d(ctx);
  for (auto w : ctx.range()) d.set(w, 1);
  return d;
}

std::int64_t subadditivity(const DeformationShape& d, IndecRef w) {
  const auto& ctx = d.context;
  const auto& z = ctx.component();
  if (w == ctx.U() || w == ctx.V()) return -1;
  if (!z.exists(w)) return 0;
  std::int64_t s = -d.at(w);
  if (auto t = z.translate(w)) s -= d.at(*t);
  for (const auto& m : z.middle_term(w)) s += m.mult * d.at(m.ref);
  return s;
}

std::optional<std::string> validation_failure(const DeformationShape& d) {
  const auto& ctx = d.context;
  const auto& z = ctx.component();
  const auto& q = z.quiver();
  if (d.values.size() != z.size()) return "value vector does not match the window";
  if (d.at(ctx.U()) != 1) return "delta(U) = " + std::to_string(d.at(ctx.U())) + ", expected 1";
  if (d.at(ctx.tauV()) != 1) return "delta(tau V) = " + std::to_string(d.at(ctx.tauV())) + ", expected 1";
  for (std::size_t pos = 0; pos < z.size(); ++pos) {
    const auto w = z.ref(pos);
    const auto value = d.values[pos];
    if (value < 0) return "negative value at " + format_ref(q, w);
    if (value == 0) continue;
    if (!z.exists(w) || !z.precedes(ctx.U(), w) || !z.precedes(w, ctx.tauV()))
      return "support point " + format_ref(q, w) + " outside [U, tau V]";
  }
  for (std::size_t pos = 0; pos < z.size(); ++pos) {
    const auto w = z.ref(pos);
    if (w == ctx.U() || w == ctx.V() || !z.exists(w)) continue;
    if (const auto s = subadditivity(d, w); s < 0)
      return "subadditivity fails at " + format_ref(q, w) + " (s = " + std::to_string(s) + ")";
  }
  return std::nullopt;
}

bool validate(const DeformationShape& d) { return !validation_failure(d); }

namespace {

void require_valid(const DeformationShape& d) {
  if (auto why = validation_failure(d)) fail(ErrorKind::InvalidShape, *why);
}

}  // namespace

ModuleMultiset module_of_shape(const DeformationShape& d) {
  require_valid(d);
  const auto& z = d.context.component();
  ModuleMultiset m;
  for (std::size_t pos = 0; pos < z.size(); ++pos) {
    const auto w = z.ref(pos);
    if (w == d.context.U() || w == d.context.V() || !z.exists(w)) continue;
    if (const auto s = subadditivity(d, w); s > 0) m.multiplicities[w] = s;
  }
  return m;
}

DeformationShape shape_of_module(const ModuleMultiset& m, const ShapeContext& ctx) {
  const auto& z = ctx.component();
  DeformationShape d(ctx);
  for (std::size_t pos = 0; pos < z.size(); ++pos) {
    const auto n = z.ref(pos);
    if (!z.exists(n)) continue;
    std::int64_t value = z.hom_dim(ctx.U(), n) + z.hom_dim(ctx.V(), n);
    for (const auto& [w, mult] : m.multiplicities) value -= mult * z.hom_dim(w, n);
    d.values[pos] = value;
  }
  if (auto why = validation_failure(d)) fail(ErrorKind::NotAShape, "module gives no shape: " + *why);
  return d;
}

std::int64_t codimension(const DeformationShape& d) {
  const auto m = module_of_shape(d);
  const auto& z = d.context.component();
  const auto u = d.context.U();
  const auto v = d.context.V();
  std::int64_t c = z.hom_dim(u, u) + z.hom_dim(u, v) + z.hom_dim(v, u) + z.hom_dim(v, v);
  for (const auto& [a, ma] : m.multiplicities)
    for (const auto& [b, mb] : m.multiplicities) c -= ma * mb * z.hom_dim(a, b);
  return c;
}

std::int64_t codim_formula(const DeformationShape& d) {
  const auto m = module_of_shape(d);
  std::int64_t c = 1;
  for (const auto& [w, mult] : m.multiplicities) c += mult * d.at(w);
  return c;
}

std::int64_t blocks(const DeformationShape& d) { return module_of_shape(d).total(); }

IntVector t_vector(const DeformationShape& d) {
  require_valid(d);
  const auto& z = d.context.component();
  IntVector t(z.quiver().size(), 0);
  for (std::size_t pos = 0; pos < z.size(); ++pos) {
    const auto w = z.ref(pos);
    if (z.exists(w)) t[w.vertex] += subadditivity(d, w);
  }
  return t;
}

IntVector v_vector(const DeformationShape& d) {
  require_valid(d);
  const auto& z = d.context.component();
  IntVector v(z.quiver().size(), 0);
  for (std::size_t pos = 0; pos < z.size(); ++pos) v[z.ref(pos).vertex] += d.values[pos];
  return v;
}

bool has_connected_support(const DeformationShape& d) {
  const auto& z = d.context.component();
  const auto support = d.support();
  if (support.empty()) return true;
  std::vector<std::vector<std::size_t>> adj(z.size());
  for (std::size_t pos = 0; pos < z.size(); ++pos) {
    if (!z.exists(z.ref(pos))) continue;
    for (const auto& s : z.successors(z.ref(pos))) {
      adj[pos].push_back(z.position(s.ref));
      adj[z.position(s.ref)].push_back(pos);
    }
  }
  std::vector<bool> seen(z.size(), false);
  std::deque<std::size_t> queue{z.position(support.front())};
  seen[queue.front()] = true;
  std::size_t reached = 0;
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    ++reached;
    for (auto next : adj[cur])
      if (!seen[next] && d.values[next] != 0) {
        seen[next] = true;
        queue.push_back(next);
      }
  }
  return reached == support.size();
}

namespace {

// Window positions in slice-major, vertex-index order.
std::vector<std::size_t> output_keys(const ARComponent& z) {
  std::vector<std::size_t> keys(z.size());
  std::iota(keys.begin(), keys.end(), 0);
  std::sort(keys.begin(), keys.end(), [&](auto a, auto b) {
    const auto ra = z.ref(a);
    const auto rb = z.ref(b);
    return std::pair(ra.shift, ra.vertex) < std::pair(rb.shift, rb.vertex);
  });
  return keys;
}

std::vector<DeformationShape> wrap(const ShapeContext& ctx, std::vector<std::vector<std::int64_t>> sols) {
  const auto keys = output_keys(ctx.component());
  std::sort(sols.begin(), sols.end(), [&](const auto& a, const auto& b) {
    for (auto k : keys)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  });
  std::vector<DeformationShape> out;
  out.reserve(sols.size());
  for (auto& s : sols) out.emplace_back(ctx, std::move(s));
  return out;
}

}  // namespace

std::vector<DeformationShape> enumerate_shapes(const ShapeContext& ctx) {
  return wrap(ctx, detail::search_parallel(detail::build_problem(ctx), detail::Mode::All).solutions);
}

std::vector<DeformationShape> enumerate_shapes_serial(const ShapeContext& ctx) {
  return wrap(ctx, detail::search_serial(detail::build_problem(ctx), detail::Mode::All).solutions);
}

std::vector<DeformationShape> enumerate_minimal_shapes(const ShapeContext& ctx) {
  return wrap(ctx, detail::search_parallel(detail::build_problem(ctx), detail::Mode::Minimal).solutions);
}

std::vector<DeformationShape> enumerate_minimal_shapes_serial(const ShapeContext& ctx) {
  return wrap(ctx, detail::search_serial(detail::build_problem(ctx), detail::Mode::Minimal).solutions);
}

bool has_shape(const ShapeContext& ctx) {
  return !detail::search_serial(detail::build_problem(ctx), detail::Mode::First).solutions.empty();
}

bool is_minimal(const DeformationShape& d) {
  require_valid(d);
  // Any shape pointwise below d is lexicographically below it too, so the
  // lexicographically least shape in the box [0, d] decides.
  const auto r = detail::search_serial(detail::build_problem(d.context, &d.values), detail::Mode::First);
  return !r.solutions.empty() && r.solutions.front() == d.values;
}

std::optional<std::int64_t> min_blocks(const ShapeContext& ctx) {
  return detail::search_parallel(detail::build_problem(ctx), detail::Mode::MinBlocks).best_blocks;
}

std::vector<std::optional<std::int64_t>> empirical_K_table(const Quiver& q, int depth) {
  if (representation_type(q) != RepresentationType::Wild)
    fail(ErrorKind::NotWild, "empirical K is defined for wild quivers only");
  const auto z = std::make_shared<const ARComponent>(knit(q, ShapeContext::required_depth({0, depth})));
  std::vector<std::pair<int, std::int64_t>> pairs;  // (distance, least blocks)
  for (std::size_t pu = 0; pu < z->size(); ++pu) {
    const auto u = z->ref(pu);
    if (u.shift >= depth) continue;
    for (std::size_t pv = 0; pv < z->size(); ++pv) {
      const auto v = z->ref(pv);
      if (v.shift > depth || v.shift < 1 || !z->precedes({u.vertex, u.shift + 1}, v)) continue;
      if (auto b = min_blocks(ShapeContext(z, u, v))) pairs.emplace_back(z->distance(u, v), *b);
    }
  }
  int max_distance = 0;
  for (const auto& [dist, b] : pairs) max_distance = std::max(max_distance, dist);
  std::vector<std::optional<std::int64_t>> table(static_cast<std::size_t>(max_distance) + 1);
  for (const auto& [dist, b] : pairs)
    for (int j = 0; j <= dist; ++j) {
      auto& cell = table[static_cast<std::size_t>(j)];
      if (!cell || b < *cell) cell = b;
    }
  return table;
}

std::optional<std::int64_t> empirical_K(const Quiver& q, int depth, int j) {
  const auto table = empirical_K_table(q, depth);
  if (j < 0 || static_cast<std::size_t>(j) >= table.size()) return std::nullopt;
  return table[static_cast<std::size_t>(j)];
}

ShapeReport report(const DeformationShape& d) {
  return {codimension(d), codim_formula(d), blocks(d), is_minimal(d), t_vector(d), v_vector(d)};
}

nlohmann::json to_json(const DeformationShape& d) {
  const auto& q = d.context.quiver();
  nlohmann::json values = nlohmann::json::object();
  for (auto w : d.support()) values[format_ref(q, w)] = d.at(w);
  return {{"U", format_ref(q, d.context.U())}, {"V", format_ref(q, d.context.V())}, {"values", values}};
}

nlohmann::json to_json(const Quiver& q, const ModuleMultiset& m) {
  nlohmann::json mult = nlohmann::json::object();
  for (const auto& [w, k] : m.multiplicities) mult[format_ref(q, w)] = k;
  return {{"multiplicities", mult}};
}

DeformationShape shape_from_json(const nlohmann::json& j, const Quiver& q, int depth) {
  try {
    const auto u = parse_ref(q, j.at("U").get<std::string>());
    const auto v = parse_ref(q, j.at("V").get<std::string>());
    DeformationShape d(ShapeContext(q, u, v, depth));
    for (const auto& [key, value] : j.at("values").items()) d.set(parse_ref(q, key), value.get<std::int64_t>());
    return d;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("shape JSON: ") + e.what());
  }
}

}  // namespace degenkit
