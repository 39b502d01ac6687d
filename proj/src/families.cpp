#include "degenkit/families.hpp"

#include <algorithm>
#include <charconv>

#include "degenkit/error.hpp"
#include "degenkit/quiver_core.hpp"

namespace degenkit {

namespace {

using Arrows = std::vector<Quiver::Arrow>;

std::string idx(const char* stem, int i) { return stem + std::to_string(i); }

void need(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::BadParameters, what);
}

Quiver build_kmn(int m, int n) {
  need(m > 0 && n > 0, "Kmn needs m, n > 0");
  std::vector<std::string> vs;
  Arrows as;
  for (int i = m; i >= 1; --i) vs.push_back(idx("a", i));
  for (int i = 1; i <= n; ++i) vs.push_back(idx("b", i));
  for (int i = 1; i < m; ++i) as.push_back({idx("a", i + 1), idx("a", i), 1});
  for (int i = 1; i < n; ++i) as.push_back({idx("b", i + 1), idx("b", i), 1});
  as.push_back({"a1", "b1", 2});
  return Quiver(vs, as);
}

Quiver build_kkn(int n) {
  need(n >= 3, "KKn needs n >= 3");
  std::vector<std::string> vs;
  Arrows as;
  for (int i = 1; i <= n; ++i) vs.push_back(idx("a", i));
  as.push_back({"a1", "a2", 2});
  for (int i = 3; i <= n; ++i) as.push_back({idx("a", i), idx("a", i - 1), i == n ? 2 : 1});
  return Quiver(vs, as);
}

Quiver build_kdn(int n, bool extra_edge) {
  need(n >= 4, "KDn/KAn need n >= 4");
  std::vector<std::string> vs;
  Arrows as;
  for (int i = 1; i <= n - 2; ++i) vs.push_back(idx("z", i));
  vs.push_back("a");
  vs.push_back("b");
  as.push_back({"z2", "z1", 2});
  for (int i = 3; i <= n - 2; ++i) as.push_back({idx("z", i), idx("z", i - 1), 1});
  as.push_back({"a", idx("z", n - 2), 1});
  as.push_back({"b", idx("z", n - 2), 1});
  if (extra_edge) as.push_back({"b", "a", 1});
  return Quiver(vs, as);
}

Quiver build_akpq(int p, int q) {
  need(p >= 2 && q >= 1, "AKpq needs p >= 2, q >= 1");
  std::vector<std::string> vs{"z"};
  Arrows as;
  for (int i = 1; i < p; ++i) vs.push_back(idx("a", i));
  for (int i = 1; i < q; ++i) vs.push_back(idx("b", i));
  vs.push_back("c");
  as.push_back({"a1", "z", 2});
  for (int i = 2; i < p; ++i) as.push_back({idx("a", i), idx("a", i - 1), 1});
  as.push_back({"c", idx("a", p - 1), 1});
  const std::string b_last = q > 1 ? idx("b", q - 1) : "z";
  if (q > 1) as.push_back({"b1", "z", 1});
  for (int i = 2; i < q; ++i) as.push_back({idx("b", i), idx("b", i - 1), 1});
  as.push_back({"c", b_last, 1});
  return Quiver(vs, as);
}

Quiver build_wild_d(int n) {
  need(n >= 4, "wildD needs n >= 4");
  std::vector<std::string> vs;
  Arrows as;
  for (int i = 1; i <= n - 3; ++i) vs.push_back(idx("z", i));
  for (const char* s : {"a", "b", "v", "d", "w"}) vs.emplace_back(s);
  const auto far = idx("z", n - 3);
  as.push_back({"a", "z1", 1});
  as.push_back({"b", "z1", 1});
  for (int i = 2; i <= n - 3; ++i) as.push_back({idx("z", i), idx("z", i - 1), 1});
  as.push_back({"v", far, 1});
  as.push_back({"d", far, 1});
  as.push_back({"w", "d", 1});
  return Quiver(vs, as);
}

// Arms hanging off a centre z, every arrow pointing towards z.
Quiver build_star(const std::vector<std::vector<std::string>>& arms) {
  std::vector<std::string> vs{"z"};
  Arrows as;
  for (const auto& arm : arms) {
    std::string prev = "z";
    for (const auto& x : arm) {
      vs.push_back(x);
      as.push_back({x, prev, 1});
      prev = x;
    }
  }
  return Quiver(vs, as);
}

Quiver build_wild_ars(int r, int s) {
  need(r >= 1 && s >= 1 && r + s >= 2, "wildArs needs r, s >= 1");
  std::vector<std::string> vs{"z", "w"};
  Arrows as{{"w", "z", 1}};
  for (int i = 1; i < r; ++i) vs.push_back(idx("a", i));
  for (int i = 1; i < s; ++i) vs.push_back(idx("b", i));
  vs.push_back("v");
  auto path = [&](const char* stem, int len) {
    std::string prev = "z";
    for (int i = 1; i < len; ++i) {
      as.push_back({idx(stem, i), prev, 1});
      prev = idx(stem, i);
    }
    as.push_back({"v", prev, 1});
  };
  path("a", r);
  path("b", s);
  return Quiver(vs, as);
}

std::vector<int> parse_params(std::string_view text) {
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      fail(ErrorKind::Parse, "bad catalog parameter '" + std::string(item) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"Kmn(m,n)", "Vm(m)",   "KKn(n)", "KDn(n)", "KAn(n)", "AKpq(p,q)", "AK3tilde", "AK4tilde", "AA4",
          "AA5",      "T",       "S",      "wildD(n)", "wildE6", "wildE7",  "wildE8",  "wildArs(r,s)",
          "Kronecker"};
}

Quiver catalog(std::string_view id) {
  std::string_view name = id;
  std::vector<int> params;
  if (const auto open = id.find('('); open != std::string_view::npos) {
    if (id.back() != ')') fail(ErrorKind::Parse, "unbalanced parentheses in '" + std::string(id) + "'");
    name = id.substr(0, open);
    params = parse_params(id.substr(open + 1, id.size() - open - 2));
  }
  auto arity = [&](std::size_t k) {
    if (params.size() != k)
      fail(ErrorKind::BadParameters, std::string(name) + " takes " + std::to_string(k) + " parameter(s)");
  };

  if (name == "Kmn") return arity(2), build_kmn(params[0], params[1]);
  if (name == "Vm") {
    arity(1);
    need(params[0] >= 1, "Vm needs m >= 1");
    return Quiver({"a", "b"}, {{"b", "a", params[0]}});
  }
  if (name == "KKn") return arity(1), build_kkn(params[0]);
  if (name == "KDn") return arity(1), build_kdn(params[0], false);
  if (name == "KAn") return arity(1), build_kdn(params[0], true);
  if (name == "AKpq") return arity(2), build_akpq(params[0], params[1]);
  if (name == "wildD") return arity(1), build_wild_d(params[0]);
  if (name == "wildArs") return arity(2), build_wild_ars(params[0], params[1]);
  arity(0);
  if (name == "Kronecker") return Quiver({"1", "2"}, {{"1", "2", 2}});
  if (name == "AK3tilde") return Quiver({"s", "b", "q"}, {{"q", "s", 1}, {"b", "s", 2}, {"q", "b", 2}});
  if (name == "AK4tilde")
    return Quiver({"z", "a", "b", "c"}, {{"b", "z", 1}, {"a", "z", 2}, {"c", "b", 2}, {"c", "a", 1}});
  if (name == "AA4")
    return Quiver({"s", "a", "b", "q"},
                  {{"q", "s", 1}, {"a", "s", 1}, {"b", "s", 1}, {"q", "a", 1}, {"q", "b", 1}});
  if (name == "AA5")
    return Quiver({"s", "a", "b", "c", "q"}, {{"a", "s", 1},
                                              {"b", "s", 1},
                                              {"c", "s", 1},
                                              {"q", "a", 1},
                                              {"q", "b", 1},
                                              {"q", "c", 1}});
  if (name == "T") {
    Arrows as;
    for (int i = 2; i <= 4; ++i)
      for (int j = 1; j < i; ++j) as.push_back({idx("a", i), idx("a", j), 1});
    return Quiver({"a1", "a2", "a3", "a4"}, as);
  }
  if (name == "S") return build_star({{"a"}, {"b"}, {"c"}, {"d"}, {"e"}});
  if (name == "wildE6") return build_star({{"b1", "v"}, {"a1", "a2"}, {"c1", "c2", "w"}});
  if (name == "wildE7") return build_star({{"b1", "b2", "v"}, {"a1"}, {"c1", "c2", "c3", "w"}});
  if (name == "wildE8") return build_star({{"b1", "b2"}, {"a1"}, {"c1", "c2", "c3", "c4", "v", "w"}});
  fail(ErrorKind::Parse, "unknown catalog quiver '" + std::string(id) + "'");
}

// K_{m,n} and V_m -------------------------------------------------------------

DeformationShape kmn_minimal_shape(const ShapeContext& ctx) {
  const auto& q = ctx.quiver();
  const auto a1 = q.find("a1");
  const auto b1 = q.find("b1");
  if (!a1 || !b1 || q.arrows(*a1, *b1) != 2 || q.sinks() != std::vector<std::size_t>{*b1})
    fail(ErrorKind::BadPair, "quiver is not K_{m,n} with b1 the only sink");
  if (ctx.U().shift != 0) fail(ErrorKind::BadPair, "U must be projective");
  const auto& z = ctx.component();

  std::vector<IndecRef> chain;
  bool hit_a = false, hit_b = false;
  for (auto x : ctx.range())
    if (x.vertex == *a1 || x.vertex == *b1) {
      chain.push_back(x);
      (x.vertex == *a1 ? hit_a : hit_b) = true;
    }
  if (!hit_a || !hit_b) return indicator_shape(ctx);

  const auto lowest = chain.front();
  const auto highest = chain.back();
  DeformationShape d(ctx);
  for (auto x : ctx.range()) {
    const bool head = z.precedes(x, lowest);
    const bool tail = z.precedes(highest, x);
    if (head || tail) d.set(x, 1);
  }
  for (auto x : chain) d.set(x, 1);
  if (auto why = validation_failure(d)) fail(ErrorKind::BadPair, "chain construction fails: " + *why);
  return d;
}

DeformationShape vm_minimal_shape(const ShapeContext& ctx) {
  const auto& q = ctx.quiver();
  if (q.size() != 2 || q.edges(0, 1) < 3) fail(ErrorKind::BadPair, "quiver is not V_m with m >= 3");
  return indicator_shape(ctx);
}

DeformationShape kk3_family(int m) {
  if (m < 1) fail(ErrorKind::BadParameters, "kk3 family needs m >= 1");
  const auto q = catalog("KKn(3)");
  const auto a1 = q.index("a1"), a2 = q.index("a2"), a3 = q.index("a3");
  DeformationShape d(ShapeContext(q, {a2, 0}, {a2, m}));
  for (int i = 0; i <= m - 1; ++i) d.set({a2, i}, 1);
  for (int i = 0; i < m - 1; ++i) d.set({i % 2 == 0 ? a1 : a3, i}, 1);
  return d;
}

// Defects --------------------------------------------------------------------

SliceWeights slice_weights(const ARComponent& z, const Slice& r) {
  const auto& q = z.quiver();
  const auto w = q.find("w");
  if (!w) fail(ErrorKind::NotTamePlusW, "quiver has no vertex named w");
  std::vector<std::size_t> keep;
  for (std::size_t p = 0; p < q.size(); ++p)
    if (p != *w) keep.push_back(p);
  IntVector root;
  try {
    root = null_root(q.full_subquiver(keep));
  } catch (const Error& e) {
    fail(ErrorKind::NotTamePlusW, std::string("removing w does not leave a tame quiver: ") + e.what());
  }
  if (!is_slice(z, r)) fail(ErrorKind::NoSuchSlice, "not a slice of the window");

  SliceWeights sw{r, *w, IntVector(q.size(), 0), IntVector(q.size(), 0)};
  for (std::size_t i = 0; i < keep.size(); ++i) sw.null_root[keep[i]] = root[i];
  for (auto j : keep) {
    std::int64_t weight = sw.null_root[j];
    for (auto k : keep) weight -= z.arrow_mult(r.member(j), r.member(k)) * sw.null_root[k];
    sw.weights[j] = weight;
  }
  return sw;
}

std::int64_t defect(const SliceWeights& sw, const std::vector<std::int64_t>& values) {
  std::int64_t d = 0;
  for (std::size_t j = 0; j < sw.weights.size(); ++j)
    if (j != sw.w) d += sw.weights[j] * values.at(j);
  return d;
}

std::vector<std::int64_t> slice_values(const DeformationShape& d, const Slice& r) {
  std::vector<std::int64_t> out;
  for (std::size_t p = 0; p < r.shift.size(); ++p) out.push_back(d.at(r.member(p)));
  return out;
}

std::int64_t defect(const DeformationShape& d, const Slice& r) {
  return defect(slice_weights(d.context.component(), r), slice_values(d, r));
}

// Reflection -----------------------------------------------------------------

namespace {

// k(q) = max{k : (q,k) precedes tau V}, or -1 when the orbit never does.
std::vector<int> mirror_bounds(const ShapeContext& ctx) {
  const auto& z = ctx.component();
  const auto& q = z.quiver();
  const auto sinks = q.sinks();
  if (sinks.size() != 1) fail(ErrorKind::BadContext, "reflection needs a quiver with exactly one sink");
  const auto p = sinks.front();
  if (ctx.U() != IndecRef{p, 0} || ctx.V().vertex != p)
    fail(ErrorKind::BadContext, "reflection needs U = P_p and V in the orbit of P_p for the sink p");
  std::vector<int> k(q.size(), -1);
  for (std::size_t v = 0; v < q.size(); ++v)
    for (int s = ctx.tauV().shift; s >= 0; --s)
      if (z.exists({v, s}) && z.precedes({v, s}, ctx.tauV())) {
        k[v] = s;
        break;
      }
  return k;
}

}  // namespace

DeformationShape reflect_shape(const DeformationShape& d) {
  const auto k = mirror_bounds(d.context);
  DeformationShape out(d.context);
  for (const auto w : d.support()) {
    if (w.shift > k[w.vertex]) fail(ErrorKind::BadContext, "shape has support beyond tau V");
    out.set({w.vertex, k[w.vertex] - w.shift}, d.at(w));
  }
  return out;
}

Slice reflect_slice_bar(const Slice& r, const ShapeContext& ctx) {
  const auto k = mirror_bounds(ctx);
  Slice out;
  for (std::size_t v = 0; v < r.shift.size(); ++v) {
    const int s = k[v] - r.shift[v];
    if (s < 0) fail(ErrorKind::BadContext, "slice member lies beyond tau V");
    out.shift.push_back(s);
  }
  return out;
}

// Segmented families -------------------------------------------------------

namespace {

SegmentPlan plan_on(Quiver q, const char* anchor, const char* boundary, int m, IndecRef v_shift,
                    int period, int q_offset, int s_offset) {
  if (m < 2) fail(ErrorKind::BadParameters, "segment plans start at m = 2");
  SegmentPlan plan{std::move(q), {}, {}, {}, {}, period - 1, 0, 0, m};
  const auto a = plan.quiver.index(anchor);
  const auto b = plan.quiver.index(boundary);
  plan.U = {a, 0};
  plan.V = {a, v_shift.shift};
  for (int i = 0; i < m; ++i) {
    plan.bq.push_back({b, i * period + q_offset});
    plan.bs.push_back({b, i * period + s_offset});
  }
  plan.v = plan.quiver.index("v");
  plan.w = plan.quiver.index("w");
  return plan;
}

}  // namespace

SegmentPlan wildD_plan(int n, int m) {
  auto q = catalog("wildD(" + std::to_string(n) + ")");
  std::vector<std::size_t> tame;
  for (std::size_t p = 0; p < q.size(); ++p)
    if (q.name(p) != "w") tame.push_back(p);
  const int c = coxeter_number(q.full_subquiver(tame));
  const auto far = "z" + std::to_string(n - 3);
  return plan_on(std::move(q), "z1", far.c_str(), m, {0, (m - 1) * (c + 1) + n - 2}, c + 1, 1, 0);
}

SegmentPlan wildE6_plan(int m) { return plan_on(catalog("wildE6"), "z", "z", m, {0, 8 * m - 4}, 8, 2, 1); }

SegmentPlan wildE7_plan(int m) { return plan_on(catalog("wildE7"), "z", "z", m, {0, 15 * m - 9}, 15, 3, 2); }

DeformationShape segmented_family(const SegmentPlan& plan) {
  const ShapeContext ctx(plan.quiver, plan.U, plan.V);
  const auto& z = ctx.component();
  const auto& q = plan.quiver;
  auto after = [](IndecRef r) { return IndecRef{r.vertex, r.shift + 1}; };
  const int m = plan.m;

  auto tame = [&](IndecRef x) {
    for (int j = 0; j + 1 < m; ++j)
      if (z.precedes(after(plan.bq[j]), x) && z.precedes(x, plan.bs[j + 1])) return true;
    return false;
  };
  auto initial = [&](IndecRef x) { return !z.precedes(after(plan.bq[0]), x); };
  auto final_segment = [&](IndecRef x) { return !z.precedes(x, plan.bs[m - 1]); };

  DeformationShape d(ctx);
  for (auto x : ctx.range()) {
    std::int64_t value = 0;
    if (x == plan.U) {
      value = 1;
    } else {
      for (const auto& s : z.middle_term(x)) value += s.mult * d.at(s.ref);
      if (auto t = z.translate(x)) value -= d.at(*t);
      bool forced = false;
      if (x.vertex == plan.v) forced = !tame(x);
      if (x.vertex == plan.w) forced = tame(x) || initial(x) || final_segment(x);
      if (forced) value -= 1;
    }
    if (value < 0) fail(ErrorKind::BadPlan, "forced value at " + format_ref(q, x) + " is negative");
    d.set(x, value);
  }
  return d;
}

DeformationShape s_family(int m, int n) {
  if (n < 1 || n > m) fail(ErrorKind::BadParameters, "S family needs 1 <= n <= m");
  const auto q = catalog("S");
  const auto zc = q.index("z"), dv = q.index("d"), ev = q.index("e");
  const ShapeContext ctx(q, {zc, 0}, {zc, 2 * m + 1});
  const auto& z = ctx.component();

  // The long run on the d- or e-orbit stops at 2m-2; one step further the
  // additive extension reaches tau V with value 2.
  const int run_end = 2 * m - 2;
  auto pinned = [&](IndecRef x) -> std::optional<std::int64_t> {
    const int i = x.shift;
    if (x.vertex == dv) {
      for (int k = 0; 2 * k + 2 <= n; ++k)
        if (i == 4 * k + 1 || i == 4 * k + 2) return 1;
      if (n % 2 == 0 && i >= 2 * n - 1 && i <= run_end) return 1;
      return 0;
    }
    if (x.vertex == ev) {
      for (int k = 0; 2 * k + 3 <= n; ++k)
        if (i == 4 * k + 3 || i == 4 * k + 4) return 1;
      if (n % 2 == 1 && i >= 2 * n - 1 && i <= run_end) return 1;
      return 0;
    }
    return std::nullopt;
  };

  DeformationShape d(ctx);
  for (auto x : ctx.range()) {
    std::int64_t value = 0;
    if (x == ctx.U()) {
      value = 1;
    } else if (auto p = pinned(x)) {
      value = *p;
    } else {
      for (const auto& s : z.middle_term(x)) value += s.mult * d.at(s.ref);
      if (auto t = z.translate(x)) value -= d.at(*t);
    }
    if (value < 0) fail(ErrorKind::BadParameters, "additive extension turns negative at " + format_ref(q, x));
    d.set(x, value);
  }
  return d;
}

}  // namespace degenkit
