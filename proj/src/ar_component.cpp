#include "degenkit/ar_component.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include <nlohmann/json.hpp>

#include "degenkit/error.hpp"

namespace degenkit {

std::string format_ref(const Quiver& q, IndecRef r) {
  return q.name(r.vertex) + ":" + std::to_string(r.shift);
}

IndecRef parse_ref(const Quiver& q, std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos)
    fail(ErrorKind::Parse, "expected vertex:shift, got '" + std::string(text) + "'");
  const auto vertex = q.index(text.substr(0, colon));
  const auto digits = text.substr(colon + 1);
  int shift = -1;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), shift);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || shift < 0)
    fail(ErrorKind::Parse, "bad shift in '" + std::string(text) + "'");
  return {vertex, shift};
}

namespace {

bool test_bit(const std::vector<std::uint64_t>& bits, std::size_t i) {
  return (bits[i / 64] >> (i % 64)) & 1u;
}

void set_bit(std::vector<std::uint64_t>& bits, std::size_t i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

}  // namespace

ARComponent knit(const Quiver& q, int depth) {
  if (depth < 0) fail(ErrorKind::BadParameters, "depth must be nonnegative");
  ARComponent z(q);
  z.depth_ = depth;
  const auto n = q.size();
  const auto total = n * static_cast<std::size_t>(depth + 1);
  z.refs_.reserve(total);
  for (int l = 0; l <= depth; ++l)
    for (auto p : q.topological_order()) z.refs_.push_back({p, l});
  z.exists_.assign(total, false);
  z.dim_.assign(total, IntVector(n, 0));
  z.middle_.assign(total, {});
  z.succ_.assign(total, {});

  for (std::size_t pos = 0; pos < total; ++pos) {
    const auto [p, l] = z.refs_[pos];
    auto& middle = z.middle_[pos];
    // eps(p,l) = (+)_q (q,l)^{n(p,q)} (+) (q,l-1)^{n(q,p)}; at l = 0 only the
    // first part survives and equals rad P_p.
    for (std::size_t r = 0; r < n; ++r) {
      if (q.arrows(p, r) > 0 && z.exists({r, l})) middle.push_back({{r, l}, q.arrows(p, r)});
      if (l > 0 && q.arrows(r, p) > 0 && z.exists({r, l - 1})) middle.push_back({{r, l - 1}, q.arrows(r, p)});
    }
    IntVector d(n, 0);
    if (l == 0) d[p] = 1;
    for (const auto& s : middle) {
      const auto& sd = z.dim(s.ref);
      for (std::size_t k = 0; k < n; ++k) d[k] = exact::add(d[k], exact::mul(s.mult, sd[k]));
    }
    bool ok = true;
    if (l > 0) {
      if (!z.exists({p, l - 1})) {
        ok = false;
      } else {
        const auto& prev = z.dim({p, l - 1});
        for (std::size_t k = 0; k < n; ++k) d[k] = exact::sub(d[k], prev[k]);
        const bool negative = std::any_of(d.begin(), d.end(), [](auto x) { return x < 0; });
        const bool zero = std::all_of(d.begin(), d.end(), [](auto x) { return x == 0; });
        ok = !negative && !zero;
      }
    }
    if (!ok) {
      z.truncated_ = true;
      middle.clear();
      continue;
    }
    z.exists_[pos] = true;
    z.dim_[pos] = std::move(d);
    for (const auto& s : middle) z.succ_[z.position(s.ref)].push_back({{p, static_cast<int>(l)}, s.mult});
  }

  const std::size_t words = (total + 63) / 64;
  z.reach_.assign(total, std::vector<std::uint64_t>(words, 0));
  for (std::size_t pos = total; pos-- > 0;) {
    if (!z.exists_[pos]) continue;
    auto& bits = z.reach_[pos];
    set_bit(bits, pos);
    for (const auto& s : z.succ_[pos]) {
      const auto& other = z.reach_[z.position(s.ref)];
      for (std::size_t w = 0; w < words; ++w) bits[w] |= other[w];
    }
  }
  z.hom_ = hom_table_parallel(z);
  return z;
}

std::size_t ARComponent::checked_position(IndecRef r) const {
  if (!in_window(r)) fail(ErrorKind::OutOfWindow, "ref (" + quiver_.name(r.vertex % quiver_.size()) + "," +
                                                      std::to_string(r.shift) + ") outside knitted window");
  return static_cast<std::size_t>(r.shift) * quiver_.size() + quiver_.topological_rank(r.vertex);
}

std::size_t ARComponent::position(IndecRef r) const { return checked_position(r); }

bool ARComponent::in_window(IndecRef r) const {
  return r.vertex < quiver_.size() && r.shift >= 0 && r.shift <= depth_;
}

bool ARComponent::exists(IndecRef r) const { return in_window(r) && exists_[checked_position(r)]; }

const IntVector& ARComponent::dim(IndecRef r) const { return dim_[checked_position(r)]; }

const std::vector<Summand>& ARComponent::middle_term(IndecRef r) const { return middle_[checked_position(r)]; }

const std::vector<Summand>& ARComponent::successors(IndecRef r) const { return succ_[checked_position(r)]; }

std::optional<IndecRef> ARComponent::translate(IndecRef r) const {
  if (r.shift == 0) return std::nullopt;
  return IndecRef{r.vertex, r.shift - 1};
}

bool ARComponent::precedes(IndecRef x, IndecRef y) const {
  const auto px = checked_position(x);
  const auto py = checked_position(y);
  if (!exists_[px] || !exists_[py]) fail(ErrorKind::OutOfWindow, "ref past the end of its orbit");
  return test_bit(reach_[px], py);
}

std::vector<IndecRef> ARComponent::interval(IndecRef u, IndecRef v) const {
  std::vector<IndecRef> out;
  if (!precedes(u, v)) return out;
  const auto pu = checked_position(u);
  const auto pv = checked_position(v);
  for (std::size_t pos = pu; pos <= pv; ++pos)
    if (exists_[pos] && test_bit(reach_[pu], pos) && test_bit(reach_[pos], pv)) out.push_back(refs_[pos]);
  return out;
}

int ARComponent::distance(IndecRef u, IndecRef v) const {
  const bool directed = precedes(u, v);
  const auto start = checked_position(u);
  const auto goal = checked_position(v);
  std::vector<int> dist(size(), -1);
  std::deque<std::size_t> queue{start};
  dist[start] = 0;
  std::vector<std::vector<std::size_t>> pred;
  if (!directed) {
    pred.assign(size(), {});
    for (std::size_t pos = 0; pos < size(); ++pos)
      for (const auto& s : succ_[pos]) pred[checked_position(s.ref)].push_back(pos);
  }
  while (!queue.empty()) {
    const auto cur = queue.front();
    queue.pop_front();
    if (cur == goal) return dist[cur];
    auto visit = [&](std::size_t next) {
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    };
    for (const auto& s : succ_[cur]) visit(checked_position(s.ref));
    if (!directed)
      for (auto p : pred[cur]) visit(p);
  }
  fail(ErrorKind::OutOfWindow, "no path between the refs inside the window");
}

std::int64_t ARComponent::hom_dim(IndecRef x, IndecRef y) const {
  return hom_[checked_position(x)][checked_position(y)];
}

int ARComponent::arrow_mult(IndecRef x, IndecRef y) const {
  for (const auto& s : successors(x))
    if (s.ref == y) return s.mult;
  return 0;
}

namespace {

// hom(X, -) for a fixed X by the forward AR recursion.
IntVector hom_row(const ARComponent& z, std::size_t px) {
  IntVector row(z.size(), 0);
  const auto x = z.ref(px);
  if (!z.exists(x)) return row;
  row[px] = 1;
  for (std::size_t py = px + 1; py < z.size(); ++py) {
    const auto y = z.ref(py);
    if (!z.exists(y) || !z.precedes(x, y)) continue;
    std::int64_t f = 0;
    for (const auto& s : z.middle_term(y)) f = exact::add(f, exact::mul(s.mult, row[z.position(s.ref)]));
    if (auto t = z.translate(y)) f = exact::sub(f, row[z.position(*t)]);
    row[py] = f;
  }
  return row;
}

}  // namespace

IntMatrix hom_table_serial(const ARComponent& z) {
  IntMatrix table(z.size());
  for (std::size_t px = 0; px < z.size(); ++px) table[px] = hom_row(z, px);
  return table;
}

IntMatrix hom_table_parallel(const ARComponent& z) {
  IntMatrix table(z.size());
  const auto n = static_cast<long>(z.size());
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic)
  for (long px = 0; px < n; ++px) {
    try {
      table[static_cast<std::size_t>(px)] = hom_row(z, static_cast<std::size_t>(px));
    } catch (...) {
#pragma omp critical
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return table;
}

// Slices ---------------------------------------------------------------------

namespace {

bool slice_connected(const ARComponent& z, const Slice& r) {
  const auto n = z.quiver().size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto p = stack.back();
    stack.pop_back();
    for (std::size_t q = 0; q < n; ++q) {
      if (seen[q]) continue;
      if (z.arrow_mult(r.member(p), r.member(q)) > 0 || z.arrow_mult(r.member(q), r.member(p)) > 0) {
        seen[q] = true;
        stack.push_back(q);
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace

bool is_slice(const ARComponent& z, const Slice& r) {
  if (r.shift.size() != z.quiver().size()) return false;
  for (std::size_t p = 0; p < r.shift.size(); ++p)
    if (!z.exists(r.member(p))) return false;
  return slice_connected(z, r);
}

std::vector<std::size_t> slice_sources(const ARComponent& z, const Slice& r) {
  std::vector<std::size_t> out;
  const auto n = z.quiver().size();
  for (std::size_t p = 0; p < n; ++p) {
    bool source = true;
    for (std::size_t q = 0; q < n && source; ++q)
      if (q != p && z.arrow_mult(r.member(q), r.member(p)) > 0) source = false;
    if (source) out.push_back(p);
  }
  return out;
}

std::vector<std::size_t> slice_sinks(const ARComponent& z, const Slice& r) {
  std::vector<std::size_t> out;
  const auto n = z.quiver().size();
  for (std::size_t p = 0; p < n; ++p) {
    bool sink = true;
    for (std::size_t q = 0; q < n && sink; ++q)
      if (q != p && z.arrow_mult(r.member(p), r.member(q)) > 0) sink = false;
    if (sink) out.push_back(p);
  }
  return out;
}

Slice slice_from_source(const ARComponent& z, IndecRef x) {
  if (!z.exists(x)) fail(ErrorKind::OutOfWindow, "slice source outside the window");
  Slice r;
  for (std::size_t q = 0; q < z.quiver().size(); ++q) {
    int found = -1;
    for (int s = 0; s <= z.depth() && found < 0; ++s)
      if (z.exists({q, s}) && z.precedes(x, {q, s})) found = s;
    if (found < 0) fail(ErrorKind::NoSuchSlice, "orbit of " + z.quiver().name(q) + " not reached from the source");
    r.shift.push_back(found);
  }
  if (!is_slice(z, r) || slice_sources(z, r) != std::vector<std::size_t>{x.vertex})
    fail(ErrorKind::NoSuchSlice, "no slice with the requested unique source");
  return r;
}

Slice slice_to_sink(const ARComponent& z, IndecRef x) {
  if (!z.exists(x)) fail(ErrorKind::OutOfWindow, "slice sink outside the window");
  Slice r;
  for (std::size_t q = 0; q < z.quiver().size(); ++q) {
    int found = -1;
    for (int s = x.shift; s >= 0 && found < 0; --s)
      if (z.exists({q, s}) && z.precedes({q, s}, x)) found = s;
    if (found < 0) fail(ErrorKind::NoSuchSlice, "orbit of " + z.quiver().name(q) + " has no predecessor of the sink");
    r.shift.push_back(found);
  }
  if (!is_slice(z, r) || slice_sinks(z, r) != std::vector<std::size_t>{x.vertex})
    fail(ErrorKind::NoSuchSlice, "no slice with the requested unique sink");
  return r;
}

Slice reflect_slice(const ARComponent& z, const Slice& r, std::size_t p) {
  const auto sources = slice_sources(z, r);
  if (std::find(sources.begin(), sources.end(), p) == sources.end())
    fail(ErrorKind::NotASource, z.quiver().name(p) + " is not a source of the slice");
  Slice out = r;
  ++out.shift.at(p);
  if (!z.exists(out.member(p))) fail(ErrorKind::OutOfWindow, "reflected slice leaves the window");
  return out;
}

SinkReflection reflect_quiver_at_sink(const Quiver& q, std::size_t p) {
  if (!q.is_sink(p)) fail(ErrorKind::NotASink, q.name(p) + " is not a sink");
  return {q.reversed_at(p), p};
}

nlohmann::json to_json(const ARComponent& z) {
  const auto& q = z.quiver();
  nlohmann::json dims = nlohmann::json::object();
  nlohmann::json arrows = nlohmann::json::array();
  for (std::size_t pos = 0; pos < z.size(); ++pos) {
    const auto r = z.ref(pos);
    if (!z.exists(r)) continue;
    dims[format_ref(q, r)] = z.dim(r);
    for (const auto& s : z.successors(r))
      arrows.push_back({{"from", format_ref(q, r)}, {"to", format_ref(q, s.ref)}, {"mult", s.mult}});
  }
  return {{"quiver", to_json(q)}, {"depth", z.depth()}, {"dim", dims}, {"ar_arrows", arrows}};
}

}  // namespace degenkit
