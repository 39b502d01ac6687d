#include "shape_search.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include <omp.h>

namespace degenkit::detail {

ShapeProblem build_problem(const ShapeContext& ctx, const std::vector<std::int64_t>* cap) {
  const auto& z = ctx.component();
  const auto n = z.size();
  ShapeProblem p;
  p.component = &z;
  p.row_at.assign(n, std::nullopt);
  p.hom_bound.assign(n, 0);
  for (std::size_t pn = 0; pn < n; ++pn)
    if (z.exists(z.ref(pn))) p.hom_bound[pn] = z.hom_dim(ctx.U(), z.ref(pn)) + z.hom_dim(ctx.V(), z.ref(pn));
  p.lo.assign(n, 0);
  p.hi.assign(n, 0);
  p.watch.assign(n, {});
  p.blocks_coeff.assign(n, 0);

  std::vector<bool> inside(n, false);
  const auto pu = z.position(ctx.U());
  const auto pt = z.position(ctx.tauV());
  for (auto w : ctx.range()) {
    const auto pw = z.position(w);
    inside[pw] = true;
    p.hi[pw] = std::min(z.hom_dim(ctx.U(), w), z.hom_dim(w, ctx.tauV()));
    if (cap) p.hi[pw] = std::min(p.hi[pw], (*cap)[pw]);
    if (pw != pu && pw != pt) p.order.push_back(pw);
  }
  p.lo[pu] = p.hi[pu] = 1;
  p.lo[pt] = p.hi[pt] = 1;

  for (std::size_t px = 0; px < n; ++px) {
    const auto x = z.ref(px);
    if (!z.exists(x) || x == ctx.U() || x == ctx.V()) continue;
    Row row{px, std::nullopt, {}};
    bool relevant = inside[px];
    if (auto t = z.translate(x)) {
      row.y = z.position(*t);
      relevant = relevant || inside[*row.y];
    }
    for (const auto& s : z.middle_term(x)) {
      const auto ps = z.position(s.ref);
      row.rhs.emplace_back(ps, s.mult);
      relevant = relevant || inside[ps];
    }
    if (!relevant) continue;
    const auto id = p.rows.size();
    p.row_at[px] = id;
    p.watch[row.x].push_back(id);
    p.blocks_coeff[row.x] -= 1;
    if (row.y) {
      p.watch[*row.y].push_back(id);
      p.blocks_coeff[*row.y] -= 1;
    }
    for (auto [ps, m] : row.rhs) {
      p.watch[ps].push_back(id);
      p.blocks_coeff[ps] += m;
    }
    p.rows.push_back(std::move(row));
  }
  return p;
}

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

class Searcher {
 public:
  Searcher(const ShapeProblem& p, Mode mode, std::vector<std::int64_t> lo, std::vector<std::int64_t> hi)
      : p_(p), mode_(mode), lo_(std::move(lo)), hi_(std::move(hi)), queued_(p.rows.size(), false),
        cap_(p.hom_bound) {}

  bool propagate_all() {
    for (std::size_t r = 0; r < p_.rows.size(); ++r) enqueue(r);
    return propagate();
  }

  // Pins position pos to v and propagates; undo with restore(mark).
  bool assign(std::size_t pos, std::int64_t v) { return tighten(pos, v, v) && propagate(); }
  struct Mark {
    std::size_t trail;
    std::size_t commits;
  };
  Mark mark() const { return {trail_.size(), commits_.size()}; }
  void restore(Mark m) {
    while (trail_.size() > m.trail) {
      const auto& c = trail_.back();
      lo_[c.pos] = c.lo;
      hi_[c.pos] = c.hi;
      trail_.pop_back();
    }
    while (commits_.size() > m.commits) {
      const auto [pos, s] = commits_.back();
      if (s != 0) shift_cap(pos, s);
      committed_ = pos;
      commits_.pop_back();
    }
  }

  std::optional<std::size_t> first_free(std::size_t from = 0) const {
    for (std::size_t k = from; k < p_.order.size(); ++k)
      if (lo_[p_.order[k]] != hi_[p_.order[k]]) return k;
    return std::nullopt;
  }

  void run() { dfs(0); }

  const std::vector<std::int64_t>& lo() const { return lo_; }
  const std::vector<std::int64_t>& hi() const { return hi_; }
  SearchResult& result() { return result_; }

 private:
  struct Change {
    std::size_t pos;
    std::int64_t lo;
    std::int64_t hi;
  };

  void enqueue(std::size_t r) {
    if (!queued_[r]) {
      queued_[r] = true;
      queue_.push_back(r);
    }
  }

  bool tighten(std::size_t pos, std::int64_t lo, std::int64_t hi) {
    lo = std::max(lo, lo_[pos]);
    hi = std::min(hi, hi_[pos]);
    if (lo > hi) return false;
    if (lo == lo_[pos] && hi == hi_[pos]) return true;
    trail_.push_back({pos, lo_[pos], hi_[pos]});
    lo_[pos] = lo;
    hi_[pos] = hi;
    for (auto r : p_.watch[pos]) enqueue(r);
    return true;
  }

  bool revise(const Row& row) {
    std::int64_t max_rhs = 0;
    for (auto [ps, m] : row.rhs) max_rhs += m * hi_[ps];
    const std::int64_t ly = row.y ? lo_[*row.y] : 0;
    const std::int64_t min_lhs = lo_[row.x] + ly;
    if (min_lhs > max_rhs) return false;
    if (!tighten(row.x, lo_[row.x], max_rhs - ly)) return false;
    if (row.y && !tighten(*row.y, ly, max_rhs - lo_[row.x])) return false;
    for (auto [ps, m] : row.rhs) {
      const std::int64_t need = min_lhs - (max_rhs - m * hi_[ps]);
      if (need > 0 && !tighten(ps, ceil_div(need, m), hi_[ps])) return false;
    }
    return true;
  }

  bool drain() {
    bool ok = true;
    while (!queue_.empty()) {
      const auto r = queue_.back();
      queue_.pop_back();
      queued_[r] = false;
      if (ok && !revise(p_.rows[r])) ok = false;
    }
    return ok;
  }

  void shift_cap(std::size_t px, std::int64_t s) {
    const auto& homs = p_.component->hom_table()[px];
    for (std::size_t pn = px + 1; pn < cap_.size(); ++pn) cap_[pn] += s * homs[pn];
  }

  // Commits the multiplicities of the fixed prefix and lowers the caps.
  bool commit() {
    const auto n = lo_.size();
    while (committed_ < n && lo_[committed_] == hi_[committed_]) {
      const auto px = committed_;
      std::int64_t s = 0;
      if (const auto r = p_.row_at[px]) {
        const auto& row = p_.rows[*r];
        for (auto [ps, m] : row.rhs) s += m * lo_[ps];
        if (row.y) s -= lo_[*row.y];
        s -= lo_[px];
      }
      commits_.emplace_back(px, s);
      ++committed_;
      if (s == 0) continue;
      shift_cap(px, -s);
      for (std::size_t pn = px + 1; pn < n; ++pn)
        if (cap_[pn] < hi_[pn] && !tighten(pn, lo_[pn], cap_[pn])) return false;
    }
    return true;
  }

  bool propagate() {
    while (true) {
      if (!drain()) return false;
      if (!commit()) {
        drain();
        return false;
      }
      if (queue_.empty()) return true;
    }
  }

  std::int64_t blocks_bound() const {
    std::int64_t b = 0;
    for (std::size_t pos = 0; pos < lo_.size(); ++pos) {
      const auto c = p_.blocks_coeff[pos];
      b += c * (c >= 0 ? lo_[pos] : hi_[pos]);
    }
    return b;
  }

  void dfs(std::size_t from) {
    if (stop_) return;
    if (mode_ == Mode::MinBlocks && result_.best_blocks && blocks_bound() >= *result_.best_blocks) return;
    const auto k = first_free(from);
    if (!k) {
      if (mode_ == Mode::MinBlocks) {
        result_.best_blocks = blocks_bound();
      } else {
        result_.solutions.push_back(lo_);
        if (mode_ == Mode::First) stop_ = true;
      }
      return;
    }
    const auto pos = p_.order[*k];
    const auto top = hi_[pos];
    for (auto v = lo_[pos]; v <= top && !stop_; ++v) {
      const auto m = mark();
      if (assign(pos, v)) dfs(*k + 1);
      restore(m);
    }
  }

  const ShapeProblem& p_;
  Mode mode_;
  std::vector<std::int64_t> lo_;
  std::vector<std::int64_t> hi_;
  std::vector<Change> trail_;
  std::vector<std::size_t> queue_;
  std::vector<bool> queued_;
  std::vector<std::int64_t> cap_;  // hom formula with the committed prefix
  std::size_t committed_ = 0;
  std::vector<std::pair<std::size_t, std::int64_t>> commits_;
  SearchResult result_;
  bool stop_ = false;
};

struct Node {
  std::vector<std::int64_t> lo;
  std::vector<std::int64_t> hi;
};

}  // namespace

std::vector<std::vector<std::int64_t>> minimal_only(std::vector<std::vector<std::int64_t>> sols) {
  std::vector<std::size_t> idx(sols.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::int64_t> sum(sols.size());
  for (std::size_t i = 0; i < sols.size(); ++i) sum[i] = std::accumulate(sols[i].begin(), sols[i].end(), std::int64_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return sum[a] < sum[b]; });
  std::vector<std::size_t> kept;
  for (auto i : idx) {
    bool dominated = false;
    for (auto k : kept) {
      bool below = true;
      for (std::size_t pos = 0; pos < sols[i].size() && below; ++pos) below = sols[k][pos] <= sols[i][pos];
      if (below) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(i);
  }
  std::sort(kept.begin(), kept.end());
  std::vector<std::vector<std::int64_t>> out;
  for (auto k : kept) out.push_back(std::move(sols[k]));
  return out;
}

namespace {

std::optional<std::vector<std::int64_t>> first_in(const ShapeProblem& p, std::vector<std::int64_t> lo,
                                                  std::vector<std::int64_t> hi) {
  Searcher s(p, Mode::First, std::move(lo), std::move(hi));
  if (!s.propagate_all()) return std::nullopt;
  s.run();
  if (s.result().solutions.empty()) return std::nullopt;
  return std::move(s.result().solutions.front());
}

// Region lo/hi minus the up-set of x, as disjoint boxes: the k-th box keeps
// the earlier support positions at >= x and pushes the k-th below x.
std::vector<Node> split_below(const ShapeProblem& p, const Node& region, const std::vector<std::int64_t>& x) {
  std::vector<Node> out;
  auto lo = region.lo;
  for (auto pos : p.order) {
    if (x[pos] <= region.lo[pos]) continue;
    Node box{lo, region.hi};
    box.hi[pos] = x[pos] - 1;
    out.push_back(std::move(box));
    lo[pos] = x[pos];
  }
  return out;
}

// Every minimal solution of the region lands in `found`: it is either the
// lexicographically least one or lies in one of the boxes below it.
void minimal_in(const ShapeProblem& p, const Node& region, std::vector<std::vector<std::int64_t>>& found) {
  auto x = first_in(p, region.lo, region.hi);
  if (!x) return;
  for (const auto& box : split_below(p, region, *x)) minimal_in(p, box, found);
  found.push_back(std::move(*x));
}

}  // namespace

SearchResult search_serial(const ShapeProblem& p, Mode mode) {
  if (mode == Mode::Minimal) {
    SearchResult out;
    minimal_in(p, {p.lo, p.hi}, out.solutions);
    out.solutions = minimal_only(std::move(out.solutions));
    return out;
  }
  Searcher s(p, mode, p.lo, p.hi);
  if (!s.propagate_all()) return {};
  s.run();
  return std::move(s.result());
}

SearchResult search_parallel(const ShapeProblem& p, Mode mode) {
  if (mode == Mode::First) return search_serial(p, mode);
  if (mode == Mode::Minimal) {
    SearchResult out;
    auto x = first_in(p, p.lo, p.hi);
    if (!x) return out;
    const auto boxes = split_below(p, {p.lo, p.hi}, *x);
    std::vector<std::vector<std::vector<std::int64_t>>> parts(boxes.size());
    std::exception_ptr error;
    const auto count = static_cast<long>(boxes.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      try {
        minimal_in(p, boxes[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(i)]);
      } catch (...) {
#pragma omp critical
        error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
    for (auto& part : parts)
      for (auto& s : part) out.solutions.push_back(std::move(s));
    out.solutions.push_back(std::move(*x));
    out.solutions = minimal_only(std::move(out.solutions));
    return out;
  }
  Searcher root(p, mode, p.lo, p.hi);
  if (!root.propagate_all()) return {};

  // Breadth-first split until there is enough independent work.
  const std::size_t target = 16 * static_cast<std::size_t>(std::max(1, omp_get_max_threads()));
  std::vector<Node> frontier{{root.lo(), root.hi()}};
  for (bool grew = true; grew && frontier.size() < target;) {
    grew = false;
    std::vector<Node> next;
    for (auto& node : frontier) {
      Searcher s(p, mode, node.lo, node.hi);
      const auto k = s.first_free();
      if (!k) {
        next.push_back(std::move(node));
        continue;
      }
      grew = true;
      const auto pos = p.order[*k];
      for (auto v = node.lo[pos]; v <= node.hi[pos]; ++v) {
        const auto m = s.mark();
        if (s.assign(pos, v)) next.push_back({s.lo(), s.hi()});
        s.restore(m);
      }
    }
    frontier = std::move(next);
  }

  std::vector<SearchResult> parts(frontier.size());
  std::exception_ptr error;
  const auto count = static_cast<long>(frontier.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      Searcher s(p, mode, frontier[static_cast<std::size_t>(i)].lo, frontier[static_cast<std::size_t>(i)].hi);
      s.run();
      parts[static_cast<std::size_t>(i)] = std::move(s.result());
    } catch (...) {
#pragma omp critical
      error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  SearchResult out;
  for (auto& part : parts) {
    for (auto& s : part.solutions) out.solutions.push_back(std::move(s));
    if (part.best_blocks && (!out.best_blocks || *part.best_blocks < *out.best_blocks))
      out.best_blocks = part.best_blocks;
  }
  return out;
}

}  // namespace degenkit::detail
