#include "degenkit/render.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "degenkit/error.hpp"

namespace degenkit {

namespace {

using Cell = std::function<std::string(IndecRef)>;

// ref -> labels of the marks containing it
std::map<IndecRef, std::vector<std::string>> marked(const std::vector<SliceMark>& marks) {
  std::map<IndecRef, std::vector<std::string>> out;
  for (const auto& mk : marks)
    for (std::size_t p = 0; p < mk.slice.shift.size(); ++p) out[mk.slice.member(p)].push_back(mk.label);
  return out;
}

std::string ascii(const ARComponent& z, int last, const Cell& cell, const std::vector<SliceMark>& marks) {
  const auto& q = z.quiver();
  const auto hits = marked(marks);
  std::size_t name_w = 0;
  for (const auto& v : q.vertices()) name_w = std::max(name_w, v.size());
  std::size_t w = std::to_string(last).size();
  for (std::size_t p = 0; p < q.size(); ++p)
    for (int i = 0; i <= last; ++i) w = std::max(w, cell({p, i}).size());
  w += 3;  // room for brackets and a gap

  auto pad = [](std::string s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  std::ostringstream os;
  os << std::string(name_w, ' ');
  for (int i = 0; i <= last; ++i) os << pad(std::to_string(i) + " ", w);
  os << '\n';
  for (std::size_t p = 0; p < q.size(); ++p) {
    std::string line = q.name(p) + std::string(name_w - q.name(p).size(), ' ');
    for (int i = 0; i <= last; ++i) {
      auto s = cell({p, i});
      s = hits.count({p, i}) ? "[" + s + "]" : s + " ";
      line += pad(s, w);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  for (const auto& mk : marks) {
    os << mk.label << ':';
    for (std::size_t p = 0; p < mk.slice.shift.size(); ++p) os << ' ' << format_ref(q, mk.slice.member(p));
    os << '\n';
  }
  return os.str();
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

std::string dot(const ARComponent& z, const Cell& cell, const std::vector<SliceMark>& marks) {
  const auto& q = z.quiver();
  const auto hits = marked(marks);
  std::ostringstream os;
  os << "digraph ar {\n  rankdir=LR;\n  node [shape=box];\n";
  for (std::size_t pos = 0; pos < z.size(); ++pos) {
    const auto r = z.ref(pos);
    if (!z.exists(r)) continue;
    const auto name = format_ref(q, r);
    os << "  " << quoted(name) << " [label=" << quoted(name + "\n" + cell(r));
    if (auto it = hits.find(r); it != hits.end()) {
      std::string xl;
      for (const auto& l : it->second) xl += (xl.empty() ? "" : ",") + l;
      os << ", style=filled, fillcolor=lightgrey, xlabel=" << quoted(xl);
    }
    os << "];\n";
  }
  for (std::size_t pos = 0; pos < z.size(); ++pos) {
    const auto r = z.ref(pos);
    if (!z.exists(r)) continue;
    for (const auto& s : z.successors(r)) {
      os << "  " << quoted(format_ref(q, r)) << " -> " << quoted(format_ref(q, s.ref));
      if (s.mult > 1) os << " [label=" << quoted(std::to_string(s.mult)) << ']';
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

Cell dims(const ARComponent& z) {
  return [&z](IndecRef r) -> std::string {
    if (!z.in_window(r) || !z.exists(r)) return ".";
    std::int64_t total = 0;
    for (auto x : z.dim(r)) total += x;
    return std::to_string(total);
  };
}

Cell values(const DeformationShape& d) {
  return [&d](IndecRef r) -> std::string {
    const auto& z = d.context.component();
    if (!z.in_window(r) || !z.exists(r)) return ".";
    return std::to_string(d.at(r));
  };
}

}  // namespace

std::vector<SliceMark> plan_marks(const SegmentPlan& plan, const ARComponent& z) {
  std::vector<SliceMark> out;
  auto add = [&](std::string label, auto make, IndecRef b) {
    try {
      out.push_back({std::move(label), make(z, b)});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::NoSuchSlice && e.kind() != ErrorKind::OutOfWindow) throw;
    }
  };
  for (int i = 0; i + 1 < plan.m; ++i) {
    if (i >= 1) add("S(B^s_" + std::to_string(i) + ")", slice_to_sink, plan.bs[static_cast<std::size_t>(i)]);
    add("Q(B^q_" + std::to_string(i) + ")", slice_from_source, plan.bq[static_cast<std::size_t>(i)]);
  }
  if (plan.m >= 2) {
    const auto i = static_cast<std::size_t>(plan.m - 1);
    add("S(B^s_" + std::to_string(i) + ")", slice_to_sink, plan.bs[i]);
  }
  return out;
}

std::string render_ascii(const ARComponent& z, const std::vector<SliceMark>& marks) {
  return ascii(z, z.depth(), dims(z), marks);
}

std::string render_ascii(const DeformationShape& d, const std::vector<SliceMark>& marks) {
  return ascii(d.context.component(), d.context.V().shift, values(d), marks);
}

std::string render_dot(const ARComponent& z, const std::vector<SliceMark>& marks) {
  return dot(z, dims(z), marks);
}

std::string render_dot(const DeformationShape& d, const std::vector<SliceMark>& marks) {
  return dot(d.context.component(), values(d), marks);
}

}  // namespace degenkit
