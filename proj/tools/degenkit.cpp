// degenkit: command-line front end for the library.
//
// Every command writes JSON or a plain table to stdout. Failures print one
// line "error: <Kind>: <message>" to stderr and exit with status 2; a failed
// verify suite exits with 1. DEGENKIT_SEED is reserved and ignored: nothing
// here is random.

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <omp.h>

#include "degenkit/ar_component.hpp"
#include "degenkit/error.hpp"
#include "degenkit/families.hpp"
#include "degenkit/quiver.hpp"
#include "degenkit/quiver_core.hpp"
#include "degenkit/render.hpp"
#include "degenkit/shapes.hpp"
#include "degenkit/verify.hpp"

using namespace degenkit;
using nlohmann::json;

namespace {

struct Common {
  int depth = 0;
  std::vector<std::string> sinks;
  std::string format = "table";
  int jobs = 0;
};

// A path to a JSON quiver file, else a catalog id; --sink reflections applied
// in the order given.
Quiver resolve(const std::string& quiver_id, const Common& opt) {
  auto q = std::filesystem::is_regular_file(quiver_id) ? load_quiver(quiver_id) : catalog(quiver_id);
  for (const auto& s : opt.sinks) q = reflect_quiver_at_sink(q, q.index(s)).reflected;
  return q;
}

void need_format(const Common& opt, std::initializer_list<const char*> allowed) {
  for (auto a : allowed)
    if (opt.format == a) return;
  std::string list;
  for (auto a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  fail(ErrorKind::Parse, "--format " + opt.format + " is not available here (use " + list + ")");
}

std::string join(const IntVector& v) {
  std::string out;
  for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
  return out;
}

std::string join_matrix(const IntMatrix& m, const std::string& indent) {
  std::string out;
  for (const auto& row : m) out += indent + join(row) + "\n";
  return out;
}

// --- analyze ------------------------------------------------------------------

void analyze(const std::string& quiver_id, const Common& opt) {
  need_format(opt, {"table", "json"});
  const auto q = resolve(quiver_id, opt);
  const auto type = representation_type(q);
  const auto c = cartan_matrix(q);
  json j = to_json(q);
  j["type"] = std::string(to_string(type));
  j["cartan"] = c;
  std::ostringstream os;
  os << "vertices: ";
  for (std::size_t p = 0; p < q.size(); ++p) os << (p ? " " : "") << q.name(p);
  os << "\narrows:";
  for (const auto& a : q.arrow_list()) os << ' ' << a.from << "->" << a.to << (a.mult > 1 ? "^" + std::to_string(a.mult) : "");
  os << "\ntype: " << to_string(type) << "\ncartan:\n" << join_matrix(c, "  ");
  if (type == RepresentationType::Tame) {
    const auto root = null_root(q);
    const auto h = coxeter_number(q);
    j["null_root"] = root;
    j["coxeter_number"] = h;
    os << "null root: " << join(root) << "\ncoxeter number: " << h << "\n";
  }
  if (type == RepresentationType::Wild) {
    const bool mixed = is_mixed_kernel(c);
    j["mixed_kernel"] = mixed;
    os << "mixed kernel: " << (mixed ? "true" : "false") << "\n";
  }
  if (opt.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << os.str();
  }
}

// --- knit -----------------------------------------------------------------------

void knit_cmd(const std::string& quiver_id, const Common& opt) {
  need_format(opt, {"table", "json", "dot", "ascii"});
  const auto q = resolve(quiver_id, opt);
  const auto z = knit(q, opt.depth > 0 ? opt.depth : 4);
  if (opt.format == "json") {
    std::cout << to_json(z).dump(2) << "\n";
  } else if (opt.format == "dot") {
    std::cout << render_dot(z);
  } else if (opt.format == "ascii") {
    std::cout << render_ascii(z);
  } else {
    for (std::size_t pos = 0; pos < z.size(); ++pos) {
      const auto r = z.ref(pos);
      if (!z.exists(r)) continue;
      std::cout << format_ref(q, r) << "  dim " << join(z.dim(r)) << "  ->";
      for (const auto& s : z.successors(r))
        std::cout << ' ' << format_ref(q, s.ref) << (s.mult > 1 ? "^" + std::to_string(s.mult) : "");
      std::cout << "\n";
    }
    if (z.truncated()) std::cout << "(finite type: component ends inside the window)\n";
  }
}

// --- shapes / minimal -------------------------------------------------------------

// `minimal` is passed in when the caller already knows it; is_minimal is a
// search of its own and too slow to run once per shape of a big enumeration.
json shape_entry(const DeformationShape& d, std::optional<bool> minimal) {
  auto j = to_json(d);
  j["codimension"] = codimension(d);
  j["codim_formula"] = codim_formula(d);
  j["blocks"] = blocks(d);
  j["minimal"] = minimal ? *minimal : is_minimal(d);
  j["t"] = t_vector(d);
  j["v"] = v_vector(d);
  j["module"] = to_json(d.context.quiver(), module_of_shape(d))["multiplicities"];
  return j;
}

void print_shapes(const std::vector<DeformationShape>& shapes, const ShapeContext& ctx, const Common& opt,
                  const std::function<std::optional<bool>(const DeformationShape&)>& known_minimal = {}) {
  const auto& q = ctx.quiver();
  json list = json::array();
  for (const auto& d : shapes) list.push_back(shape_entry(d, known_minimal ? known_minimal(d) : std::nullopt));
  if (opt.format == "json") {
    std::cout << json{{"U", format_ref(q, ctx.U())}, {"V", format_ref(q, ctx.V())}, {"count", shapes.size()},
                      {"shapes", list}}
                     .dump(2)
              << "\n";
    return;
  }
  std::cout << "U " << format_ref(q, ctx.U()) << "  V " << format_ref(q, ctx.V()) << "  shapes " << shapes.size()
            << "\n";
  std::size_t k = 0;
  for (const auto& e : list) {
    std::cout << "#" << k++ << "  codim " << e["codimension"] << "  formula " << e["codim_formula"] << "  blocks "
              << e["blocks"] << "  minimal " << (e["minimal"].get<bool>() ? "yes" : "no") << "\n  t "
              << join(e["t"].get<IntVector>()) << "  v " << join(e["v"].get<IntVector>()) << "\n  values";
    for (const auto& [ref, value] : e["values"].items()) std::cout << ' ' << ref << '=' << value;
    std::cout << "\n  module";
    for (const auto& [ref, value] : e["module"].items()) std::cout << ' ' << ref << '^' << value;
    std::cout << "\n";
  }
}

void shapes_cmd(const std::string& quiver_id, const std::string& u, const std::string& v, bool minimal_only,
                const Common& opt) {
  need_format(opt, {"table", "json"});
  const auto q = resolve(quiver_id, opt);
  const ShapeContext ctx(q, parse_ref(q, u), parse_ref(q, v), opt.depth);
  const auto minimal = enumerate_minimal_shapes(ctx);
  if (minimal_only) return print_shapes(minimal, ctx, opt, [](const DeformationShape&) { return true; });
  std::set<std::vector<std::int64_t>> minimal_values;
  for (const auto& d : minimal) minimal_values.insert(d.values);
  print_shapes(enumerate_shapes(ctx), ctx, opt,
               [&](const DeformationShape& d) { return minimal_values.count(d.values) > 0; });
}

// --- family -------------------------------------------------------------------

void family_cmd(const std::string& name, int m, int n, const Common& opt) {
  need_format(opt, {"table", "json", "dot", "ascii"});
  std::optional<SegmentPlan> plan;
  auto shape = [&]() -> DeformationShape {
    if (name == "kk3") return kk3_family(m);
    if (name == "s") return s_family(m, n);
    if (name == "wildD") plan = wildD_plan(n, m);
    else if (name == "wildE6") plan = wildE6_plan(m);
    else if (name == "wildE7") plan = wildE7_plan(m);
    else fail(ErrorKind::BadParameters, "unknown family '" + name + "' (kk3, s, wildD, wildE6, wildE7)");
    return segmented_family(*plan);
  }();
  const auto marks = plan ? plan_marks(*plan, shape.context.component()) : std::vector<SliceMark>{};
  if (opt.format == "ascii") {
    std::cout << render_ascii(shape, marks);
  } else if (opt.format == "dot") {
    std::cout << render_dot(shape, marks);
  } else {
    const bool valid = validate(shape);
    if (!valid) fail(ErrorKind::InvalidShape, *validation_failure(shape));
    print_shapes({shape}, shape.context, opt);
  }
}

// --- verify ----------------------------------------------------------------------

int verify_cmd(const std::string& id, const Common& opt) {
  need_format(opt, {"table", "json"});
  std::vector<std::string> ids = id == "all" ? suite_names() : std::vector<std::string>{id};
  bool all_pass = true;
  json out = json::array();
  for (const auto& s : ids) {
    const auto r = run_suite(s);
    all_pass = all_pass && r.pass;
    if (opt.format == "json") {
      out.push_back(to_json(r));
    } else {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.suite << "\n";
      for (const auto& note : r.notes) std::cout << "  " << note << "\n";
    }
  }
  if (opt.format == "json") std::cout << json{{"pass", all_pass}, {"suites", out}}.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

// --- kbound -----------------------------------------------------------------------

void kbound_cmd(const std::string& quiver_id, const Common& opt) {
  need_format(opt, {"table", "json"});
  const auto q = resolve(quiver_id, opt);
  const int depth = opt.depth > 0 ? opt.depth : 6;
  const auto table = empirical_K_table(q, depth);
  if (opt.format == "json") {
    json k = json::array();
    for (const auto& x : table) k.push_back(x ? json(*x) : json(nullptr));
    std::cout << json{{"depth", depth}, {"K", k}}.dump(2) << "\n";
    return;
  }
  std::cout << "j  K(j)\n";
  for (std::size_t j = 0; j < table.size(); ++j)
    std::cout << j << "  " << (table[j] ? std::to_string(*table[j]) : "-") << "\n";
}

// --- render -----------------------------------------------------------------------

void render_cmd(const std::string& quiver_id, const std::string& shape_file, const Common& opt) {
  need_format(opt, {"ascii", "dot", "json"});
  const auto q = resolve(quiver_id, opt);
  if (shape_file.empty()) {
    const auto z = knit(q, opt.depth > 0 ? opt.depth : 4);
    if (opt.format == "json") std::cout << to_json(z).dump(2) << "\n";
    else std::cout << (opt.format == "dot" ? render_dot(z) : render_ascii(z));
    return;
  }
  json j;
  if (shape_file == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(shape_file);
    if (!in) fail(ErrorKind::Io, "cannot open " + shape_file);
    try {
      in >> j;
    } catch (const json::exception& e) {
      fail(ErrorKind::Parse, e.what());
    }
  }
  // accept the output of `shapes`/`minimal`/`family` as well: first listed shape
  if (j.is_object() && j.contains("shapes")) {
    if (!j["shapes"].is_array() || j["shapes"].empty()) fail(ErrorKind::Parse, "shape JSON lists no shapes");
    j = json(j["shapes"][0]);
  }
  const auto d = shape_from_json(j, q, opt.depth);
  if (opt.format == "json") std::cout << to_json(d).dump(2) << "\n";
  else std::cout << (opt.format == "dot" ? render_dot(d) : render_ascii(d));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for preprojective AR components and deformation shapes"};
  app.require_subcommand(1);
  Common opt;
  auto common = [&](CLI::App* sub, bool depth = true) {
    if (depth) sub->add_option("--depth", opt.depth, "knitting depth (window of tau^{-i} P, i <= depth)");
    sub->add_option("--sink", opt.sinks, "reflect at this sink first (repeatable)");
    sub->add_option("--format", opt.format, "json, table, dot or ascii (per command)");
    sub->add_option("--jobs", opt.jobs, "OpenMP threads (default: runtime choice)");
  };

  std::string quiver, u, v, suite, shape_file, family;
  int m = 1, n = 0;

  auto* analyze_app = app.add_subcommand("analyze", "representation type, Cartan matrix, null root");
  analyze_app->add_option("quiver", quiver, "catalog id or JSON file")->required();
  common(analyze_app, false);

  auto* knit_app = app.add_subcommand("knit", "knit the preprojective component");
  knit_app->add_option("quiver", quiver, "catalog id or JSON file")->required();
  common(knit_app);

  auto* shapes_app = app.add_subcommand("shapes", "all deformation shapes of a pair");
  auto* minimal_app = app.add_subcommand("minimal", "minimal deformation shapes of a pair");
  for (auto* sub : {shapes_app, minimal_app}) {
    sub->add_option("quiver", quiver, "catalog id or JSON file")->required();
    sub->add_option("U", u, "vertex:shift")->required();
    sub->add_option("V", v, "vertex:shift")->required();
    common(sub);
  }

  auto* family_app = app.add_subcommand("family", "explicit families: kk3, s, wildD, wildE6, wildE7");
  family_app->add_option("name", family, "family name")->required();
  family_app->add_option("-m", m, "family index m");
  family_app->add_option("-n", n, "second parameter (s: n <= m; wildD: quiver size)");
  common(family_app, false);

  auto* verify_app = app.add_subcommand("verify", "run a check suite (or 'all')");
  verify_app->add_option("suite", suite, "suite id")->required();
  common(verify_app, false);

  auto* kbound_app = app.add_subcommand("kbound", "empirical K(j) table of a wild quiver");
  kbound_app->add_option("quiver", quiver, "catalog id or JSON file")->required();
  common(kbound_app);

  auto* render_app = app.add_subcommand("render", "DOT/ASCII rendering of a window or a shape");
  render_app->add_option("quiver", quiver, "catalog id or JSON file")->required();
  render_app->add_option("--shape", shape_file, "shape JSON file ('-' for stdin)");
  common(render_app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: Usage: " << e.what() << "\n";
    return 2;
  }

  try {
    if (opt.jobs > 0) omp_set_num_threads(opt.jobs);
    if (*render_app && opt.format == "table") opt.format = "ascii";
    if (*analyze_app) analyze(quiver, opt);
    if (*knit_app) knit_cmd(quiver, opt);
    if (*shapes_app) shapes_cmd(quiver, u, v, false, opt);
    if (*minimal_app) shapes_cmd(quiver, u, v, true, opt);
    if (*family_app) family_cmd(family, m, family == "wildD" && n == 0 ? 6 : n, opt);
    if (*verify_app) return verify_cmd(suite, opt);
    if (*kbound_app) kbound_cmd(quiver, opt);
    if (*render_app) render_cmd(quiver, shape_file, opt);
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
