#include <doctest.h>

#include <sstream>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/graphviz.hpp>

#include "degenkit/families.hpp"
#include "degenkit/render.hpp"

using namespace degenkit;

namespace {

struct Parsed {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::vector<std::string> labels;
};

// Boost's own graphviz reader, so the output is checked by a real DOT parser.
Parsed parse_dot(const std::string& text) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS,
                                      boost::property<boost::vertex_name_t, std::string>,
                                      boost::property<boost::edge_name_t, std::string>>;
  Graph g;
  boost::dynamic_properties dp(boost::ignore_other_properties);
  dp.property("node_id", get(boost::vertex_name, g));
  dp.property("label", get(boost::edge_name, g));
  std::istringstream in(text);
  REQUIRE(boost::read_graphviz(in, g, dp));
  Parsed p;
  p.nodes = boost::num_vertices(g);
  p.edges = boost::num_edges(g);
  for (auto [it, end] = boost::vertices(g); it != end; ++it) p.labels.push_back(get(boost::vertex_name, g, *it));
  return p;
}

std::size_t count_arrows(const ARComponent& z) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < z.size(); ++pos)
    if (z.exists(z.ref(pos))) n += z.successors(z.ref(pos)).size();
  return n;
}

}  // namespace

TEST_SUITE("render") {

TEST_CASE("DOT output parses and has every member and arrow") {
  const auto z = knit(catalog("wildD(6)"), 4);
  const auto p = parse_dot(render_dot(z));
  CHECK(p.nodes == z.size());
  CHECK(p.edges == count_arrows(z));
  CHECK(std::find(p.labels.begin(), p.labels.end(), "w:3") != p.labels.end());
  // one DOT line break between name and value, not an escaped backslash
  const auto text = render_dot(z);
  CHECK(text.find("label=\"w:0\\n") != std::string::npos);
  CHECK(text.find("\\\\n") == std::string::npos);
}

TEST_CASE("DOT output of a marked shape parses") {
  const auto plan = wildD_plan(6, 3);
  const auto d = segmented_family(plan);
  const auto marks = plan_marks(plan, d.context.component());
  CHECK_FALSE(marks.empty());
  const auto text = render_dot(d, marks);
  CHECK(text.find("fillcolor") != std::string::npos);
  const auto p = parse_dot(text);
  CHECK(p.nodes == d.context.component().size());
}

TEST_CASE("ASCII grid has one row per orbit") {
  const auto q = catalog("Vm(3)");
  const ShapeContext ctx(q, parse_ref(q, "a:0"), parse_ref(q, "a:2"));
  const auto text = render_ascii(DeformationShape(ctx));
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  REQUIRE(lines.size() == 3);
  CHECK(lines[1].rfind("a", 0) == 0);
  CHECK(lines[2].rfind("b", 0) == 0);
  // an all-zero function prints zeros only
  for (std::size_t k = 1; k < 3; ++k)
    for (char c : lines[k].substr(1)) CHECK((c == ' ' || c == '0'));
}

TEST_CASE("ASCII marks are bracketed and listed") {
  const auto plan = wildD_plan(6, 2);
  const auto d = segmented_family(plan);
  const auto marks = plan_marks(plan, d.context.component());
  const auto text = render_ascii(d, marks);
  CHECK(text.find('[') != std::string::npos);
  for (const auto& mk : marks) CHECK(text.find(mk.label + ":") != std::string::npos);
}

}  // TEST_SUITE
