#include <doctest.h>

#include <nlohmann/json.hpp>

#include "degenkit/error.hpp"
#include "degenkit/families.hpp"
#include "degenkit/quiver_core.hpp"
#include "degenkit/shapes.hpp"
#include "oracles.hpp"

using namespace degenkit;

namespace {

struct Pair {
  const char* quiver;
  const char* u;
  const char* v;
};

// Small enough for the exhaustive oracle.
const Pair kSmall[] = {
    {"Vm(3)", "a:0", "a:2"},      {"Vm(3)", "a:0", "a:3"},     {"Vm(3)", "b:0", "b:2"},
    {"Vm(4)", "a:0", "a:2"},      {"KKn(3)", "a2:0", "a2:2"},  {"KKn(3)", "a2:0", "a2:3"},
    {"Kmn(1,2)", "b1:0", "b1:3"}, {"Kmn(1,2)", "a1:0", "b1:3"}, {"Kmn(2,1)", "b1:0", "a1:3"},
    {"Kronecker", "2:0", "2:3"},  {"KDn(5)", "z1:0", "z1:2"},
};

ShapeContext context(const Pair& p) {
  const auto q = catalog(p.quiver);
  return ShapeContext(q, parse_ref(q, p.u), parse_ref(q, p.v));
}

}  // namespace

TEST_SUITE("shapes") {

TEST_CASE("enumeration matches the exhaustive oracle") {
  for (const auto& p : kSmall) {
    const std::string where = std::string(p.quiver) + " " + p.u + " " + p.v;
    CAPTURE(where);
    const auto ctx = context(p);
    const auto expected = oracle::all_shapes(ctx);
    const auto minimal = oracle::minimal_elements(expected);
    const auto found = enumerate_shapes(ctx);
    CHECK(oracle::values_of(found) == expected);
    CHECK(oracle::values_of(enumerate_minimal_shapes(ctx)) == minimal);
    CHECK(has_shape(ctx) == !expected.empty());
    for (const auto& d : found) {
      CHECK(validate(d));
      CHECK(is_minimal(d) == (std::find(minimal.begin(), minimal.end(), d.values) != minimal.end()));
    }
  }
}

TEST_CASE("serial and parallel enumeration agree") {
  const auto q = catalog("Vm(3)");
  const ShapeContext ctx(q, parse_ref(q, "a:0"), parse_ref(q, "a:4"));
  const auto a = enumerate_shapes_serial(ctx);
  const auto b = enumerate_shapes(ctx);
  CHECK(a.size() == 751);
  CHECK(a == b);
  CHECK(enumerate_minimal_shapes_serial(ctx) == enumerate_minimal_shapes(ctx));

  const auto s = s_family(2, 2);
  CHECK(enumerate_minimal_shapes_serial(s.context) == enumerate_minimal_shapes(s.context));
}

TEST_CASE("shape counts on V3 grow quickly") {
  // 3 and 27 are also reproduced by the exhaustive oracle above
  const auto q = catalog("Vm(3)");
  const std::size_t expected[] = {3, 27, 751, 79528};
  for (int k = 2; k <= 5; ++k) {
    const ShapeContext ctx(q, {q.index("a"), 0}, {q.index("a"), k});
    CHECK(enumerate_shapes(ctx).size() == expected[k - 2]);
    const auto minimal = enumerate_minimal_shapes(ctx);
    REQUIRE(minimal.size() == 1);
    CHECK(minimal.front() == vm_minimal_shape(ctx));
  }
}

TEST_CASE("indicator shape") {
  const auto q = catalog("Vm(3)");
  const ShapeContext ctx(q, parse_ref(q, "a:0"), parse_ref(q, "a:3"));
  const auto d = indicator_shape(ctx);
  for (std::size_t pos = 0; pos < ctx.component().size(); ++pos) {
    const auto w = ctx.component().ref(pos);
    const bool inside = std::find(ctx.range().begin(), ctx.range().end(), w) != ctx.range().end();
    CHECK(d.at(w) == (inside ? 1 : 0));
  }
  CHECK(validate(d));
  CHECK(subadditivity(d, ctx.U()) == -1);
  CHECK(subadditivity(d, ctx.V()) == -1);
}

TEST_CASE("validation rejects broken functions") {
  const auto q = catalog("Vm(3)");
  const ShapeContext ctx(q, parse_ref(q, "a:0"), parse_ref(q, "a:2"));
  DeformationShape d(ctx);
  d.set(ctx.U(), 1);
  d.set(ctx.V(), 1);
  CHECK_FALSE(validate(d));  // wrong end, nothing at tau V
  CHECK(validation_failure(d).has_value());
  try {
    (void)module_of_shape(d);
    FAIL("invalid shape accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidShape);
  }
  CHECK_THROWS_AS(codimension(d), Error);
  CHECK_THROWS_AS(is_minimal(d), Error);
}

TEST_CASE("bad pairs") {
  const auto q = catalog("Vm(3)");
  auto kind = [&](const char* u, const char* v) {
    try {
      ShapeContext(q, parse_ref(q, u), parse_ref(q, v));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  CHECK(kind("a:1", "a:1") == ErrorKind::BadPair);
  CHECK(kind("a:2", "a:1") == ErrorKind::BadPair);
  CHECK(kind("a:0", "a:0") == ErrorKind::BadPair);
}

TEST_CASE("module and shape convert back and forth") {
  for (const auto& p : kSmall) {
    const auto ctx = context(p);
    for (const auto& d : enumerate_shapes(ctx)) {
      const auto m = module_of_shape(d);
      CHECK(shape_of_module(m, ctx) == d);
      CHECK(m.total() == blocks(d));
      for (const auto& [w, mult] : m.multiplicities) {
        CHECK(mult > 0);
        CHECK(w != ctx.U());
        CHECK(w != ctx.V());
      }
    }
  }
  const auto q = catalog("Vm(3)");
  const ShapeContext ctx(q, parse_ref(q, "a:0"), parse_ref(q, "a:2"));
  ModuleMultiset bad;
  bad.multiplicities[ctx.U()] = 1;
  bad.multiplicities[ctx.V()] = 1;
  try {
    (void)shape_of_module(bad, ctx);
    FAIL("accepted U+V");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAShape);
  }
}

TEST_CASE("codimension formula holds on minimal shapes") {
  for (const auto& p : kSmall) {
    const auto ctx = context(p);
    for (const auto& d : enumerate_minimal_shapes(ctx)) {
      CHECK(codimension(d) == codim_formula(d));
      CHECK(codimension(d) > 0);
    }
  }
}

TEST_CASE("t-vector and support") {
  for (const auto& p : kSmall) {
    const auto ctx = context(p);
    const auto c = cartan_matrix(ctx.quiver());
    for (const auto& d : enumerate_shapes(ctx)) {
      const auto t = t_vector(d);
      const auto v = v_vector(d);
      const auto cv = oracle::times(c, v);
      for (std::size_t i = 0; i < t.size(); ++i) CHECK(t[i] == -cv[i]);
      CHECK(has_connected_support(d));
    }
  }
}

TEST_CASE("json round trip") {
  const auto d = kk3_family(2);
  const auto j = to_json(d);
  const auto back = shape_from_json(j, d.context.quiver());
  CHECK(back == d);
  CHECK_THROWS_AS(shape_from_json(nlohmann::json::object(), d.context.quiver()), Error);
}

TEST_CASE("report") {
  const auto d = kk3_family(3);
  const auto r = report(d);
  CHECK(r.codimension == 3);
  CHECK(r.codim_formula == 3);
  CHECK(r.minimal);
  CHECK(r.blocks == blocks(d));
}

TEST_CASE("min blocks and empirical K") {
  const auto q = catalog("Vm(3)");
  const ShapeContext ctx(q, parse_ref(q, "a:0"), parse_ref(q, "a:3"));
  std::int64_t least = -1;
  for (const auto& d : enumerate_shapes(ctx))
    if (least < 0 || blocks(d) < least) least = blocks(d);
  CHECK(min_blocks(ctx) == least);

  const auto table = empirical_K_table(q, 4);
  for (std::size_t j = 1; j < table.size(); ++j)
    if (table[j] && table[j - 1]) CHECK(*table[j] >= *table[j - 1]);
  CHECK_THROWS_AS(empirical_K_table(catalog("Kronecker"), 3), Error);
}

}  // TEST_SUITE
