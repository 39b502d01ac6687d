#include <doctest.h>

#include "degenkit/error.hpp"
#include "degenkit/families.hpp"
#include "degenkit/quiver_core.hpp"
#include "oracles.hpp"

using namespace degenkit;

TEST_SUITE("families") {

TEST_CASE("catalog sizes") {
  CHECK(catalog("Kmn(2,3)").size() == 5);
  CHECK(catalog("Vm(4)").size() == 2);
  CHECK(catalog("KKn(5)").size() == 5);
  CHECK(catalog("KDn(6)").size() == 6);
  CHECK(catalog("AKpq(2,3)").size() == 5);
  CHECK(catalog("wildD(6)").size() == 8);
  CHECK(catalog("Kronecker").size() == 2);
  for (const auto& name : catalog_names()) CHECK_FALSE(name.empty());
}

TEST_CASE("catalog errors") {
  auto kind = [](const char* id) {
    try {
      catalog(id);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  CHECK(kind("Nope") == ErrorKind::Parse);
  CHECK(kind("Vm(3") == ErrorKind::Parse);
  CHECK(kind("Vm(1,2)") == ErrorKind::BadParameters);
  CHECK(kind("Vm(0)") == ErrorKind::BadParameters);
  CHECK(kind("KKn(2)") == ErrorKind::BadParameters);
}

TEST_CASE("families are wild with the stated sinks") {
  CHECK(catalog("Kmn(2,2)").sinks() == std::vector<std::size_t>{catalog("Kmn(2,2)").index("b1")});
  CHECK(catalog("KKn(4)").sinks() == std::vector<std::size_t>{catalog("KKn(4)").index("a2")});
  CHECK(catalog("S").sinks() == std::vector<std::size_t>{catalog("S").index("z")});
  for (auto id : {"Kmn(1,2)", "Vm(3)", "KKn(3)", "wildD(6)", "wildE6", "wildE7", "wildE8", "S", "T"})
    CHECK(representation_type(catalog(id)) == RepresentationType::Wild);
}

TEST_CASE("KK3 family has codimension m and is minimal") {
  for (int m = 1; m <= 4; ++m) {
    const auto d = kk3_family(m);
    CHECK(validate(d));
    CHECK(codimension(d) == m);
    CHECK(is_minimal(d));
  }
  CHECK_THROWS_AS(kk3_family(0), Error);
}

TEST_CASE("KK3 family against the exhaustive oracle") {
  for (int m = 2; m <= 3; ++m) {
    const auto d = kk3_family(m);
    const auto minimal = oracle::minimal_elements(oracle::all_shapes(d.context));
    CHECK(std::find(minimal.begin(), minimal.end(), d.values) != minimal.end());
  }
}

TEST_CASE("Kmn construction equals the unique minimal shape") {
  const auto q = catalog("Kmn(1,2)");
  const auto b1 = q.index("b1");
  for (int k = 2; k <= 5; ++k) {
    const ShapeContext ctx(q, {b1, 0}, {b1, k});
    const auto minimal = enumerate_minimal_shapes(ctx);
    if (minimal.empty()) continue;
    REQUIRE(minimal.size() == 1);
    CHECK(kmn_minimal_shape(ctx) == minimal.front());
  }
}

TEST_CASE("Vm construction") {
  const auto q = catalog("Vm(4)");
  const ShapeContext ctx(q, parse_ref(q, "a:0"), parse_ref(q, "a:3"));
  const auto d = vm_minimal_shape(ctx);
  CHECK(d == indicator_shape(ctx));
  CHECK(is_minimal(d));
  const auto k = catalog("Kronecker");
  CHECK_THROWS_AS(vm_minimal_shape(ShapeContext(k, parse_ref(k, "2:0"), parse_ref(k, "2:3"))), Error);
}

TEST_CASE("reflected shapes") {
  const auto q = catalog("KKn(3)");
  const auto a2 = q.index("a2");
  const ShapeContext ctx(q, {a2, 0}, {a2, 3});
  for (const auto& d : enumerate_shapes(ctx)) {
    const auto r = reflect_shape(d);
    CHECK(validate(r));
    CHECK(reflect_shape(r) == d);
    CHECK(codimension(r) == codimension(d));
  }
  const ShapeContext off(q, {a2, 0}, {q.index("a1"), 3});
  CHECK_THROWS_AS(reflect_shape(indicator_shape(off)), Error);
}

TEST_CASE("segmented families") {
  for (int m = 2; m <= 3; ++m) {
    const auto d = segmented_family(wildD_plan(6, m));
    CHECK(validate(d));
    CHECK(codimension(d) == m);
    CHECK(is_minimal(d));
    const auto e6 = segmented_family(wildE6_plan(m));
    CHECK(validate(e6));
    CHECK(codimension(e6) == m);
    const auto e7 = segmented_family(wildE7_plan(m));
    CHECK(validate(e7));
    CHECK(codimension(e7) == m);
  }
  CHECK_THROWS_AS(wildD_plan(6, 1), Error);
}

TEST_CASE("S family") {
  for (auto [m, n] : {std::pair{2, 1}, {2, 2}, {3, 2}}) {
    const auto d = s_family(m, n);
    CHECK(validate(d));
    CHECK(is_minimal(d));
    CHECK(codimension(d) == 2);
  }
}

TEST_CASE("defect on slices") {
  const auto d = segmented_family(wildD_plan(6, 2));
  const auto& z = d.context.component();
  Slice r{std::vector<int>(z.quiver().size(), 0)};
  const auto sw = slice_weights(z, r);
  CHECK(sw.w == z.quiver().index("w"));
  CHECK(sw.null_root[sw.w] == 0);
  CHECK(defect(sw, std::vector<std::int64_t>(z.quiver().size(), 0)) == 0);
  CHECK(defect(d, r) == defect(sw, slice_values(d, r)));
  CHECK_THROWS_AS(slice_weights(knit(catalog("Vm(3)"), 3), Slice{{0, 0}}), Error);
}

}  // TEST_SUITE
