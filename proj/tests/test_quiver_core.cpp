#include <doctest.h>

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

#include "degenkit/error.hpp"
#include "degenkit/families.hpp"
#include "degenkit/quiver_core.hpp"
#include "oracles.hpp"

using namespace degenkit;

namespace {

Quiver star(const std::vector<int>& arms) {
  std::vector<std::string> v{"c"};
  std::vector<Quiver::Arrow> a;
  for (std::size_t k = 0; k < arms.size(); ++k) {
    std::string prev = "c";
    for (int j = 1; j <= arms[k]; ++j) {
      auto name = "x" + std::to_string(k) + "_" + std::to_string(j);
      v.push_back(name);
      a.push_back({name, prev, 1});
      prev = name;
    }
  }
  return Quiver(v, a);
}

Quiver cycle(int n) {
  // one source, one sink, two paths between them
  std::vector<std::string> v;
  for (int i = 0; i < n; ++i) v.push_back("c" + std::to_string(i));
  std::vector<Quiver::Arrow> a;
  for (int i = 0; i + 1 < n; ++i) a.push_back({v[i], v[i + 1], 1});
  a.push_back({v[0], v[n - 1], 1});
  return Quiver(v, a);
}

// wildD(6) without its extra vertex w
Quiver dtilde6() {
  const auto q = catalog("wildD(6)");
  std::vector<std::size_t> keep;
  for (std::size_t p = 0; p < q.size(); ++p)
    if (q.name(p) != "w") keep.push_back(p);
  return q.full_subquiver(keep);
}

std::vector<Quiver> tame_samples() {
  return {catalog("Kronecker"), star({1, 1, 1, 1}), star({2, 2, 2}), star({1, 3, 3}), star({1, 2, 5}),
          cycle(3), cycle(5), dtilde6()};
}

std::size_t count_paths(const Quiver& q, std::size_t from, std::size_t to) {
  if (from == to) return 1;
  std::size_t total = 0;
  for (std::size_t k = 0; k < q.size(); ++k)
    if (q.arrows(from, k)) total += q.arrows(from, k) * count_paths(q, k, to);
  return total;
}

}  // namespace

TEST_SUITE("quiver-core") {

TEST_CASE("quiver validation") {
  CHECK_THROWS_AS(Quiver({}, {}), Error);
  CHECK_THROWS_AS(Quiver({"a", "b"}, {}), Error);  // disconnected
  try {
    Quiver({"a", "b"}, {{"a", "b", 1}, {"b", "a", 1}});
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidQuiver);
  }
  const auto q = catalog("Vm(3)");
  CHECK(q.arrows(q.index("b"), q.index("a")) == 3);
  CHECK(q.sinks() == std::vector<std::size_t>{q.index("a")});
  CHECK(quiver_from_json(to_json(q)) == q);
}

TEST_CASE("topological order puts arrow targets first") {
  for (auto id : {"wildD(7)", "AKpq(3,4)", "S", "T", "wildE8"}) {
    const auto q = catalog(id);
    for (std::size_t p = 0; p < q.size(); ++p)
      for (std::size_t r = 0; r < q.size(); ++r)
        if (q.arrows(p, r)) CHECK(q.topological_rank(r) < q.topological_rank(p));
  }
}

TEST_CASE("Cartan and Euler matrices") {
  const auto q = catalog("Kmn(2,3)");
  const auto c = cartan_matrix(q);
  const auto e = euler_matrix(q);
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      CHECK(c[i][j] == e[i][j] + e[j][i]);
      CHECK(c[i][j] == c[j][i]);
    }
}

TEST_CASE("representation type") {
  CHECK(representation_type(catalog("KDn(4)")) == RepresentationType::Wild);
  CHECK(representation_type(star({1, 1, 1})) == RepresentationType::Finite);  // D4
  CHECK(representation_type(star({1, 2, 4})) == RepresentationType::Finite);  // E8
  CHECK(representation_type(star({1, 1, 1, 1, 1})) == RepresentationType::Wild);
  CHECK(representation_type(catalog("Vm(3)")) == RepresentationType::Wild);
  CHECK(representation_type(catalog("Kronecker")) == RepresentationType::Tame);
  for (const auto& q : tame_samples()) CHECK(representation_type(q) == RepresentationType::Tame);
}

TEST_CASE("null root agrees with exhaustive search") {
  for (const auto& q : tame_samples()) {
    const auto expected = oracle::smallest_kernel_vector(cartan_matrix(q), 6);
    REQUIRE(expected);
    CHECK(null_root(q) == *expected);
  }
  CHECK_THROWS_AS(null_root(catalog("Vm(3)")), Error);
}

TEST_CASE("Coxeter matrix is a product of simple reflections") {
  for (const auto& q : tame_samples()) {
    const auto c = cartan_matrix(q);
    auto order = q.topological_order();
    const auto forward = oracle::reflection_product(c, order);
    std::reverse(order.begin(), order.end());
    const auto backward = oracle::reflection_product(c, order);
    const auto phi = coxeter_matrix(q);
    auto equal = [&](const IntMatrix& m) {
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
          if (phi[i][j] != m[i][j]) return false;
      return true;
    };
    CHECK((equal(forward) || equal(backward)));
  }
}

TEST_CASE("Coxeter number is the order modulo the null root") {
  for (const auto& q : tame_samples()) {
    const auto phi_q = coxeter_matrix(q);
    IntMatrix phi(q.size(), IntVector(q.size()));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) {
        REQUIRE(phi_q[i][j].get_den() == 1);
        phi[i][j] = phi_q[i][j].get_num().get_si();
      }
    CHECK(coxeter_number(q) == oracle::order_mod_root(phi, null_root(q), 200));
  }
  CHECK_THROWS_AS(coxeter_number(catalog("Vm(3)")), Error);
}

TEST_CASE("Coxeter transformation moves one step along each orbit") {
  const auto q = catalog("wildD(6)");
  const auto z = knit(q, 6);
  const auto phi = coxeter_matrix(q);
  for (std::size_t p = 0; p < q.size(); ++p) {
    for (std::size_t r = 0; r < q.size(); ++r)
      CHECK(z.dim({p, 0})[r] == static_cast<std::int64_t>(count_paths(q, p, r)));
    // with E_pq = [p = q] - n(p,q) this Phi is the inverse translate
    for (int i = 0; i < 6; ++i) {
      const auto cur = z.dim({p, i});
      RationalVector x(cur.begin(), cur.end());
      const auto y = exact::multiply(phi, x);
      for (std::size_t r = 0; r < q.size(); ++r) CHECK(y[r] == z.dim({p, i + 1})[r]);
    }
  }
}

TEST_CASE("mixed kernel") {
  CHECK_FALSE(is_mixed_kernel(catalog("Kronecker")));
  CHECK_FALSE(is_mixed_kernel(dtilde6()));
  CHECK(is_mixed_kernel(catalog("Vm(3)")));
  CHECK(is_mixed_kernel(catalog("wildD(6)")));
  CHECK(is_mixed_kernel(star({1, 1, 1, 1, 1})));
}

TEST_CASE("bounded fibre agrees with a box search") {
  const auto q = catalog("wildD(6)");
  const auto c = cartan_matrix(q);
  const int box = 3;
  const auto n = q.size();
  REQUIRE(q.name(n - 1) == "w");
  std::vector<IntVector> seeds{IntVector(n, 1), null_root(dtilde6())};
  seeds[1].push_back(0);
  for (const auto& seed : seeds) {
    IntVector t = oracle::times(c, seed);
    for (auto& x : t) x = -x;
    const auto fibre = bounded_fiber(c, t);
    CHECK(std::is_sorted(fibre.begin(), fibre.end()));
    CHECK(std::find(fibre.begin(), fibre.end(), seed) != fibre.end());

    std::set<IntVector> in_box;
    IntVector v(n, 0);
    while (true) {
      auto cv = oracle::times(c, v);
      bool hit = true;
      for (std::size_t i = 0; i < n; ++i) hit = hit && -cv[i] == t[i];
      if (hit) in_box.insert(v);
      std::size_t i = 0;
      while (i < n && v[i] == box) v[i++] = 0;
      if (i == n) break;
      ++v[i];
    }
    for (const auto& x : in_box) CHECK(std::find(fibre.begin(), fibre.end(), x) != fibre.end());
    for (const auto& x : fibre) {
      auto cv = oracle::times(c, x);
      for (std::size_t i = 0; i < n; ++i) CHECK(-cv[i] == t[i]);
      if (*std::max_element(x.begin(), x.end()) <= box) CHECK(in_box.count(x) == 1);
    }
  }
  CHECK_THROWS_AS(bounded_fiber(cartan_matrix(catalog("Kronecker")), {0, 0}), Error);
}

}  // TEST_SUITE
