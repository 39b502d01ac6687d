// One line per acceptance criterion; exit status 1 if any of them fails.

#include <chrono>
#include <cstdio>
#include <string>
#include <utility>

#include "degenkit/error.hpp"
#include "degenkit/verify.hpp"

namespace {

const std::pair<const char*, const char*> kCriteria[] = {
    {"bijection", "shape/module round trip on KK3 and V3"},
    {"t-equals-minus-Cv", "t = -C v, sum t = blocks - 2, t >= -2"},
    {"connected-support", "every enumerated shape has connected support"},
    {"kmn-bound", "K(1,2) and K(2,2) minimal shapes have codimension 1 or 2"},
    {"vm-growth", "V3: one minimal shape (the indicator), codimension increasing"},
    {"kk3-family", "KK3 family m = 1..6: valid, codimension m, minimal"},
    {"dtilde-family", "wild D6 family m = 2..4 and its rendered grid"},
    {"defect-lemma", "slice defect identity, bound and antisymmetry on wild D6"},
    {"reflection", "shapes correspond under one sink reflection"},
    {"empirical-k", "V3 depth 6: K(j) nondecreasing, reaches 3"},
    {"s-family", "S family (2,1), (2,2), (3,2): valid and minimal"},
    {"tame-wild", "null roots, Coxeter fixing, mixed kernels, bounded fibres"},
};

}  // namespace

int main() {
  int failed = 0;
  int n = 0;
  for (const auto& [suite, what] : kCriteria) {
    ++n;
    const auto start = std::chrono::steady_clock::now();
    degenkit::SuiteResult r;
    try {
      r = degenkit::run_suite(suite);
    } catch (const degenkit::Error& e) {
      r.suite = suite;
      r.notes.push_back(std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2d %-18s %s (%.2fs)\n", r.pass ? "PASS" : "FAIL", n, suite, what, secs);
    for (const auto& note : r.notes) std::printf("        %s\n", note.c_str());
    failed += !r.pass;
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed ? 1 : 0;
}
