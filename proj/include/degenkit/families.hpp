#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "degenkit/ar_component.hpp"
#include "degenkit/shapes.hpp"

namespace degenkit {

// Named quivers. Every family is oriented towards one designated sink:
//   Kmn(m,n)    a_m - ... - a_1 = b_1 - ... - b_n, sink b1
//   Vm(m)       m arrows b -> a
//   KKn(n)      a_1 = a_2 - ... - a_{n-1} = a_n (n >= 3), sink a2
//   KDn(n)      z_1 = z_2 - ... - z_{n-2} with a, b at z_{n-2}, sink z1
//   KAn(n)      KDn plus the edge b -> a
//   AKpq(p,q)   cycle z = a_1 - ... - a_{p-1} - c - b_{q-1} - ... - b_1 - z, sink z
//   AK3tilde, AK4tilde, AA4, AA5, T, S
//   wildD(n)    z_1 - ... - z_{n-3}, a, b at z_1, v, d at z_{n-3}, w at d
//   wildE6, wildE7, wildE8, wildArs(r,s)
//   Kronecker   two arrows 1 -> 2
// Syntax: Name or Name(p1,p2). Throws BadParameters / Parse.
Quiver catalog(std::string_view id);
std::vector<std::string> catalog_names();

// Minimal shape of a K_{m,n} pair (b1 the only sink, U projective) built
// from the a1/b1 orbit chain. Throws BadPair.
DeformationShape kmn_minimal_shape(const ShapeContext& ctx);

// Indicator of [U, tau V] on V_m, m >= 3. Throws BadPair.
DeformationShape vm_minimal_shape(const ShapeContext& ctx);

// Shape of codimension m on KK_3 for (a2:0, a2:m). Throws BadParameters.
DeformationShape kk3_family(int m);

// Defect at a slice for quivers made of a tame quiver plus a vertex "w".
struct SliceWeights {
  Slice slice;
  std::size_t w = 0;
  IntVector null_root;  // of the tame part, 0 at w
  IntVector weights;    // 0 at w
};
SliceWeights slice_weights(const ARComponent& z, const Slice& r);  // throws NotTamePlusW
std::int64_t defect(const SliceWeights& sw, const std::vector<std::int64_t>& slice_values);
std::int64_t defect(const DeformationShape& d, const Slice& r);
std::vector<std::int64_t> slice_values(const DeformationShape& d, const Slice& r);

// Mirror image of a shape of (P_p, tau^{-(i+1)} P_p) for the only sink p.
// Throws BadContext.
DeformationShape reflect_shape(const DeformationShape& d);
Slice reflect_slice_bar(const Slice& r, const ShapeContext& ctx);

struct SegmentPlan {
  Quiver quiver;
  IndecRef U;
  IndecRef V;
  std::vector<IndecRef> bq;  // B^q_0 .. B^q_{m-1}
  std::vector<IndecRef> bs;  // B^s_0 .. B^s_{m-1}
  int c = 0;                 // period constant (c + 1 between segments)
  std::size_t v = 0;
  std::size_t w = 0;
  int m = 0;
};
SegmentPlan wildD_plan(int n, int m);
SegmentPlan wildE6_plan(int m);
SegmentPlan wildE7_plan(int m);

// The shape delta_m of a segment plan; throws BadPlan when a forced value
// turns negative.
DeformationShape segmented_family(const SegmentPlan& plan);

// delta_{m,n} on S (z the only sink), U = P_z, V = tau^{-(2m+1)} P_z.
DeformationShape s_family(int m, int n);

}  // namespace degenkit
