#pragma once

#include <string>
#include <vector>

#include "degenkit/ar_component.hpp"
#include "degenkit/families.hpp"
#include "degenkit/shapes.hpp"

namespace degenkit {

// A slice to highlight, e.g. the segment boundaries of a plan.
struct SliceMark {
  std::string label;
  Slice slice;
};

// Boundary slices of a segment plan: Q(B^q_i) for i < m-1 and S(B^s_i) for
// 1 <= i < m, in window order. Marks outside the window are dropped.
std::vector<SliceMark> plan_marks(const SegmentPlan& plan, const ARComponent& z);

// Grid with one row per tau-orbit and one column per shift. Components show
// total dimensions, shapes show their values; members of marked slices are
// bracketed and listed underneath.
std::string render_ascii(const ARComponent& z, const std::vector<SliceMark>& marks = {});
std::string render_ascii(const DeformationShape& d, const std::vector<SliceMark>& marks = {});

// digraph of the window with AR arrows; shape values as node labels.
std::string render_dot(const ARComponent& z, const std::vector<SliceMark>& marks = {});
std::string render_dot(const DeformationShape& d, const std::vector<SliceMark>& marks = {});

}  // namespace degenkit
