#pragma once
#include "eqq/grading.hpp"

#include <string>

namespace eqq::diagram {

// RO(C₂)-graded basis of the quadric with p, one dot per element at (a, b) for grading a + bσ;
// two elements in one grading draw as concentric circles.
std::string ro2_basis_text(Int p);
std::string ro2_basis_svg(Int p);

// Groups of the cohomology of a point for |a|, |b| ≤ range: square for A(C₂), filled dot for ℤ,
// open dot for ℤ/2, blank outside the charted region.
std::string hpoint_chart_text(Int range = 8);
std::string hpoint_chart_svg(Int range = 8);

}  // namespace eqq::diagram
