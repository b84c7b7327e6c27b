#pragma once

#include <span>

#include "nipg/assembly.hpp"
#include "nipg/dg.hpp"

namespace nipg {

/// Direct block-Thomas elimination (no block pivoting; partial pivoting
/// inside each small dense block). Deterministic. Throws std::runtime_error
/// on a singular block pivot.
DGFunction solve(const BlockTriSystem& system);

/// ||A x - b||_2 / ||b||_2.
double relative_residual(const BlockTriSystem& system, std::span<const double> x);

}  // namespace nipg
