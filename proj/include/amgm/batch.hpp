#pragma once

#include <vector>

#include "amgm/decomposition.hpp"
#include "amgm/exec.hpp"
#include "amgm/inequalities.hpp"

namespace amgm {

// Batch drivers over independent samples. Results are written into
// preallocated slots, one per input, so openmp and serial execution produce
// bitwise identical output in the same order. The first exception raised
// (lowest input index) is rethrown after the batch finishes.
std::vector<GapDecomposition> decompose_many(const std::vector<Sample>& samples, unsigned depth,
                                             const PrecisionContext& ctx,
                                             const DecompositionOptions& opts = {},
                                             Exec exec = Exec::openmp);

std::vector<std::vector<InequalityVerdict>> check_many(const std::vector<Sample>& samples,
                                                       const PrecisionContext& ctx,
                                                       Exec exec = Exec::openmp);

}
