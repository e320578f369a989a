#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "amgm/decomposition.hpp"
#include "amgm/inequalities.hpp"
#include "amgm/optimality.hpp"

namespace amgm::report {

// All report JSON uses insertion-ordered objects so output is byte-stable.
// Every computed numeric appears as {"lo": "...", "hi": "..."} with shortest
// round-trip decimal endpoints; doubles taken straight from inputs or fits
// stay plain JSON numbers.
using json = nlohmann::ordered_json;

json interval_json(const Interval& iv);
json sample_json(const Sample& s);
json decomposition_json(const GapDecomposition& d);
json verdict_json(const InequalityVerdict& v);
json profile_json(const ConvergenceProfile& p);
json sweep_json(const SweepResult& r);
json falsification_json(const FalsificationResult& r);
json constant_witness_json(const ConstantWitness& w);
json monotonicity_json(const MonotonicityReport& r);

std::string decomposition_csv(const GapDecomposition& d);
std::string verdicts_csv(const std::vector<InequalityVerdict>& vs);
std::string profile_csv(const ConvergenceProfile& p);
// Pinned column layout: epsilon,lhs_lo,lhs_hi,rhs_lo,rhs_hi
std::string sweep_csv(const SweepResult& r);

}
