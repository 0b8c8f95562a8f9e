#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "bernstein/coeff_vec.hpp"
#include "bernstein/functionals.hpp"
#include "bernstein/limits.hpp"
#include "bernstein/optimizer.hpp"
#include "bernstein/oracle.hpp"

namespace bernstein {

using json = nlohmann::json;

/// {"n_min": int, "coeffs": [[re, im], ...]}
json to_json(const CoeffVec& f);
/// Throws std::invalid_argument on a malformed document.
CoeffVec coeff_vec_from_json(const json& j);

json to_json(const InequalityReport& r);
json to_json(const oracle::KernelValidationReport& r);
json to_json(const OptimizeConfig& cfg);
json to_json(const OptimizeConfig& cfg, const OptimizeResult& r);
json to_json(const std::vector<SharpnessEntry>& profile);

/// %.17g, the fixed float format of every CSV export.
std::string format_double(double v);

/// Header delta,sigma_a,sigma_b,comm_abs,residual,diff_to_derivative then one
/// line per row.
std::string sweep_to_csv(const SweepTable& table);

}  // namespace bernstein
