#pragma once

#include <string>

#include "sheetcurrent/current.hpp"
#include "sheetcurrent/mc.hpp"
#include "sheetcurrent/norms.hpp"

namespace sheetcurrent {

/// Shortest round-trip decimal form ("%.17g"), locale independent.
std::string format_sig17(double v);

/// {"alpha":..,"weight_convention":"..","m_max":..,"partial_sum":..,
///  "tail_bound":..,"terms":[[m,value],..],"converged":..}
std::string to_json(const SeriesResult& r);

/// {"mean_re":..,"mean_im":..,"std_error":..,"replicas":..,"seed":..,
///  "exact_reference":.. or null}
std::string to_json(const EstimatorResult& r);

/// {"r":..,"d":..,"values":[..],"integral_value":..,"cutoff":..,"verdict":".."}
std::string to_json(const SobolevScan& s);

/// Header for batch estimator CSV emissions.
inline constexpr const char* kBatchCsvHeader = "x,n,m,replicas,mc_mean,mc_stderr,exact,abs_diff";

}  // namespace sheetcurrent
