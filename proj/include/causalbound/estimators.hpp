#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "causalbound/dataset.hpp"
#include "causalbound/discrete_joint.hpp"
#include "causalbound/effect.hpp"
#include "causalbound/propensity.hpp"

namespace causalbound {

// Per-covariate-stratum outcome lists, in row order within each arm.
// Shared by the stratified estimators (plain and robust).
struct Stratum {
    std::vector<double> y[2];  // y[t]
};
std::map<std::uint32_t, Stratum> build_strata(const ObservationalDataset& data);

// Sum-then-divide in the stored order; the stratified estimators all funnel
// their per-arm means through this one helper so that estimators which are
// algebraically identical also agree bit-for-bit.
double mean_in_order(const std::vector<double>& xs);

// Inverse propensity weighting:
//   (1/n) [ sum_{t_i=1} y_i / e(w_i)  -  sum_{t_i=0} y_i / (1 - e(w_i)) ]
// Throws ExtremePropensity when some row scores exactly 0 or 1 and the
// model has no clipping.
EffectEstimate ipw_estimate(const ObservationalDataset& data, const PropensityModel& prop);

// Same estimator with every score clamped into [rho, 1-rho] first.
EffectEstimate clipped_ipw_estimate(const ObservationalDataset& data, const PropensityModel& prop,
                                    double rho);

// Stratification: sum_w Pr_hat(w) [mean(y | w, t=1) - mean(y | w, t=0)].
// Every observed stratum must contain both arms.
EffectEstimate backdoor_estimate(const ObservationalDataset& data);

// Population analogues on an exact joint.
double backdoor_ace(const DiscreteJoint& joint);
double population_ipw(const DiscreteJoint& joint);

}  // namespace causalbound
