#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "causalbound/dataset.hpp"
#include "causalbound/discrete_joint.hpp"

namespace causalbound {

// A weighting beta(w, t) over covariate/treatment cells. Reweighting the
// source distribution Q by beta induces a new representation R with
// R(w, t) proportional to beta(w, t) * Q(w, t) while leaving the outcome
// mechanism Y | T, W untouched.
class WeightFunction {
public:
    using Key = std::pair<std::uint32_t, int>;

    WeightFunction() = default;
    static WeightFunction from_table(std::map<Key, double> table);

    // beta == k on the support of the given distribution / dataset.
    static WeightFunction constant(double k, const DiscreteJoint& support);
    static WeightFunction constant(double k, const ObservationalDataset& support);

    // Inverse-propensity weights from exact population quantities:
    // beta(w, t) = Q(w) / Q(w | t). Defined on every (w, t) cell of q
    // with positive mass.
    static WeightFunction ipw(const DiscreteJoint& q);

    // Inverse-propensity weights from empirical frequencies:
    // beta(w, t) = (N_t / n) / Pr_hat(T = t | w), with the per-stratum
    // propensity clipped into [clip_rho, 1 - clip_rho] when given.
    // Without clipping, a stratum whose rows are all one arm makes the
    // opposite-arm weight infinite -> ExtremePropensity.
    static WeightFunction ipw_from_data(const ObservationalDataset& data,
                                        std::optional<double> clip_rho);

    double weight(std::uint32_t w, int t) const;  // throws MissingWeight
    bool contains(std::uint32_t w, int t) const;
    const std::map<Key, double>& table() const { return table_; }

    // Throws InvalidRepresentation unless all weights are finite and >= 0.
    void validate() const;

private:
    std::map<Key, double> table_;
};

// Reweight q by beta. In strict mode (renormalize = false) the induced
// masses must sum to 1 within DiscreteJoint::kMassTolerance, which is what
// a weighting function valid for q guarantees; tolerant mode rescales
// instead, which is the right choice for estimated weights.
DiscreteJoint induce_representation(const DiscreteJoint& q, const WeightFunction& beta,
                                    bool renormalize = false);

}  // namespace causalbound
