#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "causalbound/dataset.hpp"

namespace causalbound {

enum class PropensityKind {
    FrequencyTable,  // per-stratum empirical Pr(T=1 | W=w)
    Logistic,        // maximum-likelihood fit of sigmoid(intercept + coef . w)
};

// Treatment-assignment model e(w) = Pr(T=1 | W=w), optionally clipped
// into [rho, 1-rho] at query time.
class PropensityModel {
public:
    double score(std::uint32_t w) const;      // clipped when clip() is set
    double raw_score(std::uint32_t w) const;  // never clipped

    PropensityKind kind() const { return kind_; }
    std::optional<double> clip() const { return clip_; }
    bool converged() const { return converged_; }
    const std::vector<double>& coefficients() const { return coef_; }
    double intercept() const { return intercept_; }

    PropensityModel with_clip(std::optional<double> rho) const;

private:
    friend PropensityModel fit_propensity(const ObservationalDataset&, PropensityKind,
                                          std::optional<double>);
    PropensityKind kind_ = PropensityKind::FrequencyTable;
    int d_ = 0;
    std::map<std::uint32_t, double> freq_;
    std::vector<double> coef_;
    double intercept_ = 0.0;
    std::optional<double> clip_;
    bool converged_ = true;
};

// Frequency kind tabulates per-stratum treatment rates; logistic kind runs
// Newton iterations with step halving until the gradient norm drops below
// 1e-8 or 500 iterations pass (the fit is still returned then, with
// converged() == false).
PropensityModel fit_propensity(const ObservationalDataset& data, PropensityKind kind,
                               std::optional<double> clip_rho = std::nullopt);

}  // namespace causalbound
