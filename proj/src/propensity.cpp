#include "causalbound/propensity.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "causalbound/errors.hpp"
#include "causalbound/rng.hpp"

namespace causalbound {

double PropensityModel::raw_score(std::uint32_t w) const {
    if (kind_ == PropensityKind::FrequencyTable) {
        auto it = freq_.find(w);
        if (it == freq_.end()) {
            throw EmptyStratum("no rows observed for covariate value w=" + std::to_string(w));
        }
        return it->second;
    }
    double z = intercept_;
    for (int j = 0; j < d_; ++j) {
        if (ObservationalDataset::w_bit(w, j)) z += coef_[j];
    }
    return sigmoid(z);
}

double PropensityModel::score(std::uint32_t w) const {
    const double e = raw_score(w);
    if (clip_) return std::clamp(e, *clip_, 1.0 - *clip_);
    return e;
}

PropensityModel PropensityModel::with_clip(std::optional<double> rho) const {
    if (rho && !(*rho > 0.0 && *rho < 0.5)) {
        throw DataError("clipping threshold must lie in (0, 0.5)");
    }
    PropensityModel m = *this;
    m.clip_ = rho;
    return m;
}

namespace {

// Solve A x = b for symmetric positive definite A via Cholesky.
// Returns false if A is not (numerically) positive definite.
bool cholesky_solve(std::vector<double>& a, std::vector<double>& b, int n) {
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a[i * n + j];
            for (int k = 0; k < j; ++k) s -= a[i * n + k] * a[j * n + k];
            if (i == j) {
                if (s <= 0.0) return false;
                a[i * n + i] = std::sqrt(s);
            } else {
                a[i * n + j] = s / a[j * n + j];
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        double s = b[i];
        for (int k = 0; k < i; ++k) s -= a[i * n + k] * b[k];
        b[i] = s / a[i * n + i];
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = b[i];
        for (int k = i + 1; k < n; ++k) s -= a[k * n + i] * b[k];
        b[i] = s / a[i * n + i];
    }
    return true;
}

double negative_log_likelihood(const ObservationalDataset& data,
                               const std::vector<double>& theta) {
    const int d = data.covariate_dim();
    double nll = 0.0;
    for (const auto& r : data.rows()) {
        double z = theta[0];
        for (int j = 0; j < d; ++j) {
            if (ObservationalDataset::w_bit(r.w, j)) z += theta[j + 1];
        }
        // log(1 + exp(z)) - t*z, stable for either sign of z
        const double softplus = z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
        nll += softplus - r.t * z;
    }
    return nll;
}

}  // namespace

PropensityModel fit_propensity(const ObservationalDataset& data, PropensityKind kind,
                               std::optional<double> clip_rho) {
    if (data.size() == 0) throw EmptyInput("cannot fit a propensity model on an empty dataset");
    if (clip_rho && !(*clip_rho > 0.0 && *clip_rho < 0.5)) {
        throw DataError("clipping threshold must lie in (0, 0.5)");
    }

    PropensityModel m;
    m.kind_ = kind;
    m.d_ = data.covariate_dim();
    m.clip_ = clip_rho;

    if (kind == PropensityKind::FrequencyTable) {
        std::map<std::uint32_t, std::pair<std::size_t, std::size_t>> counts;
        for (const auto& r : data.rows()) {
            auto& c = counts[r.w];
            ++c.first;
            c.second += static_cast<std::size_t>(r.t == 1);
        }
        for (const auto& [w, c] : counts) {
            m.freq_[w] = static_cast<double>(c.second) / static_cast<double>(c.first);
        }
        return m;
    }

    // Newton-Raphson on the logistic negative log-likelihood. The dimension
    // is tiny (binary covariates, d <= 31), so forming the dense Hessian and
    // solving it directly each step is the whole story.
    const int d = data.covariate_dim();
    const int k = d + 1;
    std::vector<double> theta(k, 0.0);
    std::vector<double> grad(k), step(k), hess(k * k);
    const int max_iters = 500;
    const double grad_tol = 1e-8;

    m.converged_ = false;
    double nll = negative_log_likelihood(data, theta);
    for (int iter = 0; iter < max_iters; ++iter) {
        std::fill(grad.begin(), grad.end(), 0.0);
        std::fill(hess.begin(), hess.end(), 0.0);
        for (const auto& r : data.rows()) {
            double z = theta[0];
            for (int j = 0; j < d; ++j) {
                if (ObservationalDataset::w_bit(r.w, j)) z += theta[j + 1];
            }
            const double p = sigmoid(z);
            const double resid = p - r.t;
            const double curv = p * (1.0 - p);
            // feature vector is [1, w_0, ..., w_{d-1}]; exploit 0/1 entries
            grad[0] += resid;
            hess[0] += curv;
            for (int a = 0; a < d; ++a) {
                if (!ObservationalDataset::w_bit(r.w, a)) continue;
                grad[a + 1] += resid;
                hess[(a + 1) * k] += curv;
                for (int b = 0; b <= a; ++b) {
                    if (ObservationalDataset::w_bit(r.w, b)) hess[(a + 1) * k + (b + 1)] += curv;
                }
            }
        }

        double gnorm = 0.0;
        for (double g : grad) gnorm += g * g;
        gnorm = std::sqrt(gnorm);
        if (gnorm <= grad_tol) {
            m.converged_ = true;
            break;
        }

        // Tiny ridge keeps the solve alive under (near-)separation, where
        // the Hessian collapses as fitted probabilities saturate.
        for (int i = 0; i < k; ++i) hess[i * k + i] += 1e-10;
        step = grad;
        std::vector<double> chol = hess;
        if (!cholesky_solve(chol, step, k)) {
            for (int i = 0; i < k; ++i) hess[i * k + i] += 1e-4;
            chol = hess;
            step = grad;
            if (!cholesky_solve(chol, step, k)) break;
        }

        double scale = 1.0;
        bool improved = false;
        for (int halving = 0; halving < 40; ++halving) {
            std::vector<double> cand(k);
            for (int i = 0; i < k; ++i) cand[i] = theta[i] - scale * step[i];
            const double cand_nll = negative_log_likelihood(data, cand);
            if (cand_nll <= nll) {
                theta = std::move(cand);
                nll = cand_nll;
                improved = true;
                break;
            }
            scale *= 0.5;
        }
        if (!improved) break;
    }

    m.intercept_ = theta[0];
    m.coef_.assign(theta.begin() + 1, theta.end());
    return m;
}

}  // namespace causalbound
