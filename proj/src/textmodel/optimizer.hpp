#ifndef SEEDSTAB_TEXTMODEL_OPTIMIZER_HPP
#define SEEDSTAB_TEXTMODEL_OPTIMIZER_HPP

#include <span>
#include <vector>

namespace seedstab::textmodel {

struct AdamState {
    AdamState() = default;
    AdamState(std::size_t n_params, double beta1, double beta2, double eps)
        : m(n_params, 0.0), v(n_params, 0.0), beta1(beta1), beta2(beta2), eps(eps) {}

    std::vector<double> m;
    std::vector<double> v;
    long t = 0;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double eps = 1e-8;
};

// Standard bias-corrected Adam update, in place. lr = 0 leaves the weights
// untouched but still advances the moment estimates and step counter.
void adam_step(AdamState& state, std::span<double> weights, std::span<const double> grad, double lr);

}  // namespace seedstab::textmodel

#endif
