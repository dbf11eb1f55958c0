#include "textmodel/optimizer.hpp"

#include <cmath>
#include <string>

#include "common/errors.hpp"

namespace seedstab::textmodel {

void adam_step(AdamState& state, std::span<double> weights, std::span<const double> grad, double lr) {
    if (weights.size() != grad.size() || weights.size() != state.m.size()) {
        throw DataError("adam_step: shape mismatch (weights " + std::to_string(weights.size()) +
                        ", grad " + std::to_string(grad.size()) + ", moments " +
                        std::to_string(state.m.size()) + ")");
    }
    if (lr < 0.0) throw DataError("adam_step: negative learning rate");
    for (double gi : grad) {
        if (!std::isfinite(gi)) throw NumericError("adam_step: non-finite gradient");
    }

    state.t += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.t));

    for (std::size_t i = 0; i < weights.size(); ++i) {
        const double gi = grad[i];
        state.m[i] = state.beta1 * state.m[i] + (1.0 - state.beta1) * gi;
        state.v[i] = state.beta2 * state.v[i] + (1.0 - state.beta2) * gi * gi;
        const double m_hat = state.m[i] / bc1;
        const double v_hat = state.v[i] / bc2;
        weights[i] -= lr * m_hat / (std::sqrt(v_hat) + state.eps);
    }
}

}  // namespace seedstab::textmodel
