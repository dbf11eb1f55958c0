#ifndef SEEDSTAB_TEXTMODEL_MODEL_HPP
#define SEEDSTAB_TEXTMODEL_MODEL_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "common/rng.hpp"

namespace seedstab::textmodel {

struct Dims {
    int vocab = 0;
    int embedding = 0;
    int hidden = 0;

    bool operator==(const Dims&) const = default;

    std::size_t n_params() const {
        auto v = static_cast<std::size_t>(vocab);
        auto d = static_cast<std::size_t>(embedding);
        auto h = static_cast<std::size_t>(hidden);
        return v * d + d * h + h + h * 2 + 2;
    }
};

// Bag-of-embeddings classifier: mean embedding -> affine -> tanh -> affine ->
// 2-way softmax. Parameters live in one flat vector so averaging, Adam and
// serialization all treat the model as a plain real vector.
struct ModelWeights {
    Dims dims;
    std::vector<double> values;

    ModelWeights() = default;
    explicit ModelWeights(Dims d) : dims(d), values(d.n_params(), 0.0) {}

    std::size_t n_params() const { return values.size(); }

    // Flat layout: [embedding V*d][W1 d*h][b1 h][W2 h*2][b2 2]
    std::span<double> embedding_row(int token);
    std::span<const double> embedding_row(int token) const;
    std::size_t off_w1() const;
    std::size_t off_b1() const;
    std::size_t off_w2() const;
    std::size_t off_b2() const;

    bool operator==(const ModelWeights&) const = default;
};

// Seeded uniform init: embeddings U(-0.1, 0.1), layers Glorot-uniform, zero
// biases. Draw order is part of the determinism contract.
ModelWeights init_weights(Dims dims, Rng& rng);

// Class probabilities, positive class at index 1. Throws NumericError naming
// the first layer whose activations go non-finite.
std::array<double, 2> forward(const ModelWeights& weights, std::span<const int> tokens);

struct Example {
    std::vector<int> tokens;
    int label = 0;
};

struct LossGrad {
    double loss = 0.0;
    std::vector<double> grad;  // shaped like ModelWeights.values
};

// Mean cross-entropy over the batch and its exact analytic gradient.
LossGrad loss_and_grad(const ModelWeights& weights, std::span<const Example> batch);

inline int predicted_label(const std::array<double, 2>& probs) {
    return probs[1] > probs[0] ? 1 : 0;
}

double accuracy(const ModelWeights& weights, std::span<const Example> examples);

}  // namespace seedstab::textmodel

#endif
