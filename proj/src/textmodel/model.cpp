#include "textmodel/model.hpp"

#include <cmath>

#include "common/errors.hpp"

namespace seedstab::textmodel {

namespace {

void check_finite(std::span<const double> xs, const char* layer) {
    for (double x : xs) {
        if (!std::isfinite(x)) throw NumericError(std::string("non-finite value in layer: ") + layer);
    }
}

struct Activations {
    std::vector<double> mean_emb;  // d
    std::vector<double> hidden;    // h, post-tanh
    std::array<double, 2> logits{};
    std::array<double, 2> probs{};
};

Activations run_forward(const ModelWeights& w, std::span<const int> tokens) {
    const int d = w.dims.embedding;
    const int h = w.dims.hidden;
    Activations act;
    act.mean_emb.assign(static_cast<std::size_t>(d), 0.0);

    const double inv_t = 1.0 / static_cast<double>(tokens.size());
    for (int tok : tokens) {
        auto row = w.embedding_row(tok);
        for (int j = 0; j < d; ++j) act.mean_emb[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
    }
    for (double& x : act.mean_emb) x *= inv_t;
    check_finite(act.mean_emb, "embedding_mean");

    act.hidden.assign(static_cast<std::size_t>(h), 0.0);
    const double* w1 = w.values.data() + w.off_w1();
    const double* b1 = w.values.data() + w.off_b1();
    for (int k = 0; k < h; ++k) {
        double z = b1[k];
        for (int j = 0; j < d; ++j) z += act.mean_emb[static_cast<std::size_t>(j)] * w1[j * h + k];
        if (!std::isfinite(z)) throw NumericError("non-finite value in layer: hidden");
        act.hidden[static_cast<std::size_t>(k)] = std::tanh(z);
    }

    const double* w2 = w.values.data() + w.off_w2();
    const double* b2 = w.values.data() + w.off_b2();
    for (int c = 0; c < 2; ++c) {
        double z = b2[c];
        for (int k = 0; k < h; ++k) z += act.hidden[static_cast<std::size_t>(k)] * w2[k * 2 + c];
        if (!std::isfinite(z)) throw NumericError("non-finite value in layer: output");
        act.logits[static_cast<std::size_t>(c)] = z;
    }

    const double zmax = std::max(act.logits[0], act.logits[1]);
    const double e0 = std::exp(act.logits[0] - zmax);
    const double e1 = std::exp(act.logits[1] - zmax);
    const double sum = e0 + e1;
    act.probs = {e0 / sum, e1 / sum};
    check_finite(act.probs, "softmax");
    return act;
}

}  // namespace

std::span<double> ModelWeights::embedding_row(int token) {
    return {values.data() + static_cast<std::size_t>(token) * static_cast<std::size_t>(dims.embedding),
            static_cast<std::size_t>(dims.embedding)};
}

std::span<const double> ModelWeights::embedding_row(int token) const {
    return {values.data() + static_cast<std::size_t>(token) * static_cast<std::size_t>(dims.embedding),
            static_cast<std::size_t>(dims.embedding)};
}

std::size_t ModelWeights::off_w1() const {
    return static_cast<std::size_t>(dims.vocab) * static_cast<std::size_t>(dims.embedding);
}
std::size_t ModelWeights::off_b1() const {
    return off_w1() + static_cast<std::size_t>(dims.embedding) * static_cast<std::size_t>(dims.hidden);
}
std::size_t ModelWeights::off_w2() const { return off_b1() + static_cast<std::size_t>(dims.hidden); }
std::size_t ModelWeights::off_b2() const { return off_w2() + static_cast<std::size_t>(dims.hidden) * 2; }

ModelWeights init_weights(Dims dims, Rng& rng) {
    ModelWeights w(dims);
    const int v = dims.vocab;
    const int d = dims.embedding;
    const int h = dims.hidden;

    for (std::size_t i = 0; i < static_cast<std::size_t>(v) * static_cast<std::size_t>(d); ++i) {
        w.values[i] = rng.uniform(-0.1, 0.1);
    }
    const double lim1 = std::sqrt(6.0 / static_cast<double>(d + h));
    for (std::size_t i = 0; i < static_cast<std::size_t>(d) * static_cast<std::size_t>(h); ++i) {
        w.values[w.off_w1() + i] = rng.uniform(-lim1, lim1);
    }
    const double lim2 = std::sqrt(6.0 / static_cast<double>(h + 2));
    for (std::size_t i = 0; i < static_cast<std::size_t>(h) * 2; ++i) {
        w.values[w.off_w2() + i] = rng.uniform(-lim2, lim2);
    }
    // b1 and b2 stay zero
    return w;
}

std::array<double, 2> forward(const ModelWeights& weights, std::span<const int> tokens) {
    if (tokens.empty()) throw DataError("forward: empty token sequence");
    return run_forward(weights, tokens).probs;
}

LossGrad loss_and_grad(const ModelWeights& w, std::span<const Example> batch) {
    if (batch.empty()) throw DataError("loss_and_grad: empty batch");
    const int d = w.dims.embedding;
    const int h = w.dims.hidden;

    LossGrad out;
    out.grad.assign(w.n_params(), 0.0);

    const double inv_b = 1.0 / static_cast<double>(batch.size());
    double* g = out.grad.data();
    const double* w1 = w.values.data() + w.off_w1();
    const double* w2 = w.values.data() + w.off_w2();

    for (const Example& ex : batch) {
        if (ex.label != 0 && ex.label != 1) {
            throw DataError("loss_and_grad: label outside {0,1}: " + std::to_string(ex.label));
        }
        Activations act = run_forward(w, ex.tokens);

        // loss = logsumexp(z) - z[y], computed stably
        const double zmax = std::max(act.logits[0], act.logits[1]);
        const double lse = zmax + std::log(std::exp(act.logits[0] - zmax) + std::exp(act.logits[1] - zmax));
        out.loss += (lse - act.logits[static_cast<std::size_t>(ex.label)]) * inv_b;

        std::array<double, 2> dz2 = act.probs;
        dz2[static_cast<std::size_t>(ex.label)] -= 1.0;
        dz2[0] *= inv_b;
        dz2[1] *= inv_b;

        double* gw2 = g + w.off_w2();
        double* gb2 = g + w.off_b2();
        std::vector<double> da(static_cast<std::size_t>(h), 0.0);
        for (int k = 0; k < h; ++k) {
            const double a = act.hidden[static_cast<std::size_t>(k)];
            for (int c = 0; c < 2; ++c) {
                gw2[k * 2 + c] += a * dz2[static_cast<std::size_t>(c)];
                da[static_cast<std::size_t>(k)] += w2[k * 2 + c] * dz2[static_cast<std::size_t>(c)];
            }
        }
        gb2[0] += dz2[0];
        gb2[1] += dz2[1];

        double* gw1 = g + w.off_w1();
        double* gb1 = g + w.off_b1();
        std::vector<double> dx(static_cast<std::size_t>(d), 0.0);
        for (int k = 0; k < h; ++k) {
            const double a = act.hidden[static_cast<std::size_t>(k)];
            const double dz1 = da[static_cast<std::size_t>(k)] * (1.0 - a * a);
            gb1[k] += dz1;
            for (int j = 0; j < d; ++j) {
                gw1[j * h + k] += act.mean_emb[static_cast<std::size_t>(j)] * dz1;
                dx[static_cast<std::size_t>(j)] += w1[j * h + k] * dz1;
            }
        }

        const double inv_t = 1.0 / static_cast<double>(ex.tokens.size());
        for (int tok : ex.tokens) {
            double* ge = g + static_cast<std::size_t>(tok) * static_cast<std::size_t>(d);
            for (int j = 0; j < d; ++j) ge[j] += dx[static_cast<std::size_t>(j)] * inv_t;
        }
    }

    if (!std::isfinite(out.loss)) throw NumericError("non-finite loss");
    return out;
}

double accuracy(const ModelWeights& weights, std::span<const Example> examples) {
    if (examples.empty()) throw DataError("accuracy: empty example set");
    long correct = 0;
    for (const Example& ex : examples) {
        if (predicted_label(forward(weights, ex.tokens)) == ex.label) ++correct;
    }
    return static_cast<double>(correct) / static_cast<double>(examples.size());
}

}  // namespace seedstab::textmodel
