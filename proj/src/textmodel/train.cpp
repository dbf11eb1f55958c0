#include "textmodel/train.hpp"

#include <algorithm>
#include <cmath>

#include <nlohmann/json.hpp>

#include "common/errors.hpp"
#include "common/hash.hpp"
#include "textmodel/optimizer.hpp"

namespace seedstab::textmodel {

void TrainConfig::validate() const {
    if (epochs < 1) throw ConfigError("train.epochs must be >= 1");
    if (batch_size < 1) throw ConfigError("train.batch_size must be >= 1");
    if (peak_lr <= 0.0) throw ConfigError("train.peak_lr must be > 0");
    if (embedding_dim < 1 || hidden_dim < 1) {
        throw ConfigError("train.embedding_dim and train.hidden_dim must be >= 1");
    }
    if (total_steps > 0 && warmup_steps >= total_steps) {
        throw ConfigError("train.warmup_steps must be < total_steps");
    }
}

std::string TrainConfig::canonical_json() const {
    nlohmann::json j;
    j["seed"] = seed;
    j["epochs"] = epochs;
    j["batch_size"] = batch_size;
    j["peak_lr"] = peak_lr;
    j["warmup_steps"] = warmup_steps;
    j["total_steps"] = total_steps;
    j["adam_beta1"] = adam_beta1;
    j["adam_beta2"] = adam_beta2;
    j["adam_eps"] = adam_eps;
    j["embedding_dim"] = embedding_dim;
    j["hidden_dim"] = hidden_dim;
    return j.dump();
}

std::uint64_t TrainConfig::content_hash() const { return fnv1a64(canonical_json()); }

long steps_per_epoch(std::size_t n_train, int batch_size) {
    return static_cast<long>((n_train + static_cast<std::size_t>(batch_size) - 1) /
                             static_cast<std::size_t>(batch_size));
}

TrainConfig resolve_steps(TrainConfig config, std::size_t n_train, double warmup_frac) {
    const long spe = steps_per_epoch(n_train, config.batch_size);
    config.total_steps = spe * config.epochs;
    long warmup = std::lround(warmup_frac * static_cast<double>(config.total_steps));
    warmup = std::clamp(warmup, 1L, config.total_steps - 1);
    config.warmup_steps = warmup;
    return config;
}

TrainResult train(const TrainConfig& config, const LrSchedule& schedule,
                  const std::vector<Example>& train_set, const std::vector<Example>& dev_set,
                  const EpochHook& hook) {
    config.validate();
    if (train_set.empty()) throw DataError("train: empty training set");
    if (dev_set.empty()) throw DataError("train: empty dev set");

    int max_token = 0;
    for (const Example& ex : train_set) {
        for (int t : ex.tokens) max_token = std::max(max_token, t);
    }

    Dims dims{max_token + 1, config.embedding_dim, config.hidden_dim};
    // The vocab dimension comes from the encoded corpus; dev tokens must fit.
    for (const Example& ex : dev_set) {
        for (int t : ex.tokens) {
            if (t >= dims.vocab) throw DataError("train: dev set token index outside training vocab");
        }
    }

    Rng rng(config.seed);
    ModelWeights weights = init_weights(dims, rng);
    AdamState adam(weights.n_params(), config.adam_beta1, config.adam_beta2, config.adam_eps);

    TrainResult result;
    std::vector<std::size_t> order(train_set.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;

    const std::size_t bs = static_cast<std::size_t>(config.batch_size);
    long global_step = 0;

    for (int epoch = 1; epoch <= config.epochs; ++epoch) {
        rng.shuffle(order);
        std::vector<Example> batch;
        batch.reserve(bs);

        for (std::size_t start = 0; start < order.size(); start += bs) {
            batch.clear();
            const std::size_t end = std::min(start + bs, order.size());
            for (std::size_t i = start; i < end; ++i) batch.push_back(train_set[order[i]]);

            const double lr = lr_at(schedule, global_step);
            result.lr_trace.push_back(lr);
            try {
                LossGrad lg = loss_and_grad(weights, batch);
                adam_step(adam, weights.values, lg.grad, lr);
            } catch (const NumericError& e) {
                throw TrainingError(std::string("training diverged: ") + e.what(), epoch, global_step);
            }
            ++global_step;
        }

        result.snapshots.push_back(weights);  // by-value copy, never aliases
        result.dev_accuracy.push_back(accuracy(weights, dev_set));
        if (hook) hook(epoch, weights);
    }

    result.final_weights = weights;
    return result;
}

}  // namespace seedstab::textmodel
