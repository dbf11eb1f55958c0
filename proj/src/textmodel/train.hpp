#ifndef SEEDSTAB_TEXTMODEL_TRAIN_HPP
#define SEEDSTAB_TEXTMODEL_TRAIN_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "textmodel/model.hpp"
#include "textmodel/schedule.hpp"

namespace seedstab::textmodel {

struct TrainConfig {
    std::uint64_t seed = 0;
    int epochs = 5;
    int batch_size = 32;
    double peak_lr = 1e-2;
    long warmup_steps = 0;  // derived from warmup_frac when 0
    long total_steps = 0;   // derived from corpus size when 0
    double adam_beta1 = 0.9;
    double adam_beta2 = 0.999;
    double adam_eps = 1e-8;
    int embedding_dim = 16;
    int hidden_dim = 32;

    void validate() const;
    std::string canonical_json() const;
    std::uint64_t content_hash() const;
};

long steps_per_epoch(std::size_t n_train, int batch_size);

// Fills in warmup/total steps for a corpus of the given size (warmup_frac of
// the total, at least 1, strictly below total).
TrainConfig resolve_steps(TrainConfig config, std::size_t n_train, double warmup_frac);

struct TrainResult {
    ModelWeights final_weights;
    std::vector<ModelWeights> snapshots;   // one copy per epoch end, in order
    std::vector<double> dev_accuracy;      // per epoch end
    std::vector<double> lr_trace;          // per optimization step
};

// Called after the epoch-end snapshot is taken; epoch is 1-based.
using EpochHook = std::function<void(int epoch, const ModelWeights& weights)>;

// Epoch-shuffled mini-batch Adam training. Every random draw (init, shuffles)
// comes from one generator seeded with config.seed, so two runs that share a
// seed replay identical batches regardless of the schedule passed in.
// Divergence aborts with TrainingError carrying epoch and step.
TrainResult train(const TrainConfig& config, const LrSchedule& schedule,
                  const std::vector<Example>& train_set, const std::vector<Example>& dev_set,
                  const EpochHook& hook = nullptr);

}  // namespace seedstab::textmodel

#endif
