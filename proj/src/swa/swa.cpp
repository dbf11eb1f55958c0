#include "swa/swa.hpp"

#include <algorithm>
#include <string>

#include "common/errors.hpp"

namespace seedstab::swa {

using textmodel::Example;
using textmodel::LrSchedule;
using textmodel::ModelWeights;
using textmodel::TrainConfig;

void SwaConfig::validate(int total_epochs) const {
    if (cutoff_epoch < 1 || cutoff_epoch >= total_epochs) {
        throw ConfigError("swa.cutoff_epoch must satisfy 1 <= cutoff_epoch < train.epochs (got " +
                          std::to_string(cutoff_epoch) + " with epochs " + std::to_string(total_epochs) +
                          ")");
    }
    if (constant_lr < 0.0) throw ConfigError("swa.constant_lr must be >= 0");
}

SwaState swa_update(SwaState state, const ModelWeights& new_weights) {
    if (state.n_averaged == 0) {
        state.avg_weights = new_weights;
        state.n_averaged = 1;
        return state;
    }
    if (state.avg_weights.dims != new_weights.dims) {
        throw DataError("swa_update: shape mismatch between running average and new weights");
    }
    const double n = static_cast<double>(state.n_averaged);
    for (std::size_t i = 0; i < state.avg_weights.values.size(); ++i) {
        state.avg_weights.values[i] = (state.avg_weights.values[i] * n + new_weights.values[i]) / (n + 1.0);
    }
    state.n_averaged += 1;
    return state;
}

SwaResult train_swa(const TrainConfig& config, const SwaConfig& swa, const LrSchedule& base_schedule,
                    const std::vector<Example>& train_set, const std::vector<Example>& dev_set) {
    swa.validate(config.epochs);

    const long spe = textmodel::steps_per_epoch(train_set.size(), config.batch_size);
    const long cutoff_step = spe * swa.cutoff_epoch;
    const LrSchedule schedule = LrSchedule::warmup_constant(
        base_schedule.warmup_steps, base_schedule.total_steps, base_schedule.peak_lr, cutoff_step,
        swa.constant_lr);

    SwaResult result;
    SwaState state;
    auto hook = [&](int epoch, const ModelWeights& weights) {
        if (epoch > swa.cutoff_epoch) {
            state = swa_update(std::move(state), weights);
            result.contributing_snapshots.push_back(weights);
        }
    };

    result.run = textmodel::train(config, schedule, train_set, dev_set, hook);
    result.swa_weights = state.avg_weights;
    result.swa_dev_accuracy = textmodel::accuracy(result.swa_weights, dev_set);
    return result;
}

double select_swa_lr(const std::map<double, double>& dev_accuracy_by_lr) {
    if (dev_accuracy_by_lr.empty()) throw DataError("select_swa_lr: empty candidate set");
    // std::map keeps the candidates ascending, so the first maximum is the
    // smallest lr among ties.
    double best_lr = dev_accuracy_by_lr.begin()->first;
    double best_acc = dev_accuracy_by_lr.begin()->second;
    for (const auto& [lr, acc] : dev_accuracy_by_lr) {
        if (acc > best_acc) {
            best_acc = acc;
            best_lr = lr;
        }
    }
    return best_lr;
}

}  // namespace seedstab::swa
