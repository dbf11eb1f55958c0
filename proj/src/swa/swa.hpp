#ifndef SEEDSTAB_SWA_SWA_HPP
#define SEEDSTAB_SWA_SWA_HPP

#include <map>
#include <vector>

#include "textmodel/model.hpp"
#include "textmodel/schedule.hpp"
#include "textmodel/train.hpp"

namespace seedstab::swa {

struct SwaConfig {
    int cutoff_epoch = 2;           // epochs trained vanilla before SWA begins
    double constant_lr = 6e-3;
    std::vector<double> candidate_lrs = {6e-3, 7.5e-3};

    void validate(int total_epochs) const;
};

// Running average of end-of-epoch weight snapshots.
struct SwaState {
    textmodel::ModelWeights avg_weights;
    long n_averaged = 0;
};

// avg <- (avg * n + new) / (n + 1). The first update copies new_weights.
SwaState swa_update(SwaState state, const textmodel::ModelWeights& new_weights);

struct SwaResult {
    textmodel::ModelWeights swa_weights;
    std::vector<textmodel::ModelWeights> contributing_snapshots;  // epochs cutoff+1 .. E
    double swa_dev_accuracy = 0.0;
    textmodel::TrainResult run;  // the underlying training run
};

// Identical to vanilla training through the cutoff epoch (same seed stream,
// same batches), then a constant learning rate; the weights at each epoch end
// from cutoff+1 on are folded into the running average.
SwaResult train_swa(const textmodel::TrainConfig& config, const SwaConfig& swa,
                    const textmodel::LrSchedule& base_schedule,
                    const std::vector<textmodel::Example>& train_set,
                    const std::vector<textmodel::Example>& dev_set);

// Highest dev accuracy wins; ties go to the smaller learning rate.
double select_swa_lr(const std::map<double, double>& dev_accuracy_by_lr);

}  // namespace seedstab::swa

#endif
