#include "textmodel/schedule.hpp"

#include <string>

#include "common/errors.hpp"

namespace seedstab::textmodel {

namespace {

void validate(const LrSchedule& s) {
    if (s.peak_lr <= 0.0) throw ConfigError("schedule: peak_lr must be > 0");
    if (s.warmup_steps < 0 || s.total_steps <= 0 || s.warmup_steps >= s.total_steps) {
        throw ConfigError("schedule: need 0 <= warmup_steps < total_steps (got " +
                          std::to_string(s.warmup_steps) + ", " + std::to_string(s.total_steps) + ")");
    }
    if (s.variant == ScheduleVariant::warmup_then_constant) {
        if (s.cutoff_step <= 0 || s.constant_lr < 0.0) {
            throw ConfigError("schedule: warmup_then_constant needs cutoff_step > 0 and constant_lr >= 0");
        }
    }
}

double warmup_linear_value(const LrSchedule& s, long step) {
    if (step <= 0) return 0.0;
    if (step >= s.total_steps) return 0.0;
    if (step <= s.warmup_steps) {
        return s.peak_lr * (static_cast<double>(step) / static_cast<double>(s.warmup_steps));
    }
    return s.peak_lr * (static_cast<double>(s.total_steps - step) /
                        static_cast<double>(s.total_steps - s.warmup_steps));
}

}  // namespace

LrSchedule LrSchedule::warmup_linear(long warmup_steps, long total_steps, double peak_lr) {
    LrSchedule s;
    s.variant = ScheduleVariant::warmup_linear_decay;
    s.warmup_steps = warmup_steps;
    s.total_steps = total_steps;
    s.peak_lr = peak_lr;
    validate(s);
    return s;
}

LrSchedule LrSchedule::warmup_constant(long warmup_steps, long total_steps, double peak_lr,
                                       long cutoff_step, double constant_lr) {
    LrSchedule s;
    s.variant = ScheduleVariant::warmup_then_constant;
    s.warmup_steps = warmup_steps;
    s.total_steps = total_steps;
    s.peak_lr = peak_lr;
    s.cutoff_step = cutoff_step;
    s.constant_lr = constant_lr;
    validate(s);
    return s;
}

double lr_at(const LrSchedule& schedule, long step) {
    if (step < 0) throw ConfigError("lr_at: step must be >= 0");
    if (schedule.variant == ScheduleVariant::warmup_then_constant && step >= schedule.cutoff_step) {
        return schedule.constant_lr;
    }
    return warmup_linear_value(schedule, step);
}

}  // namespace seedstab::textmodel
