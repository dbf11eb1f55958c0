#ifndef SEEDSTAB_TEXTMODEL_SCHEDULE_HPP
#define SEEDSTAB_TEXTMODEL_SCHEDULE_HPP

namespace seedstab::textmodel {

enum class ScheduleVariant {
    warmup_linear_decay,   // 0 -> peak over warmup, peak -> 0 over the rest
    warmup_then_constant,  // identical before cutoff_step, constant_lr after
};

struct LrSchedule {
    ScheduleVariant variant = ScheduleVariant::warmup_linear_decay;
    long warmup_steps = 0;
    long total_steps = 0;
    double peak_lr = 0.0;
    long cutoff_step = 0;     // warmup_then_constant only
    double constant_lr = 0.0; // warmup_then_constant only

    static LrSchedule warmup_linear(long warmup_steps, long total_steps, double peak_lr);
    static LrSchedule warmup_constant(long warmup_steps, long total_steps, double peak_lr,
                                      long cutoff_step, double constant_lr);
};

// Piecewise-linear learning rate; endpoints (0, warmup_steps, total_steps,
// cutoff_step) are exact, no floating-point drift at the corners.
double lr_at(const LrSchedule& schedule, long step);

}  // namespace seedstab::textmodel

#endif
