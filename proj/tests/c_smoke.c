/* Compiled as C99: proves the public header is C-clean and the stateless
 * kernels work through the shared library alone. */
#include <seedstab/seedstab.h>

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

static void expect(int ok, const char* what) {
    if (!ok) {
        fprintf(stderr, "c_smoke: FAIL: %s\n", what);
        failures++;
    }
}

static int close_to(double a, double b, double tol) {
    return fabs(a - b) <= tol;
}

int main(void) {
    const char* version = seedstab_version();
    expect(version != NULL && strlen(version) >= 5, "version string present");
    expect(strchr(version, '.') != NULL, "version is dotted");

    /* Unanimous two-item table: kappa 1, raw defined. */
    {
        int32_t counts[] = {2, 0, 0, 2};
        double kappa = -9.0, raw = -9.0;
        int raw_defined = -1;
        seedstab_status st = seedstab_fleiss_kappa(counts, 2, 2, 2, &kappa, &raw, &raw_defined);
        expect(st == SEEDSTAB_OK, "fleiss status ok");
        expect(close_to(kappa, 1.0, 1e-12), "unanimous kappa is 1");
        expect(raw_defined == 1 && close_to(raw, 1.0, 1e-12), "unanimous raw is 1");
    }

    /* Every rater picks category 0: chance agreement saturates. */
    {
        int32_t counts[] = {3, 0, 3, 0};
        double kappa = -9.0;
        int raw_defined = -1;
        seedstab_status st = seedstab_fleiss_kappa(counts, 2, 2, 3, &kappa, NULL, &raw_defined);
        expect(st == SEEDSTAB_OK, "degenerate fleiss status ok");
        expect(close_to(kappa, 1.0, 1e-12), "degenerate adjusted kappa is 1");
        expect(raw_defined == 0, "degenerate raw undefined");
    }

    /* Bad shape is rejected, not crashed on. */
    {
        double kappa;
        seedstab_status st = seedstab_fleiss_kappa(NULL, 2, 2, 2, &kappa, NULL, NULL);
        expect(st == SEEDSTAB_ERR_CONFIG, "null counts rejected");
        int32_t counts[] = {1, 0, 0, 2};
        st = seedstab_fleiss_kappa(counts, 2, 2, 2, &kappa, NULL, NULL);
        expect(st == SEEDSTAB_ERR_DATA, "row sum mismatch rejected");
    }

    {
        const char* a[] = {"case-1", "case-2", "case-3"};
        const char* b[] = {"case-2", "case-3", "case-4"};
        double ratio = -9.0;
        int defined = -1;
        seedstab_status st = seedstab_overlap_ratio(a, 3, b, 3, &ratio, &defined);
        expect(st == SEEDSTAB_OK, "overlap status ok");
        expect(defined == 1 && close_to(ratio, 0.5, 1e-12), "overlap 2/4");

        st = seedstab_overlap_ratio(a, 0, b, 0, &ratio, &defined);
        expect(st == SEEDSTAB_OK && defined == 0, "empty/empty overlap undefined");
    }

    {
        double lr = seedstab_lr_warmup_linear_decay(10, 10, 100, 1.0);
        expect(close_to(lr, 1.0, 0.0), "peak exact at warmup step");
        lr = seedstab_lr_warmup_linear_decay(100, 10, 100, 1.0);
        expect(lr == 0.0, "zero exact at final step");
        lr = seedstab_lr_warmup_linear_decay(5, 0, 100, 2.0);
        expect(isnan(lr) == 0 && lr > 0.0, "zero warmup is a valid shape");
        lr = seedstab_lr_warmup_linear_decay(5, 100, 100, 1.0);
        expect(isnan(lr), "warmup == total yields NaN");

        lr = seedstab_lr_warmup_then_constant(40, 10, 100, 1.0, 40, 0.007);
        expect(close_to(lr, 0.007, 0.0), "constant lr exact at cutoff");
        lr = seedstab_lr_warmup_then_constant(39, 10, 100, 1.0, 40, 0.007);
        double plain = seedstab_lr_warmup_linear_decay(39, 10, 100, 1.0);
        expect(lr == plain, "pre-cutoff matches the plain decay");
    }

    /* The run handle is constructible and refuses garbage from C too. */
    {
        seedstab_run* run = seedstab_run_new();
        expect(run != NULL, "default run handle allocates");
        if (run) {
            expect(seedstab_run_set(run, "seeds", "5..2") == SEEDSTAB_ERR_CONFIG,
                   "backwards seed range rejected");
            expect(strlen(seedstab_run_error(run)) > 0, "error message stored");
            expect(seedstab_run_set(run, "variant", "swa") == SEEDSTAB_OK, "variant override ok");
            expect(seedstab_run_error(run)[0] == '\0', "error cleared after success");
            seedstab_run_free(run);
        }
        seedstab_run_free(NULL);
    }

    if (failures == 0) {
        printf("c_smoke: all checks passed\n");
        return 0;
    }
    fprintf(stderr, "c_smoke: %d check(s) failed\n", failures);
    return 1;
}
