// Times the serial reference kernels against the OpenMP range-split kernels
// on the same inputs and checks that they produce identical tables.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#include "hessmult/sweep.hpp"

using namespace hessmult;

namespace {

template <typename F>
double time_best_of(int repeats, F&& fn) {
    double best = 1e100;
    for (int r = 0; r < repeats; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    int n = 8;
    int jobs = resolve_jobs(0);
    int repeats = 3;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--n") && i + 1 < argc) n = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--jobs") && i + 1 < argc) jobs = std::atoi(argv[++i]);
        else if (!std::strcmp(argv[i], "--repeats") && i + 1 < argc) repeats = std::atoi(argv[++i]);
    }

    const HessFunction h = HessFunction::complete(n);
    const double perms = static_cast<double>(factorial(n));
    std::printf("n = %d (%.0f permutations), jobs = %d, best of %d\n", n, perms, jobs, repeats);

    PermClassTable cs, cp;
    double t_cs = time_best_of(repeats, [&] { cs = classify_perms_serial(h); });
    double t_cp = time_best_of(repeats, [&] { cp = classify_perms_parallel(h, jobs); });
    if (cs.counts != cp.counts) {
        std::fprintf(stderr, "FAIL: classify kernels disagree\n");
        return 1;
    }
    std::printf("classify   serial %8.3f ms (%7.2f Mperm/s)   parallel %8.3f ms (%7.2f Mperm/s)   speedup %.2fx\n",
                t_cs * 1e3, perms / t_cs / 1e6, t_cp * 1e3, perms / t_cp / 1e6, t_cs / t_cp);

    DescentTable ds, dp;
    double t_ds = time_best_of(repeats, [&] { ds = descent_counts_serial(n); });
    double t_dp = time_best_of(repeats, [&] { dp = descent_counts_parallel(n, jobs); });
    if (ds.counts != dp.counts) {
        std::fprintf(stderr, "FAIL: descent kernels disagree\n");
        return 1;
    }
    std::printf("descents   serial %8.3f ms (%7.2f Mperm/s)   parallel %8.3f ms (%7.2f Mperm/s)   speedup %.2fx\n",
                t_ds * 1e3, perms / t_ds / 1e6, t_dp * 1e3, perms / t_dp / 1e6, t_ds / t_dp);
    return 0;
}
