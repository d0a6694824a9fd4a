// Benchmark: serial vs parallel membership sweeps (double-coset test
// and self-intersection index) on catalog groups of growing order.
#include <chrono>
#include <cstdio>
#include <string>

#include "hat/concentric.hpp"
#include "hat/constructions.hpp"
#include "hat/element_set.hpp"

using Clock = std::chrono::steady_clock;

static double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

int main(int argc, char** argv) {
    int jobs = argc > 1 ? std::atoi(argv[1]) : 4;
    int reps = argc > 2 ? std::atoi(argv[2]) : 200;
    std::printf("%-12s %8s %10s %12s %12s %8s\n", "group", "|H|", "reps", "serial(ms)",
                "parallel(ms)", "jobs");
    for (const std::string name : {"D8", "D8xZ2^2", "D8^2xZ2^1", "H7"}) {
        hat::ConcentricSequence cs = hat::catalog(name);
        hat::Permutation tau = hat::build_tau_h(cs, cs.identity_index());
        std::vector<hat::Permutation> rh;
        for (std::uint32_t i = 0; i < cs.order(); ++i) rh.push_back(cs.regular_of(i));
        hat::ElementSet RH = hat::ElementSet::from_elements(std::move(rh));

        hat::set_sweep_jobs(1);
        auto t0 = Clock::now();
        std::uint64_t acc = 0;
        for (int r = 0; r < reps; ++r) {
            acc += hat::index_of_self_intersection_serial(RH, tau);
            acc += hat::double_cosets_equal_serial(RH, tau) ? 1 : 0;
        }
        double serial = ms_since(t0);

        hat::set_sweep_jobs(jobs);
        t0 = Clock::now();
        std::uint64_t acc2 = 0;
        for (int r = 0; r < reps; ++r) {
            acc2 += hat::index_of_self_intersection(RH, tau);
            acc2 += hat::double_cosets_equal(RH, tau) ? 1 : 0;
        }
        double parallel = ms_since(t0);
        hat::set_sweep_jobs(1);

        if (acc != acc2) {
            std::fprintf(stderr, "MISMATCH between serial and parallel sweeps on %s\n",
                         name.c_str());
            return 1;
        }
        std::printf("%-12s %8zu %10d %12.2f %12.2f %8d\n", name.c_str(), RH.size(), reps, serial,
                    parallel, jobs);
    }
    return 0;
}
