// Timing comparison of the serial reference kernels against their OpenMP
// versions. Results must agree bit for bit; only the wall time may differ.
//
//   ./bench_kernels [dim]    (default span dimension 22)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lwc/channel.hpp"
#include "lwc/codespec.hpp"
#include "lwc/kernels.hpp"
#include "lwc/sim.hpp"

using namespace lwc;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<BitVector> random_span(SplitMix64& rng, int n, int dim) {
    std::vector<BitVector> basis;
    for (int j = 0; j < dim; ++j) {
        BitVector v(n);
        v.set(j, true);
        for (int i = dim; i < n; ++i) v.set(i, rng.next_bit());
        basis.push_back(v);
    }
    return basis;
}

void report(const char* name, double serial_s, double parallel_s, bool identical) {
    std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %5.2fx   %s\n", name,
                serial_s, parallel_s, serial_s / parallel_s,
                identical ? "results identical" : "RESULTS DIFFER");
}

}  // namespace

int main(int argc, char** argv) {
    int dim = argc > 1 ? std::atoi(argv[1]) : 22;
#ifdef _OPENMP
    std::printf("OpenMP with up to %d threads, span dimension %d\n\n",
                omp_get_max_threads(), dim);
#else
    std::printf("built without OpenMP; both columns run serially\n\n");
#endif

    SplitMix64 rng(2024);

    {
        auto basis = random_span(rng, 64, dim);
        auto t0 = std::chrono::steady_clock::now();
        auto serial = scan_span(basis, 64, false, Exec::Serial);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto parallel = scan_span(basis, 64, false, Exec::Parallel);
        double tp = seconds_since(t0);
        report("min-weight scan", ts, tp, serial.min_weight == parallel.min_weight);
    }

    {
        auto basis = random_span(rng, 64, dim);
        auto t0 = std::chrono::steady_clock::now();
        auto serial = scan_span(basis, 64, true, Exec::Serial);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        auto parallel = scan_span(basis, 64, true, Exec::Parallel);
        double tp = seconds_since(t0);
        report("covering-weight scan", ts, tp,
               serial.min_weight == parallel.min_weight &&
                   serial.covering == parallel.covering);
    }

    {
        SimConfig cfg;
        cfg.code = resolve_spec("hamming7-lwc");
        cfg.beta = 0.1;
        cfg.trials = 200000;
        cfg.updates_per_trial = 10;
        cfg.seed = 7;
        // Serialize and drop each result before timing the next run, so the
        // second run is not measured under the first one's footprint.
        auto timed = [&](Exec exec, double& secs) {
            auto t0 = std::chrono::steady_clock::now();
            SimResult res = run(cfg, exec);
            secs = seconds_since(t0);
            std::ostringstream os;
            write_csv(os, res);
            return os.str();
        };
        double ts = 0, tp = 0;
        std::string a = timed(Exec::Serial, ts);
        std::string b = timed(Exec::Parallel, tp);
        report("simulate 200k trials", ts, tp, a == b);
    }

    return 0;
}
