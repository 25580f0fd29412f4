// Compares the OpenMP kernels against their serial reference implementations.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stratum/traceeval.hpp"

using namespace stratum;

namespace {

template <typename F>
double time_best_of(int reps, F&& f) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double el = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (el < best) best = el;
    }
    return best;
}

void row(const std::string& name, double serial, double parallel, std::size_t check) {
    std::printf("%-34s %10.4fs %10.4fs %8.2fx   %zu\n", name.c_str(), serial, parallel,
                serial / parallel, check);
}

}  // namespace

int main() {
    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads: %d\n", threads);
    std::printf("%-34s %11s %11s %9s   %s\n", "workload", "serial", "openmp", "speedup",
                "check");

    {
        Composition lam(std::vector<int>(6, 2));
        std::size_t count = 0;
        double ts = time_best_of(3, [&] { count = enumerate_G_theta_PQ_serial(lam, lam).size(); });
        double tp = time_best_of(3, [&] { count = enumerate_G_theta_PQ(lam, lam).size(); });
        row("theta cosets n=12 (2^6)", ts, tp, count);
    }
    {
        Composition lam(std::vector<int>(7, 2));
        std::size_t count = 0;
        double ts = time_best_of(3, [&] { count = enumerate_G_theta_PQ_serial(lam, lam).size(); });
        double tp = time_best_of(3, [&] { count = enumerate_G_theta_PQ(lam, lam).size(); });
        row("theta cosets n=14 (2^7)", ts, tp, count);
    }
    {
        Composition lam{2, 3, 3, 2}, mu{1, 2, 4, 2, 1};
        std::size_t count = 0;
        double ts = time_best_of(3, [&] { count = enumerate_G_PQ_serial(lam, mu).size(); });
        double tp = time_best_of(3, [&] { count = enumerate_G_PQ(lam, mu).size(); });
        row("plain cosets n=10", ts, tp, count);
    }
    {
        SteinbergProductRep rep(Composition(std::vector<int>(6, 1)),
                                std::vector<BlockChar>(6, BlockChar::Trivial));
        std::size_t count = 0;
        double ts = time_best_of(3, [&] {
            count = twisted_compact_trace_serial(6, 3, rep).poly.term_count();
        });
        double tp =
            time_best_of(3, [&] { count = twisted_compact_trace(6, 3, rep).poly.term_count(); });
        row("trace n=6 s=3 blocks=(1^6)", ts, tp, count);
    }
    return 0;
}
