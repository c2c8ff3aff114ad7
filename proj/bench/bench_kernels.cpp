// Serial reference vs OpenMP kernels. Usage: tmpart_bench [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>

#include "tmpart/constructions.hpp"
#include "tmpart/repfn.hpp"
#include "tmpart/search.hpp"

using namespace tmpart;

namespace {

double best_ms(int repeats, const std::function<void()>& fn) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (ms < best) best = ms;
    }
    return best;
}

void row(const char* name, double ref_ms, double one_ms, double many_ms) {
    std::printf("%-34s %12.3f %12.3f %12.3f %8.2fx\n", name, ref_ms, one_ms, many_ms, ref_ms / many_ms);
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    const int threads = omp_get_max_threads();
    std::printf("threads: %d, best of %d\n", threads, repeats);
    std::printf("%-34s %12s %12s %12s %9s\n", "kernel", "serial ms", "1 thread ms", "omp ms", "speedup");

    for (unsigned l : {4u, 5u, 6u}) {
        const auto p = theorem11_pair(l);
        const auto n_max = 2 * p.m();
        const double ref = best_ms(repeats, [&] { reference::rep_profile(p.c(), n_max); });
        omp_set_num_threads(1);
        const double one = best_ms(repeats, [&] { rep_profile(p.c(), n_max); });
        omp_set_num_threads(threads);
        const double many = best_ms(repeats, [&] { rep_profile(p.c(), n_max); });
        char name[64];
        std::snprintf(name, sizeof name, "rep_profile theorem11(%u) m=%llu", l, static_cast<unsigned long long>(p.m()));
        row(name, ref, one, many);
    }

    {
        const auto p = theorem11_pair(5);
        const auto n_max = 2 * p.m();
        const double ref = best_ms(repeats, [&] { reference::rep_cross_profile(p.c(), p.d(), n_max); });
        omp_set_num_threads(1);
        const double one = best_ms(repeats, [&] { rep_cross_profile(p.c(), p.d(), n_max); });
        omp_set_num_threads(threads);
        const double many = best_ms(repeats, [&] { rep_cross_profile(p.c(), p.d(), n_max); });
        row("rep_cross_profile theorem11(5)", ref, one, many);
    }

    SearchParams sp;
    sp.m_min = 3;
    sp.m_max = 16;
    sp.k = 2;
    sp.mode = SearchMode::Brute;
    omp_set_num_threads(1);
    const double brute_one = best_ms(1, [&] { run_search(sp); });
    omp_set_num_threads(threads);
    const double brute_many = best_ms(1, [&] { run_search(sp); });
    row("search brute m=3..16 k=2", brute_one, brute_one, brute_many);

    sp.m_max = 200;
    sp.mode = SearchMode::Determinized;
    omp_set_num_threads(1);
    const double det_one = best_ms(repeats, [&] { run_search(sp); });
    omp_set_num_threads(threads);
    const double det_many = best_ms(repeats, [&] { run_search(sp); });
    row("search det m=3..200 k=2", det_one, det_one, det_many);
    return 0;
}
