// Timing comparison of the OpenMP kernels against the serial reference path.

#include <chrono>
#include <cstdio>

#include "ffdisc/discrepancy.hpp"

#ifdef FFDISC_OPENMP
#include <omp.h>
#endif

using namespace ffdisc;

namespace {

template <typename Fn>
double time_of(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main() {
#ifdef FFDISC_OPENMP
    std::printf("OpenMP: %d thread(s)\n", omp_get_max_threads());
#else
    std::printf("OpenMP: disabled at build time\n");
#endif
    const Field F = Field::prime(2);
    const Poly Q = poly_pow(F, poly_mul(F, poly_t(), poly_of({1, 1})), 2);
    DirichletChar prim;
    for (const auto& chi : characters(F, Q))
        if (is_primitive(F, chi)) prim = chi;
    const auto mc = ModifiedChar::make(
        F, Q, prim,
        {{poly_t(), Phase::of(RootOfUnity::make(1, 3))}, {poly_of({1, 1}), Phase::of(RootOfUnity::minus_one())}});
    const MultFn f = MultFn::of(mc);

    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial[s]", "openmp[s]", "speedup");

    {
        std::complex<double> a, b;
        const double ts = time_of([&] { a = long_sum_brute(F, f, 20, false); });
        const double tp = time_of([&] { b = long_sum_brute(F, f, 20, true); });
        std::printf("%-34s %10.3f %10.3f %8.2f  %s\n", "long_sum_brute N=20", ts, tp, ts / tp,
                    a == b ? "bit-identical" : "MISMATCH");
    }
    {
        double a, b;
        const double ts = time_of([&] { a = mean_square_T(F, f, 6, 20, false); });
        const double tp = time_of([&] { b = mean_square_T(F, f, 6, 20, true); });
        std::printf("%-34s %10.3f %10.3f %8.2f  %s\n", "mean_square_T H=6 N=20", ts, tp, ts / tp,
                    a == b ? "bit-identical" : "MISMATCH");
    }
    {
        double a, b;
        const double ts = time_of([&] { a = short_scan(F, f, 6, 20, false).sup; });
        const double tp = time_of([&] { b = short_scan(F, f, 6, 20, true).sup; });
        std::printf("%-34s %10.3f %10.3f %8.2f  %s\n", "short_scan H=6 N=20", ts, tp, ts / tp,
                    a == b ? "bit-identical" : "MISMATCH");
    }
    {
        std::complex<double> a, b;
        const double ts = time_of([&] { a = lex_sum(F, f, 1u << 22, true, false); });
        const double tp = time_of([&] { b = lex_sum(F, f, 1u << 22, true, true); });
        std::printf("%-34s %10.3f %10.3f %8.2f  %s\n", "lex_sum N=2^22", ts, tp, ts / tp,
                    a == b ? "bit-identical" : "MISMATCH");
    }
    return 0;
}
