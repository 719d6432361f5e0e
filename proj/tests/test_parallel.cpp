#include "doctest.h"

#include "ffdisc/discrepancy.hpp"
#include "ffdisc/parallel.hpp"

#ifdef FFDISC_OPENMP
#include <omp.h>
#endif

using namespace ffdisc;

namespace {

// straight-loop references, no chunking: agreement within accumulation noise
std::complex<double> long_sum_reference(const Field& F, const MultFn& f, int N) {
    std::complex<double> acc = 0.0;
    for (int n = 0; n <= N; ++n)
        for_each_monic(F, n, [&](const Poly& G) { acc += f.value(F, G); });
    return acc;
}

double scan_reference(const Field& F, const MultFn& f, int H, int N) {
    double best = 0.0;
    const std::uint64_t blocks = count_monics(F, N - H);
    const std::uint64_t bs = count_monics(F, H);
    for (std::uint64_t b = 0; b < blocks; ++b) {
        Poly rep = monic_of_index(F, N, b * bs);
        std::complex<double> s = 0.0;
        for (std::uint64_t j = 0; j < bs; ++j) s += f.value(F, short_interval_member(F, rep, H, j));
        best = std::max(best, std::abs(s));
    }
    return best;
}

double mean_square_reference(const Field& F, const MultFn& f, int H, int N) {
    // literal definition: q^{-N} sum over G0 in M_N of |sum_{deg M < H} f(G0+M)|^2
    double acc = 0.0;
    const std::uint64_t total = count_monics(F, N);
    const std::uint64_t win = pow_u64(F.q(), static_cast<std::uint32_t>(H));
    for (std::uint64_t i = 0; i < total; ++i) {
        const Poly G0 = monic_of_index(F, N, i);
        std::complex<double> s = 0.0;
        for (std::uint64_t j = 0; j < win; ++j) {
            const Poly M = lex_unrank(F, j);
            s += f.value(F, poly_add(F, G0, M));
        }
        acc += std::norm(s);
    }
    return acc / static_cast<double>(total);
}

MultFn sample_fn(const Field& F) {
    const Poly Q = poly_pow(F, poly_mul(F, poly_t(), poly_of({1, 1})), 2);  // t^2 (t+1)^2
    DirichletChar prim;
    for (const auto& chi : characters(F, Q))
        if (is_primitive(F, chi)) prim = chi;
    return MultFn::of(ModifiedChar::make(
        F, Q, prim,
        {{poly_t(), Phase::of(RootOfUnity::make(1, 3))}, {poly_of({1, 1}), Phase::of(RootOfUnity::minus_one())}}));
}

}  // namespace

TEST_CASE("pairwise tree sum is deterministic and correct") {
    std::vector<std::complex<double>> v;
    std::uint64_t st = 2024;
    for (int i = 0; i < 12345; ++i) {
        st = st * 6364136223846793005ull + 1442695040888963407ull;
        v.push_back({static_cast<double>(st % 1000) - 500.0, static_cast<double>((st >> 20) % 7)});
    }
    auto v1 = v, v2 = v;
    const auto s1 = pairwise_tree_sum(v1);
    const auto s2 = pairwise_tree_sum(v2);
    CHECK(s1 == s2);
    std::complex<double> plain = 0.0;
    for (const auto& z : v) plain += z;
    CHECK(approx_eq(s1, plain, 1e-6));
}

TEST_CASE("parallel kernels match the serial chunked path bit-for-bit") {
    const Field F = Field::prime(2);
    const MultFn f = sample_fn(F);
    for (int N : {6, 11}) {
        const auto a = long_sum_brute(F, f, N, true);
        const auto b = long_sum_brute(F, f, N, false);
        CHECK(a.real() == b.real());
        CHECK(a.imag() == b.imag());
    }
    const DegreeValues vp(F, f, 12, true);
    const DegreeValues vs(F, f, 12, false);
    REQUIRE(vp.v.size() == vs.v.size());
    for (std::size_t i = 0; i < vp.v.size(); ++i) CHECK(vp.v[i] == vs.v[i]);
    for (int H : {2, 5}) {
        CHECK(short_scan(F, vp, H).sup == short_scan(F, vs, H).sup);
        CHECK(mean_square_T(F, vp, H) == mean_square_T(F, vs, H));
    }
    const auto l1 = lex_sum(F, f, 100000, true, true);
    const auto l2 = lex_sum(F, f, 100000, true, false);
    CHECK(l1.real() == l2.real());
    CHECK(l1.imag() == l2.imag());
}

TEST_CASE("kernels agree with straight-loop references") {
    const Field F = Field::prime(3);
    const MultFn f = sample_fn(F);
    for (int N : {3, 5}) {
        CHECK(approx_eq(long_sum_brute(F, f, N), long_sum_reference(F, f, N), 1e-8));
    }
    const DegreeValues vals(F, f, 6, true);
    for (int H : {1, 2, 3}) {
        CHECK(std::abs(short_scan(F, vals, H).sup - scan_reference(F, f, H, 6)) < 1e-8);
        CHECK(std::abs(mean_square_T(F, vals, H) - mean_square_reference(F, f, H, 6)) < 1e-8);
    }
}

TEST_CASE("results do not depend on the worker count") {
#ifdef FFDISC_OPENMP
    const Field F = Field::prime(2);
    const MultFn f = sample_fn(F);
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = long_sum_brute(F, f, 12, true);
    const double t1 = mean_square_T(F, f, 4, 12, true);
    omp_set_num_threads(std::max(2, saved));
    const auto many = long_sum_brute(F, f, 12, true);
    const double t2 = mean_square_T(F, f, 4, 12, true);
    omp_set_num_threads(saved);
    CHECK(one.real() == many.real());
    CHECK(one.imag() == many.imag());
    CHECK(t1 == t2);
#endif
}
