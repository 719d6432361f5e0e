#include "doctest.h"

#include "ffdisc/enumerate.hpp"
#include "ffdisc/expsums.hpp"

using namespace ffdisc;

TEST_CASE("ramanujan: frozen values over F_2") {
    const Field F = Field::prime(2);
    CHECK(ramanujan(F, poly_t(), poly_one(), RamanujanMethod::definition) == -1);
    CHECK(ramanujan(F, poly_t(), poly_one(), RamanujanMethod::moebius) == -1);
    CHECK(ramanujan(F, poly_t(), poly_t(), RamanujanMethod::definition) == 1);
    CHECK(ramanujan(F, poly_t(), poly_t(), RamanujanMethod::moebius) == 1);
    // c_Q(0) = phi(Q)
    for (int n = 1; n <= 4; ++n)
        for_each_monic(F, n, [&](const Poly& Q) {
            CHECK(ramanujan(F, Q, poly_zero()) == static_cast<std::int64_t>(euler_phi(F, Q)));
        });
}

TEST_CASE("ramanujan: definition agrees with moebius, exhaustive deg <= 4 (F_2), <= 3 (F_3)") {
    for (std::uint32_t q : {2u, 3u}) {
        const Field F = Field::of_size(q);
        const int dmax = q == 2 ? 4 : 3;
        for (int n = 1; n <= dmax; ++n)
            for_each_monic(F, n, [&](const Poly& G) {
                const std::uint64_t hc = pow_u64(q, static_cast<std::uint32_t>(dmax) + 1);
                for (std::uint64_t j = 0; j < hc; ++j) {
                    const Poly H = lex_unrank(F, j);
                    CHECK(ramanujan(F, G, H, RamanujanMethod::definition) ==
                          ramanujan(F, G, H, RamanujanMethod::moebius));
                }
            });
    }
}

TEST_CASE("ramanujan depends on H only through (H, G)") {
    const Field F = Field::prime(3);
    const Poly G = poly_of({0, 0, 1, 1});  // t^2(t+1)
    std::uint64_t st = 42;
    for (int i = 0; i < 200; ++i) {
        st = st * 6364136223846793005ull + 1442695040888963407ull;
        const Poly H = lex_unrank(F, st % 729);
        const Poly g = H.is_zero() ? poly_make_monic(F, G) : poly_gcd(F, H, G);
        CHECK(ramanujan(F, G, H) == ramanujan(F, G, g));
    }
}

TEST_CASE("divisor identity (exhaustive) and interval sums") {
    for (std::uint32_t q : {2u, 3u}) {
        const Field F = Field::of_size(q);
        const int dmax = q == 2 ? 4 : 3;
        for (int n = 1; n <= dmax; ++n)
            for_each_monic(F, n, [&](const Poly& G) {
                for (std::uint64_t j = 0; j < pow_u64(q, static_cast<std::uint32_t>(dmax) + 1); ++j) {
                    const auto rep = ramanujan_divisor_identity(F, G, lex_unrank(F, j));
                    CHECK(rep.holds);
                }
            });
    }
    const Field F2 = Field::prime(2);
    // frozen: G = t^2, H = 0 -> 4; G = t^2, H = t -> 0
    {
        std::int64_t s = 0;
        for (const Poly& D : monic_divisors(F2, poly_of({0, 0, 1}))) s += ramanujan(F2, D, poly_zero());
        CHECK(s == 4);
        s = 0;
        for (const Poly& D : monic_divisors(F2, poly_of({0, 0, 1}))) s += ramanujan(F2, D, poly_t());
        CHECK(s == 0);
    }
    // interval values: phi(Q) for n <= 0, and 0 once n >= deg Q. For
    // 1 <= n < deg Q the sum need not vanish: Q = t^2 over F_2 at n = 1 gives
    // c(0) + c(1) = 2 + 0 = 2 (frozen below, confirmed by both methods).
    CHECK(ramanujan_interval_sum(F2, poly_t(), 0) == 1);
    CHECK(ramanujan_interval_sum(F2, poly_t(), -3) == 1);
    CHECK(ramanujan_interval_sum(F2, poly_t(), 1) == 0);
    CHECK(ramanujan_interval_sum(F2, poly_of({1, 1, 1}), 3) == 0);
    CHECK(ramanujan_interval_sum(F2, poly_of({0, 0, 1}), 1) == 2);
    for (std::uint32_t q : {2u, 3u}) {
        const Field F = Field::of_size(q);
        for (int n = 1; n <= 3; ++n)
            for_each_monic(F, n, [&](const Poly& Q) {
                CHECK(ramanujan_interval_sum(F, Q, 0) == static_cast<std::int64_t>(euler_phi(F, Q)));
                for (int m = deg(Q); m <= deg(Q) + 2; ++m)
                    CHECK(ramanujan_interval_sum(F, Q, m) == 0);
            });
    }
}

TEST_CASE("gauss sums: frozen value and primitive magnitude") {
    const Field F = Field::prime(2);
    const Poly Q = poly_of({1, 1, 1});
    auto chars = characters(F, Q);
    // chi(t) = e(1/3): tau = 1 - e(1/3) - e(2/3) = 2
    for (int i = 1; i < 3; ++i) {
        const auto v = chars[i](F, poly_t());
        if (v.phase().root().num == 1) CHECK(approx_eq(gauss(F, chars[i]), 2.0));
    }
    // principal mod t: tau = c_t(1) = -1
    auto pr = principal_character(F, poly_t());
    CHECK(approx_eq(gauss(F, pr), -1.0));

    // |tau(chi)| = q^{deg Q/2} for all primitive nonprincipal chi, deg Q <= 4, q in {2,3}
    for (std::uint32_t q : {2u, 3u}) {
        const Field Fq = Field::of_size(q);
        const int dmax = q == 2 ? 4 : 3;
        for (int n = 1; n <= dmax; ++n)
            for_each_monic(Fq, n, [&](const Poly& M) {
                for (const auto& chi : characters(Fq, M)) {
                    if (chi.is_principal() || !is_primitive(Fq, chi)) continue;
                    const double expect = std::pow(static_cast<double>(q), n / 2.0);
                    CHECK(std::abs(std::abs(gauss(Fq, chi)) - expect) <= 1e-9);
                }
            });
    }
}

TEST_CASE("gauss conjugation bookkeeping") {
    // tau(conj chi, B) = conj(tau(chi, -B))
    const Field F = Field::prime(3);
    const Poly Q = poly_of({2, 1, 1});
    for (const auto& chi : characters(F, Q)) {
        for (std::uint64_t j = 1; j < 9; ++j) {
            const Poly B = lex_unrank(F, j);
            const auto lhs = gauss(F, chi.conjugate(), B);
            const auto rhs = std::conj(gauss(F, chi, poly_neg(F, B)));
            CHECK(approx_eq(lhs, rhs, 1e-8));
        }
    }
}

TEST_CASE("imprimitive gauss formula") {
    const Field F = Field::prime(2);
    const Poly Qstar = poly_of({1, 1, 1});
    auto chars = characters(F, Qstar);
    const Poly Q = poly_mul(F, poly_t(), Qstar);

    // primitive case: Q2 = 1, reduces to tau(chi*) conj(chi*)(B); all B coprime
    for (int i = 1; i < 3; ++i) {
        for (std::uint64_t j = 1; j < 8; ++j) {
            const Poly B = lex_unrank(F, j);
            if (deg(poly_gcd(F, B, Qstar)) != 0) continue;
            const auto rep = gauss_imprimitive_check(F, chars[i], B);
            CHECK(rep.hypotheses_ok);
            CHECK(rep.holds);
        }
    }
    // induced to Q = t(t^2+t+1): all nonzero B mod Q
    for (int i = 1; i < 3; ++i) {
        const DirichletChar chi = induce(F, chars[i], Q);
        for (std::uint64_t j = 1; j < 8; ++j) {
            const auto rep = gauss_imprimitive_check(F, chi, lex_unrank(F, j));
            CHECK(rep.hypotheses_ok);
            CHECK(rep.holds);
        }
        // (Q,B) not dividing Q2 forces tau(chi,B) = 0: B = Q* has (Q,B) = Q* which
        // does not divide Q2 = t
        const auto z = gauss(F, chi, Qstar);
        CHECK(approx_eq(z, 0.0));
    }
}

TEST_CASE("imprimitive gauss formula: exhaustive family deg Q <= 3, q in {2,3}") {
    for (std::uint32_t q : {2u, 3u}) {
        const Field F = Field::of_size(q);
        for (int n = 1; n <= 3; ++n)
            for_each_monic(F, n, [&](const Poly& Q) {
                for (const auto& chi : characters(F, Q)) {
                    if (chi.is_principal()) continue;
                    for (std::uint64_t j = 1; j < pow_u64(q, static_cast<std::uint32_t>(n)); ++j) {
                        const auto rep = gauss_imprimitive_check(F, chi, lex_unrank(F, j));
                        if (rep.hypotheses_ok) CHECK(rep.holds);
                    }
                }
            });
    }
}
