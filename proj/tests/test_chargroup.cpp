#include "doctest.h"

#include <complex>
#include <map>

#include "ffdisc/characters.hpp"
#include "ffdisc/enumerate.hpp"

using namespace ffdisc;

TEST_CASE("unit group: small moduli") {
    const Field F2 = Field::prime(2);
    // (F_2[t]/(t^2+t+1))^x is cyclic of order 3 generated by t
    auto G = unit_group(F2, poly_of({1, 1, 1}));
    CHECK(G->phi == 3);
    REQUIRE(G->orders.size() == 1);
    CHECK(G->orders[0] == 3);
    CHECK(G->gens[0] == poly_t());

    // (F_2[t]/(t^2(t+1)^2))^x = C2 x C2
    const Poly Q = poly_mul(F2, poly_of({0, 0, 1}), poly_of({1, 0, 1}));  // t^2 (t+1)^2
    auto G2 = unit_group(F2, Q);
    CHECK(G2->phi == 4);
    REQUIRE(G2->orders.size() == 2);
    CHECK(G2->orders[0] == 2);
    CHECK(G2->orders[1] == 2);

    const Field F3 = Field::prime(3);
    auto G3 = unit_group(F3, poly_t());
    CHECK(G3->phi == 2);
    REQUIRE(G3->orders.size() == 1);
    CHECK(G3->orders[0] == 2);
}

TEST_CASE("unit group: verified decomposition over moduli up to degree 4") {
    for (std::uint32_t q : {2u, 3u}) {
        const Field F = Field::of_size(q);
        for (int n = 1; n <= 4; ++n) {
            for_each_monic(F, n, [&](const Poly& Q) {
                auto G = unit_group(F, Q);  // construction itself verifies the direct sum
                std::uint64_t prod = 1;
                for (auto m : G->orders) prod *= m;
                CHECK(prod == G->phi);
                for (std::size_t i = 0; i + 1 < G->orders.size(); ++i)
                    CHECK(G->orders[i + 1] <= G->orders[i]);
            });
        }
    }
}

TEST_CASE("characters: family, orthogonality, values") {
    const Field F = Field::prime(2);
    const Poly Q = poly_of({1, 1, 1});
    auto chars = characters(F, Q);
    REQUIRE(chars.size() == 3);
    CHECK(chars[0].is_principal());
    // nonprincipal ones take e(1/3), e(2/3) at t
    std::map<std::int64_t, int> seen;
    for (int i = 1; i < 3; ++i) {
        const UnitVal v = chars[i](F, poly_t());
        CHECK(v.phase().root().den == 3);
        seen[v.phase().root().num]++;
    }
    CHECK(seen[1] == 1);
    CHECK(seen[2] == 1);
}

TEST_CASE("orthogonality over residues and monic slices, deg Q <= 4") {
    for (std::uint32_t q : {2u, 3u}) {
        const Field F = Field::of_size(q);
        for (int n = 1; n <= (q == 2 ? 4 : 3); ++n) {
            for_each_monic(F, n, [&](const Poly& Q) {
                const std::uint64_t residues = pow_u64(q, static_cast<std::uint32_t>(n));
                for (const auto& chi : characters(F, Q)) {
                    std::complex<double> s = 0.0;
                    for (std::uint64_t i = 0; i < residues; ++i) s += chi.value(F, lex_unrank(F, i));
                    if (chi.is_principal())
                        CHECK(approx_eq(s, static_cast<double>(chi.group().phi)));
                    else
                        CHECK(approx_eq(s, 0.0));
                    // monic degree slices vanish for nonprincipal chi and m >= deg Q
                    if (!chi.is_principal()) {
                        for (int m = n; m <= n + 3; ++m) {
                            std::complex<double> t = 0.0;
                            for_each_monic(F, m, [&](const Poly& g) { t += chi.value(F, g); });
                            CHECK(approx_eq(t, 0.0));
                        }
                    }
                }
            });
        }
    }
}

TEST_CASE("conductor and induction") {
    const Field F = Field::prime(2);
    // principal mod Q has conductor 1
    const Poly Q = poly_of({1, 1, 1});
    auto chars = characters(F, Q);
    CHECK(conductor(F, chars[0]) == poly_one());
    CHECK(conductor(F, chars[1]) == Q);
    CHECK(is_primitive(F, chars[1]));

    // induce from mod t^2+t+1 to mod t(t^2+t+1): conductor recovers t^2+t+1
    const Poly QQ = poly_mul(F, poly_t(), Q);
    const DirichletChar ind = induce(F, chars[1], QQ);
    CHECK(conductor(F, ind) == Q);
    CHECK_FALSE(is_primitive(F, ind));
    // pointwise: induced value = chi* value on coprime arguments
    for (std::uint64_t i = 0; i < 8; ++i) {
        const Poly A = lex_unrank(F, i);
        const UnitVal vi = ind(F, A);
        if (vi.is_zero()) continue;
        CHECK(approx_eq(vi.value(), chars[1].value(F, A)));
    }
    // primitive part inverts induce
    const DirichletChar back = primitive_part(F, ind);
    CHECK(back.modulus() == Q);
    CHECK(back.exponents() == chars[1].exponents());

    // Q = t^2 (t+1)^2 has exactly one primitive character
    const Poly Q4 = poly_mul(F, poly_of({0, 0, 1}), poly_of({1, 0, 1}));
    int prim = 0;
    for (const auto& chi : characters(F, Q4)) prim += is_primitive(F, chi) ? 1 : 0;
    CHECK(prim == 1);
}

TEST_CASE("induced-from-primitive covers deg Q <= 4 over F_2 exhaustively") {
    const Field F = Field::prime(2);
    for (int n = 1; n <= 4; ++n) {
        for_each_monic(F, n, [&](const Poly& Q) {
            for (const auto& chi : characters(F, Q)) {
                const Poly cond = conductor(F, chi);
                if (deg(cond) == 0) {
                    CHECK(chi.is_principal());
                    continue;
                }
                const DirichletChar star = primitive_part(F, chi);
                const DirichletChar again = induce(F, star, Q);
                CHECK(again.exponents() == chi.exponents());
            }
        });
    }
}

TEST_CASE("short interval characters") {
    const Field F = Field::prime(2);
    auto xs0 = short_chars(F, 0);
    REQUIRE(xs0.size() == 1);
    CHECK(xs0[0].is_trivial());

    auto xs = short_chars(F, 1);
    REQUIRE(xs.size() == 2);
    const ShortIntervalChar& nt = xs[0].is_trivial() ? xs[1] : xs[0];
    // the nontrivial one maps monic A to (-1)^{a_{deg-1}}
    for (int n = 1; n <= 5; ++n)
        for_each_monic(F, n, [&](const Poly& A) {
            const double expect = A.coeff(static_cast<std::size_t>(n - 1)) ? -1.0 : 1.0;
            CHECK(approx_eq(nt(F, A).value(), expect));
        });
    CHECK(nt.primitive_length(F));
    CHECK(nt.length(F) == 1);

    // well-definedness: value unchanged under perturbation below the top nu+1 coefficients
    const Field F3 = Field::prime(3);
    for (std::uint32_t nu : {1u, 2u, 3u}) {
        auto family = short_chars(F3, nu);
        CHECK(family.size() == pow_u64(3, nu));
        const auto& xi = family[family.size() - 1];
        std::uint64_t st = 12345;
        for (int trial = 0; trial < 200; ++trial) {
            st = st * 6364136223846793005ull + 1442695040888963407ull;
            const int n = static_cast<int>(nu) + 1 + static_cast<int>(st % 5);
            const std::uint64_t lo = pow_u64(3, static_cast<std::uint32_t>(n) - nu);
            const std::uint64_t block = (st >> 8) % pow_u64(3, nu);
            const Poly a = monic_of_index(F3, n, block * lo + (st >> 40) % lo);
            const Poly b = monic_of_index(F3, n, block * lo + (st >> 22) % lo);
            CHECK(approx_eq(xi(F3, a).value(), xi(F3, b).value()));
        }
    }
}

TEST_CASE("short interval characters are multiplicative") {
    for (std::uint32_t q : {2u, 3u}) {
        const Field F = Field::of_size(q);
        for (std::uint32_t nu : {1u, 2u, 3u}) {
            for (const auto& xi : short_chars(F, nu)) {
                std::uint64_t st = 777;
                for (int trial = 0; trial < 100; ++trial) {
                    st = st * 6364136223846793005ull + 1442695040888963407ull;
                    const int na = 1 + static_cast<int>(st % 5), nb = 1 + static_cast<int>((st >> 13) % 5);
                    const Poly A = monic_of_index(F, na, (st >> 20) % count_monics(F, na));
                    const Poly B = monic_of_index(F, nb, (st >> 40) % count_monics(F, nb));
                    const auto lhs = xi(F, poly_mul(F, A, B)).value();
                    const auto rhs = xi(F, A).value() * xi(F, B).value();
                    CHECK(approx_eq(lhs, rhs));
                }
            }
        }
    }
}

TEST_CASE("additive character") {
    const Field F = Field::prime(2);
    CHECK(additive_char(F, poly_zero(), poly_t()).is_one());
    // e_F(1/t) = -1 over F_2
    CHECK(approx_eq(additive_char(F, poly_one(), poly_t()).value(), -1.0));

    // periodicity and additivity, exhaustive deg Q <= 3, q in {2,3}
    for (std::uint32_t q : {2u, 3u}) {
        const Field Fq = Field::of_size(q);
        for (int n = 1; n <= 3; ++n) {
            for_each_monic(Fq, n, [&](const Poly& Q) {
                const std::uint64_t R = pow_u64(q, static_cast<std::uint32_t>(n));
                for (std::uint64_t i = 0; i < R; ++i) {
                    const Poly A = lex_unrank(Fq, i);
                    const auto vA = additive_char(Fq, A, Q).value();
                    CHECK(approx_eq(additive_char(Fq, poly_add(Fq, A, Q), Q).value(), vA));
                    for (std::uint64_t j = 0; j < R; ++j) {
                        const Poly B = lex_unrank(Fq, j);
                        const auto lhs = additive_char(Fq, poly_add(Fq, A, B), Q).value();
                        CHECK(approx_eq(lhs, vA * additive_char(Fq, B, Q).value()));
                    }
                }
            });
        }
    }
}

TEST_CASE("additive character completeness") {
    // sum_{A mod Q} e_F(AB/Q) = q^{deg Q} iff Q | B else 0
    for (std::uint32_t q : {2u, 3u}) {
        const Field F = Field::of_size(q);
        for (int n = 1; n <= 2; ++n) {
            for_each_monic(F, n, [&](const Poly& Q) {
                const std::uint64_t R = pow_u64(q, static_cast<std::uint32_t>(n));
                for (std::uint64_t j = 0; j < 2 * R; ++j) {
                    const Poly B = lex_unrank(F, j);
                    std::complex<double> s = 0.0;
                    for (std::uint64_t i = 0; i < R; ++i)
                        s += additive_char(F, poly_mul(F, lex_unrank(F, i), B), Q).value();
                    const double expect = poly_divides(F, Q, B) ? static_cast<double>(R) : 0.0;
                    CHECK(approx_eq(s, expect, 1e-8));
                }
            });
        }
    }
}

TEST_CASE("archimedean twist") {
    ArchimedeanTwist tw{Phase::of(RootOfUnity::make(1, 2))};
    CHECK(approx_eq(tw(poly_of({1, 1, 0, 1})).value(), -1.0));  // deg 3, e(3/2) = -1
    CHECK(tw(poly_zero()).is_zero());
    CHECK(tw(poly_one()).is_one());
}

TEST_CASE("extension field F_4: characters, orthogonality, gauss magnitude") {
    const Field F4 = Field::extension(2, 2);
    auto chars = characters(F4, poly_t());
    REQUIRE(chars.size() == 3);  // units mod t = F_4^x, cyclic C3
    for (const auto& chi : chars) {
        std::complex<double> s = 0.0;
        for (std::uint64_t i = 0; i < 4; ++i) s += chi.value(F4, lex_unrank(F4, i));
        CHECK(approx_eq(s, chi.is_principal() ? 3.0 : 0.0));
        if (chi.is_principal()) continue;
        CHECK(is_primitive(F4, chi));
        // |tau(chi)| = q^{deg Q / 2} = 2
        std::complex<double> tau = 0.0;
        for (std::uint64_t a = 1; a < 4; ++a) {
            const Poly A = poly_const(static_cast<std::uint32_t>(a));
            tau += chi.value(F4, A) * additive_char(F4, A, poly_t()).value();
        }
        CHECK(std::abs(std::abs(tau) - 2.0) < 1e-9);
    }
}

TEST_CASE("character values are exact roots of unity dividing the group exponent") {
    const Field F = Field::prime(3);
    const Poly Q = poly_of({0, 1, 1});  // t^2+t = t(t+1)
    auto G = unit_group(F, Q);
    const std::uint64_t expnt = G->orders.empty() ? 1 : G->orders[0];
    for (const auto& chi : characters(F, Q)) {
        for (std::uint64_t idx : G->unit_ids) {
            const UnitVal v = chi(F, lex_unrank(F, idx));
            REQUIRE(v.exact());
            CHECK(expnt % static_cast<std::uint64_t>(v.phase().root().den) == 0);
        }
    }
}
