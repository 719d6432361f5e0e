#include "ffdisc/expsums.hpp"

#include <cmath>
#include <stdexcept>

#include "ffdisc/enumerate.hpp"

namespace ffdisc {

namespace {

std::int64_t round_to_integer(std::complex<double> z, const char* what) {
    if (std::abs(z.imag()) > kEqTol) throw std::logic_error(std::string(what) + ": nonreal value");
    const double r = std::round(z.real());
    if (std::abs(z.real() - r) > kEqTol) throw std::logic_error(std::string(what) + ": noninteger value");
    return static_cast<std::int64_t>(r);
}

}  // namespace

std::int64_t ramanujan(const Field& F, const Poly& G, const Poly& H, RamanujanMethod method) {
    if (G.is_zero()) throw std::domain_error("ramanujan: zero modulus");
    const Poly Gm = poly_make_monic(F, G);
    if (deg(Gm) == 0) return 1;  // c_1(H) = empty product convention: single A = 0 term, e_F(0) = 1
    if (method == RamanujanMethod::definition) {
        KahanSum s;
        const std::uint64_t R = pow_u64(F.q(), static_cast<std::uint32_t>(deg(Gm)));
        for (std::uint64_t i = 0; i < R; ++i) {
            const Poly A = lex_unrank(F, i);
            if (deg(poly_gcd(F, A.is_zero() ? Gm : A, Gm)) != 0) continue;
            s.add(additive_char(F, poly_mul(F, A, H), Gm).value());
        }
        return round_to_integer(s.get(), "ramanujan");
    }
    // moebius: sum over monic divisors E of G with E | H of mu(G/E) q^{deg E}
    std::int64_t acc = 0;
    for (const Poly& E : monic_divisors(F, Gm)) {
        if (!poly_divides(F, E, H)) continue;
        const int mu = moebius(F, poly_div_exact(F, Gm, E));
        if (mu == 0) continue;
        acc += static_cast<std::int64_t>(mu) *
               static_cast<std::int64_t>(pow_u64(F.q(), static_cast<std::uint32_t>(deg(E))));
    }
    return acc;
}

CheckReport ramanujan_divisor_identity(const Field& F, const Poly& G, const Poly& H) {
    if (G.is_zero()) throw std::domain_error("ramanujan_divisor_identity: zero modulus");
    const Poly Gm = poly_make_monic(F, G);
    std::int64_t lhs = 0;
    for (const Poly& D : monic_divisors(F, Gm)) lhs += ramanujan(F, D, H);
    const std::int64_t rhs =
        poly_divides(F, Gm, H)
            ? static_cast<std::int64_t>(pow_u64(F.q(), static_cast<std::uint32_t>(deg(Gm))))
            : 0;
    CheckReport rep;
    rep.holds = lhs == rhs;
    rep.residual = static_cast<double>(std::llabs(lhs - rhs));
    return rep;
}

std::int64_t ramanujan_interval_sum(const Field& F, const Poly& Q, int n) {
    if (deg(Q) < 1) throw std::invalid_argument("ramanujan_interval_sum: deg Q >= 1 required");
    // deg M < n admits only M = 0 when n <= 0
    if (n <= 0) return ramanujan(F, Q, poly_zero());
    std::int64_t acc = 0;
    const std::uint64_t total = pow_u64(F.q(), static_cast<std::uint32_t>(n));
    for (std::uint64_t i = 0; i < total; ++i) acc += ramanujan(F, Q, lex_unrank(F, i));
    return acc;
}

std::complex<double> gauss(const Field& F, const DirichletChar& chi, const Poly& B) {
    const Poly& Q = chi.modulus();
    KahanSum s;
    for (std::uint64_t idx : chi.group().unit_ids) {
        const Poly A = lex_unrank(F, idx);
        s.add(chi.value(F, A) * additive_char(F, poly_mul(F, A, B), Q).value());
    }
    return s.get();
}

CheckReport gauss_imprimitive_check(const Field& F, const DirichletChar& chi, const Poly& B,
                                    double tol) {
    CheckReport rep;
    if (B.is_zero()) {
        rep.hypotheses_ok = false;
        rep.note = "B must be nonzero";
        return rep;
    }
    const Poly& Q = chi.modulus();
    const Poly Q1 = conductor(F, chi);
    const Poly Q2 = poly_div_exact(F, Q, Q1);
    if (deg(Q1) == 0) {
        rep.hypotheses_ok = false;
        rep.note = "chi is principal";
    }
    if (deg(poly_gcd(F, Q1, Q2)) != 0) {
        rep.hypotheses_ok = false;
        rep.note = rep.note.empty() ? "(Q1,Q2) != 1" : rep.note + "; (Q1,Q2) != 1";
    }
    if (deg(Q2) > 0 && moebius(F, Q2) == 0) {
        rep.hypotheses_ok = false;
        rep.note = rep.note.empty() ? "Q2 not squarefree" : rep.note + "; Q2 not squarefree";
    }

    const std::complex<double> lhs = gauss(F, chi, B);
    std::complex<double> rhs = 0.0;
    if (deg(Q1) >= 1 && poly_divides(F, poly_gcd(F, Q, B), Q2)) {
        const DirichletChar chi_star = primitive_part(F, chi);
        const Poly g2B = poly_gcd(F, Q2, B);
        const std::complex<double> tau_star = gauss(F, chi_star, poly_one());
        rhs = tau_star * chi_star.value(F, Q2) * std::conj(chi_star.value(F, B)) *
              static_cast<double>(euler_phi(F, g2B)) *
              static_cast<double>(moebius(F, poly_div_exact(F, Q2, g2B)));
    }
    rep.residual = std::abs(lhs - rhs);
    rep.holds = rep.residual <= tol;
    if (!rep.hypotheses_ok && !rep.holds && rep.note.find("violated") == std::string::npos)
        rep.note += "; hypothesis-violated disagreement";
    return rep;
}

}  // namespace ffdisc
