#include "ffdisc/factor.hpp"

#include <algorithm>
#include <stdexcept>

#include "ffdisc/enumerate.hpp"

namespace ffdisc {

namespace {

// f = g(t^p) -> g, via the p-th root a^(q/p) of each coefficient
Poly pth_root_decimate(const Field& F, const Poly& f) {
    const std::uint32_t p = F.p();
    Poly g;
    g.c.assign(f.c.size() / p + 1, 0);
    const std::uint64_t e = F.q() / F.p();  // Frobenius inverse exponent
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] == 0) continue;
        if (i % p != 0) throw std::logic_error("pth_root_decimate: not a p-th power");
        g.c[i / p] = F.pow(f.c[i], e);
    }
    g.trim();
    return g;
}

// squarefree decomposition of monic f: list of (squarefree part, multiplicity)
void squarefree_decomp(const Field& F, const Poly& f, int mult,
                       std::vector<std::pair<Poly, int>>& out) {
    if (is_one(f)) return;
    const Poly d = poly_derivative(F, f);
    if (d.is_zero()) {
        // f = g(t^p): multiplicities scale by p
        squarefree_decomp(F, pth_root_decimate(F, f), mult * static_cast<int>(F.p()), out);
        return;
    }
    Poly c = poly_gcd(F, f, d);
    Poly w = poly_div_exact(F, f, c);
    // w is the product of irreducibles with multiplicity not divisible by p
    int i = 1;
    while (!is_one(w)) {
        Poly y = poly_gcd(F, w, c);
        Poly part = poly_div_exact(F, w, y);
        if (deg(part) > 0) out.emplace_back(part, mult * i);
        w = std::move(y);
        c = poly_div_exact(F, c, w);
        ++i;
    }
    // remaining c is a p-th power
    if (!is_one(c)) squarefree_decomp(F, pth_root_decimate(F, c), mult * static_cast<int>(F.p()), out);
}

// distinct-degree split of squarefree monic f: (product of degree-d primes, d)
std::vector<std::pair<Poly, int>> ddf(const Field& F, Poly f) {
    std::vector<std::pair<Poly, int>> out;
    Poly h = poly_mod(F, poly_t(), f);
    int d = 0;
    while (deg(f) >= 2 * (d + 1)) {
        ++d;
        h = poly_powmod(F, h, F.q(), f);
        Poly g = poly_gcd(F, poly_sub(F, h, poly_t()), f);
        if (deg(g) > 0) {
            out.emplace_back(g, d);
            f = poly_div_exact(F, f, g);
            h = poly_mod(F, h, f);
        }
    }
    if (deg(f) > 0) out.emplace_back(f, deg(f));
    return out;
}

// split a product of r >= 2 distinct degree-d primes; derandomized: candidate
// polynomials are walked in lex order starting from the seed offset
void edf(const Field& F, const Poly& f, int d, std::uint64_t seed, std::vector<Poly>& out) {
    if (deg(f) == d) {
        out.push_back(f);
        return;
    }
    const int n = deg(f);
    const std::uint64_t q = F.q();
    std::uint64_t cand_idx = 2 + seed;  // skip constants
    for (;;) {
        Poly u = lex_unrank(F, cand_idx);
        ++cand_idx;
        if (deg(u) >= n) throw std::logic_error("edf: candidate space exhausted");
        Poly g;
        if (F.p() == 2) {
            // trace map sum_{i<k*d} u^(2^i) splits in characteristic 2
            Poly tr = poly_mod(F, u, f);
            Poly x = tr;
            const std::uint32_t bits = F.k() * static_cast<std::uint32_t>(d);
            for (std::uint32_t i = 1; i < bits; ++i) {
                x = poly_mod(F, poly_mul(F, x, x), f);
                tr = poly_add(F, tr, x);
            }
            if (tr.is_zero() || deg(tr) == 0) continue;
            g = poly_gcd(F, tr, f);
        } else {
            // u^((q^d-1)/2) - 1
            std::uint64_t e = 1;
            for (int i = 0; i < d; ++i) e *= q;
            e = (e - 1) / 2;
            Poly s = poly_powmod(F, u, e, f);
            Poly sm1 = poly_sub(F, s, poly_one());
            if (sm1.is_zero()) continue;
            g = poly_gcd(F, sm1, f);
        }
        if (deg(g) > 0 && deg(g) < n) {
            edf(F, g, d, seed, out);
            edf(F, poly_div_exact(F, f, g), d, seed, out);
            return;
        }
    }
}

}  // namespace

Factorization factor(const Field& F, const Poly& g, std::uint64_t seed) {
    if (g.is_zero()) throw std::domain_error("factor: zero input");
    check_coeffs(F, g);
    Factorization fac;
    fac.unit = g.lead();
    Poly f = poly_make_monic(F, g);
    if (is_one(f)) return fac;
    std::vector<std::pair<Poly, int>> sf;
    squarefree_decomp(F, f, 1, sf);
    for (const auto& [part, mult] : sf) {
        for (const auto& [prod, d] : ddf(F, part)) {
            std::vector<Poly> primes;
            edf(F, prod, d, seed, primes);
            for (Poly& P : primes) fac.factors.emplace_back(std::move(P), mult);
        }
    }
    std::sort(fac.factors.begin(), fac.factors.end(),
              [&F](const std::pair<Poly, int>& a, const std::pair<Poly, int>& b) {
                  return lex_less(F, a.first, b.first);
              });
    return fac;
}

Poly rebuild(const Field& F, const Factorization& fac) {
    Poly r = poly_const(fac.unit);
    for (const auto& [P, e] : fac.factors) r = poly_mul(F, r, poly_pow(F, P, static_cast<std::uint64_t>(e)));
    return r;
}

int big_lambda(const Field& F, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("big_lambda: zero input");
    const auto fac = factor(F, g);
    if (fac.factors.size() == 1) return deg(fac.factors[0].first);
    return 0;
}

int omega(const Field& F, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("omega: zero input");
    return static_cast<int>(factor(F, g).factors.size());
}

int liouville(const Field& F, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("liouville: zero input");
    int big_omega = 0;
    for (const auto& [P, e] : factor(F, g).factors) big_omega += e;
    return big_omega % 2 == 0 ? 1 : -1;
}

int moebius(const Field& F, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("moebius: zero input");
    const auto fac = factor(F, g);
    for (const auto& [P, e] : fac.factors)
        if (e > 1) return 0;
    return fac.factors.size() % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(const Field& F, const Factorization& fac) {
    std::uint64_t r = 1;
    for (const auto& [P, e] : fac.factors) {
        const std::uint64_t pd = pow_u64(F.q(), static_cast<std::uint32_t>(deg(P)));
        std::uint64_t t = pd - 1;
        for (int i = 1; i < e; ++i) t *= pd;
        r *= t;
    }
    return r;
}

std::uint64_t euler_phi(const Field& F, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("euler_phi: zero input");
    return euler_phi(F, factor(F, g));
}

Poly rad(const Field& F, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("rad: zero input");
    Poly r = poly_one();
    for (const auto& [P, e] : factor(F, g).factors) r = poly_mul(F, r, P);
    return r;
}

int nu_p(const Field& F, const Poly& P, const Poly& g) {
    if (g.is_zero()) throw std::domain_error("nu_p: zero input");
    int k = 0;
    Poly x = g;
    while (true) {
        auto [q, r] = poly_divrem(F, x, P);
        if (!r.is_zero()) break;
        x = std::move(q);
        ++k;
    }
    return k;
}

}  // namespace ffdisc
