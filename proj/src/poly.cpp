#include "ffdisc/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ffdisc {

Poly poly_tpow(std::size_t n) {
    Poly r;
    r.c.assign(n + 1, 0);
    r.c[n] = 1;
    return r;
}

Poly poly_of(std::vector<std::uint32_t> coeffs) {
    Poly r{std::move(coeffs)};
    r.trim();
    return r;
}

void check_coeffs(const Field& F, const Poly& a) {
    for (std::uint32_t x : a.c)
        if (x >= F.q()) throw std::invalid_argument("poly: coefficient out of field range");
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
    check_coeffs(F, a);
    check_coeffs(F, b);
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(i), b.coeff(i));
    r.trim();
    return r;
}

Poly poly_neg(const Field& F, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = F.neg(x);
    return r;
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) { return poly_add(F, a, poly_neg(F, b)); }

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
    check_coeffs(F, a);
    check_coeffs(F, b);
    if (a.is_zero() || b.is_zero()) return {};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    r.trim();
    return r;
}

Poly poly_scale(const Field& F, const Poly& a, std::uint32_t s) {
    if (s == 0) return {};
    Poly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    r.trim();
    return r;
}

std::pair<Poly, Poly> poly_divrem(const Field& F, const Poly& a, const Poly& b) {
    check_coeffs(F, a);
    check_coeffs(F, b);
    if (b.is_zero()) throw std::domain_error("poly: division by zero");
    if (deg(a) < deg(b)) return {Poly{}, a};
    const std::uint32_t linv = F.inv(b.lead());
    Poly rem = a;
    Poly quo;
    quo.c.assign(a.c.size() - b.c.size() + 1, 0);
    for (int i = deg(a); i >= deg(b); --i) {
        const std::uint32_t top = rem.coeff(static_cast<std::size_t>(i));
        if (top == 0) continue;
        const std::uint32_t f = F.mul(top, linv);
        const std::size_t shift = static_cast<std::size_t>(i - deg(b));
        quo.c[shift] = f;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            rem.c[shift + j] = F.sub(rem.c[shift + j], F.mul(f, b.c[j]));
    }
    rem.trim();
    quo.trim();
    return {quo, rem};
}

Poly poly_mod(const Field& F, const Poly& a, const Poly& b) { return poly_divrem(F, a, b).second; }

Poly poly_div_exact(const Field& F, const Poly& a, const Poly& b) {
    auto [q, r] = poly_divrem(F, a, b);
    if (!r.is_zero()) throw std::logic_error("poly: inexact division");
    return q;
}

bool poly_divides(const Field& F, const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return poly_mod(F, a, d).is_zero();
}

Poly poly_make_monic(const Field& F, const Poly& a) {
    if (a.is_zero()) return a;
    if (a.lead() == 1) return a;
    return poly_scale(F, a, F.inv(a.lead()));
}

Poly poly_gcd(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("poly: gcd(0,0)");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = poly_mod(F, x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return poly_make_monic(F, x);
}

Poly poly_lcm(const Field& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const Poly g = poly_gcd(F, a, b);
    return poly_make_monic(F, poly_mul(F, poly_div_exact(F, a, g), b));
}

Poly poly_pow(const Field& F, const Poly& a, std::uint64_t e) {
    Poly r = poly_one(), b = a;
    while (e) {
        if (e & 1) r = poly_mul(F, r, b);
        b = poly_mul(F, b, b);
        e >>= 1;
    }
    return r;
}

Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& mod) {
    Poly r = poly_mod(F, poly_one(), mod);
    base = poly_mod(F, base, mod);
    while (e) {
        if (e & 1) r = poly_mod(F, poly_mul(F, r, base), mod);
        base = poly_mod(F, poly_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

Poly poly_derivative(const Field& F, const Poly& a) {
    Poly r;
    if (a.c.size() <= 1) return r;
    r.c.assign(a.c.size() - 1, 0);
    for (std::size_t i = 1; i < a.c.size(); ++i) {
        // i * a_i in F_q: i reduced mod p
        const std::uint32_t m = static_cast<std::uint32_t>(i % F.p());
        std::uint32_t s = 0;
        for (std::uint32_t j = 0; j < m; ++j) s = F.add(s, a.c[i]);
        r.c[i - 1] = s;
    }
    r.trim();
    return r;
}

std::uint32_t poly_eval(const Field& F, const Poly& a, std::uint32_t x) {
    std::uint32_t r = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

std::uint64_t lex_index(const Field& F, const Poly& a) {
    check_coeffs(F, a);
    std::uint64_t n = 0;
    for (std::size_t i = a.c.size(); i-- > 0;) n = n * F.q() + F.size_of(a.c[i]);
    return n;
}

Poly lex_unrank(const Field& F, std::uint64_t n) {
    Poly r;
    while (n) {
        r.c.push_back(F.elem_of_size(static_cast<std::uint32_t>(n % F.q())));
        n /= F.q();
    }
    r.trim();
    return r;
}

bool lex_less(const Field& F, const Poly& a, const Poly& b) {
    if (deg(a) != deg(b)) return deg(a) < deg(b);
    for (std::size_t i = a.c.size(); i-- > 0;) {
        const std::uint32_t sa = F.size_of(a.c[i]), sb = F.size_of(b.c[i]);
        if (sa != sb) return sa < sb;
    }
    return false;
}

}  // namespace ffdisc
