#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "ffdisc/field.hpp"

namespace ffdisc {

// deg 0 = -infinity, so that "deg M < n" for n <= 0 admits only M = 0.
inline constexpr int kNegInfDeg = std::numeric_limits<int>::min() / 2;

// Coefficient vector over F_q, ascending, no trailing zeros.
struct Poly {
    std::vector<std::uint32_t> c;

    bool is_zero() const { return c.empty(); }
    std::uint32_t coeff(std::size_t i) const { return i < c.size() ? c[i] : 0u; }
    std::uint32_t lead() const { return c.empty() ? 0u : c.back(); }
    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool operator==(const Poly&) const = default;
};

inline int deg(const Poly& a) { return a.is_zero() ? kNegInfDeg : static_cast<int>(a.c.size()) - 1; }
inline bool is_monic(const Poly& a) { return a.lead() == 1; }
inline bool is_one(const Poly& a) { return a.c.size() == 1 && a.c[0] == 1; }

inline Poly poly_zero() { return {}; }
inline Poly poly_one() { return {{1}}; }
inline Poly poly_const(std::uint32_t v) { return v == 0 ? Poly{} : Poly{{v}}; }
inline Poly poly_t() { return {{0, 1}}; }
// t^n
Poly poly_tpow(std::size_t n);
Poly poly_of(std::vector<std::uint32_t> coeffs);

void check_coeffs(const Field& F, const Poly& a);

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, std::uint32_t s);
// quotient and remainder; b != 0
std::pair<Poly, Poly> poly_divrem(const Field& F, const Poly& a, const Poly& b);
Poly poly_mod(const Field& F, const Poly& a, const Poly& b);
Poly poly_div_exact(const Field& F, const Poly& a, const Poly& b);
bool poly_divides(const Field& F, const Poly& d, const Poly& a);
// monic gcd; inputs not both zero
Poly poly_gcd(const Field& F, const Poly& a, const Poly& b);
// ab/(a,b), monic-normalized
Poly poly_lcm(const Field& F, const Poly& a, const Poly& b);
Poly poly_make_monic(const Field& F, const Poly& a);
Poly poly_pow(const Field& F, const Poly& a, std::uint64_t e);
Poly poly_powmod(const Field& F, Poly base, std::uint64_t e, const Poly& mod);
Poly poly_derivative(const Field& F, const Poly& a);
std::uint32_t poly_eval(const Field& F, const Poly& a, std::uint32_t x);

// lexicographic index <.> under the field's element order, and its inverse
std::uint64_t lex_index(const Field& F, const Poly& a);
Poly lex_unrank(const Field& F, std::uint64_t n);
// total order by <.>
bool lex_less(const Field& F, const Poly& a, const Poly& b);

}  // namespace ffdisc
