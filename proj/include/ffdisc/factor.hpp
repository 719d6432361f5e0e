#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ffdisc/poly.hpp"

namespace ffdisc {

// unit * product of prime powers; factors canonically ordered by (degree, lex index)
struct Factorization {
    std::uint32_t unit = 1;
    std::vector<std::pair<Poly, int>> factors;
};

// Deterministic factorization: squarefree split, distinct-degree split, then
// derandomized equal-degree splitting (candidates walked in lex order from the
// given seed offset). g != 0.
Factorization factor(const Field& F, const Poly& g, std::uint64_t seed = 0);
Poly rebuild(const Field& F, const Factorization& fac);

// standard arithmetic functions on monic polynomials; all expect g != 0
int big_lambda(const Field& F, const Poly& g);              // deg P on prime powers, else 0
int omega(const Field& F, const Poly& g);                   // distinct irreducible divisors
int liouville(const Field& F, const Poly& g);               // (-1)^{Omega}
int moebius(const Field& F, const Poly& g);                 // 0 on non-squarefree
std::uint64_t euler_phi(const Field& F, const Poly& g);     // |(F_q[t]/g)^x|
Poly rad(const Field& F, const Poly& g);
int nu_p(const Field& F, const Poly& P, const Poly& g);     // multiplicity of P in g

// same, from a precomputed factorization
std::uint64_t euler_phi(const Field& F, const Factorization& fac);

}  // namespace ffdisc
