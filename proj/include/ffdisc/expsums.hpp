#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include "ffdisc/characters.hpp"

namespace ffdisc {

enum class RamanujanMethod { definition, moebius };

// c_G(H): definition sums e_F(AH/G) over invertible A mod G; moebius evaluates
// sum_{E|G} mu(G/E) q^{deg E} 1_{E|H}. Both are rational integers.
std::int64_t ramanujan(const Field& F, const Poly& G, const Poly& H,
                       RamanujanMethod method = RamanujanMethod::moebius);

struct CheckReport {
    bool hypotheses_ok = true;   // inputs satisfy the stated hypotheses
    bool holds = true;           // identity verified within tolerance
    double residual = 0.0;       // |lhs - rhs|
    std::string note;
};

// sum_{D|G} c_D(H) = q^{deg G} 1_{G|H}, exact
CheckReport ramanujan_divisor_identity(const Field& F, const Poly& G, const Poly& H);

// sum_{deg M < n} c_Q(M) by enumeration; phi(Q) for n <= 0 and 0 for n >= 1
std::int64_t ramanujan_interval_sum(const Field& F, const Poly& Q, int n);

// tau(chi, B) = sum_{A mod Q} chi(A) e_F(AB/Q)
std::complex<double> gauss(const Field& F, const DirichletChar& chi, const Poly& B);
inline std::complex<double> gauss(const Field& F, const DirichletChar& chi) {
    return gauss(F, chi, poly_one());
}

// tau(chi,B) = tau(chi*) chi*(Q2) conj(chi*)(B) phi((Q2,B)) mu(Q2/(Q2,B)) 1_{(Q,B)|Q2}
// for chi mod Q = Q1 Q2 induced by primitive chi* mod Q1, (Q1,Q2)=1, Q2 squarefree.
// Out-of-hypothesis inputs are evaluated anyway and reported, not rejected.
CheckReport gauss_imprimitive_check(const Field& F, const DirichletChar& chi, const Poly& B,
                                    double tol = 1e-9);

}  // namespace ffdisc
