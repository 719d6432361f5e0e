#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "ffdisc/multfn.hpp"

namespace ffdisc {

// Coefficients of L(z,chi) = sum_n (sum_{M_n} chi) z^n (degree < deg Q for
// nonprincipal chi) and of its (1-z)-quotient, the polynomial with
// coefficients A_m = sum_{G in M_{<=m}} chi(G).
struct LPolynomial {
    std::vector<std::complex<double>> L;  // L_n, 0 <= n < deg Q
    std::vector<std::complex<double>> A;  // A_m = L_0 + ... + L_m

    std::complex<double> eval_L(std::complex<double> w) const;
    std::complex<double> eval_A(std::complex<double> w) const;
    // A_{deg Q - 1} = L(1); zero exactly when chi is trivial on constants
    std::complex<double> tail() const { return A.empty() ? std::complex<double>{1.0, 0.0} : A.back(); }
};
LPolynomial l_polynomial(const Field& F, const DirichletChar& chi);

// s_N = sum_{rad(D)|Q, deg D = N} f(D), generated by 1 / prod_{P|Q}(1 - f(P) z^{deg P});
// satisfies sum_j c_j s_{N-j} = 0 for N >= 1 with c = the product's coefficients.
struct DivisorSumSeq {
    std::vector<std::complex<double>> char_poly;  // c_0 = 1, ..., degree sum deg P
    std::vector<std::complex<double>> window;     // s_N, s_{N-1}, ...
    std::vector<std::complex<double>> cum_window; // cum_N, cum_{N-1}, ... (cum_j = s_0+...+s_j)
    std::int64_t N = 0;

    explicit DivisorSumSeq(const Field& F, const ModifiedChar& mc, std::size_t window_size);
    void step();  // advance N by one
    std::complex<double> s_at(std::int64_t j) const;    // j in the window
    std::complex<double> cum_at(std::int64_t j) const;  // cum_j, j in the window (j < 0 -> 0)
    // brute-force oracle: direct divisor enumeration
    static std::complex<double> direct(const Field& F, const ModifiedChar& mc, int Nval);
};

// Streaming evaluator of u_N = sum_{G in M_{<=N}} f(G) for a modified
// character with nonprincipal chi. Exact identity used for all N >= 0:
//   u_N = sum_{m < deg Q} A_m s_{N-m}  +  1_{N >= deg Q} * A_{deg Q - 1} * cum_{N - deg Q};
// the second term vanishes identically when chi is trivial on constants.
class LongSumStream {
  public:
    LongSumStream(const Field& F, const ModifiedChar& mc);
    std::complex<double> value() const;  // u_N at the current N
    std::int64_t n() const { return seq_.N; }
    void step();

  private:
    LPolynomial lp_;
    DivisorSumSeq seq_;
    int d_;  // deg Q
};

// single-N evaluation via companion-matrix power, O((w+2)^3 log N)
std::complex<double> long_sum_matpow(const Field& F, const ModifiedChar& mc, std::int64_t N);

}  // namespace ffdisc
