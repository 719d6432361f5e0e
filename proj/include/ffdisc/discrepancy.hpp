#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "ffdisc/multfn.hpp"
#include "ffdisc/recurrence.hpp"
#include "ffdisc/spectrum.hpp"

namespace ffdisc {

inline constexpr int kMaxWorkDeg = 44;

// Allocation-free complex evaluator for the scan kernels. The modified-
// character base gets a residue table for chi and digit tables for the xi
// parts; other bases fall back to the exact MultFn path.
class FastEval {
  public:
    FastEval(const Field& F, const MultFn& f);
    // monic input as a coefficient array c[0..n], c[n] == 1
    std::complex<double> monic(const std::uint32_t* c, int n) const;
    // any nonzero input
    std::complex<double> any(const std::uint32_t* c, int n) const;
    std::complex<double> monic(const Poly& G) const;
    std::complex<double> any(const Poly& G) const;

  private:
    const Field& F_;
    MultFn f_;  // kept for the slow path
    bool fast_ = false;
    std::vector<std::vector<std::uint32_t>> prime_coeffs_;
    std::vector<std::complex<double>> twist_vals_;
    std::vector<std::uint32_t> Qc_;
    std::vector<std::complex<double>> chi_table_;    // by residue lex index
    std::vector<std::complex<double>> const_table_;  // chi on constants
    struct XiTab {
        std::uint32_t nu;
        bool conj;
        std::vector<std::complex<double>> tab;  // by tail digit id
    };
    std::vector<XiTab> xi_;
    std::vector<std::complex<double>> theta_pow_;
};

// f over M_N, indexed by monic lex offset; filled with the chunked
// deterministic scheme (bit-stable across worker counts)
struct DegreeValues {
    int N = 0;
    std::vector<std::complex<double>> v;
    DegreeValues(const Field& F, const MultFn& f, int N, bool parallel = true);
};

// ---- long sums -------------------------------------------------------------

// sum_{G in M_{<=N}} f(G) by enumeration
std::complex<double> long_sum_brute(const Field& F, const MultFn& f, int N, bool parallel = true);

// the same through the A_m / s_N identity (chi nonprincipal); O(N deg Q)
std::complex<double> long_sum_closed(const Field& F, const ModifiedChar& mc, std::int64_t N);

// running maxima of |u_n|, n <= N, sampled at dyadic n = 2^lo..2^hi, plus the
// least-squares slope of log max against log n
struct DyadicFit {
    std::vector<double> running_max;  // at n = 2^lo, ..., 2^hi
    double slope = 0.0;
    double overall_max = 0.0;  // max over all n <= 2^hi
};
DyadicFit dyadic_growth_fit(const Field& F, const ModifiedChar& mc, int lo_exp, int hi_exp);

// max_{n <= N} |long_sum_closed(n)|
double long_sum_running_max(const Field& F, const ModifiedChar& mc, std::int64_t N);
// max over n in [from, N]
double long_sum_running_max_from(const Field& F, const ModifiedChar& mc, std::int64_t from,
                                 std::int64_t N);

// ---- short sums ------------------------------------------------------------

// sum over I_H(G0) by enumeration
std::complex<double> short_sum(const Field& F, const MultFn& f, const Poly& G0, int H);

struct ScanPoint {
    int H = 0;
    int N = 0;
    double sup = 0.0;             // max over G0 in M_N of |short interval sum|
    std::complex<double> value;   // the maximizing interval sum itself
    std::uint64_t arg_block = 0;  // block index of a maximizing interval
};
ScanPoint short_scan(const Field& F, const DegreeValues& vals, int H);
ScanPoint short_scan(const Field& F, const MultFn& f, int H, int N, bool parallel = true);

// T = q^{-N} sum_{G0 in M_N} |sum_{deg M < H} f(G0+M)|^2
double mean_square_T(const Field& F, const DegreeValues& vals, int H);
double mean_square_T(const Field& F, const MultFn& f, int H, int N, bool parallel = true);

// the mean-square lower-bound expression
//   phi(Q)/q^{deg Q} (phi(Q_S)/q^{deg Q_S})^2 prod_{P|Q_S} |1 - f conj(chi*)(P) q^{-deg P}|^{-2}
//   * (q^H sum_{rad D | Q, deg D >= H} q^{-deg D})
struct MeanSquareBound {
    double value = 0.0;
    bool hypotheses_ok = true;  // Q/Q* squarefree and coprime to Q*
    int slack = 0;              // N - (H deg Q + 10), reported by callers
};
MeanSquareBound lemma_lower_bound(const Field& F, const ModifiedChar& mc, int H);

// sum_{M in M_{<H}} f(M) for f = (modified char mod P^r) * xi * e_theta via the
// prime-power reduction; pairs the formula with the enumeration oracle
struct PrimePowerShortSum {
    std::complex<double> formula;
    std::complex<double> enumeration;
    bool hypotheses_ok = true;
    std::string note;
};
PrimePowerShortSum prime_power_short_formula(const Field& F, const MultFn& f, int H);

// ---- lexicographic sums ----------------------------------------------------

// S_N over monics (domain_monic) or all of F_q[t]; sums f over <G> < N
std::complex<double> lex_sum(const Field& F, const MultFn& f, std::uint64_t N, bool domain_monic,
                             bool parallel = true);

struct GrowthRecord {
    std::uint64_t n;
    double value;
};
// strictly increasing running maxima of |S_n^M(f)|, n <= budget
std::vector<GrowthRecord> lex_growth_witness(const Field& F, const MultFn& f, std::uint64_t budget);

}  // namespace ffdisc
