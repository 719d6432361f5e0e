#include "ffdisc/discrepancy.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "ffdisc/enumerate.hpp"
#include "ffdisc/parallel.hpp"

namespace ffdisc {

namespace {

// in-place divrem of buf (degree n) by monic P; returns the quotient degree
// if divisible (quotient left in buf), or -1 if the remainder is nonzero
int divide_if_exact(const Field& F, std::uint32_t* buf, int n, const std::uint32_t* P, int dp) {
    if (n < dp) return -1;
    std::uint32_t tmp[kMaxWorkDeg + 1];
    std::memcpy(tmp, buf, sizeof(std::uint32_t) * static_cast<std::size_t>(n + 1));
    for (int i = n; i >= dp; --i) {
        const std::uint32_t c = tmp[i];
        if (c == 0) continue;
        for (int j = 0; j < dp; ++j) tmp[i - dp + j] = F.sub(tmp[i - dp + j], F.mul(c, P[j]));
        // tmp[i] becomes the quotient coefficient of t^{i-dp}
    }
    for (int j = 0; j < dp; ++j)
        if (tmp[j] != 0) return -1;
    for (int i = 0; i <= n - dp; ++i) buf[i] = tmp[i + dp];
    return n - dp;
}

// residue lex index of buf (degree n) mod monic Q of degree dq
std::uint64_t residue_index(const Field& F, const std::uint32_t* buf, int n, const std::uint32_t* Q,
                            int dq) {
    std::uint32_t tmp[kMaxWorkDeg + 1];
    const int top = std::max(n, dq - 1);
    for (int i = 0; i <= top; ++i) tmp[i] = i <= n ? buf[i] : 0u;
    for (int i = n; i >= dq; --i) {
        const std::uint32_t c = tmp[i];
        if (c == 0) continue;
        tmp[i] = 0;
        for (int j = 0; j < dq; ++j) tmp[i - dq + j] = F.sub(tmp[i - dq + j], F.mul(c, Q[j]));
    }
    std::uint64_t idx = 0;
    for (int i = dq; i-- > 0;) idx = idx * F.q() + F.size_of(tmp[i]);
    return idx;
}

Poly poly_from(const std::uint32_t* c, int n) {
    Poly g;
    g.c.assign(c, c + n + 1);
    g.trim();
    return g;
}

// odometer over the lower coefficients of a degree-n monic
struct MonicOdometer {
    const Field* F;
    int n;
    std::uint32_t sizes[kMaxWorkDeg + 1];
    std::uint32_t coeffs[kMaxWorkDeg + 1];

    void init(const Field& field, int degree, std::uint64_t offset) {
        F = &field;
        n = degree;
        for (int i = 0; i < n; ++i) {
            sizes[i] = static_cast<std::uint32_t>(offset % field.q());
            coeffs[i] = field.elem_of_size(sizes[i]);
            offset /= field.q();
        }
        coeffs[n] = 1;
        sizes[n] = field.size_of(1);
    }
    void advance() {
        for (int i = 0; i < n; ++i) {
            if (++sizes[i] < F->q()) {
                coeffs[i] = F->elem_of_size(sizes[i]);
                return;
            }
            sizes[i] = 0;
            coeffs[i] = F->elem_of_size(0);
        }
    }
};

}  // namespace

FastEval::FastEval(const Field& F, const MultFn& f) : F_(F), f_(f) {
    for (const auto& [xi, conj] : f.xi_parts()) {
        XiTab xt;
        xt.nu = xi.nu();
        xt.conj = conj;
        const std::uint64_t sz = pow_u64(F.q(), xt.nu);
        xt.tab.resize(sz);
        for (std::uint64_t id = 0; id < sz; ++id) {
            // tail id encodes a_1..a_nu as size digits of a synthetic monic
            Poly probe = poly_tpow(xt.nu);
            std::uint64_t x = id;
            for (std::uint32_t i = 1; i <= xt.nu; ++i) {
                probe.c[xt.nu - i] = static_cast<std::uint32_t>(x % F.q());
                x /= F.q();
            }
            std::complex<double> val = xi(F, probe).value();
            xt.tab[id] = conj ? std::conj(val) : val;
        }
        xi_.push_back(std::move(xt));
    }
    theta_pow_.resize(kMaxWorkDeg + 1);
    theta_pow_[0] = 1.0;
    const std::complex<double> th = f.theta().value();
    for (int i = 1; i <= kMaxWorkDeg; ++i) theta_pow_[static_cast<std::size_t>(i)] = theta_pow_[static_cast<std::size_t>(i - 1)] * th;

    if (f.base() == MultFn::Base::modified) {
        const ModifiedChar& mc = f.modchar();
        Qc_ = mc.Q.c;
        for (const auto& [P, v] : mc.twists) {
            prime_coeffs_.push_back(P.c);
            twist_vals_.push_back(v.value());
        }
        const int dq = deg(mc.Q);
        const std::uint64_t R = pow_u64(F.q(), static_cast<std::uint32_t>(dq));
        chi_table_.resize(R);
        for (std::uint64_t i = 0; i < R; ++i) chi_table_[i] = mc.chi.value(F_, lex_unrank(F_, i));
        const_table_.resize(F.q());
        for (std::uint32_t c = 0; c < F.q(); ++c)
            const_table_[c] = c == 0 ? 0.0 : mc.chi.value(F_, poly_const(c));
        fast_ = true;
    } else if (f.base() == MultFn::Base::one) {
        const_table_.assign(F.q(), 1.0);
        const_table_[0] = 0.0;
        fast_ = true;
    }
}

std::complex<double> FastEval::monic(const std::uint32_t* c, int n) const {
    if (n > kMaxWorkDeg) throw std::invalid_argument("FastEval: degree beyond working bound");
    if (!fast_) return f_.value(F_, poly_from(c, n));
    std::complex<double> v = theta_pow_[static_cast<std::size_t>(n)];
    for (const XiTab& xt : xi_) {
        std::uint64_t id = 0;
        for (std::uint32_t i = xt.nu; i >= 1; --i) {
            const std::uint32_t ci = static_cast<int>(i) <= n ? c[n - static_cast<int>(i)] : 0u;
            id = id * F_.q() + ci;
        }
        v *= xt.tab[id];
    }
    if (chi_table_.empty()) return v;  // base one
    std::uint32_t buf[kMaxWorkDeg + 1];
    std::memcpy(buf, c, sizeof(std::uint32_t) * static_cast<std::size_t>(n + 1));
    int m = n;
    for (std::size_t pi = 0; pi < prime_coeffs_.size(); ++pi) {
        const auto& P = prime_coeffs_[pi];
        const int dp = static_cast<int>(P.size()) - 1;
        for (;;) {
            const int nm = divide_if_exact(F_, buf, m, P.data(), dp);
            if (nm < 0) break;
            m = nm;
            v *= twist_vals_[pi];
        }
    }
    v *= chi_table_[residue_index(F_, buf, m, Qc_.data(), static_cast<int>(Qc_.size()) - 1)];
    return v;
}

std::complex<double> FastEval::any(const std::uint32_t* c, int n) const {
    if (!fast_) return f_.eval_any(F_, poly_from(c, n)).value();
    if (c[n] == 1) return monic(c, n);
    // normalize; the character part sees the constant
    const std::uint32_t lead = c[n];
    const std::uint32_t li = F_.inv(lead);
    std::uint32_t buf[kMaxWorkDeg + 1];
    for (int i = 0; i <= n; ++i) buf[i] = F_.mul(c[i], li);
    return monic(buf, n) * const_table_[lead];
}

std::complex<double> FastEval::monic(const Poly& G) const { return monic(G.c.data(), deg(G)); }
std::complex<double> FastEval::any(const Poly& G) const {
    if (G.is_zero()) return 0.0;
    return any(G.c.data(), deg(G));
}

DegreeValues::DegreeValues(const Field& F, const MultFn& f, int n, bool parallel) : N(n) {
    const FastEval fe(F, f);
    const std::uint64_t total = count_monics(F, n);
    v.resize(total);
    const std::uint64_t nchunks = (total + kChunk - 1) / kChunk;
#ifdef FFDISC_OPENMP
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
    for (std::int64_t ci = 0; ci < static_cast<std::int64_t>(nchunks); ++ci) {
        const std::uint64_t lo = static_cast<std::uint64_t>(ci) * kChunk;
        const std::uint64_t hi = std::min(total, lo + kChunk);
        MonicOdometer od;
        od.init(F, n, lo);
        for (std::uint64_t i = lo; i < hi; ++i, od.advance()) v[i] = fe.monic(od.coeffs, n);
    }
#ifndef FFDISC_OPENMP
    (void)parallel;
#endif
}

std::complex<double> long_sum_brute(const Field& F, const MultFn& f, int N, bool parallel) {
    const FastEval fe(F, f);
    std::complex<double> acc = 0.0;
    for (int n = 0; n <= N; ++n) {
        acc += chunked_sum(count_monics(F, n), parallel,
                           [&](std::uint64_t lo, std::uint64_t hi) {
                               MonicOdometer od;
                               od.init(F, n, lo);
                               std::complex<double> s = 0.0;
                               for (std::uint64_t i = lo; i < hi; ++i, od.advance())
                                   s += fe.monic(od.coeffs, n);
                               return s;
                           });
    }
    return acc;
}

std::complex<double> long_sum_closed(const Field& F, const ModifiedChar& mc, std::int64_t N) {
    if (N < 0) return 0.0;
    LongSumStream st(F, mc);
    for (std::int64_t i = 0; i < N; ++i) st.step();
    return st.value();
}

DyadicFit dyadic_growth_fit(const Field& F, const ModifiedChar& mc, int lo_exp, int hi_exp) {
    DyadicFit fit;
    LongSumStream st(F, mc);
    double run = std::abs(st.value());
    const std::int64_t top = std::int64_t{1} << hi_exp;
    std::int64_t next = std::int64_t{1} << lo_exp;
    for (std::int64_t n = 1; n <= top; ++n) {
        st.step();
        run = std::max(run, std::abs(st.value()));
        if (n == next) {
            fit.running_max.push_back(run);
            next <<= 1;
        }
    }
    fit.overall_max = run;
    // least squares of log max against log n over the dyadic points
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const int k = static_cast<int>(fit.running_max.size());
    for (int i = 0; i < k; ++i) {
        const double x = std::log(std::pow(2.0, lo_exp + i));
        const double y = std::log(std::max(fit.running_max[static_cast<std::size_t>(i)], 1e-300));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    fit.slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    return fit;
}

double long_sum_running_max_from(const Field& F, const ModifiedChar& mc, std::int64_t from,
                                 std::int64_t N) {
    // u_N satisfies sum_i h_i u_{N-i} = L_N with h = (1-z) prod_P (1 - f(P) z^{deg P})
    // and L_N = 0 for N >= deg Q, so the maximum streams in O(deg Q) per step
    const LPolynomial lp = l_polynomial(F, mc.chi);
    const DivisorSumSeq seq(F, mc, 4);
    std::vector<std::complex<double>> h(seq.char_poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < seq.char_poly.size(); ++i) {
        h[i] += seq.char_poly[i];
        h[i + 1] -= seq.char_poly[i];
    }
    const int d = deg(mc.Q);
    const std::size_t W = h.size();
    std::vector<std::complex<double>> u(W, 0.0);
    double best2 = 0.0;
    for (std::int64_t n = 0; n <= N; ++n) {
        std::complex<double> un = n < d ? lp.L[static_cast<std::size_t>(n)] : 0.0;
        const std::size_t lim = std::min<std::size_t>(W - 1, static_cast<std::size_t>(n));
        for (std::size_t i = 1; i <= lim; ++i)
            un -= h[i] * u[static_cast<std::size_t>((n - static_cast<std::int64_t>(i)) % static_cast<std::int64_t>(W))];
        u[static_cast<std::size_t>(n % static_cast<std::int64_t>(W))] = un;
        if (n >= from) best2 = std::max(best2, std::norm(un));
    }
    return std::sqrt(best2);
}

double long_sum_running_max(const Field& F, const ModifiedChar& mc, std::int64_t N) {
    return long_sum_running_max_from(F, mc, 0, N);
}

std::complex<double> short_sum(const Field& F, const MultFn& f, const Poly& G0, int H) {
    check_short_interval(F, G0, H);
    const FastEval fe(F, f);
    KahanSum s;
    const std::uint64_t total = pow_u64(F.q(), static_cast<std::uint32_t>(H));
    for (std::uint64_t j = 0; j < total; ++j) s.add(fe.monic(short_interval_member(F, G0, H, j)));
    return s.get();
}

ScanPoint short_scan(const Field& F, const DegreeValues& vals, int H) {
    if (H < 1 || H > vals.N) throw std::invalid_argument("short_scan: need 1 <= H <= N");
    const std::uint64_t bs = pow_u64(F.q(), static_cast<std::uint32_t>(H));
    const std::uint64_t blocks = vals.v.size() / bs;
    ScanPoint out;
    out.H = H;
    out.N = vals.N;
    // per-block interval sums; blocks are lex-aligned runs
    const MaxResult m = chunked_max(blocks, true, [&](std::uint64_t lo, std::uint64_t hi) {
        MaxResult best;
        bool first = true;
        for (std::uint64_t b = lo; b < hi; ++b) {
            std::complex<double> s = 0.0;
            const std::uint64_t base = b * bs;
            for (std::uint64_t j = 0; j < bs; ++j) s += vals.v[base + j];
            const double a = std::abs(s);
            if (first || a > best.value) {
                best.value = a;
                best.arg = b;
                first = false;
            }
        }
        return best;
    });
    out.sup = m.value;
    out.arg_block = m.arg;
    {
        std::complex<double> s = 0.0;
        const std::uint64_t base = m.arg * bs;
        for (std::uint64_t j = 0; j < bs; ++j) s += vals.v[base + j];
        out.value = s;
    }
    return out;
}

ScanPoint short_scan(const Field& F, const MultFn& f, int H, int N, bool parallel) {
    const DegreeValues vals(F, f, N, parallel);
    return short_scan(F, vals, H);
}

double mean_square_T(const Field& F, const DegreeValues& vals, int H) {
    if (H < 0 || H > vals.N) throw std::invalid_argument("mean_square_T: need 0 <= H <= N");
    if (H == 0) return 1.0;  // single-point windows of a unimodular f
    const std::uint64_t bs = pow_u64(F.q(), static_cast<std::uint32_t>(H));
    const std::uint64_t blocks = vals.v.size() / bs;
    // T = q^{H-N} sum_blocks |block sum|^2; accumulate via the chunked scheme
    const std::complex<double> acc =
        chunked_sum(blocks, true, [&](std::uint64_t lo, std::uint64_t hi) {
            std::complex<double> s = 0.0;
            for (std::uint64_t b = lo; b < hi; ++b) {
                std::complex<double> bsum = 0.0;
                const std::uint64_t base = b * bs;
                for (std::uint64_t j = 0; j < bs; ++j) bsum += vals.v[base + j];
                s += std::norm(bsum);
            }
            return s;
        });
    const double scale = std::pow(static_cast<double>(F.q()), H - vals.N);
    return acc.real() * scale;
}

double mean_square_T(const Field& F, const MultFn& f, int H, int N, bool parallel) {
    const DegreeValues vals(F, f, N, parallel);
    return mean_square_T(F, vals, H);
}

MeanSquareBound lemma_lower_bound(const Field& F, const ModifiedChar& mc, int H) {
    MeanSquareBound out;
    const Poly& Q = mc.Q;
    const Poly Qstar = mc.chi_star ? mc.chi_star->modulus() : poly_one();
    const Poly QS = poly_div_exact(F, Q, Qstar);
    if (deg(QS) > 0) {
        if (moebius(F, QS) == 0) out.hypotheses_ok = false;
        if (deg(poly_gcd(F, QS, Qstar)) != 0) out.hypotheses_ok = false;
    }
    const double q = static_cast<double>(F.q());
    double factor = static_cast<double>(euler_phi(F, Q)) / std::pow(q, deg(Q));
    if (deg(QS) > 0) {
        const double r = static_cast<double>(euler_phi(F, QS)) / std::pow(q, deg(QS));
        factor *= r * r;
        for (const auto& [P, fv] : mc.twists) {
            if (!poly_divides(F, P, QS)) continue;
            const std::complex<double> term =
                1.0 - fv.value() * std::conj(mc.chi_star ? mc.chi_star->value(F, P)
                                                         : std::complex<double>{1.0, 0.0}) *
                          std::pow(q, -deg(P));
            factor /= std::norm(term);
        }
    }
    // tail: q^H sum over rad(D)|Q, deg D >= H of q^{-deg D}; counts by DP
    std::vector<int> degs;
    for (const auto& [P, v] : mc.twists) degs.push_back(deg(P));
    const int cutoff = H + 420;
    std::vector<double> count(static_cast<std::size_t>(cutoff) + 1, 0.0);
    count[0] = 1.0;
    for (int d : degs)
        for (int m = d; m <= cutoff; ++m) count[static_cast<std::size_t>(m)] += count[static_cast<std::size_t>(m - d)];
    double tail = 0.0;
    for (int m = H; m <= cutoff; ++m)
        tail += count[static_cast<std::size_t>(m)] * std::pow(q, H - m);
    out.value = factor * tail;
    return out;
}

PrimePowerShortSum prime_power_short_formula(const Field& F, const MultFn& f, int H) {
    PrimePowerShortSum out;
    if (f.base() != MultFn::Base::modified) {
        out.hypotheses_ok = false;
        out.note = "needs a modified-character base";
        return out;
    }
    const ModifiedChar& mc = f.modchar();
    if (mc.twists.size() != 1) {
        out.hypotheses_ok = false;
        out.note = "modulus must be a prime power";
        return out;
    }
    if (!mc.chi_nonprincipal()) {
        out.hypotheses_ok = false;
        out.note = "chi must be nonprincipal";
        out.enumeration = H >= 1 ? long_sum_brute(F, f, H - 1, false) : 0.0;
        return out;
    }
    const Poly& P = mc.twists[0].first;
    const int dp = deg(P);
    const int r = nu_p(F, P, mc.Q);
    std::uint32_t nu = 0;
    for (const auto& [xi, conj] : f.xi_parts()) nu = std::max(nu, xi.length(F));
    const int B = static_cast<int>(nu) + r * dp;

    // f(P): the full function value at P
    const std::complex<double> fP = f.value(F, P);
    // evaluate chi * xi * e_theta on M' directly (chi vanishes when P | M')
    KahanSum formula;
    for (int j = 0; j < B; ++j) {
        for_each_monic(F, j, [&](const Poly& M) {
            std::complex<double> v = mc.chi.value(F, M);
            if (v == std::complex<double>{0.0, 0.0}) return;
            for (const auto& [xi, conj] : f.xi_parts()) {
                const std::complex<double> xv = xi(F, M).value();
                v *= conj ? std::conj(xv) : xv;
            }
            v *= f.theta().pow(j).value();
            // inner geometric piece: sum_{0 <= k < (H - j)/dp} fP^k
            std::complex<double> geo = 0.0, pw = 1.0;
            for (int k = 0; k * dp < H - j; ++k) {
                geo += pw;
                pw *= fP;
            }
            formula.add(v * geo);
        });
    }
    out.formula = formula.get();
    out.enumeration = H >= 1 ? long_sum_brute(F, f, H - 1, false) : 0.0;
    return out;
}

std::complex<double> lex_sum(const Field& F, const MultFn& f, std::uint64_t N, bool domain_monic,
                             bool parallel) {
    const FastEval fe(F, f);
    if (domain_monic) {
        // monics of degree m occupy the lex run [<1> q^m, <1> q^m + q^m)
        const std::uint64_t s1 = F.size_of(1);
        std::complex<double> acc = 0.0;
        for (int m = 0; m <= kMaxWorkDeg; ++m) {
            const std::uint64_t qm = pow_u64(F.q(), static_cast<std::uint32_t>(m));
            if (qm > N) break;  // s1 >= 1, so s1 q^m >= q^m > N ends the walk
            const std::uint64_t start = s1 * qm;
            if (start >= N) continue;
            const std::uint64_t cnt = std::min(qm, N - start);
            acc += chunked_sum(cnt, parallel, [&](std::uint64_t lo, std::uint64_t hi) {
                MonicOdometer od;
                od.init(F, m, lo);
                std::complex<double> s = 0.0;
                for (std::uint64_t i = lo; i < hi; ++i, od.advance()) s += fe.monic(od.coeffs, m);
                return s;
            });
        }
        return acc;
    }
    // all polynomials with <M> < N; index 0 is the zero polynomial (f = 0)
    return chunked_sum(N, parallel, [&](std::uint64_t lo, std::uint64_t hi) {
        std::complex<double> s = 0.0;
        for (std::uint64_t i = std::max<std::uint64_t>(lo, 1); i < hi; ++i) {
            const Poly M = lex_unrank(F, i);
            s += fe.any(M.c.data(), deg(M));
        }
        return s;
    });
}

std::vector<GrowthRecord> lex_growth_witness(const Field& F, const MultFn& f, std::uint64_t budget) {
    const FastEval fe(F, f);
    std::vector<GrowthRecord> records;
    // stream over monic lex indices only: between them |S_n| is constant
    const std::uint64_t s1 = F.size_of(1);
    std::complex<double> acc = 0.0;
    double best = 0.0;
    for (int m = 0; m <= kMaxWorkDeg; ++m) {
        const std::uint64_t qm = pow_u64(F.q(), static_cast<std::uint32_t>(m));
        const std::uint64_t start = s1 * qm;
        if (start >= budget) break;
        const std::uint64_t cnt = std::min(qm, budget - start);
        MonicOdometer od;
        od.init(F, m, 0);
        for (std::uint64_t j = 0; j < cnt; ++j, od.advance()) {
            acc += fe.monic(od.coeffs, m);
            const double a = std::abs(acc);
            if (a > best + 1e-9) {
                best = a;
                records.push_back({start + j + 1, a});
            }
        }
    }
    return records;
}

}  // namespace ffdisc
