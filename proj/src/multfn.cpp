#include "ffdisc/multfn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ffdisc {

ModifiedChar ModifiedChar::make(const Field& F, const Poly& Q, std::optional<DirichletChar> chi_star,
                                std::vector<std::pair<Poly, Phase>> twists) {
    if (deg(Q) < 1 || !is_monic(Q)) throw std::invalid_argument("ModifiedChar: bad modulus");
    ModifiedChar mc;
    mc.Q = Q;
    if (chi_star) {
        if (!is_primitive(F, *chi_star))
            throw std::invalid_argument("ModifiedChar: chi* must be primitive");
        if (!poly_divides(F, chi_star->modulus(), Q))
            throw std::invalid_argument("ModifiedChar: conductor must divide Q");
        mc.chi = induce(F, *chi_star, Q);
        mc.chi_star = std::move(chi_star);
    } else {
        mc.chi = principal_character(F, Q);
    }
    // twists must cover exactly the distinct primes of Q
    const Factorization fac = factor(F, Q);
    if (twists.size() != fac.factors.size())
        throw std::invalid_argument("ModifiedChar: twist values must cover the distinct primes of Q");
    std::sort(twists.begin(), twists.end(),
              [&F](const auto& a, const auto& b) { return lex_less(F, a.first, b.first); });
    for (std::size_t i = 0; i < twists.size(); ++i)
        if (!(twists[i].first == fac.factors[i].first))
            throw std::invalid_argument("ModifiedChar: twist prime does not divide Q");
    mc.twists = std::move(twists);
    return mc;
}

ModifiedChar ModifiedChar::from_mod_q(const Field& F, const DirichletChar& chi_mod_q,
                                      std::vector<std::pair<Poly, Phase>> twists) {
    const Poly cond = conductor(F, chi_mod_q);
    std::optional<DirichletChar> star;
    if (deg(cond) >= 1) star = primitive_part(F, chi_mod_q);
    return make(F, chi_mod_q.modulus(), std::move(star), std::move(twists));
}

ModifiedChar ModifiedChar::assemble(const Field& F, DirichletChar chi_mod_q,
                                    std::optional<DirichletChar> chi_star,
                                    std::vector<std::pair<Poly, Phase>> twists) {
    ModifiedChar mc;
    mc.Q = chi_mod_q.modulus();
    mc.chi = std::move(chi_mod_q);
    mc.chi_star = std::move(chi_star);
    std::sort(twists.begin(), twists.end(),
              [&F](const auto& a, const auto& b) { return lex_less(F, a.first, b.first); });
    mc.twists = std::move(twists);
    return mc;
}

const Phase& ModifiedChar::twist_at(const Poly& P) const {
    for (const auto& [R, v] : twists)
        if (R == P) return v;
    throw std::invalid_argument("ModifiedChar: no twist at this prime");
}

bool ModifiedChar::real_valued(const Field&) const {
    for (const auto& [P, v] : twists) {
        if (!v.exact()) return false;
        if (v.root().den > 2) return false;
    }
    if (!chi_star) return true;
    return chi_star->order() <= 2;
}

MultFn MultFn::one() { return {}; }

MultFn MultFn::liouville_fn() {
    MultFn f;
    f.base_ = Base::liouville;
    return f;
}

MultFn MultFn::of(ModifiedChar mc) {
    MultFn f;
    f.base_ = Base::modified;
    f.mc_ = std::move(mc);
    return f;
}

MultFn MultFn::custom(std::function<UnitVal(const Field&, const Poly&)> prime_rule) {
    MultFn f;
    f.base_ = Base::custom;
    f.custom_ = std::move(prime_rule);
    return f;
}

const ModifiedChar& MultFn::modchar() const {
    if (!mc_) throw std::domain_error("MultFn: no modified-character part");
    return *mc_;
}

MultFn MultFn::with_xi(ShortIntervalChar xi, bool conj) const {
    MultFn f = *this;
    if (!xi.is_trivial()) f.xi_.emplace_back(std::move(xi), conj);
    return f;
}

MultFn MultFn::with_theta(Phase th) const {
    MultFn f = *this;
    f.theta_ = f.theta_ * th;
    return f;
}

UnitVal MultFn::at_prime(const Field& F, const Poly& P) const {
    UnitVal v = UnitVal::one();
    switch (base_) {
        case Base::one:
            break;
        case Base::liouville:
            v = UnitVal::of(RootOfUnity::minus_one());
            break;
        case Base::custom:
            v = custom_(F, P);
            break;
        case Base::modified: {
            bool twisted = false;
            for (const auto& [R, val] : mc_->twists)
                if (R == P) {
                    v = UnitVal::of(val);
                    twisted = true;
                    break;
                }
            if (!twisted) v = mc_->chi(F, P);
            break;
        }
    }
    for (const auto& [xi, conj] : xi_) {
        UnitVal x = xi(F, P);
        v = v * (conj ? x.conj() : x);
    }
    if (!theta_.is_one()) v = v * UnitVal::of(theta_.pow(deg(P)));
    return v;
}

UnitVal MultFn::eval(const Field& F, const Poly& G) const {
    if (G.is_zero()) throw std::domain_error("MultFn: eval at zero");
    if (!is_monic(G)) throw std::invalid_argument("MultFn: eval expects a monic polynomial");
    UnitVal v = UnitVal::one();
    switch (base_) {
        case Base::one:
            break;
        case Base::liouville: {
            int big_omega = 0;
            for (const auto& [P, e] : factor(F, G).factors) big_omega += e;
            v = UnitVal::of(big_omega % 2 ? RootOfUnity::minus_one() : RootOfUnity::one());
            break;
        }
        case Base::modified: {
            // strip the Q-primes, evaluate chi on the coprime remainder by residue
            Poly rest = G;
            for (const auto& [P, val] : mc_->twists) {
                int k = 0;
                for (;;) {
                    auto [q, r] = poly_divrem(F, rest, P);
                    if (!r.is_zero()) break;
                    rest = std::move(q);
                    ++k;
                }
                if (k) v = v * UnitVal::of(val.pow(k));
            }
            v = v * mc_->chi(F, rest);
            break;
        }
        case Base::custom: {
            for (const auto& [P, e] : factor(F, G).factors) v = v * custom_(F, P).pow(e);
            break;
        }
    }
    for (const auto& [xi, conj] : xi_) {
        UnitVal x = xi(F, G);
        v = v * (conj ? x.conj() : x);
    }
    if (!theta_.is_one() && deg(G) > 0) v = v * UnitVal::of(theta_.pow(deg(G)));
    return v;
}

UnitVal MultFn::eval_any(const Field& F, const Poly& M) const {
    if (M.is_zero()) return UnitVal::zero();
    if (is_monic(M)) return eval(F, M);
    // M = c * Mtilde: the character part sees the constant, xi and e_theta are
    // normalized to the monic associate
    const std::uint32_t c = M.lead();
    const Poly Mt = poly_scale(F, M, F.inv(c));
    UnitVal v = eval(F, Mt);
    if (base_ == Base::modified) v = v * mc_->chi(F, poly_const(c));
    return v;
}

MultFn twist(const MultFn& f, const ShortIntervalChar& xi, const Phase& theta, TwistDirection dir) {
    const bool conj = dir == TwistDirection::remove;
    MultFn g = f.with_xi(xi, conj);
    return g.with_theta(conj ? theta.conj() : theta);
}

std::int64_t c_q(const Field& F, const MultFn& f) {
    if (F.q() == 2) return 1;
    const UnitVal v = f.eval_any(F, poly_const(F.generator()));
    return v.is_one() ? static_cast<std::int64_t>(F.q()) - 1 : 0;
}

namespace {

// per-degree aggregated prime sums sum_{P in P_d} f(P), d <= N
std::vector<std::complex<double>> prime_degree_sums(const Field& F, const IrrTable& tab, const MultFn& f,
                                                    const MultFn& g, int N) {
    std::vector<std::complex<double>> out(static_cast<std::size_t>(N) + 1, 0.0);
    for (int d = 1; d <= N; ++d) {
        KahanSum s;
        for (const Poly& P : tab.of_degree(d))
            s.add(f.value(F, P) * std::conj(g.value(F, P)));
        out[static_cast<std::size_t>(d)] = s.get();
    }
    return out;
}

}  // namespace

double pretentious_distance(const Field& F, const IrrTable& tab, const MultFn& f, const MultFn& g, int N) {
    if (N < 1) throw std::invalid_argument("pretentious_distance: N >= 1 required");
    double acc = 0.0;
    double qd = 1.0;
    const auto sums = prime_degree_sums(F, tab, f, g, N);
    for (int d = 1; d <= N; ++d) {
        qd *= F.q();
        const double pi_d = static_cast<double>(tab.count(d));
        acc += (pi_d - sums[static_cast<std::size_t>(d)].real()) / qd;
    }
    return std::sqrt(std::max(0.0, acc));
}

ThetaMin curly_D(const Field& F, const IrrTable& tab, const MultFn& f, int N) {
    if (N < 1) throw std::invalid_argument("curly_D: N >= 1 required");
    // D(f, e_theta; N)^2 = sum_d q^{-d} (pi_d - Re(e(-theta d) S_d)), S_d = sum_{P_d} f(P)
    const auto S = prime_degree_sums(F, tab, f, MultFn::one(), N);
    std::vector<double> pi_d(static_cast<std::size_t>(N) + 1, 0.0);
    for (int d = 1; d <= N; ++d) pi_d[static_cast<std::size_t>(d)] = static_cast<double>(tab.count(d));
    auto dist2 = [&](double theta) {
        double acc = 0.0, qd = 1.0;
        for (int d = 1; d <= N; ++d) {
            qd *= F.q();
            const std::complex<double> rot = e_of(-theta * d);
            acc += (pi_d[static_cast<std::size_t>(d)] - (rot * S[static_cast<std::size_t>(d)]).real()) / qd;
        }
        return acc;
    };
    ThetaMin best;
    best.dist2 = dist2(0.0);
    const int grid = best.grid;
    for (int i = 1; i < grid; ++i) {
        const double th = static_cast<double>(i) / grid;
        const double v = dist2(th);
        if (v < best.dist2) {
            best.dist2 = v;
            best.theta = th;
        }
    }
    // one golden-section refinement around the best cell
    double a = best.theta - 1.0 / grid, b = best.theta + 1.0 / grid;
    const double gr = 0.6180339887498949;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    for (int it = 0; it < 60; ++it) {
        if (dist2(c) < dist2(d)) {
            b = d;
        } else {
            a = c;
        }
        c = b - gr * (b - a);
        d = a + gr * (b - a);
    }
    const double th = 0.5 * (a + b);
    const double v = dist2(th);
    if (v < best.dist2) {
        best.dist2 = v;
        best.theta = th - std::floor(th);
    }
    return best;
}

std::vector<std::complex<double>> dirichlet_series_coeffs(const Field& F, const MultFn& f, int n_max) {
    if (n_max < 0) throw std::invalid_argument("dirichlet_series_coeffs: n_max >= 0");
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n_max) + 1, 0.0);
    out[0] = 1.0;
    for (int n = 1; n <= n_max; ++n) {
        KahanSum s;
        const std::uint64_t total = count_monics(F, n);
        for (std::uint64_t i = 0; i < total; ++i) s.add(f.value(F, monic_of_index(F, n, i)));
        out[static_cast<std::size_t>(n)] = s.get();
    }
    return out;
}

std::vector<std::complex<double>> dirichlet_series_euler(const Field& F, const IrrTable& tab,
                                                         const MultFn& f, int n_max) {
    std::vector<std::complex<double>> prod(static_cast<std::size_t>(n_max) + 1, 0.0);
    prod[0] = 1.0;
    for (int d = 1; d <= n_max; ++d) {
        for (const Poly& P : tab.of_degree(d)) {
            // multiply by 1 + f(P) z^d + f(P)^2 z^{2d} + ...
            const std::complex<double> v = f.value(F, P);
            std::vector<std::complex<double>> next(prod.size(), 0.0);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                std::complex<double> pw = 1.0;
                for (std::size_t k = 0; i + k * d <= static_cast<std::size_t>(n_max); ++k) {
                    next[i + k * d] += prod[i] * pw;
                    pw *= v;
                }
            }
            prod = std::move(next);
        }
    }
    return prod;
}

}  // namespace ffdisc
