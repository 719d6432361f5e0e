#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "ffdisc/characters.hpp"
#include "ffdisc/enumerate.hpp"
#include "ffdisc/factor.hpp"

namespace ffdisc {

// Completely multiplicative f agreeing with a primitive character chi* away
// from the modulus Q, with free unit values at the distinct primes P | Q.
// chi* may be trivial (conductor 1); then the induced character mod Q is
// principal and f is 1 outside the twisted primes.
struct ModifiedChar {
    Poly Q;                                      // monic modulus, deg >= 1
    std::optional<DirichletChar> chi_star;       // primitive mod Q* | Q; nullopt = trivial mod 1
    std::vector<std::pair<Poly, Phase>> twists;  // one entry per distinct P | Q, canonical order
    DirichletChar chi;                           // the induced character mod Q (principal iff chi_star trivial)

    static ModifiedChar make(const Field& F, const Poly& Q,
                             std::optional<DirichletChar> chi_star,
                             std::vector<std::pair<Poly, Phase>> twists);
    // from any character mod Q: extracts the primitive part (nullopt if principal)
    static ModifiedChar from_mod_q(const Field& F, const DirichletChar& chi_mod_q,
                                   std::vector<std::pair<Poly, Phase>> twists);
    // batch-construction path: the caller guarantees chi_mod_q is induced by
    // chi_star and that the twists are the distinct primes of Q in canonical
    // order; no groups are rebuilt
    static ModifiedChar assemble(const Field& F, DirichletChar chi_mod_q,
                                 std::optional<DirichletChar> chi_star,
                                 std::vector<std::pair<Poly, Phase>> twists);

    const Phase& twist_at(const Poly& P) const;
    bool chi_nonprincipal() const { return chi_star.has_value() && !chi_star->is_principal(); }
    // degree of the conductor Q*
    int cond_deg() const { return chi_star ? deg(chi_star->modulus()) : 0; }
    bool real_valued(const Field& F) const;
};

// A completely multiplicative function on monic polynomials, as a product of
// an optional modified-character part (or a named base), short interval
// characters, and an Archimedean rotation.
class MultFn {
  public:
    enum class Base { one, liouville, modified, custom };

    static MultFn one();
    static MultFn liouville_fn();
    static MultFn of(ModifiedChar mc);
    // rule gives the value at irreducibles; by convention 1 on constants
    static MultFn custom(std::function<UnitVal(const Field&, const Poly&)> prime_rule);

    Base base() const { return base_; }
    const ModifiedChar& modchar() const;
    bool has_modchar() const { return base_ == Base::modified; }
    const std::vector<std::pair<ShortIntervalChar, bool>>& xi_parts() const { return xi_; }
    const Phase& theta() const { return theta_; }

    MultFn with_xi(ShortIntervalChar xi, bool conj = false) const;
    MultFn with_theta(Phase th) const;

    // value at an irreducible
    UnitVal at_prime(const Field& F, const Poly& P) const;
    // value at a monic polynomial (factorizes the part not handled by chi)
    UnitVal eval(const Field& F, const Poly& G) const;
    // extension to all of F_q[t]: f(0) = 0, constants via the character part
    UnitVal eval_any(const Field& F, const Poly& M) const;
    std::complex<double> value(const Field& F, const Poly& G) const { return eval(F, G).value(); }

  private:
    Base base_ = Base::one;
    std::optional<ModifiedChar> mc_;
    std::function<UnitVal(const Field&, const Poly&)> custom_;
    std::vector<std::pair<ShortIntervalChar, bool>> xi_;
    Phase theta_ = Phase::one();
};

enum class TwistDirection { apply, remove };
// pointwise product with xi and e_theta (or their inverses)
MultFn twist(const MultFn& f, const ShortIntervalChar& xi, const Phase& theta, TwistDirection dir);

// sum of f over F_q^x: (q-1) when f is 1 on a generator, else 0
std::int64_t c_q(const Field& F, const MultFn& f);

// pretentious distance D(f,g;N) (the square root)
double pretentious_distance(const Field& F, const IrrTable& tab, const MultFn& f, const MultFn& g, int N);
// D_f(N) = min_theta D(f, e_theta; N)^2, by grid + golden-section refinement
struct ThetaMin {
    double theta = 0.0;
    double dist2 = 0.0;
    int grid = 1 << 10;
};
ThetaMin curly_D(const Field& F, const IrrTable& tab, const MultFn& f, int N);

// [sum_{G in M_n} f(G)]_{0 <= n <= n_max}, by enumeration
std::vector<std::complex<double>> dirichlet_series_coeffs(const Field& F, const MultFn& f, int n_max);
// the same from the truncated Euler product over P with deg P <= n_max
std::vector<std::complex<double>> dirichlet_series_euler(const Field& F, const IrrTable& tab,
                                                         const MultFn& f, int n_max);

}  // namespace ffdisc
