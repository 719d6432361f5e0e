#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "ffdisc/phase.hpp"
#include "ffdisc/unitgroup.hpp"

namespace ffdisc {

// Dirichlet character mod Q, stored as an exponent tuple against the unit
// group generators: value at gens[i] is e(expo[i]/orders[i]). Extended to all
// of F_q[t] by residue lookup, zero off the units.
class DirichletChar {
  public:
    DirichletChar() = default;
    DirichletChar(std::shared_ptr<const UnitGroup> G, std::vector<std::uint32_t> expo);

    const Poly& modulus() const { return G_->Q; }
    const UnitGroup& group() const { return *G_; }
    const std::vector<std::uint32_t>& exponents() const { return expo_; }

    UnitVal operator()(const Field& F, const Poly& A) const;
    std::complex<double> value(const Field& F, const Poly& A) const { return (*this)(F, A).value(); }

    bool is_principal() const;
    // order of the character in the dual group
    std::uint64_t order() const;
    DirichletChar conjugate() const;
    DirichletChar times(const DirichletChar& other) const;  // same modulus

    // Sum over F_q^x of chi(c); "even" means trivial on constants.
    bool trivial_on_constants(const Field& F) const;

    // canonical index in the character family (mixed radix over exponents)
    std::uint64_t index() const;

  private:
    std::shared_ptr<const UnitGroup> G_;
    std::vector<std::uint32_t> expo_;
};

// all phi(Q) characters mod Q, canonically indexed; index 0 is principal
std::vector<DirichletChar> characters(const Field& F, const Poly& Q);
DirichletChar character_by_index(const Field& F, std::shared_ptr<const UnitGroup> G, std::uint64_t index);
DirichletChar principal_character(const Field& F, const Poly& Q);

// least monic Q' | Q with chi trivial on units = 1 mod Q'; primitive iff == Q
Poly conductor(const Field& F, const DirichletChar& chi);
bool is_primitive(const Field& F, const DirichletChar& chi);
// chi_star primitive mod Q*, Q* | Q: the induced character mod Q
DirichletChar induce(const Field& F, const DirichletChar& chi_star, const Poly& Q);
// the primitive character inducing chi
DirichletChar primitive_part(const Field& F, const DirichletChar& chi);

// monic divisors of Q, by (degree, lex)
std::vector<Poly> monic_divisors(const Field& F, const Poly& Q);

// ---------------------------------------------------------------------------

// Group of truncated tails {1 + a_1 u + ... + a_nu u^nu}, u = 1/t, under
// multiplication mod u^{nu+1}; elements are packed digit vectors (a_1..a_nu).
struct TailGroup {
    std::uint32_t nu = 0;
    std::uint64_t size = 1;  // q^nu
    std::vector<std::uint32_t> gens;            // element ids
    std::vector<std::uint64_t> orders;          // descending
    std::vector<std::vector<std::uint32_t>> dlog;  // element id -> exponents

    std::uint32_t mul(const Field& F, std::uint32_t a, std::uint32_t b) const;
};
std::shared_ptr<const TailGroup> tail_group(const Field& F, std::uint32_t nu);

// Short interval (Hayes) character of length <= nu: depends only on the top
// nu+1 coefficients of a monic polynomial; extended to F_q[t]\{0} by monic
// normalization (so constants map to 1), and to 0 by 0.
class ShortIntervalChar {
  public:
    ShortIntervalChar() = default;
    ShortIntervalChar(std::shared_ptr<const TailGroup> T, std::vector<std::uint32_t> expo);

    std::uint32_t nu() const { return T_->nu; }
    const std::vector<std::uint32_t>& exponents() const { return expo_; }

    UnitVal operator()(const Field& F, const Poly& A) const;
    // smallest effective length: trivial on every deeper tail layer
    std::uint32_t length(const Field& F) const;
    // nontrivial on the deepest layer {1 + a u^nu}
    bool primitive_length(const Field& F) const;
    bool is_trivial() const;
    ShortIntervalChar conjugate() const;
    std::uint64_t index() const;

  private:
    std::shared_ptr<const TailGroup> T_;
    std::vector<std::uint32_t> expo_;
};

// all q^nu characters of the tail group of length nu
std::vector<ShortIntervalChar> short_chars(const Field& F, std::uint32_t nu);
ShortIntervalChar trivial_short_char(const Field& F);

// e_theta(M) = e(theta deg M)
struct ArchimedeanTwist {
    Phase theta = Phase::one();
    UnitVal operator()(const Poly& M) const {
        if (M.is_zero()) return UnitVal::zero();
        return UnitVal::of(theta.pow(deg(M)));
    }
};

// e_F(A/Q) = e(tr(a_{-1})/p), a_{-1} the 1/t Laurent coefficient of A/Q
UnitVal additive_char(const Field& F, const Poly& A, const Poly& Q);

}  // namespace ffdisc
