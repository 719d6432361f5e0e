#include "ffdisc/characters.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ffdisc/enumerate.hpp"

namespace ffdisc {

DirichletChar::DirichletChar(std::shared_ptr<const UnitGroup> G, std::vector<std::uint32_t> expo)
    : G_(std::move(G)), expo_(std::move(expo)) {
    if (expo_.size() != G_->orders.size())
        throw std::invalid_argument("DirichletChar: exponent tuple arity mismatch");
    for (std::size_t i = 0; i < expo_.size(); ++i)
        if (expo_[i] >= G_->orders[i]) throw std::invalid_argument("DirichletChar: exponent out of range");
}

UnitVal DirichletChar::operator()(const Field& F, const Poly& A) const {
    const Poly r = poly_mod(F, A, G_->Q);
    if (r.is_zero()) return UnitVal::zero();
    auto it = G_->dlog.find(lex_index(F, r));
    if (it == G_->dlog.end()) return UnitVal::zero();
    RootOfUnity v = RootOfUnity::one();
    for (std::size_t i = 0; i < expo_.size(); ++i) {
        if (expo_[i] == 0) continue;
        const std::uint64_t num =
            (static_cast<std::uint64_t>(expo_[i]) * it->second[i]) % G_->orders[i];
        v = v * RootOfUnity::make(static_cast<std::int64_t>(num), static_cast<std::int64_t>(G_->orders[i]));
    }
    return UnitVal::of(v);
}

bool DirichletChar::is_principal() const {
    return std::all_of(expo_.begin(), expo_.end(), [](std::uint32_t e) { return e == 0; });
}

std::uint64_t DirichletChar::order() const {
    std::uint64_t m = 1;
    for (std::size_t i = 0; i < expo_.size(); ++i) {
        const std::uint64_t g = std::gcd<std::uint64_t>(expo_[i], G_->orders[i]);
        m = std::lcm(m, G_->orders[i] / g);
    }
    return m;
}

DirichletChar DirichletChar::conjugate() const {
    std::vector<std::uint32_t> e(expo_.size());
    for (std::size_t i = 0; i < expo_.size(); ++i)
        e[i] = expo_[i] == 0 ? 0 : static_cast<std::uint32_t>(G_->orders[i] - expo_[i]);
    return DirichletChar(G_, std::move(e));
}

DirichletChar DirichletChar::times(const DirichletChar& other) const {
    if (!(other.G_->Q == G_->Q)) throw std::invalid_argument("DirichletChar: modulus mismatch");
    std::vector<std::uint32_t> e(expo_.size());
    for (std::size_t i = 0; i < expo_.size(); ++i)
        e[i] = static_cast<std::uint32_t>((expo_[i] + static_cast<std::uint64_t>(other.expo_[i])) % G_->orders[i]);
    return DirichletChar(G_, std::move(e));
}

bool DirichletChar::trivial_on_constants(const Field& F) const {
    // enough to test a generator of F_q^x
    if (F.q() == 2) return true;
    return (*this)(F, poly_const(F.generator())).is_one();
}

std::uint64_t DirichletChar::index() const {
    std::uint64_t n = 0;
    for (std::size_t i = expo_.size(); i-- > 0;) n = n * G_->orders[i] + expo_[i];
    return n;
}

DirichletChar character_by_index(const Field& F, std::shared_ptr<const UnitGroup> G, std::uint64_t index) {
    (void)F;
    std::vector<std::uint32_t> e(G->orders.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = static_cast<std::uint32_t>(index % G->orders[i]);
        index /= G->orders[i];
    }
    if (index != 0) throw std::invalid_argument("character_by_index: index out of range");
    return DirichletChar(std::move(G), std::move(e));
}

std::vector<DirichletChar> characters(const Field& F, const Poly& Q) {
    auto G = unit_group(F, Q);
    std::vector<DirichletChar> out;
    out.reserve(G->phi);
    for (std::uint64_t i = 0; i < G->phi; ++i) out.push_back(character_by_index(F, G, i));
    return out;
}

DirichletChar principal_character(const Field& F, const Poly& Q) {
    auto G = unit_group(F, Q);
    return character_by_index(F, G, 0);
}

std::vector<Poly> monic_divisors(const Field& F, const Poly& Q) {
    const Factorization fac = factor(F, Q);
    std::vector<Poly> divs{poly_one()};
    for (const auto& [P, e] : fac.factors) {
        std::vector<Poly> next;
        Poly pw = poly_one();
        for (int i = 0; i <= e; ++i) {
            for (const Poly& d : divs) next.push_back(poly_mul(F, d, pw));
            pw = poly_mul(F, pw, P);
        }
        divs = std::move(next);
    }
    std::sort(divs.begin(), divs.end(), [&F](const Poly& a, const Poly& b) { return lex_less(F, a, b); });
    return divs;
}

Poly conductor(const Field& F, const DirichletChar& chi) {
    const Poly& Q = chi.modulus();
    for (const Poly& D : monic_divisors(F, Q)) {
        // trivial on every unit congruent to 1 mod D?
        bool ok = true;
        for (std::uint64_t idx : chi.group().unit_ids) {
            const Poly A = lex_unrank(F, idx);
            if (!poly_divides(F, D, poly_sub(F, A, poly_one()))) continue;
            if (!chi(F, A).is_one()) {
                ok = false;
                break;
            }
        }
        if (ok) return D;
    }
    return Q;
}

bool is_primitive(const Field& F, const DirichletChar& chi) { return conductor(F, chi) == chi.modulus(); }

DirichletChar induce(const Field& F, const DirichletChar& chi_star, const Poly& Q) {
    const Poly& Qs = chi_star.modulus();
    if (!poly_divides(F, Qs, Q)) throw std::invalid_argument("induce: conductor does not divide modulus");
    auto G = unit_group(F, Q);
    // express chi(g_i) = chi*(g_i) as e(c_i/m_i)
    std::vector<std::uint32_t> expo(G->orders.size(), 0);
    for (std::size_t i = 0; i < G->gens.size(); ++i) {
        const UnitVal v = chi_star(F, G->gens[i]);
        if (v.is_zero()) throw std::logic_error("induce: generator not coprime to conductor");
        const RootOfUnity r = v.phase().root();
        const std::uint64_t m = G->orders[i];
        if (m % static_cast<std::uint64_t>(r.den) != 0)
            throw std::logic_error("induce: value order does not divide generator order");
        expo[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r.num) * (m / r.den) % m);
    }
    return DirichletChar(std::move(G), std::move(expo));
}

DirichletChar primitive_part(const Field& F, const DirichletChar& chi) {
    const Poly cond = conductor(F, chi);
    if (deg(cond) == 0) {
        // the trivial character mod 1 has no unit group; represent mod t? keep mod 1 unsupported:
        // callers treat conductor 1 specially. Here return the principal character mod cond*t^0
        throw std::invalid_argument("primitive_part: conductor 1 (principal character)");
    }
    if (cond == chi.modulus()) return chi;
    auto Gc = unit_group(F, cond);
    std::vector<std::uint32_t> expo(Gc->orders.size(), 0);
    for (std::size_t i = 0; i < Gc->gens.size(); ++i) {
        // evaluate chi on a representative of gens[i] that is coprime to Q:
        // g + cond * k for some k, searched in lex order
        const Poly& g = Gc->gens[i];
        Poly rep = g;
        std::uint64_t k = 0;
        while (chi(F, rep).is_zero()) {
            ++k;
            rep = poly_add(F, g, poly_mul(F, cond, lex_unrank(F, k)));
            if (k > (1u << 20)) throw std::logic_error("primitive_part: no coprime representative found");
        }
        const RootOfUnity r = chi(F, rep).phase().root();
        const std::uint64_t m = Gc->orders[i];
        if (m % static_cast<std::uint64_t>(r.den) != 0)
            throw std::logic_error("primitive_part: value order mismatch");
        expo[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(r.num) * (m / r.den) % m);
    }
    return DirichletChar(std::move(Gc), std::move(expo));
}

// ---------------------------------------------------------------------------

std::uint32_t TailGroup::mul(const Field& F, std::uint32_t a, std::uint32_t b) const {
    // (1 + sum a_i u^i)(1 + sum b_i u^i) mod u^{nu+1}
    const std::uint32_t q = F.q();
    std::uint32_t av[32], bv[32], rv[32];
    for (std::uint32_t i = 0; i < nu; ++i) {
        av[i] = a % q;
        a /= q;
        bv[i] = b % q;
        b /= q;
        rv[i] = F.add(av[i], bv[i]);
    }
    for (std::uint32_t i = 0; i < nu; ++i) {
        if (av[i] == 0) continue;
        for (std::uint32_t j = 0; i + j + 1 < nu; ++j) {
            if (bv[j] == 0) continue;
            rv[i + j + 1] = F.add(rv[i + j + 1], F.mul(av[i], bv[j]));
        }
    }
    std::uint32_t r = 0, m = 1;
    for (std::uint32_t i = 0; i < nu; ++i) {
        r += m * rv[i];
        m *= q;
    }
    return r;
}

std::shared_ptr<const TailGroup> tail_group(const Field& F, std::uint32_t nu) {
    if (nu > 12) throw std::invalid_argument("tail_group: nu too large for desk scale");
    auto T = std::make_shared<TailGroup>();
    T->nu = nu;
    T->size = pow_u64(F.q(), nu);
    if (T->size > (1u << 20)) throw std::invalid_argument("tail_group: q^nu too large");
    if (nu == 0) {
        T->dlog = {{}};
        return T;
    }
    std::vector<std::uint32_t> ids(T->size);
    for (std::uint32_t i = 0; i < T->size; ++i) ids[i] = i;
    const auto mul = [&F, &T](std::uint32_t a, std::uint32_t b) { return T->mul(F, a, b); };
    const AbelianBasis basis = abelian_basis(ids, 0, mul);
    T->gens = basis.gens;
    T->orders = basis.orders;
    // dlog by odometer over the product box
    T->dlog.assign(T->size, {});
    std::vector<std::uint32_t> expo(T->orders.size(), 0);
    std::vector<bool> seen(T->size, false);
    std::uint32_t cur = 0;
    for (;;) {
        if (seen[cur]) throw std::logic_error("tail_group: not a direct sum");
        seen[cur] = true;
        T->dlog[cur] = expo;
        std::size_t j = 0;
        for (; j < expo.size(); ++j) {
            cur = mul(cur, T->gens[j]);
            if (expo[j] + 1 < T->orders[j]) {
                expo[j] += 1;
                break;
            }
            expo[j] = 0;
        }
        if (j == expo.size()) break;
    }
    for (bool s : seen)
        if (!s) throw std::logic_error("tail_group: dlog incomplete");
    return T;
}

ShortIntervalChar::ShortIntervalChar(std::shared_ptr<const TailGroup> T, std::vector<std::uint32_t> expo)
    : T_(std::move(T)), expo_(std::move(expo)) {
    if (expo_.size() != T_->orders.size())
        throw std::invalid_argument("ShortIntervalChar: exponent tuple arity mismatch");
}

UnitVal ShortIntervalChar::operator()(const Field& F, const Poly& A) const {
    if (A.is_zero()) return UnitVal::zero();
    const int n = deg(A);
    // tail digits of the monic normalization: a_i = coeff(n - i) / lead
    const std::uint32_t nu = T_->nu;
    std::uint32_t id = 0, m = 1;
    const std::uint32_t linv = A.lead() == 1 ? 1 : F.inv(A.lead());
    for (std::uint32_t i = 1; i <= nu; ++i) {
        const std::uint32_t ci =
            static_cast<int>(i) <= n ? A.coeff(static_cast<std::size_t>(n - static_cast<int>(i))) : 0u;
        id += m * (linv == 1 ? ci : F.mul(ci, linv));
        m *= F.q();
    }
    RootOfUnity v = RootOfUnity::one();
    const auto& ex = T_->dlog[id];
    for (std::size_t i = 0; i < expo_.size(); ++i) {
        if (expo_[i] == 0) continue;
        const std::uint64_t num = (static_cast<std::uint64_t>(expo_[i]) * ex[i]) % T_->orders[i];
        v = v * RootOfUnity::make(static_cast<std::int64_t>(num), static_cast<std::int64_t>(T_->orders[i]));
    }
    return UnitVal::of(v);
}

bool ShortIntervalChar::is_trivial() const {
    return std::all_of(expo_.begin(), expo_.end(), [](std::uint32_t e) { return e == 0; });
}

ShortIntervalChar ShortIntervalChar::conjugate() const {
    std::vector<std::uint32_t> e(expo_.size());
    for (std::size_t i = 0; i < expo_.size(); ++i)
        e[i] = expo_[i] == 0 ? 0 : static_cast<std::uint32_t>(T_->orders[i] - expo_[i]);
    return ShortIntervalChar(T_, std::move(e));
}

std::uint32_t ShortIntervalChar::length(const Field& F) const {
    // trivial on {1 + a u^j, any a, all j > len}
    std::uint32_t len = T_->nu;
    while (len >= 1) {
        bool trivial_layer = true;
        for (std::uint32_t a = 1; a < F.q() && trivial_layer; ++a) {
            // element 1 + a u^len
            std::uint32_t id = a;
            for (std::uint32_t i = 1; i < len; ++i) id *= F.q();
            RootOfUnity v = RootOfUnity::one();
            const auto& ex = T_->dlog[id];
            for (std::size_t i = 0; i < expo_.size(); ++i) {
                if (expo_[i] == 0) continue;
                const std::uint64_t num = (static_cast<std::uint64_t>(expo_[i]) * ex[i]) % T_->orders[i];
                v = v * RootOfUnity::make(static_cast<std::int64_t>(num),
                                          static_cast<std::int64_t>(T_->orders[i]));
            }
            if (!v.is_one()) trivial_layer = false;
        }
        if (!trivial_layer) break;
        --len;
    }
    return len;
}

bool ShortIntervalChar::primitive_length(const Field& F) const { return length(F) == T_->nu; }

std::vector<ShortIntervalChar> short_chars(const Field& F, std::uint32_t nu) {
    auto T = tail_group(F, nu);
    std::uint64_t total = 1;
    for (std::uint64_t m : T->orders) total *= m;
    std::vector<ShortIntervalChar> out;
    out.reserve(total);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t x = idx;
        std::vector<std::uint32_t> e(T->orders.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = static_cast<std::uint32_t>(x % T->orders[i]);
            x /= T->orders[i];
        }
        out.emplace_back(T, std::move(e));
    }
    return out;
}

ShortIntervalChar trivial_short_char(const Field& F) {
    auto T = tail_group(F, 0);
    return ShortIntervalChar(T, {});
}

std::uint64_t ShortIntervalChar::index() const {
    std::uint64_t n = 0;
    for (std::size_t i = expo_.size(); i-- > 0;) n = n * T_->orders[i] + expo_[i];
    return n;
}

UnitVal additive_char(const Field& F, const Poly& A, const Poly& Q) {
    if (Q.is_zero()) throw std::domain_error("additive_char: zero denominator");
    // normalize to monic denominator: A/Q = (A/c)/(Q/c)
    Poly Am = A, Qm = Q;
    if (Q.lead() != 1) {
        const std::uint32_t ci = F.inv(Q.lead());
        Am = poly_scale(F, A, ci);
        Qm = poly_scale(F, Q, ci);
    }
    const Poly R = poly_mod(F, Am, Qm);
    const std::uint32_t a1 = R.coeff(static_cast<std::size_t>(deg(Qm) - 1));
    const std::uint32_t tr = F.trace(a1);  // element of F_p, packed value < p
    return UnitVal::of(RootOfUnity::make(tr, F.p()));
}

}  // namespace ffdisc
