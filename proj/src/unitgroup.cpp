#include "ffdisc/unitgroup.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "ffdisc/enumerate.hpp"

namespace ffdisc {

namespace {

std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

using Mul = std::function<std::uint32_t(std::uint32_t, std::uint32_t)>;

std::uint32_t power(std::uint32_t x, std::uint64_t e, std::uint32_t identity, const Mul& mul) {
    std::uint32_t r = identity, b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

// order within an l-group, by repeated l-th powers
std::uint64_t lgroup_order(std::uint32_t x, std::uint64_t l, std::uint32_t identity, const Mul& mul) {
    std::uint64_t ord = 1;
    std::uint32_t y = x;
    while (y != identity) {
        y = power(y, l, identity, mul);
        ord *= l;
    }
    return ord;
}

// basis of an abelian l-group, by quotient recursion: pick g of maximal order,
// recurse on G/<g>, lift each quotient generator u (u^ord in <g>) to a true
// complement generator u * g^{-s/ord}.
void pgroup_basis(const std::vector<std::uint32_t>& elems, std::uint64_t l, std::uint32_t identity,
                  const Mul& mul, std::vector<std::pair<std::uint32_t, std::uint64_t>>& out) {
    if (elems.size() <= 1) return;
    // element of maximal order; ties by smallest id
    std::uint32_t g = identity;
    std::uint64_t gord = 1;
    for (std::uint32_t x : elems) {
        const std::uint64_t o = lgroup_order(x, l, identity, mul);
        if (o > gord) {
            g = x;
            gord = o;
        }
    }
    out.emplace_back(g, gord);
    if (elems.size() == gord) return;

    // cosets of <g>: canonical representative = smallest id in the coset
    std::map<std::uint32_t, std::uint32_t> coset_rep;  // element -> canonical rep
    for (std::uint32_t x : elems) {
        if (coset_rep.count(x)) continue;
        std::uint32_t best = x;
        std::vector<std::uint32_t> members;
        std::uint32_t y = x;
        for (std::uint64_t i = 0; i < gord; ++i) {
            members.push_back(y);
            best = std::min(best, y);
            y = mul(y, g);
        }
        for (std::uint32_t m : members) coset_rep[m] = best;
    }
    std::vector<std::uint32_t> qelems;
    for (const auto& [x, rep] : coset_rep)
        if (x == rep) qelems.push_back(x);
    const Mul qmul = [&](std::uint32_t a, std::uint32_t b) { return coset_rep.at(mul(a, b)); };
    const std::uint32_t qid = coset_rep.at(identity);

    std::vector<std::pair<std::uint32_t, std::uint64_t>> qbasis;
    pgroup_basis(qelems, l, qid, qmul, qbasis);

    for (const auto& [u, uord] : qbasis) {
        // u^uord lies in <g>; find s with u^uord = g^s, then uord | s
        const std::uint32_t w = power(u, uord, identity, mul);
        std::uint64_t s = 0;
        std::uint32_t y = identity;
        while (y != w) {
            y = mul(y, g);
            if (++s > gord) throw std::logic_error("pgroup_basis: dlog in <g> failed");
        }
        if (s % uord != 0) throw std::logic_error("pgroup_basis: lift divisibility failed");
        const std::uint32_t adj = power(g, gord - s / uord, identity, mul);  // g^{-s/uord}
        out.emplace_back(mul(u, adj), uord);
    }
}

}  // namespace

AbelianBasis abelian_basis(const std::vector<std::uint32_t>& elems, std::uint32_t identity,
                           const Mul& mul) {
    const std::uint64_t n = elems.size();
    AbelianBasis basis;
    if (n <= 1) return basis;
    // per-prime Sylow pieces
    std::map<std::uint64_t, std::vector<std::pair<std::uint32_t, std::uint64_t>>> pieces;
    for (const auto& [l, e] : factor_u64(n)) {
        std::uint64_t lpow = 1;
        for (int i = 0; i < e; ++i) lpow *= l;
        const std::uint64_t cof = n / lpow;
        std::vector<std::uint32_t> syl;
        for (std::uint32_t x : elems) syl.push_back(power(x, cof, identity, mul));
        std::sort(syl.begin(), syl.end());
        syl.erase(std::unique(syl.begin(), syl.end()), syl.end());
        std::vector<std::pair<std::uint32_t, std::uint64_t>> b;
        pgroup_basis(syl, l, identity, mul, b);
        std::sort(b.begin(), b.end(), [](const auto& a, const auto& c) { return a.second > c.second; });
        pieces[l] = std::move(b);
    }
    // merge into invariant factors: largest remaining piece of each prime combine
    for (std::size_t round = 0;; ++round) {
        std::uint32_t gen = identity;
        std::uint64_t ord = 1;
        bool any = false;
        for (auto& [l, b] : pieces) {
            if (round < b.size()) {
                gen = mul(gen, b[round].first);
                ord *= b[round].second;
                any = true;
            }
        }
        if (!any) break;
        basis.gens.push_back(gen);
        basis.orders.push_back(ord);
    }
    return basis;
}

bool UnitGroup::is_unit(const Field& F, const Poly& A) const {
    const Poly r = poly_mod(F, A, Q);
    if (r.is_zero()) return false;
    return dlog.count(lex_index(F, r)) != 0;
}

const std::vector<std::uint32_t>& UnitGroup::exponents(const Field& F, const Poly& A) const {
    const Poly r = poly_mod(F, A, Q);
    auto it = dlog.find(lex_index(F, r));
    if (it == dlog.end()) throw std::invalid_argument("UnitGroup: not a unit");
    return it->second;
}

std::shared_ptr<const UnitGroup> unit_group(const Field& F, const Poly& Q) {
    if (deg(Q) < 1) throw std::invalid_argument("unit_group: constant modulus");
    if (!is_monic(Q)) throw std::invalid_argument("unit_group: modulus must be monic");
    const std::uint64_t residues = pow_u64(F.q(), static_cast<std::uint32_t>(deg(Q)));
    if (residues > (1u << 22)) throw std::invalid_argument("unit_group: modulus too large for desk scale");

    auto G = std::make_shared<UnitGroup>();
    G->Q = Q;
    G->Qfac = factor(F, Q);

    // enumerate units as lex indices of residues, in a dense id space
    std::vector<std::uint64_t> id_to_idx;
    std::unordered_map<std::uint64_t, std::uint32_t> idx_to_id;
    std::vector<Poly> id_to_poly;
    for (std::uint64_t i = 0; i < residues; ++i) {
        Poly r = lex_unrank(F, i);
        if (r.is_zero()) continue;
        if (deg(poly_gcd(F, r, Q)) != 0) continue;
        const std::uint32_t id = static_cast<std::uint32_t>(id_to_idx.size());
        id_to_idx.push_back(i);
        idx_to_id[i] = id;
        id_to_poly.push_back(std::move(r));
    }
    G->phi = id_to_idx.size();
    G->unit_ids = id_to_idx;

    const Mul mul = [&](std::uint32_t a, std::uint32_t b) {
        const Poly prod = poly_mod(F, poly_mul(F, id_to_poly[a], id_to_poly[b]), Q);
        return idx_to_id.at(lex_index(F, prod));
    };
    std::vector<std::uint32_t> ids(G->phi);
    for (std::uint32_t i = 0; i < G->phi; ++i) ids[i] = i;
    const std::uint32_t identity = idx_to_id.at(lex_index(F, poly_one()));

    const AbelianBasis basis = abelian_basis(ids, identity, mul);
    for (std::size_t i = 0; i < basis.gens.size(); ++i) {
        G->gens.push_back(id_to_poly[basis.gens[i]]);
        G->orders.push_back(basis.orders[i]);
    }

    // dlog by full product enumeration; doubles as decomposition verification
    std::uint64_t total = 1;
    for (std::uint64_t m : G->orders) total *= m;
    if (total != G->phi) throw std::logic_error("unit_group: order product != phi");
    std::vector<std::uint32_t> expo(G->orders.size(), 0);
    std::uint32_t cur = identity;
    for (std::uint64_t step = 0;; ++step) {
        const std::uint64_t idx = id_to_idx[cur];
        if (!G->dlog.emplace(idx, expo).second)
            throw std::logic_error("unit_group: decomposition is not a direct sum");
        // odometer increment: multiply by gens[j], reset with gens[j]^{-(m_j-1)}
        std::size_t j = 0;
        for (; j < expo.size(); ++j) {
            if (expo[j] + 1 < G->orders[j]) {
                expo[j] += 1;
                cur = mul(cur, basis.gens[j]);
                break;
            }
            expo[j] = 0;
            // multiply by gens[j] once more wraps to identity component
            cur = mul(cur, basis.gens[j]);
        }
        if (j == expo.size()) break;
    }
    if (G->dlog.size() != G->phi) throw std::logic_error("unit_group: dlog table incomplete");
    return G;
}

}  // namespace ffdisc
