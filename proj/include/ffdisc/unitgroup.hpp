#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ffdisc/factor.hpp"
#include "ffdisc/poly.hpp"

namespace ffdisc {

// Basis of a finite abelian group given by an element list and multiplication:
// returns generators g_i with orders m_1 >= m_2 >= ... (each dividing the
// previous) such that the group is the internal direct sum of the <g_i>.
// Elements are opaque ids; id 0..n-1 need not be contiguous group-theoretically,
// the caller supplies identity and mul.
struct AbelianBasis {
    std::vector<std::uint32_t> gens;
    std::vector<std::uint64_t> orders;
};
AbelianBasis abelian_basis(const std::vector<std::uint32_t>& elems, std::uint32_t identity,
                           const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& mul);

// (F_q[t]/Q)^x with a verified direct-sum generator decomposition and a full
// discrete-log table (residue lex index -> exponent vector).
struct UnitGroup {
    Poly Q;
    Factorization Qfac;
    std::uint64_t phi = 1;
    std::vector<Poly> gens;             // unit residues, deg < deg Q
    std::vector<std::uint64_t> orders;  // descending, product = phi
    std::vector<std::uint64_t> unit_ids;                       // lex indices of all units
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> dlog;

    bool is_unit(const Field& F, const Poly& A) const;
    const std::vector<std::uint32_t>& exponents(const Field& F, const Poly& A) const;
};

// deg Q >= 1; exhaustive construction, desk scale (phi(Q) capped)
std::shared_ptr<const UnitGroup> unit_group(const Field& F, const Poly& Q);

}  // namespace ffdisc
