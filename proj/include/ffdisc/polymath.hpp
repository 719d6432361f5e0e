#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ffdisc/multfn.hpp"

namespace ffdisc {

// One degree of the bounded-discrepancy construction: alpha_d is the
// Lambda-weighted degree-d sum of f, beta_d the plain one, tied by the exact
// recursion d beta_d = sum_{i=1..d} alpha_i beta_{d-i}. minus_count is the
// number of degree-d irreducibles assigned the value -1 (the first ones in
// lex order).
struct PolymathRow {
    int d = 0;
    std::int64_t alpha = 0;
    std::int64_t beta = 0;
    std::int64_t cumulative = 0;      // beta_0 + ... + beta_d
    std::uint64_t minus_count = 0;    // of pi_q(d) irreducibles
    std::uint64_t pi = 0;             // pi_q(d)
};

struct PolymathState {
    std::int64_t C = 0;               // achieved bound: 0 <= cumulative <= C at every degree
    std::uint64_t nodes_visited = 0;
    std::vector<PolymathRow> rows;    // degrees 1..d_max
};

// Depth-first search over achievable alpha_d with 0 <= sum beta <= C; C starts
// at the given value and is incremented on failure up to C_max. Node budget
// bounds backtracking.
std::optional<PolymathState> polymath_construct(const Field& F, int d_max, std::int64_t C = 2,
                                                std::int64_t C_max = 8,
                                                std::uint64_t node_budget = 1000000);

// number of monic irreducibles of degree d (Gauss's formula)
std::uint64_t irreducible_count(const Field& F, int d);

// the completely multiplicative realization: -1 on the first minus_count
// degree-d irreducibles (lex order), +1 on the rest; evaluation needs the
// degree-d table, so it is limited to degrees with an affordable table
MultFn polymath_realize(const Field& F, const IrrTable& tab, const PolymathState& st);

// finite-swap variant: at each listed degree d the last -1 irreducible and the
// first +1 irreducible exchange signs, leaving every alpha_d (hence the whole
// beta sequence) unchanged; each degree needs 0 < minus_count < pi_d
MultFn polymath_swap_variant(const Field& F, const IrrTable& tab, const PolymathState& st,
                             std::vector<int> swap_degrees);

}  // namespace ffdisc
