#include "ffdisc/polymath.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>

#include "ffdisc/enumerate.hpp"

namespace ffdisc {

namespace {

int moebius_int(int n) {
    int m = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        m = -m;
    }
    if (n > 1) m = -m;
    return m;
}

}  // namespace

std::uint64_t irreducible_count(const Field& F, int d) {
    if (d < 1) throw std::invalid_argument("irreducible_count: d >= 1");
    // pi_q(d) = (1/d) sum_{e|d} mu(e) q^{d/e}
    std::int64_t acc = 0;
    for (int e = 1; e <= d; ++e) {
        if (d % e) continue;
        acc += static_cast<std::int64_t>(moebius_int(e)) *
               static_cast<std::int64_t>(pow_u64(F.q(), static_cast<std::uint32_t>(d / e)));
    }
    return static_cast<std::uint64_t>(acc / d);
}

std::optional<PolymathState> polymath_construct(const Field& F, int d_max, std::int64_t C,
                                                std::int64_t C_max, std::uint64_t node_budget) {
    if (d_max < 1) throw std::invalid_argument("polymath_construct: d_max >= 1");
    std::vector<std::uint64_t> pi(static_cast<std::size_t>(d_max) + 1, 0);
    for (int d = 1; d <= d_max; ++d) pi[static_cast<std::size_t>(d)] = irreducible_count(F, d);

    for (; C <= C_max; ++C) {
        std::uint64_t nodes = 0;
        std::vector<std::int64_t> alpha(static_cast<std::size_t>(d_max) + 1, 0);
        std::vector<std::int64_t> beta(static_cast<std::size_t>(d_max) + 1, 0);
        std::vector<std::uint64_t> minus(static_cast<std::size_t>(d_max) + 1, 0);
        beta[0] = 1;

        // depth-first over degrees; at degree d the achievable alpha are
        //   fixed_d + d (pi_d - 2 j), 0 <= j <= pi_d,
        // fixed_d the contribution of lower-degree prime powers P^{d/e}
        std::function<bool(int, std::int64_t)> dfs = [&](int d, std::int64_t cum) -> bool {
            if (d > d_max) return true;
            if (++nodes > node_budget) return false;
            std::int64_t fixed = 0;
            for (int e = 1; e < d; ++e) {
                if (d % e) continue;
                const int k = d / e;
                const std::int64_t se = (k % 2 == 0)
                                            ? static_cast<std::int64_t>(pi[static_cast<std::size_t>(e)])
                                            : static_cast<std::int64_t>(pi[static_cast<std::size_t>(e)]) -
                                                  2 * static_cast<std::int64_t>(minus[static_cast<std::size_t>(e)]);
                fixed += static_cast<std::int64_t>(e) * se;
            }
            std::int64_t conv = 0;  // sum_{i<d} alpha_i beta_{d-i}
            for (int i = 1; i < d; ++i) conv += alpha[static_cast<std::size_t>(i)] * beta[static_cast<std::size_t>(d - i)];

            // candidate beta_d keeping 0 <= cum + beta_d <= C, ordered by
            // |cum + beta_d| then by |beta_d|
            std::vector<std::int64_t> cands;
            for (std::int64_t b = -cum; b <= C - cum; ++b) cands.push_back(b);
            std::sort(cands.begin(), cands.end(), [&](std::int64_t a, std::int64_t b) {
                const std::int64_t ca = std::llabs(cum + a), cb = std::llabs(cum + b);
                if (ca != cb) return ca < cb;
                if (std::llabs(a) != std::llabs(b)) return std::llabs(a) < std::llabs(b);
                return a < b;
            });
            for (const std::int64_t b : cands) {
                // alpha_d = d b - conv must be achievable: alpha = fixed + d(pi - 2j)
                const std::int64_t a = static_cast<std::int64_t>(d) * b - conv;
                const std::int64_t off = a - fixed;
                if (off % d != 0) continue;
                const std::int64_t t = off / d;  // = pi - 2j
                const std::int64_t pid = static_cast<std::int64_t>(pi[static_cast<std::size_t>(d)]);
                if (t > pid || t < -pid) continue;
                if ((pid - t) % 2 != 0) continue;
                alpha[static_cast<std::size_t>(d)] = a;
                beta[static_cast<std::size_t>(d)] = b;
                minus[static_cast<std::size_t>(d)] = static_cast<std::uint64_t>((pid - t) / 2);
                if (dfs(d + 1, cum + b)) return true;
                if (nodes > node_budget) return false;
            }
            return false;
        };

        if (dfs(1, beta[0])) {
            PolymathState st;
            st.C = C;
            st.nodes_visited = nodes;
            std::int64_t cum = beta[0];
            for (int d = 1; d <= d_max; ++d) {
                cum += beta[static_cast<std::size_t>(d)];
                st.rows.push_back({d, alpha[static_cast<std::size_t>(d)], beta[static_cast<std::size_t>(d)],
                                   cum, minus[static_cast<std::size_t>(d)], pi[static_cast<std::size_t>(d)]});
            }
            // exact recursion check in integer arithmetic
            for (int d = 1; d <= d_max; ++d) {
                __int128 rhs = 0;
                for (int i = 1; i <= d; ++i)
                    rhs += static_cast<__int128>(alpha[static_cast<std::size_t>(i)]) *
                           beta[static_cast<std::size_t>(d - i)];
                if (rhs != static_cast<__int128>(d) * beta[static_cast<std::size_t>(d)])
                    throw std::logic_error("polymath_construct: recursion identity violated");
            }
            return st;
        }
    }
    return std::nullopt;
}

MultFn polymath_realize(const Field& F, const IrrTable& tab, const PolymathState& st) {
    (void)F;
    auto minus = std::make_shared<std::vector<std::uint64_t>>();
    minus->push_back(0);
    for (const PolymathRow& r : st.rows) minus->push_back(r.minus_count);
    const IrrTable* tabp = &tab;
    return MultFn::custom([minus, tabp](const Field& FF, const Poly& P) {
        (void)FF;
        const int d = deg(P);
        if (d <= 0 || static_cast<std::size_t>(d) >= minus->size())
            throw std::out_of_range("polymath realization: degree beyond the certificate");
        const std::uint64_t r = tabp->rank(P);
        return UnitVal::of((*minus)[static_cast<std::size_t>(d)] > r ? RootOfUnity::minus_one()
                                                                     : RootOfUnity::one());
    });
}

MultFn polymath_swap_variant(const Field& F, const IrrTable& tab, const PolymathState& st,
                             std::vector<int> swap_degrees) {
    (void)F;
    auto minus = std::make_shared<std::vector<std::uint64_t>>();
    minus->push_back(0);
    for (const PolymathRow& r : st.rows) minus->push_back(r.minus_count);
    for (int d : swap_degrees) {
        if (d < 1 || static_cast<std::size_t>(d) >= minus->size())
            throw std::invalid_argument("polymath_swap_variant: degree outside the certificate");
        const std::uint64_t m = (*minus)[static_cast<std::size_t>(d)];
        const std::uint64_t pi = st.rows[static_cast<std::size_t>(d - 1)].pi;
        if (m == 0 || m >= pi)
            throw std::invalid_argument("polymath_swap_variant: degree has no sign pair to swap");
    }
    auto swaps = std::make_shared<std::vector<int>>(std::move(swap_degrees));
    const IrrTable* tabp = &tab;
    return MultFn::custom([minus, swaps, tabp](const Field& FF, const Poly& P) {
        (void)FF;
        const int d = deg(P);
        if (d <= 0 || static_cast<std::size_t>(d) >= minus->size())
            throw std::out_of_range("polymath realization: degree beyond the certificate");
        const std::uint64_t m = (*minus)[static_cast<std::size_t>(d)];
        const std::uint64_t r = tabp->rank(P);
        bool neg = m > r;
        if (std::find(swaps->begin(), swaps->end(), d) != swaps->end())
            if (r + 1 == m || r == m) neg = !neg;  // swap the boundary pair
        return UnitVal::of(neg ? RootOfUnity::minus_one() : RootOfUnity::one());
    });
}

}  // namespace ffdisc
