#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

#include "ffdisc/poly.hpp"

namespace ffdisc {

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e);
inline std::uint64_t count_monics(const Field& F, int n) { return n < 0 ? 0 : pow_u64(F.q(), static_cast<std::uint32_t>(n)); }

// degree-n monic with the given lex offset in [0, q^n): t^n plus the unranked tail
Poly monic_of_index(const Field& F, int n, std::uint64_t idx);
// offset of a monic within its degree slice
std::uint64_t monic_index(const Field& F, const Poly& g);

// visits M_n in lexicographic index order
void for_each_monic(const Field& F, int n, const std::function<void(const Poly&)>& fn);
// visits M_{<=n}, degree by degree
void for_each_monic_up_to(const Field& F, int n, const std::function<void(const Poly&)>& fn);
// all of F_q[t] with deg < n (q^n polynomials, including 0)
void for_each_poly_below(const Field& F, int n, const std::function<void(const Poly&)>& fn);

// I_H(G0) = {G monic : deg(G - G0) < H}; requires 1 <= H <= deg G0.
// The member at offset j has its low H coefficients set from j.
Poly short_interval_member(const Field& F, const Poly& G0, int H, std::uint64_t j);
// the member divisible by t^H (lexicographically least, the run start)
Poly short_interval_base(const Field& F, const Poly& G0, int H);
void check_short_interval(const Field& F, const Poly& G0, int H);

// Cached tables of monic irreducibles, sorted by lex index. Generation is by
// sieve over M_n against lower-degree tables for small n and a direct
// irreducibility test otherwise. Optionally persisted as text files:
//   ffdisc-irr v1 q=<q> deg=<d> count=<n>
// followed by one ascending comma-separated coefficient list per line.
class IrrTable {
  public:
    explicit IrrTable(const Field& F, std::string cache_dir = "");

    const std::vector<Poly>& of_degree(int d) const;
    std::uint64_t count(int d) const { return of_degree(d).size(); }
    // index of P within the degree slice, by binary search
    std::uint64_t rank(const Poly& P) const;

    const Field& field() const { return F_; }

  private:
    void ensure(int d) const;
    std::string cache_path(int d) const;
    bool load_cache(int d, std::vector<Poly>& out) const;
    void store_cache(int d, const std::vector<Poly>& tab) const;

    const Field& F_;
    std::string cache_dir_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Poly>> tabs_;
};

// deterministic irreducibility test (Rabin)
bool is_irreducible(const Field& F, const Poly& f);

}  // namespace ffdisc
