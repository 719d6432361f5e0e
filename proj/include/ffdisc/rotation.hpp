#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ffdisc {

// Exponents k_j >= 1 with |sum_j zeta_j^{k_j} w_j| >= m/7, for unit w_j and
// unit zeta_j != 1: pigeonhole a closed 2pi/3 arc holding >= m/3 of the w_j,
// align those members within 1/(100m) of their original position, and push
// the rest into the supporting semicircle.
std::vector<std::uint64_t> rotation_exponents(const std::vector<std::complex<double>>& w,
                                              const std::vector<std::complex<double>>& zeta);

}  // namespace ffdisc
