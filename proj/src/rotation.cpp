#include "ffdisc/rotation.hpp"

#include <cmath>
#include <stdexcept>

namespace ffdisc {

std::vector<std::uint64_t> rotation_exponents(const std::vector<std::complex<double>>& w,
                                              const std::vector<std::complex<double>>& zeta) {
    const std::size_t m = w.size();
    if (zeta.size() != m) throw std::invalid_argument("rotation_exponents: size mismatch");
    if (m == 0) return {};
    constexpr double tau = 6.283185307179586476925286766559;
    for (std::size_t j = 0; j < m; ++j) {
        if (std::abs(std::abs(w[j]) - 1.0) > 1e-9 || std::abs(std::abs(zeta[j]) - 1.0) > 1e-9)
            throw std::invalid_argument("rotation_exponents: inputs must be unimodular");
        if (std::abs(zeta[j] - std::complex<double>{1.0, 0.0}) <= 1e-12)
            throw std::invalid_argument("rotation_exponents: zeta_j = 1 rejected");
    }
    // pigeonhole: one of three closed arcs of length 2pi/3 holds >= m/3 of the w_j
    std::size_t best_arc = 0, best_count = 0;
    for (std::size_t arc = 0; arc < 3; ++arc) {
        const double lo = tau * static_cast<double>(arc) / 3.0;
        std::size_t count = 0;
        for (std::size_t j = 0; j < m; ++j) {
            double a = std::arg(w[j]);
            if (a < 0) a += tau;
            if (a >= lo - 1e-12 && a <= lo + tau / 3.0 + 1e-12) ++count;
        }
        if (count > best_count) {
            best_count = count;
            best_arc = arc;
        }
    }
    const double arc_lo = tau * static_cast<double>(best_arc) / 3.0;
    const double mid = arc_lo + tau / 6.0;
    const std::complex<double> alpha = std::polar(1.0, -mid);  // Re(alpha z) >= 0 is the half-plane

    std::vector<std::uint64_t> k(m, 1);
    const double close = 1.0 / (100.0 * static_cast<double>(m));
    for (std::size_t j = 0; j < m; ++j) {
        double a = std::arg(w[j]);
        if (a < 0) a += tau;
        const bool member = a >= arc_lo - 1e-12 && a <= arc_lo + tau / 3.0 + 1e-12;
        std::complex<double> z = zeta[j];
        std::uint64_t kj = 1;
        if (member) {
            // walk until zeta^k is within 1/(100m) of 1
            const std::uint64_t limit = 2000000 + 800 * static_cast<std::uint64_t>(m) * m;
            while (std::abs(z - std::complex<double>{1.0, 0.0}) > close) {
                z *= zeta[j];
                if (++kj > limit) throw std::logic_error("rotation_exponents: alignment walk stalled");
            }
        } else {
            // walk until zeta^k w lands in the closed supporting semicircle
            const std::uint64_t limit = 2000000;
            while ((alpha * z * w[j]).real() < 0.0) {
                z *= zeta[j];
                if (++kj > limit) throw std::logic_error("rotation_exponents: semicircle walk stalled");
            }
        }
        k[j] = kj;
    }
    return k;
}

}  // namespace ffdisc
