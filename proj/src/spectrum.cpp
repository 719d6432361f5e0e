#include "ffdisc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace ffdisc {

int RootSpectrum::max_multiplicity() const {
    int b = 0;
    if (exact)
        for (const auto& [r, m] : roots) b = std::max(b, m);
    else
        for (const auto& [z, m] : clusters) b = std::max(b, m);
    return b;
}

int RootSpectrum::total() const {
    int t = 0;
    if (exact)
        for (const auto& [r, m] : roots) t += m;
    else
        for (const auto& [z, m] : clusters) t += m;
    return t;
}

std::vector<std::complex<double>> RootSpectrum::values() const {
    std::vector<std::complex<double>> v;
    if (exact)
        for (const auto& [r, m] : roots) v.push_back(r.value());
    else
        for (const auto& [z, m] : clusters) v.push_back(z);
    return v;
}

std::vector<int> RootSpectrum::multiplicities() const {
    std::vector<int> v;
    if (exact)
        for (const auto& [r, m] : roots) v.push_back(m);
    else
        for (const auto& [z, m] : clusters) v.push_back(m);
    return v;
}

int v2(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("v2(0)");
    int k = 0;
    while ((n & 1) == 0) {
        n >>= 1;
        ++k;
    }
    return k;
}

namespace {

// raw roots of p(z): for each P | Q with f(P) = e(rho), deg P values
// e((-rho + j)/deg P); exact when every twist is rational
struct RawRoots {
    bool exact = true;
    std::vector<RootOfUnity> exact_roots;
    std::vector<std::complex<double>> numeric_roots;
};

RawRoots raw_roots(const ModifiedChar& mc) {
    RawRoots rr;
    for (const auto& [P, v] : mc.twists)
        if (!v.exact()) rr.exact = false;
    for (const auto& [P, v] : mc.twists) {
        const int dp = deg(P);
        if (rr.exact) {
            const RootOfUnity r = v.root();
            for (int j = 0; j < dp; ++j) {
                // (-num/den + j) / dp = (-num + j den) / (den dp)
                rr.exact_roots.push_back(RootOfUnity::make(
                    -r.num + static_cast<std::int64_t>(j) * r.den,
                    r.den * static_cast<std::int64_t>(dp)));
            }
        } else {
            const double rho = v.rotation();
            for (int j = 0; j < dp; ++j)
                rr.numeric_roots.push_back(e_of((-rho + j) / dp));
        }
    }
    return rr;
}

RootSpectrum spectrum_from_raw(const RawRoots& rr) {
    RootSpectrum sp;
    sp.exact = rr.exact;
    if (rr.exact) {
        std::map<std::pair<std::int64_t, std::int64_t>, int> counts;
        for (const RootOfUnity& r : rr.exact_roots) counts[{r.num, r.den}] += 1;
        for (const auto& [key, m] : counts)
            sp.roots.emplace_back(RootOfUnity{key.first, key.second}, m);
    } else {
        std::vector<std::complex<double>> pending = rr.numeric_roots;
        std::vector<char> used(pending.size(), 0);
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (used[i]) continue;
            int m = 1;
            used[i] = 1;
            for (std::size_t j = i + 1; j < pending.size(); ++j) {
                if (used[j]) continue;
                const double dist = std::abs(pending[i] - pending[j]);
                if (dist <= 1e-9) {
                    used[j] = 1;
                    ++m;
                } else if (dist < 1e-6) {
                    sp.ambiguous = true;  // near-coincident, refuse to decide
                }
            }
            sp.clusters.emplace_back(pending[i], m);
        }
    }
    return sp;
}

}  // namespace

RootSpectrum root_spectrum(const Field& F, const ModifiedChar& mc) {
    (void)F;
    return spectrum_from_raw(raw_roots(mc));
}

GrowthVerdict classify_growth(const Field& F, const ModifiedChar& mc, bool with_certificate) {
    if (!mc.chi_nonprincipal())
        throw std::invalid_argument("classify_growth: nonprincipal chi required");
    GrowthVerdict out;
    out.spectrum = root_spectrum(F, mc);
    out.odd_constant_adjustment = !mc.chi.trivial_on_constants(F);
    if (out.spectrum.ambiguous) {
        out.kind = GrowthVerdict::Kind::indeterminate;
        out.note = "near-coincident roots inside the ambiguity band";
        return out;
    }

    // effective pole multiset: spectrum plus z = 1 when chi is odd
    std::vector<std::complex<double>> vals = out.spectrum.values();
    std::vector<int> mult = out.spectrum.multiplicities();
    if (out.odd_constant_adjustment) {
        bool merged = false;
        if (out.spectrum.exact) {
            for (std::size_t i = 0; i < vals.size(); ++i)
                if (out.spectrum.roots[i].first.is_one()) {
                    mult[i] += 1;
                    merged = true;
                }
        } else {
            for (std::size_t i = 0; i < vals.size(); ++i)
                if (std::abs(vals[i] - std::complex<double>{1.0, 0.0}) <= 1e-9) {
                    mult[i] += 1;
                    merged = true;
                }
        }
        if (!merged) {
            vals.push_back({1.0, 0.0});
            mult.push_back(1);
        }
    }
    out.b = *std::max_element(mult.begin(), mult.end());

    if (out.b >= 2) {
        out.kind = GrowthVerdict::Kind::unbounded;
        out.exponent = out.b - 1;
        return out;
    }
    out.kind = GrowthVerdict::Kind::bounded;
    if (!with_certificate) return out;
    // certificate: u_N = sum_j a_j mu_j^N NUM(conj mu_j) with mu_j = conj(root_j),
    // so |u_N| <= sum_j |a_j| |NUM(root_j)|. NUM is the (1-z)-reduced polynomial
    // (coefficients A_m) for even chi, and L itself for odd chi.
    const LPolynomial lp = l_polynomial(F, mc.chi);
    std::vector<std::complex<double>> mu;
    for (const auto& z : vals) mu.push_back(std::conj(z));
    double bound = 0.0;
    for (std::size_t j = 0; j < mu.size(); ++j) {
        std::complex<double> denom = 1.0;
        for (std::size_t i = 0; i < mu.size(); ++i) {
            if (i == j) continue;
            denom *= 1.0 - mu[i] * std::conj(mu[j]);
        }
        const std::complex<double> a = 1.0 / denom;
        const std::complex<double> num =
            out.odd_constant_adjustment ? lp.eval_L(vals[j]) : lp.eval_A(vals[j]);
        bound += std::abs(a) * std::abs(num);
    }
    out.bound = bound;
    return out;
}

GrowthVerdict classify_pm1(const Field& F, const ModifiedChar& mc) {
    if (!mc.chi_nonprincipal())
        throw std::invalid_argument("classify_pm1: nonprincipal chi required");
    struct Sign {
        int sign;  // +1 / -1
        int d;     // deg P
    };
    std::vector<Sign> signs;
    for (const auto& [P, v] : mc.twists) {
        if (!v.exact() || v.root().den > 2)
            throw std::invalid_argument("classify_pm1: twist values must be +-1");
        signs.push_back({v.root().is_one() ? 1 : -1, deg(P)});
    }
    const bool odd = !mc.chi.trivial_on_constants(F);
    bool multiple = false;
    for (std::size_t i = 0; i < signs.size() && !multiple; ++i)
        for (std::size_t j = i + 1; j < signs.size() && !multiple; ++j) {
            const auto &a = signs[i], &b = signs[j];
            if (a.sign == 1 && b.sign == 1) multiple = true;
            else if (a.sign == -1 && b.sign == -1)
                multiple = v2(static_cast<std::uint64_t>(a.d)) == v2(static_cast<std::uint64_t>(b.d));
            else {
                const int dm = a.sign == -1 ? a.d : b.d;  // the -1 twist
                const int dp = a.sign == -1 ? b.d : a.d;  // the +1 twist
                multiple = v2(static_cast<std::uint64_t>(dm)) < v2(static_cast<std::uint64_t>(dp));
            }
        }
    if (odd && !multiple)
        for (const Sign& s : signs)
            if (s.sign == 1) multiple = true;

    GrowthVerdict out;
    out.odd_constant_adjustment = odd;
    out.kind = multiple ? GrowthVerdict::Kind::unbounded : GrowthVerdict::Kind::bounded;
    out.b = multiple ? 2 : 1;  // the table only decides bounded vs not
    out.note = "combinatorial +-1 rule";
    return out;
}

}  // namespace ffdisc
