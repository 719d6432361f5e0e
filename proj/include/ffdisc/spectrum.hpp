#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "ffdisc/multfn.hpp"
#include "ffdisc/recurrence.hpp"

namespace ffdisc {

// Roots of p(z) = prod_{P|Q} (z^{deg P} - conj f(P)), with multiplicities.
// Exact mode groups rational rotations; numeric mode clusters complex roots
// with an explicit ambiguity band [1e-9, 1e-6].
struct RootSpectrum {
    bool exact = true;
    bool ambiguous = false;
    // exact mode: rotation (reduced fraction) and multiplicity
    std::vector<std::pair<RootOfUnity, int>> roots;
    // numeric mode: cluster representative and multiplicity
    std::vector<std::pair<std::complex<double>, int>> clusters;

    int max_multiplicity() const;
    int total() const;  // sum of multiplicities = deg p
    std::vector<std::complex<double>> values() const;
    std::vector<int> multiplicities() const;
};

RootSpectrum root_spectrum(const Field& F, const ModifiedChar& mc);

struct GrowthVerdict {
    enum class Kind { bounded, unbounded, indeterminate };
    Kind kind = Kind::bounded;
    int b = 1;               // highest effective multiplicity
    double exponent = 0.0;   // b - 1 along a subsequence, when unbounded
    double bound = 0.0;      // sum_j |a_{j,1}| |NUM(root_j)| certificate, when bounded
    bool odd_constant_adjustment = false;  // chi nontrivial on constants: extra root at z = 1
    RootSpectrum spectrum;
    std::string note;
};

// Root-multiplicity growth classification for a modified character with
// nonprincipal chi. When chi is nontrivial on the constants, the partial-sum
// generating function L(z,chi) / (prod_P (1 - f(P) z^{deg P}) (1-z)) keeps an
// uncancelled pole at z = 1, which joins the root multiset with multiplicity 1.
// with_certificate = false skips the partial-fraction bound (verdict only).
GrowthVerdict classify_growth(const Field& F, const ModifiedChar& mc, bool with_certificate = true);

// Combinatorial rules for +-1 twists: two factors z^m = a, z^n = b share a
// root iff (a=b=1) or (a=b=-1 and v2(m)=v2(n)) or (a=-1, b=1 and v2(m)<v2(n));
// an odd chi additionally places z = 1, colliding with any +1 twist.
// Requires all twist values in {+1,-1}.
GrowthVerdict classify_pm1(const Field& F, const ModifiedChar& mc);

int v2(std::uint64_t n);

}  // namespace ffdisc
