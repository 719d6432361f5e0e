#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ffdisc {

inline constexpr double kEqTol = 1e-9;

// e(x) = exp(2*pi*i*x)
inline std::complex<double> e_of(double turns) {
    const double a = 6.283185307179586476925286766559 * turns;
    return {std::cos(a), std::sin(a)};
}

inline bool approx_eq(std::complex<double> a, std::complex<double> b, double tol = kEqTol) {
    return std::abs(a - b) <= tol;
}

// Exact root of unity e(num/den), reduced, 0 <= num < den.
struct RootOfUnity {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static RootOfUnity make(std::int64_t a, std::int64_t m) {
        if (m <= 0) throw std::invalid_argument("RootOfUnity: denominator must be positive");
        a %= m;
        if (a < 0) a += m;
        const std::int64_t g = std::gcd(a, m);
        RootOfUnity r;
        r.num = a / g;
        r.den = m / g;
        return r;
    }
    static RootOfUnity one() { return {}; }
    static RootOfUnity minus_one() { return {1, 2}; }

    bool is_one() const { return num == 0; }

    RootOfUnity operator*(const RootOfUnity& o) const {
        // num/den + o.num/o.den mod 1, via the lcm of the denominators
        const std::int64_t g = std::gcd(den, o.den);
        const std::int64_t l = den / g * o.den;
        const __int128 s = static_cast<__int128>(num) * (l / den) +
                           static_cast<__int128>(o.num) * (l / o.den);
        return make(static_cast<std::int64_t>(s % l), l);
    }
    RootOfUnity pow(std::int64_t k) const {
        const __int128 s = static_cast<__int128>(num) * (k % den);
        std::int64_t r = static_cast<std::int64_t>(s % den);
        return make(r, den);
    }
    RootOfUnity conj() const { return make(-num, den); }
    std::int64_t order() const { return den; }
    std::complex<double> value() const { return e_of(static_cast<double>(num) / static_cast<double>(den)); }

    bool operator==(const RootOfUnity&) const = default;

    // CLI literal "a/m"
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

// Rotation mod 1: exact rational when possible, binary64 otherwise.
class Phase {
  public:
    Phase() = default;
    static Phase of(RootOfUnity r) {
        Phase p;
        p.exact_ = true;
        p.root_ = r;
        return p;
    }
    static Phase turns(double x) {
        Phase p;
        p.exact_ = false;
        p.x_ = x - std::floor(x);
        return p;
    }
    static Phase one() { return {}; }

    bool exact() const { return exact_; }
    const RootOfUnity& root() const {
        if (!exact_) throw std::domain_error("Phase: not an exact root of unity");
        return root_;
    }
    double rotation() const {
        return exact_ ? static_cast<double>(root_.num) / static_cast<double>(root_.den) : x_;
    }
    bool is_one() const { return exact_ ? root_.is_one() : x_ == 0.0; }

    Phase operator*(const Phase& o) const {
        if (exact_ && o.exact_) return of(root_ * o.root_);
        return turns(rotation() + o.rotation());
    }
    Phase pow(std::int64_t k) const {
        if (exact_) return of(root_.pow(k));
        return turns(x_ * static_cast<double>(k));
    }
    Phase conj() const {
        if (exact_) return of(root_.conj());
        return turns(-x_);
    }
    std::complex<double> value() const { return exact_ ? root_.value() : e_of(x_); }

  private:
    bool exact_ = true;
    RootOfUnity root_{};
    double x_ = 0.0;
};

// A character/multiplicative-function value: zero, or a point on the unit circle.
class UnitVal {
  public:
    UnitVal() : zero_(true) {}
    static UnitVal zero() { return UnitVal{}; }
    static UnitVal of(Phase p) {
        UnitVal v;
        v.zero_ = false;
        v.ph_ = p;
        return v;
    }
    static UnitVal of(RootOfUnity r) { return of(Phase::of(r)); }
    static UnitVal one() { return of(Phase::one()); }

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && ph_.is_one(); }
    bool exact() const { return zero_ || ph_.exact(); }
    const Phase& phase() const {
        if (zero_) throw std::domain_error("UnitVal: zero has no phase");
        return ph_;
    }

    UnitVal operator*(const UnitVal& o) const {
        if (zero_ || o.zero_) return zero();
        return of(ph_ * o.ph_);
    }
    UnitVal pow(std::int64_t k) const {
        if (zero_) return zero();
        return of(ph_.pow(k));
    }
    UnitVal conj() const {
        if (zero_) return zero();
        return of(ph_.conj());
    }
    std::complex<double> value() const { return zero_ ? std::complex<double>{0.0, 0.0} : ph_.value(); }

  private:
    bool zero_ = true;
    Phase ph_{};
};

// Compensated accumulation; the scan sums run over up to q^N terms.
class KahanSum {
  public:
    void add(std::complex<double> x) {
        const std::complex<double> y = x - c_;
        const std::complex<double> t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    std::complex<double> get() const { return s_; }

  private:
    std::complex<double> s_{0.0, 0.0};
    std::complex<double> c_{0.0, 0.0};
};

}  // namespace ffdisc
