#include "ffdisc/field.hpp"

#include <stdexcept>

namespace ffdisc {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// arithmetic on base-p packed coefficient vectors (no modulus reduction)
std::uint32_t packed_add(std::uint32_t p, std::uint32_t a, std::uint32_t b) {
    std::uint32_t r = 0, mul = 1;
    while (a || b) {
        r += mul * ((a % p + b % p) % p);
        a /= p;
        b /= p;
        mul *= p;
    }
    return r;
}

std::vector<std::uint32_t> unpack(std::uint32_t p, std::uint32_t k, std::uint32_t a) {
    std::vector<std::uint32_t> v(k, 0);
    for (std::uint32_t i = 0; i < k && a; ++i) {
        v[i] = a % p;
        a /= p;
    }
    return v;
}

std::uint32_t pack(std::uint32_t p, const std::vector<std::uint32_t>& v) {
    std::uint32_t a = 0, mul = 1;
    for (std::uint32_t x : v) {
        a += mul * x;
        mul *= p;
    }
    return a;
}

// multiply coefficient vectors over F_p, reduce mod the (monic) modulus
std::uint32_t packed_mul_mod(std::uint32_t p, std::uint32_t k, const std::vector<std::uint32_t>& mod,
                             std::uint32_t a, std::uint32_t b) {
    const auto va = unpack(p, k, a);
    const auto vb = unpack(p, k, b);
    std::vector<std::uint32_t> prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + va[i] * vb[j]) % p;
    for (int i = static_cast<int>(prod.size()) - 1; i >= static_cast<int>(k); --i) {
        const std::uint32_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (std::uint32_t j = 0; j < k; ++j) {
            // prod[i-k+j] -= c * mod[j]
            const std::uint32_t s = (c * mod[j]) % p;
            prod[i - k + j] = (prod[i - k + j] + p - s) % p;
        }
    }
    prod.resize(k);
    return pack(p, prod);
}

// irreducibility over F_p of a monic degree-k coefficient vector, by brute
// force against all monic factors of degree <= k/2 (k is tiny here)
bool packed_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& f) {
    const std::uint32_t k = static_cast<std::uint32_t>(f.size()) - 1;
    auto rem_zero = [&](const std::vector<std::uint32_t>& d) {
        std::vector<std::uint32_t> r = f;
        const std::uint32_t dd = static_cast<std::uint32_t>(d.size()) - 1;
        for (int i = static_cast<int>(r.size()) - 1; i >= static_cast<int>(dd); --i) {
            const std::uint32_t c = r[i];
            if (c == 0) continue;
            for (std::uint32_t j = 0; j <= dd; ++j) {
                const std::uint32_t s = (c * d[j]) % p;
                r[i - dd + j] = (r[i - dd + j] + p - s) % p;
            }
        }
        for (std::uint32_t i = 0; i < dd; ++i)
            if (r[i] != 0) return false;
        return true;
    };
    for (std::uint32_t dd = 1; 2 * dd <= k; ++dd) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < dd; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint32_t> d(dd + 1, 0);
            std::uint64_t x = idx;
            for (std::uint32_t i = 0; i < dd; ++i) {
                d[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            d[dd] = 1;
            if (rem_zero(d)) return false;
        }
    }
    return true;
}

}  // namespace

Field Field::prime(std::uint32_t p, ElementOrder ord) {
    if (!is_prime_u32(p)) throw std::invalid_argument("Field: p must be prime");
    Field F;
    F.p_ = p;
    F.k_ = 1;
    F.q_ = p;
    F.build_tables();
    F.build_order(ord);
    return F;
}

Field Field::extension(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> ext_modulus,
                       ElementOrder ord) {
    if (!is_prime_u32(p)) throw std::invalid_argument("Field: p must be prime");
    if (k < 1) throw std::invalid_argument("Field: k must be >= 1");
    if (k == 1) return prime(p, ord);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > (1u << 20)) throw std::invalid_argument("Field: q too large");
    }
    Field F;
    F.p_ = p;
    F.k_ = k;
    F.q_ = static_cast<std::uint32_t>(q);
    if (ext_modulus.empty()) {
        // lexicographically least monic irreducible of degree k over F_p
        const std::uint64_t lowers = q;  // p^k combinations of the lower coefficients
        bool found = false;
        for (std::uint64_t idx = 0; idx < lowers && !found; ++idx) {
            std::vector<std::uint32_t> f(k + 1, 0);
            std::uint64_t x = idx;
            for (std::uint32_t i = 0; i < k; ++i) {
                f[i] = static_cast<std::uint32_t>(x % p);
                x /= p;
            }
            f[k] = 1;
            if (packed_irreducible(p, f)) {
                ext_modulus = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("Field: no irreducible modulus found");
    } else {
        if (ext_modulus.size() != k + 1 || ext_modulus.back() != 1)
            throw std::invalid_argument("Field: ext_modulus must be monic of degree k");
        for (auto c : ext_modulus)
            if (c >= p) throw std::invalid_argument("Field: ext_modulus coefficient out of range");
        if (!packed_irreducible(p, ext_modulus))
            throw std::invalid_argument("Field: ext_modulus is reducible over F_p");
    }
    F.ext_modulus_ = std::move(ext_modulus);
    F.build_tables();
    F.build_order(ord);
    return F;
}

Field Field::of_size(std::uint32_t q, ElementOrder ord) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (!is_prime_u32(p)) continue;
        std::uint32_t k = 0;
        std::uint64_t x = 1;
        while (x < q) {
            x *= p;
            ++k;
        }
        if (x == q) return k == 1 ? prime(p, ord) : extension(p, k, {}, ord);
        if (q % p == 0) break;
    }
    throw std::invalid_argument("Field: q is not a prime power");
}

void Field::build_tables() {
    const std::size_t n = static_cast<std::size_t>(q_) * q_;
    add_.assign(n, 0);
    mul_.assign(n, 0);
    neg_.assign(q_, 0);
    inv_.assign(q_, 0);
    trace_.assign(q_, 0);
    if (k_ == 1) {
        for (std::uint32_t a = 0; a < q_; ++a) {
            neg_[a] = (q_ - a) % q_;
            trace_[a] = a;
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_[idx(a, b)] = (a + b) % q_;
                mul_[idx(a, b)] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % q_);
            }
        }
    } else {
        for (std::uint32_t a = 0; a < q_; ++a)
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_[idx(a, b)] = packed_add(p_, a, b);
                mul_[idx(a, b)] = packed_mul_mod(p_, k_, ext_modulus_, a, b);
            }
        for (std::uint32_t a = 0; a < q_; ++a) {
            // -a componentwise
            std::uint32_t r = 0, m = 1, x = a;
            while (x) {
                r += m * ((p_ - x % p_) % p_);
                x /= p_;
                m *= p_;
            }
            neg_[a] = r;
        }
        auto pow_p = [&](std::uint32_t x) {
            std::uint32_t r = 1, b = x, e = p_;
            while (e) {
                if (e & 1) r = mul_[idx(r, b)];
                b = mul_[idx(b, b)];
                e >>= 1;
            }
            return r;
        };
        for (std::uint32_t a = 0; a < q_; ++a) {
            // tr(a) = a + a^p + ... + a^{p^{k-1}}
            std::uint32_t s = 0, x = a;
            for (std::uint32_t i = 0; i < k_; ++i) {
                s = add(s, x);
                x = pow_p(x);
            }
            trace_[a] = s;  // lies in the prime subfield: packed value < p
        }
    }
    // inverses
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[idx(a, b)] == 1) {
                inv_[a] = b;
                break;
            }
    // least generator
    for (std::uint32_t g = 1; g < q_; ++g) {
        std::uint32_t x = g, ord = 1;
        while (x != 1) {
            x = mul(x, g);
            ++ord;
        }
        if (ord == q_ - 1) {
            gen_ = g;
            break;
        }
    }
    if (q_ == 2) gen_ = 1;
}

void Field::build_order(ElementOrder ord) {
    ord_ = ord;
    size_.assign(q_, 0);
    elem_.assign(q_, 0);
    if (ord == ElementOrder::natural) {
        for (std::uint32_t a = 0; a < q_; ++a) {
            size_[a] = a;
            elem_[a] = a;
        }
        return;
    }
    // 0, g^0, g^1, ..., g^{q-2}
    size_[0] = 0;
    elem_[0] = 0;
    std::uint32_t x = 1;
    for (std::uint32_t j = 0; j + 1 < q_; ++j) {
        size_[x] = j + 1;
        elem_[j + 1] = x;
        x = mul(x, gen_);
    }
}

std::uint32_t Field::inv(std::uint32_t a) const {
    if (a == 0) throw std::domain_error("Field: inverse of zero");
    return inv_[a];
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, b = a;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

std::string Field::describe() const {
    std::string s = "F_" + std::to_string(q_);
    if (k_ > 1) {
        s += " = F_" + std::to_string(p_) + "[u]/(";
        bool first = true;
        for (int i = static_cast<int>(k_); i >= 0; --i) {
            const std::uint32_t c = ext_modulus_[static_cast<std::size_t>(i)];
            if (c == 0) continue;
            if (!first) s += "+";
            first = false;
            if (i == 0 || c != 1) s += std::to_string(c);
            if (i >= 1) s += "u";
            if (i >= 2) s += "^" + std::to_string(i);
        }
        s += ")";
    }
    return s;
}

}  // namespace ffdisc
