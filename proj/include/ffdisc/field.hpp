#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace ffdisc {

// Ordering of F_q used by the lexicographic index <.>; always <0> = 0.
enum class ElementOrder {
    natural,    // prime fields: 0,1,...,p-1; extensions: coefficient-vector order
    generator,  // 0, g^0, g^1, ..., g^{q-2} for the least generator g
};

// F_q with q = p^k. Elements are indices in [0,q): the value itself for prime
// fields, base-p packed coefficient vectors (against ext_modulus) for extensions.
class Field {
  public:
    static Field prime(std::uint32_t p, ElementOrder ord = ElementOrder::natural);
    // ext_modulus: ascending coefficients over F_p of a monic irreducible of degree k;
    // empty selects the lexicographically least one.
    static Field extension(std::uint32_t p, std::uint32_t k,
                           std::vector<std::uint32_t> ext_modulus = {},
                           ElementOrder ord = ElementOrder::natural);
    static Field of_size(std::uint32_t q, ElementOrder ord = ElementOrder::natural);

    std::uint32_t p() const { return p_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t q() const { return q_; }
    const std::vector<std::uint32_t>& ext_modulus() const { return ext_modulus_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[idx(a, b)]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[idx(a, neg_[b])]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[idx(a, b)]; }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    // trace down to F_p, returned as an element < p
    std::uint32_t trace(std::uint32_t a) const { return trace_[a]; }
    // least multiplicative generator in element-index order
    std::uint32_t generator() const { return gen_; }

    // the size map <a> and its inverse
    std::uint32_t size_of(std::uint32_t a) const { return size_[a]; }
    std::uint32_t elem_of_size(std::uint32_t s) const { return elem_[s]; }
    ElementOrder element_order() const { return ord_; }

    std::string describe() const;

  private:
    Field() = default;
    void build_tables();
    void build_order(ElementOrder ord);
    std::size_t idx(std::uint32_t a, std::uint32_t b) const { return static_cast<std::size_t>(a) * q_ + b; }

    std::uint32_t p_ = 0, k_ = 1, q_ = 0;
    std::vector<std::uint32_t> ext_modulus_;  // over F_p, ascending, size k+1, monic
    std::vector<std::uint32_t> add_, mul_, neg_, inv_, trace_;
    std::vector<std::uint32_t> size_, elem_;
    std::uint32_t gen_ = 0;
    ElementOrder ord_ = ElementOrder::natural;
};

}  // namespace ffdisc
