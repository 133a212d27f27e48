#pragma once

// Arithmetic in GF(p^e).
//
// Elements are encoded as integers: the polynomial c_0 + c_1 x + ... + c_{e-1} x^{e-1}
// maps to sum c_i p^i. Zero encodes to 0 and one to 1. Elements do not carry their
// field; a Field is passed alongside them.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace mincode {

struct Element {
    std::uint32_t value = 0;

    friend constexpr auto operator<=>(Element, Element) = default;
};

/// Fields up to this order get full addition/multiplication tables.
inline constexpr std::uint32_t kTableLimit = 256;

class Field {
public:
    /// Builds GF(p^e). Without a modulus the lexicographically least monic irreducible
    /// of degree e is used, comparing coefficients from the constant term upward.
    /// Throws not_prime, degree_mismatch or reducible.
    static Field make(std::uint32_t p, std::uint32_t e,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Builds GF(q) for a prime power q with the default modulus.
    static Field of_order(std::uint64_t q);

    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t e() const noexcept { return e_; }
    std::uint32_t q() const noexcept { return q_; }
    /// Monic modulus, coefficients from x^0 to x^e.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    bool has_tables() const noexcept { return tables_ != nullptr; }

    Element add(Element a, Element b) const noexcept {
        if (tables_) return Element{tables_->add[a.value * q_ + b.value]};
        return Element{slow_add(a.value, b.value)};
    }
    Element mul(Element a, Element b) const noexcept {
        if (tables_) return Element{tables_->mul[a.value * q_ + b.value]};
        return Element{slow_mul(a.value, b.value)};
    }
    Element neg(Element a) const noexcept {
        if (tables_) return Element{tables_->neg[a.value]};
        return Element{slow_neg(a.value)};
    }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    /// Throws division_by_zero for a = 0.
    Element inv(Element a) const;
    Element pow(Element a, std::uint64_t exponent) const noexcept;

    /// All q elements in increasing encoded value.
    std::vector<Element> elements() const;

    bool contains(Element a) const noexcept { return a.value < q_; }

    friend bool operator==(const Field& a, const Field& b) noexcept {
        return a.p_ == b.p_ && a.e_ == b.e_ && a.modulus_ == b.modulus_;
    }

private:
    struct Tables {
        std::vector<std::uint16_t> add;
        std::vector<std::uint16_t> mul;
        std::vector<std::uint16_t> neg;
        std::vector<std::uint16_t> inv;
    };

    Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus);

    std::uint32_t slow_add(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t slow_neg(std::uint32_t a) const noexcept;
    std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const noexcept;
    std::uint32_t slow_inv(std::uint32_t a) const noexcept;

    std::uint32_t p_ = 2;
    std::uint32_t e_ = 1;
    std::uint32_t q_ = 2;
    std::vector<std::uint32_t> modulus_;
    std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n) noexcept;

/// Irreducibility of a monic polynomial over GF(p), coefficients low to high.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

}  // namespace mincode
