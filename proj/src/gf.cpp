#include "mincode/gf.hpp"

#include <string>

#include "mincode/error.hpp"

namespace mincode {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::not_prime: return "NotPrime";
        case Errc::reducible: return "Reducible";
        case Errc::degree_mismatch: return "DegreeMismatch";
        case Errc::division_by_zero: return "DivisionByZero";
        case Errc::length_mismatch: return "LengthMismatch";
        case Errc::zero_vector: return "ZeroVector";
        case Errc::empty_defining_set: return "EmptyDefiningSet";
        case Errc::dimension_mismatch: return "DimensionMismatch";
        case Errc::too_large: return "TooLarge";
        case Errc::too_many_subspaces: return "TooManySubspaces";
        case Errc::not_projective: return "NotProjective";
        case Errc::bad_range: return "BadRange";
        case Errc::bad_index: return "BadIndex";
        case Errc::empty_s: return "EmptyS";
        case Errc::covers_whole_space: return "CoversWholeSpace";
        case Errc::ambient_mismatch: return "AmbientMismatch";
        case Errc::unsupported_family: return "UnsupportedFamily";
        case Errc::parse_error: return "ParseError";
        case Errc::io_error: return "IOError";
    }
    return "Unknown";
}

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic divisor over GF(p).
Poly poly_mod(Poly a, const Poly& monic, std::uint32_t p) {
    const std::size_t d = monic.size() - 1;
    trim(a);
    while (a.size() > d) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - d;
        for (std::size_t i = 0; i <= d; ++i) {
            const std::uint64_t sub = lead * monic[i] % p;
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (r > (std::uint64_t{1} << 31) / base) {
            throw Error(Errc::bad_range, "field order exceeds 2^31");
        }
        r *= base;
    }
    return r;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
    if (poly.size() < 2) return false;
    const std::size_t degree = poly.size() - 1;
    // Trial division by every monic polynomial of degree 1..degree/2.
    for (std::size_t d = 1; 2 * d <= degree; ++d) {
        const std::uint64_t count = checked_pow(p, static_cast<std::uint32_t>(d));
        Poly divisor(d + 1, 0);
        divisor[d] = 1;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (poly_mod(poly, divisor, p).empty()) return false;
        }
    }
    return true;
}

Field Field::make(std::uint32_t p, std::uint32_t e, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) throw Error(Errc::not_prime, std::to_string(p) + " is not prime");
    if (e < 1) throw Error(Errc::degree_mismatch, "extension degree must be at least 1");
    const std::uint64_t q = checked_pow(p, e);

    if (modulus) {
        Poly m = *modulus;
        if (m.size() != e + 1 || m.back() != 1) {
            throw Error(Errc::degree_mismatch, "modulus must be monic of degree " + std::to_string(e));
        }
        for (auto c : m) {
            if (c >= p) throw Error(Errc::degree_mismatch, "modulus coefficient out of range");
        }
        if (!is_irreducible(p, m)) throw Error(Errc::reducible, "modulus is reducible");
        return Field(p, e, std::move(m));
    }

    // Candidates in lexicographic order of (c_0, ..., c_{e-1}): c_0 most significant.
    const std::uint64_t count = q;
    Poly m(e + 1, 0);
    m[e] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::uint64_t rest = idx;
        for (std::uint32_t i = e; i-- > 0;) {
            m[i] = static_cast<std::uint32_t>(rest % p);
            rest /= p;
        }
        if (is_irreducible(p, m)) return Field(p, e, m);
    }
    throw Error(Errc::reducible, "no irreducible polynomial found");  // unreachable for prime p
}

Field Field::of_order(std::uint64_t q) {
    if (q < 2) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    std::uint32_t e = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++e;
    }
    if (rest != 1) throw Error(Errc::not_prime, std::to_string(q) + " is not a prime power");
    return make(static_cast<std::uint32_t>(p), e);
}

Field::Field(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(static_cast<std::uint32_t>(checked_pow(p, e))), modulus_(std::move(modulus)) {
    if (q_ > kTableLimit) return;
    auto t = std::make_shared<Tables>();
    t->add.resize(std::size_t{q_} * q_);
    t->mul.resize(std::size_t{q_} * q_);
    t->neg.resize(q_);
    t->inv.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) {
        t->neg[a] = static_cast<std::uint16_t>(slow_neg(a));
        for (std::uint32_t b = 0; b < q_; ++b) {
            t->add[a * q_ + b] = static_cast<std::uint16_t>(slow_add(a, b));
            t->mul[a * q_ + b] = static_cast<std::uint16_t>(slow_mul(a, b));
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a) {
        for (std::uint32_t b = 1; b < q_; ++b) {
            if (t->mul[a * q_ + b] == 1) {
                t->inv[a] = static_cast<std::uint16_t>(b);
                break;
            }
        }
    }
    tables_ = std::move(t);
}

std::uint32_t Field::slow_add(std::uint32_t a, std::uint32_t b) const noexcept {
    if (e_ == 1) return (a + b) % p_;
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        result += ((a % p_ + b % p_) % p_) * place;
        a /= p_;
        b /= p_;
        place *= p_;
    }
    return result;
}

std::uint32_t Field::slow_neg(std::uint32_t a) const noexcept {
    if (e_ == 1) return (p_ - a) % p_;
    std::uint32_t result = 0;
    std::uint32_t place = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        result += ((p_ - a % p_) % p_) * place;
        a /= p_;
        place *= p_;
    }
    return result;
}

std::uint32_t Field::slow_mul(std::uint32_t a, std::uint32_t b) const noexcept {
    if (e_ == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p_);
    Poly pa(e_), pb(e_);
    for (std::uint32_t i = 0; i < e_; ++i) {
        pa[i] = a % p_;
        pb[i] = b % p_;
        a /= p_;
        b /= p_;
    }
    Poly prod(2 * e_ - 1, 0);
    for (std::uint32_t i = 0; i < e_; ++i) {
        for (std::uint32_t j = 0; j < e_; ++j) {
            prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p_);
        }
    }
    const Poly r = poly_mod(std::move(prod), modulus_, p_);
    std::uint32_t result = 0;
    for (std::size_t i = r.size(); i-- > 0;) result = result * p_ + r[i];
    return result;
}

std::uint32_t Field::slow_inv(std::uint32_t a) const noexcept {
    return pow(Element{a}, q_ - 2).value;
}

Element Field::inv(Element a) const {
    if (a.value == 0) throw Error(Errc::division_by_zero, "inverse of zero");
    if (tables_) return Element{tables_->inv[a.value]};
    return Element{slow_inv(a.value)};
}

Element Field::pow(Element a, std::uint64_t exponent) const noexcept {
    Element result{1};
    Element base = a;
    while (exponent != 0) {
        if (exponent & 1U) result = mul(result, base);
        base = mul(base, base);
        exponent >>= 1U;
    }
    return result;
}

std::vector<Element> Field::elements() const {
    std::vector<Element> out(q_);
    for (std::uint32_t i = 0; i < q_; ++i) out[i] = Element{i};
    return out;
}

}  // namespace mincode
