#pragma once

#include <cstdint>
#include <ostream>

namespace modp {

/// A prime p with 2 <= p < 2^31. Residues are stored as uint32_t and every
/// product of two residues fits in 64 bits.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint32_t p);

    std::uint32_t value() const noexcept { return p_; }

    std::uint32_t reduce(std::int64_t x) const noexcept {
        std::int64_t r = x % static_cast<std::int64_t>(p_);
        return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
    }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        std::uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
        return a >= b ? a - b : a + (p_ - b);
    }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
    }
    /// Throws Error(ZeroInverse) for a == 0.
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;

    friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

private:
    std::uint32_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

class FieldElement {
public:
    FieldElement(std::int64_t value, PrimeModulus modulus)
        : value_(modulus.reduce(value)), modulus_(modulus) {}

    std::uint32_t value() const noexcept { return value_; }
    const PrimeModulus& modulus() const noexcept { return modulus_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator-() const { return {modulus_.neg(value_), modulus_, raw_tag{}}; }

    friend bool operator==(const FieldElement&, const FieldElement&) = default;

private:
    struct raw_tag {};
    FieldElement(std::uint32_t v, PrimeModulus m, raw_tag) : value_(v), modulus_(m) {}
    friend FieldElement field_inverse(const FieldElement& a);

    std::uint32_t value_;
    PrimeModulus modulus_;
};

/// Multiplicative inverse; throws Error(ZeroInverse) for zero.
FieldElement field_inverse(const FieldElement& a);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

} // namespace modp
