#include "modp/field.hpp"

#include <string>

#include "modp/error.hpp"

namespace modp {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::NotASubspace: return "NotASubspace";
    case ErrorCode::UnknownTag: return "UnknownTag";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::PreconditionUnmet: return "PreconditionUnmet";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::Inapplicable: return "Inapplicable";
    case ErrorCode::MixedContext: return "MixedContext";
    case ErrorCode::BadIndexSet: return "BadIndexSet";
    case ErrorCode::CaseMismatch: return "CaseMismatch";
    case ErrorCode::HypothesisUnmet: return "HypothesisUnmet";
    case ErrorCode::RankDeficit: return "RankDeficit";
    case ErrorCode::StepFailure: return "StepFailure";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

PrimeModulus::PrimeModulus(std::uint32_t p) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p))
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a prime below 2^31");
}

std::uint32_t PrimeModulus::pow(std::uint32_t a, std::uint64_t e) const noexcept {
    std::uint32_t result = 1 % p_;
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint32_t PrimeModulus::inv(std::uint32_t a) const {
    a %= p_;
    if (a == 0) throw Error(ErrorCode::ZeroInverse, "zero has no inverse mod " + std::to_string(p_));
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    return reduce(t);
}

static void require_same(const PrimeModulus& a, const PrimeModulus& b) {
    if (!(a == b)) throw Error(ErrorCode::MixedContext, "field elements with different moduli");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same(modulus_, o.modulus_);
    return {modulus_.add(value_, o.value_), modulus_, raw_tag{}};
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
    require_same(modulus_, o.modulus_);
    return {modulus_.sub(value_, o.value_), modulus_, raw_tag{}};
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same(modulus_, o.modulus_);
    return {modulus_.mul(value_, o.value_), modulus_, raw_tag{}};
}

FieldElement field_inverse(const FieldElement& a) {
    return {a.modulus_.inv(a.value_), a.modulus_, FieldElement::raw_tag{}};
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

} // namespace modp
