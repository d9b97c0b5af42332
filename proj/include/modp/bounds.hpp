#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "modp/field.hpp"
#include "modp/matrix.hpp"
#include "modp/subset.hpp"

namespace modp {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); zero for k < 0, k > n or n < 0.
BigInt binom(std::int64_t n, std::int64_t k);

/// sum_{i=lo}^{hi} C(n, i), terms with i < 0 contribute nothing.
BigInt binom_sum(std::int64_t n, std::int64_t lo, std::int64_t hi);

/// C(x, i) mod p for integers x, i >= 0 (Lucas).
Residue binom_mod(std::uint64_t x, std::uint64_t i, const PrimeModulus& p);

/// The size residues K and intersection residues L, disjoint subsets of
/// {0..p-1}, both nonempty and stored strictly increasing.
class IntersectionSpec {
public:
    IntersectionSpec(PrimeModulus p, std::vector<int> sizes, std::vector<int> intersections);

    const PrimeModulus& modulus() const noexcept { return p_; }
    std::uint32_t p() const noexcept { return p_.value(); }
    const std::vector<int>& K() const noexcept { return k_; }
    const std::vector<int>& L() const noexcept { return l_; }
    int r() const noexcept { return static_cast<int>(k_.size()); }
    int s() const noexcept { return static_cast<int>(l_.size()); }
    int min_k() const noexcept { return k_.front(); }
    int max_k() const noexcept { return k_.back(); }

    bool size_ok(std::int64_t size) const;
    bool intersection_ok(std::int64_t size) const;

    friend bool operator==(const IntersectionSpec&, const IntersectionSpec&) = default;

private:
    PrimeModulus p_;
    std::vector<int> k_;
    std::vector<int> l_;
};

enum class TheoremTag { RW, FW, FW2, ABS, Snevily, QR, HK, ChenLiu, LiuYang1, LiuYang2, Main, Cor };

inline constexpr std::array<TheoremTag, 12> kAllTheorems = {
    TheoremTag::RW,      TheoremTag::FW,      TheoremTag::FW2,      TheoremTag::ABS,
    TheoremTag::Snevily, TheoremTag::QR,      TheoremTag::HK,       TheoremTag::ChenLiu,
    TheoremTag::LiuYang1, TheoremTag::LiuYang2, TheoremTag::Main,   TheoremTag::Cor,
};

std::string_view tag_name(TheoremTag tag);
/// Throws Error(UnknownTag).
TheoremTag parse_tag(std::string_view name);

/// Value of the bound formula attached to a theorem (hypotheses are not checked).
BigInt bound_value(TheoremTag tag, int n, const IntersectionSpec& spec);
BigInt bound_value(std::string_view tag, int n, const IntersectionSpec& spec);

struct BoundEntry {
    TheoremTag tag;
    bool holds = false;
    /// RW and FW2 depend on the family itself (uniformity), not just on (n, spec).
    bool family_dependent = false;
    std::optional<BigInt> value;  // present iff holds
};

struct BoundReport {
    int n;
    IntersectionSpec spec;
    std::vector<BoundEntry> entries;  // in kAllTheorems order

    const BoundEntry& entry(TheoremTag tag) const;
    /// Smallest bound among entries whose hypothesis holds.
    std::optional<BigInt> tightest() const;
};

/// Evaluates every theorem's hypothesis. When members are supplied, the
/// family-dependent theorems (RW, FW2) are decided on them; otherwise they
/// are reported as not holding.
BoundReport applicability(int n, const IntersectionSpec& spec,
                          std::optional<std::span<const Mask>> members = std::nullopt);

/// sum_{i=s-2r+1}^{s} C(n-1, i) == sum_{j=0}^{r-1} C(n, s-2j).
bool pascal_equivalence_check(int n, int s, int r);

/// C(n, s-2i) < C(n, s-i) for 1 <= i <= r-1; requires n >= 2s-2, r >= 2, s >= 2(r-1).
bool strengthening_check(int n, int s, int r);

/// C(n, k-1-c) + C(n, c) <= C(n, k); requires 0 <= c < k <= n/2.
bool hk_inequality_check(int n, int k, int c);

/// sum_i a_i C(x, i) over F_p.
class BinomialBasisPoly {
public:
    BinomialBasisPoly(PrimeModulus modulus, std::vector<Residue> coeffs)
        : modulus_(modulus), coeffs_(std::move(coeffs)) {}

    const PrimeModulus& modulus() const noexcept { return modulus_; }
    const std::vector<Residue>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Residue evaluate(std::uint64_t x) const;

private:
    PrimeModulus modulus_;
    std::vector<Residue> coeffs_;
};

/// Coefficients a_i with prod_j (x + shift - root_j) = sum_i a_i C(x, i),
/// by forward differences of the values at x = 0..d. The identity holds at
/// every nonnegative integer x, also when d >= p.
BinomialBasisPoly to_binomial_basis(std::span<const Residue> roots, Residue shift, const PrimeModulus& p);

} // namespace modp
