#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "modp/bounds.hpp"
#include "modp/matrix.hpp"
#include "modp/subset.hpp"

namespace modp {

/// Distinct subsets of [n], kept in split order: members without element n
/// first (indices < split()), then members containing n. The relative order
/// inside each group is the order they were supplied in.
class SetFamily {
public:
    SetFamily(int n, std::vector<Mask> members);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::span<const Mask> members() const noexcept { return members_; }
    Mask member(std::size_t i) const { return members_.at(i); }
    /// Number of members that do not contain element n.
    std::size_t split() const noexcept { return split_; }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    int n_;
    std::vector<Mask> members_;
    std::size_t split_ = 0;
};

struct SizeViolation {
    std::size_t index;
    std::uint32_t residue;
};

struct IntersectionViolation {
    std::size_t first;
    std::size_t second;
    std::uint32_t residue;
};

struct ValidationReport {
    std::vector<SizeViolation> sizes;
    std::vector<IntersectionViolation> intersections;
    bool ok() const noexcept { return sizes.empty() && intersections.empty(); }
};

ValidationReport validate(const SetFamily& family, const IntersectionSpec& spec);

/// Rows are the forms L_I for I a subset of [n-1] with |I| <= degree_cap,
/// ordered canonically; columns are family members; entry 1 iff I is
/// contained in the member.
struct LinearFormSystem {
    MatrixFp matrix;
    std::vector<Mask> index_sets;
    int degree_cap;

    /// Rows whose index set has size in [lo, hi], as a new matrix.
    MatrixFp rows_with_size(int lo, int hi) const;
    std::size_t row_of(Mask index_set) const;
};

/// Throws Error(DegreeTooLarge) when degree_cap > n-1.
LinearFormSystem build_inclusion_system(const SetFamily& family, int degree_cap, const PrimeModulus& p);

struct KernelCheck {
    bool trivial = false;
    VectorFp witness;  // nonzero kernel vector when !trivial
};

/// Decides whether L_I = 0 (|I| <= s) forces x = 0. Throws InvalidFamily
/// unless the family satisfies the size and intersection conditions.
KernelCheck check_trivial_kernel(const SetFamily& family, const IntersectionSpec& spec);

/// Rank of the inclusion system with degree cap s; checks it is at least m.
std::size_t dimension_upper_bound(const SetFamily& family, const IntersectionSpec& spec);

struct CriCheck {
    bool holds = false;
    std::vector<Residue> coeffs;  // a_0..a_2r in the binomial basis
    Residue constant = 0;         // c = f(0)
    std::size_t forms_checked = 0;
    std::size_t first_failure = 0;  // index into P_i when !holds
};

/// Checks, for every I in P_level([n-1]), that
///   sum_{j=1}^{2r} a_j sum_{H in P_{level+j}, I in H} L_H  ==  -c L_I
/// coefficient by coefficient, where sum_j a_j C(x,j) = f(x) - c and
/// f(x) = prod_j (x - (k_j - level)) (x - (k_j - 1 - level)).
/// Throws Inapplicable when p <= 2r or the level is out of range.
CriCheck check_cri_identity(const SetFamily& family, const IntersectionSpec& spec, int level);

struct CountCheck {
    bool holds = false;
    std::size_t dimension = 0;
    BigInt bound;
};

/// dim <L_J : |J| = v> / <sum_{J >= I, |J| = v} L_J : |I| = u>  <=  C(n-1,v) - C(n-1,u)
/// for 0 < u < v < p, u + v <= n-1.
CountCheck check_count_lemma(const SetFamily& family, const PrimeModulus& p, int u, int v);

struct RecurCheck {
    bool holds = false;
    BigInt lhs;
    BigInt rhs;
    std::size_t quotient = 0;
};

/// sum_{j=i}^{i+2r-1} C(n-1,j) + dim <L_H : i<=|H|<=s> / <L_H : i<=|H|<=i+2r-1>
///   <=  sum_{j=s-2r+1}^{s} C(n-1,j)
RecurCheck check_recurbound(const SetFamily& family, const IntersectionSpec& spec, int level);

struct DimensionChain {
    bool holds = false;
    std::size_t rank = 0;             // dim <L_H : |H| <= s>
    std::size_t first_block = 0;      // dim <L_H : |H| <= 2r-1>
    BigInt first_block_bound;         // sum_{j<2r} C(n-1,j)
    std::size_t quotient = 0;
    BigInt bound;                     // Main bound
};

/// m <= rank <= first_block + quotient <= Main bound, for n >= 2s-2r+1.
DimensionChain check_dimension_chain(const SetFamily& family, const IntersectionSpec& spec);

} // namespace modp
