#pragma once

#include <span>
#include <utility>
#include <vector>

#include "modp/bounds.hpp"
#include "modp/matrix.hpp"
#include "modp/subset.hpp"

namespace modp {

/// Multilinear polynomial over F_p in variables x_1..x_n, as a function on
/// {0,1}^n. A monomial is the set of its variables; zero coefficients are
/// never stored and terms are kept in canonical monomial order.
class MultilinearPoly {
public:
    using Term = std::pair<Mask, Residue>;

    MultilinearPoly(int n, PrimeModulus modulus);
    /// Like terms are merged and zeros dropped.
    MultilinearPoly(int n, PrimeModulus modulus, std::vector<Term> terms);

    static MultilinearPoly constant(int n, PrimeModulus modulus, std::int64_t c);
    static MultilinearPoly monomial(int n, PrimeModulus modulus, Mask vars, std::int64_t c = 1);
    /// sum_{i in vars} x_i - shift
    static MultilinearPoly linear_sum(int n, PrimeModulus modulus, Mask vars, std::int64_t shift);

    int n() const noexcept { return n_; }
    const PrimeModulus& modulus() const noexcept { return modulus_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept;
    Residue coefficient(Mask monomial) const;

    /// Value at the incidence vector of point.
    Residue evaluate(Mask point) const;

    MultilinearPoly operator+(const MultilinearPoly& o) const;
    MultilinearPoly operator-(const MultilinearPoly& o) const;
    MultilinearPoly scaled(Residue c) const;

    friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

private:
    void require_same(const MultilinearPoly& o) const;

    int n_;
    PrimeModulus modulus_;
    std::vector<Term> terms_;
};

/// Product with x_i^2 -> x_i. Throws Error(MixedContext) on mismatched n or p.
MultilinearPoly poly_mul_reduce(const MultilinearPoly& f, const MultilinearPoly& g);

/// prod_{l in L} (sum_{a in A} x_a - l), reduced.
MultilinearPoly build_fA(Mask a, int n, const IntersectionSpec& spec);

/// (1 - x_n) prod_{i in index} x_i; n must not be in index and |index| <= s-1.
MultilinearPoly build_qL(Mask index, int n, const IntersectionSpec& spec);

/// Distinct residues of K u (K-1) mod p, increasing.
std::vector<int> shifted_size_residues(const IntersectionSpec& spec);

/// prod_{h in K u (K-1) mod p} (x_1 + ... + x_{n-1} - h), reduced.
MultilinearPoly build_g(int n, const IntersectionSpec& spec);

/// g(x) prod_{i in index} x_i; n must not be in index and |index| <= s-2r.
MultilinearPoly build_gI(Mask index, int n, const IntersectionSpec& spec);

enum class CaseTag { None, Case1, Case2, Case3, Case4 };

std::string_view case_name(CaseTag tag);

struct GapStructure {
    int range = 0;                  // N = n-1
    std::vector<int> residues;      // K u (K-1) mod p
    std::vector<int> H;             // (residues + pZ) in [1, N]
    int max_gap = 0;
    bool h_empty = false;           // then max_gap = N+1
    CaseTag case_tag = CaseTag::None;  // None when n < s + max K
};

/// max(h_1 + 1, N - h_u + 1, largest consecutive difference); N+1 when empty.
int max_gap_of(std::span<const int> sorted_h, int range);

/// Requires n >= 2.
GapStructure gap_structure(int n, const IntersectionSpec& spec);

struct GapLemmaCheck {
    bool hypothesis = false;   // (H + pZ) within {0..N} has a gap >= g+1
    bool independent = false;
    int layer_gap = 0;         // gap of (H + pZ) within {0..N}
    int literal_gap = 0;       // gap of (H + pZ) within {1..N}
    std::size_t count = 0;     // number of polynomials p_I, |I| <= g-1
    std::size_t rank = 0;
};

/// Builds p(x) = prod_{h in H} (x_1 + ... + x_N - h) and every p_I(x) =
/// p(x) prod_{i in I} x_i with |I| <= g-1, and ranks their coefficient
/// matrix. Requires H within [0, p-1], g >= 1, 1 <= N <= 20.
GapLemmaCheck check_gap_lemma(std::span<const int> h_residues, int range, int g, const PrimeModulus& p);

/// Monomials of degree <= max_degree in x_1..x_n, canonically ordered.
std::vector<Mask> monomial_basis(int n, int max_degree);

/// One row per polynomial, one column per monomial of the basis. Throws
/// Error(PreconditionUnmet) if a polynomial has a monomial outside the basis.
MatrixFp coefficient_matrix(std::span<const MultilinearPoly> polys, std::span<const Mask> basis);

} // namespace modp
