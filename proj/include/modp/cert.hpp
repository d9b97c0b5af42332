#pragma once

#include <string>
#include <vector>

#include "modp/bounds.hpp"
#include "modp/family.hpp"
#include "modp/poly.hpp"

namespace modp {

enum class CertKind {
    Independence,        // f_j, q_L, g_I independent in the monomial basis (Cases 1-3)
    Case4Counting,       // exact binomial chain over the admissible sizes (Case 4)
    InclusionDimension,  // full rank of the inclusion forms, n >= 2s-2r+1
};

std::string_view kind_name(CertKind kind);
/// Throws Error(ParseError).
CertKind parse_kind(std::string_view name);

/// One exactly checked relation "lhs <relation> rhs", relation one of <=, <, ==.
struct CountingStep {
    std::string description;
    std::string relation;
    BigInt lhs;
    BigInt rhs;
    bool holds = false;

    friend bool operator==(const CountingStep&, const CountingStep&) = default;
};

struct Certificate {
    CertKind kind;
    int n;
    IntersectionSpec spec;
    std::size_t members = 0;
    CaseTag case_tag = CaseTag::None;

    // Independence and InclusionDimension
    std::vector<std::string> labels;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;

    // Case4Counting (InclusionDimension also records its chain here)
    std::vector<int> sizes;
    std::vector<BigInt> size_binomials;
    int wrapped = 0;  // c: number of k_i with p + k_i <= n
    int delta = 0;
    std::vector<int> offsets;  // a_i = s - 3r - delta - k_i, i <= c
    std::vector<CountingStep> steps;

    BigInt derived_bound;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// The f, q and g polynomials in certificate order with their labels
/// "f:<index>", "q:<set>", "g:<set>".
struct PolynomialCatalog {
    std::vector<std::string> labels;
    std::vector<MultilinearPoly> polys;
    std::size_t q_count = 0;
    std::size_t w_count = 0;
};

PolynomialCatalog certificate_polynomials(const SetFamily& family, const IntersectionSpec& spec);

/// Cases 1-3 with n >= s + max K. Throws CaseMismatch, HypothesisUnmet,
/// InvalidFamily or RankDeficit.
Certificate independence_certificate(const SetFamily& family, const IntersectionSpec& spec);

/// Case 4 with n <= 2s-2r. Throws CaseMismatch, PreconditionUnmet or
/// StepFailure naming the first failing step.
Certificate case4_certificate(int n, const IntersectionSpec& spec);

/// n >= 2s-2r+1: the members x inclusion-forms matrix has full row rank.
Certificate inclusion_certificate(const SetFamily& family, const IntersectionSpec& spec);

/// Picks the certificate that applies to (family, spec): Cases 1-3 under the
/// n >= s + max K hypothesis, Case 4 when n <= 2s-2r, otherwise the
/// inclusion-form certificate when n >= 2s-2r+1. Throws HypothesisUnmet
/// when neither hypothesis holds.
Certificate certify(const SetFamily& family, const IntersectionSpec& spec);

struct CertCheck {
    bool ok = false;
    std::string divergence;  // first field that did not match
};

/// Re-derives everything from the family and compares: rank via the pivot
/// submatrix, labels, dimensions, chain steps and the bound formula.
CertCheck check_certificate(const Certificate& cert, const SetFamily& family, const IntersectionSpec& spec);

} // namespace modp
