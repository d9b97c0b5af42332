#include "modp/cert.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>

#include "modp/error.hpp"

namespace modp {

std::string_view kind_name(CertKind kind) {
    switch (kind) {
    case CertKind::Independence: return "Independence";
    case CertKind::Case4Counting: return "Case4Counting";
    case CertKind::InclusionDimension: return "InclusionDimension";
    }
    return "?";
}

CertKind parse_kind(std::string_view name) {
    for (auto k : {CertKind::Independence, CertKind::Case4Counting, CertKind::InclusionDimension})
        if (kind_name(k) == name) return k;
    throw Error(ErrorCode::ParseError, "unknown certificate kind '" + std::string(name) + "'");
}

namespace {

bool relation_holds(const std::string& rel, const BigInt& lhs, const BigInt& rhs) {
    if (rel == "<=") return lhs <= rhs;
    if (rel == "<") return lhs < rhs;
    if (rel == "==") return lhs == rhs;
    throw Error(ErrorCode::ParseError, "unknown relation '" + rel + "'");
}

class StepLog {
public:
    void add(std::string description, std::string relation, BigInt lhs, BigInt rhs) {
        bool holds = relation_holds(relation, lhs, rhs);
        steps_.push_back({std::move(description), std::move(relation), std::move(lhs), std::move(rhs), holds});
    }
    /// Throws StepFailure on the first step that does not hold.
    std::vector<CountingStep> take() {
        for (const auto& st : steps_)
            if (!st.holds)
                throw Error(ErrorCode::StepFailure, st.description + ": " + st.lhs.str() + " " + st.relation +
                                                        " " + st.rhs.str() + " fails");
        return std::move(steps_);
    }

private:
    std::vector<CountingStep> steps_;
};

void require_valid(const SetFamily& family, const IntersectionSpec& spec) {
    if (!validate(family, spec).ok()) throw Error(ErrorCode::InvalidFamily, "family violates the size or intersection conditions");
}

std::string idx(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

} // namespace

PolynomialCatalog certificate_polynomials(const SetFamily& family, const IntersectionSpec& spec) {
    const int n = family.n(), s = spec.s(), r = spec.r();
    PolynomialCatalog cat;
    for (std::size_t j = 0; j < family.size(); ++j) {
        cat.labels.push_back("f:" + std::to_string(j + 1));
        cat.polys.push_back(build_fA(family.member(j), n, spec));
    }
    for (Mask index : subsets_by_size(n - 1, 0, s - 1)) {
        cat.labels.push_back("q:" + format_set(index));
        cat.polys.push_back(build_qL(index, n, spec));
        ++cat.q_count;
    }
    if (s - 2 * r >= 0) {
        MultilinearPoly g = build_g(n, spec);
        for (Mask index : subsets_by_size(n - 1, 0, s - 2 * r)) {
            cat.labels.push_back("g:" + format_set(index));
            cat.polys.push_back(poly_mul_reduce(g, MultilinearPoly::monomial(n, spec.modulus(), index)));
            ++cat.w_count;
        }
    }
    return cat;
}

Certificate independence_certificate(const SetFamily& family, const IntersectionSpec& spec) {
    const int n = family.n(), s = spec.s(), r = spec.r();
    if (n < s + spec.max_k()) throw Error(ErrorCode::HypothesisUnmet, "needs n >= s + max K");
    require_valid(family, spec);
    GapStructure gs = gap_structure(n, spec);
    if (gs.case_tag == CaseTag::Case4) throw Error(ErrorCode::CaseMismatch, "Case4 needs the counting certificate");

    Certificate cert{CertKind::Independence, n, spec};
    cert.members = family.size();
    cert.case_tag = gs.case_tag;
    PolynomialCatalog cat = certificate_polynomials(family, spec);
    auto basis = monomial_basis(n, s);
    if (cat.polys.empty()) throw Error(ErrorCode::PreconditionUnmet, "empty polynomial catalog");
    Echelon e = row_echelon(coefficient_matrix(cat.polys, basis), false);

    cert.labels = std::move(cat.labels);
    cert.rows = cat.polys.size();
    cert.cols = basis.size();
    cert.rank = e.rank();
    cert.pivots = e.pivot_cols;
    if (cert.rank != cert.rows)
        throw Error(ErrorCode::RankDeficit, "rank " + std::to_string(cert.rank) + " < " + std::to_string(cert.rows) + " polynomials");

    cert.derived_bound = binom_sum(n, 0, s) - cat.q_count - cat.w_count;
    BigInt cor = bound_value(TheoremTag::Cor, n, spec);
    if (cert.derived_bound != cor)
        throw Error(ErrorCode::StepFailure, "monomial count minus |Q|+|W| differs from the Cor bound");
    (void)r;
    return cert;
}

Certificate case4_certificate(int n, const IntersectionSpec& spec) {
    const long s = spec.s(), r = spec.r(), p = spec.p();
    const long k1 = spec.min_k(), kr = spec.max_k();
    if (n < 2 || gap_structure(n, spec).case_tag != CaseTag::Case4) throw Error(ErrorCode::CaseMismatch, "instance is not in Case4");
    if (n > 2 * s - 2 * r) throw Error(ErrorCode::PreconditionUnmet, "Case4 counting needs n <= 2s-2r");

    Certificate cert{CertKind::Case4Counting, n, spec};
    cert.case_tag = CaseTag::Case4;
    StepLog log;
    log.add("k_r <= s-2r", "<=", kr, s - 2 * r);
    log.add("r+s <= p", "<=", r + s, p);
    log.add("p <= s-2r+2+k_r-k_1", "<=", p, s - 2 * r + 2 + kr - k1);
    log.add("p <= 2s-4r+1", "<=", p, 2 * s - 4 * r + 1);
    log.add("5r-1 <= s", "<=", 5 * r - 1, s);
    log.add("3r-2+k_1 <= k_r", "<=", 3 * r - 2 + k1, kr);

    const long delta = 2 * s - 2 * r - n;
    cert.delta = static_cast<int>(delta);
    log.add("0 <= delta", "<=", 0, delta);
    log.add("delta <= s-5r+2-k_1", "<=", delta, s - 5 * r + 2 - k1);

    for (int size = 0; size <= n; ++size)
        if (spec.size_ok(size)) {
            cert.sizes.push_back(size);
            cert.size_binomials.push_back(binom(n, size));
        }
    long c = 0;
    for (int k : spec.K())
        if (p + k <= n) ++c;
    cert.wrapped = static_cast<int>(c);
    log.add("1 <= c", "<=", 1, c);
    log.add("c <= r", "<=", c, r);
    log.add("n < 2p+k_1", "<", n, 2 * p + k1);

    const BigInt top = binom(n, s);
    const long k = n - s;
    const long room = s - 3 * r - delta;
    BigInt size_total = 0;
    for (const auto& b : cert.size_binomials) size_total += b;

    for (long i = 0; i < c; ++i) {
        const long ki = spec.K()[i];
        const long a = room - ki;
        cert.offsets.push_back(static_cast<int>(a));
        const int label = static_cast<int>(i + 1);
        log.add("0 <= " + idx("a", label), "<=", 0, a);
        log.add(idx("a", label) + " <= s-3r-delta", "<=", a, room);
        log.add("n/2 < 2s-2r-delta-" + idx("a", label) + " (doubled)", "<", n, 2 * (2 * s - 2 * r - delta - a));
        log.add("2s-2r-delta-" + idx("a", label) + " <= p+" + idx("k", label), "<=", 2 * s - 2 * r - delta - a, p + ki);
        log.add("C(n,k_i)+C(n,p+k_i) <= C(n,s-3r-delta-a_i)+C(n,2s-2r-delta-a_i) for i=" + std::to_string(label), "<=",
                binom(n, ki) + binom(n, p + ki), binom(n, room - a) + binom(n, 2 * s - 2 * r - delta - a));
        log.add("C(n,s-3r-delta-a)+C(n,2s-2r-delta-a) == C(n,k-r-a)+C(n,a) for a=" + std::to_string(a), "==",
                binom(n, room - a) + binom(n, 2 * s - 2 * r - delta - a), binom(n, k - r - a) + binom(n, a));
        log.add("C(n,k-r-a)+C(n,a) <= C(n,k-1-a)+C(n,a) for a=" + std::to_string(a), "<=",
                binom(n, k - r - a) + binom(n, a), binom(n, k - 1 - a) + binom(n, a));
        log.add("pair inequality C(n,k-1-a)+C(n,a) <= C(n,k), k=" + std::to_string(k) + ", a=" + std::to_string(a), "<=",
                binom(n, k - 1 - a) + binom(n, a), binom(n, k));
    }
    for (long i = c; i < r; ++i) {
        const long ki = spec.K()[i];
        log.add("C(n,k_" + std::to_string(i + 1) + ") <= C(n,s)", "<=", binom(n, ki), top);
    }
    log.add("C(n,k) == C(n,s), k=n-s", "==", binom(n, k), top);
    log.add("sum over admissible sizes <= r*C(n,s)", "<=", size_total, top * r);

    BigInt min_term = top, alternating = 0;
    for (long j = 0; j < r; ++j) {
        BigInt t = binom(n, s - 2 * j);
        alternating += t;
        if (t < min_term) min_term = t;
    }
    log.add("|n-2(s-2r+2)| < |2s-n|", "<", std::abs(n - 2 * (s - 2 * r + 2)), std::abs(2 * s - n));
    log.add("min_j C(n,s-2j) == C(n,s)", "==", min_term, top);
    log.add("r*C(n,s) <= sum_j C(n,s-2j)", "<=", top * r, alternating);
    cert.derived_bound = bound_value(TheoremTag::Cor, n, spec);
    log.add("sum_j C(n,s-2j) == Cor bound", "==", alternating, cert.derived_bound);
    cert.steps = log.take();
    return cert;
}

namespace {

MatrixFp member_form_matrix(const SetFamily& family, const IntersectionSpec& spec, std::vector<Mask>* index_sets) {
    auto system = build_inclusion_system(family, std::min(spec.s(), family.n() - 1), spec.modulus());
    if (index_sets) *index_sets = system.index_sets;
    return system.matrix.transpose();
}

std::vector<CountingStep> inclusion_chain(const SetFamily& family, const IntersectionSpec& spec, std::size_t rank_value) {
    const int n = family.n(), s = spec.s(), r = spec.r();
    DimensionChain chain = check_dimension_chain(family, spec);
    StepLog log;
    log.add("m <= rank", "<=", family.size(), rank_value);
    log.add("rank == dim <L_H : |H| <= s>", "==", rank_value, chain.rank);
    log.add("dim <L_H : |H| <= 2r-1> <= sum_{j<2r} C(n-1,j)", "<=", chain.first_block, chain.first_block_bound);
    if (s - 2 * r + 1 >= 0) {
        RecurCheck rec = check_recurbound(family, spec, 0);
        log.add("rank == first block + quotient", "==", chain.rank, BigInt(chain.first_block) + chain.quotient);
        log.add("sum_{j<2r} C(n-1,j) + quotient <= Main bound", "<=", rec.lhs, rec.rhs);
    }
    log.add("rank <= Main bound", "<=", chain.rank, chain.bound);
    (void)n;
    return log.take();
}

} // namespace

Certificate inclusion_certificate(const SetFamily& family, const IntersectionSpec& spec) {
    const int n = family.n(), s = spec.s(), r = spec.r();
    if (n < 2 * s - 2 * r + 1) throw Error(ErrorCode::HypothesisUnmet, "needs n >= 2s-2r+1");
    require_valid(family, spec);
    Certificate cert{CertKind::InclusionDimension, n, spec};
    cert.members = family.size();
    cert.case_tag = n >= 2 ? gap_structure(n, spec).case_tag : CaseTag::None;

    std::vector<Mask> index_sets;
    MatrixFp m = member_form_matrix(family, spec, &index_sets);
    for (Mask index : index_sets) cert.labels.push_back("L:" + format_set(index));
    Echelon e = row_echelon(m, false);
    cert.rows = m.rows();
    cert.cols = m.cols();
    cert.rank = e.rank();
    cert.pivots = e.pivot_cols;
    if (cert.rank != cert.rows)
        throw Error(ErrorCode::RankDeficit, "inclusion forms have a nontrivial common kernel");
    cert.steps = inclusion_chain(family, spec, cert.rank);
    cert.derived_bound = bound_value(TheoremTag::Main, n, spec);
    return cert;
}

Certificate certify(const SetFamily& family, const IntersectionSpec& spec) {
    const int n = family.n(), s = spec.s(), r = spec.r();
    require_valid(family, spec);
    const bool cor_hypothesis = n >= s + spec.max_k() && n >= 2;
    const bool main_hypothesis = n >= 2 * s - 2 * r + 1;
    if (cor_hypothesis) {
        CaseTag tag = gap_structure(n, spec).case_tag;
        if (tag != CaseTag::Case4) return independence_certificate(family, spec);
        if (n <= 2 * s - 2 * r) {
            Certificate cert = case4_certificate(n, spec);
            cert.members = family.size();
            return cert;
        }
    }
    if (main_hypothesis) return inclusion_certificate(family, spec);
    throw Error(ErrorCode::HypothesisUnmet, "no theorem hypothesis applies (n < s + max K and n < 2s-2r+1)");
}

namespace {

CertCheck fail(std::string field) { return {false, std::move(field)}; }

// The pivot columns must be increasing and in range, and every row
// restricted to them must give a nonsingular square block. That fixes the
// rank at the row count without eliminating the full matrix.
std::optional<std::string> check_pivots(const Certificate& cert, const MatrixFp& m) {
    if (cert.rows != m.rows()) return "rows";
    if (cert.cols != m.cols()) return "cols";
    if (cert.rank != cert.rows) return "rank";
    if (cert.pivots.size() != cert.rank) return "pivots";
    for (std::size_t i = 0; i < cert.pivots.size(); ++i)
        if (cert.pivots[i] >= m.cols() || (i > 0 && cert.pivots[i] <= cert.pivots[i - 1])) return "pivots";
    if (rank(m.select_columns(cert.pivots)) != cert.rank) return "rank";
    return std::nullopt;
}

} // namespace

CertCheck check_certificate(const Certificate& cert, const SetFamily& family, const IntersectionSpec& spec) {
    if (!(cert.spec == spec) || cert.n != family.n()) return fail("spec");
    if (cert.members != family.size()) return fail("members");
    if (!validate(family, spec).ok()) return fail("family");
    const int n = family.n(), s = spec.s();
    try {
        switch (cert.kind) {
        case CertKind::Independence: {
            if (n < s + spec.max_k()) return fail("kind");
            if (cert.case_tag != gap_structure(n, spec).case_tag || cert.case_tag == CaseTag::Case4) return fail("case");
            PolynomialCatalog cat = certificate_polynomials(family, spec);
            if (cert.labels != cat.labels) return fail("labels");
            auto basis = monomial_basis(n, s);
            if (auto bad = check_pivots(cert, coefficient_matrix(cat.polys, basis))) return fail(*bad);
            BigInt expected = binom_sum(n, 0, s) - cat.q_count - cat.w_count;
            if (cert.derived_bound != expected || expected != bound_value(TheoremTag::Cor, n, spec))
                return fail("derived_bound");
            break;
        }
        case CertKind::Case4Counting: {
            Certificate fresh = case4_certificate(n, spec);
            if (cert.case_tag != CaseTag::Case4) return fail("case");
            if (cert.sizes != fresh.sizes) return fail("sizes");
            if (cert.size_binomials != fresh.size_binomials) return fail("size_binomials");
            if (cert.wrapped != fresh.wrapped) return fail("c");
            if (cert.delta != fresh.delta) return fail("delta");
            if (cert.offsets != fresh.offsets) return fail("a");
            if (cert.steps != fresh.steps) return fail("steps");
            if (cert.derived_bound != fresh.derived_bound) return fail("derived_bound");
            for (Mask member : family.members())
                if (!std::binary_search(cert.sizes.begin(), cert.sizes.end(), set_size(member))) return fail("sizes");
            break;
        }
        case CertKind::InclusionDimension: {
            if (n < 2 * s - 2 * spec.r() + 1) return fail("kind");
            std::vector<Mask> index_sets;
            MatrixFp m = member_form_matrix(family, spec, &index_sets);
            std::vector<std::string> labels;
            for (Mask index : index_sets) labels.push_back("L:" + format_set(index));
            if (cert.labels != labels) return fail("labels");
            if (auto bad = check_pivots(cert, m)) return fail(*bad);
            if (cert.steps != inclusion_chain(family, spec, cert.rank)) return fail("steps");
            if (cert.derived_bound != bound_value(TheoremTag::Main, n, spec)) return fail("derived_bound");
            break;
        }
        }
    } catch (const Error& e) {
        return fail(std::string("recomputation: ") + e.what());
    }
    if (BigInt(family.size()) > cert.derived_bound) return fail("derived_bound");
    return {true, {}};
}

} // namespace modp
