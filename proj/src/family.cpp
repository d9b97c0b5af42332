#include "modp/family.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "modp/error.hpp"

namespace modp {

SetFamily::SetFamily(int n, std::vector<Mask> members) : n_(n) {
    if (n < 1 || n > kMaxGround)
        throw Error(ErrorCode::TooLarge, "ground set size " + std::to_string(n) + " outside [1,64]");
    std::unordered_set<Mask> seen;
    for (Mask m : members) {
        if (!is_subset(m, ground_mask(n)))
            throw Error(ErrorCode::InvalidFamily, format_set(m) + " is not a subset of [" + std::to_string(n) + "]");
        if (!seen.insert(m).second) throw Error(ErrorCode::InvalidFamily, "repeated member " + format_set(m));
    }
    const Mask top = element_bit(n);
    auto mid = std::stable_partition(members.begin(), members.end(), [top](Mask m) { return (m & top) == 0; });
    split_ = static_cast<std::size_t>(mid - members.begin());
    members_ = std::move(members);
}

ValidationReport validate(const SetFamily& family, const IntersectionSpec& spec) {
    ValidationReport report;
    const auto members = family.members();
    const PrimeModulus& p = spec.modulus();
    for (std::size_t i = 0; i < members.size(); ++i)
        if (!spec.size_ok(set_size(members[i]))) report.sizes.push_back({i, p.reduce(set_size(members[i]))});
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int x = set_size(members[i] & members[j]);
            if (!spec.intersection_ok(x)) report.intersections.push_back({i, j, p.reduce(x)});
        }
    return report;
}

MatrixFp LinearFormSystem::rows_with_size(int lo, int hi) const {
    MatrixFp out(0, matrix.cols(), matrix.modulus());
    for (std::size_t r = 0; r < index_sets.size(); ++r) {
        int size = set_size(index_sets[r]);
        if (size >= lo && size <= hi) out.append_row(matrix.row(r));
    }
    return out;
}

std::size_t LinearFormSystem::row_of(Mask index_set) const {
    auto it = std::lower_bound(index_sets.begin(), index_sets.end(), index_set, CanonicalLess{});
    if (it == index_sets.end() || *it != index_set)
        throw Error(ErrorCode::BadIndexSet, format_set(index_set) + " is not a row of the system");
    return static_cast<std::size_t>(it - index_sets.begin());
}

LinearFormSystem build_inclusion_system(const SetFamily& family, int degree_cap, const PrimeModulus& p) {
    const int universe = family.n() - 1;
    if (degree_cap > universe)
        throw Error(ErrorCode::DegreeTooLarge,
                    "degree cap " + std::to_string(degree_cap) + " exceeds n-1 = " + std::to_string(universe));
    LinearFormSystem system{MatrixFp(0, 0, p), subsets_by_size(universe, 0, degree_cap), degree_cap};
    const auto members = family.members();
    system.matrix = MatrixFp(system.index_sets.size(), members.size(), p);
    for (std::size_t r = 0; r < system.index_sets.size(); ++r)
        for (std::size_t c = 0; c < members.size(); ++c)
            system.matrix(r, c) = is_subset(system.index_sets[r], members[c]) ? 1 : 0;
    return system;
}

namespace {

void require_valid(const SetFamily& family, const IntersectionSpec& spec) {
    auto report = validate(family, spec);
    if (!report.ok())
        throw Error(ErrorCode::InvalidFamily, std::to_string(report.sizes.size()) + " size and " +
                                                  std::to_string(report.intersections.size()) +
                                                  " intersection violations");
}

int effective_cap(const SetFamily& family, int s) { return std::min(s, family.n() - 1); }

} // namespace

KernelCheck check_trivial_kernel(const SetFamily& family, const IntersectionSpec& spec) {
    require_valid(family, spec);
    // P_i([n-1]) is empty for i > n-1, so capping changes nothing
    auto system = build_inclusion_system(family, effective_cap(family, spec.s()), spec.modulus());
    auto basis = kernel_basis(system.matrix);
    KernelCheck out;
    out.trivial = basis.empty();
    if (!basis.empty()) out.witness = std::move(basis.front());
    return out;
}

std::size_t dimension_upper_bound(const SetFamily& family, const IntersectionSpec& spec) {
    require_valid(family, spec);
    auto system = build_inclusion_system(family, effective_cap(family, spec.s()), spec.modulus());
    std::size_t dim = rank(system.matrix);
    if (family.size() > dim)
        throw Error(ErrorCode::RankDeficit, "family of size " + std::to_string(family.size()) +
                                                " exceeds the span dimension " + std::to_string(dim));
    return dim;
}

CriCheck check_cri_identity(const SetFamily& family, const IntersectionSpec& spec, int level) {
    const int r = spec.r(), s = spec.s(), n = family.n();
    const PrimeModulus& p = spec.modulus();
    if (spec.p() <= static_cast<std::uint32_t>(2 * r))
        throw Error(ErrorCode::Inapplicable, "(2r)! vanishes mod p when p <= 2r");
    if (level < 0 || level > s - 2 * r + 1 || level + 2 * r > n - 1)
        throw Error(ErrorCode::Inapplicable, "level " + std::to_string(level) + " outside [0, s-2r+1] or beyond n-1");
    require_valid(family, spec);

    std::vector<Residue> roots;
    for (int k : spec.K()) {
        roots.push_back(p.reduce(k - level));
        roots.push_back(p.reduce(k - 1 - level));
    }
    auto basis = to_binomial_basis(roots, 0, p);
    CriCheck out;
    out.coeffs = basis.coeffs();
    out.constant = out.coeffs[0];
    out.holds = true;

    auto system = build_inclusion_system(family, level + 2 * r, p);
    const std::size_t m = family.size();
    const Residue minus_c = p.neg(out.constant);
    for (Mask index : subsets_by_size(n - 1, level, level)) {
        VectorFp lhs(m, 0);
        for (std::size_t row = 0; row < system.index_sets.size(); ++row) {
            Mask h = system.index_sets[row];
            int j = set_size(h) - level;
            if (j < 1 || !is_subset(index, h)) continue;
            Residue a = out.coeffs[j];
            if (a == 0) continue;
            auto form = system.matrix.row(row);
            for (std::size_t col = 0; col < m; ++col)
                if (form[col]) lhs[col] = p.add(lhs[col], p.mul(a, form[col]));
        }
        auto own = system.matrix.row(system.row_of(index));
        for (std::size_t col = 0; col < m; ++col)
            if (lhs[col] != p.mul(minus_c, own[col])) {
                out.holds = false;
                out.first_failure = out.forms_checked;
                return out;
            }
        ++out.forms_checked;
    }
    return out;
}

CountCheck check_count_lemma(const SetFamily& family, const PrimeModulus& p, int u, int v) {
    const int universe = family.n() - 1;
    if (!(0 < u && u < v && static_cast<std::uint32_t>(v) < p.value() && u + v <= universe))
        throw Error(ErrorCode::PreconditionUnmet, "need 0 < u < v < p and u + v <= n-1");
    auto system = build_inclusion_system(family, v, p);
    MatrixFp top = system.rows_with_size(v, v);
    MatrixFp sums(0, family.size(), p);
    for (Mask index : subsets_by_size(universe, u, u)) {
        VectorFp acc(family.size(), 0);
        for (std::size_t row = 0; row < system.index_sets.size(); ++row) {
            Mask j = system.index_sets[row];
            if (set_size(j) != v || !is_subset(index, j)) continue;
            auto form = system.matrix.row(row);
            for (std::size_t c = 0; c < acc.size(); ++c) acc[c] = p.add(acc[c], form[c]);
        }
        sums.append_row(acc);
    }
    CountCheck out;
    out.dimension = quotient_dimension(top, sums);
    out.bound = binom(universe, v) - binom(universe, u);
    out.holds = BigInt(out.dimension) <= out.bound;
    return out;
}

RecurCheck check_recurbound(const SetFamily& family, const IntersectionSpec& spec, int level) {
    const int r = spec.r(), s = spec.s(), n = family.n();
    if (level < 0 || level > s - 2 * r + 1)
        throw Error(ErrorCode::PreconditionUnmet, "level " + std::to_string(level) + " outside [0, s-2r+1]");
    if (n < 2 * s - 2 * r + 1) throw Error(ErrorCode::PreconditionUnmet, "needs n >= 2s-2r+1");
    require_valid(family, spec);
    auto system = build_inclusion_system(family, effective_cap(family, s), spec.modulus());
    MatrixFp whole = system.rows_with_size(level, s);
    MatrixFp block = system.rows_with_size(level, level + 2 * r - 1);
    RecurCheck out;
    out.quotient = quotient_dimension(whole, block);
    out.lhs = binom_sum(n - 1, level, level + 2 * r - 1) + out.quotient;
    out.rhs = binom_sum(n - 1, s - 2 * r + 1, s);
    out.holds = out.lhs <= out.rhs;
    return out;
}

DimensionChain check_dimension_chain(const SetFamily& family, const IntersectionSpec& spec) {
    const int r = spec.r(), s = spec.s(), n = family.n();
    if (n < 2 * s - 2 * r + 1) throw Error(ErrorCode::PreconditionUnmet, "needs n >= 2s-2r+1");
    require_valid(family, spec);
    auto system = build_inclusion_system(family, effective_cap(family, s), spec.modulus());
    DimensionChain out;
    out.rank = rank(system.matrix);
    out.first_block = rank(system.rows_with_size(0, 2 * r - 1));
    out.first_block_bound = binom_sum(n - 1, 0, 2 * r - 1);
    out.quotient = out.rank - out.first_block;
    out.bound = bound_value(TheoremTag::Main, n, spec);
    out.holds = family.size() <= out.rank && BigInt(out.first_block) <= out.first_block_bound;
    if (s - 2 * r + 1 >= 0) {
        // the i = 0 instance of the recursive bound closes the chain
        out.holds = out.holds && check_recurbound(family, spec, 0).holds;
    }
    out.holds = out.holds && BigInt(out.rank) <= out.bound;
    return out;
}

} // namespace modp
