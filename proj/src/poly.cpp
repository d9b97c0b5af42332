#include "modp/poly.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "modp/error.hpp"

namespace modp {

namespace {

std::vector<MultilinearPoly::Term> normalize(std::vector<MultilinearPoly::Term> terms, const PrimeModulus& p) {
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    std::vector<MultilinearPoly::Term> out;
    for (const auto& [mono, coef] : terms) {
        if (!out.empty() && out.back().first == mono)
            out.back().second = p.add(out.back().second, coef % p.value());
        else
            out.emplace_back(mono, coef % p.value());
    }
    std::erase_if(out, [](const auto& t) { return t.second == 0; });
    return out;
}

void require_vars(Mask vars, int n) {
    if (!is_subset(vars, ground_mask(n)))
        throw Error(ErrorCode::BadIndexSet, format_set(vars) + " uses variables beyond x_" + std::to_string(n));
}

} // namespace

MultilinearPoly::MultilinearPoly(int n, PrimeModulus modulus) : n_(n), modulus_(modulus) {
    if (n < 0 || n > kMaxGround) throw Error(ErrorCode::TooLarge, "variable count outside [0,64]");
}

MultilinearPoly::MultilinearPoly(int n, PrimeModulus modulus, std::vector<Term> terms) : MultilinearPoly(n, modulus) {
    for (const auto& t : terms) require_vars(t.first, n);
    terms_ = normalize(std::move(terms), modulus_);
}

MultilinearPoly MultilinearPoly::constant(int n, PrimeModulus modulus, std::int64_t c) {
    return MultilinearPoly(n, modulus, {{Mask{0}, modulus.reduce(c)}});
}

MultilinearPoly MultilinearPoly::monomial(int n, PrimeModulus modulus, Mask vars, std::int64_t c) {
    return MultilinearPoly(n, modulus, {{vars, modulus.reduce(c)}});
}

MultilinearPoly MultilinearPoly::linear_sum(int n, PrimeModulus modulus, Mask vars, std::int64_t shift) {
    std::vector<Term> terms{{Mask{0}, modulus.reduce(-shift)}};
    for (int e : to_elements(vars)) terms.emplace_back(element_bit(e), 1);
    return MultilinearPoly(n, modulus, std::move(terms));
}

int MultilinearPoly::degree() const noexcept {
    // canonical order puts the largest monomials last
    return terms_.empty() ? -1 : set_size(terms_.back().first);
}

Residue MultilinearPoly::coefficient(Mask monomial) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), monomial,
                               [](const Term& t, Mask m) { return canonical_less(t.first, m); });
    return (it != terms_.end() && it->first == monomial) ? it->second : 0;
}

Residue MultilinearPoly::evaluate(Mask point) const {
    Residue acc = 0;
    for (const auto& [mono, coef] : terms_)
        if (is_subset(mono, point)) acc = modulus_.add(acc, coef);
    return acc;
}

void MultilinearPoly::require_same(const MultilinearPoly& o) const {
    if (n_ != o.n_ || !(modulus_ == o.modulus_))
        throw Error(ErrorCode::MixedContext, "polynomials over different variable sets or fields");
}

MultilinearPoly MultilinearPoly::operator+(const MultilinearPoly& o) const {
    require_same(o);
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return MultilinearPoly(n_, modulus_, std::move(all));
}

MultilinearPoly MultilinearPoly::operator-(const MultilinearPoly& o) const { return *this + o.scaled(modulus_.neg(1)); }

MultilinearPoly MultilinearPoly::scaled(Residue c) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [mono, coef] : terms_) out.emplace_back(mono, modulus_.mul(coef, c % modulus_.value()));
    return MultilinearPoly(n_, modulus_, std::move(out));
}

MultilinearPoly poly_mul_reduce(const MultilinearPoly& f, const MultilinearPoly& g) {
    if (f.n() != g.n() || !(f.modulus() == g.modulus()))
        throw Error(ErrorCode::MixedContext, "polynomials over different variable sets or fields");
    const PrimeModulus& p = f.modulus();
    std::unordered_map<Mask, Residue> acc;
    acc.reserve(f.terms().size() * g.terms().size());
    for (const auto& [ma, ca] : f.terms())
        for (const auto& [mb, cb] : g.terms()) {
            Residue& slot = acc[ma | mb];
            slot = p.add(slot, p.mul(ca, cb));
        }
    return MultilinearPoly(f.n(), p, std::vector<MultilinearPoly::Term>(acc.begin(), acc.end()));
}

MultilinearPoly build_fA(Mask a, int n, const IntersectionSpec& spec) {
    require_vars(a, n);
    MultilinearPoly f = MultilinearPoly::constant(n, spec.modulus(), 1);
    for (int l : spec.L()) f = poly_mul_reduce(f, MultilinearPoly::linear_sum(n, spec.modulus(), a, l));
    return f;
}

MultilinearPoly build_qL(Mask index, int n, const IntersectionSpec& spec) {
    require_vars(index, n);
    if (index & element_bit(n)) throw Error(ErrorCode::BadIndexSet, "q_L index set contains n");
    if (set_size(index) > spec.s() - 1)
        throw Error(ErrorCode::BadIndexSet, "q_L index set larger than s-1");
    const PrimeModulus& p = spec.modulus();
    return MultilinearPoly(n, p, {{index, 1}, {index | element_bit(n), p.neg(1)}});
}

std::vector<int> shifted_size_residues(const IntersectionSpec& spec) {
    std::vector<int> out;
    for (int k : spec.K()) {
        out.push_back(k);
        out.push_back(static_cast<int>(spec.modulus().reduce(k - 1)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

MultilinearPoly build_g(int n, const IntersectionSpec& spec) {
    const Mask vars = ground_mask(n - 1);
    MultilinearPoly g = MultilinearPoly::constant(n, spec.modulus(), 1);
    for (int h : shifted_size_residues(spec)) g = poly_mul_reduce(g, MultilinearPoly::linear_sum(n, spec.modulus(), vars, h));
    return g;
}

MultilinearPoly build_gI(Mask index, int n, const IntersectionSpec& spec) {
    require_vars(index, n);
    if (index & element_bit(n)) throw Error(ErrorCode::BadIndexSet, "g_I index set contains n");
    if (set_size(index) > spec.s() - 2 * spec.r())
        throw Error(ErrorCode::BadIndexSet, "g_I index set larger than s-2r");
    return poly_mul_reduce(build_g(n, spec), MultilinearPoly::monomial(n, spec.modulus(), index));
}

std::string_view case_name(CaseTag tag) {
    switch (tag) {
    case CaseTag::None: return "None";
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2: return "Case2";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4: return "Case4";
    }
    return "?";
}

int max_gap_of(std::span<const int> h, int range) {
    if (h.empty()) return range + 1;
    int gap = std::max(h.front() + 1, range - h.back() + 1);
    for (std::size_t i = 1; i < h.size(); ++i) gap = std::max(gap, h[i] - h[i - 1]);
    return gap;
}

namespace {

std::vector<int> periodic_hits(std::span<const int> residues, int lo, int hi, int p) {
    std::vector<int> out;
    for (int x = lo; x <= hi; ++x)
        if (std::binary_search(residues.begin(), residues.end(), x % p)) out.push_back(x);
    return out;
}

CaseTag classify(int n, const IntersectionSpec& spec) {
    const long range = n - 1, s = spec.s(), r = spec.r(), p = spec.p();
    const long k1 = spec.min_k(), kr = spec.max_k();
    const long wrap = p + k1 - 1;
    if (s + kr - 1 <= range && range < wrap) return CaseTag::Case1;
    if (s + kr - 1 < wrap && wrap <= range) return CaseTag::Case2;
    if ((s - 2 * r + 1) + kr < wrap && wrap <= s + kr - 1 && s + kr - 1 <= range) return CaseTag::Case3;
    if (wrap <= (s - 2 * r + 1) + kr && s + kr - 1 <= range) return CaseTag::Case4;
    return CaseTag::None;
}

} // namespace

GapStructure gap_structure(int n, const IntersectionSpec& spec) {
    if (n < 2) throw Error(ErrorCode::PreconditionUnmet, "gap structure needs n >= 2");
    GapStructure gs;
    gs.range = n - 1;
    gs.residues = shifted_size_residues(spec);
    gs.H = periodic_hits(gs.residues, 1, gs.range, static_cast<int>(spec.p()));
    gs.h_empty = gs.H.empty();
    gs.max_gap = max_gap_of(gs.H, gs.range);
    gs.case_tag = classify(n, spec);
    return gs;
}

std::vector<Mask> monomial_basis(int n, int max_degree) { return subsets_by_size(n, 0, max_degree); }

MatrixFp coefficient_matrix(std::span<const MultilinearPoly> polys, std::span<const Mask> basis) {
    if (polys.empty()) throw Error(ErrorCode::PreconditionUnmet, "no polynomials to tabulate");
    MatrixFp m(polys.size(), basis.size(), polys.front().modulus());
    for (std::size_t r = 0; r < polys.size(); ++r)
        for (const auto& [mono, coef] : polys[r].terms()) {
            auto it = std::lower_bound(basis.begin(), basis.end(), mono, CanonicalLess{});
            if (it == basis.end() || *it != mono)
                throw Error(ErrorCode::PreconditionUnmet, "monomial " + format_set(mono) + " outside the basis");
            m(r, static_cast<std::size_t>(it - basis.begin())) = coef;
        }
    return m;
}

GapLemmaCheck check_gap_lemma(std::span<const int> h_residues, int range, int g, const PrimeModulus& p) {
    if (g < 1) throw Error(ErrorCode::PreconditionUnmet, "gap lemma needs g >= 1");
    if (range < 1 || range > 20) throw Error(ErrorCode::PreconditionUnmet, "gap lemma needs 1 <= N <= 20");
    std::vector<int> residues(h_residues.begin(), h_residues.end());
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    for (int h : residues)
        if (h < 0 || static_cast<std::uint32_t>(h) >= p.value())
            throw Error(ErrorCode::PreconditionUnmet, "H must lie in [0, p-1]");

    const int q = static_cast<int>(p.value());
    GapLemmaCheck out;
    out.layer_gap = max_gap_of(periodic_hits(residues, 0, range, q), range);
    out.literal_gap = max_gap_of(periodic_hits(residues, 1, range, q), range);
    out.hypothesis = out.layer_gap >= g + 1;

    MultilinearPoly base = MultilinearPoly::constant(range, p, 1);
    for (int h : residues) base = poly_mul_reduce(base, MultilinearPoly::linear_sum(range, p, ground_mask(range), h));

    std::vector<MultilinearPoly> polys;
    for (Mask index : subsets_by_size(range, 0, g - 1))
        polys.push_back(poly_mul_reduce(base, MultilinearPoly::monomial(range, p, index)));
    out.count = polys.size();
    auto basis = monomial_basis(range, std::min<int>(range, static_cast<int>(residues.size()) + g - 1));
    out.rank = rank(coefficient_matrix(polys, basis));
    out.independent = out.rank == out.count;
    return out;
}

} // namespace modp
