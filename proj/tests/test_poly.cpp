#include "modp/poly.hpp"

#include <random>

#include "modp/search.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace modp;

namespace {

IntersectionSpec spec(std::uint32_t p, std::vector<int> k, std::vector<int> l) {
    return IntersectionSpec(PrimeModulus(p), std::move(k), std::move(l));
}

Mask m(std::vector<int> e) { return to_mask(e); }

// Direct value of prod_j (sum_{i in vars} x_i - root_j) at a 0/1 point.
Residue direct_product(Mask vars, Mask point, const std::vector<int>& roots, const PrimeModulus& p) {
    Residue v = 1;
    for (int r : roots) v = p.mul(v, p.reduce(set_size(vars & point) - r));
    return v;
}

MultilinearPoly random_poly(int n, const PrimeModulus& p, std::mt19937& rng) {
    std::vector<MultilinearPoly::Term> terms;
    int count = static_cast<int>(rng() % 12);
    for (int i = 0; i < count; ++i) {
        Mask mono = 0;
        for (int v = 1; v <= n; ++v)
            if (rng() % 3 == 0) mono |= element_bit(v);
        terms.emplace_back(mono, static_cast<Residue>(rng() % p.value()));
    }
    return MultilinearPoly(n, p, terms);
}

} // namespace

TEST_CASE("multilinear product examples") {
    PrimeModulus p5(5);
    auto x1 = MultilinearPoly::monomial(2, p5, m({1}));
    auto x2 = MultilinearPoly::monomial(2, p5, m({2}));
    CHECK(poly_mul_reduce(x1, x1) == x1);
    auto prod = poly_mul_reduce(x1 + x2, x1 - x2);
    CHECK(prod == MultilinearPoly(2, p5, {{m({1}), 1}, {m({2}), 4}}));
    CHECK(prod.coefficient(m({1, 2})) == 0);
    for (Mask pt = 0; pt < 4; ++pt) CHECK(prod.evaluate(pt) == p5.reduce(set_size(pt & 1) - set_size(pt & 2)));
    auto one = MultilinearPoly::constant(2, p5, 1);
    auto f = x1 + x2.scaled(3) + one;
    CHECK(poly_mul_reduce(one, f) == f);
    CHECK_ERROR_CODE(poly_mul_reduce(x1, MultilinearPoly::monomial(3, p5, 1)), ErrorCode::MixedContext);
    CHECK_ERROR_CODE(poly_mul_reduce(x1, MultilinearPoly::monomial(2, PrimeModulus(3), 1)), ErrorCode::MixedContext);
    CHECK(MultilinearPoly(2, p5).degree() == -1);
    CHECK(MultilinearPoly(2, p5, {{m({1}), 5}}).is_zero());
}

TEST_CASE("reduced products agree with pointwise products on {0,1}^n, n <= 10") {
    std::mt19937 rng(4242);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeModulus mod(p);
        for (int trial = 0; trial < 200; ++trial) {
            int n = 1 + trial % 10;
            auto f = random_poly(n, mod, rng), g = random_poly(n, mod, rng);
            auto h = poly_mul_reduce(f, g);
            for (Mask pt = 0; pt < (Mask{1} << n); ++pt)
                REQUIRE(h.evaluate(pt) == mod.mul(f.evaluate(pt), g.evaluate(pt)));
            REQUIRE(poly_mul_reduce(f, g) == poly_mul_reduce(g, f));
        }
    }
}

TEST_CASE("f_A examples") {
    auto sp = spec(5, {2}, {1});
    auto f = build_fA(m({1, 2}), 3, sp);
    CHECK(f == MultilinearPoly(3, PrimeModulus(5), {{0, 4}, {m({1}), 1}, {m({2}), 1}}));
}

TEST_CASE("f_A vanishes off the diagonal of valid families") {
    for (int n = 2; n <= 7; ++n)
        for (std::uint32_t p : {2u, 3u, 5u})
            for (const auto& sp : grid_specs(p, 2, 3)) {
                auto res = max_family(n, sp);
                const auto& fam = res.witness;
                for (std::size_t j = 0; j < fam.size(); ++j) {
                    auto f = build_fA(fam.member(j), n, sp);
                    REQUIRE(f.degree() <= sp.s());
                    for (std::size_t i = 0; i < fam.size(); ++i) {
                        Residue v = f.evaluate(fam.member(i));
                        if (i == j)
                            REQUIRE(v != 0);
                        else
                            REQUIRE(v == 0);
                    }
                }
            }
}

TEST_CASE("f_A, g_I evaluate like their defining products, n <= 12") {
    for (int n : {3, 6, 9, 12}) {
        auto sp = spec(5, {0, 2}, {1, 3, 4});
        PrimeModulus p(5);
        Mask a = m({1, 3}) | (n >= 6 ? m({6}) : 0);
        auto f = build_fA(a, n, sp);
        auto g = build_g(n, sp);
        auto residues = shifted_size_residues(sp);
        CHECK(residues == std::vector<int>{0, 1, 2, 4});
        const Mask low = ground_mask(n - 1);
        for (Mask pt = 0; pt < (Mask{1} << n); ++pt) {
            REQUIRE(f.evaluate(pt) == direct_product(a, pt, sp.L(), p));
            REQUIRE(g.evaluate(pt) == direct_product(low, pt, residues, p));
        }
    }
}

TEST_CASE("q_L examples") {
    auto sp = spec(5, {2}, {0, 1});
    PrimeModulus p5(5);
    CHECK(build_qL(0, 2, sp) == MultilinearPoly(2, p5, {{0, 1}, {m({2}), 4}}));
    auto q = build_qL(m({1}), 3, sp);
    CHECK(q == MultilinearPoly(3, p5, {{m({1}), 1}, {m({1, 3}), 4}}));
    CHECK(q.evaluate(m({1, 3})) == 0);
    CHECK(q.evaluate(m({1})) == 1);
    CHECK_ERROR_CODE(build_qL(m({3}), 3, sp), ErrorCode::BadIndexSet);
    CHECK_ERROR_CODE(build_qL(m({1, 2}), 4, sp), ErrorCode::BadIndexSet);
}

TEST_CASE("g and g_I examples") {
    // K={1}, p=2: x_1 (x_1 - 1) reduces to the zero polynomial
    CHECK(build_g(2, spec(2, {1}, {0})).is_zero());
    // K={2}, p=5, n=3: (S-1)(S-2) with S = x1+x2 gives 2 - 2S + 2 x1 x2
    auto sp = spec(5, {2}, {0, 1, 3});
    auto g = build_gI(0, 3, sp);
    PrimeModulus p5(5);
    CHECK(g == MultilinearPoly(3, p5, {{0, 2}, {m({1}), 3}, {m({2}), 3}, {m({1, 2}), 2}}));
    for (Mask pt = 0; pt < 8; ++pt)
        CHECK(g.evaluate(pt) == p5.reduce((set_size(pt & 3) - 1) * (set_size(pt & 3) - 2)));
    auto g1 = build_gI(m({1}), 3, sp);
    CHECK(g1 == poly_mul_reduce(g, MultilinearPoly::monomial(3, p5, m({1}))));
    CHECK_ERROR_CODE(build_gI(m({1, 2}), 3, sp), ErrorCode::BadIndexSet);  // |I| > s-2r = 1
    CHECK_ERROR_CODE(build_gI(m({3}), 3, sp), ErrorCode::BadIndexSet);
}

TEST_CASE("gap structure examples") {
    auto a = gap_structure(6, spec(5, {2}, {1}));
    CHECK(a.range == 5);
    CHECK(a.H == std::vector<int>{1, 2});
    CHECK(a.max_gap == 4);
    CHECK(a.case_tag == CaseTag::Case1);
    auto b = gap_structure(4, spec(2, {1}, {0}));
    CHECK(b.H == std::vector<int>{1, 2, 3});
    CHECK(b.max_gap == 2);
    auto c = gap_structure(4, spec(3, {0}, {1}));
    CHECK(c.H == std::vector<int>{2, 3});
    CHECK(c.max_gap == 3);
    auto empty = gap_structure(2, spec(7, {4}, {1}));  // residues {3,4}, N = 1
    CHECK(empty.H.empty());
    CHECK(empty.h_empty);
    CHECK(empty.max_gap == 2);
    CHECK(empty.case_tag == CaseTag::None);  // n < s + max K
    CHECK_ERROR_CODE(gap_structure(1, spec(2, {1}, {0})), ErrorCode::PreconditionUnmet);
    std::vector<int> h{3, 7};
    CHECK(max_gap_of(h, 10) == 4);
    CHECK(max_gap_of(std::vector<int>{}, 10) == 11);
}

TEST_CASE("Cases 1-3 always carry a gap of at least s-2r+2") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u})
        for (const auto& sp : grid_specs(p, 3, 4))
            for (int n = 2; n <= 24; ++n) {
                auto gs = gap_structure(n, sp);
                if (gs.case_tag == CaseTag::Case1 || gs.case_tag == CaseTag::Case2 || gs.case_tag == CaseTag::Case3)
                    REQUIRE(gs.max_gap >= sp.s() - 2 * sp.r() + 2);
                REQUIRE((gs.case_tag == CaseTag::None) == (n < sp.s() + sp.max_k()));
            }
}

TEST_CASE("gap lemma examples") {
    PrimeModulus p5(5);
    std::vector<int> h{1, 2};
    auto c = check_gap_lemma(h, 5, 3, p5);
    CHECK(c.hypothesis);
    CHECK(c.independent);
    CHECK(c.count == 1 + 5 + 10);
    CHECK(c.rank == c.count);
    auto g1 = check_gap_lemma(h, 5, 1, p5);
    CHECK(g1.independent);
    CHECK(g1.count == 1);
    auto none = check_gap_lemma(std::vector<int>{}, 4, 4, p5);
    CHECK(none.hypothesis);
    CHECK(none.independent);
    CHECK_ERROR_CODE(check_gap_lemma(h, 5, 0, p5), ErrorCode::PreconditionUnmet);
    CHECK_ERROR_CODE(check_gap_lemma(h, 21, 1, p5), ErrorCode::PreconditionUnmet);
}

TEST_CASE("gap lemma: the layer reading is needed") {
    // H={0,2}, p=3, N=2, g=2. Read within {1..N} the hit set is {2} with gap
    // h_1+1 = 3 >= g+1; within {0..N} it is {0,2} with gap 2. And
    // p(x) = S(S-2) satisfies p (1 - x1 - x2) = 0, so the p_I are dependent.
    PrimeModulus p3(3);
    std::vector<int> h{0, 2};
    auto c = check_gap_lemma(h, 2, 2, p3);
    CHECK(c.literal_gap == 3);
    CHECK(c.layer_gap == 2);
    CHECK_FALSE(c.hypothesis);
    CHECK_FALSE(c.independent);
    CHECK(c.count == 3);
    CHECK(c.rank == 2);
}

TEST_CASE("gap lemma holds wherever its hypothesis does") {
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeModulus mod(p);
        for (Mask hm = 0; hm < (Mask{1} << p); ++hm) {
            std::vector<int> h;
            for (int e : to_elements(hm)) h.push_back(e - 1);
            for (int range = 1; range <= 7; ++range)
                for (int g = 1; g <= range + 1; ++g) {
                    auto c = check_gap_lemma(h, range, g, mod);
                    oracle::Big count = 0;
                    for (int i = 0; i < g; ++i) count += oracle::binom(range, i);
                    REQUIRE(BigInt(c.count) == BigInt(count));
                    if (c.hypothesis) REQUIRE(c.independent);
                }
        }
    }
}

TEST_CASE("monomial basis size and coefficient matrix") {
    for (int n = 1; n <= 10; ++n)
        for (int d = 0; d <= n; ++d) {
            oracle::Big size = 0;
            for (int i = 0; i <= d; ++i) size += oracle::binom(n, i);
            REQUIRE(BigInt(monomial_basis(n, d).size()) == BigInt(size));
        }
    PrimeModulus p5(5);
    auto basis = monomial_basis(2, 1);
    CHECK(basis == std::vector<Mask>{0, 1, 2});
    std::vector<MultilinearPoly> polys{MultilinearPoly(2, p5, {{0, 2}, {2, 1}})};
    CHECK(coefficient_matrix(polys, basis) == MatrixFp({{2, 0, 1}}, p5));
    std::vector<MultilinearPoly> big{MultilinearPoly::monomial(2, p5, 3)};
    CHECK_ERROR_CODE(coefficient_matrix(big, basis), ErrorCode::PreconditionUnmet);
}
