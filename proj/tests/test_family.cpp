#include "modp/family.hpp"

#include <random>

#include "modp/search.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace modp;

namespace {

IntersectionSpec spec(std::uint32_t p, std::vector<int> k, std::vector<int> l) {
    return IntersectionSpec(PrimeModulus(p), std::move(k), std::move(l));
}

SetFamily fam(int n, std::vector<std::vector<int>> sets) {
    std::vector<Mask> m;
    for (auto& s : sets) m.push_back(to_mask(s));
    return SetFamily(n, m);
}

// Random valid family grown by adding admissible sets that stay compatible.
SetFamily grow(int n, const IntersectionSpec& sp, std::mt19937& rng) {
    auto cat = enumerate_candidates(n, sp).candidates;
    std::shuffle(cat.begin(), cat.end(), rng);
    std::vector<Mask> chosen;
    for (Mask c : cat) {
        bool ok = true;
        for (Mask d : chosen) ok = ok && sp.intersection_ok(set_size(c & d));
        if (ok) chosen.push_back(c);
    }
    return SetFamily(n, chosen);
}

} // namespace

TEST_CASE("family normalisation puts members without n first") {
    auto f = fam(4, {{4}, {1}, {1, 4}, {2}});
    CHECK(f.split() == 2);
    CHECK(f.member(0) == to_mask({1}));
    CHECK(f.member(1) == to_mask({2}));
    CHECK(f.member(2) == to_mask({4}));
    CHECK(f.member(3) == to_mask({1, 4}));
    // idempotent, same multiset
    std::vector<Mask> again(f.members().begin(), f.members().end());
    CHECK(SetFamily(4, again) == f);
    CHECK_ERROR_CODE(fam(3, {{1}, {1}}), ErrorCode::InvalidFamily);
    CHECK_ERROR_CODE(fam(3, {{4}}), ErrorCode::InvalidFamily);
    CHECK_ERROR_CODE(fam(65, {}), ErrorCode::TooLarge);
}

TEST_CASE("validate examples") {
    auto odd = spec(2, {1}, {0});
    CHECK(validate(fam(4, {{1}, {2}, {3}, {4}}), odd).ok());
    auto even = validate(fam(3, {{1, 2}, {2, 3}}), odd);
    CHECK(even.sizes.size() == 2);
    CHECK(even.sizes[0].residue == 0);
    auto inter = validate(fam(3, {{1}, {1, 2, 3}}), odd);
    CHECK(inter.sizes.empty());
    REQUIRE(inter.intersections.size() == 1);
    CHECK(inter.intersections[0].first == 0);
    CHECK(inter.intersections[0].second == 1);
    CHECK(inter.intersections[0].residue == 1);
}

TEST_CASE("inclusion system examples") {
    PrimeModulus p2(2);
    auto sys = build_inclusion_system(fam(3, {{1}, {2}}), 1, p2);
    CHECK(sys.index_sets == std::vector<Mask>{0, to_mask({1}), to_mask({2})});
    CHECK(sys.matrix == MatrixFp({{1, 1}, {1, 0}, {0, 1}}, p2));
    auto empty = build_inclusion_system(SetFamily(3, {}), 1, p2);
    CHECK(empty.matrix.cols() == 0);
    CHECK(empty.matrix.rows() == 3);
    auto top = build_inclusion_system(fam(2, {{2}}), 1, p2);
    CHECK(top.matrix == MatrixFp({{1}, {0}}, p2));
    CHECK_ERROR_CODE(build_inclusion_system(fam(3, {{1}}), 3, p2), ErrorCode::DegreeTooLarge);
    for (int n = 1; n <= 9; ++n)
        for (int cap = 0; cap <= n - 1; ++cap) {
            auto s = build_inclusion_system(fam(n, {{1}}), cap, p2);
            oracle::Big rows = 0;
            for (int i = 0; i <= cap; ++i) rows += oracle::binom(n - 1, i);
            REQUIRE(BigInt(s.matrix.rows()) == BigInt(rows));
        }
}

TEST_CASE("trivial kernel examples") {
    auto odd = spec(2, {1}, {0});
    CHECK(check_trivial_kernel(fam(4, {{1}, {2}, {3}, {4}}), odd).trivial);
    CHECK(check_trivial_kernel(fam(3, {{1}, {2}, {3}}), odd).trivial);
    CHECK_ERROR_CODE(check_trivial_kernel(fam(3, {{1, 2}}), odd), ErrorCode::InvalidFamily);
}

TEST_CASE("dimension upper bound examples") {
    auto odd = spec(2, {1}, {0});
    CHECK(dimension_upper_bound(fam(4, {{1}, {2}, {3}, {4}}), odd) == 4);
    CHECK(dimension_upper_bound(SetFamily(4, {}), odd) == 0);
    auto star = fam(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}});
    CHECK(dimension_upper_bound(star, spec(5, {2}, {1})) >= 5);
}

TEST_CASE("identity (inclusion forms) examples") {
    auto sp = spec(5, {2}, {1});
    auto star = fam(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
    auto c = check_cri_identity(star, sp, 0);
    CHECK(c.holds);
    CHECK(c.forms_checked == 1);
    // f(x) = (x-2)(x-1) = 2 - 3x + x^2 = 2 C(x,0) - 2 C(x,1) + 2 C(x,2)
    CHECK(c.coeffs == std::vector<Residue>{2, 3, 2});
    CHECK(c.constant == 2);
    CHECK(check_cri_identity(fam(5, {{1, 2}, {2, 3}}), sp, 0).holds);
    CHECK(check_cri_identity(SetFamily(5, {}), sp, 0).holds);
    CHECK_ERROR_CODE(check_cri_identity(fam(5, {{1}}), spec(3, {0, 1}, {2}), 0), ErrorCode::Inapplicable);
    CHECK_ERROR_CODE(check_cri_identity(star, sp, 2), ErrorCode::Inapplicable);
}

TEST_CASE("identity holds with c = 0") {
    // K={1}, level 0: f(x) = (x-1)x has f(0) = 0
    auto sp = spec(5, {1}, {0});
    auto c = check_cri_identity(fam(5, {{1}, {2}, {3}}), sp, 0);
    CHECK(c.constant == 0);
    CHECK(c.holds);
}

TEST_CASE("count lemma examples") {
    std::vector<std::vector<int>> pairs;
    for (int a = 1; a <= 5; ++a)
        for (int b = a + 1; b <= 5; ++b) pairs.push_back({a, b});
    auto c = check_count_lemma(fam(6, pairs), PrimeModulus(5), 1, 2);
    CHECK(c.holds);
    CHECK(c.bound == 5);
    CHECK(c.dimension <= 5);
    CHECK_ERROR_CODE(check_count_lemma(fam(6, pairs), PrimeModulus(5), 2, 2), ErrorCode::PreconditionUnmet);
    auto e = check_count_lemma(SetFamily(6, {}), PrimeModulus(5), 1, 2);
    CHECK(e.holds);
    CHECK(e.dimension == 0);
}

TEST_CASE("recursive bound examples") {
    auto sp = spec(5, {2}, {1});
    auto star = fam(7, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 7}});
    // s-2r+1 = 0: the base case is i = 0 and the two sides agree
    auto base = check_recurbound(star, sp, 0);
    CHECK(base.holds);
    CHECK(base.quotient == 0);
    CHECK(base.lhs == base.rhs);
    auto wide = spec(5, {2}, {0, 1, 3});  // s=3, r=1: levels 0..2
    auto sets = fam(7, {{1, 2}, {3, 4}, {5, 6}, {1, 3}});
    for (int i = 0; i <= 2; ++i) CHECK(check_recurbound(sets, wide, i).holds);
    auto top = check_recurbound(sets, wide, 2);
    CHECK(top.lhs == top.rhs);
    CHECK_ERROR_CODE(check_recurbound(fam(3, {{1, 2}}), wide, 0), ErrorCode::PreconditionUnmet);
}

TEST_CASE("kernel, identity and chain over grown families") {
    std::mt19937 rng(99);
    for (int n = 3; n <= 7; ++n)
        for (std::uint32_t p : {2u, 3u, 5u})
            for (const auto& sp : grid_specs(p, 2, 3)) {
                auto f = grow(n, sp, rng);
                REQUIRE(oracle::valid_family(std::vector<std::uint64_t>(f.members().begin(), f.members().end()),
                                             static_cast<int>(p), sp.K(), sp.L()));
                REQUIRE(check_trivial_kernel(f, sp).trivial);
                REQUIRE(f.size() <= dimension_upper_bound(f, sp));
                const int r = sp.r(), s = sp.s();
                if (p > static_cast<std::uint32_t>(2 * r))
                    for (int i = 0; i <= s - 2 * r + 1 && i + 2 * r <= n - 1; ++i)
                        REQUIRE(check_cri_identity(f, sp, i).holds);
                if (n >= 2 * s - 2 * r + 1) {
                    auto chain = check_dimension_chain(f, sp);
                    REQUIRE(chain.holds);
                    REQUIRE(BigInt(chain.rank) <= chain.bound);
                    REQUIRE(chain.bound == bound_value(TheoremTag::Main, n, sp));
                }
            }
}
