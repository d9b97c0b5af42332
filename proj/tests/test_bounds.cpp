#include "modp/bounds.hpp"

#include "oracles.hpp"
#include "support.hpp"

using namespace modp;

namespace {

IntersectionSpec spec(std::uint32_t p, std::vector<int> k, std::vector<int> l) {
    return IntersectionSpec(PrimeModulus(p), std::move(k), std::move(l));
}

BigInt big(const oracle::Big& b) { return BigInt(b); }

} // namespace

TEST_CASE("binom examples and Pascal rule") {
    CHECK(binom(4, 2) == 6);
    CHECK(binom(5, -1) == 0);
    CHECK(binom(3, 4) == 0);
    CHECK(binom(30, 15) == BigInt(155117520));
    CHECK(binom(100, 50) == BigInt("100891344545564193334812497256"));
    for (int n = 1; n <= 60; ++n)
        for (int k = -1; k <= n + 1; ++k) {
            REQUIRE(binom(n, k) == binom(n - 1, k) + binom(n - 1, k - 1));
            REQUIRE(binom(n, k) == big(oracle::binom(n, k)));
        }
}

TEST_CASE("binom_mod agrees with exact binomials") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        PrimeModulus m(p);
        for (int x = 0; x <= 40; ++x)
            for (int i = 0; i <= 12; ++i)
                REQUIRE(BigInt(binom_mod(x, i, m)) == binom(x, i) % p);
    }
}

TEST_CASE("spec validation") {
    CHECK_ERROR_CODE(spec(5, {1, 2}, {2}), ErrorCode::InvalidSpec);
    CHECK_ERROR_CODE(spec(5, {}, {2}), ErrorCode::InvalidSpec);
    CHECK_ERROR_CODE(spec(5, {1}, {}), ErrorCode::InvalidSpec);
    CHECK_ERROR_CODE(spec(5, {5}, {1}), ErrorCode::InvalidSpec);
    CHECK_ERROR_CODE(spec(5, {1, 1}, {2}), ErrorCode::InvalidSpec);
    auto s = spec(7, {4, 1}, {3, 0});
    CHECK(s.K() == std::vector<int>{1, 4});
    CHECK(s.L() == std::vector<int>{0, 3});
    CHECK(s.r() == 2);
    CHECK(s.s() == 2);
    CHECK(s.size_ok(8));
    CHECK_FALSE(s.size_ok(9));
    CHECK(s.intersection_ok(10));
}

TEST_CASE("bound value examples") {
    auto odd = spec(2, {1}, {0});
    CHECK(bound_value(TheoremTag::Cor, 4, odd) == 4);
    CHECK(bound_value(TheoremTag::ABS, 4, odd) == 4);
    CHECK(bound_value(TheoremTag::FW, 4, odd) == 5);
    CHECK(bound_value("Snevily", 4, odd) == 4);
    CHECK_ERROR_CODE(bound_value("Nope", 4, odd), ErrorCode::UnknownTag);
    // s=2, r=1: the lower index s-2r+1 = 1
    auto t = spec(5, {2}, {0, 1});
    CHECK(bound_value(TheoremTag::Cor, 10, t) == 45);
    // s < 2r-1 truncates at zero
    auto w = spec(5, {1, 2, 3}, {0});
    CHECK(bound_value(TheoremTag::Cor, 6, w) == 6);
}

TEST_CASE("bound formulas against the Pascal oracle") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (int n = 1; n <= 14; ++n) {
            auto sp = spec(p, {0}, {1});
            if (p >= 5) sp = spec(p, {0, 3}, {1, 2, 4});
            const int s = sp.s(), r = sp.r();
            auto sum = [](int top, int lo, int hi) {
                oracle::Big acc = 0;
                for (int i = std::max(lo, 0); i <= hi; ++i) acc += oracle::binom(top, i);
                return BigInt(acc);
            };
            CHECK(bound_value(TheoremTag::RW, n, sp) == big(oracle::binom(n, s)));
            CHECK(bound_value(TheoremTag::FW, n, sp) == sum(n, 0, s));
            CHECK(bound_value(TheoremTag::ABS, n, sp) == sum(n, s - r + 1, s));
            CHECK(bound_value(TheoremTag::Snevily, n, sp) == sum(n - 1, 0, s));
            CHECK(bound_value(TheoremTag::Main, n, sp) == sum(n - 1, s - 2 * r + 1, s));
            CHECK(bound_value(TheoremTag::LiuYang2, n, sp) == sum(n - 1, s - 2 * r + 1, s));
        }
}

TEST_CASE("applicability examples") {
    auto odd = applicability(4, spec(2, {1}, {0}));
    CHECK(odd.entry(TheoremTag::Cor).holds);
    CHECK(odd.entry(TheoremTag::Main).holds);
    CHECK(odd.entry(TheoremTag::QR).holds);
    CHECK(odd.entry(TheoremTag::FW).holds);
    CHECK(odd.entry(TheoremTag::Snevily).holds);
    CHECK(*odd.entry(TheoremTag::Cor).value == 4);
    CHECK_FALSE(odd.entry(TheoremTag::RW).holds);
    CHECK(odd.entry(TheoremTag::RW).family_dependent);
    CHECK(*odd.tightest() == 4);

    auto small = applicability(2, spec(5, {3}, {0, 1}));
    CHECK_FALSE(small.entry(TheoremTag::Cor).holds);
    CHECK_FALSE(small.entry(TheoremTag::Cor).value.has_value());

    auto star = applicability(6, spec(5, {2}, {1}));
    CHECK(star.entry(TheoremTag::ABS).holds);
    CHECK(*star.entry(TheoremTag::ABS).value == 6);
    CHECK(star.entry(TheoremTag::ChenLiu).holds);   // 2 > 1
    CHECK(star.entry(TheoremTag::LiuYang1).holds);  // 2 > s - r = 0
}

TEST_CASE("applicability hypotheses") {
    // r=2, s=3: r(s-r+1) = 4 <= p-1, s + max K = 7, 2s-r = 4, 2s-2r+1 = 3
    auto t = spec(5, {0, 4}, {1, 2, 3});
    auto big_n = applicability(20, t);
    CHECK(big_n.entry(TheoremTag::ABS).holds);
    CHECK(big_n.entry(TheoremTag::HK).holds);
    CHECK(big_n.entry(TheoremTag::LiuYang2).holds);
    CHECK_FALSE(big_n.entry(TheoremTag::ChenLiu).holds);   // 0 < 3
    CHECK_FALSE(big_n.entry(TheoremTag::LiuYang1).holds);  // 0 <= s - r
    auto six = applicability(6, t);
    CHECK_FALSE(six.entry(TheoremTag::ABS).holds);
    CHECK_FALSE(six.entry(TheoremTag::Cor).holds);
    CHECK(six.entry(TheoremTag::QR).holds);
    CHECK(six.entry(TheoremTag::Main).holds);
    auto three = applicability(3, t);
    CHECK_FALSE(three.entry(TheoremTag::QR).holds);
    CHECK(three.entry(TheoremTag::Main).holds);
    CHECK_FALSE(applicability(2, t).entry(TheoremTag::Main).holds);
    // r(s-r+1) = 8 > 6
    auto wide = applicability(30, spec(7, {1, 2}, {0, 3, 4, 5, 6}));
    CHECK_FALSE(wide.entry(TheoremTag::ABS).holds);
    CHECK(wide.entry(TheoremTag::HK).holds);
    for (const auto& e : wide.entries) CHECK(e.holds == e.value.has_value());
}

TEST_CASE("family-dependent theorems") {
    auto sp = spec(2, {1}, {0});
    std::vector<Mask> singles{0b0001, 0b0010, 0b0100, 0b1000};
    auto rep = applicability(4, sp, singles);
    CHECK(rep.entry(TheoremTag::RW).holds);
    CHECK(*rep.entry(TheoremTag::RW).value == 4);
    CHECK(rep.entry(TheoremTag::FW2).holds);
    std::vector<Mask> mixed{0b0001, 0b0111};
    auto rep2 = applicability(4, sp, mixed);
    CHECK_FALSE(rep2.entry(TheoremTag::RW).holds);
    CHECK_FALSE(rep2.entry(TheoremTag::FW2).holds);
    // s > k: three residues but 1-sets
    auto wide = spec(5, {1}, {0, 2, 3});
    std::vector<Mask> three{0b001, 0b010, 0b100};
    auto rep3 = applicability(3, wide, three);
    CHECK_FALSE(rep3.entry(TheoremTag::RW).holds);
    CHECK_FALSE(rep3.entry(TheoremTag::FW2).holds);
}

TEST_CASE("binomial identity examples and exhaustive range") {
    CHECK(pascal_equivalence_check(10, 4, 2));
    CHECK(binom_sum(9, 1, 4) == 255);
    CHECK(binom(10, 4) + binom(10, 2) == 255);
    CHECK(pascal_equivalence_check(5, 2, 1));
    CHECK(pascal_equivalence_check(3, 1, 1));
    for (int n = 1; n <= 30; ++n)
        for (int s = 0; s <= n; ++s)
            for (int r = 1; r <= (s + 1) / 2; ++r) REQUIRE(pascal_equivalence_check(n, s, r));
}

TEST_CASE("strengthening examples") {
    CHECK(strengthening_check(10, 4, 2));
    CHECK(strengthening_check(6, 4, 2));
    CHECK_ERROR_CODE(strengthening_check(5, 4, 2), ErrorCode::PreconditionUnmet);
}

TEST_CASE("pair inequality examples and exhaustive range") {
    CHECK(hk_inequality_check(10, 4, 1));
    CHECK(hk_inequality_check(4, 2, 0));
    CHECK_ERROR_CODE(hk_inequality_check(10, 6, 1), ErrorCode::PreconditionUnmet);
    for (int n = 0; n <= 60; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int c = 0; c < k; ++c) {
                REQUIRE(hk_inequality_check(n, k, c));
                REQUIRE(oracle::binom(n, k - 1 - c) + oracle::binom(n, c) <= oracle::binom(n, k));
            }
}

TEST_CASE("binomial basis examples") {
    PrimeModulus p5(5);
    std::vector<Residue> one{1};
    CHECK(to_binomial_basis(one, 0, p5).coeffs() == std::vector<Residue>{4, 1});
    CHECK(to_binomial_basis(std::vector<Residue>{}, 0, p5).coeffs() == std::vector<Residue>{1});
    std::vector<Residue> zero_one{0, 1};
    CHECK(to_binomial_basis(zero_one, 0, p5).coeffs() == std::vector<Residue>{0, 0, 2});
}

TEST_CASE("binomial basis round trip, p <= 13, degree <= 8") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
        PrimeModulus m(p);
        for (int d = 0; d <= 8; ++d)
            for (int trial = 0; trial < 6; ++trial) {
                std::vector<Residue> roots;
                for (int j = 0; j < d; ++j) roots.push_back(static_cast<Residue>((j * 7 + trial * 3 + d) % p));
                Residue shift = static_cast<Residue>(trial % p);
                auto poly = to_binomial_basis(roots, shift, m);
                REQUIRE(poly.degree() == d);
                // direct product at x = 0..max(p-1, 2d): the identity holds on all integers
                for (std::uint64_t x = 0; x < std::max<std::uint64_t>(p, 2 * d + 2); ++x) {
                    Residue direct = 1;
                    for (auto r : roots) direct = m.mul(direct, m.reduce(static_cast<std::int64_t>(x) + shift - r));
                    REQUIRE(poly.evaluate(x) == direct);
                }
            }
    }
}

TEST_CASE("FW >= ABS >= Cor when n >= 2s-2 and s-2r+1 >= 0") {
    for (std::uint32_t p : {2u, 3u, 5u, 7u})
        for (Mask km = 1; km < (Mask{1} << p); ++km)
            for (Mask lm = 1; lm < (Mask{1} << p); ++lm) {
                if (km & lm) continue;
                std::vector<int> k, l;
                for (int e : to_elements(km)) k.push_back(e - 1);
                for (int e : to_elements(lm)) l.push_back(e - 1);
                auto sp = spec(p, k, l);
                const int s = sp.s(), r = sp.r();
                if (s - 2 * r + 1 < 0) continue;
                for (int n = std::max(1, 2 * s - 2); n <= 16; ++n) {
                    auto fw = bound_value(TheoremTag::FW, n, sp);
                    auto abs = bound_value(TheoremTag::ABS, n, sp);
                    auto cor = bound_value(TheoremTag::Cor, n, sp);
                    REQUIRE(fw >= abs);
                    REQUIRE(abs >= cor);
                    if (r >= 2 && n >= 2 * s - 2) {
                        REQUIRE(strengthening_check(n, s, r));
                        REQUIRE(cor < abs);
                    }
                }
            }
}

TEST_CASE("tag names round trip") {
    for (auto t : kAllTheorems) CHECK(parse_tag(tag_name(t)) == t);
    CHECK_ERROR_CODE(parse_tag("abs"), ErrorCode::UnknownTag);
}
