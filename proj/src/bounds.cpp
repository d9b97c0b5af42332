#include "modp/bounds.hpp"

#include <algorithm>

#include "modp/error.hpp"

namespace modp {

BigInt binom(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt binom_sum(std::int64_t n, std::int64_t lo, std::int64_t hi) {
    BigInt total = 0;
    for (std::int64_t i = std::max<std::int64_t>(lo, 0); i <= hi; ++i) total += binom(n, i);
    return total;
}

Residue binom_mod(std::uint64_t x, std::uint64_t i, const PrimeModulus& p) {
    const std::uint64_t q = p.value();
    Residue result = 1 % q;
    while (i > 0 || x > 0) {
        std::uint64_t xd = x % q, id = i % q;
        if (id > xd) return 0;
        // C(xd, id) for digits below p, by the multiplicative formula
        Residue num = 1, den = 1;
        for (std::uint64_t j = 0; j < id; ++j) {
            num = p.mul(num, static_cast<Residue>(xd - j));
            den = p.mul(den, static_cast<Residue>(j + 1));
        }
        result = p.mul(result, p.mul(num, p.inv(den)));
        x /= q;
        i /= q;
    }
    return result;
}

IntersectionSpec::IntersectionSpec(PrimeModulus p, std::vector<int> sizes, std::vector<int> intersections)
    : p_(p), k_(std::move(sizes)), l_(std::move(intersections)) {
    auto check = [&](std::vector<int>& v, const char* name) {
        if (v.empty()) throw Error(ErrorCode::InvalidSpec, std::string(name) + " must be nonempty");
        std::sort(v.begin(), v.end());
        if (std::adjacent_find(v.begin(), v.end()) != v.end())
            throw Error(ErrorCode::InvalidSpec, std::string(name) + " has repeated entries");
        if (v.front() < 0 || static_cast<std::uint32_t>(v.back()) >= p_.value())
            throw Error(ErrorCode::InvalidSpec, std::string(name) + " entries must lie in [0, p-1]");
    };
    check(k_, "K");
    check(l_, "L");
    for (int k : k_)
        if (std::binary_search(l_.begin(), l_.end(), k))
            throw Error(ErrorCode::InvalidSpec, "K and L intersect at " + std::to_string(k));
}

bool IntersectionSpec::size_ok(std::int64_t size) const {
    return std::binary_search(k_.begin(), k_.end(), static_cast<int>(p_.reduce(size)));
}

bool IntersectionSpec::intersection_ok(std::int64_t size) const {
    return std::binary_search(l_.begin(), l_.end(), static_cast<int>(p_.reduce(size)));
}

std::string_view tag_name(TheoremTag tag) {
    switch (tag) {
    case TheoremTag::RW: return "RW";
    case TheoremTag::FW: return "FW";
    case TheoremTag::FW2: return "FW2";
    case TheoremTag::ABS: return "ABS";
    case TheoremTag::Snevily: return "Snevily";
    case TheoremTag::QR: return "QR";
    case TheoremTag::HK: return "HK";
    case TheoremTag::ChenLiu: return "ChenLiu";
    case TheoremTag::LiuYang1: return "LiuYang1";
    case TheoremTag::LiuYang2: return "LiuYang2";
    case TheoremTag::Main: return "Main";
    case TheoremTag::Cor: return "Cor";
    }
    return "?";
}

TheoremTag parse_tag(std::string_view name) {
    for (auto tag : kAllTheorems)
        if (tag_name(tag) == name) return tag;
    throw Error(ErrorCode::UnknownTag, "no theorem named '" + std::string(name) + "'");
}

BigInt bound_value(TheoremTag tag, int n, const IntersectionSpec& spec) {
    if (n < 1) throw Error(ErrorCode::PreconditionUnmet, "bounds need n >= 1");
    const int s = spec.s(), r = spec.r();
    switch (tag) {
    case TheoremTag::RW:
    case TheoremTag::FW2:
        return binom(n, s);
    case TheoremTag::FW:
        return binom_sum(n, 0, s);
    case TheoremTag::ABS:
    case TheoremTag::QR:
    case TheoremTag::HK:
        return binom_sum(n, s - r + 1, s);
    case TheoremTag::Snevily:
        return binom_sum(n - 1, 0, s);
    case TheoremTag::ChenLiu:
    case TheoremTag::LiuYang1:
    case TheoremTag::LiuYang2:
    case TheoremTag::Main:
    case TheoremTag::Cor:
        return binom_sum(n - 1, s - 2 * r + 1, s);
    }
    throw Error(ErrorCode::UnknownTag, "unhandled theorem tag");
}

BigInt bound_value(std::string_view tag, int n, const IntersectionSpec& spec) {
    return bound_value(parse_tag(tag), n, spec);
}

const BoundEntry& BoundReport::entry(TheoremTag tag) const {
    for (const auto& e : entries)
        if (e.tag == tag) return e;
    throw Error(ErrorCode::UnknownTag, std::string(tag_name(tag)) + " missing from report");
}

std::optional<BigInt> BoundReport::tightest() const {
    std::optional<BigInt> best;
    for (const auto& e : entries)
        if (e.holds && (!best || *e.value < *best)) best = e.value;
    return best;
}

namespace {

struct Uniformity {
    bool uniform = false;
    bool exact_l = false;    // every pairwise intersection size lies in L as an integer
    bool modular_l = false;  // every pairwise intersection size lies in L mod p
    int size = 0;
};

Uniformity inspect(std::span<const Mask> members, const IntersectionSpec& spec) {
    Uniformity u;
    u.uniform = true;
    u.exact_l = true;
    u.modular_l = true;
    if (!members.empty()) u.size = set_size(members.front());
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (set_size(members[i]) != u.size) u.uniform = false;
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            int x = set_size(members[i] & members[j]);
            if (!std::binary_search(spec.L().begin(), spec.L().end(), x)) u.exact_l = false;
            if (!spec.intersection_ok(x)) u.modular_l = false;
        }
    }
    return u;
}

} // namespace

BoundReport applicability(int n, const IntersectionSpec& spec, std::optional<std::span<const Mask>> members) {
    const int s = spec.s(), r = spec.r();
    const std::int64_t p = spec.p();
    const bool abs_degree = static_cast<std::int64_t>(r) * (s - r + 1) <= p - 1;
    const bool n_large = n >= s + spec.max_k();

    std::optional<Uniformity> u;
    if (members) u = inspect(*members, spec);

    BoundReport report{n, spec, {}};
    for (auto tag : kAllTheorems) {
        BoundEntry e{tag};
        switch (tag) {
        case TheoremTag::RW:
            e.family_dependent = true;
            e.holds = u && u->uniform && u->exact_l && s <= u->size;
            break;
        case TheoremTag::FW2:
            e.family_dependent = true;
            e.holds = u && u->uniform && u->modular_l && !spec.intersection_ok(u->size) && s <= u->size;
            break;
        case TheoremTag::FW:
        case TheoremTag::Snevily:
            e.holds = true;
            break;
        case TheoremTag::ABS:
        case TheoremTag::LiuYang2:
            e.holds = abs_degree && n_large;
            break;
        case TheoremTag::QR:
            e.holds = n >= 2 * s - r;
            break;
        case TheoremTag::HK:
        case TheoremTag::Cor:
            e.holds = n_large;
            break;
        case TheoremTag::ChenLiu:
            e.holds = spec.min_k() > spec.L().back();
            break;
        case TheoremTag::LiuYang1:
            e.holds = spec.min_k() > s - r;
            break;
        case TheoremTag::Main:
            e.holds = n >= 2 * s - 2 * r + 1;
            break;
        }
        if (e.holds) e.value = bound_value(tag, n, spec);
        report.entries.push_back(std::move(e));
    }
    return report;
}

bool pascal_equivalence_check(int n, int s, int r) {
    if (n < 1 || s < 0 || r < 1) throw Error(ErrorCode::PreconditionUnmet, "need n >= 1, s >= 0, r >= 1");
    BigInt lhs = binom_sum(n - 1, s - 2 * r + 1, s);
    BigInt rhs = 0;
    for (int j = 0; j < r; ++j) rhs += binom(n, s - 2 * j);
    return lhs == rhs;
}

bool strengthening_check(int n, int s, int r) {
    if (n < 2 * s - 2 || r < 2 || s - 2 * (r - 1) < 0)
        throw Error(ErrorCode::PreconditionUnmet, "need n >= 2s-2, r >= 2, s >= 2(r-1)");
    for (int i = 1; i <= r - 1; ++i)
        if (!(binom(n, s - 2 * i) < binom(n, s - i))) return false;
    return true;
}

bool hk_inequality_check(int n, int k, int c) {
    if (!(0 <= c && c < k && 2 * k <= n)) throw Error(ErrorCode::PreconditionUnmet, "need 0 <= c < k <= n/2");
    return binom(n, k - 1 - c) + binom(n, c) <= binom(n, k);
}

Residue BinomialBasisPoly::evaluate(std::uint64_t x) const {
    Residue acc = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) acc = modulus_.add(acc, modulus_.mul(coeffs_[i], binom_mod(x, i, modulus_)));
    return acc;
}

BinomialBasisPoly to_binomial_basis(std::span<const Residue> roots, Residue shift, const PrimeModulus& p) {
    const std::size_t d = roots.size();
    std::vector<Residue> values(d + 1);
    for (std::size_t x = 0; x <= d; ++x) {
        Residue v = 1 % p.value();
        Residue point = p.add(p.reduce(static_cast<std::int64_t>(x)), shift % p.value());
        for (Residue root : roots) v = p.mul(v, p.sub(point, root % p.value()));
        values[x] = v;
    }
    // in-place forward differences: after pass i, values[i] = Delta^i f(0)
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t x = d; x >= i; --x) values[x] = p.sub(values[x], values[x - 1]);
    return BinomialBasisPoly(p, std::move(values));
}

} // namespace modp
