#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace modp {

/// A subset of [n] = {1..n}, n <= 64; element e lives in bit e-1.
using Mask = std::uint64_t;

inline constexpr int kMaxGround = 64;

constexpr Mask element_bit(int e) { return Mask{1} << (e - 1); }
constexpr int set_size(Mask m) { return std::popcount(m); }
constexpr bool is_subset(Mask inner, Mask outer) { return (inner & ~outer) == 0; }
constexpr Mask ground_mask(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Canonical order: by size, then lexicographically by sorted element list.
constexpr bool canonical_less(Mask a, Mask b) {
    int sa = set_size(a), sb = set_size(b);
    if (sa != sb) return sa < sb;
    if (a == b) return false;
    Mask diff = a ^ b;
    return (a & diff & (~diff + 1)) != 0;  // a holds the smallest differing element
}

struct CanonicalLess {
    constexpr bool operator()(Mask a, Mask b) const { return canonical_less(a, b); }
};

/// All subsets of [universe] with size in [min_size, max_size], canonically ordered.
std::vector<Mask> subsets_by_size(int universe, int min_size, int max_size);

Mask to_mask(const std::vector<int>& elements);
std::vector<int> to_elements(Mask m);
/// "{1,3}" style rendering.
std::string format_set(Mask m);

} // namespace modp
