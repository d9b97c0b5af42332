#include "modp/subset.hpp"

#include <algorithm>

#include "modp/error.hpp"

namespace modp {

namespace {

// Lexicographic k-combinations of {1..universe} appended to out.
void append_combinations(int universe, int k, std::vector<Mask>& out) {
    if (k < 0 || k > universe) return;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i + 1;
    while (true) {
        Mask m = 0;
        for (int e : c) m |= element_bit(e);
        out.push_back(m);
        int i = k - 1;
        while (i >= 0 && c[i] == universe - k + i + 1) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
}

} // namespace

std::vector<Mask> subsets_by_size(int universe, int min_size, int max_size) {
    if (universe < 0 || universe > kMaxGround)
        throw Error(ErrorCode::TooLarge, "ground set size " + std::to_string(universe) + " outside [0,64]");
    std::vector<Mask> out;
    for (int k = std::max(min_size, 0); k <= std::min(max_size, universe); ++k) append_combinations(universe, k, out);
    return out;
}

Mask to_mask(const std::vector<int>& elements) {
    Mask m = 0;
    for (int e : elements) {
        if (e < 1 || e > kMaxGround) throw Error(ErrorCode::PreconditionUnmet, "element " + std::to_string(e) + " outside [1,64]");
        m |= element_bit(e);
    }
    return m;
}

std::vector<int> to_elements(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m) + 1);
        m &= m - 1;
    }
    return out;
}

std::string format_set(Mask m) {
    std::string s = "{";
    bool first = true;
    for (int e : to_elements(m)) {
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

} // namespace modp
