#pragma once

// Independent reference computations for the tests. Deliberately naive:
// nothing here calls into the elimination, search or binomial code.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Big = boost::multiprecision::cpp_int;

// Pascal triangle row by row.
inline Big binom(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<Big> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<Big> next(i + 1, 1);
        for (int j = 1; j < i; ++j) next[j] = row[j - 1] + row[j];
        row = std::move(next);
    }
    return row[k];
}

// p^rank = size of the row space, counted by enumerating every combination.
inline std::size_t rank_by_span(const std::vector<std::vector<int>>& rows, int p) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::set<std::vector<int>> span;
    std::vector<int> coef(rows.size(), 0);
    while (true) {
        std::vector<int> v(cols, 0);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c) v[c] = (v[c] + coef[r] * rows[r][c]) % p;
        span.insert(v);
        std::size_t i = 0;
        while (i < coef.size() && ++coef[i] == p) coef[i++] = 0;
        if (i == coef.size()) break;
    }
    std::size_t rank = 0, size = 1;
    while (size < span.size()) {
        size *= static_cast<std::size_t>(p);
        ++rank;
    }
    return rank;
}

inline bool residue_in(int x, int p, const std::vector<int>& set) {
    return std::find(set.begin(), set.end(), ((x % p) + p) % p) != set.end();
}

// Largest family by trying every subset of the admissible sets.
inline std::size_t brute_force_max_family(int n, int p, const std::vector<int>& K, const std::vector<int>& L) {
    std::vector<std::uint64_t> cands;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (residue_in(std::popcount(m), p, K)) cands.push_back(m);
    const std::size_t c = cands.size();
    std::size_t best = 0;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << c); ++pick) {
        const int size = std::popcount(pick);
        if (static_cast<std::size_t>(size) <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < c && ok; ++i) {
            if (!((pick >> i) & 1)) continue;
            for (std::size_t j = i + 1; j < c && ok; ++j)
                if (((pick >> j) & 1) && !residue_in(std::popcount(cands[i] & cands[j]), p, L)) ok = false;
        }
        if (ok) best = static_cast<std::size_t>(size);
    }
    return best;
}

inline std::size_t count_candidates(int n, int p, const std::vector<int>& K) {
    std::size_t c = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
        if (residue_in(std::popcount(m), p, K)) ++c;
    return c;
}

inline bool valid_family(const std::vector<std::uint64_t>& fam, int p, const std::vector<int>& K,
                         const std::vector<int>& L) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
        if (!residue_in(std::popcount(fam[i]), p, K)) return false;
        for (std::size_t j = i + 1; j < fam.size(); ++j)
            if (fam[i] == fam[j] || !residue_in(std::popcount(fam[i] & fam[j]), p, L)) return false;
    }
    return true;
}

} // namespace oracle
