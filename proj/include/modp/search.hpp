#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "modp/bounds.hpp"
#include "modp/family.hpp"

namespace modp {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;
inline constexpr int kMaxCatalogGround = 24;
inline constexpr std::size_t kMaxGraphVertices = 16384;

struct CandidateCatalog {
    int n;
    IntersectionSpec spec;
    std::vector<Mask> candidates;  // (size, lex) order
};

/// Every subset of [n] whose size mod p lies in K. Throws TooLarge for n > 24.
CandidateCatalog enumerate_candidates(int n, const IntersectionSpec& spec);

/// Dense bitset adjacency.
class CompatibilityGraph {
public:
    explicit CompatibilityGraph(std::size_t vertices);
    /// i ~ j iff i != j and |A_i & A_j| mod p in L. Throws TooLarge past kMaxGraphVertices.
    static CompatibilityGraph build(const CandidateCatalog& catalog);

    std::size_t size() const noexcept { return n_; }
    std::size_t words() const noexcept { return words_; }
    bool adjacent(std::size_t i, std::size_t j) const {
        return (rows_[i * words_ + j / 64] >> (j % 64)) & 1u;
    }
    void connect(std::size_t i, std::size_t j);
    const std::uint64_t* neighbors(std::size_t i) const { return rows_.data() + i * words_; }
    std::size_t degree(std::size_t i) const;

private:
    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> rows_;
};

struct CliqueResult {
    std::vector<std::size_t> vertices;  // ascending
    std::uint64_t nodes = 0;
    bool proved_optimal = false;
    bool budget_exhausted = false;
};

/// Branch and bound with greedy colouring bounds over a degeneracy order.
/// Deterministic; once more than node_budget nodes are expanded it stops and
/// returns the incumbent with budget_exhausted set.
CliqueResult max_clique(const CompatibilityGraph& graph, std::uint64_t node_budget = kDefaultNodeBudget);

/// Same search when vertex i is the subset subsets[i] of [ground] and adjacency
/// only depends on intersection sizes. After a branch on v the whole orbit of
/// v under the permutations fixing every clique member is dropped.
CliqueResult max_clique(const CompatibilityGraph& graph, std::span<const Mask> subsets, int ground,
                        std::uint64_t node_budget = kDefaultNodeBudget);

struct SearchResult {
    std::size_t optimum = 0;
    SetFamily witness;
    std::uint64_t nodes = 0;
    bool proved_optimal = false;
    bool budget_exhausted = false;
};

/// use_symmetry = false runs the plain colouring search with no orbit pruning.
SearchResult max_family(int n, const IntersectionSpec& spec, std::uint64_t node_budget = kDefaultNodeBudget,
                        bool use_symmetry = true);

struct SweepGrid {
    int n_min = 0;
    int n_max = -1;
    std::vector<std::uint32_t> primes;
    int k_size_max = 1;
    int l_size_max = 1;
    std::uint64_t node_budget = kDefaultNodeBudget;
    bool use_symmetry = true;
};

/// All (K, L) with K, L nonempty, disjoint, |K| <= kmax, |L| <= lmax, in
/// canonical order of K then L.
std::vector<IntersectionSpec> grid_specs(std::uint32_t p, int k_size_max, int l_size_max);

struct SweepRow {
    int n;
    IntersectionSpec spec;
    std::optional<SearchResult> result;  // empty when the instance errored
    std::optional<BoundReport> bounds;
    std::optional<BigInt> slack;         // tightest applicable bound - optimum
    bool violation = false;
    std::vector<TheoremTag> violated;
    std::string error;
};

/// Runs the search and every applicable bound on each grid instance. A failing
/// instance records its error and the sweep carries on.
std::vector<SweepRow> sweep(const SweepGrid& grid);
std::string sweep_csv(const std::vector<SweepRow>& rows);

} // namespace modp
