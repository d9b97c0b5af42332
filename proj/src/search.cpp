#include "modp/search.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "modp/error.hpp"

namespace modp {

CandidateCatalog enumerate_candidates(int n, const IntersectionSpec& spec) {
    if (n < 0 || n > kMaxCatalogGround)
        throw Error(ErrorCode::TooLarge, "candidate catalog needs 0 <= n <= 24, got n=" + std::to_string(n));
    CandidateCatalog cat{n, spec, {}};
    for (int size = 0; size <= n; ++size) {
        if (!spec.size_ok(size)) continue;
        auto layer = subsets_by_size(n, size, size);
        cat.candidates.insert(cat.candidates.end(), layer.begin(), layer.end());
    }
    return cat;
}

CompatibilityGraph::CompatibilityGraph(std::size_t vertices)
    : n_(vertices), words_((vertices + 63) / 64), rows_(n_ * words_, 0) {}

void CompatibilityGraph::connect(std::size_t i, std::size_t j) {
    rows_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    rows_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
}

std::size_t CompatibilityGraph::degree(std::size_t i) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(rows_[i * words_ + w]);
    return d;
}

CompatibilityGraph CompatibilityGraph::build(const CandidateCatalog& catalog) {
    const auto& c = catalog.candidates;
    if (c.size() > kMaxGraphVertices)
        throw Error(ErrorCode::TooLarge, std::to_string(c.size()) + " candidates exceed the graph limit of " +
                                             std::to_string(kMaxGraphVertices));
    // residue table for intersection sizes 0..n
    std::vector<char> ok(static_cast<std::size_t>(catalog.n) + 1);
    for (int t = 0; t <= catalog.n; ++t) ok[t] = catalog.spec.intersection_ok(t);
    CompatibilityGraph g(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = i + 1; j < c.size(); ++j)
            if (ok[std::popcount(c[i] & c[j])]) g.connect(i, j);
    return g;
}

namespace {

using Words = std::vector<std::uint64_t>;

// Removal order of repeated min-degree deletion, reversed so that the
// densest core comes first. Ties go to the lower index.
std::vector<std::size_t> degeneracy_order(const CompatibilityGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> gone(n, 0);
    std::vector<std::size_t> removal;
    removal.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!gone[v] && (best == n || deg[v] < deg[best])) best = v;
        gone[best] = 1;
        removal.push_back(best);
        for (std::size_t u = 0; u < n; ++u)
            if (!gone[u] && g.adjacent(best, u)) --deg[u];
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

class Solver {
public:
    Solver(const CompatibilityGraph& g, std::uint64_t budget, std::span<const Mask> masks, int ground)
        : budget_(budget), n_(g.size()), words_(g.words()), ground_(ground) {
        order_ = degeneracy_order(g);
        if (!masks.empty()) {
            if (masks.size() != n_) throw Error(ErrorCode::PreconditionUnmet, "one subset per vertex expected");
            for (std::size_t i = 0; i < n_; ++i) masks_.push_back(masks[order_[i]]);
            atoms_.resize(n_ + 2);
            atoms_[0].push_back(ground_mask(ground));
        }
        adj_.assign(n_ * words_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                if (g.adjacent(order_[i], order_[j])) adj_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
        pool_.assign((n_ + 2) * words_, 0);
        verts_.resize(n_ + 2);
        colors_.resize(n_ + 2);
        uncolored_.assign(words_, 0);
        klass_.assign(words_, 0);
    }

    CliqueResult run() {
        CliqueResult out;
        if (n_ > 0) {
            greedy_start();
            for (std::size_t v = 0; v < n_; ++v) pool_[v / 64] |= std::uint64_t{1} << (v % 64);
            expand(0);
        }
        out.nodes = nodes_;
        out.budget_exhausted = exhausted_;
        out.proved_optimal = !exhausted_;
        for (auto v : best_) out.vertices.push_back(order_[v]);
        std::sort(out.vertices.begin(), out.vertices.end());
        return out;
    }

private:
    const std::uint64_t* nb(std::size_t v) const { return adj_.data() + v * words_; }

    // Grow a clique from each of the first few vertices, always taking the
    // lowest remaining candidate.
    void greedy_start() {
        Words p(words_);
        const std::size_t seeds = std::min<std::size_t>(n_, 64);
        for (std::size_t seed = 0; seed < seeds; ++seed) {
            std::vector<std::size_t> clique{seed};
            std::copy(nb(seed), nb(seed) + words_, p.begin());
            for (std::size_t w = 0; w < words_;) {
                if (!p[w]) {
                    ++w;
                    continue;
                }
                std::size_t u = w * 64 + std::countr_zero(p[w]);
                clique.push_back(u);
                for (std::size_t x = 0; x < words_; ++x) p[x] &= nb(u)[x];
            }
            if (clique.size() > best_.size()) best_ = clique;
        }
    }

    std::size_t hits(const std::uint64_t* a, const std::uint64_t* b, std::size_t limit) const {
        std::size_t c = 0;
        for (std::size_t w = 0; w < words_ && c < limit; ++w) c += std::popcount(a[w] & b[w]);
        return c;
    }

    // Moves v into an earlier class k1 whose only neighbour w of v can itself
    // move to a later class k2 < kmin. Classes 1..kmin-1 are stored in classes_.
    bool renumber(std::size_t v, std::size_t kmin) {
        for (std::size_t k1 = 1; k1 + 1 < kmin; ++k1) {
            std::uint64_t* c1 = classes_.data() + (k1 - 1) * words_;
            if (hits(nb(v), c1, 2) != 1) continue;
            std::size_t w = 0;
            for (std::size_t x = 0; x < words_; ++x)
                if (nb(v)[x] & c1[x]) {
                    w = x * 64 + std::countr_zero(nb(v)[x] & c1[x]);
                    break;
                }
            for (std::size_t k2 = k1 + 1; k2 < kmin; ++k2) {
                std::uint64_t* c2 = classes_.data() + (k2 - 1) * words_;
                if (hits(nb(w), c2, 1) != 0) continue;
                c1[w / 64] &= ~(std::uint64_t{1} << (w % 64));
                c1[v / 64] |= std::uint64_t{1} << (v % 64);
                c2[w / 64] |= std::uint64_t{1} << (w % 64);
                return true;
            }
        }
        return false;
    }

    // Greedy sequential colouring of the candidates at this depth. Only
    // vertices whose colour could still beat the incumbent are kept.
    void color(std::size_t depth) {
        const std::uint64_t* cand = pool_.data() + depth * words_;
        auto& verts = verts_[depth];
        auto& colors = colors_[depth];
        verts.clear();
        colors.clear();
        const std::size_t kmin = best_.size() >= current_.size() ? best_.size() - current_.size() + 1 : 1;
        if (classes_.size() < kmin * words_) classes_.resize(kmin * words_);
        std::copy(cand, cand + words_, uncolored_.begin());
        std::size_t k = 0;
        bool left = true;
        while (left) {
            ++k;
            std::copy(uncolored_.begin(), uncolored_.end(), klass_.begin());
            std::uint64_t* store = k < kmin ? classes_.data() + (k - 1) * words_ : nullptr;
            if (store) std::fill(store, store + words_, 0);
            for (std::size_t w = 0; w < words_; ++w) {
                while (klass_[w]) {
                    std::size_t v = w * 64 + std::countr_zero(klass_[w]);
                    klass_[w] &= klass_[w] - 1;
                    uncolored_[w] &= ~(std::uint64_t{1} << (v % 64));
                    if (k >= kmin && kmin > 2 && renumber(v, kmin)) continue;
                    for (std::size_t x = w; x < words_; ++x) klass_[x] &= ~nb(v)[x];
                    if (store) {
                        store[w] |= std::uint64_t{1} << (v % 64);
                    } else {
                        verts.push_back(static_cast<std::uint32_t>(v));
                        colors.push_back(static_cast<std::uint32_t>(k));
                    }
                }
            }
            left = std::any_of(uncolored_.begin(), uncolored_.end(), [](std::uint64_t x) { return x != 0; });
        }
    }

    void expand(std::size_t depth) {
        if (exhausted_) return;
        if (++nodes_ > budget_) {
            exhausted_ = true;
            return;
        }
        color(depth);
        std::uint64_t* cand = pool_.data() + depth * words_;
        std::uint64_t* next = cand + words_;
        const auto& verts = verts_[depth];
        const auto& colors = colors_[depth];
        const bool orbits = !masks_.empty() && atoms_[depth].size() < static_cast<std::size_t>(ground_);
        for (std::size_t idx = verts.size(); idx-- > 0;) {
            if (current_.size() + colors[idx] <= best_.size()) return;
            std::size_t v = verts[idx];
            if (!((cand[v / 64] >> (v % 64)) & 1u)) continue;  // dropped with an earlier orbit
            current_.push_back(v);
            if (!masks_.empty()) split_atoms(depth, masks_[v]);
            bool empty = true;
            for (std::size_t w = 0; w < words_; ++w) {
                next[w] = cand[w] & nb(v)[w];
                empty = empty && !next[w];
            }
            if (empty) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(depth + 1);
            }
            current_.pop_back();
            cand[v / 64] &= ~(std::uint64_t{1} << (v % 64));
            if (orbits) drop_orbit(depth, v, cand);
            if (exhausted_) return;
        }
    }

    void split_atoms(std::size_t depth, Mask chosen) {
        auto& next = atoms_[depth + 1];
        next.clear();
        for (Mask a : atoms_[depth]) {
            if (a & chosen) next.push_back(a & chosen);
            if (a & ~chosen) next.push_back(a & ~chosen);
        }
    }

    // Permutations of the ground set fixing every clique member map the
    // candidate set onto itself; u and v share an orbit iff they meet every
    // atom in the same number of elements.
    void drop_orbit(std::size_t depth, std::size_t v, std::uint64_t* cand) {
        const auto& atoms = atoms_[depth];
        const Mask mv = masks_[v];
        for (std::size_t w = 0; w < words_; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                std::size_t u = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                const Mask mu = masks_[u];
                if (set_size(mu) != set_size(mv)) continue;
                bool same = true;
                for (Mask a : atoms)
                    if (set_size(mu & a) != set_size(mv & a)) {
                        same = false;
                        break;
                    }
                if (same) cand[w] &= ~(std::uint64_t{1} << (u % 64));
            }
        }
    }

    std::uint64_t budget_;
    std::size_t n_, words_;
    int ground_;
    std::vector<Mask> masks_;                // empty: no symmetry use
    std::vector<std::vector<Mask>> atoms_;   // Venn atoms of the clique per depth
    std::vector<std::size_t> order_;
    Words adj_;
    Words pool_;  // candidate set per depth
    std::vector<std::vector<std::uint32_t>> verts_, colors_;
    Words uncolored_, klass_, classes_;
    std::vector<std::size_t> current_, best_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

} // namespace

CliqueResult max_clique(const CompatibilityGraph& graph, std::uint64_t node_budget) {
    return Solver(graph, node_budget, {}, 0).run();
}

CliqueResult max_clique(const CompatibilityGraph& graph, std::span<const Mask> subsets, int ground,
                        std::uint64_t node_budget) {
    return Solver(graph, node_budget, subsets, ground).run();
}

SearchResult max_family(int n, const IntersectionSpec& spec, std::uint64_t node_budget, bool use_symmetry) {
    auto catalog = enumerate_candidates(n, spec);
    auto graph = CompatibilityGraph::build(catalog);
    auto clique = use_symmetry ? max_clique(graph, catalog.candidates, n, node_budget) : max_clique(graph, node_budget);
    std::vector<Mask> members;
    for (auto v : clique.vertices) members.push_back(catalog.candidates[v]);
    return {members.size(), SetFamily(std::max(n, 1), std::move(members)), clique.nodes, clique.proved_optimal,
            clique.budget_exhausted};
}

std::vector<IntersectionSpec> grid_specs(std::uint32_t p, int k_size_max, int l_size_max) {
    std::vector<IntersectionSpec> out;
    if (k_size_max < 1 || l_size_max < 1) return out;
    PrimeModulus mod(p);
    const int universe = static_cast<int>(p);
    if (universe > kMaxGround) throw Error(ErrorCode::TooLarge, "grid prime too large to enumerate residue sets");
    auto residues = [](Mask m) {
        std::vector<int> v;
        for (int e : to_elements(m)) v.push_back(e - 1);
        return v;
    };
    for (Mask k : subsets_by_size(universe, 1, std::min(k_size_max, universe))) {
        int rest = universe - set_size(k);
        if (rest == 0) continue;
        for (Mask l : subsets_by_size(universe, 1, std::min(l_size_max, rest))) {
            if (k & l) continue;
            out.emplace_back(mod, residues(k), residues(l));
        }
    }
    return out;
}

std::vector<SweepRow> sweep(const SweepGrid& grid) {
    std::vector<SweepRow> rows;
    for (int n = grid.n_min; n <= grid.n_max; ++n) {
        for (auto p : grid.primes) {
            for (const auto& spec : grid_specs(p, grid.k_size_max, grid.l_size_max)) {
                SweepRow row{n, spec, std::nullopt, std::nullopt, std::nullopt, false, {}, {}};
                try {
                    auto res = max_family(n, spec, grid.node_budget, grid.use_symmetry);
                    auto report = applicability(n, spec, res.witness.members());
                    for (const auto& e : report.entries)
                        if (e.holds && BigInt(res.optimum) > *e.value) {
                            row.violation = true;
                            row.violated.push_back(e.tag);
                        }
                    if (auto t = report.tightest()) row.slack = *t - BigInt(res.optimum);
                    row.result = std::move(res);
                    row.bounds = std::move(report);
                } catch (const std::exception& e) {
                    row.error = e.what();
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

namespace {

std::string quoted_list(const std::vector<int>& v) {
    std::string s = "\"";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "\"";
}

} // namespace

std::string sweep_csv(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    out << "n,p,K,L,optimum,proved";
    for (auto t : kAllTheorems) out << "," << tag_name(t);
    out << ",violation\n";
    for (const auto& row : rows) {
        out << row.n << "," << row.spec.p() << "," << quoted_list(row.spec.K()) << "," << quoted_list(row.spec.L());
        if (!row.result) {
            out << ",error,false";
            for (std::size_t i = 0; i < kAllTheorems.size(); ++i) out << ",n/a";
            out << ",error\n";
            continue;
        }
        out << "," << row.result->optimum << "," << (row.result->proved_optimal ? "true" : "false");
        for (const auto& e : row.bounds->entries) out << "," << (e.holds ? e.value->str() : std::string("n/a"));
        out << "," << (row.violation ? "true" : "false") << "\n";
    }
    return out.str();
}

} // namespace modp
