#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "modp/bounds.hpp"
#include "modp/family.hpp"

namespace modp {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitBudget = 3 };

/// Entry point: args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0,2,3" -> {0,2,3}. Throws Error(ParseError).
std::vector<int> parse_int_list(const std::string& text);
/// "4..7" -> {4,7}, "5" -> {5,5}. Throws Error(ParseError).
std::pair<int, int> parse_range(const std::string& text);

/// Budget from MODP_NODE_BUDGET, else the default. Throws Error(ParseError)
/// when the variable is set but not a positive integer.
std::uint64_t node_budget_from_env();

struct LemmaFailure {
    std::string lemma;
    std::string parameters;
};

struct LemmaTally {
    std::size_t checked = 0;
    std::size_t inapplicable = 0;
    std::vector<LemmaFailure> failures;

    void record(bool ok, const std::string& lemma, const std::string& parameters);
};

/// Every applicable family-level lemma instance: the identity at each level
/// (p > 2r), the quotient count for 0 < u < v < p, and the recursive bound
/// plus dimension chain at each level when n >= 2s-2r+1.
void family_lemmas(const SetFamily& family, const IntersectionSpec& spec, LemmaTally& tally);

/// Independence of the p_I for every H within [0,p-1], 1 <= N <= max_range and
/// every g whose gap hypothesis holds.
void gap_lemmas(const std::vector<std::uint32_t>& primes, int max_range, LemmaTally& tally);

/// The binomial identity for n <= pascal_max and the pair inequality for n <= hk_max.
void arithmetic_lemmas(int pascal_max, int hk_max, LemmaTally& tally);

/// "p=3 n=5 K={1} L={0,2}"
std::string describe(int n, const IntersectionSpec& spec);

} // namespace modp
