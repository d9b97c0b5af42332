#include "modp/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "modp/cert.hpp"
#include "modp/error.hpp"
#include "modp/io.hpp"
#include "modp/poly.hpp"
#include "modp/search.hpp"

namespace modp {

namespace {

int parse_int(const std::string& text) {
    int value = 0;
    auto begin = text.data(), end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw Error(ErrorCode::ParseError, "'" + text + "' is not an integer");
    return value;
}

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

IntersectionSpec make_spec(int p, const std::string& k, const std::string& l) {
    if (p < 2) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    return IntersectionSpec(PrimeModulus(static_cast<std::uint32_t>(p)), parse_int_list(k), parse_int_list(l));
}

int usage_error(std::ostream& err, const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
}

// ---- bounds ---------------------------------------------------------------

int cmd_bounds(int n, int p, const std::string& k, const std::string& l, const std::string& format,
               std::ostream& out, std::ostream& err) {
    BoundReport report = [&] {
        auto spec = make_spec(p, k, l);
        return applicability(n, spec);
    }();
    if (format == "json") {
        nlohmann::ordered_json j;
        j["n"] = n;
        j["p"] = report.spec.p();
        j["K"] = report.spec.K();
        j["L"] = report.spec.L();
        nlohmann::ordered_json b = nlohmann::ordered_json::object();
        for (const auto& e : report.entries) {
            std::string name(tag_name(e.tag));
            if (e.holds)
                b[name] = e.value->str();
            else
                b[name] = nullptr;
        }
        j["bounds"] = b;
        out << j.dump(2) << "\n";
        return kExitOk;
    }
    if (format != "text") {
        err << "error: unknown format '" << format << "'\n";
        return kExitUsage;
    }
    std::ostringstream text;
    text << describe(n, report.spec) << "\n";
    for (const auto& e : report.entries) {
        text << std::left << std::setw(10) << tag_name(e.tag);
        if (e.holds)
            text << e.value->str();
        else if (e.family_dependent)
            text << "n/a (depends on the family)";
        else
            text << "n/a (hypothesis unmet, formula " << bound_value(e.tag, n, report.spec).str() << ")";
        text << "\n";
    }
    if (auto t = report.tightest()) text << "tightest  " << t->str() << "\n";
    out << text.str();
    return kExitOk;
}

// ---- verify ---------------------------------------------------------------

struct CheckLine {
    std::string name;
    std::string status;  // pass, FAIL, inapplicable
    std::vector<std::string> details;
};

int cmd_verify(const std::string& path, const std::string& checks, std::ostream& out, std::ostream& err) {
    FamilyDocument doc = [&] {
        try {
            return parse_family(read_text_file(path));
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, e.what());
        }
    }();
    std::vector<std::string> wanted;
    {
        std::stringstream ss(checks);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) wanted.push_back(item);
    }
    const std::vector<std::string> known = {"conditions", "kernel", "cri", "count", "recurbound"};
    for (const auto& w : wanted)
        if (std::find(known.begin(), known.end(), w) == known.end()) {
            err << "error: unknown check '" << w << "'\n";
            return kExitUsage;
        }
    const auto& fam = doc.family;
    const auto& spec = doc.spec;
    const int n = fam.n(), r = spec.r(), s = spec.s();
    const ValidationReport valid = validate(fam, spec);
    std::vector<CheckLine> lines;
    auto needs_valid = [&](CheckLine& line) {
        if (valid.ok()) return true;
        line.status = "FAIL";
        line.details.push_back("family violates the size/intersection conditions");
        return false;
    };

    for (const auto& w : wanted) {
        CheckLine line{w, "pass", {}};
        try {
            if (w == "conditions") {
                for (const auto& v : valid.sizes)
                    line.details.push_back("size: " + format_set(fam.member(v.index)) + " has size residue " +
                                           std::to_string(v.residue) + " not in K");
                for (const auto& v : valid.intersections)
                    line.details.push_back("intersection: " + format_set(fam.member(v.first)) + " & " +
                                           format_set(fam.member(v.second)) + " has residue " +
                                           std::to_string(v.residue) + " not in L");
                if (!valid.ok()) line.status = "FAIL";
            } else if (w == "kernel") {
                if (needs_valid(line)) {
                    auto kc = check_trivial_kernel(fam, spec);
                    if (!kc.trivial) {
                        line.status = "FAIL";
                        std::string v;
                        for (std::size_t i = 0; i < kc.witness.size(); ++i)
                            v += (i ? "," : "") + std::to_string(kc.witness[i]);
                        line.details.push_back("nonzero kernel vector (" + v + ")");
                    } else {
                        line.details.push_back("rank " + std::to_string(dimension_upper_bound(fam, spec)) +
                                               " >= m = " + std::to_string(fam.size()));
                    }
                }
            } else if (w == "cri") {
                if (spec.p() <= static_cast<std::uint32_t>(2 * r)) {
                    line.status = "inapplicable";
                    line.details.push_back("p <= 2r");
                } else if (needs_valid(line)) {
                    int levels = 0;
                    for (int i = 0; i <= s - 2 * r + 1 && i + 2 * r <= n - 1; ++i) {
                        auto c = check_cri_identity(fam, spec, i);
                        ++levels;
                        if (!c.holds) {
                            line.status = "FAIL";
                            line.details.push_back("level " + std::to_string(i) + " form " +
                                                   std::to_string(c.first_failure));
                        }
                    }
                    if (levels == 0) {
                        line.status = "inapplicable";
                        line.details.push_back("no level with i + 2r <= n-1");
                    }
                }
            } else if (w == "count") {
                int instances = 0;
                for (int v = 2; static_cast<std::uint32_t>(v) < spec.p(); ++v)
                    for (int u = 1; u < v && u + v <= n - 1; ++u) {
                        auto c = check_count_lemma(fam, spec.modulus(), u, v);
                        ++instances;
                        if (!c.holds) {
                            line.status = "FAIL";
                            line.details.push_back("u=" + std::to_string(u) + " v=" + std::to_string(v) + ": " +
                                                   std::to_string(c.dimension) + " > " + c.bound.str());
                        }
                    }
                if (instances == 0) {
                    line.status = "inapplicable";
                    line.details.push_back("no 0 < u < v < p with u + v <= n-1");
                }
            } else if (w == "recurbound") {
                if (n < 2 * s - 2 * r + 1) {
                    line.status = "inapplicable";
                    line.details.push_back("needs n >= 2s-2r+1");
                } else if (needs_valid(line)) {
                    for (int i = 0; i <= s - 2 * r + 1; ++i) {
                        auto c = check_recurbound(fam, spec, i);
                        if (!c.holds) {
                            line.status = "FAIL";
                            line.details.push_back("level " + std::to_string(i) + ": " + c.lhs.str() + " > " +
                                                   c.rhs.str());
                        }
                    }
                    auto chain = check_dimension_chain(fam, spec);
                    if (!chain.holds) {
                        line.status = "FAIL";
                        line.details.push_back("dimension chain " + std::to_string(chain.rank) + " / " +
                                               chain.bound.str());
                    }
                }
            }
        } catch (const Error& e) {
            if (e.code() == ErrorCode::Inapplicable) {
                line.status = "inapplicable";
                line.details.push_back(e.what());
            } else {
                line.status = "FAIL";
                line.details.push_back(e.what());
            }
        }
        lines.push_back(std::move(line));
    }

    std::ostringstream text;
    text << describe(n, spec) << " m=" << fam.size() << "\n";
    bool ok = true;
    for (const auto& line : lines) {
        text << line.name << ": " << line.status << "\n";
        for (const auto& d : line.details) text << "  " << d << "\n";
        ok = ok && line.status != "FAIL";
    }
    out << text.str();
    return ok ? kExitOk : kExitFailure;
}

// ---- certify / check-cert -------------------------------------------------

FamilyDocument load_family(const std::string& path) {
    try {
        return parse_family(read_text_file(path));
    } catch (const Error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

int cmd_certify(const std::string& path, const std::string& out_path, std::ostream& out, std::ostream& err) {
    FamilyDocument doc = load_family(path);
    Certificate cert = [&]() -> Certificate {
        return certify(doc.family, doc.spec);
    }();
    std::string text = write_certificate(cert);
    std::ostringstream report;
    report << "certificate " << kind_name(cert.kind) << " (" << case_name(cert.case_tag) << ")\n";
    if (cert.kind != CertKind::Case4Counting)
        report << "matrix " << cert.rows << " x " << cert.cols << ", rank " << cert.rank << "\n";
    else
        report << cert.steps.size() << " counting steps checked\n";
    report << "derived bound " << cert.derived_bound.str() << "\n";
    const bool fits = BigInt(doc.family.size()) <= cert.derived_bound;
    report << "m = " << doc.family.size() << (fits ? " <= " : " > ") << cert.derived_bound.str() << "\n";
    if (!out_path.empty()) {
        write_text_file(out_path, text);
        out << report.str();
    } else {
        out << text;
        err << report.str();
    }
    return fits ? kExitOk : kExitFailure;
}

int cmd_check_cert(const std::string& cert_path, const std::string& family_path, std::ostream& out) {
    Certificate cert = [&] {
        try {
            return parse_certificate(read_text_file(cert_path));
        } catch (const Error& e) {
            throw Error(ErrorCode::ParseError, cert_path + ": " + e.what());
        }
    }();
    FamilyDocument doc = load_family(family_path);
    auto check = check_certificate(cert, doc.family, doc.spec);
    if (check.ok) {
        out << "certificate ok: " << kind_name(cert.kind) << ", derived bound " << cert.derived_bound.str() << "\n";
        return kExitOk;
    }
    out << "certificate mismatch: " << check.divergence << "\n";
    return kExitFailure;
}

// ---- search / sweep -------------------------------------------------------

int cmd_search(int n, int p, const std::string& k, const std::string& l, std::uint64_t budget, bool symmetry,
               const std::string& out_path, std::ostream& out) {
    auto spec = make_spec(p, k, l);
    auto res = max_family(n, spec, budget, symmetry);
    auto report = applicability(n, spec, res.witness.members());
    std::ostringstream text;
    text << describe(n, spec) << "\n";
    text << "optimum " << res.optimum << (res.proved_optimal ? "" : " (lower bound)") << "\n";
    text << "proved_optimal " << (res.proved_optimal ? "true" : "false") << "\n";
    text << "nodes " << res.nodes << "\n";
    text << "witness";
    for (Mask m : res.witness.members()) text << " " << format_set(m);
    text << "\n";
    bool violation = false;
    for (const auto& e : report.entries) {
        if (!e.holds) continue;
        bool bad = BigInt(res.optimum) > *e.value;
        violation = violation || bad;
        text << "  " << std::left << std::setw(10) << tag_name(e.tag) << e.value->str() << (bad ? "  VIOLATED" : "")
             << "\n";
    }
    text << "violation " << (violation ? "true" : "false") << "\n";
    if (!out_path.empty()) write_text_file(out_path, write_family({spec, res.witness}));
    out << text.str();
    if (violation) return kExitFailure;
    return res.budget_exhausted ? kExitBudget : kExitOk;
}

int cmd_sweep(const std::string& n_range, const std::string& primes, int kmax, int lmax, std::uint64_t budget,
              bool symmetry, const std::string& out_path, std::ostream& out, std::ostream& err) {
    SweepGrid grid;
    std::tie(grid.n_min, grid.n_max) = parse_range(n_range);
    for (int p : parse_int_list(primes)) {
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        grid.primes.push_back(static_cast<std::uint32_t>(p));
    }
    if (grid.n_min < 1 || grid.n_max > kMaxCatalogGround)
        throw Error(ErrorCode::TooLarge, "sweep needs 1 <= n <= 24");
    grid.k_size_max = kmax;
    grid.l_size_max = lmax;
    grid.node_budget = budget;
    grid.use_symmetry = symmetry;
    auto rows = sweep(grid);
    std::size_t violations = 0, exhausted = 0, errors = 0;
    std::ostringstream notes;
    for (const auto& row : rows) {
        if (!row.error.empty()) {
            ++errors;
            notes << "error " << describe(row.n, row.spec) << ": " << row.error << "\n";
            continue;
        }
        if (row.violation) {
            ++violations;
            notes << "violation " << describe(row.n, row.spec) << ":";
            for (auto t : row.violated) notes << " " << tag_name(t);
            notes << "\n";
        }
        if (row.result->budget_exhausted) ++exhausted;
    }
    const std::string csv = sweep_csv(rows);
    if (!out_path.empty())
        write_text_file(out_path, csv);
    else
        out << csv;
    err << notes.str() << rows.size() << " instances, " << violations << " violations, " << exhausted
        << " over budget, " << errors << " errors\n";
    if (violations || errors) return kExitFailure;
    return exhausted ? kExitBudget : kExitOk;
}

// ---- lemmas ---------------------------------------------------------------

int cmd_lemmas(const std::string& primes, const std::string& n_range, int kmax, int lmax, int gap_range,
               int pascal_max, int hk_max, std::uint64_t budget, bool inject, std::ostream& out) {
    std::vector<std::uint32_t> ps;
    for (int p : parse_int_list(primes)) {
        if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
            throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
        ps.push_back(static_cast<std::uint32_t>(p));
    }
    auto [n_lo, n_hi] = parse_range(n_range);
    if (n_lo < 2 || n_hi > 12) throw Error(ErrorCode::TooLarge, "lemma family range needs 2 <= n <= 12");
    if (gap_range > 20) throw Error(ErrorCode::TooLarge, "gap range needs N <= 20");
    if (pascal_max > 400 || hk_max > 400) throw Error(ErrorCode::TooLarge, "arithmetic ranges need n <= 400");

    std::map<std::string, LemmaTally> tallies;
    arithmetic_lemmas(pascal_max, hk_max, tallies["arithmetic"]);
    gap_lemmas(ps, gap_range, tallies["gap"]);
    auto& fam = tallies["family"];
    for (int n = n_lo; n <= n_hi; ++n)
        for (auto p : ps)
            for (const auto& spec : grid_specs(p, kmax, lmax)) {
                auto res = max_family(n, spec, budget);
                if (res.witness.empty()) continue;
                family_lemmas(res.witness, spec, fam);
            }
    if (inject) {
        // reporter self-test: the pair inequality with its direction reversed
        auto& self = tallies["inverted"];
        for (int n = 2; n <= 12; ++n)
            for (int k = 1; 2 * k <= n; ++k)
                for (int c = 0; c < k; ++c)
                    self.record(binom(n, k - 1 - c) + binom(n, c) > binom(n, k), "inverted pair inequality",
                                "n=" + std::to_string(n) + " k=" + std::to_string(k) + " c=" + std::to_string(c));
    }
    std::ostringstream text;
    bool ok = true;
    for (const auto& [name, t] : tallies) {
        text << name << ": " << t.checked << " checked, " << t.inapplicable << " inapplicable, " << t.failures.size()
             << " counterexamples\n";
        for (const auto& f : t.failures) text << "  " << f.lemma << " at " << f.parameters << "\n";
        ok = ok && t.failures.empty();
    }
    out << text.str();
    return ok ? kExitOk : kExitFailure;
}

int exit_for(const Error& e) {
    switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidSpec:
    case ErrorCode::NotPrime:
    case ErrorCode::UnknownTag:
    case ErrorCode::TooLarge:
        return kExitUsage;
    default:
        return kExitFailure;
    }
}

} // namespace

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_int(item));
    if (out.empty()) throw Error(ErrorCode::ParseError, "empty list");
    return out;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = parse_int(text);
        return {v, v};
    }
    int lo = parse_int(text.substr(0, dots)), hi = parse_int(text.substr(dots + 2));
    if (lo > hi) throw Error(ErrorCode::ParseError, "range '" + text + "' is empty");
    return {lo, hi};
}

std::uint64_t node_budget_from_env() {
    const char* raw = std::getenv("MODP_NODE_BUDGET");
    if (!raw) return kDefaultNodeBudget;
    std::string text(raw);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty() || value == 0)
        throw Error(ErrorCode::ParseError, "MODP_NODE_BUDGET must be a positive integer, got '" + text + "'");
    return value;
}

void LemmaTally::record(bool ok, const std::string& lemma, const std::string& parameters) {
    ++checked;
    if (!ok) failures.push_back({lemma, parameters});
}

std::string describe(int n, const IntersectionSpec& spec) {
    return "n=" + std::to_string(n) + " p=" + std::to_string(spec.p()) + " K={" + join(spec.K()) + "} L={" +
           join(spec.L()) + "}";
}

void family_lemmas(const SetFamily& family, const IntersectionSpec& spec, LemmaTally& tally) {
    const int n = family.n(), r = spec.r(), s = spec.s();
    const std::string where = describe(n, spec) + " m=" + std::to_string(family.size());
    if (spec.p() > static_cast<std::uint32_t>(2 * r)) {
        for (int i = 0; i <= s - 2 * r + 1; ++i) {
            if (i + 2 * r > n - 1) {
                ++tally.inapplicable;
                continue;
            }
            tally.record(check_cri_identity(family, spec, i).holds, "inclusion identity",
                         where + " level=" + std::to_string(i));
        }
    } else {
        ++tally.inapplicable;
    }
    for (int v = 2; static_cast<std::uint32_t>(v) < spec.p(); ++v)
        for (int u = 1; u < v && u + v <= n - 1; ++u)
            tally.record(check_count_lemma(family, spec.modulus(), u, v).holds, "quotient count",
                         where + " u=" + std::to_string(u) + " v=" + std::to_string(v));
    if (n >= 2 * s - 2 * r + 1) {
        for (int i = 0; i <= s - 2 * r + 1; ++i)
            tally.record(check_recurbound(family, spec, i).holds, "recursive bound",
                         where + " level=" + std::to_string(i));
        tally.record(check_dimension_chain(family, spec).holds, "dimension chain", where);
    } else {
        ++tally.inapplicable;
    }
}

void gap_lemmas(const std::vector<std::uint32_t>& primes, int max_range, LemmaTally& tally) {
    for (auto p : primes) {
        if (p > 20) continue;  // H ranges over all subsets of [0, p-1]
        PrimeModulus mod(p);
        for (Mask hm = 0; hm < (Mask{1} << p); ++hm) {
            std::vector<int> h;
            for (int e : to_elements(hm)) h.push_back(e - 1);
            for (int range = 1; range <= max_range; ++range)
                for (int g = 1; g <= range + 1; ++g) {
                    auto c = check_gap_lemma(h, range, g, mod);
                    if (!c.hypothesis) {
                        ++tally.inapplicable;
                        continue;
                    }
                    tally.record(c.independent, "gap independence",
                                 "p=" + std::to_string(p) + " H={" + join(h) + "} N=" + std::to_string(range) +
                                     " g=" + std::to_string(g));
                }
        }
    }
}

void arithmetic_lemmas(int pascal_max, int hk_max, LemmaTally& tally) {
    for (int n = 1; n <= pascal_max; ++n)
        for (int s = 0; s <= n; ++s)
            for (int r = 1; r <= (s + 1) / 2; ++r)
                tally.record(pascal_equivalence_check(n, s, r), "binomial identity",
                             "n=" + std::to_string(n) + " s=" + std::to_string(s) + " r=" + std::to_string(r));
    for (int n = 2; n <= hk_max; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int c = 0; c < k; ++c)
                tally.record(hk_inequality_check(n, k, c), "pair inequality",
                             "n=" + std::to_string(n) + " k=" + std::to_string(k) + " c=" + std::to_string(c));
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact bounds, certificates and extremal search for mod-p restricted intersections", "modp"};
    app.require_subcommand(1);

    int n = 0, p = 0, kmax = 1, lmax = 1, gap_range = 6, pascal_max = 30, hk_max = 60;
    std::string k, l, format = "text", file, cert_file, out_path, checks = "conditions,kernel,cri,count,recurbound";
    std::string n_range, primes = "2,3,5", lemma_n = "3..6";
    std::uint64_t budget = 0;
    bool inject = false, plain = false;

    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--n", n, "ground set size")->required();
        sub->add_option("--p", p, "prime modulus")->required();
        sub->add_option("--K", k, "size residues, comma separated")->required();
        sub->add_option("--L", l, "intersection residues, comma separated")->required();
    };

    auto* bounds = app.add_subcommand("bounds", "tabulate every theorem bound");
    add_spec(bounds);
    bounds->add_option("--format", format, "text or json");

    auto* verify = app.add_subcommand("verify", "run family checks");
    verify->add_option("family", file, "family file")->required();
    verify->add_option("--checks", checks, "subset of conditions,kernel,cri,count,recurbound");

    auto* cert = app.add_subcommand("certify", "build a certificate for a family");
    cert->add_option("family", file, "family file")->required();
    cert->add_option("--out", out_path, "certificate output path (stdout if omitted)");

    auto* check = app.add_subcommand("check-cert", "re-verify a certificate against a family");
    check->add_option("certificate", cert_file, "certificate file")->required();
    check->add_option("family", file, "family file")->required();

    auto* search = app.add_subcommand("search", "find a maximum family");
    add_spec(search);
    search->add_option("--budget", budget, "node budget");
    search->add_option("--out", out_path, "write the witness as a family file");
    search->add_flag("--no-symmetry", plain, "plain colouring search without orbit pruning");

    auto* sweep_cmd = app.add_subcommand("sweep", "search and bound a grid of instances");
    sweep_cmd->add_option("--n", n_range, "n or a..b")->required();
    sweep_cmd->add_option("--p", primes, "primes, comma separated")->required();
    sweep_cmd->add_option("--kmax", kmax, "max |K|");
    sweep_cmd->add_option("--lmax", lmax, "max |L|");
    sweep_cmd->add_option("--budget", budget, "node budget per instance");
    sweep_cmd->add_option("--out", out_path, "CSV output path (stdout if omitted)");
    sweep_cmd->add_flag("--no-symmetry", plain, "plain colouring search without orbit pruning");

    auto* lemmas = app.add_subcommand("lemmas", "exhaustive lemma instance sweep");
    lemmas->add_option("--p", primes, "primes, comma separated");
    lemmas->add_option("--n", lemma_n, "family ground sizes a..b");
    lemmas->add_option("--kmax", kmax, "max |K|");
    lemmas->add_option("--lmax", lmax, "max |L|");
    lemmas->add_option("--gap-range", gap_range, "largest N for the gap lemma");
    lemmas->add_option("--pascal-n", pascal_max, "largest n for the binomial identity");
    lemmas->add_option("--hk-n", hk_max, "largest n for the pair inequality");
    lemmas->add_option("--budget", budget, "node budget per search");
    lemmas->add_flag("--inject-failure", inject, "add a reversed inequality (reporter self-test)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (budget == 0) budget = node_budget_from_env();
        if (bounds->parsed()) return cmd_bounds(n, p, k, l, format, out, err);
        if (verify->parsed()) return cmd_verify(file, checks, out, err);
        if (cert->parsed()) return cmd_certify(file, out_path, out, err);
        if (check->parsed()) return cmd_check_cert(cert_file, file, out);
        if (search->parsed()) return cmd_search(n, p, k, l, budget, !plain, out_path, out);
        if (sweep_cmd->parsed()) return cmd_sweep(n_range, primes, kmax, lmax, budget, !plain, out_path, out, err);
        if (lemmas->parsed())
            return cmd_lemmas(primes, lemma_n, kmax, lmax, gap_range, pascal_max, hk_max, budget, inject, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_for(e);
    } catch (const std::exception& e) {
        return usage_error(err, e);
    }
    return kExitUsage;
}

} // namespace modp
