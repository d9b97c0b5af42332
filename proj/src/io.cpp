#include "modp/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "modp/error.hpp"

namespace modp {

using Json = nlohmann::ordered_json;

namespace {

bool is_scalar_array(const Json& j) {
    return std::all_of(j.begin(), j.end(), [](const Json& e) { return !e.is_structured(); });
}

// Objects one key per line, flat arrays on a single line.
void emit(const Json& j, std::ostringstream& out, int indent) {
    const std::string pad(indent, ' '), inner(indent + 2, ' ');
    if (j.is_object()) {
        if (j.empty()) { out << "{}"; return; }
        out << "{\n";
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out << ",\n";
            first = false;
            out << inner << Json(it.key()).dump() << ": ";
            emit(it.value(), out, indent + 2);
        }
        out << "\n" << pad << "}";
    } else if (j.is_array()) {
        if (j.empty() || is_scalar_array(j)) {
            out << "[";
            for (std::size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
            out << "]";
            return;
        }
        bool flat_rows = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_array() && is_scalar_array(e); });
        if (flat_rows) {
            out << "[";
            for (std::size_t i = 0; i < j.size(); ++i) {
                out << (i ? ", " : "");
                emit(j[i], out, indent + 2);
            }
            out << "]";
            return;
        }
        out << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            out << inner;
            emit(j[i], out, indent + 2);
            out << (i + 1 < j.size() ? ",\n" : "\n");
        }
        out << pad << "]";
    } else {
        out << j.dump();
    }
}

std::string render(const Json& j) {
    std::ostringstream out;
    emit(j, out, 0);
    out << "\n";
    return out.str();
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
    const Json& v = j.at(key);
    bool negative = false;
    if constexpr (std::is_unsigned_v<T>) negative = v.is_number_integer() && !v.is_number_unsigned();
    if constexpr (std::is_same_v<T, std::vector<std::size_t>>)
        if (v.is_array())
            for (const auto& x : v) negative = negative || (x.is_number_integer() && !x.is_number_unsigned());
    if (negative) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be non-negative");
    try {
        return v.get<T>();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
    }
}

BigInt big(const Json& j, const char* key) {
    auto text = field<std::string>(j, key);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        if (!(text.size() > 1 && text[0] == '-' &&
              std::all_of(text.begin() + 1, text.end(), [](char c) { return c >= '0' && c <= '9'; })))
            throw Error(ErrorCode::ParseError, std::string("field '") + key + "' is not a decimal integer");
    return BigInt(text);
}

Json spec_json(int n, const IntersectionSpec& spec) {
    Json j;
    j["n"] = n;
    j["p"] = spec.p();
    j["K"] = spec.K();
    j["L"] = spec.L();
    return j;
}

IntersectionSpec spec_from(const Json& j) {
    auto p = field<std::int64_t>(j, "p");
    if (p < 2 || p >= (std::int64_t{1} << 31)) throw Error(ErrorCode::ParseError, "p out of range");
    return IntersectionSpec(PrimeModulus(static_cast<std::uint32_t>(p)), field<std::vector<int>>(j, "K"),
                            field<std::vector<int>>(j, "L"));
}

} // namespace

std::string write_family(const FamilyDocument& doc) {
    Json j = spec_json(doc.family.n(), doc.spec);
    std::vector<Mask> sets(doc.family.members().begin(), doc.family.members().end());
    std::sort(sets.begin(), sets.end(), CanonicalLess{});
    Json list = Json::array();
    for (Mask m : sets) list.push_back(to_elements(m));
    j["sets"] = list;
    return render(j);
}

FamilyDocument parse_family(std::string_view text) {
    Json j = parse_json(text);
    auto n = field<int>(j, "n");
    if (n < 1 || n > kMaxGround) throw Error(ErrorCode::ParseError, "n must lie in [1,64]");
    IntersectionSpec spec = spec_from(j);
    auto raw = field<std::vector<std::vector<int>>>(j, "sets");
    std::vector<Mask> members;
    for (const auto& set : raw) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (set[i] < 1 || set[i] > n) throw Error(ErrorCode::ParseError, "set element outside [1,n]");
            if (i > 0 && set[i] <= set[i - 1]) throw Error(ErrorCode::ParseError, "set elements must be strictly increasing");
        }
        members.push_back(to_mask(set));
    }
    return {spec, SetFamily(n, std::move(members))};
}

std::string write_certificate(const Certificate& cert) {
    Json j;
    j["kind"] = std::string(kind_name(cert.kind));
    j["spec"] = spec_json(cert.n, cert.spec);
    j["members"] = cert.members;
    j["case"] = std::string(case_name(cert.case_tag));
    if (cert.kind != CertKind::Case4Counting) {
        j["polynomials"] = cert.labels;
        j["matrix"] = Json{{"rows", cert.rows}, {"cols", cert.cols}};
        j["rank"] = cert.rank;
        j["pivots"] = cert.pivots;
    } else {
        j["sizes"] = cert.sizes;
        Json bins = Json::array();
        for (const auto& b : cert.size_binomials) bins.push_back(b.str());
        j["size_binomials"] = bins;
        j["c"] = cert.wrapped;
        j["delta"] = cert.delta;
        j["a"] = cert.offsets;
    }
    if (!cert.steps.empty() || cert.kind != CertKind::Independence) {
        Json steps = Json::array();
        for (const auto& st : cert.steps)
            steps.push_back(Json{{"description", st.description}, {"relation", st.relation},
                                 {"lhs", st.lhs.str()}, {"rhs", st.rhs.str()}, {"holds", st.holds}});
        j["steps"] = steps;
    }
    j["derived_bound"] = cert.derived_bound.str();
    return render(j);
}

Certificate parse_certificate(std::string_view text) {
    Json j = parse_json(text);
    CertKind kind = parse_kind(field<std::string>(j, "kind"));
    Json spec_node = field<Json>(j, "spec");
    Certificate cert{kind, field<int>(spec_node, "n"), spec_from(spec_node)};
    cert.members = field<std::size_t>(j, "members");
    auto tag = field<std::string>(j, "case");
    bool known = false;
    for (auto t : {CaseTag::None, CaseTag::Case1, CaseTag::Case2, CaseTag::Case3, CaseTag::Case4})
        if (case_name(t) == tag) {
            cert.case_tag = t;
            known = true;
        }
    if (!known) throw Error(ErrorCode::ParseError, "unknown case '" + tag + "'");
    if (kind != CertKind::Case4Counting) {
        cert.labels = field<std::vector<std::string>>(j, "polynomials");
        Json dims = field<Json>(j, "matrix");
        cert.rows = field<std::size_t>(dims, "rows");
        cert.cols = field<std::size_t>(dims, "cols");
        cert.rank = field<std::size_t>(j, "rank");
        cert.pivots = field<std::vector<std::size_t>>(j, "pivots");
    } else {
        cert.sizes = field<std::vector<int>>(j, "sizes");
        for (const auto& b : field<std::vector<std::string>>(j, "size_binomials")) cert.size_binomials.emplace_back(b);
        cert.wrapped = field<int>(j, "c");
        cert.delta = field<int>(j, "delta");
        cert.offsets = field<std::vector<int>>(j, "a");
    }
    if (j.contains("steps")) {
        for (const auto& st : field<Json>(j, "steps"))
            cert.steps.push_back({field<std::string>(st, "description"), field<std::string>(st, "relation"),
                                  big(st, "lhs"), big(st, "rhs"), field<bool>(st, "holds")});
    }
    cert.derived_bound = big(j, "derived_bound");
    return cert;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
    out << text;
}

} // namespace modp
