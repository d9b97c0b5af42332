#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "modp/cert.hpp"
#include "modp/family.hpp"

namespace modp {

struct FamilyDocument {
    IntersectionSpec spec;
    SetFamily family;
};

/// Canonical family document: keys n, p, K, L, sets in that order; each set
/// strictly increasing, sets in canonical (size, lex) order, no duplicates.
std::string write_family(const FamilyDocument& doc);

/// Throws Error(ParseError) on malformed input; the spec and family
/// constructors may add InvalidSpec / InvalidFamily.
FamilyDocument parse_family(std::string_view text);

/// Canonical certificate document. Big integers are written as decimal strings.
std::string write_certificate(const Certificate& cert);
Certificate parse_certificate(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace modp
