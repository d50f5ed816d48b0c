#pragma once

#include <string>
#include <string_view>

#include "triaut/endomorphism.hpp"

namespace triaut {

/// Reads {"algebra": "poly"|"free", "n": int, "images": [string, ...]}.
/// Throws InvalidDocument on schema violations (including image count != n)
/// and ParseError for malformed JSON or image text.
Endomorphism parse_automorphism_document(std::string_view json);

/// Compact single-line document; parse_automorphism_document reads it back.
std::string to_document(const Endomorphism& phi);

std::optional<AlgebraMode> parse_algebra_mode(std::string_view name);

}  // namespace triaut
