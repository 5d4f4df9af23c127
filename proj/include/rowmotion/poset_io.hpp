#pragma once

#include <string>
#include <string_view>

#include "rowmotion/poset.hpp"

namespace rowmotion {

/// Parses the line-oriented poset format:
///
///   # comment
///   elements a b c d
///   cover a c
///   cover b c
///
/// Exactly one `elements` line, before any `cover` line. Throws ParseError
/// with the offending line number, or the construction errors of
/// Poset::from_covers.
PosetPtr parse_poset(std::string_view text);

/// Inverse of parse_poset: elements in canonical order, covers sorted.
std::string format_poset(const Poset& p);

/// Resolves `builtin:<family>:<args>` or reads a poset file.
///
/// Families: zigzag:N, chainproduct:AxB, rootA:N, chain:N, antichain:N.
PosetPtr load_poset(const std::string& source);

}  // namespace rowmotion
