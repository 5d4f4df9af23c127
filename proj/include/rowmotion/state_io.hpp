#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rowmotion/combinatorial.hpp"
#include "rowmotion/polytope.hpp"

namespace rowmotion {

/// Splits on commas outside parentheses, trimming each piece, so ids such
/// as `(1,2)` survive. An all-blank input yields no pieces.
std::vector<std::string> split_top_level(std::string_view text, char sep = ',');

/// `{a,e}`, `{}`, or the bare list `a,e`. Throws ParseError, or the
/// validation errors of SubsetState.
SubsetState parse_subset(const PosetPtr& p, SubsetKind kind, std::string_view text);

/// `a=0.1, b=0, ...` naming every element once, or positional values in
/// canonical element order: `(0.1,0,0.3,0.7,0,0.2)`; `|` may separate
/// groups. Throws ParseError or MembershipError.
RationalLabeling parse_labeling(const PosetPtr& p, LabelSpace space, std::string_view text);

/// Lines `<element> <rational>`, `#` comments, every element exactly once.
RationalLabeling parse_labeling_file(const PosetPtr& p, LabelSpace space, std::string_view text);
RationalLabeling load_labeling(const PosetPtr& p, LabelSpace space, const std::string& path);

/// Inverse of ToggleWord::to_string: `t(a) t(b)`, `tau(a) tau(b)`, or `id`.
/// `fallback` is the space of the empty word. Throws ParseError or KindError.
ToggleWord parse_word(const PosetPtr& p, std::string_view text, ToggleSpace fallback = ToggleSpace::Ideal);

}  // namespace rowmotion
