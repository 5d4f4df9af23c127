#include "rowmotion/poset_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "rowmotion/families.hpp"

namespace rowmotion {

namespace {

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_size(std::string_view s, const std::string& source) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || v < 1) {
    throw ParseError("bad size '" + std::string(s) + "' in '" + source + "'");
  }
  return v;
}

}  // namespace

PosetPtr parse_poset(std::string_view text) {
  std::vector<ElementId> elements;
  std::vector<std::pair<ElementId, ElementId>> covers;
  bool have_elements = false;
  int lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks[0] == "elements") {
      if (have_elements) throw ParseError("second 'elements' line", lineno);
      if (!covers.empty()) throw ParseError("'elements' must precede 'cover' lines", lineno);
      have_elements = true;
      elements.assign(toks.begin() + 1, toks.end());
    } else if (toks[0] == "cover") {
      if (!have_elements) throw ParseError("'cover' before 'elements'", lineno);
      if (toks.size() != 3) throw ParseError("expected 'cover <x> <y>'", lineno);
      covers.emplace_back(toks[1], toks[2]);
    } else {
      throw ParseError("unknown directive '" + toks[0] + "'", lineno);
    }
  }
  if (!have_elements) throw ParseError("missing 'elements' line");
  return Poset::from_covers(std::move(elements), covers);
}

std::string format_poset(const Poset& p) {
  std::string out = "elements";
  for (const auto& id : p.ids()) out += " " + id;
  out += "\n";
  for (const auto& [x, y] : p.cover_pairs()) out += "cover " + p.id(x) + " " + p.id(y) + "\n";
  return out;
}

PosetPtr load_poset(const std::string& source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    std::string rest = source.substr(prefix.size());
    auto colon = rest.find(':');
    if (colon == std::string::npos) throw ParseError("builtin needs arguments: '" + source + "'");
    std::string family = rest.substr(0, colon);
    std::string args = rest.substr(colon + 1);
    if (family == "zigzag") return zigzag(parse_size(args, source));
    if (family == "rootA") return root_poset_A(parse_size(args, source));
    if (family == "chain") return chain(parse_size(args, source));
    if (family == "antichain") return antichain(parse_size(args, source));
    if (family == "chainproduct") {
      auto x = args.find('x');
      if (x == std::string::npos) throw ParseError("expected AxB in '" + source + "'");
      return chain_product(parse_size(std::string_view(args).substr(0, x), source),
                           parse_size(std::string_view(args).substr(x + 1), source));
    }
    throw ParseError("unknown builtin family '" + family + "'");
  }
  std::ifstream in(source);
  if (!in) throw ParseError("cannot read poset file '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_poset(buf.str());
}

}  // namespace rowmotion
