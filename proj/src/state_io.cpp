#include "rowmotion/state_io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

#include "rowmotion/errors.hpp"

namespace rowmotion {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Element lookup(const Poset& p, std::string_view id, int line = 0) {
  auto x = p.find(std::string(id));
  if (!x) throw ParseError("unknown element '" + std::string(id) + "'", line);
  return *x;
}

class Collector {
 public:
  explicit Collector(const Poset& p) : p_(p), values_(p.size()) {}

  void set(std::string_view id, std::string_view value, int line = 0) {
    Element x = lookup(p_, id, line);
    if (values_[x]) throw ParseError("element '" + std::string(id) + "' labeled twice", line);
    try {
      values_[x] = parse_rational(value);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line);
    }
  }

  std::vector<Rational> finish() const {
    std::vector<Rational> out;
    for (Element x = 0; x < p_.size(); ++x) {
      if (!values_[x]) throw ParseError("no value for element '" + p_.id(x) + "'");
      out.push_back(*values_[x]);
    }
    return out;
  }

 private:
  const Poset& p_;
  std::vector<std::optional<Rational>> values_;
};

}  // namespace

std::vector<std::string> split_top_level(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == sep && depth == 0)) {
      out.emplace_back(trim(text.substr(start, i - start)));
      start = i + 1;
    } else if (text[i] == '(') {
      ++depth;
    } else if (text[i] == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')' in '" + std::string(text) + "'");
    }
  }
  if (depth != 0) throw ParseError("unbalanced '(' in '" + std::string(text) + "'");
  return out;
}

SubsetState parse_subset(const PosetPtr& p, SubsetKind kind, std::string_view text) {
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '{') {
    if (s.back() != '}') throw ParseError("missing '}' in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<bool> members(p->size(), false);
  for (const auto& id : split_top_level(s)) {
    if (id.empty()) throw ParseError("empty element in '" + std::string(text) + "'");
    Element x = lookup(*p, id);
    if (members[x]) throw ParseError("element '" + id + "' listed twice");
    members[x] = true;
  }
  return SubsetState(p, kind, std::move(members));
}

RationalLabeling parse_labeling(const PosetPtr& p, LabelSpace space, std::string_view text) {
  std::string_view s = trim(text);
  if (s.find('=') != std::string_view::npos) {
    Collector c(*p);
    for (const auto& item : split_top_level(s)) {
      auto eq = item.rfind('=');
      if (eq == std::string::npos) throw ParseError("expected <element>=<value>, got '" + item + "'");
      c.set(trim(std::string_view(item).substr(0, eq)), trim(std::string_view(item).substr(eq + 1)));
    }
    return RationalLabeling(p, space, c.finish());
  }
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("missing ')' in '" + std::string(text) + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::string flat(s);
  for (char& ch : flat) {
    if (ch == '|') ch = ',';
  }
  auto items = split_top_level(flat);
  if (items.size() != p->size()) {
    throw ParseError("expected " + std::to_string(p->size()) + " values, got " + std::to_string(items.size()));
  }
  std::vector<Rational> values;
  for (const auto& item : items) values.push_back(parse_rational(item));
  return RationalLabeling(p, space, std::move(values));
}

RationalLabeling parse_labeling_file(const PosetPtr& p, LabelSpace space, std::string_view text) {
  Collector c(*p);
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError("expected '<element> <value>'", number);
    c.set(tok[0], tok[1], number);
  }
  return RationalLabeling(p, space, c.finish());
}

RationalLabeling load_labeling(const PosetPtr& p, LabelSpace space, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read labeling file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_labeling_file(p, space, buf.str());
}

ToggleWord parse_word(const PosetPtr& p, std::string_view text, ToggleSpace fallback) {
  std::string_view s = trim(text);
  std::vector<std::pair<ToggleSpace, ElementId>> steps;
  if (s == "id") return ToggleWord(p, fallback);
  while (!s.empty()) {
    ToggleSpace space;
    if (s.substr(0, 4) == "tau(") {
      space = ToggleSpace::Antichain;
      s.remove_prefix(4);
    } else if (s.substr(0, 2) == "t(") {
      space = ToggleSpace::Ideal;
      s.remove_prefix(2);
    } else {
      throw ParseError("expected t(<element>) or tau(<element>) in '" + std::string(text) + "'");
    }
    std::size_t close = 0;
    for (int depth = 0; close < s.size() && (s[close] != ')' || depth > 0); ++close) {
      if (s[close] == '(') ++depth;
      if (s[close] == ')') --depth;
    }
    if (close == s.size()) throw ParseError("missing ')' in '" + std::string(text) + "'");
    std::string id(trim(s.substr(0, close)));
    if (!p->find(id)) throw ParseError("unknown element '" + id + "'");
    steps.emplace_back(space, id);
    s = trim(s.substr(close + 1));
  }
  return ToggleWord::from_steps(p, steps, fallback);
}

}  // namespace rowmotion
