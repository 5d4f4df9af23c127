#include "rowmotion/orbit.hpp"

#include <cctype>

#include "rowmotion/state_io.hpp"

namespace rowmotion {

std::size_t fingerprint(const SubsetState& s) { return std::hash<SubsetState>()(s); }

std::size_t fingerprint(const RationalLabeling& f) {
  std::string buf;
  for (const auto& q : f.values()) {
    buf += to_string(q);
    buf += ';';
  }
  return std::hash<std::string>()(buf) ^ static_cast<std::size_t>(f.space());
}

bool same_space(const SubsetState& a, const SubsetState& b) {
  return a.kind() == b.kind() && same_poset(a.poset(), b.poset());
}

bool same_space(const RationalLabeling& a, const RationalLabeling& b) {
  return a.space() == b.space() && same_poset(a.poset(), b.poset());
}

Statistic::Statistic(std::string name, std::vector<StatTerm> terms, std::optional<Rational> claim)
    : name_(std::move(name)), terms_(std::move(terms)), claim_(std::move(claim)) {}

Statistic Statistic::element(const Poset& p, Element x) {
  if (x >= p.size()) throw UnknownElementError("element index out of range");
  return Statistic("h(" + p.id(x) + ")", {StatTerm{StatTerm::Kind::Element, 1, x}});
}

Statistic Statistic::cardinality() { return Statistic("card", {StatTerm{StatTerm::Kind::Cardinality, 1, 0}}); }

Statistic Statistic::constant(const Rational& c) {
  return Statistic(to_string(c), {StatTerm{StatTerm::Kind::Constant, c, 0}});
}

Statistic Statistic::with_claim(const Rational& c) const {
  Statistic s = *this;
  s.claim_ = c;
  return s;
}

Statistic Statistic::renamed(std::string name) const {
  Statistic s = *this;
  s.name_ = std::move(name);
  return s;
}

Rational Statistic::operator()(const SubsetState& s) const {
  Rational v = 0;
  for (const auto& t : terms_) {
    switch (t.kind) {
      case StatTerm::Kind::Element:
        if (s.contains(t.element)) v += t.coeff;
        break;
      case StatTerm::Kind::Cardinality: v += t.coeff * static_cast<long>(s.cardinality()); break;
      case StatTerm::Kind::Constant: v += t.coeff; break;
    }
  }
  return v;
}

Rational Statistic::operator()(const RationalLabeling& f) const {
  Rational v = 0;
  for (const auto& t : terms_) {
    switch (t.kind) {
      case StatTerm::Kind::Element: v += t.coeff * f[t.element]; break;
      case StatTerm::Kind::Cardinality:
        for (const auto& q : f.values()) v += t.coeff * q;
        break;
      case StatTerm::Kind::Constant: v += t.coeff; break;
    }
  }
  return v;
}

Statistic Statistic::operator+(const Statistic& o) const {
  auto terms = terms_;
  terms.insert(terms.end(), o.terms_.begin(), o.terms_.end());
  return Statistic(name_ + "+" + o.name_, std::move(terms));
}

Statistic Statistic::operator-(const Statistic& o) const {
  auto terms = terms_;
  for (auto t : o.terms_) {
    t.coeff = -t.coeff;
    terms.push_back(t);
  }
  return Statistic(name_ + "-" + o.name_, std::move(terms));
}

Statistic operator*(const Rational& c, const Statistic& s) {
  auto terms = s.terms_;
  for (auto& t : terms) t.coeff *= c;
  return Statistic(to_string(c) + "*(" + s.name_ + ")", std::move(terms));
}

namespace {

class StatParser {
 public:
  StatParser(const Poset& p, std::string_view text) : p_(p), text_(text) {}

  Statistic parse() {
    std::vector<StatTerm> terms;
    skip_ws();
    bool first = true;
    while (pos_ < text_.size() && text_[pos_] != '=') {
      Rational sign = 1;
      if (peek('+') || peek('-')) {
        sign = text_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      terms.push_back(term(sign));
      first = false;
      skip_ws();
    }
    if (terms.empty()) fail("empty statistic");
    std::optional<Rational> claim;
    std::string_view body = text_.substr(0, pos_);
    if (pos_ < text_.size()) {
      ++pos_;
      try {
        claim = parse_rational(text_.substr(pos_));
      } catch (const ParseError&) {
        fail("bad claimed average");
      }
    }
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
    while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
    return Statistic(std::string(body), std::move(terms), claim);
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("statistic '" + std::string(text_) + "': " + why + " at column " + std::to_string(pos_ + 1));
  }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  StatTerm term(const Rational& sign) {
    Rational coeff = sign;
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/' || text_[pos_] == '.')) {
      ++pos_;
    }
    bool has_coeff = pos_ > start;
    if (has_coeff) {
      try {
        coeff *= parse_rational(text_.substr(start, pos_ - start));
      } catch (const ParseError&) {
        pos_ = start;
        fail("bad coefficient");
      }
      skip_ws();
      if (peek('*')) {
        ++pos_;
        skip_ws();
      }
    }
    if (peek('I') && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      ++pos_;
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::size_t j = std::stoul(std::string(text_.substr(s, pos_ - s)));
      if (j < 1 || j > p_.size()) fail("index I" + std::to_string(j) + " out of range");
      return StatTerm{StatTerm::Kind::Element, coeff, j - 1};
    }
    if ((peek('h') || peek('g')) && pos_ + 1 < text_.size() && text_[pos_ + 1] == '(') {
      pos_ += 2;
      std::size_t close = pos_;
      for (int depth = 0; close < text_.size() && (text_[close] != ')' || depth > 0); ++close) {
        if (text_[close] == '(') ++depth;
        if (text_[close] == ')') --depth;
      }
      if (close == text_.size()) fail("missing ')'");
      std::string id(text_.substr(pos_, close - pos_));
      auto x = p_.find(id);
      if (!x) fail("unknown element '" + id + "'");
      pos_ = close + 1;
      return StatTerm{StatTerm::Kind::Element, coeff, *x};
    }
    if (text_.substr(pos_, 4) == "card") {
      pos_ += 4;
      return StatTerm{StatTerm::Kind::Cardinality, coeff, 0};
    }
    if (has_coeff) return StatTerm{StatTerm::Kind::Constant, coeff, 0};
    fail("expected a term");
  }

  const Poset& p_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Statistic parse_statistic(const Poset& p, std::string_view text) { return StatParser(p, text).parse(); }

std::vector<Statistic> parse_statistics(const Poset& p, std::string_view text) {
  std::vector<Statistic> out;
  for (const auto& piece : split_top_level(text)) out.push_back(parse_statistic(p, piece));
  if (out.empty()) throw ParseError("no statistics given");
  return out;
}

std::string Verdict::describe() const {
  if (homomesic) return "homomesic, average " + (average ? to_string(*average) : std::string("n/a"));
  if (against_claim) {
    return "counterexample: orbit " + std::to_string(orbit_a) + " has average " + to_string(average_a) +
           ", expected " + to_string(average_b);
  }
  return "counterexample: orbit " + std::to_string(orbit_a) + " has average " + to_string(average_a) +
         ", orbit " + std::to_string(orbit_b) + " has average " + to_string(average_b);
}

bool HomomesyReport::all_homomesic() const {
  for (const auto& v : verdicts) {
    if (!v.homomesic) return false;
  }
  return true;
}

HomomesyReport homomesy_check(const Action<SubsetState>& act, const PosetPtr& p, SubsetKind kind,
                              const std::vector<Statistic>& stats, std::string action) {
  auto states = enumerate_states(p, kind);
  auto orbits = orbit_decomposition(act, states);
  return homomesy_report(orbits, stats, std::move(action));
}

}  // namespace rowmotion
