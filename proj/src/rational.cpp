#include "rowmotion/rational.hpp"

#include <cctype>

#include "rowmotion/errors.hpp"

namespace rowmotion {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  auto fail = [&]() -> ParseError { return ParseError("invalid rational '" + std::string(text) + "'"); };
  if (s.empty()) throw fail();

  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }

  Rational q;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw fail();
    mpz_class d{std::string(den), 10};
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    q = Rational(mpz_class(std::string(num), 10), d);
    q.canonicalize();
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw fail();
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp))) throw fail();
    mpz_class num(std::string(ip.empty() ? "0" : ip) + std::string(fp), 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    q = Rational(num, den);
    q.canonicalize();
  } else {
    if (!all_digits(s)) throw fail();
    q = Rational(mpz_class(std::string(s), 10));
  }
  return neg ? Rational(-q) : q;
}

std::string to_string(const Rational& value) {
  Rational q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<std::string> to_decimal(const Rational& q) {
  mpz_class den = q.get_den();
  int twos = 0, fives = 0;
  while (den % 2 == 0) {
    den /= 2;
    ++twos;
  }
  while (den % 5 == 0) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return std::nullopt;
  int digits = std::max(twos, fives);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  mpz_class scaled = q.get_num() * scale / q.get_den();
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string s = scaled.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits - s.size() + 1, '0');
    s.insert(s.size() - digits, ".");
  }
  return neg ? "-" + s : s;
}

}  // namespace rowmotion
