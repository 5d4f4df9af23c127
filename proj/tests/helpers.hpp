#pragma once

#include <string>
#include <vector>

#include "doctest.h"
#include "rowmotion/combinatorial.hpp"
#include "rowmotion/poset_io.hpp"
#include "rowmotion/polytope.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(ROWMOTION_TEST_DATA) + "/" + name; }

inline rowmotion::PosetPtr load(const std::string& name) { return rowmotion::load_poset(data_path(name)); }

inline std::vector<std::string> strs(std::initializer_list<const char*> xs) { return {xs.begin(), xs.end()}; }

inline rowmotion::SubsetState subset(const rowmotion::PosetPtr& p, rowmotion::SubsetKind k,
                                     std::initializer_list<const char*> ids) {
  auto v = strs(ids);
  return rowmotion::SubsetState::from_ids(p, k, v);
}

inline rowmotion::SubsetState ideal(const rowmotion::PosetPtr& p, std::initializer_list<const char*> ids) {
  return subset(p, rowmotion::SubsetKind::OrderIdeal, ids);
}

inline rowmotion::SubsetState antichain(const rowmotion::PosetPtr& p, std::initializer_list<const char*> ids) {
  return subset(p, rowmotion::SubsetKind::Antichain, ids);
}

/// Labeling from decimal or p/q strings, in canonical element order.
inline rowmotion::RationalLabeling labeling(const rowmotion::PosetPtr& p, rowmotion::LabelSpace space,
                                            std::initializer_list<const char*> values) {
  std::vector<rowmotion::Rational> v;
  for (const char* s : values) v.push_back(rowmotion::parse_rational(s));
  return rowmotion::RationalLabeling(p, space, std::move(v));
}

inline rowmotion::Rational q(const char* s) { return rowmotion::parse_rational(s); }

}  // namespace testing

namespace doctest {
template <>
struct StringMaker<rowmotion::SubsetState> {
  static String convert(const rowmotion::SubsetState& s) { return s.to_string().c_str(); }
};
template <>
struct StringMaker<rowmotion::RationalLabeling> {
  static String convert(const rowmotion::RationalLabeling& f) { return f.to_string().c_str(); }
};
template <>
struct StringMaker<rowmotion::Rational> {
  static String convert(const rowmotion::Rational& q) { return rowmotion::to_string(q).c_str(); }
};
}  // namespace doctest
