#include "rowmotion/families.hpp"

#include <map>

namespace rowmotion {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) throw Error(std::string(what) + " requires a positive size, got " + std::to_string(n));
}

}  // namespace

std::string letter_name(std::size_t k) {
  std::string s;
  ++k;
  while (k > 0) {
    --k;
    s.insert(s.begin(), static_cast<char>('a' + k % 26));
    k /= 26;
  }
  return s;
}

PosetPtr zigzag(int n) {
  require_positive(n, "zigzag");
  std::vector<ElementId> ids;
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (int i = 1; i <= n; ++i) ids.push_back("a" + std::to_string(i));
  for (int i = 2; i <= n; i += 2) {
    covers.emplace_back("a" + std::to_string(i - 1), "a" + std::to_string(i));
    if (i + 1 <= n) covers.emplace_back("a" + std::to_string(i + 1), "a" + std::to_string(i));
  }
  return Poset::from_covers(std::move(ids), covers);
}

PosetPtr chain_product(int a, int b) {
  require_positive(a, "chain_product");
  require_positive(b, "chain_product");
  auto name = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
  std::vector<ElementId> ids;
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (int i = 1; i <= a; ++i) {
    for (int j = 1; j <= b; ++j) {
      ids.push_back(name(i, j));
      if (i < a) covers.emplace_back(name(i, j), name(i + 1, j));
      if (j < b) covers.emplace_back(name(i, j), name(i, j + 1));
    }
  }
  return Poset::from_covers(std::move(ids), covers);
}

PosetPtr root_poset_A(int n) {
  require_positive(n, "root_poset_A");
  // Root e_i - e_j is the interval [i, j]; rank j - i - 1.
  std::map<std::pair<int, int>, ElementId> name;
  std::size_t k = 0;
  for (int len = 1; len <= n; ++len) {
    for (int i = 1; i + len <= n + 1; ++i) name[{i, i + len}] = letter_name(k++);
  }
  std::vector<ElementId> ids;
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (const auto& [iv, id] : name) {
    ids.push_back(id);
    auto [i, j] = iv;
    if (i > 1) covers.emplace_back(id, name.at({i - 1, j}));
    if (j < n + 1) covers.emplace_back(id, name.at({i, j + 1}));
  }
  return Poset::from_covers(std::move(ids), covers);
}

PosetPtr chain(int n) {
  require_positive(n, "chain");
  std::vector<ElementId> ids;
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (int i = 1; i <= n; ++i) {
    ids.push_back("x" + std::to_string(i));
    if (i > 1) covers.emplace_back("x" + std::to_string(i - 1), "x" + std::to_string(i));
  }
  return Poset::from_covers(std::move(ids), covers);
}

PosetPtr antichain(int n) {
  require_positive(n, "antichain");
  std::vector<ElementId> ids;
  for (int i = 1; i <= n; ++i) ids.push_back("x" + std::to_string(i));
  return Poset::from_covers(std::move(ids), {});
}

}  // namespace rowmotion
