#include "rowmotion/poset.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>

namespace rowmotion {

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

// Compares two digit runs as unsigned integers of arbitrary length.
int compare_digits(std::string_view a, std::string_view b) {
  auto strip = [](std::string_view s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return s.substr(i);
  };
  std::string_view sa = strip(a), sb = strip(b);
  if (sa.size() != sb.size()) return sa.size() < sb.size() ? -1 : 1;
  int c = sa.compare(sb);
  if (c != 0) return c < 0 ? -1 : 1;
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

std::string join_ids(const std::vector<ElementId>& ids) {
  std::string out;
  for (const auto& s : ids) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

}  // namespace

bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = is_digit(a[i]), db = is_digit(b[j]);
    if (da && db) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && is_digit(a[i2])) ++i2;
      while (j2 < b.size() && is_digit(b[j2])) ++j2;
      int c = compare_digits(a.substr(i, i2 - i), b.substr(j, j2 - j));
      if (c != 0) return c < 0;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return static_cast<unsigned char>(a[i]) < static_cast<unsigned char>(b[j]);
      ++i;
      ++j;
    }
  }
  if (i < a.size() || j < b.size()) return i == a.size();
  return a < b;
}

PosetPtr Poset::from_covers(std::vector<ElementId> elements,
                            const std::vector<std::pair<ElementId, ElementId>>& covers) {
  std::sort(elements.begin(), elements.end(),
            [](const ElementId& x, const ElementId& y) { return natural_less(x, y); });
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) {
    if (elements[i] == elements[i + 1]) throw Error("duplicate element id '" + elements[i] + "'");
  }
  for (const auto& s : elements) {
    if (s.empty()) throw Error("empty element id");
  }

  std::shared_ptr<Poset> p(new Poset());
  p->ids_ = std::move(elements);
  const std::size_t n = p->ids_.size();
  for (std::size_t i = 0; i < n; ++i) p->index_.emplace(p->ids_[i], i);

  std::vector<std::pair<Element, Element>> pairs;
  pairs.reserve(covers.size());
  for (const auto& [x, y] : covers) {
    auto ix = p->find(x);
    if (!ix) throw UnknownElementError("unknown element '" + x + "' in cover relation");
    auto iy = p->find(y);
    if (!iy) throw UnknownElementError("unknown element '" + y + "' in cover relation");
    pairs.emplace_back(*ix, *iy);
  }

  // Cycle detection via Kahn's algorithm on the multigraph.
  std::vector<std::vector<Element>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& [x, y] : pairs) {
    if (x == y) throw CycleError("self-loop at '" + p->ids_[x] + "'");
    succ[x].push_back(y);
    ++indeg[y];
  }
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x = 0; x < n; ++x) {
    if (indeg[x] == 0) ready.push(x);
  }
  std::vector<Element> topo;
  topo.reserve(n);
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    topo.push_back(x);
    for (Element y : succ[x]) {
      if (--indeg[y] == 0) ready.push(y);
    }
  }
  if (topo.size() != n) {
    std::vector<ElementId> stuck;
    for (Element x = 0; x < n; ++x) {
      if (indeg[x] > 0) stuck.push_back(p->ids_[x]);
    }
    throw CycleError("cover relations contain a cycle through: " + join_ids(stuck));
  }

  // Strict reachability, filled in reverse topological order.
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    Element x = *it;
    for (Element y : succ[x]) {
      reach[x][y] = true;
      for (Element z = 0; z < n; ++z) {
        if (reach[y][z]) reach[x][z] = true;
      }
    }
  }

  std::set<std::pair<Element, Element>> seen;
  for (const auto& [x, y] : pairs) {
    if (!seen.insert({x, y}).second) {
      throw NotReducedError("duplicate cover pair (" + p->ids_[x] + ", " + p->ids_[y] + ")");
    }
  }
  for (const auto& [x, y] : pairs) {
    for (Element z = 0; z < n; ++z) {
      if (reach[x][z] && reach[z][y]) {
        throw NotReducedError("cover pair (" + p->ids_[x] + ", " + p->ids_[y] +
                              ") is implied via '" + p->ids_[z] + "'");
      }
    }
  }

  p->up_.assign(n, {});
  p->down_.assign(n, {});
  for (const auto& [x, y] : seen) {
    p->up_[x].push_back(y);
    p->down_[y].push_back(x);
  }
  for (Element x = 0; x < n; ++x) {
    std::sort(p->up_[x].begin(), p->up_[x].end());
    std::sort(p->down_[x].begin(), p->down_[x].end());
  }
  p->cover_pairs_.assign(seen.begin(), seen.end());

  p->leq_ = std::move(reach);
  for (Element x = 0; x < n; ++x) p->leq_[x][x] = true;

  // Longest-path rank from the minimal elements.
  std::vector<int> rk(n, 0);
  for (Element x : topo) {
    for (Element y : p->up_[x]) rk[y] = std::max(rk[y], rk[x] + 1);
  }
  bool graded = true;
  for (const auto& [x, y] : p->cover_pairs_) {
    if (rk[y] != rk[x] + 1) graded = false;
  }
  int top = -1;
  for (Element x = 0; x < n && graded; ++x) {
    if (!p->up_[x].empty()) continue;
    if (top < 0) top = rk[x];
    else if (rk[x] != top) graded = false;
  }
  if (graded) {
    p->rank_ = std::move(rk);
    p->height_ = top;
  }

  p->canonical_extension_ = std::move(topo);
  p->chain_cache_.resize(n);
  return p;
}

std::optional<Element> Poset::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element Poset::index(std::string_view id) const {
  auto x = find(id);
  if (!x) throw UnknownElementError("unknown element '" + std::string(id) + "'");
  return *x;
}

bool Poset::covers(Element x, Element y) const {
  return std::binary_search(up_[x].begin(), up_[x].end(), y);
}

std::vector<ElementId> Poset::covers_of(std::string_view x) const {
  return ids_of(*this, up_[index(x)]);
}

std::vector<ElementId> Poset::covered_by(std::string_view x) const {
  return ids_of(*this, down_[index(x)]);
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x) {
    if (is_minimal(x)) out.push_back(x);
  }
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x) {
    if (is_maximal(x)) out.push_back(x);
  }
  return out;
}

int Poset::rank(Element x) const {
  if (!rank_) throw NotGradedError("poset is not graded");
  return (*rank_).at(x);
}

int Poset::height() const {
  if (!rank_) throw NotGradedError("poset is not graded");
  return height_;
}

std::vector<Element> Poset::rank_level(int i) const {
  if (!rank_) throw NotGradedError("poset is not graded");
  if (i < 0 || i > height_) {
    throw RankRangeError("rank " + std::to_string(i) + " outside [0, " + std::to_string(height_) + "]");
  }
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x) {
    if ((*rank_)[x] == i) out.push_back(x);
  }
  return out;
}

std::vector<Element> Poset::linear_extension_of(std::span<const Element> subset) const {
  std::vector<bool> in(size(), false);
  for (Element x : subset) in.at(x) = true;
  std::vector<Element> out;
  for (Element x : canonical_extension_) {
    if (in[x]) out.push_back(x);
  }
  // The restriction of a linear extension is a linear extension, but not the
  // min-index one; redo Kahn on the induced order.
  std::vector<std::size_t> indeg(size(), 0);
  for (Element x : out) {
    for (Element y : out) {
      if (less(y, x)) ++indeg[x];
    }
  }
  std::priority_queue<Element, std::vector<Element>, std::greater<>> ready;
  for (Element x : out) {
    if (indeg[x] == 0) ready.push(x);
  }
  std::vector<Element> res;
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    res.push_back(x);
    for (Element y : out) {
      if (less(x, y) && --indeg[y] == 0) ready.push(y);
    }
  }
  return res;
}

std::vector<Element> Poset::strict_down_set(std::span<const Element> s) const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x) {
    for (Element y : s) {
      if (less(x, y)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

bool Poset::is_connected() const {
  if (empty()) return true;
  std::vector<bool> seen(size(), false);
  std::vector<Element> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Element x = stack.back();
    stack.pop_back();
    for (const auto* nbrs : {&up_[x], &down_[x]}) {
      for (Element y : *nbrs) {
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
      }
    }
  }
  return count == size();
}

const std::vector<Chain>& Poset::maximal_chains_through(Element e) const {
  if (e >= size()) throw UnknownElementError("element index out of range");
  std::lock_guard<std::mutex> lock(chain_mutex_);
  auto& slot = chain_cache_[e];
  if (slot) return *slot;

  // Down-paths from e to a minimal element, and up-paths to a maximal one.
  std::function<void(Element, Chain&, std::vector<Chain>&)> down = [&](Element x, Chain& cur,
                                                                        std::vector<Chain>& acc) {
    if (down_[x].empty()) {
      acc.emplace_back(cur.rbegin(), cur.rend());
      return;
    }
    for (Element y : down_[x]) {
      cur.push_back(y);
      down(y, cur, acc);
      cur.pop_back();
    }
  };
  std::function<void(Element, Chain&, std::vector<Chain>&)> up = [&](Element x, Chain& cur,
                                                                      std::vector<Chain>& acc) {
    if (up_[x].empty()) {
      acc.push_back(cur);
      return;
    }
    for (Element y : up_[x]) {
      cur.push_back(y);
      up(y, cur, acc);
      cur.pop_back();
    }
  };
  std::vector<Chain> lows, highs;
  Chain cur{e};
  down(e, cur, lows);
  cur = {e};
  up(e, cur, highs);

  auto chains = std::make_unique<std::vector<Chain>>();
  for (const auto& lo : lows) {
    for (const auto& hi : highs) {
      Chain c = lo;
      c.insert(c.end(), hi.begin() + 1, hi.end());
      chains->push_back(std::move(c));
    }
  }
  slot = std::move(chains);
  return *slot;
}

bool Poset::operator==(const Poset& other) const {
  return ids_ == other.ids_ && cover_pairs_ == other.cover_pairs_;
}

void for_each_linear_extension(const Poset& p,
                               const std::function<bool(std::span<const Element>)>& visit,
                               std::size_t cap) {
  const std::size_t n = p.size();
  if (n > cap) {
    throw SizeCapError("linear extension enumeration limited to " + std::to_string(cap) +
                       " elements (poset has " + std::to_string(n) + ")");
  }
  std::vector<std::size_t> pending(n);
  for (Element x = 0; x < n; ++x) pending[x] = p.lower_covers(x).size();
  std::vector<bool> used(n, false);
  std::vector<Element> cur;
  cur.reserve(n);
  bool stop = false;
  std::function<void()> rec = [&]() {
    if (stop) return;
    if (cur.size() == n) {
      if (!visit(cur)) stop = true;
      return;
    }
    for (Element x = 0; x < n && !stop; ++x) {
      if (used[x] || pending[x] != 0) continue;
      used[x] = true;
      cur.push_back(x);
      for (Element y : p.upper_covers(x)) --pending[y];
      rec();
      for (Element y : p.upper_covers(x)) ++pending[y];
      cur.pop_back();
      used[x] = false;
    }
  };
  rec();
}

std::vector<std::vector<Element>> all_linear_extensions(const Poset& p, std::size_t cap) {
  std::vector<std::vector<Element>> out;
  for_each_linear_extension(
      p,
      [&](std::span<const Element> ext) {
        out.emplace_back(ext.begin(), ext.end());
        return true;
      },
      cap);
  return out;
}

bool is_linear_extension(const Poset& p, std::span<const Element> order) {
  if (order.size() != p.size()) return false;
  std::vector<std::size_t> pos(p.size(), p.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] >= p.size() || pos[order[i]] != p.size()) return false;
    pos[order[i]] = i;
  }
  for (const auto& [x, y] : p.cover_pairs()) {
    if (pos[x] > pos[y]) return false;
  }
  return true;
}

std::vector<ElementId> ids_of(const Poset& p, std::span<const Element> xs) {
  std::vector<ElementId> out;
  out.reserve(xs.size());
  for (Element x : xs) out.push_back(p.id(x));
  return out;
}

std::vector<Element> indices_of(const Poset& p, std::span<const ElementId> ids) {
  std::vector<Element> out;
  out.reserve(ids.size());
  for (const auto& s : ids) out.push_back(p.index(s));
  return out;
}

}  // namespace rowmotion
