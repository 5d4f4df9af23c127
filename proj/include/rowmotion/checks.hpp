#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rowmotion/polytope.hpp"

namespace rowmotion {

/// Seeded generator with a platform-independent bounded draw, so a fixed
/// seed yields the same samples everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

 private:
  std::mt19937_64 engine_;
};

/// Random point of C(P) with small denominators: raw values k/D (with
/// occasional zeros), rescaled so the largest chain sum is a random
/// t in (0, 1] whenever it would exceed t.
RationalLabeling random_chain_point(const PosetPtr& p, Rng& rng);
/// OR of a random chain-polytope point.
RationalLabeling random_order_reversing_point(const PosetPtr& p, Rng& rng);

struct CheckOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  bool skipped = false;
  std::size_t cases = 0;
  std::string detail;
};

/// Names accepted by run_check, in the order `all` runs them.
const std::vector<std::string>& check_names();

/// Runs one named check on p. Checks needing a grading report skipped on
/// ungraded posets. Throws Error for an unknown name.
CheckResult run_check(const std::string& name, const PosetPtr& p, const CheckOptions& opts = {});

/// Runs every check.
std::vector<CheckResult> run_all_checks(const PosetPtr& p, const CheckOptions& opts = {});

}  // namespace rowmotion
