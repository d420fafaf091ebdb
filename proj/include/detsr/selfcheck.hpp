#pragma once

// Fast invariant suite shared by the `selfcheck` command and the tests.

#include <cstdint>
#include <string>
#include <vector>

#include "detsr/detsr.hpp"
#include "detsr/equilibrium.hpp"
#include "detsr/parallel.hpp"
#include "detsr/witnesses.hpp"

namespace detsr {

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::size_t failures = 0;
  bool passed() const { return failures == 0; }
};

struct SelfcheckOptions {
  std::size_t trials = 10;
  std::uint64_t seed = 1;
  bool parallel = false;
  SignRule sign = standard_sign;
};

namespace detail {

template <typename Trial>
PropertyResult run_property(std::string name, std::size_t trials, bool parallel, Trial&& trial) {
  std::vector<char> ok(trials, 0);
  parallel_for(trials, [&](std::size_t t) { ok[t] = trial(t) ? 1 : 0; }, parallel);
  PropertyResult result{std::move(name), trials, 0};
  for (char c : ok) result.failures += c ? 0 : 1;
  return result;
}

}  // namespace detail

inline std::vector<PropertyResult> run_selfcheck(const SelfcheckOptions& opt) {
  std::vector<PropertyResult> results;
  const auto seed = opt.seed;
  const auto sign = opt.sign;

  for (int r : {2, 3}) {
    results.push_back(detail::run_property(
        "dependence relations r=" + std::to_string(r) + " d=2", opt.trials, opt.parallel, [&](std::size_t t) {
          Rng rng(seed, 1000 * static_cast<std::uint64_t>(r) + t);
          const auto v = random_configuration(rng, r, 2, 2 * r, 5);
          const auto lambda = random_coefficients(rng, r, 2 * r, 5);
          return check_dependence_relations(v, lambda, sign);
        }));
  }
  for (int r : {2, 3}) {
    results.push_back(detail::run_property(
        "clique vanishing r=" + std::to_string(r) + " d=2", opt.trials, opt.parallel, [&](std::size_t t) {
          Rng rng(seed, 2000 * static_cast<std::uint64_t>(r) + t);
          auto v = random_configuration(rng, r, 2, 2 * r, 5);
          impose_clique(v, random_subset(rng, r + 1, 2 * r), rng.vector(2, 5));
          return sgn(det_sr(v, sign)) == 0;
        }));
  }
  results.push_back(detail::run_property("multilinearity r=2 d=2", opt.trials, opt.parallel, [&](std::size_t t) {
    Rng rng(seed, 3000 + t);
    auto v = random_configuration(rng, 2, 2, 4, 5);
    const auto slot = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(v.size()) - 1));
    const Vector a = rng.vector(2, 5), b = rng.vector(2, 5);
    const long alpha = rng.uniform(-5, 5), beta = rng.uniform(-5, 5);
    v.set_rank(slot, a);
    const Rational da = det_sr(v, sign);
    v.set_rank(slot, b);
    const Rational db = det_sr(v, sign);
    Vector mix(2);
    for (std::size_t c = 0; c < 2; ++c) mix[c] = alpha * a[c] + beta * b[c];
    v.set_rank(slot, mix);
    return det_sr(v, sign) == alpha * da + beta * db;
  }));
  for (int r : {2, 3}) {
    results.push_back(detail::run_property(
        "theorem consistency r=" + std::to_string(r) + " d=2", opt.trials, opt.parallel, [&](std::size_t t) {
          Rng rng(seed, 4000 * static_cast<std::uint64_t>(r) + t);
          // small bound so singular systems show up too
          const auto f = random_forces(rng, r, 2, 2 * r, r == 2 ? 1 : 2);
          const auto report = theorem_consistency(f, sign);
          return report.consistent && report.reduced_matches_full;
        }));
  }
  return results;
}

}  // namespace detsr
