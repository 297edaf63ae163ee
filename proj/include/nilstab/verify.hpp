#pragma once

// Seeded invariant suites for the Lie ring, the group and its automorphisms.

#include "nilstab/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace nilstab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

struct VerifyOptions {
  unsigned triples = 100;
  unsigned lie_samples = 20;
  unsigned kernel_samples = 50;
  unsigned hom_samples = 50;
  unsigned lift_samples = 20;
  unsigned conjugation_samples = 20;
};

std::vector<CheckResult> verify_lie(unsigned r, unsigned c, Rng &rng, const VerifyOptions &opts);
std::vector<CheckResult> verify_nilgroup(unsigned r, unsigned c, Rng &rng,
                                         const VerifyOptions &opts);
std::vector<CheckResult> verify_aut(unsigned r, unsigned c, Rng &rng, const VerifyOptions &opts);
/// Coefficient modules, Smith normal form and coinvariants at rank r.
std::vector<CheckResult> verify_modules(unsigned r, unsigned c, Rng &rng,
                                        const VerifyOptions &opts);

/// All three suites, each seeded from `seed`.
std::vector<CheckResult> verify_all(unsigned r, unsigned c, std::uint64_t seed,
                                    const VerifyOptions &opts = {});

} // namespace nilstab
