#pragma once

// Randomized property checks of the kernel, the assembled transform, the node
// plans and the oracle, each against an independent reference. Every check
// reports the worst error it saw next to its tolerance.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace sparsesum::verify {

struct PropertyResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;  // worst observed error (or violation count)
  double tolerance = 0.0;
  std::string detail;
};

struct Report {
  std::vector<PropertyResult> results;
  bool all_passed() const;
  const PropertyResult* find(const std::string& name) const;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'2013;

// kernel
PropertyResult panel_constant_exactness(std::uint64_t seed = kDefaultSeed);
PropertyResult panel_quadratic_exactness(std::uint64_t seed = kDefaultSeed);
PropertyResult panel_weight_sum_at_zero(std::uint64_t seed = kDefaultSeed);
PropertyResult conjugate_symmetry(std::uint64_t seed = kDefaultSeed);
/// Weights at |k| = 1e-6 against the k = 0 closed forms, tolerance 1e-5
/// relative for |w| > 1 and 1e-6 absolute otherwise, spans up to 1e4.
PropertyResult small_k_continuity(std::uint64_t seed = kDefaultSeed);
/// Weights at |k| = 1e-6 against their second-order expansion about k = 0,
/// built from exact power sums.
PropertyResult small_k_expansion(std::uint64_t seed = kDefaultSeed);

// transform
PropertyResult global_quadratic_exactness(std::uint64_t seed = kDefaultSeed);
PropertyResult constant_sum_identity(std::uint64_t seed = kDefaultSeed);
PropertyResult general_k_constant_identity(std::uint64_t seed = kDefaultSeed);
PropertyResult sine_cosine_consistency(std::uint64_t seed = kDefaultSeed);
PropertyResult evaluation_count(std::uint64_t seed = kDefaultSeed);

// nodes
PropertyResult node_sequences_valid(std::uint64_t seed = kDefaultSeed);
PropertyResult q_sequence_regression();
PropertyResult hybrid_endpoints(std::uint64_t seed = kDefaultSeed);
PropertyResult split_layout(std::uint64_t seed = kDefaultSeed);

// oracle
PropertyResult faulhaber_exact(std::uint64_t seed = kDefaultSeed);
PropertyResult brute_force_power_sums(std::uint64_t seed = kDefaultSeed);
PropertyResult lorentzian_tail_bound();

Report run_verify(std::uint64_t seed = kDefaultSeed);

void print(std::ostream& out, const Report& report);

}  // namespace sparsesum::verify
