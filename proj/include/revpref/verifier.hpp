#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "revpref/core.hpp"

// Exhaustive machine verification of the equivalence results over every
// choice correspondence on a small universe.

namespace revpref {

enum class Claim {
  prop_tau,    // tau  ⟺  strict revealed preference is a preference
  prop_rho,    // rho  ⟺  strict revealed preference rationalizes c
  theorem1,    // tau ∧ rho  ⟺  preference ∧ rationalizes
  lemma1,      // V-axiom  ⟺  rationalizes (plus weak = V on that class)
  warp,        // WARP  ⟺  tau ∧ rho
  delta,       // on V-axiom-satisfying c: tau ⇒ delta (converse counted)
};

Claim claim_from_string(std::string_view name);
const char* claim_name(Claim claim);

struct Counterexample {
  std::uint64_t index = 0;
  std::string detail;
  std::string correspondence_json;
};

struct VerificationReport {
  std::string claim;
  int n = 0;
  int shards = 1;
  int shard = 0;
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  std::uint64_t instances_checked = 0;
  std::uint64_t total_instances = 0;
  std::vector<Counterexample> counterexamples;
  /// Claim-specific tallies (e.g. "delta_not_tau_normal" for the
  /// converse-failure witnesses of the delta implication).
  std::map<std::string, std::uint64_t> stats;
  double elapsed_seconds = 0.0;

  bool verified() const { return counterexamples.empty(); }
};

constexpr int kMaxCounterexamples = 10;  // abort the scan after this many

/// Scans shard `shard` of `shards` equal index ranges. Requires n ≤ 4;
/// n = 5 is refused (≈3.9e20 instances, beyond the 64-bit index range).
VerificationReport verify(Claim claim, int n, int shards = 1, int shard = 0);

}  // namespace revpref
