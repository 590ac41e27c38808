#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "revpref/core.hpp"
#include "revpref/relations.hpp"

// Axiom checkers with three-valued verdicts and typed witnesses. On partial
// data an axiom instance counts as violated only when the observed choices
// already force it false, and as satisfied only when they force it true;
// a verdict is Satisfied only when every instance is decidably true.

namespace revpref {

enum class Status { satisfied, violated, undetermined };

const char* status_name(Status s);

/// z ∈ c({z,y}) and {x} = c({x,z}) hold but {x} ≠ c({x,y}).
struct TauWitness {
  int x, y, z;
  bool operator==(const TauWitness&) const = default;
};

/// One direction of the biconditional
///   x ∈ c({x,y}) ∧ x ∈ c(B∪{x})  ⟺  x ∈ c(B∪{x,y})
/// fails; forward means the left side holds but the right side does not.
struct RhoWitness {
  int x, y;
  Mask b;
  bool forward;
  bool operator==(const RhoWitness&) const = default;
};

/// x, y ∈ A∩B, x ∈ c(A) and y ∈ c(B), but x ∉ c(B).
struct WarpWitness {
  Mask a, b;
  int x, y;
  bool operator==(const WarpWitness&) const = default;
};

/// x, y ∈ c(S) are distinct, S ⊊ T, and c(T) = {x}.
struct DeltaWitness {
  Mask s, t;
  int x, y;
  bool operator==(const DeltaWitness&) const = default;
};

/// c(menu) differs from the V-maximal set of the menu.
struct VAxiomWitness {
  Mask menu, expected, actual;
  bool operator==(const VAxiomWitness&) const = default;
};

using Witness =
    std::variant<TauWitness, RhoWitness, WarpWitness, DeltaWitness, VAxiomWitness>;

struct Verdict {
  Status status = Status::satisfied;
  /// Exact number of violating instances (capped search never truncates the
  /// count, only the stored witnesses; with first_only the scan stops at the
  /// first violation and the count is a lower bound).
  std::uint64_t violation_count = 0;
  /// Witnesses in canonical scan order; the first one is minimal.
  std::vector<Witness> witnesses;
};

struct CheckOptions {
  /// Stop scanning at the first violation (status is still exact).
  bool first_only = false;
  std::size_t max_witnesses = 1000;
};

Verdict check_tau(const ChoiceView& c, const CheckOptions& opt = {});
Verdict check_rho(const ChoiceView& c, const CheckOptions& opt = {});
Verdict check_warp(const ChoiceView& c, const CheckOptions& opt = {});
/// Undetermined on partial data: V quantifies over every menu.
Verdict check_v_axiom(const ChoiceView& c, const CheckOptions& opt = {});
/// Undetermined on partial data.
Verdict check_delta(const ChoiceView& c, const CheckOptions& opt = {});

inline bool tau_holds(const ChoiceView& c) {
  return check_tau(c, {.first_only = true}).status == Status::satisfied;
}
inline bool rho_holds(const ChoiceView& c) {
  return check_rho(c, {.first_only = true}).status == Status::satisfied;
}
inline bool warp_holds(const ChoiceView& c) {
  return check_warp(c, {.first_only = true}).status == Status::satisfied;
}
inline bool v_axiom_holds(const ChoiceView& c) {
  return check_v_axiom(c, {.first_only = true}).status == Status::satisfied;
}
inline bool delta_holds(const ChoiceView& c) {
  return check_delta(c, {.first_only = true}).status == Status::satisfied;
}

/// z is a reference point for choosing x over y (x, y, z distinct):
/// either x ∈ c({x,y,z}) but x ∉ c({x,y}), or y ∈ c({x,y}) but
/// {x,y} ∩ c({x,y,z}) = {x}. On partial data only triples whose two menus
/// are determined are reported.
struct ReferenceTriple {
  int z, x, y;
  bool operator==(const ReferenceTriple&) const = default;
};

std::vector<ReferenceTriple> detect_reference_points(const ChoiceView& c);

}  // namespace revpref
