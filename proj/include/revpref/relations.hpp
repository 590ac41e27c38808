#pragma once

#include <array>
#include <optional>
#include <vector>

#include "revpref/core.hpp"

// Binary relations over the universe: revealed preferences, preference
// property predicates, undominated / V-maximal choice sets, rationalization.

namespace revpref {

/// holds(x, y) means "x is related to y" (x ▷ y). Rows are stored as bit
/// masks over column indices.
class BinaryRelation {
 public:
  explicit BinaryRelation(int n) : n_(n), rows_{} {}

  int size() const { return n_; }
  bool holds(int x, int y) const { return rows_[x] >> y & 1; }
  void set(int x, int y, bool value = true) {
    if (value) {
      rows_[x] |= Mask{1} << y;
    } else {
      rows_[x] &= ~(Mask{1} << y);
    }
  }
  /// Everything x is related to, as a mask.
  Mask row(int x) const { return rows_[x]; }

  static BinaryRelation empty(int n) { return BinaryRelation(n); }
  static BinaryRelation total(int n) {
    BinaryRelation r(n);
    for (int x = 0; x < n; ++x) r.rows_[x] = (Mask{1} << n) - 1;
    return r;
  }

  bool operator==(const BinaryRelation& other) const {
    return n_ == other.n_ && rows_ == other.rows_;
  }

 private:
  int n_;
  std::array<Mask, kMaxUniverse> rows_;
};

/// x ≻_c y iff {x} = c({x,y}); irreflexive by construction.
/// For partial data every binary menu must be determined.
BinaryRelation strict_revealed(const ChoiceView& c);

/// x ≿_c y iff x ∈ c({x,y}); reflexive since c({x}) = {x}.
BinaryRelation weak_revealed(const ChoiceView& c);

/// Whether every two-element menu has a determined choice (relations and
/// rationalization are computable from a partial dataset only in this case).
bool binary_complete(const ChoiceView& c);

/// holds(x,y) iff r(x,y) and not r(y,x).
BinaryRelation strict_from_weak(const BinaryRelation& r);
/// holds(x,y) iff not r(y,x).
BinaryRelation weak_from_strict(const BinaryRelation& r);

bool is_asymmetric(const BinaryRelation& r);
bool is_negatively_transitive(const BinaryRelation& r);
bool is_complete(const BinaryRelation& r);
bool is_transitive(const BinaryRelation& r);
bool is_strict_preference(const BinaryRelation& r);
bool is_weak_preference(const BinaryRelation& r);

struct Triple {
  int x, y, z;
  bool operator==(const Triple&) const = default;
};

/// First (x, y, z) with x ⊁ y, y ⊁ z and x ≻ z, in lexicographic index
/// order; nullopt when r is negatively transitive.
std::optional<Triple> negative_transitivity_witness(const BinaryRelation& r);

/// { x ∈ menu : no y ∈ menu with r(y, x) }; may be empty (e.g. a 3-cycle).
Mask undominated(Mask menu, const BinaryRelation& r);

/// { x ∈ menu : r(x, y) for every y ∈ menu }.
Mask v_maximal(Mask menu, const BinaryRelation& v);

/// x V y iff some determined menu contains both x and y and x is chosen.
BinaryRelation v_relation(const ChoiceView& c);

struct RationalizationFailure {
  Mask menu = 0;
  Mask expected = 0;  // undominated(menu, r)
  Mask actual = 0;    // c(menu)
};

struct RationalizationResult {
  bool ok = true;
  /// First failing menu in canonical order (all of them with all_failures).
  std::vector<RationalizationFailure> failures;
};

/// Whether c(A) = undominated(A, r) on every determined menu.
RationalizationResult rationalizes(const ChoiceView& c, const BinaryRelation& r,
                                   bool all_failures = false);

}  // namespace revpref
