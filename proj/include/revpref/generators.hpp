#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "revpref/axioms.hpp"
#include "revpref/core.hpp"
#include "revpref/relations.hpp"

// Exhaustive and random generation of choice correspondences, behavioral
// constructions, and named fixture datasets.

namespace revpref {

/// Number of total correspondences on n alternatives:
/// the product over menus A of (2^|A| - 1). Requires n ≤ 4; the n = 5
/// count (≈ 3.9e20) does not fit in 64 bits and is refused.
std::uint64_t correspondence_count(int n);

/// The k-th nonempty subset of menu in ascending numeric mask order
/// (k starting at 0); k < 2^|menu| - 1.
Mask nth_nonempty_subset(int n, Mask menu, std::uint32_t k);

/// Streams every total correspondence on n ≤ 5 alternatives exactly once.
/// A correspondence index is a mixed-radix number with one digit per
/// non-singleton menu (base 2^|A| - 1), menus in canonical order, the first
/// menu varying fastest. Supports slicing [lo, hi) for sharded scans.
///
///   CorrespondenceEnumerator e(3);
///   while (e.next()) { use(e.current()); }
class CorrespondenceEnumerator {
 public:
  explicit CorrespondenceEnumerator(int n);
  CorrespondenceEnumerator(int n, std::uint64_t lo, std::uint64_t hi);

  /// Advances to the next correspondence; false when the range is exhausted.
  bool next();
  const ChoiceCorrespondence& current() const { return current_; }
  std::uint64_t index() const { return index_; }

 private:
  void set_digit(std::size_t pos, std::uint32_t value);

  std::vector<Mask> menus_;            // non-singleton menus, canonical order
  std::vector<std::uint32_t> bases_;   // 2^|A| - 1 per menu
  std::vector<std::uint32_t> digits_;
  ChoiceCorrespondence current_;
  std::uint64_t index_ = 0;
  std::uint64_t hi_ = 0;
  bool started_ = false;
};

/// Deterministic random correspondences: each menu's choice is drawn
/// uniformly from its 2^|A| - 1 nonempty subsets, independently.
void sample_each(int n, int count, std::uint64_t seed,
                 const std::function<void(const ChoiceCorrespondence&)>& fn);
std::vector<ChoiceCorrespondence> sample(int n, int count, std::uint64_t seed);

/// c(A) := undominated(A, r). Throws empty_choice_under_relation when some
/// menu has no undominated element (e.g. r contains a cycle).
ChoiceCorrespondence from_preference(const Universe& universe, const BinaryRelation& r);

/// A partition of one menu into ranked categories. block_order lists block
/// indices best-first; every block outside the top one is dominated.
struct Categorization {
  std::vector<Mask> blocks;
  std::vector<int> block_order;
};

/// Per-menu categorize-then-choose: discard alternatives in dominated
/// categories, then pick the base-preference-maximal survivors.
/// base_preference must be a weak preference.
ChoiceCorrespondence categorize_then_choose(
    const Universe& universe, const std::map<Mask, Categorization>& categorizations,
    const BinaryRelation& base_preference);

/// A named example dataset with its expected axiom verdicts.
struct Fixture {
  std::string name;
  PartialChoiceDataset data;
  std::map<std::string, Status> expected;  // keyed by axiom name
};

const std::vector<Fixture>& fixtures();
const Fixture& fixture(std::string_view name);

/// Every complete and transitive relation on n ≤ 4 alternatives
/// (the weak orders), enumerated independently of the axiom machinery.
std::vector<BinaryRelation> all_weak_preferences(int n);

}  // namespace revpref
