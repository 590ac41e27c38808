#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

// Core domain types: universes, menus (bit masks), total choice
// correspondences and partially observed choice datasets.

namespace revpref {

/// A menu is a nonempty subset of the universe, encoded as a bit mask over
/// alternative indices 0..n-1.
using Mask = std::uint32_t;

constexpr int kMaxUniverse = 16;       // analysis cap: menus fit in a Mask
constexpr int kMaxEnumeration = 5;     // exhaustive-enumeration cap

enum class Errc {
  missing_menu,
  choice_outside_menu,
  empty_choice,
  duplicate_conflict,
  parse_error,
  unknown_alternative,
  incomplete_data,
  universe_too_large,
  empty_choice_under_relation,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

int popcount(Mask m);

/// Canonical menu order: cardinality ascending, then numeric mask ascending.
/// All "first witness" guarantees refer to this order.
bool canonical_less(Mask a, Mask b);

/// All nonempty menus over n alternatives, in canonical order.
std::vector<Mask> canonical_menus(int n);

/// All subsets (including the empty set), in canonical order.
std::vector<Mask> canonical_subsets(int n);

/// Shared precomputed copies of the two lists above.
const std::vector<Mask>& canonical_menus_cached(int n);
const std::vector<Mask>& canonical_subsets_cached(int n);

class Universe {
 public:
  explicit Universe(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }
  /// Throws Errc::unknown_alternative for labels not in the universe.
  int index_of(std::string_view label) const;
  Mask full() const { return (Mask{1} << size()) - 1; }

  std::vector<std::string> menu_labels(Mask menu) const;
  std::string menu_string(Mask menu) const;  // "{a,b,k}"

  bool operator==(const Universe& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
};

/// Default universe with labels "a", "b", "c", ...
Universe default_universe(int n);

struct Observation {
  Mask menu = 0;
  Mask choice = 0;
};

/// A total choice correspondence: every nonempty menu is mapped to a
/// nonempty subset of itself.
class ChoiceCorrespondence {
 public:
  /// Takes a table indexed by menu mask (entry 0 unused); validates
  /// nonemptiness and containment for every menu.
  ChoiceCorrespondence(Universe universe, std::vector<Mask> table);

  /// Builds from explicit (menu, choice) entries. Singleton menus may be
  /// omitted and are auto-filled. Throws missing_menu, choice_outside_menu,
  /// empty_choice, duplicate_conflict.
  static ChoiceCorrespondence build(const Universe& universe,
                                    const std::vector<Observation>& entries);

  const Universe& universe() const { return universe_; }
  int n() const { return universe_.size(); }
  Mask choice(Mask menu) const { return table_[menu]; }

  bool operator==(const ChoiceCorrespondence& other) const {
    return universe_ == other.universe_ && table_ == other.table_;
  }

 private:
  friend class CorrespondenceEnumerator;
  Universe universe_;
  std::vector<Mask> table_;  // indexed by menu mask, size 2^n
};

enum class CompletionPolicy { full_menu, fail };

CompletionPolicy completion_policy_from_string(std::string_view name);

/// Observed (menu, choice) pairs; menus need not cover the power set.
/// Singleton menus are always determined (c({x}) = {x} is forced).
class PartialChoiceDataset {
 public:
  PartialChoiceDataset(Universe universe, std::vector<Observation> observations);

  const Universe& universe() const { return universe_; }
  int n() const { return universe_.size(); }
  /// Observations in canonical menu order, duplicates merged.
  const std::vector<Observation>& observations() const { return observations_; }

  /// The recorded (or forced singleton) choice, if determined.
  std::optional<Mask> choice(Mask menu) const;
  bool is_total() const;
  /// Menus with a determined choice, including implicit singletons.
  int determined_menus() const { return determined_; }

  /// Fills unobserved menus per policy. "full_menu" sets c(A) = A;
  /// "fail" throws incomplete_data when any menu is undetermined.
  ChoiceCorrespondence complete(CompletionPolicy policy) const;

 private:
  Universe universe_;
  std::vector<Observation> observations_;
  std::vector<Mask> table_;  // 0 = undetermined
  int determined_ = 0;
};

/// Non-owning uniform view over a total correspondence or a partial dataset,
/// used by the axiom checkers.
class ChoiceView {
 public:
  ChoiceView(const ChoiceCorrespondence& c)  // NOLINT(runtime/explicit)
      : correspondence_(&c) {}
  ChoiceView(const PartialChoiceDataset& d)  // NOLINT(runtime/explicit)
      : dataset_(&d) {}

  const Universe& universe() const {
    return correspondence_ ? correspondence_->universe() : dataset_->universe();
  }
  int n() const { return universe().size(); }
  bool total() const {
    return correspondence_ != nullptr || dataset_->is_total();
  }

  std::optional<Mask> choice(Mask menu) const {
    if (correspondence_) return correspondence_->choice(menu);
    return dataset_->choice(menu);
  }

  /// Determined menus in canonical order (all menus for a total view).
  std::vector<Mask> determined_menus() const;

 private:
  const ChoiceCorrespondence* correspondence_ = nullptr;
  const PartialChoiceDataset* dataset_ = nullptr;
};

}  // namespace revpref
