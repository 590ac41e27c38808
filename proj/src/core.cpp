#include "revpref/core.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace revpref {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::missing_menu: return "MissingMenu";
    case Errc::choice_outside_menu: return "ChoiceOutsideMenu";
    case Errc::empty_choice: return "EmptyChoice";
    case Errc::duplicate_conflict: return "DuplicateConflict";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_alternative: return "UnknownAlternative";
    case Errc::incomplete_data: return "IncompleteData";
    case Errc::universe_too_large: return "UniverseTooLarge";
    case Errc::empty_choice_under_relation: return "EmptyChoiceUnderRelation";
  }
  return "Unknown";
}

int popcount(Mask m) { return std::popcount(m); }

bool canonical_less(Mask a, Mask b) {
  int ca = popcount(a), cb = popcount(b);
  return ca != cb ? ca < cb : a < b;
}

std::vector<Mask> canonical_subsets(int n) {
  std::vector<Mask> out;
  out.reserve(std::size_t{1} << n);
  for (Mask m = 0; m < (Mask{1} << n); ++m) out.push_back(m);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<Mask> canonical_menus(int n) {
  std::vector<Mask> out = canonical_subsets(n);
  out.erase(out.begin());  // drop the empty set
  return out;
}

namespace {

std::array<std::vector<Mask>, kMaxUniverse + 1> build_subset_cache() {
  std::array<std::vector<Mask>, kMaxUniverse + 1> cache;
  for (int n = 1; n <= kMaxUniverse; ++n) cache[n] = canonical_subsets(n);
  return cache;
}

std::array<std::vector<Mask>, kMaxUniverse + 1> build_menu_cache() {
  std::array<std::vector<Mask>, kMaxUniverse + 1> cache;
  for (int n = 1; n <= kMaxUniverse; ++n) cache[n] = canonical_menus(n);
  return cache;
}

}  // namespace

const std::vector<Mask>& canonical_subsets_cached(int n) {
  static const auto cache = build_subset_cache();
  return cache.at(n);
}

const std::vector<Mask>& canonical_menus_cached(int n) {
  static const auto cache = build_menu_cache();
  return cache.at(n);
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw Error(Errc::parse_error, "universe must contain at least one alternative");
  }
  if (static_cast<int>(labels_.size()) > kMaxUniverse) {
    throw Error(Errc::universe_too_large,
                "universe has " + std::to_string(labels_.size()) +
                    " alternatives; the cap is " + std::to_string(kMaxUniverse));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    for (std::size_t j = i + 1; j < labels_.size(); ++j) {
      if (labels_[i] == labels_[j]) {
        throw Error(Errc::parse_error, "duplicate alternative label '" + labels_[i] + "'");
      }
    }
  }
}

int Universe::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<int>(i);
  }
  throw Error(Errc::unknown_alternative,
              "unknown alternative '" + std::string(label) + "'");
}

std::vector<std::string> Universe::menu_labels(Mask menu) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (menu >> i & 1) out.push_back(labels_[i]);
  }
  return out;
}

std::string Universe::menu_string(Mask menu) const {
  std::string out = "{";
  bool first = true;
  for (const auto& l : menu_labels(menu)) {
    if (!first) out += ",";
    out += l;
    first = false;
  }
  return out + "}";
}

Universe default_universe(int n) {
  if (n < 1 || n > kMaxUniverse) {
    throw Error(Errc::universe_too_large,
                "universe size must be between 1 and " + std::to_string(kMaxUniverse));
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Universe(std::move(labels));
}

namespace {

void validate_entry(const Universe& u, Mask menu, Mask choice) {
  if (menu == 0 || (menu & ~u.full()) != 0) {
    throw Error(Errc::parse_error, "menu is empty or out of range");
  }
  if (choice == 0) {
    throw Error(Errc::empty_choice, "empty choice from menu " + u.menu_string(menu));
  }
  if ((choice & ~menu) != 0) {
    throw Error(Errc::choice_outside_menu,
                "choice " + u.menu_string(choice) + " is not a subset of menu " +
                    u.menu_string(menu));
  }
}

}  // namespace

ChoiceCorrespondence::ChoiceCorrespondence(Universe universe, std::vector<Mask> table)
    : universe_(std::move(universe)), table_(std::move(table)) {
  if (table_.size() != (std::size_t{1} << universe_.size())) {
    throw Error(Errc::parse_error, "correspondence table has the wrong size");
  }
  for (Mask menu = 1; menu <= universe_.full(); ++menu) {
    validate_entry(universe_, menu, table_[menu]);
  }
}

ChoiceCorrespondence ChoiceCorrespondence::build(const Universe& universe,
                                                 const std::vector<Observation>& entries) {
  std::vector<Mask> table(std::size_t{1} << universe.size(), 0);
  for (const auto& e : entries) {
    validate_entry(universe, e.menu, e.choice);
    if (table[e.menu] != 0 && table[e.menu] != e.choice) {
      throw Error(Errc::duplicate_conflict,
                  "menu " + universe.menu_string(e.menu) + " listed twice with different choices");
    }
    table[e.menu] = e.choice;
  }
  for (int i = 0; i < universe.size(); ++i) {
    Mask s = Mask{1} << i;
    if (table[s] == 0) table[s] = s;
  }
  for (Mask menu = 1; menu <= universe.full(); ++menu) {
    if (table[menu] == 0) {
      throw Error(Errc::missing_menu, "no entry for menu " + universe.menu_string(menu));
    }
  }
  return ChoiceCorrespondence(universe, std::move(table));
}

PartialChoiceDataset::PartialChoiceDataset(Universe universe,
                                           std::vector<Observation> observations)
    : universe_(std::move(universe)),
      table_(std::size_t{1} << universe_.size(), 0) {
  for (const auto& o : observations) {
    validate_entry(universe_, o.menu, o.choice);
    if (table_[o.menu] != 0 && table_[o.menu] != o.choice) {
      throw Error(Errc::duplicate_conflict,
                  "menu " + universe_.menu_string(o.menu) +
                      " observed twice with different choices");
    }
    table_[o.menu] = o.choice;
  }
  // Singleton choices are forced; a recorded singleton observation already
  // satisfies choice == menu by the containment checks above.
  for (int i = 0; i < universe_.size(); ++i) {
    table_[Mask{1} << i] = Mask{1} << i;
  }
  for (Mask menu = 1; menu <= universe_.full(); ++menu) {
    if (table_[menu] != 0) {
      ++determined_;
      if (popcount(menu) > 1) observations_.push_back({menu, table_[menu]});
    }
  }
  // Keep explicitly observed singletons in the observation list.
  for (const auto& o : observations) {
    if (popcount(o.menu) == 1) {
      observations_.push_back(o);
    }
  }
  std::sort(observations_.begin(), observations_.end(),
            [](const Observation& a, const Observation& b) {
              return canonical_less(a.menu, b.menu);
            });
  observations_.erase(std::unique(observations_.begin(), observations_.end(),
                                  [](const Observation& a, const Observation& b) {
                                    return a.menu == b.menu;
                                  }),
                      observations_.end());
}

std::optional<Mask> PartialChoiceDataset::choice(Mask menu) const {
  Mask c = table_[menu];
  if (c == 0) return std::nullopt;
  return c;
}

bool PartialChoiceDataset::is_total() const {
  return determined_ == static_cast<int>(universe_.full());
}

ChoiceCorrespondence PartialChoiceDataset::complete(CompletionPolicy policy) const {
  std::vector<Mask> table = table_;
  for (Mask menu = 1; menu <= universe_.full(); ++menu) {
    if (table[menu] == 0) {
      if (policy == CompletionPolicy::fail) {
        throw Error(Errc::incomplete_data,
                    "no observation for menu " + universe_.menu_string(menu));
      }
      table[menu] = menu;  // full-menu policy
    }
  }
  return ChoiceCorrespondence(universe_, std::move(table));
}

CompletionPolicy completion_policy_from_string(std::string_view name) {
  if (name == "full-menu") return CompletionPolicy::full_menu;
  if (name == "fail") return CompletionPolicy::fail;
  throw Error(Errc::parse_error, "unknown completion policy '" + std::string(name) + "'");
}

std::vector<Mask> ChoiceView::determined_menus() const {
  std::vector<Mask> out;
  for (Mask menu : canonical_menus(n())) {
    if (choice(menu).has_value()) out.push_back(menu);
  }
  return out;
}

}  // namespace revpref
