#include "revpref/generators.hpp"

#include <limits>
#include <random>

namespace revpref {

namespace {

unsigned __int128 correspondence_count_wide(int n) {
  if (n < 1 || n > kMaxEnumeration) {
    throw Error(Errc::universe_too_large,
                "exhaustive enumeration supports 1 <= n <= " +
                    std::to_string(kMaxEnumeration));
  }
  unsigned __int128 count = 1;
  for (Mask menu : canonical_menus(n)) {
    count *= (std::uint64_t{1} << popcount(menu)) - 1;
  }
  return count;
}

}  // namespace

std::uint64_t correspondence_count(int n) {
  unsigned __int128 count = correspondence_count_wide(n);
  if (count > std::numeric_limits<std::uint64_t>::max()) {
    throw Error(Errc::universe_too_large,
                "the correspondence count for n = " + std::to_string(n) +
                    " exceeds the 64-bit range");
  }
  return static_cast<std::uint64_t>(count);
}

Mask nth_nonempty_subset(int n, Mask menu, std::uint32_t k) {
  std::uint32_t bits = k + 1;  // 1 .. 2^|menu|-1, ascending maps to ascending masks
  Mask out = 0;
  int b = 0;
  for (int i = 0; i < n; ++i) {
    if (menu >> i & 1) {
      if (bits >> b & 1) out |= Mask{1} << i;
      ++b;
    }
  }
  return out;
}

namespace {

ChoiceCorrespondence init_enumerator(int n, std::uint64_t lo, std::uint64_t hi,
                                     std::vector<Mask>& menus,
                                     std::vector<std::uint32_t>& bases,
                                     std::vector<std::uint32_t>& digits) {
  if (lo > hi || static_cast<unsigned __int128>(hi) > correspondence_count_wide(n)) {
    throw Error(Errc::parse_error, "enumeration range out of bounds");
  }
  for (Mask menu : canonical_menus(n)) {
    if (popcount(menu) > 1) {
      menus.push_back(menu);
      bases.push_back((std::uint32_t{1} << popcount(menu)) - 1);
    }
  }
  // Decompose lo into mixed-radix digits, first menu fastest-varying.
  std::uint64_t rest = lo;
  std::vector<Mask> table(std::size_t{1} << n, 0);
  for (int i = 0; i < n; ++i) table[Mask{1} << i] = Mask{1} << i;
  for (std::size_t i = 0; i < menus.size(); ++i) {
    digits.push_back(static_cast<std::uint32_t>(rest % bases[i]));
    rest /= bases[i];
    table[menus[i]] = nth_nonempty_subset(n, menus[i], digits[i]);
  }
  return ChoiceCorrespondence(default_universe(n), std::move(table));
}

}  // namespace

CorrespondenceEnumerator::CorrespondenceEnumerator(int n)
    : CorrespondenceEnumerator(n, 0, correspondence_count(n)) {}

CorrespondenceEnumerator::CorrespondenceEnumerator(int n, std::uint64_t lo,
                                                   std::uint64_t hi)
    : current_(init_enumerator(n, lo, hi, menus_, bases_, digits_)),
      index_(lo),
      hi_(hi) {}

void CorrespondenceEnumerator::set_digit(std::size_t pos, std::uint32_t value) {
  digits_[pos] = value;
  current_.table_[menus_[pos]] =
      nth_nonempty_subset(current_.n(), menus_[pos], value);
}

bool CorrespondenceEnumerator::next() {
  if (!started_) {
    started_ = true;
    return index_ < hi_;
  }
  if (++index_ >= hi_) return false;
  for (std::size_t pos = 0;; ++pos) {
    if (digits_[pos] + 1 < bases_[pos]) {
      set_digit(pos, digits_[pos] + 1);
      return true;
    }
    set_digit(pos, 0);
  }
}

void sample_each(int n, int count, std::uint64_t seed,
                 const std::function<void(const ChoiceCorrespondence&)>& fn) {
  Universe universe = default_universe(n);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < count; ++i) {
    std::vector<Mask> table(std::size_t{1} << n, 0);
    for (Mask menu = 1; menu <= universe.full(); ++menu) {
      std::uint32_t base = (std::uint32_t{1} << popcount(menu)) - 1;
      table[menu] =
          nth_nonempty_subset(n, menu, static_cast<std::uint32_t>(rng() % base));
    }
    fn(ChoiceCorrespondence(universe, std::move(table)));
  }
}

std::vector<ChoiceCorrespondence> sample(int n, int count, std::uint64_t seed) {
  std::vector<ChoiceCorrespondence> out;
  out.reserve(count);
  sample_each(n, count, seed,
              [&out](const ChoiceCorrespondence& c) { out.push_back(c); });
  return out;
}

ChoiceCorrespondence from_preference(const Universe& universe,
                                     const BinaryRelation& r) {
  std::vector<Mask> table(std::size_t{1} << universe.size(), 0);
  for (Mask menu = 1; menu <= universe.full(); ++menu) {
    Mask choice = undominated(menu, r);
    if (choice == 0) {
      throw Error(Errc::empty_choice_under_relation,
                  "no undominated alternative on menu " + universe.menu_string(menu));
    }
    table[menu] = choice;
  }
  return ChoiceCorrespondence(universe, std::move(table));
}

ChoiceCorrespondence categorize_then_choose(
    const Universe& universe, const std::map<Mask, Categorization>& categorizations,
    const BinaryRelation& base_preference) {
  if (!is_weak_preference(base_preference)) {
    throw Error(Errc::parse_error, "base preference must be complete and transitive");
  }
  BinaryRelation strict = strict_from_weak(base_preference);
  std::vector<Mask> table(std::size_t{1} << universe.size(), 0);
  for (Mask menu = 1; menu <= universe.full(); ++menu) {
    auto it = categorizations.find(menu);
    if (it == categorizations.end()) {
      throw Error(Errc::missing_menu,
                  "no categorization for menu " + universe.menu_string(menu));
    }
    const Categorization& cat = it->second;
    Mask covered = 0;
    for (Mask block : cat.blocks) {
      if (block == 0 || (block & ~menu) != 0 || (block & covered) != 0) {
        throw Error(Errc::parse_error,
                    "blocks must be a partition of menu " + universe.menu_string(menu));
      }
      covered |= block;
    }
    if (covered != menu || cat.block_order.size() != cat.blocks.size()) {
      throw Error(Errc::parse_error,
                  "blocks must be a partition of menu " + universe.menu_string(menu) +
                      " with a total block ranking");
    }
    // Every category below the top-ranked one is dominated and discarded.
    Mask survivors = cat.blocks.at(cat.block_order.front());
    table[menu] = undominated(survivors, strict);
  }
  return ChoiceCorrespondence(universe, std::move(table));
}

namespace {

PartialChoiceDataset make_dataset(std::vector<std::string> labels,
                                  std::vector<std::pair<std::vector<int>, std::vector<int>>> obs) {
  Universe u(std::move(labels));
  std::vector<Observation> observations;
  for (auto& [menu, choice] : obs) {
    Mask m = 0, c = 0;
    for (int i : menu) m |= Mask{1} << i;
    for (int i : choice) c |= Mask{1} << i;
    observations.push_back({m, c});
  }
  return PartialChoiceDataset(std::move(u), std::move(observations));
}

std::vector<Fixture> make_fixtures() {
  std::vector<Fixture> out;

  // Grocery shop: pairwise choices form a preference, yet the full-menu
  // choice {a,d} keeps a dominated alternative.
  out.push_back(Fixture{
      "example1",
      make_dataset({"a", "b", "k", "d"},
                   {{{0, 1}, {0}},
                    {{0, 2}, {0}},
                    {{0, 3}, {0}},
                    {{1, 2}, {1, 2}},
                    {{2, 3}, {2}},
                    {{1, 3}, {1}},
                    {{0, 1, 2, 3}, {0, 3}}}),
      {{"tau", Status::satisfied},
       {"rho", Status::violated},
       {"warp", Status::violated},
       {"v_axiom", Status::undetermined},
       {"delta", Status::undetermined}}});

  // Vacation spots: the revealed preference is intransitive but the choices
  // are exactly its undominated sets. Total on {a,b,k}.
  out.push_back(Fixture{
      "example2",
      make_dataset({"a", "b", "k"},
                   {{{0}, {0}},
                    {{1}, {1}},
                    {{2}, {2}},
                    {{0, 1}, {0}},
                    {{1, 2}, {1, 2}},
                    {{0, 2}, {0, 2}},
                    {{0, 1, 2}, {0, 2}}}),
      {{"tau", Status::violated},
       {"rho", Status::satisfied},
       {"warp", Status::violated},
       {"v_axiom", Status::satisfied},
       {"delta", Status::satisfied}}});

  // Restaurant story: frog legs flip the chicken/steak-tartare choice.
  out.push_back(Fixture{
      "luce-raiffa",
      make_dataset({"x", "y", "z"}, {{{0, 1}, {1}}, {{0, 1, 2}, {0}}}),
      {{"tau", Status::undetermined},
       {"rho", Status::violated},
       {"warp", Status::violated},
       {"v_axiom", Status::undetermined},
       {"delta", Status::undetermined}}});

  // Four alternatives where only the pair {z,w} jointly overturns x over y.
  out.push_back(Fixture{
      "set-reference",
      make_dataset({"x", "y", "z", "w"},
                   {{{0, 1}, {0}},
                    {{0, 1, 2}, {0}},
                    {{0, 1, 3}, {0}},
                    {{0, 1, 2, 3}, {1}}}),
      {{"tau", Status::undetermined},
       {"rho", Status::violated},
       {"warp", Status::violated},
       {"v_axiom", Status::undetermined},
       {"delta", Status::undetermined}}});

  return out;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = make_fixtures();
  return all;
}

const Fixture& fixture(std::string_view name) {
  for (const Fixture& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw Error(Errc::parse_error, "unknown fixture '" + std::string(name) + "'");
}

std::vector<BinaryRelation> all_weak_preferences(int n) {
  if (n < 1 || n > 4) {
    throw Error(Errc::universe_too_large,
                "weak preference enumeration supports 1 <= n <= 4");
  }
  std::vector<BinaryRelation> out;
  int cells = n * n;
  for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << cells); ++bits) {
    BinaryRelation r(n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (bits >> (x * n + y) & 1) r.set(x, y);
      }
    }
    if (is_complete(r) && is_transitive(r)) out.push_back(r);
  }
  return out;
}

}  // namespace revpref
