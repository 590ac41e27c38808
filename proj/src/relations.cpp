#include "revpref/relations.hpp"

namespace revpref {

namespace {

Mask pair_menu(int x, int y) { return (Mask{1} << x) | (Mask{1} << y); }

Mask require_choice(const ChoiceView& c, Mask menu) {
  auto ch = c.choice(menu);
  if (!ch) {
    throw Error(Errc::incomplete_data,
                "menu " + c.universe().menu_string(menu) +
                    " is unobserved; revealed preference needs all binary menus");
  }
  return *ch;
}

}  // namespace

bool binary_complete(const ChoiceView& c) {
  int n = c.n();
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      if (!c.choice(pair_menu(x, y))) return false;
    }
  }
  return true;
}

BinaryRelation strict_revealed(const ChoiceView& c) {
  int n = c.n();
  BinaryRelation r(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (require_choice(c, pair_menu(x, y)) == Mask{1} << x) r.set(x, y);
    }
  }
  return r;
}

BinaryRelation weak_revealed(const ChoiceView& c) {
  int n = c.n();
  BinaryRelation r(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (require_choice(c, pair_menu(x, y)) >> x & 1) r.set(x, y);
    }
  }
  return r;
}

BinaryRelation strict_from_weak(const BinaryRelation& r) {
  int n = r.size();
  BinaryRelation out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.holds(x, y) && !r.holds(y, x)) out.set(x, y);
    }
  }
  return out;
}

BinaryRelation weak_from_strict(const BinaryRelation& r) {
  int n = r.size();
  BinaryRelation out(n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!r.holds(y, x)) out.set(x, y);
    }
  }
  return out;
}

bool is_asymmetric(const BinaryRelation& r) {
  for (int x = 0; x < r.size(); ++x) {
    for (int y = 0; y < r.size(); ++y) {
      if (r.holds(x, y) && r.holds(y, x)) return false;
    }
  }
  return true;
}

bool is_negatively_transitive(const BinaryRelation& r) {
  return !negative_transitivity_witness(r).has_value();
}

std::optional<Triple> negative_transitivity_witness(const BinaryRelation& r) {
  int n = r.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (r.holds(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (!r.holds(y, z) && r.holds(x, z)) return Triple{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool is_complete(const BinaryRelation& r) {
  for (int x = 0; x < r.size(); ++x) {
    for (int y = 0; y < r.size(); ++y) {
      if (!r.holds(x, y) && !r.holds(y, x)) return false;
    }
  }
  return true;
}

bool is_transitive(const BinaryRelation& r) {
  int n = r.size();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!r.holds(x, y)) continue;
      for (int z = 0; z < n; ++z) {
        if (r.holds(y, z) && !r.holds(x, z)) return false;
      }
    }
  }
  return true;
}

bool is_strict_preference(const BinaryRelation& r) {
  return is_asymmetric(r) && is_negatively_transitive(r);
}

bool is_weak_preference(const BinaryRelation& r) {
  return is_complete(r) && is_transitive(r);
}

Mask undominated(Mask menu, const BinaryRelation& r) {
  Mask out = 0;
  for (int x = 0; x < r.size(); ++x) {
    if (!(menu >> x & 1)) continue;
    bool dominated = false;
    for (int y = 0; y < r.size(); ++y) {
      if ((menu >> y & 1) && r.holds(y, x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out |= Mask{1} << x;
  }
  return out;
}

Mask v_maximal(Mask menu, const BinaryRelation& v) {
  Mask out = 0;
  for (int x = 0; x < v.size(); ++x) {
    if (!(menu >> x & 1)) continue;
    if ((v.row(x) & menu) == menu) out |= Mask{1} << x;
  }
  return out;
}

BinaryRelation v_relation(const ChoiceView& c) {
  int n = c.n();
  BinaryRelation v(n);
  for (Mask menu = 1; menu <= c.universe().full(); ++menu) {
    auto ch = c.choice(menu);
    if (!ch) continue;
    for (int x = 0; x < n; ++x) {
      if (*ch >> x & 1) {
        for (int y = 0; y < n; ++y) {
          if (menu >> y & 1) v.set(x, y);
        }
      }
    }
  }
  return v;
}

RationalizationResult rationalizes(const ChoiceView& c, const BinaryRelation& r,
                                   bool all_failures) {
  RationalizationResult result;
  for (Mask menu : canonical_menus_cached(c.n())) {
    auto ch = c.choice(menu);
    if (!ch) continue;
    Mask expected = undominated(menu, r);
    if (*ch != expected) {
      result.ok = false;
      result.failures.push_back({menu, expected, *ch});
      if (!all_failures) break;
    }
  }
  return result;
}

}  // namespace revpref
