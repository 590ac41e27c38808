#include "revpref/axioms.hpp"

#include <bit>

namespace revpref {

const char* status_name(Status s) {
  switch (s) {
    case Status::satisfied: return "satisfied";
    case Status::violated: return "violated";
    case Status::undetermined: return "undetermined";
  }
  return "unknown";
}

namespace {

enum class Truth : std::uint8_t { no, yes, unknown };

Mask bit(int i) { return Mask{1} << i; }

Truth member(const ChoiceView& c, Mask menu, int x) {
  auto ch = c.choice(menu);
  if (!ch) return Truth::unknown;
  return (*ch >> x & 1) ? Truth::yes : Truth::no;
}

Truth unique_choice(const ChoiceView& c, Mask menu, int x) {
  auto ch = c.choice(menu);
  if (!ch) return Truth::unknown;
  return *ch == bit(x) ? Truth::yes : Truth::no;
}

/// Accumulates violations and undecided instances into a Verdict.
struct Scan {
  explicit Scan(const CheckOptions& opt) : opt(opt) {}

  /// Returns true when the scan can stop.
  bool violation(Witness w) {
    ++verdict.violation_count;
    if (verdict.witnesses.size() < opt.max_witnesses) {
      verdict.witnesses.push_back(w);
    }
    return opt.first_only;
  }

  void undecided() { has_unknown = true; }

  Verdict finish() {
    if (verdict.violation_count > 0) {
      verdict.status = Status::violated;
    } else {
      verdict.status = has_unknown ? Status::undetermined : Status::satisfied;
    }
    return std::move(verdict);
  }

  const CheckOptions& opt;
  Verdict verdict;
  bool has_unknown = false;
};

}  // namespace

Verdict check_tau(const ChoiceView& c, const CheckOptions& opt) {
  int n = c.n();
  Scan scan(opt);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        // The x == z instantiation degenerates to "x ∈ c({x,y}) implies
        // {x} = c({x,y})", which is not part of the axiom; it is skipped.
        if (z == x) continue;
        Truth premise_zy = member(c, bit(z) | bit(y), z);
        if (premise_zy == Truth::no) continue;
        Truth premise_xz = unique_choice(c, bit(x) | bit(z), x);
        if (premise_xz == Truth::no) continue;
        Truth conclusion = unique_choice(c, bit(x) | bit(y), x);
        if (conclusion == Truth::yes) continue;
        if (premise_zy == Truth::yes && premise_xz == Truth::yes &&
            conclusion == Truth::no) {
          if (scan.violation(TauWitness{x, y, z})) return scan.finish();
        } else {
          scan.undecided();
        }
      }
    }
  }
  return scan.finish();
}

Verdict check_rho(const ChoiceView& c, const CheckOptions& opt) {
  int n = c.n();
  const auto& subsets = canonical_subsets_cached(n);
  Scan scan(opt);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      Mask mxy = bit(x) | bit(y);
      for (Mask b : subsets) {
        Mask mbx = b | bit(x);
        Mask mbxy = b | mxy;
        Truth in_xy = member(c, mxy, x);
        Truth in_bx = member(c, mbx, x);
        Truth in_bxy = member(c, mbxy, x);

        // forward: (x ∈ c({x,y}) ∧ x ∈ c(B∪{x}))  ⇒  x ∈ c(B∪{x,y})
        bool fwd_violated = in_xy == Truth::yes && in_bx == Truth::yes &&
                            in_bxy == Truth::no;
        bool fwd_known = fwd_violated || in_xy == Truth::no ||
                         in_bx == Truth::no || in_bxy == Truth::yes;
        // backward: x ∈ c(B∪{x,y})  ⇒  (x ∈ c({x,y}) ∧ x ∈ c(B∪{x}))
        bool bwd_violated = in_bxy == Truth::yes &&
                            (in_xy == Truth::no || in_bx == Truth::no);
        bool bwd_known = bwd_violated || in_bxy == Truth::no ||
                         (in_xy == Truth::yes && in_bx == Truth::yes);

        if (fwd_violated) {
          if (scan.violation(RhoWitness{x, y, b, true})) return scan.finish();
        }
        if (bwd_violated) {
          if (scan.violation(RhoWitness{x, y, b, false})) return scan.finish();
        }
        if (!fwd_violated && !bwd_violated && (!fwd_known || !bwd_known)) {
          scan.undecided();
        }
      }
    }
  }
  return scan.finish();
}

Verdict check_warp(const ChoiceView& c, const CheckOptions& opt) {
  int n = c.n();
  const auto& menus = canonical_menus_cached(n);
  Scan scan(opt);
  for (Mask a : menus) {
    for (Mask b : menus) {
      Mask common = a & b;
      if (popcount(common) < 2) continue;
      for (int x = 0; x < n; ++x) {
        if (!(common >> x & 1)) continue;
        Truth x_in_ca = member(c, a, x);
        if (x_in_ca == Truth::no) continue;
        Truth x_in_cb = member(c, b, x);
        if (x_in_cb == Truth::yes) continue;
        for (int y = 0; y < n; ++y) {
          if (y == x || !(common >> y & 1)) continue;
          Truth y_in_cb = member(c, b, y);
          if (y_in_cb == Truth::no) continue;
          if (x_in_ca == Truth::yes && y_in_cb == Truth::yes &&
              x_in_cb == Truth::no) {
            if (scan.violation(WarpWitness{a, b, x, y})) return scan.finish();
          } else {
            scan.undecided();
          }
        }
      }
    }
  }
  return scan.finish();
}

Verdict check_v_axiom(const ChoiceView& c, const CheckOptions& opt) {
  Scan scan(opt);
  if (!c.total()) {
    scan.undecided();
    return scan.finish();
  }
  BinaryRelation v = v_relation(c);
  for (Mask menu : canonical_menus_cached(c.n())) {
    Mask expected = v_maximal(menu, v);
    Mask actual = *c.choice(menu);
    if (expected != actual) {
      if (scan.violation(VAxiomWitness{menu, expected, actual})) {
        return scan.finish();
      }
    }
  }
  return scan.finish();
}

Verdict check_delta(const ChoiceView& c, const CheckOptions& opt) {
  Scan scan(opt);
  if (!c.total()) {
    scan.undecided();
    return scan.finish();
  }
  int n = c.n();
  const auto& menus = canonical_menus_cached(n);
  for (Mask s : menus) {
    Mask chosen = *c.choice(s);
    if (popcount(chosen) < 2) continue;
    for (Mask t : menus) {
      if (t == s || (s & t) != s) continue;  // S ⊊ T
      Mask ct = *c.choice(t);
      if (popcount(ct) != 1) continue;
      int x = std::countr_zero(ct);
      if (!(chosen >> x & 1)) continue;
      for (int y = 0; y < n; ++y) {
        if (y == x || !(chosen >> y & 1)) continue;
        if (scan.violation(DeltaWitness{s, t, x, y})) return scan.finish();
      }
    }
  }
  return scan.finish();
}

std::vector<ReferenceTriple> detect_reference_points(const ChoiceView& c) {
  int n = c.n();
  std::vector<ReferenceTriple> out;
  for (int z = 0; z < n; ++z) {
    for (int x = 0; x < n; ++x) {
      if (x == z) continue;
      for (int y = 0; y < n; ++y) {
        if (y == z || y == x) continue;
        Mask mxy = bit(x) | bit(y);
        Mask mxyz = mxy | bit(z);
        auto cxy = c.choice(mxy);
        auto cxyz = c.choice(mxyz);
        if (!cxy || !cxyz) continue;  // undecidable triple
        bool flips_in = (*cxyz >> x & 1) && !(*cxy >> x & 1);
        bool crowds_out = (*cxy >> y & 1) && (*cxyz & mxy) == bit(x);
        if (flips_in || crowds_out) out.push_back({z, x, y});
      }
    }
  }
  return out;
}

}  // namespace revpref
