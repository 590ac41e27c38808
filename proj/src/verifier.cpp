#include "revpref/verifier.hpp"

#include <algorithm>
#include <chrono>

#include "revpref/axioms.hpp"
#include "revpref/generators.hpp"
#include "revpref/json_io.hpp"
#include "revpref/relations.hpp"

namespace revpref {

Claim claim_from_string(std::string_view name) {
  if (name == "prop-tau") return Claim::prop_tau;
  if (name == "prop-rho") return Claim::prop_rho;
  if (name == "theorem1") return Claim::theorem1;
  if (name == "lemma1") return Claim::lemma1;
  if (name == "warp") return Claim::warp;
  if (name == "delta") return Claim::delta;
  throw Error(Errc::parse_error, "unknown claim '" + std::string(name) + "'");
}

const char* claim_name(Claim claim) {
  switch (claim) {
    case Claim::prop_tau: return "prop-tau";
    case Claim::prop_rho: return "prop-rho";
    case Claim::theorem1: return "theorem1";
    case Claim::lemma1: return "lemma1";
    case Claim::warp: return "warp";
    case Claim::delta: return "delta";
  }
  return "unknown";
}

namespace {

struct BiconditionalFailure {
  bool failed = false;
  std::string detail;
};

std::string yn(bool b) { return b ? "true" : "false"; }

BiconditionalFailure check_instance(Claim claim, const ChoiceCorrespondence& c,
                                    std::map<std::string, std::uint64_t>& stats) {
  ChoiceView view(c);
  switch (claim) {
    case Claim::prop_tau: {
      bool lhs = tau_holds(view);
      bool rhs = is_strict_preference(strict_revealed(view));
      if (lhs != rhs) {
        return {true, "tau=" + yn(lhs) + " but preference=" + yn(rhs)};
      }
      return {};
    }
    case Claim::prop_rho: {
      bool lhs = rho_holds(view);
      bool rhs = rationalizes(view, strict_revealed(view)).ok;
      if (lhs != rhs) {
        return {true, "rho=" + yn(lhs) + " but rationalizes=" + yn(rhs)};
      }
      return {};
    }
    case Claim::theorem1: {
      bool lhs = tau_holds(view) && rho_holds(view);
      BinaryRelation strict = strict_revealed(view);
      bool rhs = is_strict_preference(strict) && rationalizes(view, strict).ok;
      if (lhs != rhs) {
        return {true, "tau&rho=" + yn(lhs) + " but preference&rationalizes=" + yn(rhs)};
      }
      return {};
    }
    case Claim::lemma1: {
      bool lhs = v_axiom_holds(view);
      bool rhs = rationalizes(view, strict_revealed(view)).ok;
      if (lhs != rhs) {
        return {true, "v_axiom=" + yn(lhs) + " but rationalizes=" + yn(rhs)};
      }
      if (lhs && !(v_relation(view) == weak_revealed(view))) {
        return {true, "normal correspondence with V != weak revealed preference"};
      }
      return {};
    }
    case Claim::warp: {
      bool lhs = warp_holds(view);
      bool rhs = tau_holds(view) && rho_holds(view);
      if (lhs != rhs) {
        return {true, "warp=" + yn(lhs) + " but tau&rho=" + yn(rhs)};
      }
      return {};
    }
    case Claim::delta: {
      if (!v_axiom_holds(view)) return {};  // implication is scoped to normal c
      ++stats["normal"];
      bool tau = tau_holds(view);
      bool delta = delta_holds(view);
      if (tau && !delta) {
        return {true, "normal correspondence with tau satisfied but delta violated"};
      }
      if (delta && !tau) ++stats["delta_not_tau_normal"];
      return {};
    }
  }
  return {};
}

}  // namespace

VerificationReport verify(Claim claim, int n, int shards, int shard) {
  if (n < 1 || n > kMaxEnumeration) {
    throw Error(Errc::universe_too_large,
                "verification supports 1 <= n <= " + std::to_string(kMaxEnumeration));
  }
  if (shards < 1 || shard < 0 || shard >= shards) {
    throw Error(Errc::parse_error, "shard index must satisfy 0 <= shard < shards");
  }
  if (n == kMaxEnumeration) {
    throw Error(Errc::universe_too_large,
                "n = 5 has ~3.9e20 instances, beyond the 64-bit index range; "
                "scan explicit slices with the enumerator instead");
  }

  std::uint64_t total = correspondence_count(n);
  std::uint64_t lo = total / shards * shard + std::min<std::uint64_t>(shard, total % shards);
  std::uint64_t len = total / shards + (static_cast<std::uint64_t>(shard) < total % shards);
  std::uint64_t hi = lo + len;

  VerificationReport report;
  report.claim = claim_name(claim);
  report.n = n;
  report.shards = shards;
  report.shard = shard;
  report.range_lo = lo;
  report.range_hi = hi;
  report.total_instances = total;

  auto start = std::chrono::steady_clock::now();
  CorrespondenceEnumerator e(n, lo, hi);
  while (e.next()) {
    ++report.instances_checked;
    BiconditionalFailure failure = check_instance(claim, e.current(), report.stats);
    if (failure.failed) {
      report.counterexamples.push_back(
          {e.index(), failure.detail, correspondence_to_json(e.current()).dump()});
      if (report.counterexamples.size() >= kMaxCounterexamples) break;
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace revpref
