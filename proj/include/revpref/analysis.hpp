#pragma once

#include <optional>
#include <string>

#include "revpref/axioms.hpp"
#include "revpref/core.hpp"
#include "revpref/json_io.hpp"
#include "revpref/relations.hpp"

// End-to-end analysis of one dataset: all axiom verdicts, revealed
// relations, preference properties, rationalization, reference points.

namespace revpref {

struct AnalysisReport {
  Universe universe;
  int observation_count = 0;
  int determined_menus = 0;
  bool total = false;
  std::optional<CompletionPolicy> completion;

  Verdict tau, rho, warp, v_axiom, delta;

  /// strict/weak revealed preferences need every binary menu.
  std::optional<BinaryRelation> strict_revealed_rel;
  std::optional<BinaryRelation> weak_revealed_rel;
  BinaryRelation v_rel{1};

  std::optional<bool> strict_is_pref, asymmetric, negatively_transitive;
  std::optional<bool> weak_complete, weak_transitive;

  /// Undetermined when the binary menus are not fully observed.
  Status rationalization = Status::undetermined;
  std::vector<RationalizationFailure> rationalization_failures;

  std::vector<ReferenceTriple> reference_points;
};

/// Runs every checker. With a completion policy the dataset is completed
/// first and all checks run on the total correspondence; otherwise partial
/// data yields three-valued verdicts.
AnalysisReport analyze(const PartialChoiceDataset& dataset,
                       std::optional<CompletionPolicy> completion = std::nullopt);

ordered_json analysis_to_json(const AnalysisReport& report);

/// Human-readable rendering, derived from the JSON report.
std::string render_analysis_text(const ordered_json& report);

}  // namespace revpref
