#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "revpref/axioms.hpp"
#include "revpref/core.hpp"
#include "revpref/relations.hpp"
#include "revpref/verifier.hpp"

// JSON (de)serialization. Serializers emit alternatives in declaration
// order, observations in canonical menu order, and menu members in index
// order, so output is stable under re-serialization.

namespace revpref {

using ordered_json = nlohmann::ordered_json;

/// Schema: { "alternatives": ["a", ...],
///           "observations": [ { "menu": [...], "choice": [...] }, ... ] }
PartialChoiceDataset dataset_from_json(const ordered_json& j);
PartialChoiceDataset dataset_from_string(std::string_view text);

ordered_json dataset_to_json(const PartialChoiceDataset& d);
/// A total correspondence serializes as a dataset covering every menu.
ordered_json correspondence_to_json(const ChoiceCorrespondence& c);

/// Schema: { "relation": [ ["a","b"], ... ] } meaning holds(a, b).
ordered_json relation_to_json(const Universe& u, const BinaryRelation& r);
BinaryRelation relation_from_json(const Universe& u, const ordered_json& j);

ordered_json menu_to_json(const Universe& u, Mask menu);

/// { "axiom": "tau", "status": "violated", "violation_count": 3,
///   "witnesses": [ { "x": "a", "z": "b", "y": "k" } ] }
ordered_json verdict_to_json(const Universe& u, const std::string& axiom,
                             const Verdict& verdict);

ordered_json error_to_json(const Error& e);

ordered_json verification_report_to_json(const VerificationReport& report);

}  // namespace revpref
