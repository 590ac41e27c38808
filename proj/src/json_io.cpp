#include "revpref/json_io.hpp"

namespace revpref {

namespace {

Mask menu_from_json(const Universe& u, const ordered_json& arr) {
  if (!arr.is_array()) {
    throw Error(Errc::parse_error, "menu must be an array of labels");
  }
  Mask m = 0;
  for (const auto& item : arr) {
    if (!item.is_string()) {
      throw Error(Errc::parse_error, "alternative labels must be strings");
    }
    m |= Mask{1} << u.index_of(item.get<std::string>());
  }
  return m;
}

}  // namespace

ordered_json menu_to_json(const Universe& u, Mask menu) {
  return ordered_json(u.menu_labels(menu));
}

PartialChoiceDataset dataset_from_json(const ordered_json& j) {
  if (!j.is_object() || !j.contains("alternatives") || !j.contains("observations")) {
    throw Error(Errc::parse_error,
                "dataset must be an object with 'alternatives' and 'observations'");
  }
  if (!j["alternatives"].is_array()) {
    throw Error(Errc::parse_error, "'alternatives' must be an array of strings");
  }
  std::vector<std::string> labels;
  for (const auto& a : j["alternatives"]) {
    if (!a.is_string()) {
      throw Error(Errc::parse_error, "'alternatives' must be an array of strings");
    }
    labels.push_back(a.get<std::string>());
  }
  Universe u(std::move(labels));
  if (!j["observations"].is_array()) {
    throw Error(Errc::parse_error, "'observations' must be an array");
  }
  std::vector<Observation> obs;
  for (const auto& o : j["observations"]) {
    if (!o.is_object() || !o.contains("menu") || !o.contains("choice")) {
      throw Error(Errc::parse_error, "each observation needs 'menu' and 'choice'");
    }
    obs.push_back({menu_from_json(u, o["menu"]), menu_from_json(u, o["choice"])});
  }
  return PartialChoiceDataset(std::move(u), std::move(obs));
}

PartialChoiceDataset dataset_from_string(std::string_view text) {
  ordered_json j = ordered_json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw Error(Errc::parse_error, "input is not valid JSON");
  }
  return dataset_from_json(j);
}

ordered_json dataset_to_json(const PartialChoiceDataset& d) {
  const Universe& u = d.universe();
  ordered_json j;
  j["alternatives"] = u.labels();
  j["observations"] = ordered_json::array();
  for (const Observation& o : d.observations()) {
    ordered_json entry;
    entry["menu"] = menu_to_json(u, o.menu);
    entry["choice"] = menu_to_json(u, o.choice);
    j["observations"].push_back(std::move(entry));
  }
  return j;
}

ordered_json correspondence_to_json(const ChoiceCorrespondence& c) {
  const Universe& u = c.universe();
  ordered_json j;
  j["alternatives"] = u.labels();
  j["observations"] = ordered_json::array();
  for (Mask menu : canonical_menus_cached(c.n())) {
    ordered_json entry;
    entry["menu"] = menu_to_json(u, menu);
    entry["choice"] = menu_to_json(u, c.choice(menu));
    j["observations"].push_back(std::move(entry));
  }
  return j;
}

ordered_json relation_to_json(const Universe& u, const BinaryRelation& r) {
  ordered_json pairs = ordered_json::array();
  for (int x = 0; x < r.size(); ++x) {
    for (int y = 0; y < r.size(); ++y) {
      if (r.holds(x, y)) pairs.push_back({u.label(x), u.label(y)});
    }
  }
  return ordered_json{{"relation", std::move(pairs)}};
}

BinaryRelation relation_from_json(const Universe& u, const ordered_json& j) {
  if (!j.is_object() || !j.contains("relation") || !j["relation"].is_array()) {
    throw Error(Errc::parse_error, "relation must be { \"relation\": [[x,y], ...] }");
  }
  BinaryRelation r(u.size());
  for (const auto& pair : j["relation"]) {
    if (!pair.is_array() || pair.size() != 2) {
      throw Error(Errc::parse_error, "relation entries must be [x, y] pairs");
    }
    r.set(u.index_of(pair[0].get<std::string>()),
          u.index_of(pair[1].get<std::string>()));
  }
  return r;
}

namespace {

struct WitnessToJson {
  const Universe& u;

  ordered_json operator()(const TauWitness& w) const {
    return {{"x", u.label(w.x)}, {"z", u.label(w.z)}, {"y", u.label(w.y)}};
  }
  ordered_json operator()(const RhoWitness& w) const {
    return {{"x", u.label(w.x)},
            {"y", u.label(w.y)},
            {"B", menu_to_json(u, w.b)},
            {"direction", w.forward ? "forward" : "backward"}};
  }
  ordered_json operator()(const WarpWitness& w) const {
    return {{"A", menu_to_json(u, w.a)},
            {"B", menu_to_json(u, w.b)},
            {"x", u.label(w.x)},
            {"y", u.label(w.y)}};
  }
  ordered_json operator()(const DeltaWitness& w) const {
    return {{"S", menu_to_json(u, w.s)},
            {"T", menu_to_json(u, w.t)},
            {"x", u.label(w.x)},
            {"y", u.label(w.y)}};
  }
  ordered_json operator()(const VAxiomWitness& w) const {
    return {{"menu", menu_to_json(u, w.menu)},
            {"expected", menu_to_json(u, w.expected)},
            {"actual", menu_to_json(u, w.actual)}};
  }
};

}  // namespace

ordered_json verdict_to_json(const Universe& u, const std::string& axiom,
                             const Verdict& verdict) {
  ordered_json j;
  j["axiom"] = axiom;
  j["status"] = status_name(verdict.status);
  j["violation_count"] = verdict.violation_count;
  j["witnesses"] = ordered_json::array();
  for (const Witness& w : verdict.witnesses) {
    j["witnesses"].push_back(std::visit(WitnessToJson{u}, w));
  }
  return j;
}

ordered_json error_to_json(const Error& e) {
  return ordered_json{{"error", {{"code", errc_name(e.code())}, {"message", e.what()}}}};
}

ordered_json verification_report_to_json(const VerificationReport& report) {
  ordered_json j;
  j["claim"] = report.claim;
  j["n"] = report.n;
  j["shards"] = report.shards;
  j["shard"] = report.shard;
  j["range"] = {report.range_lo, report.range_hi};
  j["total_instances"] = report.total_instances;
  j["instances_checked"] = report.instances_checked;
  j["verified"] = report.verified();
  j["counterexamples"] = ordered_json::array();
  for (const auto& ce : report.counterexamples) {
    j["counterexamples"].push_back(
        {{"index", ce.index},
         {"detail", ce.detail},
         {"correspondence", ordered_json::parse(ce.correspondence_json)}});
  }
  j["stats"] = report.stats;
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j;
}

}  // namespace revpref
