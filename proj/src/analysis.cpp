#include "revpref/analysis.hpp"

#include <sstream>

namespace revpref {

namespace {

void fill_from_view(AnalysisReport& report, const ChoiceView& view) {
  report.tau = check_tau(view);
  report.rho = check_rho(view);
  report.warp = check_warp(view);
  report.v_axiom = check_v_axiom(view);
  report.delta = check_delta(view);

  report.v_rel = v_relation(view);
  if (binary_complete(view)) {
    BinaryRelation strict = strict_revealed(view);
    BinaryRelation weak = weak_revealed(view);
    report.asymmetric = is_asymmetric(strict);
    report.negatively_transitive = is_negatively_transitive(strict);
    report.strict_is_pref = *report.asymmetric && *report.negatively_transitive;
    report.weak_complete = is_complete(weak);
    report.weak_transitive = is_transitive(weak);

    RationalizationResult rat = rationalizes(view, strict);
    report.rationalization = rat.ok ? Status::satisfied : Status::violated;
    report.rationalization_failures = std::move(rat.failures);

    report.strict_revealed_rel = std::move(strict);
    report.weak_revealed_rel = std::move(weak);
  }
  report.reference_points = detect_reference_points(view);
}

}  // namespace

AnalysisReport analyze(const PartialChoiceDataset& dataset,
                       std::optional<CompletionPolicy> completion) {
  AnalysisReport report{dataset.universe()};
  report.observation_count = static_cast<int>(dataset.observations().size());
  report.completion = completion;
  if (completion) {
    ChoiceCorrespondence total = dataset.complete(*completion);
    report.total = true;
    report.determined_menus = static_cast<int>(dataset.universe().full());
    fill_from_view(report, total);
  } else {
    report.total = dataset.is_total();
    report.determined_menus = dataset.determined_menus();
    fill_from_view(report, dataset);
  }
  return report;
}

namespace {

ordered_json relation_pairs_or_null(const Universe& u,
                                    const std::optional<BinaryRelation>& r) {
  if (!r) return nullptr;
  return relation_to_json(u, *r)["relation"];
}

ordered_json opt_bool(const std::optional<bool>& b) {
  if (!b) return nullptr;
  return *b;
}

}  // namespace

ordered_json analysis_to_json(const AnalysisReport& report) {
  const Universe& u = report.universe;
  int menu_count = static_cast<int>(u.full());

  ordered_json j;
  j["dataset"] = {{"alternatives", u.labels()},
                  {"n", u.size()},
                  {"observations", report.observation_count},
                  {"determined_menus", report.determined_menus},
                  {"menu_count", menu_count},
                  {"coverage", static_cast<double>(report.determined_menus) / menu_count},
                  {"total", report.total}};
  j["completion"] =
      report.completion
          ? ordered_json(*report.completion == CompletionPolicy::full_menu ? "full-menu"
                                                                           : "fail")
          : ordered_json(nullptr);
  j["axioms"] = {{"tau", verdict_to_json(u, "tau", report.tau)},
                 {"rho", verdict_to_json(u, "rho", report.rho)},
                 {"warp", verdict_to_json(u, "warp", report.warp)},
                 {"v_axiom", verdict_to_json(u, "v_axiom", report.v_axiom)},
                 {"delta", verdict_to_json(u, "delta", report.delta)}};
  j["relations"] = {
      {"strict_revealed", relation_pairs_or_null(u, report.strict_revealed_rel)},
      {"weak_revealed", relation_pairs_or_null(u, report.weak_revealed_rel)},
      {"v", relation_to_json(u, report.v_rel)["relation"]}};
  j["preference"] = {{"strict_is_preference", opt_bool(report.strict_is_pref)},
                     {"asymmetric", opt_bool(report.asymmetric)},
                     {"negatively_transitive", opt_bool(report.negatively_transitive)},
                     {"weak_complete", opt_bool(report.weak_complete)},
                     {"weak_transitive", opt_bool(report.weak_transitive)}};
  ordered_json failures = ordered_json::array();
  for (const auto& f : report.rationalization_failures) {
    failures.push_back({{"menu", menu_to_json(u, f.menu)},
                        {"expected", menu_to_json(u, f.expected)},
                        {"actual", menu_to_json(u, f.actual)}});
  }
  const char* rat_status = report.rationalization == Status::satisfied ? "success"
                           : report.rationalization == Status::violated
                               ? "failure"
                               : "undetermined";
  j["rationalization"] = {{"status", rat_status}, {"failures", std::move(failures)}};
  ordered_json refs = ordered_json::array();
  for (const auto& t : report.reference_points) {
    refs.push_back({{"z", u.label(t.z)}, {"x", u.label(t.x)}, {"y", u.label(t.y)}});
  }
  j["reference_points"] = std::move(refs);
  return j;
}

namespace {

std::string join_labels(const ordered_json& arr) {
  std::string out = "{";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) out += ",";
    out += arr[i].get<std::string>();
  }
  return out + "}";
}

std::string witness_line(const std::string& axiom, const ordered_json& w) {
  std::ostringstream os;
  if (axiom == "tau") {
    os << "x=" << w["x"].get<std::string>() << ", z=" << w["z"].get<std::string>()
       << ", y=" << w["y"].get<std::string>();
  } else if (axiom == "rho") {
    os << "x=" << w["x"].get<std::string>() << ", y=" << w["y"].get<std::string>()
       << ", B=" << join_labels(w["B"]) << ", " << w["direction"].get<std::string>();
  } else if (axiom == "warp") {
    os << "A=" << join_labels(w["A"]) << ", B=" << join_labels(w["B"])
       << ", x=" << w["x"].get<std::string>() << ", y=" << w["y"].get<std::string>();
  } else if (axiom == "delta") {
    os << "S=" << join_labels(w["S"]) << ", T=" << join_labels(w["T"])
       << ", x=" << w["x"].get<std::string>() << ", y=" << w["y"].get<std::string>();
  } else {
    os << "menu=" << join_labels(w["menu"]) << ", expected=" << join_labels(w["expected"])
       << ", actual=" << join_labels(w["actual"]);
  }
  return os.str();
}

}  // namespace

std::string render_analysis_text(const ordered_json& j) {
  std::ostringstream os;
  const auto& ds = j["dataset"];
  os << "dataset: n=" << ds["n"] << ", observations=" << ds["observations"]
     << ", determined " << ds["determined_menus"] << "/" << ds["menu_count"]
     << " menus" << (ds["total"].get<bool>() ? " (total)" : "") << "\n";
  if (!j["completion"].is_null()) {
    os << "completion: " << j["completion"].get<std::string>() << "\n";
  }
  for (const auto& [name, verdict] : j["axioms"].items()) {
    os << "axiom " << name << ": " << verdict["status"].get<std::string>();
    if (verdict["violation_count"].get<std::uint64_t>() > 0) {
      os << " (" << verdict["violation_count"] << " violations; first: "
         << witness_line(name, verdict["witnesses"][0]) << ")";
    }
    os << "\n";
  }
  const auto& pref = j["preference"];
  if (pref["strict_is_preference"].is_null()) {
    os << "revealed preference: undetermined (binary menus incomplete)\n";
  } else {
    os << "strict revealed preference is "
       << (pref["strict_is_preference"].get<bool>() ? "" : "not ")
       << "a preference relation\n";
  }
  const auto& rat = j["rationalization"];
  os << "rationalization: " << rat["status"].get<std::string>();
  if (!rat["failures"].empty()) {
    const auto& f = rat["failures"][0];
    os << " (menu " << join_labels(f["menu"]) << ": expected "
       << join_labels(f["expected"]) << ", actual " << join_labels(f["actual"]) << ")";
  }
  os << "\n";
  os << "reference points: " << j["reference_points"].size() << "\n";
  for (const auto& t : j["reference_points"]) {
    os << "  " << t["z"].get<std::string>() << " is a reference for choosing "
       << t["x"].get<std::string>() << " over " << t["y"].get<std::string>() << "\n";
  }
  return os.str();
}

}  // namespace revpref
