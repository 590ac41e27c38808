#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "revpref/analysis.hpp"
#include "revpref/generators.hpp"
#include "revpref/json_io.hpp"
#include "revpref/verifier.hpp"

namespace py = pybind11;

namespace {

std::optional<revpref::CompletionPolicy> parse_policy(const std::optional<std::string>& p) {
  if (!p) return std::nullopt;
  return revpref::completion_policy_from_string(*p);
}

std::string analyze_json(const std::string& dataset_json,
                         const std::optional<std::string>& complete) {
  auto dataset = revpref::dataset_from_string(dataset_json);
  auto report = revpref::analyze(dataset, parse_policy(complete));
  return revpref::analysis_to_json(report).dump();
}

std::string check_axiom(const std::string& dataset_json, const std::string& axiom,
                        const std::optional<std::string>& complete) {
  auto dataset = revpref::dataset_from_string(dataset_json);
  auto policy = parse_policy(complete);
  std::optional<revpref::ChoiceCorrespondence> total;
  if (policy) total = dataset.complete(*policy);
  revpref::ChoiceView view = total ? revpref::ChoiceView(*total)
                                   : revpref::ChoiceView(dataset);
  revpref::Verdict verdict;
  if (axiom == "tau") {
    verdict = revpref::check_tau(view);
  } else if (axiom == "rho") {
    verdict = revpref::check_rho(view);
  } else if (axiom == "warp") {
    verdict = revpref::check_warp(view);
  } else if (axiom == "v_axiom") {
    verdict = revpref::check_v_axiom(view);
  } else if (axiom == "delta") {
    verdict = revpref::check_delta(view);
  } else {
    throw revpref::Error(revpref::Errc::parse_error, "unknown axiom '" + axiom + "'");
  }
  return revpref::verdict_to_json(dataset.universe(), axiom, verdict).dump();
}

std::string verify_claim(const std::string& claim, int n, int shards, int shard) {
  auto report = revpref::verify(revpref::claim_from_string(claim), n, shards, shard);
  return revpref::verification_report_to_json(report).dump();
}

std::vector<std::string> sample_datasets(int n, int count, std::uint64_t seed) {
  std::vector<std::string> out;
  revpref::sample_each(n, count, seed, [&out](const revpref::ChoiceCorrespondence& c) {
    out.push_back(revpref::correspondence_to_json(c).dump());
  });
  return out;
}

std::vector<std::string> enumerate_range(int n, std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::string> out;
  revpref::CorrespondenceEnumerator e(n, lo, hi);
  while (e.next()) out.push_back(revpref::correspondence_to_json(e.current()).dump());
  return out;
}

std::string fixture_json(const std::string& name) {
  return revpref::dataset_to_json(revpref::fixture(name).data).dump();
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& f : revpref::fixtures()) out.push_back(f.name);
  return out;
}

}  // namespace

PYBIND11_MODULE(revpref, m) {
  m.doc() = "Choice-data analysis: revealed preferences, axiom checks with "
            "witnesses, exhaustive verification. All payloads are JSON strings.";

  py::register_exception<revpref::Error>(m, "ChoiceError");

  m.def("analyze", &analyze_json, py::arg("dataset_json"),
        py::arg("complete") = std::nullopt,
        "Run every checker on a dataset; returns the analysis report as JSON.");
  m.def("check_axiom", &check_axiom, py::arg("dataset_json"), py::arg("axiom"),
        py::arg("complete") = std::nullopt,
        "Check one axiom (tau|rho|warp|v_axiom|delta); returns a verdict as JSON.");
  m.def("verify", &verify_claim, py::arg("claim"), py::arg("n"),
        py::arg("shards") = 1, py::arg("shard") = 0,
        "Exhaustively verify a claim "
        "(prop-tau|prop-rho|theorem1|lemma1|warp|delta); returns a report as JSON.");
  m.def("correspondence_count", &revpref::correspondence_count, py::arg("n"),
        "Number of total choice correspondences on n alternatives.");
  m.def("sample", &sample_datasets, py::arg("n"), py::arg("count"), py::arg("seed"),
        "Seeded random total correspondences, serialized as dataset JSON.");
  m.def("enumerate_range", &enumerate_range, py::arg("n"), py::arg("lo"), py::arg("hi"),
        "Correspondences with enumeration index in [lo, hi), as dataset JSON.");
  m.def("fixture", &fixture_json, py::arg("name"), "A named dataset as JSON.");
  m.def("fixture_names", &fixture_names);
}
