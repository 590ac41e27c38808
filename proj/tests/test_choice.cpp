#include <doctest.h>

#include <functional>

#include "revpref/core.hpp"
#include "revpref/generators.hpp"
#include "revpref/json_io.hpp"
#include "test_util.hpp"

using namespace revpref;
using revpref::testing::mask;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::parse_error;
}

}  // namespace

TEST_CASE("universe validation") {
  CHECK_THROWS_AS(Universe({}), Error);
  CHECK(code_of([] { Universe({"a", "a"}); }) == Errc::parse_error);
  std::vector<std::string> many(17, "");
  for (int i = 0; i < 17; ++i) many[i] = "x" + std::to_string(i);
  CHECK(code_of([&] { Universe u(many); }) == Errc::universe_too_large);
  Universe u({"a", "b", "k"});
  CHECK(u.index_of("k") == 2);
  CHECK(code_of([&] { u.index_of("z"); }) == Errc::unknown_alternative);
  CHECK(u.menu_string(mask({0, 2})) == "{a,k}");
}

TEST_CASE("canonical menu order is cardinality then mask") {
  CHECK(canonical_menus(3) ==
        std::vector<Mask>{1, 2, 4, 3, 5, 6, 7});
  CHECK(canonical_subsets(2) == std::vector<Mask>{0, 1, 2, 3});
}

TEST_CASE("build_correspondence accepts the vacation-spot data") {
  Universe u({"a", "b", "k"});
  auto c = ChoiceCorrespondence::build(
      u, {{mask({0, 1}), mask({0})},
          {mask({1, 2}), mask({1, 2})},
          {mask({0, 2}), mask({0, 2})},
          {mask({0, 1, 2}), mask({0, 2})}});
  CHECK(c.choice(mask({0})) == mask({0}));  // singleton auto-filled
  CHECK(c.choice(mask({0, 1, 2})) == mask({0, 2}));
}

TEST_CASE("build_correspondence on a singleton universe needs no entries") {
  auto c = ChoiceCorrespondence::build(Universe({"a"}), {});
  CHECK(c.choice(1) == 1);
}

TEST_CASE("build_correspondence errors") {
  Universe u({"a", "b", "k"});
  CHECK(code_of([&] {
          ChoiceCorrespondence::build(u, {{mask({0, 1}), mask({2})}});
        }) == Errc::choice_outside_menu);
  CHECK(code_of([&] {
          ChoiceCorrespondence::build(u, {{mask({0, 1}), 0}});
        }) == Errc::empty_choice);
  CHECK(code_of([&] {
          ChoiceCorrespondence::build(u, {{mask({0, 1}), mask({0})},
                                          {mask({0, 1}), mask({1})}});
        }) == Errc::duplicate_conflict);
  CHECK(code_of([&] {
          ChoiceCorrespondence::build(u, {{mask({0, 1}), mask({0})}});
        }) == Errc::missing_menu);
}

TEST_CASE("ingest_dataset parses the grocery data") {
  auto d = dataset_from_string(R"({
    "alternatives": ["a","b","k","d"],
    "observations": [
      {"menu": ["a","b"], "choice": ["a"]},
      {"menu": ["a","k"], "choice": ["a"]},
      {"menu": ["a","d"], "choice": ["a"]},
      {"menu": ["b","k"], "choice": ["b","k"]},
      {"menu": ["k","d"], "choice": ["k"]},
      {"menu": ["b","d"], "choice": ["b"]},
      {"menu": ["a","b","k","d"], "choice": ["a","d"]}
    ]})");
  CHECK(d.observations().size() == 7);
  CHECK_FALSE(d.choice(mask({0, 1, 2})).has_value());  // triples unobserved
  CHECK(d.choice(mask({1, 2})) == mask({1, 2}));
  CHECK_FALSE(d.is_total());
}

TEST_CASE("ingest_dataset edge cases and errors") {
  auto one = dataset_from_string(
      R"({"alternatives": ["a"], "observations": [{"menu": ["a"], "choice": ["a"]}]})");
  CHECK(one.observations().size() == 1);
  CHECK(one.is_total());

  CHECK(code_of([] {
          dataset_from_string(R"({"alternatives": ["a","b"], "observations": [
            {"menu": ["a","b"], "choice": ["a"]},
            {"menu": ["a","b"], "choice": ["b"]}]})");
        }) == Errc::duplicate_conflict);
  CHECK(code_of([] {
          dataset_from_string(R"({"alternatives": ["a"], "observations": [
            {"menu": ["a","z"], "choice": ["a"]}]})");
        }) == Errc::unknown_alternative);
  CHECK(code_of([] { dataset_from_string("not json"); }) == Errc::parse_error);
  CHECK(code_of([] {
          dataset_from_string(R"({"alternatives": ["a","b"], "observations": [
            {"menu": ["a","b"], "choice": []}]})");
        }) == Errc::empty_choice);

  // agreeing duplicates merge
  auto merged = dataset_from_string(R"({"alternatives": ["a","b"], "observations": [
    {"menu": ["a","b"], "choice": ["a"]}, {"menu": ["b","a"], "choice": ["a"]}]})");
  CHECK(merged.observations().size() == 1);
}

TEST_CASE("completion policies") {
  const auto& ex1 = fixture("example1").data;
  const auto& ex2 = fixture("example2").data;

  auto total2 = ex2.complete(CompletionPolicy::fail);
  CHECK(total2.choice(mask({0, 1, 2})) == mask({0, 2}));

  auto filled = ex1.complete(CompletionPolicy::full_menu);
  CHECK(filled.choice(mask({0, 1, 2})) == mask({0, 1, 2}));
  // agrees with the data on every observed menu
  for (const auto& o : ex1.observations()) {
    CHECK(filled.choice(o.menu) == o.choice);
  }

  CHECK(code_of([&] { ex1.complete(CompletionPolicy::fail); }) ==
        Errc::incomplete_data);
}

TEST_CASE("serialization round-trips bit-exactly for all correspondences, n <= 3") {
  for (int n = 1; n <= 3; ++n) {
    CorrespondenceEnumerator e(n);
    while (e.next()) {
      ordered_json j = correspondence_to_json(e.current());
      auto parsed = dataset_from_json(j);
      CHECK(parsed.complete(CompletionPolicy::fail) == e.current());
      CHECK(dataset_to_json(parsed).dump() == j.dump());
    }
  }
}

TEST_CASE("dataset serializer emits canonical menu order") {
  auto d = revpref::testing::dataset(
      {"a", "b"}, {{mask({0, 1}), mask({0})}, {mask({1}), mask({1})}});
  ordered_json j = dataset_to_json(d);
  CHECK(j["observations"][0]["menu"] == ordered_json::array({"b"}));
  CHECK(j["observations"][1]["menu"] == ordered_json::array({"a", "b"}));
}
