#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "possind/error.hpp"
#include "possind/graphoid.hpp"
#include "possind/io.hpp"
#include "possind/worked_examples.hpp"

using namespace possind;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected possind::Error");
  return ErrorCode::Io;
}

constexpr const char* kSmall = R"({
  "variables": [
    {"name": "A", "frame": ["lo", "hi"]},
    {"name": "B", "frame": ["x", "y", "z"]}
  ],
  "values": [
    {"assignment": {"B": "y", "A": "hi"}, "possibility": 1.0},
    {"assignment": {"A": "lo", "B": "x"}, "possibility": 0.25}
  ]
})";

}  // namespace

TEST_CASE("parse fills unlisted assignments with zero") {
  const auto d = distribution_from_json(kSmall);
  const auto& s = d.space();
  CHECK(s.size() == 2);
  CHECK(d.size() == 6);
  CHECK(d.normalised());
  CHECK(d.at(s.assignment({{"A", "hi"}, {"B", "y"}})) == 1.0);
  CHECK(d.at(s.assignment({{"A", "lo"}, {"B", "x"}})) == 0.25);
  CHECK(d.at(s.assignment({{"A", "lo"}, {"B", "z"}})) == 0.0);
}

TEST_CASE("round trip preserves every entry") {
  for (const auto& d :
       {one_sided_min_distribution(), intersection_failure_distribution(),
        random_distribution(make_uniform_space(3, 3), 10, false, 9),
        distribution_from_json(kSmall)}) {
    const auto text = distribution_to_json(d);
    const auto back = distribution_from_json(text);
    CHECK(back.space() == d.space());
    CHECK(std::ranges::equal(back.table(), d.table()));
    CHECK(distribution_to_json(back) == text);
  }
}

TEST_CASE("marginal documents list only the scope variables") {
  const auto d = one_sided_min_distribution();
  const auto m = marginalize(d, d.space().subset({"X1", "X3"}));
  const auto doc = nlohmann::json::parse(distribution_to_json(m));
  CHECK(doc["variables"].size() == 2);
  CHECK(doc["values"].size() == 4);
  CHECK(doc["variables"][1]["name"] == "X3");
}

TEST_CASE("reproducer carries the run metadata") {
  const auto d = intersection_failure_distribution();
  const auto doc = nlohmann::json::parse(reproducer_to_json(
      d, Conjunction::product(Generator::power(2.0)), 77, "prop", "why"));
  CHECK(doc["conjunction"] == "prod:pow=2");
  CHECK(doc["seed"] == 77);
  CHECK(doc["property"] == "prop");
  CHECK(doc["detail"] == "why");
  CHECK(std::ranges::equal(distribution_from_json(doc.dump()).table(),
                           d.table()));
}

TEST_CASE("malformed documents") {
  CHECK(code_of([] { distribution_from_json("{"); }) == ErrorCode::Parse);
  CHECK(code_of([] { distribution_from_json("[]"); }) == ErrorCode::Parse);
  CHECK(code_of([] { distribution_from_json(R"({"variables": []})"); }) ==
        ErrorCode::Parse);

  auto doc = nlohmann::json::parse(kSmall);
  auto edit = [&](auto&& f) {
    auto copy = doc;
    f(copy);
    return copy.dump();
  };

  CHECK(code_of([&] {
          distribution_from_json(edit([](auto& j) {
            j["values"].push_back(j["values"][0]);
          }));
        }) == ErrorCode::Parse);
  CHECK(code_of([&] {
          distribution_from_json(edit([](auto& j) {
            j["values"][0]["assignment"].erase("B");
          }));
        }) == ErrorCode::ScopeMismatch);
  CHECK(code_of([&] {
          distribution_from_json(edit([](auto& j) {
            j["values"][0]["assignment"]["C"] = "x";
          }));
        }) == ErrorCode::UnknownVariable);
  CHECK(code_of([&] {
          distribution_from_json(edit([](auto& j) {
            j["values"][0]["assignment"]["B"] = "w";
          }));
        }) == ErrorCode::UnknownValue);
  CHECK(code_of([&] {
          distribution_from_json(
              edit([](auto& j) { j["values"][1]["possibility"] = 1.5; }));
        }) == ErrorCode::OutOfRange);
  CHECK(code_of([&] {
          distribution_from_json(
              edit([](auto& j) { j["values"][1]["possibility"] = "high"; }));
        }) == ErrorCode::Parse);
  CHECK(code_of([&] {
          distribution_from_json(
              edit([](auto& j) { j["variables"][1]["name"] = "A"; }));
        }) == ErrorCode::DuplicateVariable);
  CHECK(code_of([&] {
          distribution_from_json(edit([](auto& j) {
            j["variables"][0]["frame"] = nlohmann::json::array();
          }));
        }) == ErrorCode::EmptyFrame);
}

TEST_CASE("unnormalised documents load") {
  auto doc = nlohmann::json::parse(kSmall);
  doc["values"][0]["possibility"] = 0.5;
  const auto d = distribution_from_json(doc.dump());
  CHECK_FALSE(d.normalised());
}

TEST_CASE("load from disk") {
  const auto path =
      std::filesystem::temp_directory_path() / "possind_test_io.json";
  {
    std::ofstream out(path);
    out << kSmall;
  }
  CHECK(load_distribution(path).size() == 6);
  std::filesystem::remove(path);
  CHECK(code_of([&] { load_distribution(path); }) == ErrorCode::Io);
}
