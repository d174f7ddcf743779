#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <thread>

#include "test_support.hpp"

using namespace clinex;
using clinex::test::build_ctpa_engine;

TEST_CASE("an engine with no term files still has the base dictionary") {
  const Engine engine = Engine::build(EngineOptions{});
  const auto sentences = engine.annotate("no change found");
  REQUIRE(sentences.size() == 1);
  // "no", "change", and "found" merged into a confirmation cue
  CHECK(sentences[0].objects.size() == 3);
  CHECK(sentences[0].objects[2].role == Role::ConfirmationCue);
  CHECK(engine.process_note("n", "no change found").empty());
}

TEST_CASE("conflicting roles across term files fail the build") {
  const std::string path = "conflict_terms.tsv";
  {
    std::ofstream out(path);
    // "exam" is an IgnoreCue in the base dictionary
    out << "exam\tC-EXAM\tFact:Test\n";
  }
  EngineOptions options;
  options.term_files = {path};
  CHECK_THROWS_AS(Engine::build(options), ConfigError);
  std::remove(path.c_str());
}

TEST_CASE("missing files fail the build") {
  EngineOptions options;
  options.term_files = {"no_such.tsv"};
  CHECK_THROWS_AS(Engine::build(options), ConfigError);

  options.term_files.clear();
  options.hierarchy_file = "no_such_hierarchy.tsv";
  CHECK_THROWS_AS(Engine::build(options), ConfigError);

  options.hierarchy_file.clear();
  options.abbreviation_file = "no_such_abbrev.txt";
  CHECK_THROWS_AS(Engine::build(options), ConfigError);
}

TEST_CASE("an invalid pipeline fails the build") {
  EngineOptions options;
  options.pipeline.analyzers = {"presence", "merge_cues"};
  CHECK_THROWS_AS(Engine::build(options), ConfigError);
}

TEST_CASE("empty note yields an empty record list") {
  const Engine engine = build_ctpa_engine();
  CHECK(engine.process_note("n", "").empty());
  CHECK(engine.process_note("n", "   \n\n  ").empty());
}

TEST_CASE("table-style negation end to end") {
  const Engine engine = build_ctpa_engine();
  const auto records = engine.process_note(
      "n", "No filling defects are seen to suggest pulmonary embolism.");
  REQUIRE(records.size() == 2);
  CHECK(records[0].presence == Presence::No);
  CHECK(records[1].presence == Presence::No);
}

TEST_CASE("process_note is referentially transparent") {
  const Engine engine = build_ctpa_engine();
  const std::string note =
      "INDICATION: assess for PE.\nFINDINGS: No filling defects are seen, "
      "suggesting pulmonary embolism. No change in the pleural effusion;\n"
      "mother had breast cancer. ? pneumonia vs atelectasis";
  const auto a = engine.process_note("n", note);
  const auto b = engine.process_note("n", note);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(record_to_jsonl(a[i]) == record_to_jsonl(b[i]));
  }
}

TEST_CASE("concurrent processing matches sequential output") {
  const Engine engine = build_ctpa_engine();
  std::vector<std::string> notes;
  for (int i = 0; i < 60; ++i) {
    notes.push_back("No filling defects are seen to suggest pulmonary "
                    "embolism. severe consolidation in the right lower lobe; "
                    "assess for dvt number " + std::to_string(i));
  }

  std::vector<std::string> sequential;
  for (std::size_t i = 0; i < notes.size(); ++i) {
    for (const FactRecord& r :
         engine.process_note("note" + std::to_string(i), notes[i])) {
      sequential.push_back(record_to_jsonl(r));
    }
  }

  std::vector<std::vector<std::string>> partial(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = t; i < notes.size(); i += 4) {
        for (const FactRecord& r :
             engine.process_note("note" + std::to_string(i), notes[i])) {
          partial[t].push_back(record_to_jsonl(r));
        }
      }
    });
  }
  for (std::thread& t : threads) t.join();

  std::vector<std::string> concurrent;
  for (const auto& chunk : partial) {
    concurrent.insert(concurrent.end(), chunk.begin(), chunk.end());
  }
  std::sort(sequential.begin(), sequential.end());
  std::sort(concurrent.begin(), concurrent.end());
  CHECK(concurrent == sequential);
}
