#include <doctest.h>

#include <random>

#include "clinex/analysis.hpp"
#include "clinex/ner.hpp"
#include "test_support.hpp"

using namespace clinex;
using clinex::test::build_ctpa_engine;
using clinex::test::find_object;

namespace {

AnnotatedSentence merged(const Engine& engine, const std::string& text) {
  auto sentences = preprocess_note(text, AbbreviationList::defaults());
  REQUIRE(sentences.size() == 1);
  AnnotatedSentence a = recognize(engine.lexicon(), std::move(sentences[0]));
  expand_conjunctions(engine.lexicon(), a);
  merge_cues(a);
  return a;
}

}  // namespace

TEST_CASE("cue merging follows the combination table") {
  const Engine engine = build_ctpa_engine();
  const std::pair<const char*, Role> cases[] = {
      {"found", Role::ConfirmationCue},
      {"not found", Role::BackwardNegationCue},
      {"have found", Role::ConfirmationCue},
      {"haven't found", Role::NegationCue},
      {"have been found", Role::BackwardConfirmationCue},
      {"haven't been found", Role::BackwardNegationCue},
      {"is found", Role::BackwardConfirmationCue},
      {"isn't found", Role::BackwardNegationCue},
  };
  for (const auto& [text, role] : cases) {
    CAPTURE(text);
    const AnnotatedSentence a = merged(engine, text);
    REQUIRE(a.objects.size() == 1);
    CHECK(a.objects[0].role == role);
    CHECK(a.objects[0].text == text);
  }
}

TEST_CASE("merged cues span the union of their parts") {
  const Engine engine = build_ctpa_engine();
  const AnnotatedSentence a = merged(engine, "PE has not been found");
  REQUIRE(a.objects.size() == 2);
  CHECK(a.objects[0].text == "pe");
  CHECK(a.objects[1].role == Role::BackwardNegationCue);
  CHECK(a.objects[1].text == "has not been found");
  CHECK(a.objects[1].first_token == 1);
  CHECK(a.objects[1].last_token == 4);
}

TEST_CASE("presence: negation, speculation, and clause rules") {
  const Engine engine = build_ctpa_engine();
  auto presences = [&](const std::string& text) {
    std::vector<std::pair<std::string, Presence>> out;
    for (const AnnotatedSentence& s : engine.annotate(text)) {
      for (const SemanticObject& o : s.objects) {
        if (o.role == Role::Fact) out.emplace_back(o.text, o.presence);
      }
    }
    return out;
  };

  using P = std::pair<std::string, Presence>;
  CHECK(presences("No filling defects are seen to suggest pulmonary "
                  "embolism.") ==
        std::vector<P>{{"filling defects", Presence::No},
                       {"pulmonary embolism", Presence::No}});
  CHECK(presences("No filling defects are seen, suggesting pulmonary "
                  "embolism.") ==
        std::vector<P>{{"filling defects", Presence::No},
                       {"pulmonary embolism", Presence::Yes}});
  CHECK(presences("No filling defects are seen and it suggests pulmonary "
                  "embolism.") ==
        std::vector<P>{{"filling defects", Presence::No},
                       {"pulmonary embolism", Presence::Yes}});
  CHECK(presences("PE") == std::vector<P>{{"pe", Presence::Yes}});
  CHECK(presences("the tumor was removed") ==
        std::vector<P>{{"tumor", Presence::No}});
  CHECK(presences("pneumonia has resolved") ==
        std::vector<P>{{"pneumonia", Presence::No}});
  CHECK(presences("no PE but dvt") ==
        std::vector<P>{{"pe", Presence::No}, {"dvt", Presence::Yes}});
  CHECK(presences("possible pneumonia") ==
        std::vector<P>{{"pneumonia", Presence::Maybe}});
  CHECK(presences("patient denies dvt and pe") ==
        std::vector<P>{{"dvt", Presence::No}, {"pe", Presence::No}});
  CHECK(presences("pulmonary embolism has not been found") ==
        std::vector<P>{{"pulmonary embolism", Presence::No}});
}

TEST_CASE("presence: forward scope expires past the token gap") {
  const Engine engine = build_ctpa_engine();
  auto fact_presence = [&](const std::string& text) {
    const auto sentences = engine.annotate(text);
    for (const AnnotatedSentence& s : sentences) {
      for (const SemanticObject& o : s.objects) {
        if (o.role == Role::Fact) return o.presence;
      }
    }
    FAIL("no fact found");
    return Presence::Yes;
  };
  CHECK(fact_presence("no q w e r t y u PE") == Presence::No);   // gap 7
  CHECK(fact_presence("no q w e r t y u i o PE") == Presence::Yes);  // gap 9

  PipelineConfig tight;
  tight.forward_scope_max_gap = 2;
  EngineOptions options;
  options.term_files = {clinex::test::data_path("ctpa_terms.tsv")};
  options.pipeline = tight;
  const Engine tight_engine = Engine::build(options);
  const auto sentences = tight_engine.annotate("no q w e PE");
  CHECK(sentences[0].objects.back().presence == Presence::Yes);
}

TEST_CASE("presence: attribute-scoped negation") {
  const Engine engine = build_ctpa_engine();
  const auto sentences = engine.annotate("No change in the pleural effusion.");
  REQUIRE(sentences.size() == 1);
  const AnnotatedSentence& s = sentences[0];

  const SemanticObject* effusion = find_object(s, "pleural effusion");
  REQUIRE(effusion != nullptr);
  CHECK(effusion->presence == Presence::Yes);
  REQUIRE(effusion->modifiers.size() == 1);

  const SemanticObject& change = s.objects[effusion->modifiers[0]];
  CHECK(change.text == "change");
  CHECK(change.role == Role::FactAttribute);
  CHECK(change.presence == Presence::No);
}

TEST_CASE("presence: analyzer consumes each object once") {
  const Engine engine = build_ctpa_engine();
  auto sentences = preprocess_note(
      "No filling defects are seen, suggesting pulmonary embolism.",
      AbbreviationList::defaults());
  AnnotatedSentence a =
      recognize(engine.lexicon(), std::move(sentences[0]));
  merge_cues(a);
  int transitions = 0;
  analyze_presence(a, engine.pipeline(), &transitions);
  CHECK(transitions <= static_cast<int>(a.objects.size()));
}

TEST_CASE("presence never touches non-medical objects") {
  const Engine engine = build_ctpa_engine();
  for (const AnnotatedSentence& s :
       engine.annotate("no filling defects are seen in the right upper lobe, "
                       "suggesting severe pneumonia")) {
    for (const SemanticObject& o : s.objects) {
      if (role_family(o.role) != RoleFamily::MedicalTerm) {
        CHECK(o.presence == Presence::Yes);  // untouched default
      }
    }
  }
}

TEST_CASE("ignore: cue scope spares governed facts") {
  const Engine engine = build_ctpa_engine();

  SUBCASE("plain ignore") {
    const auto records = engine.process_note("n", "assess for PE");
    REQUIRE(records.size() == 1);
    CHECK(records[0].ignored);
    CHECK(records[0].presence == Presence::Maybe);
  }

  SUBCASE("negated fact survives the ignore cue") {
    const auto records = engine.process_note("n", "exam for PE, no PE seen");
    REQUIRE(records.size() == 2);
    CHECK(records[0].ignored);
    CHECK(records[0].presence == Presence::Maybe);
    CHECK(!records[1].ignored);
    CHECK(records[1].presence == Presence::No);
  }

  SUBCASE("two sentences, independent scopes") {
    const auto records =
        engine.process_note("n", "CT exam to assess for PE; no PE found.");
    REQUIRE(records.size() == 3);  // ct, pe (ignored), pe (negated)
    CHECK(records[0].ignored);   // "ct" in the exam sentence
    CHECK(records[1].ignored);
    CHECK(records[1].presence == Presence::Maybe);
    CHECK(!records[2].ignored);
    CHECK(records[2].presence == Presence::No);
  }

  SUBCASE("no cue, no change") {
    const auto records = engine.process_note("n", "no PE");
    REQUIRE(records.size() == 1);
    CHECK(!records[0].ignored);
    CHECK(records[0].presence == Presence::No);
  }
}

TEST_CASE("family: any relative marks the whole sentence") {
  const Engine engine = build_ctpa_engine();

  auto experiencers = [&](const std::string& text) {
    std::vector<Experiencer> out;
    for (const FactRecord& r : engine.process_note("n", text)) {
      out.push_back(r.experiencer);
    }
    return out;
  };

  CHECK(experiencers("mother had breast cancer") ==
        std::vector<Experiencer>{Experiencer::Family});
  CHECK(experiencers("no PE") == std::vector<Experiencer>{Experiencer::Self});
  // one sentence, two mentions: the blanket rule covers both
  CHECK(experiencers("uncle with DM and patient denies DM") ==
        std::vector<Experiencer>{Experiencer::Family, Experiencer::Family});
  // the semicolon splits scopes
  CHECK(experiencers("uncle with DM; patient denies DM") ==
        std::vector<Experiencer>{Experiencer::Family, Experiencer::Self});
}

TEST_CASE("modifiers attach flat to the nearest fact") {
  const Engine engine = build_ctpa_engine();

  SUBCASE("following fact preferred") {
    const auto records = engine.process_note("n", "severe PE");
    REQUIRE(records.size() == 1);
    REQUIRE(records[0].modifiers.size() == 1);
    CHECK(records[0].modifiers[0].text == "severe");
    CHECK(records[0].modifiers[0].children.empty());
  }

  SUBCASE("preceding fact as fallback") {
    const auto records = engine.process_note("n", "PE, chronic");
    REQUIRE(records.size() == 1);
    REQUIRE(records[0].modifiers.size() == 1);
    CHECK(records[0].modifiers[0].text == "chronic");
  }

  SUBCASE("no fact leaves the modifier unattached") {
    const auto records = engine.process_note("n", "severe chronic findings");
    CHECK(records.empty());
  }
}

TEST_CASE("pipeline configuration is validated") {
  PipelineConfig config;
  CHECK_NOTHROW(validate_pipeline(config));

  config.analyzers = {"merge_cues", "presence", "nonsense"};
  CHECK_THROWS_AS(validate_pipeline(config), ConfigError);

  config.analyzers = {"presence", "merge_cues"};
  CHECK_THROWS_AS(validate_pipeline(config), ConfigError);

  config.analyzers = {"locations", "presence"};
  CHECK_THROWS_AS(validate_pipeline(config), ConfigError);

  config.analyzers = {"presence", "presence"};
  CHECK_THROWS_AS(validate_pipeline(config), ConfigError);

  config.analyzers = {"merge_cues", "presence"};
  config.forward_scope_max_gap = -1;
  CHECK_THROWS_AS(validate_pipeline(config), ConfigError);
}

TEST_CASE("disabling presence leaves facts at the default YES") {
  EngineOptions options;
  options.term_files = {clinex::test::data_path("ctpa_terms.tsv")};
  options.pipeline.analyzers = {"merge_cues", "locations", "modifiers",
                                "family"};
  const Engine engine = Engine::build(options);
  const auto records = engine.process_note("n", "no PE and no DVT");
  REQUIRE(records.size() == 2);
  CHECK(records[0].presence == Presence::Yes);
  CHECK(records[1].presence == Presence::Yes);
}

TEST_CASE("empty sentence passes through the pipeline unchanged") {
  const Engine engine = build_ctpa_engine();
  CHECK(engine.annotate("").empty());
  AnnotatedSentence empty;
  CHECK_NOTHROW(run_pipeline(empty, engine.pipeline()));
  CHECK(empty.objects.empty());
}

TEST_CASE("running the pipeline twice equals running it once") {
  const Engine engine = build_ctpa_engine(true);
  const char* texts[] = {
      "No filling defects are seen to suggest pulmonary embolism.",
      "No filling defects are seen, suggesting pulmonary embolism.",
      "There are segmental and subsegmental filling defects in the right "
      "upper lobe, superior segment of the right lower lobe, and "
      "subsegmental filling defect in the in the anterolateral segment of "
      "the left lower lobe pulmonary arteries.",
      "no mediastinal, hilar, or axillary lymphadenopathy",
      "No change in the pleural effusion.",
      "assess for PE",
      "mother had breast cancer",
      "exam for PE, no PE seen",
      "There are filling defects in the anterior basal segment and superior "
      "segment of the right lower lobe.",
      "right upper, middle, and lower lobes",
      "? pneumonia vs atelectasis",
      "the tumor was removed",
  };
  for (const char* text : texts) {
    CAPTURE(text);
    auto once = engine.annotate(text);
    auto twice = once;
    for (AnnotatedSentence& s : twice) run_pipeline(s, engine.pipeline());
    for (std::size_t i = 0; i < once.size(); ++i) {
      CHECK(twice[i].objects == once[i].objects);
    }
  }
}
