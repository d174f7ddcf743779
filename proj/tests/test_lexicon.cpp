#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "clinex/lexicon.hpp"
#include "test_support.hpp"

using namespace clinex;
using clinex::test::make_sentence;

TEST_CASE("longest match wins over shorter phrases") {
  Lexicon lexicon;
  lexicon.add_term({"heart"}, "C-HEART", Role::Location);
  lexicon.add_term({"heart", "attack"}, "C-MI", Role::Fact,
                   FactKind::Disorder);

  const SentenceBuffer s = make_sentence(
      {"patient", "had", "a", "heart", "attack", "in", "2006"});
  const auto match = lexicon.longest_match(s.tokens, 3);
  REQUIRE(match.has_value());
  CHECK(match->end == 5);
  CHECK(match->payload->codes == std::set<std::string>{"C-MI"});

  CHECK(!lexicon.longest_match(s.tokens, 0).has_value());

  const auto heart_only = lexicon.longest_match(s.tokens, 3);
  CHECK(heart_only->end - 3 == 2);
}

TEST_CASE("code union and role uniqueness") {
  Lexicon lexicon;
  lexicon.add_term({"pe"}, "C-PE", Role::Fact, FactKind::Disorder);
  CHECK(lexicon.term_count() == 1);

  lexicon.add_term({"pe"}, "C-PE2", Role::Fact, FactKind::Disorder);
  CHECK(lexicon.term_count() == 1);
  const PhrasePayload* payload = lexicon.find_phrase({"pe"});
  REQUIRE(payload != nullptr);
  CHECK(payload->codes == std::set<std::string>{"C-PE", "C-PE2"});

  CHECK_THROWS_AS(
      lexicon.add_term({"pe"}, "C-PHYS", Role::Fact, FactKind::Test),
      ConfigError);
  CHECK_THROWS_AS(lexicon.add_term({}, "C-X", Role::Fact), ConfigError);
  CHECK_THROWS_AS(lexicon.add_term({"x"}, "", Role::Fact), ConfigError);
}

TEST_CASE("longest match equals the prefix-enumeration oracle") {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 300; ++iter) {
    auto c = clinex::test::random_ner_case(rng);
    const SentenceBuffer s = make_sentence(c.words);
    for (std::size_t start = 0; start < c.words.size(); ++start) {
      std::size_t best = 0;
      for (std::size_t len = 1; len <= c.words.size() - start; ++len) {
        std::vector<std::string> prefix(c.words.begin() + start,
                                        c.words.begin() + start + len);
        if (c.oracle.phrases.contains(prefix)) best = len;
      }
      const auto match = c.lexicon.longest_match(s.tokens,
                                                 static_cast<int>(start));
      if (best == 0) {
        CHECK(!match.has_value());
      } else {
        REQUIRE(match.has_value());
        CHECK(match->end == static_cast<int>(start + best));
      }
    }
  }
}

TEST_CASE("every loaded phrase matches itself") {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 100; ++iter) {
    auto c = clinex::test::random_ner_case(rng);
    for (const std::vector<std::string>& phrase : c.oracle.phrases) {
      const SentenceBuffer s = make_sentence(phrase);
      const auto match = c.lexicon.longest_match(s.tokens, 0);
      REQUIRE(match.has_value());
      CHECK(match->end == static_cast<int>(phrase.size()));
    }
  }
}

TEST_CASE("term file loading") {
  const std::string path = "terms_test.tsv";

  SUBCASE("well-formed file") {
    {
      std::ofstream out(path);
      out << "# comment\n"
          << "pulmonary embolism\tC-PE\tFact:Disorder\n"
          << "pulmonary emboli\tC-PE\tFact:Disorder\n"
          << "left lung\tC-LL\tLocation\n";
    }
    Lexicon lexicon;
    lexicon.load_term_file(path);
    CHECK(lexicon.term_count() == 3);
    const PhrasePayload* pe = lexicon.find_phrase({"pulmonary", "embolism"});
    REQUIRE(pe != nullptr);
    CHECK(pe->role == Role::Fact);
    CHECK(pe->fact_kind == FactKind::Disorder);
  }

  SUBCASE("wrong field count names the line") {
    {
      std::ofstream out(path);
      out << "pe\tC-PE\tFact:Disorder\n" << "broken line\tC-X\n";
    }
    Lexicon lexicon;
    try {
      lexicon.load_term_file(path);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(":2") != std::string::npos);
    }
  }

  SUBCASE("unknown role names the line") {
    {
      std::ofstream out(path);
      out << "pe\tC-PE\tDiagnosis\n";
    }
    Lexicon lexicon;
    try {
      lexicon.load_term_file(path);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(std::string(e.what()).find(":1") != std::string::npos);
    }
  }

  SUBCASE("conflicting role across lines") {
    {
      std::ofstream out(path);
      out << "pe\tC-PE\tFact:Disorder\n" << "pe\tC-PE2\tLocation\n";
    }
    Lexicon lexicon;
    CHECK_THROWS_AS(lexicon.load_term_file(path), ConfigError);
  }

  SUBCASE("missing file") {
    Lexicon lexicon;
    CHECK_THROWS_AS(lexicon.load_term_file("no_such_file.tsv"), ConfigError);
  }

  std::remove(path.c_str());
}

TEST_CASE("a 10k-line term file counts distinct phrases") {
  const std::string path = "terms_10k.tsv";
  {
    std::ofstream out(path);
    for (int i = 0; i < 10000; ++i) {
      // every 10th line repeats the previous phrase with a new code
      const int phrase_id = i - (i % 10 == 9 ? 1 : 0);
      out << "term" << phrase_id / 100 << " word" << phrase_id % 100 << "\tC"
          << i << "\tFact:Finding\n";
    }
  }
  Lexicon lexicon;
  lexicon.load_term_file(path);
  CHECK(lexicon.term_count() == 9000);
  std::remove(path.c_str());
}

TEST_CASE("base dictionary carries the documented roles") {
  const Lexicon base = Lexicon::base_dictionary();
  auto role_of = [&](std::vector<std::string> phrase) {
    const PhrasePayload* p = base.find_phrase(phrase);
    REQUIRE(p != nullptr);
    return p->role;
  };
  CHECK(role_of({"found"}) == Role::ParticipleConfirmation);
  CHECK(role_of({","}) == Role::Comma);
  CHECK(role_of({"exam"}) == Role::IgnoreCue);
  CHECK(role_of({"no"}) == Role::NegationCue);
  CHECK(role_of({"denies"}) == Role::NegationCue);
  CHECK(role_of({"is"}) == Role::LinkVerbPositive);
  CHECK(role_of({"is", "not"}) == Role::LinkVerbNegative);
  CHECK(role_of({"isn't"}) == Role::LinkVerbNegative);
  CHECK(role_of({"have"}) == Role::AuxVerbPositive);
  CHECK(role_of({"haven't"}) == Role::AuxVerbNegative);
  CHECK(role_of({"suggesting"}) == Role::SpeculationCue);
  CHECK(role_of({"assess", "for"}) == Role::IgnoreCue);
  CHECK(role_of({"in", "case", "of"}) == Role::IgnoreCue);
  CHECK(role_of({"mother"}) == Role::Relative);
  CHECK(role_of({"and"}) == Role::Conjunction);
  CHECK(role_of({"of"}) == Role::Preposition);
  CHECK(role_of({"change"}) == Role::FactAttribute);
  CHECK(role_of({"removed"}) == Role::NegationCue);
}

TEST_CASE("base dictionary exports and reloads") {
  std::ostringstream exported;
  Lexicon::export_base_dictionary(exported);

  const std::string path = "base_export.tsv";
  {
    std::ofstream out(path);
    out << exported.str();
  }
  Lexicon reloaded;
  reloaded.load_term_file(path);
  CHECK(reloaded.term_count() == Lexicon::base_dictionary().term_count());
  CHECK(reloaded.find_phrase({"assess", "for"}) != nullptr);
  std::remove(path.c_str());
}
