#ifndef CLINEX_TEST_SUPPORT_HPP
#define CLINEX_TEST_SUPPORT_HPP

#include <random>
#include <set>
#include <string>
#include <vector>

#include "clinex/engine.hpp"
#include "clinex/ner.hpp"

namespace clinex::test {

inline std::string data_path(const std::string& name) {
  return std::string(TEST_DATA_DIR) + "/" + name;
}

inline Engine build_ctpa_engine(bool with_hierarchy = false) {
  EngineOptions options;
  options.term_files = {data_path("ctpa_terms.tsv")};
  if (with_hierarchy) {
    options.hierarchy_file = data_path("location_hierarchy.tsv");
  }
  return Engine::build(options);
}

inline SentenceBuffer make_sentence(const std::vector<std::string>& words) {
  SentenceBuffer sentence;
  int offset = 0;
  for (const std::string& word : words) {
    if (!sentence.raw.empty()) {
      sentence.raw.push_back(' ');
      ++offset;
    }
    Token token;
    token.raw = word;
    token.text = word;
    token.span.start = offset;
    token.span.end = offset + static_cast<int>(word.size());
    token.index = static_cast<int>(sentence.tokens.size());
    sentence.tokens.push_back(token);
    sentence.raw += word;
    offset += static_cast<int>(word.size());
  }
  sentence.span.start = 0;
  sentence.span.end = offset;
  return sentence;
}

inline const SemanticObject* find_object(const AnnotatedSentence& annotated,
                                         const std::string& text) {
  for (const SemanticObject& o : annotated.objects) {
    if (o.text == text) return &o;
  }
  return nullptr;
}

// Reference scanner: at each position try every prefix length and take the
// longest phrase in the set, else advance one token. Oracle for recognize().
struct OracleDictionary {
  std::set<std::vector<std::string>> phrases;
  std::size_t max_len = 0;

  void add(std::vector<std::string> phrase) {
    max_len = std::max(max_len, phrase.size());
    phrases.insert(std::move(phrase));
  }
};

inline std::vector<std::pair<int, int>> oracle_scan(
    const OracleDictionary& dict, const std::vector<std::string>& words) {
  std::vector<std::pair<int, int>> spans;
  std::size_t pos = 0;
  while (pos < words.size()) {
    std::size_t best = 0;
    const std::size_t limit = std::min(dict.max_len, words.size() - pos);
    for (std::size_t len = 1; len <= limit; ++len) {
      std::vector<std::string> prefix(words.begin() + pos,
                                      words.begin() + pos + len);
      if (dict.phrases.contains(prefix)) best = len;
    }
    if (best > 0) {
      spans.emplace_back(static_cast<int>(pos), static_cast<int>(pos + best));
      pos += best;
    } else {
      ++pos;
    }
  }
  return spans;
}

// Random (dictionary, sentence) pairs over a small closed alphabet.
struct RandomNerCase {
  Lexicon lexicon;
  OracleDictionary oracle;
  std::vector<std::string> words;
};

inline RandomNerCase random_ner_case(std::mt19937& rng) {
  RandomNerCase c;
  std::uniform_int_distribution<int> alpha(0, 19);
  auto word = [&] { return "w" + std::to_string(alpha(rng)); };

  const int n_phrases = std::uniform_int_distribution<int>(1, 25)(rng);
  for (int i = 0; i < n_phrases; ++i) {
    const int len = std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<std::string> phrase;
    for (int j = 0; j < len; ++j) phrase.push_back(word());
    try {
      c.lexicon.add_term(phrase, "C" + std::to_string(i), Role::Fact,
                         FactKind::Finding);
      c.oracle.add(std::move(phrase));
    } catch (const ConfigError&) {
      // duplicate phrase drawn with a clashing role spec; roles are all
      // Fact here so this only guards future edits
    }
  }
  const int n_words = std::uniform_int_distribution<int>(0, 30)(rng);
  for (int i = 0; i < n_words; ++i) c.words.push_back(word());
  return c;
}

}  // namespace clinex::test

#endif  // CLINEX_TEST_SUPPORT_HPP
