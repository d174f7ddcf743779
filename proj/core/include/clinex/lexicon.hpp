#ifndef CLINEX_LEXICON_HPP
#define CLINEX_LEXICON_HPP

#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "clinex/sentence.hpp"
#include "clinex/types.hpp"

namespace clinex {

// Phrase information stored at a terminal trie node. A phrase may carry
// several concept codes but exactly one semantic role.
struct PhrasePayload {
  std::set<std::string> codes;
  Role role = Role::Fact;
  FactKind fact_kind = FactKind::Finding;
};

// Generalized prefix tree keyed by whole tokens, with hash-map children.
// Lookup cost depends on phrase length, not on dictionary size.
class Lexicon {
 public:
  struct Match {
    int end = 0;  // one past the last matched token
    const PhrasePayload* payload = nullptr;
  };

  struct Probe {
    std::optional<Match> match;  // longest complete phrase, if any
    int walked = 0;              // tokens consumed before the walk stalled
  };

  Lexicon() = default;

  // Adds a phrase. Repeating a phrase with a new code unions the code set;
  // repeating it with a different role throws ConfigError.
  void add_term(const std::vector<std::string>& phrase_tokens,
                const std::string& code, Role role,
                FactKind kind = FactKind::Finding);

  // Longest phrase starting at tokens[start], by token count.
  std::optional<Match> longest_match(std::span<const Token> tokens,
                                     int start) const;

  // Like longest_match but also reports how far the walk got, so NER can
  // retain stalled partials for conjunction expansion.
  Probe probe(std::span<const Token> tokens, int start) const;

  // True when the exact token sequence is a complete phrase.
  const PhrasePayload* find_phrase(
      const std::vector<std::string>& phrase_tokens) const;

  // True when some phrase starts with the given token sequence.
  bool is_prefix(const std::vector<std::string>& phrase_tokens) const;

  std::size_t term_count() const { return term_count_; }

  // Phrase -> role map kept for diagnostics and dictionary export.
  const std::unordered_map<std::string, Role>& role_index() const {
    return role_index_;
  }

  // Dictionary of grammatical words and meaning cues shared by all
  // applications. Medical terms come from user term files.
  static Lexicon base_dictionary();

  // Appends entries from a TSV term file: phrase<TAB>code<TAB>role, with
  // role spelled as `Fact:Disorder`, `Location`, `NegationCue`, ...
  // '#' lines are comments. Errors name the offending line.
  void load_term_file(const std::string& path);

  // Writes the built-in base dictionary in the term-file format.
  static void export_base_dictionary(std::ostream& out);

 private:
  struct Node {
    std::unordered_map<std::string, std::unique_ptr<Node>> children;
    std::optional<PhrasePayload> payload;
  };

  const Node* walk(const std::vector<std::string>& phrase_tokens) const;

  Node root_;
  std::size_t term_count_ = 0;
  std::unordered_map<std::string, Role> role_index_;
};

}  // namespace clinex

#endif  // CLINEX_LEXICON_HPP
