#ifndef CLINEX_SEMANTIC_OBJECT_HPP
#define CLINEX_SEMANTIC_OBJECT_HPP

#include <set>
#include <string>
#include <vector>

#include "clinex/types.hpp"

namespace clinex {

// One recognized phrase occurrence. Produced by NER, mutated by the analyzer
// pipeline. `modifiers` holds indices of other objects in the same sentence
// (location/modifier/fact-attribute children); the reference graph is acyclic.
struct SemanticObject {
  std::string text;
  std::set<std::string> codes;
  Role role = Role::Fact;
  FactKind fact_kind = FactKind::Finding;
  Span span;
  int first_token = 0;  // token indices covered, inclusive
  int last_token = 0;
  Presence presence = Presence::Yes;
  Experiencer experiencer = Experiencer::Self;
  bool ignored = false;
  std::vector<int> modifiers;
  bool synthetic = false;
  // True once a confirmation or negation cue determined `presence`; the
  // ignore analyzer leaves such facts alone.
  bool governed = false;

  bool operator==(const SemanticObject&) const = default;
};

// Validating constructor: rejects empty text and empty code sets.
SemanticObject make_semantic_object(std::string text,
                                    std::set<std::string> codes, Role role,
                                    Span span, int first_token, int last_token,
                                    FactKind kind = FactKind::Finding);

// JSON (de)serialization, used by the debug output and round-trip tests.
std::string semantic_object_to_json(const SemanticObject& object);
SemanticObject semantic_object_from_json(std::string_view json_text);

}  // namespace clinex

#endif  // CLINEX_SEMANTIC_OBJECT_HPP
